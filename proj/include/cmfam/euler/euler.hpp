#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "cmfam/chars/table.hpp"
#include "cmfam/euler/arrangement.hpp"
#include "cmfam/euler/families.hpp"
#include "cmfam/exact/linear_form.hpp"
#include "cmfam/group/group.hpp"

namespace cmfam::euler {

using exact::LinearForm;
using exact::ParamIndex;

/// Raised when two independent derivations of the same object disagree.
class ConsistencyError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// c_k(s) = sum_{j=0}^{e-1} det(s)^j (k_{Omega,j+1} - k_{Omega,j}), indices
/// modulo e. Throws std::invalid_argument for a non-reflection class.
LinearForm c_form(const group::GroupData &g, std::size_t cls);

/// omega_lambda = (1/lambda(1)) sum_s c_k(s)/(1 - eps_s) (eps_s lambda(1) - lambda(s)),
/// summed over reflection classes weighted by class size. Throws
/// io::ValidationError if a coefficient is irrational.
LinearForm omega_form(const chars::CharacterTable &t, const group::GroupData &g, std::size_t ch);

/// p_{lambda,mu} = sum_s c_k(s)/(1 - eps_s) (lambda(s)/lambda(1) - mu(s)/mu(1)).
/// Throws std::invalid_argument when lambda == mu.
LinearForm p_form(const chars::CharacterTable &t, const group::GroupData &g, std::size_t lambda,
                  std::size_t mu);

/// Generic Euler families from proportional reflection values,
/// mu(1) lambda(s) = lambda(1) mu(s) on all reflection classes.
FamilyPartition partition_by_values(const chars::CharacterTable &t, const group::GroupData &g);
/// Families of equal omega forms.
FamilyPartition partition_by_omega(const std::vector<LinearForm> &omega);

/// Coordinates per hyperplane orbit, in omega_bar positions.
std::vector<std::vector<std::size_t>> young_blocks(const group::GroupData &g);
/// Position of (Omega, -j mod e) for each position (Omega, j).
Permutation sharp_permutation(const group::GroupData &g);

struct EulerData {
  std::vector<ParamIndex> order; // omega_bar
  std::map<std::size_t, LinearForm> c_forms; // reflection class -> c_k(s)
  std::vector<LinearForm> omega;             // per character
  FamilyPartition generic_partition;
  /// Nonzero p forms for pairs i < j, row-major over pairs.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<LinearForm> p;
  HyperplaneArrangement variety;
};

/// Builds every Euler-side object. `jobs` bounds worker threads used for the
/// pairwise forms; results do not depend on it. Throws ConsistencyError when
/// the two generic-partition criteria disagree.
EulerData compute_euler(const chars::CharacterTable &t, const group::GroupData &g,
                        unsigned jobs = 1);

/// Euler families at a rational point (coordinates in `order`): the
/// transitive closure of p_{lambda,mu}(k) = 0.
FamilyPartition specialize_partition(const EulerData &e, std::size_t characters,
                                     const std::vector<exact::Rational> &point);

/// Points with distinct prime coordinates drawn from a seeded stream; points
/// lying on a plane of the variety are discarded and redrawn.
std::vector<std::vector<exact::Rational>> generic_points(const EulerData &e, std::size_t count,
                                                         std::uint64_t seed);

} // namespace cmfam::euler
