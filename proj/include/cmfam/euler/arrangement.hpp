#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cmfam/exact/rational.hpp"

namespace cmfam::euler {

/// Primitive integer normal vector: entries coprime, first nonzero entry
/// positive.
using Normal = std::vector<std::int64_t>;

/// Clears denominators, divides by the gcd and fixes the sign. Returns
/// nullopt for the zero vector.
std::optional<Normal> normalize(const std::vector<exact::Rational> &v);
std::optional<Normal> normalize(const Normal &v);

std::string to_string(const Normal &n);
/// Parses "1,-2,1". Throws std::invalid_argument.
Normal parse_normal(const std::string &text);

struct PlaneOrbit {
  Normal representative;      // lexicographically least member
  std::vector<Normal> members; // sorted
};

/// Finite set of hyperplanes with its orbit decomposition under the Young
/// subgroup that permutes coordinates inside each block.
struct HyperplaneArrangement {
  std::vector<Normal> planes; // sorted, unique
  std::vector<std::vector<std::size_t>> young_blocks;
  std::vector<PlaneOrbit> orbits; // sorted by representative

  std::size_t dimension() const;
  bool contains(const Normal &n) const;
  /// Orbit index of a member plane; throws std::out_of_range otherwise.
  std::size_t orbit_of(const Normal &n) const;
};

/// Normalizes and deduplicates `planes`, then splits them into Young orbits.
/// Throws std::invalid_argument when a plane does not have the dimension
/// covered by the blocks or the set is not closed under the group.
HyperplaneArrangement make_arrangement(std::vector<Normal> planes,
                                       std::vector<std::vector<std::size_t>> young_blocks);

/// Coordinate permutation as an image table: position i goes to perm[i].
using Permutation = std::vector<std::size_t>;

Normal permute(const Normal &n, const Permutation &perm);
Normal sharp(const Normal &n, const Permutation &sharp_perm);
HyperplaneArrangement sharp(const HyperplaneArrangement &a, const Permutation &sharp_perm);

struct InclusionResult {
  bool included = true;
  std::vector<Normal> missing;
};
/// Every plane of `a` lies in `b`. Throws std::invalid_argument on a
/// dimension mismatch.
InclusionResult plane_inclusion(const std::vector<Normal> &a, const HyperplaneArrangement &b);

} // namespace cmfam::euler
