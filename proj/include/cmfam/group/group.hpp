#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cmfam/exact/linear_form.hpp"
#include "cmfam/group/matrix.hpp"

namespace cmfam::group {

/// A named element given as a word in the generators (0-based indices).
struct NamedWord {
  std::string name;
  std::vector<int> word;
};

struct MatrixGroupSpec {
  std::string name;
  int dim = 0;
  int conductor = 1;
  std::vector<Matrix> generators;
  std::vector<int> degrees;
  /// Generator indices whose reflection hyperplanes define orbits 1, 2, ...
  std::vector<int> pinned_orbit_order;
  /// Elements whose classes are shown by name in reports, e.g. s, s^2, t.
  std::vector<NamedWord> display_classes;
};

struct ConjugacyClass {
  std::size_t representative = 0;
  std::size_t size = 0;
  int element_order = 1;
  /// Eigenvalues on V with multiplicity, sorted by exponent of zeta_order.
  std::vector<Cyclotomic> eigenvalues;
  Cyclotomic det;
  Cyclotomic trace;
  bool is_reflection_class = false;
  std::optional<Cyclotomic> epsilon;
  /// Hyperplane orbit (1-based) and exponent j with det = zeta_e^j, for
  /// reflection classes; 0 otherwise.
  int orbit = 0;
  int j = 0;
};

struct HyperplaneOrbit {
  int omega = 0;
  int e = 1;
  /// Projectively normalized linear forms cutting out each hyperplane.
  std::vector<std::vector<Cyclotomic>> hyperplanes;
  /// Reflection classes with hyperplanes in this orbit, ordered by j.
  std::vector<std::size_t> reflection_classes;
};

class EnumerationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct GroupData {
  MatrixGroupSpec spec;
  std::vector<Matrix> elements;           // elements[0] is the identity
  std::vector<std::size_t> class_of;      // element -> class index
  std::vector<std::size_t> inverse_of;    // element -> element
  std::vector<std::size_t> parent;        // breadth-first tree: element = parent * generator
  std::vector<int> via_generator;         // -1 for the identity
  std::vector<ConjugacyClass> classes;    // classes[0] is the identity class
  std::vector<std::size_t> reflections;   // element indices
  std::vector<HyperplaneOrbit> orbits;
  std::vector<exact::ParamIndex> omega_bar;
  int exponent = 1;                       // lcm of element orders
  int eigen_conductor = 1;                // lcm(conductor, exponent)

  std::size_t order() const { return elements.size(); }
  std::optional<std::size_t> find(const Matrix &m) const;
  std::size_t find_or_throw(const Matrix &m) const;
  /// Element index of a word in the generators.
  std::size_t element_of_word(const std::vector<int> &word) const;
  /// A shortest word in the generators representing an element.
  std::vector<int> word_of(std::size_t element) const;
  /// Reflection classes in parameter order: by orbit, then by j.
  std::vector<std::size_t> reflection_classes() const;
  /// Coroot key of a reflection's hyperplane.
  std::string hyperplane_key(std::size_t element) const;

  std::unordered_map<std::string, std::size_t> index;
};

/// Default element cap for enumeration.
inline constexpr std::size_t kDefaultElementCap = 2'000'000;

/// Enumerates the group generated by `spec.generators` and computes classes,
/// eigenvalues, reflections, hyperplane orbits and the parameter index set.
/// Throws EnumerationError on singular generators or when the cap is hit.
GroupData enumerate_group(const MatrixGroupSpec &spec, std::size_t cap = kDefaultElementCap);

/// Row vector v with s - I = u v for a reflection s; v cuts out the fixed
/// hyperplane. Returned projectively normalized.
std::vector<Cyclotomic> reflection_coroot(const Matrix &s);
/// Column vector u spanning the image of s - I.
std::vector<Cyclotomic> reflection_root(const Matrix &s);
/// Rebuilds s = I - (1 - eps) u v / (v u) from root, coroot and eigenvalue.
Matrix reflection_from_data(const std::vector<Cyclotomic> &root,
                            const std::vector<Cyclotomic> &coroot, const Cyclotomic &eps,
                            int conductor);

/// Eigenvalues of a finite-order matrix with multiplicity, found by dividing
/// its characteristic polynomial by x - zeta_order^i.
std::vector<Cyclotomic> eigenvalues_of(const Matrix &m, int order, int conductor);

} // namespace cmfam::group
