#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "cmfam/exact/polynomial.hpp"
#include "cmfam/group/group.hpp"
#include "cmfam/io/json_util.hpp"

namespace cmfam::chars {

using exact::Cyclotomic;
using exact::Polynomial;

struct ClassFingerprint {
  std::size_t size = 0;
  int order = 1;
  Cyclotomic trace;
  Cyclotomic det;
};

/// Forces table column `column` onto the class of the element `word`.
struct ColumnPin {
  std::size_t column = 0;
  std::vector<int> word;
};

/// Character bundle as read from disk, before matching against a group.
struct CharacterBundle {
  std::string group;
  int conductor = 1;
  std::vector<std::string> labels;
  std::vector<ClassFingerprint> fingerprints;
  std::vector<std::vector<Cyclotomic>> values; // [row][column]
  std::vector<int> degrees;                    // optional; empty when absent
  std::vector<ColumnPin> column_pins;
  std::string provenance;
};

CharacterBundle parse_character_bundle(const io::json &doc, const std::string &origin);
CharacterBundle load_character_bundle(const std::filesystem::path &path);
io::json character_bundle_to_json(const CharacterBundle &b);

/// Validated character table with columns re-indexed by group class.
struct CharacterTable {
  std::string group;
  std::vector<std::string> labels;
  std::vector<std::vector<Cyclotomic>> values; // [character][class of GroupData]
  std::vector<int> degrees;
  std::vector<std::size_t> column_match;       // bundle column -> class index

  std::size_t size() const { return labels.size(); }
  const Cyclotomic &value(std::size_t ch, std::size_t cls) const { return values[ch][cls]; }
  /// lambda(1) as an integer.
  long dim(std::size_t ch) const;
  std::optional<std::size_t> find_label(const std::string &label) const;
};

/// Matches bundle columns to classes via fingerprints and pins, then checks
/// row orthogonality, positive integer degrees, the sum of squared degrees
/// and the invariant degrees. Throws io::ValidationError on failure.
CharacterTable load_and_validate(const CharacterBundle &bundle, const group::GroupData &g);

/// Exact Hermitian inner product <a, b> = (1/|W|) sum_C |C| a(C) conj(b(C)).
Cyclotomic inner_product(const group::GroupData &g, const std::vector<Cyclotomic> &a,
                         const std::vector<Cyclotomic> &b);

/// Labels of the form phi{d,b} with optional trailing primes.
struct Label {
  long d = 0;
  long b = 0;
  std::string primes;
};
std::optional<Label> parse_label(const std::string &label);
/// Human form, e.g. "φ_{3,5}'".
std::string pretty_label(const std::string &label);

enum class Convention { plain, conjugate };
const char *to_string(Convention c);

struct FakeDegreeRecord {
  std::size_t character = 0;
  Polynomial f;
  std::size_t b = 0;
  long d = 0;
};

struct FakeDegrees {
  Convention convention = Convention::plain;
  std::vector<FakeDegreeRecord> records;
};

class FakeDegreeError : public io::ValidationError {
public:
  using io::ValidationError::ValidationError;
};

/// Product over invariant degrees of (1 + t + ... + t^(d_i - 1)).
Polynomial poincare_series(const std::vector<int> &degrees);

/// Graded multiplicity polynomial of one character under a fixed convention
/// for the character value. Throws FakeDegreeError when the result is not a
/// polynomial with nonnegative integer coefficients and value lambda(1) at 1.
FakeDegreeRecord fake_degree(const CharacterTable &t, const group::GroupData &g, std::size_t row,
                             Convention convention);

/// Fake degrees of every character. The unconjugated sum is used unless it
/// fails certification or disagrees with the (d,b) pairs in the labels while
/// the conjugated sum agrees.
FakeDegrees fake_degrees(const CharacterTable &t, const group::GroupData &g);

} // namespace cmfam::chars
