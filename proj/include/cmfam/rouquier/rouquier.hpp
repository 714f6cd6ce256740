#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "cmfam/chars/table.hpp"
#include "cmfam/euler/euler.hpp"
#include "cmfam/io/json_util.hpp"

namespace cmfam::rouquier {

enum class CoordinateConvention {
  cherednik, // planes are given in the k coordinates directly
  hecke      // planes are given in k-sharp coordinates and are mapped back by sharp
};

/// Published Rouquier-family data for one group.
struct RouquierBundle {
  std::string group;
  std::vector<std::vector<std::string>> families; // label lists
  std::vector<euler::Normal> essential_planes;
  CoordinateConvention convention = CoordinateConvention::cherednik;
  std::string provenance;
};

RouquierBundle parse_rouquier_bundle(const io::json &doc, const std::string &origin);
RouquierBundle load_rouquier_bundle(const std::filesystem::path &path);

/// Families as a partition over the character table rows. Throws
/// io::ValidationError for unknown, missing or repeated labels.
euler::FamilyPartition resolve_families(const RouquierBundle &b, const chars::CharacterTable &t);

/// Essential planes normalized and expressed in k coordinates.
std::vector<euler::Normal> essential_planes(const RouquierBundle &b, const euler::Permutation &sharp_perm);

struct MartinoVerdict {
  bool generic_equal = false;
  bool cm_unions_of_rouquier = false;
  bool rou_in_eu = false;
  bool sharp_stable = false;
  std::size_t essential_count = 0;
  /// Human-readable block-level evidence, e.g. a CM block that merges
  /// several Rouquier blocks, or essential planes outside the variety.
  std::vector<std::string> evidence;
};

/// Compares certified generic CM families and the Euler variety with the
/// Rouquier data.
MartinoVerdict martino_check(const chars::CharacterTable &t, const euler::FamilyPartition &cm,
                             const euler::HyperplaneArrangement &variety,
                             const euler::Permutation &sharp_perm, const RouquierBundle &b);

} // namespace cmfam::rouquier
