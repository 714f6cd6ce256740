#include "cmfam/rouquier/rouquier.hpp"

#include <set>

#include "cmfam/io/errors.hpp"

namespace cmfam::rouquier {

using euler::Normal;
using io::json;

RouquierBundle parse_rouquier_bundle(const json &doc, const std::string &origin) {
  io::Reader r(doc, origin);
  using jp = json::json_pointer;
  RouquierBundle b;
  b.group = r.string_at(jp("/group"));
  const json &fams = r.array_at(jp("/families"));
  for (std::size_t i = 0; i < fams.size(); ++i) {
    auto labels = r.string_array_at(jp("/families") / i);
    if (labels.empty())
      r.fail(jp("/families") / i, "empty family");
    b.families.push_back(std::move(labels));
  }
  const json &planes = r.array_at(jp("/essential_planes"));
  std::size_t dim = 0;
  for (std::size_t i = 0; i < planes.size(); ++i) {
    const jp p = jp("/essential_planes") / i;
    std::vector<long> v = r.int_array_at(p);
    if (i == 0)
      dim = v.size();
    if (v.empty() || v.size() != dim)
      r.fail(p, "plane has " + std::to_string(v.size()) + " coordinates, expected " +
                    std::to_string(dim));
    Normal n(v.begin(), v.end());
    if (!euler::normalize(n))
      r.fail(p, "zero vector is not a hyperplane");
    b.essential_planes.push_back(std::move(n));
  }
  const std::string conv = r.string_at(jp("/coordinate_convention"));
  if (conv == "cherednik")
    b.convention = CoordinateConvention::cherednik;
  else if (conv == "hecke")
    b.convention = CoordinateConvention::hecke;
  else
    r.fail(jp("/coordinate_convention"), "expected \"cherednik\" or \"hecke\", got \"" + conv + "\"");
  if (r.has(jp("/provenance")))
    b.provenance = r.string_at(jp("/provenance"));
  return b;
}

RouquierBundle load_rouquier_bundle(const std::filesystem::path &path) {
  return parse_rouquier_bundle(io::read_json_file(path), path.string());
}

euler::FamilyPartition resolve_families(const RouquierBundle &b, const chars::CharacterTable &t) {
  const std::string where = "Rouquier families for " + b.group + ": ";
  if (b.group != t.group)
    throw io::ValidationError(where + "character table belongs to " + t.group);
  std::vector<std::vector<std::size_t>> blocks;
  std::set<std::size_t> seen;
  for (const auto &fam : b.families) {
    std::vector<std::size_t> block;
    for (const auto &label : fam) {
      auto idx = t.find_label(label);
      if (!idx)
        throw io::ValidationError(where + "unknown character " + label);
      if (!seen.insert(*idx).second)
        throw io::ValidationError(where + "character " + label + " occurs twice");
      block.push_back(*idx);
    }
    blocks.push_back(std::move(block));
  }
  if (seen.size() != t.size())
    throw io::ValidationError(where + "families cover " + std::to_string(seen.size()) + " of " +
                              std::to_string(t.size()) + " characters");
  return euler::FamilyPartition(std::move(blocks), t.size());
}

std::vector<Normal> essential_planes(const RouquierBundle &b, const euler::Permutation &sharp_perm) {
  std::set<Normal> out;
  for (const auto &p : b.essential_planes) {
    if (p.size() != sharp_perm.size())
      throw io::ValidationError("essential plane " + euler::to_string(p) + " of " + b.group +
                                " has " + std::to_string(p.size()) + " coordinates, expected " +
                                std::to_string(sharp_perm.size()));
    Normal n = *euler::normalize(p);
    if (b.convention == CoordinateConvention::hecke)
      n = euler::sharp(n, sharp_perm);
    out.insert(std::move(n));
  }
  return {out.begin(), out.end()};
}

namespace {

std::string block_text(const chars::CharacterTable &t, const std::vector<std::size_t> &block) {
  std::string s = "{";
  for (std::size_t i = 0; i < block.size(); ++i)
    s += (i ? "," : "") + t.labels[block[i]];
  return s + "}";
}

} // namespace

MartinoVerdict martino_check(const chars::CharacterTable &t, const euler::FamilyPartition &cm,
                             const euler::HyperplaneArrangement &variety,
                             const euler::Permutation &sharp_perm, const RouquierBundle &b) {
  MartinoVerdict v;
  const euler::FamilyPartition rou = resolve_families(b, t);
  v.generic_equal = rou == cm;
  v.cm_unions_of_rouquier = euler::refines(rou, cm);
  if (!v.generic_equal) {
    const auto rou_owner = rou.block_of();
    for (const auto &blk : cm.blocks()) {
      std::set<std::size_t> parts;
      for (std::size_t x : blk)
        parts.insert(rou_owner[x]);
      if (parts.size() > 1) {
        std::string s = "CM family " + block_text(t, blk) + " is a union of Rouquier families";
        for (std::size_t p : parts)
          s += " " + block_text(t, rou.blocks()[p]);
        v.evidence.push_back(std::move(s));
      }
    }
    if (!v.cm_unions_of_rouquier)
      v.evidence.push_back("some Rouquier family meets two CM families");
  }
  const auto ess = essential_planes(b, sharp_perm);
  v.essential_count = ess.size();
  const auto inc = euler::plane_inclusion(ess, variety);
  v.rou_in_eu = inc.included;
  for (const auto &m : inc.missing)
    v.evidence.push_back("essential plane " + euler::to_string(m) + " is not in the Euler variety");
  v.sharp_stable = euler::sharp(variety, sharp_perm).planes == variety.planes;
  return v;
}

} // namespace cmfam::rouquier
