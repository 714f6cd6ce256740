#include "cmfam/supersingular/supersingular.hpp"

#include <algorithm>
#include <stdexcept>

namespace cmfam::supersingular {

SupersingularResult is_supersingular(const chars::FakeDegreeRecord &fake,
                                     const Polynomial &poincare) {
  const Polynomial target =
      Polynomial::monomial(fake.b, exact::Rational(fake.d)) * poincare;
  SupersingularResult r;
  if (auto q = exact::exact_quotient(target, fake.f)) {
    r.witness = std::move(*q);
  } else {
    r.supersingular = true;
  }
  return r;
}

SupersingularReport supersingular_report(const std::vector<chars::FakeDegreeRecord> &fake,
                                         const Polynomial &poincare) {
  SupersingularReport rep;
  rep.flags.assign(fake.size(), false);
  for (const auto &rec : fake) {
    auto r = is_supersingular(rec, poincare);
    rep.flags.at(rec.character) = r.supersingular;
    if (r.witness)
      rep.witnesses.emplace(rec.character, std::move(*r.witness));
  }
  return rep;
}

const char *to_string(FamilyKind k) {
  switch (k) {
  case FamilyKind::good_singleton:
    return "good-singleton";
  case FamilyKind::good_pair:
    return "good-pair";
  case FamilyKind::good_triple:
    return "good-triple";
  case FamilyKind::bad:
    return "bad";
  }
  return "bad";
}

bool FamilyClassification::all_good() const {
  return std::none_of(blocks.begin(), blocks.end(),
                      [](const auto &b) { return b.kind == FamilyKind::bad; });
}

std::string FamilyClassification::bad_census() const {
  std::map<std::size_t, std::size_t> by_size;
  for (const auto &b : blocks)
    if (b.kind == FamilyKind::bad)
      ++by_size[b.members.size()];
  std::string out;
  for (const auto &[d, m] : by_size) {
    if (!out.empty())
      out += ',';
    out += std::to_string(d) + "^" + std::to_string(m);
  }
  return out.empty() ? "-" : out;
}

FamilyClassification classify_families(const euler::FamilyPartition &partition,
                                       const std::vector<bool> &flags) {
  if (flags.size() != partition.universe())
    throw std::invalid_argument("supersingularity flags do not match the partition");
  FamilyClassification out;
  for (const auto &b : partition.blocks()) {
    const auto ss = static_cast<std::size_t>(
        std::count_if(b.begin(), b.end(), [&](std::size_t x) { return flags[x]; }));
    BlockClassification c;
    c.members = b;
    if (b.size() == 1) {
      c.kind = FamilyKind::good_singleton;
      c.rule = "singleton";
    } else if (b.size() == 2 && ss >= 1) {
      c.kind = FamilyKind::good_pair;
      c.rule = "pair-with-supersingular";
    } else if (b.size() == 3 && ss == 3) {
      c.kind = FamilyKind::good_triple;
      c.rule = "triple-all-supersingular";
    } else {
      c.kind = FamilyKind::bad;
      c.rule = b.size() == 2   ? "pair-without-supersingular"
               : b.size() == 3 ? "triple-not-all-supersingular"
                               : "size-at-least-4";
    }
    out.blocks.push_back(std::move(c));
  }
  return out;
}

CmResult generic_cm_families(const euler::FamilyPartition &partition,
                             const FamilyClassification &classification) {
  CmResult r;
  for (const auto &b : classification.blocks)
    if (b.kind == FamilyKind::bad)
      r.bad_blocks.push_back(b);
  r.certified = r.bad_blocks.empty();
  if (r.certified)
    r.partition = partition;
  return r;
}

} // namespace cmfam::supersingular
