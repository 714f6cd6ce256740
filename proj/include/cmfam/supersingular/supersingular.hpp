#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cmfam/chars/table.hpp"
#include "cmfam/euler/families.hpp"

namespace cmfam::supersingular {

using exact::Polynomial;

/// Parameter-free test on one character.
struct SupersingularResult {
  bool supersingular = false;
  /// dim * t^b * P / f when f divides it.
  std::optional<Polynomial> witness;
};

/// lambda is supersingular iff f_lambda does not divide dim(lambda) t^{b_lambda} P(t).
SupersingularResult is_supersingular(const chars::FakeDegreeRecord &fake, const Polynomial &poincare);

struct SupersingularReport {
  std::vector<bool> flags; // per character
  std::map<std::size_t, Polynomial> witnesses;
};
SupersingularReport supersingular_report(const std::vector<chars::FakeDegreeRecord> &fake,
                                         const Polynomial &poincare);

enum class FamilyKind { good_singleton, good_pair, good_triple, bad };
const char *to_string(FamilyKind k);

struct BlockClassification {
  std::vector<std::size_t> members;
  FamilyKind kind = FamilyKind::bad;
  std::string rule;
};

struct FamilyClassification {
  std::vector<BlockClassification> blocks; // in partition order
  bool all_good() const;
  /// Bad-family census such as "2^2" or "2^1,3^1" (ascending d); "-" when empty.
  std::string bad_census() const;
};

FamilyClassification classify_families(const euler::FamilyPartition &partition,
                                       const std::vector<bool> &flags);

/// Either the certified generic Calogero-Moser partition or a refusal that
/// lists the bad blocks.
struct CmResult {
  bool certified = false;
  std::optional<euler::FamilyPartition> partition;
  std::vector<BlockClassification> bad_blocks;
};
CmResult generic_cm_families(const euler::FamilyPartition &partition,
                             const FamilyClassification &classification);

} // namespace cmfam::supersingular
