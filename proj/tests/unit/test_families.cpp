#include <doctest.h>

#include "cmfam/euler/euler.hpp"
#include "cmfam/rouquier/rouquier.hpp"
#include "cmfam/supersingular/supersingular.hpp"
#include "fixtures.hpp"

using namespace cmfam;
using euler::FamilyPartition;
using supersingular::FamilyKind;

namespace {

std::vector<bool> ss_flags(const std::string &name) {
  const auto &[g, t] = fixtures::load(name);
  const auto fd = chars::fake_degrees(t, g);
  return supersingular::supersingular_report(fd.records, chars::poincare_series(g.spec.degrees)).flags;
}

rouquier::RouquierBundle bundle_of(const std::string &name) {
  return rouquier::load_rouquier_bundle(fixtures::bundle(name, "rouquier.json"));
}

} // namespace

TEST_CASE("supersingular characters of G25") {
  const auto &t = fixtures::load("G25").table;
  const auto flags = ss_flags("G25");
  for (std::size_t i = 0; i < t.size(); ++i) {
    const bool expected = t.labels[i] == "phi{3,6}" || t.labels[i] == "phi{9,7}" || t.labels[i] == "phi{9,5}";
    CAPTURE(t.labels[i]);
    CHECK(flags[i] == expected);
  }
}

TEST_CASE("the trivial character is never supersingular") {
  for (const char *name : fixtures::kGroups) {
    const std::string group_name = name;
    CAPTURE(group_name);
    const auto &t = fixtures::load(name).table;
    CHECK_FALSE(ss_flags(name)[*t.find_label("phi{1,0}")]);
  }
}

TEST_CASE("supersingularity witness") {
  // f = 1 + t divides 2 * P with P = (1 + t)(1 + t + t^2): not supersingular.
  const exact::Polynomial P = chars::poincare_series({2, 3});
  chars::FakeDegreeRecord ok{0, exact::Polynomial({exact::Rational(1), exact::Rational(1)}), 0, 2};
  const auto r = supersingular::is_supersingular(ok, P);
  CHECK_FALSE(r.supersingular);
  REQUIRE(r.witness.has_value());
  CHECK(*r.witness * ok.f == exact::Polynomial::monomial(0, exact::Rational(2)) * P);
  // f = t + t^3 does not divide t * P.
  chars::FakeDegreeRecord bad{0, exact::Polynomial({exact::Rational(0), exact::Rational(1), exact::Rational(0),
                                                    exact::Rational(1)}),
                              1, 2};
  CHECK(supersingular::is_supersingular(bad, P).supersingular);
}

TEST_CASE("classification rules") {
  const FamilyPartition p({{0}, {1, 2}, {3, 4}, {5, 6, 7}, {8, 9, 10}, {11, 12, 13, 14}}, 15);
  std::vector<bool> ss(15, false);
  ss[1] = true;          // pair with a supersingular member
  ss[5] = ss[6] = ss[7] = true; // triple, all supersingular
  ss[8] = ss[9] = true;  // triple, not all
  const auto c = supersingular::classify_families(p, ss);
  REQUIRE(c.blocks.size() == 6);
  CHECK(c.blocks[0].kind == FamilyKind::good_singleton);
  CHECK(c.blocks[1].kind == FamilyKind::good_pair);
  CHECK(c.blocks[2].kind == FamilyKind::bad);
  CHECK(c.blocks[3].kind == FamilyKind::good_triple);
  CHECK(c.blocks[4].kind == FamilyKind::bad);
  CHECK(c.blocks[5].kind == FamilyKind::bad);
  CHECK_FALSE(c.all_good());
  CHECK(c.bad_census() == "2^1,3^1,4^1");
  const auto cm = supersingular::generic_cm_families(p, c);
  CHECK_FALSE(cm.certified);
  CHECK(cm.bad_blocks.size() == 3);
  CHECK(std::string(supersingular::to_string(FamilyKind::good_pair)) == "good-pair");
}

TEST_CASE("S6 is refused with two bad pairs") {
  const auto &[g, t] = fixtures::load("S6");
  const auto e = euler::compute_euler(t, g);
  const auto c = supersingular::classify_families(e.generic_partition, ss_flags("S6"));
  CHECK(c.bad_census() == "2^2");
  CHECK_FALSE(supersingular::generic_cm_families(e.generic_partition, c).certified);
}

TEST_CASE("G25 is the counter-example to generic equality") {
  const auto &[g, t] = fixtures::load("G25");
  const auto e = euler::compute_euler(t, g);
  const auto c = supersingular::classify_families(e.generic_partition, ss_flags("G25"));
  const auto cm = supersingular::generic_cm_families(e.generic_partition, c);
  REQUIRE(cm.certified);
  const auto v = rouquier::martino_check(t, *cm.partition, e.variety, euler::sharp_permutation(g), bundle_of("G25"));
  CHECK_FALSE(v.generic_equal);
  CHECK(v.cm_unions_of_rouquier);
  CHECK(v.rou_in_eu);
  CHECK(v.sharp_stable);
  CHECK(v.essential_count == 12);
  CHECK_FALSE(v.evidence.empty());
}

TEST_CASE("an arrangement contains itself") {
  const auto &[g, t] = fixtures::load("G8");
  const auto e = euler::compute_euler(t, g);
  CHECK(euler::plane_inclusion(e.variety.planes, e.variety).included);
}

TEST_CASE("rouquier bundles are checked against the table") {
  const auto &t = fixtures::load("G4").table;
  auto b = bundle_of("G4");
  CHECK(rouquier::resolve_families(b, t).blocks().size() == 7);
  b.families.back() = {"phi{99,1}"};
  CHECK_THROWS_AS(rouquier::resolve_families(b, t), io::ValidationError);
  b = bundle_of("G4");
  b.families.pop_back();
  CHECK_THROWS_AS(rouquier::resolve_families(b, t), io::ValidationError);
  b = bundle_of("G4");
  b.families.push_back(b.families.front());
  CHECK_THROWS_AS(rouquier::resolve_families(b, t), io::ValidationError);
}

TEST_CASE("hecke-convention planes are mapped through sharp") {
  auto b = bundle_of("G4");
  const euler::Permutation perm{0, 2, 1};
  b.essential_planes = {{1, 2, -3}};
  b.convention = rouquier::CoordinateConvention::cherednik;
  CHECK(rouquier::essential_planes(b, perm) == std::vector<euler::Normal>{{1, 2, -3}});
  b.convention = rouquier::CoordinateConvention::hecke;
  CHECK(rouquier::essential_planes(b, perm) == std::vector<euler::Normal>{{1, -3, 2}});
}

TEST_CASE("malformed rouquier bundle") {
  const auto doc = io::parse_json_text(R"({"group": "G4", "families": [["phi{1,0}"]], "essential_planes": [[1, "x", 0]],
    "coordinate_convention": "cherednik", "provenance": "test"})",
                                       "inline");
  CHECK_THROWS_AS(rouquier::parse_rouquier_bundle(doc, "inline"), io::ParseError);
  const auto conv = io::parse_json_text(R"({"group": "G4", "families": [], "essential_planes": [],
    "coordinate_convention": "sideways", "provenance": "test"})",
                                        "inline");
  CHECK_THROWS_AS(rouquier::parse_rouquier_bundle(conv, "inline"), io::ParseError);
}
