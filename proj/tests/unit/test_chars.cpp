#include <doctest.h>

#include "fixtures.hpp"

using namespace cmfam;
using exact::Polynomial;
using exact::Rational;

TEST_CASE("poincare series of the invariant degrees") {
  const Polynomial p = chars::poincare_series({2, 3});
  CHECK(exact::to_string(p) == "1+2*t+2*t^2+t^3");
  CHECK(chars::poincare_series({4, 6}).eval(Rational(1)) == Rational(24));
}

TEST_CASE("fake degrees sum to the poincare series") {
  for (const char *name : fixtures::kGroups) {
    const std::string group_name = name;
    CAPTURE(group_name);
    const auto &[g, t] = fixtures::load(name);
    const auto fd = chars::fake_degrees(t, g);
    const Polynomial P = chars::poincare_series(g.spec.degrees);
    Polynomial sum;
    for (const auto &r : fd.records)
      sum = sum + Polynomial::monomial(0, Rational(t.dim(r.character))) * r.f;
    CHECK(sum == P);
    CHECK(P.eval(Rational(1)) == Rational(static_cast<long>(g.order())));
  }
}

TEST_CASE("fake degrees match the labels") {
  for (const char *name : fixtures::kGroups) {
    const std::string group_name = name;
    CAPTURE(group_name);
    const auto &[g, t] = fixtures::load(name);
    const auto fd = chars::fake_degrees(t, g);
    for (const auto &r : fd.records) {
      const auto label = chars::parse_label(t.labels[r.character]);
      REQUIRE(label.has_value());
      CHECK(label->d == r.d);
      CHECK(label->b == static_cast<long>(r.b));
      CHECK(r.f.eval(Rational(1)) == Rational(r.d));
    }
  }
}

TEST_CASE("label parsing and display") {
  const auto l = chars::parse_label("phi{3,6}''");
  REQUIRE(l.has_value());
  CHECK(l->d == 3);
  CHECK(l->b == 6);
  CHECK(l->primes == "''");
  CHECK_FALSE(chars::parse_label("chi3").has_value());
  CHECK(chars::pretty_label("phi{9,7}") == "φ_{9,7}");
}

TEST_CASE("perturbed character table fails orthogonality") {
  const auto &g = fixtures::load("G4").group;
  auto bundle = chars::load_character_bundle(fixtures::bundle("G4", "chars.json"));
  REQUIRE(bundle.values.size() > 2);
  bundle.values[2][1] = bundle.values[2][1] + exact::Cyclotomic(1);
  CHECK_THROWS_AS(chars::load_and_validate(bundle, g), io::ValidationError);
}

TEST_CASE("swapped columns are detected through fingerprints") {
  const auto &g = fixtures::load("G5").group;
  auto bundle = chars::load_character_bundle(fixtures::bundle("G5", "chars.json"));
  bundle.column_pins.clear();
  std::swap(bundle.fingerprints[0], bundle.fingerprints[1]);
  CHECK_THROWS_AS(chars::load_and_validate(bundle, g), io::ValidationError);
}

TEST_CASE("wrong invariant degrees are rejected") {
  auto g = fixtures::load("G4").group;
  g.spec.degrees = {4, 8};
  auto bundle = chars::load_character_bundle(fixtures::bundle("G4", "chars.json"));
  bundle.degrees.clear();
  CHECK_THROWS_AS(chars::load_and_validate(bundle, g), io::ValidationError);
}

TEST_CASE("inner products of irreducibles are orthonormal") {
  const auto &[g, t] = fixtures::load("G8");
  for (std::size_t a = 0; a < t.size(); a += 3)
    for (std::size_t b = 0; b < t.size(); b += 2)
      CHECK(chars::inner_product(g, t.values[a], t.values[b]) == exact::Cyclotomic(a == b ? 1 : 0));
}
