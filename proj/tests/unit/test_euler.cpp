#include <doctest.h>

#include <algorithm>
#include <random>

#include "cmfam/euler/euler.hpp"
#include "fixtures.hpp"

using namespace cmfam;
using namespace cmfam::euler;
using exact::Rational;

namespace {

std::size_t class_of_word(const group::GroupData &g, std::vector<int> word) {
  return g.class_of[g.element_of_word(word)];
}

FamilyPartition random_partition(std::mt19937_64 &rng, std::size_t n) {
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::vector<std::size_t> ids(n);
  for (auto &x : ids)
    x = pick(rng);
  return FamilyPartition::from_block_ids(ids);
}

} // namespace

TEST_CASE("c_k forms of G4") {
  const auto &g = fixtures::load("G4").group;
  CHECK(c_form(g, class_of_word(g, {0})).to_string(3) == "(-2-z)*k[1,0]+(1-z)*k[1,1]+(1+2*z)*k[1,2]");
  CHECK(c_form(g, class_of_word(g, {0, 0})).to_string(3) == "(-1+z)*k[1,0]+(2+z)*k[1,1]+(-1-2*z)*k[1,2]");
  CHECK_THROWS_AS(c_form(g, 0), std::invalid_argument);
}

TEST_CASE("omega forms of G4") {
  const auto &[g, t] = fixtures::load("G4");
  const std::map<std::string, std::string> expected = {
      {"phi{1,0}", "12*k[1,0]-12*k[1,1]"}, {"phi{1,4}", "0"},
      {"phi{1,8}", "12*k[1,0]-12*k[1,2]"}, {"phi{2,5}", "6*k[1,0]-6*k[1,2]"},
      {"phi{2,3}", "12*k[1,0]-6*k[1,1]-6*k[1,2]"}, {"phi{2,1}", "6*k[1,0]-6*k[1,1]"},
      {"phi{3,2}", "8*k[1,0]-4*k[1,1]-4*k[1,2]"}};
  for (const auto &[label, form] : expected) {
    CAPTURE(label);
    const auto row = t.find_label(label);
    REQUIRE(row.has_value());
    CHECK(omega_form(t, g, *row).to_string() == form);
  }
}

TEST_CASE("p forms are differences of omega forms") {
  for (const char *name : {"G4", "G5", "G8", "G25"}) {
    const std::string group_name = name;
    CAPTURE(group_name);
    const auto &[g, t] = fixtures::load(name);
    std::vector<LinearForm> omega;
    for (std::size_t i = 0; i < t.size(); ++i)
      omega.push_back(omega_form(t, g, i));
    for (std::size_t a = 0; a < t.size(); ++a)
      for (std::size_t b = a + 1; b < t.size(); ++b) {
        const LinearForm p = p_form(t, g, a, b);
        CHECK(p == omega[b] - omega[a]);
        CHECK(p_form(t, g, b, a) == -p);
      }
    CHECK_THROWS_AS(p_form(t, g, 0, 0), std::invalid_argument);
  }
}

TEST_CASE("omega is invariant under a common shift of each orbit") {
  const auto &[g, t] = fixtures::load("G6");
  for (std::size_t i = 0; i < t.size(); ++i) {
    const LinearForm w = omega_form(t, g, i);
    for (const auto &o : g.orbits) {
      exact::Cyclotomic sum(0);
      for (const auto &[idx, c] : w.terms())
        if (idx.omega == o.omega)
          sum += c;
      CHECK(sum.is_zero());
    }
  }
}

TEST_CASE("omega is linear in the parameters") {
  const auto &[g, t] = fixtures::load("G8");
  const auto e = compute_euler(t, g);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> d(-9, 9);
  std::vector<Rational> x(e.order.size()), y(e.order.size()), xy(e.order.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    x[i] = Rational(d(rng));
    y[i] = Rational(d(rng));
    xy[i] = Rational(3) * x[i] - y[i];
  }
  for (const auto &w : e.omega)
    CHECK(w.eval(e.order, xy) == exact::Cyclotomic(3) * w.eval(e.order, x) - w.eval(e.order, y));
}

TEST_CASE("the two generic partition criteria agree") {
  for (const char *name : fixtures::kGroups) {
    const std::string group_name = name;
    CAPTURE(group_name);
    const auto &[g, t] = fixtures::load(name);
    std::vector<LinearForm> omega;
    for (std::size_t i = 0; i < t.size(); ++i)
      omega.push_back(omega_form(t, g, i));
    CHECK(partition_by_values(t, g) == partition_by_omega(omega));
  }
}

TEST_CASE("sharp is an involution") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> d(-5, 5);
  for (const char *name : {"G5", "G8", "G10", "G26"}) {
    const std::string group_name = name;
    CAPTURE(group_name);
    const auto &g = fixtures::load(name).group;
    const Permutation perm = sharp_permutation(g);
    for (int trial = 0; trial < 50; ++trial) {
      Normal raw(perm.size());
      for (auto &x : raw)
        x = d(rng);
      const auto n = normalize(raw);
      if (!n)
        continue;
      CHECK(sharp(sharp(*n, perm), perm) == *n);
    }
  }
}

TEST_CASE("sharp negates j inside each orbit") {
  const auto &g = fixtures::load("G8").group;
  // k[1,0..3]: j -> -j mod 4 swaps positions 1 and 3.
  CHECK(sharp_permutation(g) == Permutation{0, 3, 2, 1});
}

TEST_CASE("normal vectors are primitive with positive lead") {
  const auto n = normalize(std::vector<Rational>{Rational(0), Rational(-2, 3), Rational(4, 3)});
  REQUIRE(n.has_value());
  CHECK(*n == Normal{0, 1, -2});
  CHECK_FALSE(normalize(Normal{0, 0}).has_value());
  CHECK(parse_normal(to_string(Normal{3, -1, 0})) == Normal{3, -1, 0});
  CHECK_THROWS_AS(parse_normal("1,x"), std::invalid_argument);
}

TEST_CASE("arrangements split into Young orbits") {
  const auto a = make_arrangement({{0, 1, -1}, {1, 0, -1}, {1, -1, 0}, {1, 1, -2}, {1, -2, 1}, {2, -1, -1}},
                                  {{0, 1, 2}});
  REQUIRE(a.orbits.size() == 2);
  CHECK(a.orbits[0].representative == Normal{0, 1, -1});
  CHECK(a.orbits[1].representative == Normal{1, -2, 1});
  CHECK(a.orbit_of(Normal{1, 1, -2}) == 1);
  CHECK_THROWS_AS(make_arrangement({{0, 1, -1}}, {{0, 1, 2}}), std::invalid_argument);
  CHECK(plane_inclusion({{1, -1, 0}}, a).included);
  const auto miss = plane_inclusion({{1, 1, 1}}, a);
  CHECK_FALSE(miss.included);
  CHECK(miss.missing.size() == 1);
  CHECK_THROWS_AS(plane_inclusion({{1, 1}}, a), std::invalid_argument);
}

TEST_CASE("generic points specialize to the generic partition") {
  for (const char *name : {"G4", "G25", "G8"}) {
    const std::string group_name = name;
    CAPTURE(group_name);
    const auto &[g, t] = fixtures::load(name);
    const auto e = compute_euler(t, g);
    const auto pts = generic_points(e, 20, 5);
    CHECK(pts.size() == 20);
    for (const auto &p : pts)
      CHECK(specialize_partition(e, t.size(), p) == e.generic_partition);
  }
}

TEST_CASE("points on a plane merge families") {
  const auto &[g, t] = fixtures::load("G4");
  const auto e = compute_euler(t, g);
  // k[1,1] = k[1,2] lies on (0,1,-1) and fuses phi{1,0} with phi{1,8}.
  const auto part = specialize_partition(e, t.size(), {Rational(5), Rational(2), Rational(2)});
  CHECK(part.nonsingleton_count() > 0);
  const auto blocks = part.block_of();
  CHECK(blocks[*t.find_label("phi{1,0}")] == blocks[*t.find_label("phi{1,8}")]);
}

TEST_CASE("parallel pair pass matches the serial one") {
  const auto &[g, t] = fixtures::load("G10");
  const auto a = compute_euler(t, g, 1);
  const auto b = compute_euler(t, g, 4);
  CHECK(a.p == b.p);
  CHECK(a.pairs == b.pairs);
  CHECK(a.variety.planes == b.variety.planes);
}

TEST_CASE("refinement is a partial order on random partitions") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 8;
    const auto a = random_partition(rng, n);
    const auto b = random_partition(rng, n);
    const auto c = random_partition(rng, n);
    CHECK(refines(a, a));
    if (refines(a, b) && refines(b, a))
      CHECK(a == b);
    if (refines(a, b) && refines(b, c))
      CHECK(refines(a, c));
    CHECK(refines(FamilyPartition::singletons(n), a));
    CHECK(refines(a, FamilyPartition::from_block_ids(std::vector<std::size_t>(n, 0))));
  }
  CHECK_THROWS_AS(refines(FamilyPartition::singletons(2), FamilyPartition::singletons(3)),
                  std::invalid_argument);
}

TEST_CASE("union-find joins reach a fixed point") {
  UnionFind uf(6);
  uf.unite(4, 1);
  uf.unite(1, 5);
  uf.unite(2, 3);
  const auto p = uf.partition();
  CHECK(p.blocks() == std::vector<std::vector<std::size_t>>{{0}, {1, 4, 5}, {2, 3}});
  CHECK(p.nonsingleton_count() == 2);
  CHECK_THROWS_AS(FamilyPartition({{0, 1}, {1}}, 2), std::invalid_argument);
}
