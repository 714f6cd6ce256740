#include <doctest.h>

#include <set>

#include "fixtures.hpp"

using namespace cmfam;
using group::Matrix;
using exact::Cyclotomic;

namespace {

group::MatrixGroupSpec cyclic_spec(int order) {
  group::MatrixGroupSpec s;
  s.name = "C" + std::to_string(order);
  s.dim = 1;
  s.conductor = order;
  s.generators = {Matrix::from_rows({{Cyclotomic::zeta(order)}}, order)};
  s.degrees = {order};
  return s;
}

// Classes by explicit conjugation, as sets of element indices.
std::set<std::set<std::size_t>> brute_force_classes(const group::GroupData &g) {
  std::vector<Matrix> inv;
  for (const auto &m : g.elements)
    inv.push_back(m.inverse());
  std::set<std::set<std::size_t>> out;
  std::vector<bool> done(g.order(), false);
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (done[x])
      continue;
    std::set<std::size_t> cls;
    for (std::size_t y = 0; y < g.order(); ++y)
      cls.insert(g.find_or_throw(g.elements[y] * g.elements[x] * inv[y]));
    for (auto c : cls)
      done[c] = true;
    out.insert(cls);
  }
  return out;
}

} // namespace

TEST_CASE("shipped group orders") {
  const std::map<std::string, std::size_t> orders = {{"G4", 24},   {"G5", 72},   {"G6", 48},  {"G8", 96},
                                                     {"G10", 288}, {"G23", 120}, {"G24", 336}, {"G25", 648},
                                                     {"G26", 1296}, {"S6", 720}};
  for (const auto &[name, order] : orders) {
    const std::string group_name = name;
    CAPTURE(group_name);
    CHECK(fixtures::load(name).group.order() == order);
  }
}

TEST_CASE("conjugacy classes agree with brute force for small groups") {
  for (const char *name : {"G4", "G5", "G6", "G8"}) {
    const std::string group_name = name;
    CAPTURE(group_name);
    const auto &g = fixtures::load(name).group;
    REQUIRE(g.order() <= 200);
    std::set<std::set<std::size_t>> ours;
    std::vector<std::set<std::size_t>> by_class(g.classes.size());
    for (std::size_t e = 0; e < g.order(); ++e)
      by_class[g.class_of[e]].insert(e);
    for (std::size_t c = 0; c < by_class.size(); ++c) {
      CHECK(by_class[c].size() == g.classes[c].size);
      ours.insert(by_class[c]);
    }
    CHECK(ours == brute_force_classes(g));
  }
}

TEST_CASE("reflections are rebuilt from root, coroot and eigenvalue") {
  for (const char *name : {"G4", "G8", "G26"}) {
    const std::string group_name = name;
    CAPTURE(group_name);
    const auto &g = fixtures::load(name).group;
    for (std::size_t r : g.reflections) {
      const Matrix &s = g.elements[r];
      const auto &cls = g.classes[g.class_of[r]];
      REQUIRE(cls.epsilon.has_value());
      CHECK(*cls.epsilon == s.det());
      const Matrix back = group::reflection_from_data(group::reflection_root(s), group::reflection_coroot(s),
                                                      *cls.epsilon, g.spec.conductor);
      CHECK(back == s);
    }
  }
}

TEST_CASE("hyperplane stabilizers are cyclic of order e") {
  for (const char *name : {"G5", "G8", "G10", "G26"}) {
    const std::string group_name = name;
    CAPTURE(group_name);
    const auto &g = fixtures::load(name).group;
    std::map<std::string, std::vector<std::size_t>> by_plane;
    for (std::size_t r : g.reflections)
      by_plane[g.hyperplane_key(r)].push_back(r);
    std::size_t planes = 0;
    for (const auto &o : g.orbits) {
      planes += o.hyperplanes.size();
      CHECK(o.reflection_classes.size() == static_cast<std::size_t>(o.e - 1));
    }
    CHECK(planes == by_plane.size());
    for (const auto &[key, refl] : by_plane) {
      const auto &orbit = g.orbits[static_cast<std::size_t>(g.classes[g.class_of[refl.front()]].orbit - 1)];
      CHECK(refl.size() == static_cast<std::size_t>(orbit.e - 1));
      // Some reflection generates all of W_H together with the identity.
      bool generates = false;
      for (std::size_t r : refl)
        if (g.classes[g.class_of[r]].element_order == orbit.e)
          generates = true;
      CHECK(generates);
    }
  }
}

TEST_CASE("parameter space has e entries per orbit") {
  const auto &g = fixtures::load("G10").group;
  std::size_t expected = 0;
  for (const auto &o : g.orbits)
    expected += static_cast<std::size_t>(o.e);
  CHECK(g.omega_bar.size() == expected);
  CHECK(g.omega_bar.size() == 7);
  CHECK(g.reflection_classes().size() == 5);
}

TEST_CASE("rank one cyclic group") {
  const auto g = group::enumerate_group(cyclic_spec(3));
  CHECK(g.order() == 3);
  CHECK(g.classes.size() == 3);
  CHECK(g.reflections.size() == 2);
  REQUIRE(g.orbits.size() == 1);
  CHECK(g.orbits[0].e == 3);
  CHECK(g.omega_bar.size() == 3);
}

TEST_CASE("trivial group") {
  group::MatrixGroupSpec s;
  s.name = "trivial";
  s.dim = 1;
  s.conductor = 1;
  s.generators = {Matrix::identity(1, 1)};
  s.degrees = {1};
  const auto g = group::enumerate_group(s);
  CHECK(g.order() == 1);
  CHECK(g.classes.size() == 1);
  CHECK(g.reflections.empty());
  CHECK(g.orbits.empty());
  CHECK(g.omega_bar.empty());
}

TEST_CASE("enumeration refuses singular generators and runaway groups") {
  auto s = cyclic_spec(2);
  s.generators = {Matrix::from_rows({{Cyclotomic(0)}}, 2)};
  CHECK_THROWS_AS(group::enumerate_group(s), group::EnumerationError);
  CHECK_THROWS_AS(group::enumerate_group(cyclic_spec(12), 5), group::EnumerationError);
}

TEST_CASE("words evaluate to their elements") {
  const auto &g = fixtures::load("G6").group;
  for (std::size_t e = 0; e < g.order(); e += 7)
    CHECK(g.element_of_word(g.word_of(e)) == e);
  for (std::size_t e = 0; e < g.order(); ++e)
    CHECK((g.elements[e] * g.elements[g.inverse_of[e]]).is_identity());
}
