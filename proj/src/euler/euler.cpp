#include "cmfam/euler/euler.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

#include "cmfam/io/errors.hpp"

namespace cmfam::euler {

using exact::Cyclotomic;
using exact::Rational;

namespace {

const group::ConjugacyClass &reflection_class(const group::GroupData &g, std::size_t cls) {
  if (cls >= g.classes.size() || !g.classes[cls].is_reflection_class)
    throw std::invalid_argument("class " + std::to_string(cls) + " of " + g.spec.name +
                                " is not a reflection class");
  return g.classes[cls];
}

/// Copy of `f` with rational coefficients, or a ValidationError naming `what`.
LinearForm demote(const LinearForm &f, const std::string &what) {
  LinearForm out;
  for (const auto &[p, c] : f.terms()) {
    if (!c.is_rational())
      throw io::ValidationError(what + " has the irrational coefficient " + c.to_string() +
                                " at " + p.to_string() + "; the character data is inconsistent");
    out += LinearForm::variable(p, Cyclotomic(c.rational_value()));
  }
  return out;
}

/// size(C) * c_k(s) / (1 - eps_s) for one reflection class.
LinearForm weighted_c(const group::GroupData &g, std::size_t cls) {
  const auto &c = reflection_class(g, cls);
  const Cyclotomic scale = Cyclotomic(static_cast<long>(c.size)) / (Cyclotomic(1) - *c.epsilon);
  return c_form(g, cls) * scale;
}

Cyclotomic ratio(const chars::CharacterTable &t, std::size_t ch, std::size_t cls) {
  return t.value(ch, cls) / Cyclotomic(t.dim(ch));
}

} // namespace

LinearForm c_form(const group::GroupData &g, std::size_t cls) {
  const auto &c = reflection_class(g, cls);
  const int e = g.orbits.at(static_cast<std::size_t>(c.orbit - 1)).e;
  LinearForm out;
  Cyclotomic power(1);
  for (int j = 0; j < e; ++j) {
    out += LinearForm::variable({c.orbit, (j + 1) % e}, power);
    out -= LinearForm::variable({c.orbit, j}, power);
    power *= c.det;
  }
  return out;
}

LinearForm omega_form(const chars::CharacterTable &t, const group::GroupData &g, std::size_t ch) {
  LinearForm acc;
  const Cyclotomic d(t.dim(ch));
  for (std::size_t cls : g.reflection_classes()) {
    const auto &c = g.classes[cls];
    const Cyclotomic w = (*c.epsilon * d - t.value(ch, cls)) / d;
    acc += weighted_c(g, cls) * w;
  }
  return demote(acc, "omega form of " + t.labels[ch]);
}

LinearForm p_form(const chars::CharacterTable &t, const group::GroupData &g, std::size_t lambda,
                  std::size_t mu) {
  if (lambda == mu)
    throw std::invalid_argument("p form needs two distinct characters");
  LinearForm acc;
  for (std::size_t cls : g.reflection_classes()) {
    const Cyclotomic w = ratio(t, lambda, cls) - ratio(t, mu, cls);
    if (!w.is_zero())
      acc += weighted_c(g, cls) * w;
  }
  return demote(acc, "p form of " + t.labels[lambda] + ", " + t.labels[mu]);
}

FamilyPartition partition_by_values(const chars::CharacterTable &t, const group::GroupData &g) {
  const auto refl = g.reflection_classes();
  std::vector<std::size_t> ids(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    ids[i] = i;
    for (std::size_t j = 0; j < i; ++j) {
      bool same = true;
      for (std::size_t cls : refl)
        if (!(Cyclotomic(t.dim(j)) * t.value(i, cls) == Cyclotomic(t.dim(i)) * t.value(j, cls))) {
          same = false;
          break;
        }
      if (same) {
        ids[i] = ids[j];
        break;
      }
    }
  }
  return FamilyPartition::from_block_ids(ids);
}

FamilyPartition partition_by_omega(const std::vector<LinearForm> &omega) {
  std::vector<std::size_t> ids(omega.size());
  for (std::size_t i = 0; i < omega.size(); ++i) {
    ids[i] = i;
    for (std::size_t j = 0; j < i; ++j)
      if (omega[i] == omega[j]) {
        ids[i] = ids[j];
        break;
      }
  }
  return FamilyPartition::from_block_ids(ids);
}

std::vector<std::vector<std::size_t>> young_blocks(const group::GroupData &g) {
  std::vector<std::vector<std::size_t>> blocks(g.orbits.size());
  for (std::size_t i = 0; i < g.omega_bar.size(); ++i)
    blocks[static_cast<std::size_t>(g.omega_bar[i].omega - 1)].push_back(i);
  return blocks;
}

Permutation sharp_permutation(const group::GroupData &g) {
  Permutation perm(g.omega_bar.size());
  for (std::size_t i = 0; i < g.omega_bar.size(); ++i) {
    const auto [omega, j] = g.omega_bar[i];
    const int e = g.orbits.at(static_cast<std::size_t>(omega - 1)).e;
    const ParamIndex target{omega, (e - j) % e};
    perm[i] = static_cast<std::size_t>(
        std::find(g.omega_bar.begin(), g.omega_bar.end(), target) - g.omega_bar.begin());
  }
  return perm;
}

EulerData compute_euler(const chars::CharacterTable &t, const group::GroupData &g, unsigned jobs) {
  EulerData e;
  e.order = g.omega_bar;
  for (std::size_t cls : g.reflection_classes())
    e.c_forms.emplace(cls, c_form(g, cls));
  for (std::size_t i = 0; i < t.size(); ++i)
    e.omega.push_back(omega_form(t, g, i));

  const FamilyPartition by_values = partition_by_values(t, g);
  const FamilyPartition by_omega = partition_by_omega(e.omega);
  if (!(by_values == by_omega))
    throw ConsistencyError("generic Euler families of " + g.spec.name +
                           " differ between the value criterion and the omega criterion");
  e.generic_partition = by_values;

  std::vector<std::pair<std::size_t, std::size_t>> all_pairs;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j)
      all_pairs.emplace_back(i, j);
  std::vector<LinearForm> forms(all_pairs.size());
  const unsigned workers = std::max(1u, std::min<unsigned>(jobs, 64));
  if (workers == 1) {
    for (std::size_t k = 0; k < all_pairs.size(); ++k)
      forms[k] = p_form(t, g, all_pairs[k].first, all_pairs[k].second);
  } else {
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        try {
          for (std::size_t k = w; k < all_pairs.size(); k += workers)
            forms[k] = p_form(t, g, all_pairs[k].first, all_pairs[k].second);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    for (auto &th : pool)
      th.join();
    for (auto &err : errors)
      if (err)
        std::rethrow_exception(err);
  }

  std::vector<Normal> normals;
  for (std::size_t k = 0; k < all_pairs.size(); ++k) {
    if (forms[k].is_zero())
      continue;
    e.pairs.push_back(all_pairs[k]);
    normals.push_back(*normalize(forms[k].rational_coords(e.order)));
    e.p.push_back(std::move(forms[k]));
  }
  e.variety = make_arrangement(std::move(normals), young_blocks(g));
  return e;
}

FamilyPartition specialize_partition(const EulerData &e, std::size_t characters,
                                     const std::vector<Rational> &point) {
  if (point.size() != e.order.size())
    throw std::invalid_argument("parameter point has " + std::to_string(point.size()) +
                                " coordinates, expected " + std::to_string(e.order.size()));
  UnionFind uf(characters);
  for (const auto &b : e.generic_partition.blocks())
    for (std::size_t x : b)
      uf.unite(b.front(), x);
  for (std::size_t k = 0; k < e.pairs.size(); ++k)
    if (e.p[k].eval(e.order, point).is_zero())
      uf.unite(e.pairs[k].first, e.pairs[k].second);
  return uf.partition();
}

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

bool on_plane(const Normal &n, const std::vector<Rational> &pt) {
  Rational s(0);
  for (std::size_t i = 0; i < n.size(); ++i)
    s += Rational(static_cast<long>(n[i])) * pt[i];
  return s.is_zero();
}

} // namespace

std::vector<std::vector<Rational>> generic_points(const EulerData &e, std::size_t count,
                                                  std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(1000, 1000000);
  std::vector<std::vector<Rational>> out;
  while (out.size() < count) {
    std::set<std::uint64_t> used;
    std::vector<Rational> pt;
    while (pt.size() < e.order.size()) {
      std::uint64_t c = dist(rng);
      while (!is_prime(c))
        ++c;
      if (used.insert(c).second)
        pt.emplace_back(static_cast<long>(c));
    }
    const bool hit = std::any_of(e.variety.planes.begin(), e.variety.planes.end(),
                                 [&](const Normal &n) { return on_plane(n, pt); });
    if (!hit)
      out.push_back(std::move(pt));
  }
  return out;
}

} // namespace cmfam::euler
