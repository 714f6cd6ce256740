#include "cmfam/group/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

namespace cmfam::group {

namespace {

int element_order(const Matrix &m, int limit) {
  Matrix p = m;
  for (int k = 1; k <= limit; ++k) {
    if (p.is_identity())
      return k;
    p = p * m;
  }
  throw EnumerationError("element order exceeds " + std::to_string(limit));
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b)
      parent[std::max(a, b)] = std::min(a, b);
  }
};

} // namespace

std::vector<Cyclotomic> reflection_coroot(const Matrix &s) {
  const Matrix d = s - Matrix::identity(s.rows(), s.conductor());
  for (int i = 0; i < d.rows(); ++i) {
    std::vector<Cyclotomic> row;
    bool nonzero = false;
    for (int j = 0; j < d.cols(); ++j) {
      row.push_back(d(i, j));
      nonzero = nonzero || !d(i, j).is_zero();
    }
    if (!nonzero)
      continue;
    std::size_t first = 0;
    while (row[first].is_zero())
      ++first;
    const Cyclotomic inv = row[first].inverse();
    for (auto &x : row)
      x = (x * inv).embed(s.conductor());
    return row;
  }
  throw std::domain_error("coroot requested for the identity");
}

std::vector<Cyclotomic> reflection_root(const Matrix &s) {
  const Matrix d = s - Matrix::identity(s.rows(), s.conductor());
  for (int j = 0; j < d.cols(); ++j) {
    std::vector<Cyclotomic> col;
    bool nonzero = false;
    for (int i = 0; i < d.rows(); ++i) {
      col.push_back(d(i, j));
      nonzero = nonzero || !d(i, j).is_zero();
    }
    if (nonzero)
      return col;
  }
  throw std::domain_error("root requested for the identity");
}

Matrix reflection_from_data(const std::vector<Cyclotomic> &root,
                            const std::vector<Cyclotomic> &coroot, const Cyclotomic &eps,
                            int conductor) {
  const int n = static_cast<int>(root.size());
  Cyclotomic pairing;
  for (int i = 0; i < n; ++i)
    pairing += coroot[static_cast<std::size_t>(i)] * root[static_cast<std::size_t>(i)];
  const Cyclotomic scale = (Cyclotomic(1) - eps) / pairing;
  Matrix m = Matrix::identity(n, conductor);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m.set(i, j,
            m(i, j) - scale * root[static_cast<std::size_t>(i)] * coroot[static_cast<std::size_t>(j)]);
  return m;
}

std::vector<Cyclotomic> eigenvalues_of(const Matrix &m, int order, int conductor) {
  if (conductor % order != 0)
    throw std::invalid_argument("eigenvalue conductor must be a multiple of the element order");
  std::vector<Cyclotomic> p = m.charpoly().coeffs();
  std::vector<Cyclotomic> result;
  for (int i = 0; i < order && p.size() > 1; ++i) {
    const Cyclotomic z = Cyclotomic::zeta(conductor, static_cast<long>(i) * (conductor / order));
    while (p.size() > 1) {
      // synthetic division by (x - z)
      std::vector<Cyclotomic> q(p.size() - 1);
      Cyclotomic acc;
      for (std::size_t k = p.size(); k-- > 1;) {
        acc = acc * z + p[k];
        q[k - 1] = acc;
      }
      const Cyclotomic rem = acc * z + p[0];
      if (!rem.is_zero())
        break;
      p = std::move(q);
      result.push_back(z);
    }
  }
  if (p.size() != 1)
    throw EnumerationError("characteristic polynomial does not split over roots of unity of order " +
                           std::to_string(order));
  return result;
}

std::optional<std::size_t> GroupData::find(const Matrix &m) const {
  auto it = index.find(m.key());
  if (it == index.end())
    return std::nullopt;
  return it->second;
}

std::size_t GroupData::find_or_throw(const Matrix &m) const {
  auto r = find(m);
  if (!r)
    throw std::logic_error("matrix is not an element of " + spec.name);
  return *r;
}

std::size_t GroupData::element_of_word(const std::vector<int> &word) const {
  Matrix m = Matrix::identity(spec.dim, spec.conductor);
  for (int g : word) {
    if (g < 0 || g >= static_cast<int>(spec.generators.size()))
      throw std::out_of_range("generator index " + std::to_string(g) + " out of range");
    m = m * spec.generators[static_cast<std::size_t>(g)];
  }
  return find_or_throw(m);
}

std::vector<int> GroupData::word_of(std::size_t element) const {
  std::vector<int> w;
  for (std::size_t x = element; via_generator[x] >= 0; x = parent[x])
    w.push_back(via_generator[x]);
  return {w.rbegin(), w.rend()};
}

std::vector<std::size_t> GroupData::reflection_classes() const {
  std::vector<std::size_t> out;
  for (const auto &o : orbits)
    out.insert(out.end(), o.reflection_classes.begin(), o.reflection_classes.end());
  return out;
}

std::string GroupData::hyperplane_key(std::size_t element) const {
  return projective_key(reflection_coroot(elements[element]), spec.conductor);
}

GroupData enumerate_group(const MatrixGroupSpec &spec, std::size_t cap) {
  GroupData g;
  g.spec = spec;
  const int n = spec.dim;
  const int N = spec.conductor;
  if (n <= 0)
    throw EnumerationError("group dimension must be positive");

  std::vector<Matrix> gens, gen_inv;
  for (std::size_t i = 0; i < spec.generators.size(); ++i) {
    const Matrix &m = spec.generators[i];
    if (m.rows() != n || m.cols() != n)
      throw EnumerationError("generator " + std::to_string(i) + " is not " + std::to_string(n) +
                             "x" + std::to_string(n));
    if (m.det().is_zero())
      throw EnumerationError("generator " + std::to_string(i) + " is not invertible");
    gens.push_back(m);
    gen_inv.push_back(m.inverse());
  }

  // Closure by breadth-first right multiplication.
  auto add = [&](Matrix m, std::size_t from, int via) {
    auto key = m.key();
    auto [it, inserted] = g.index.emplace(std::move(key), g.elements.size());
    if (inserted) {
      if (g.elements.size() >= cap)
        throw EnumerationError("enumeration cap of " + std::to_string(cap) +
                               " elements exceeded for " + spec.name);
      g.elements.push_back(std::move(m));
      g.parent.push_back(from);
      g.via_generator.push_back(via);
    }
    return std::pair{it->second, inserted};
  };
  add(Matrix::identity(n, N), 0, -1);
  for (std::size_t head = 0; head < g.elements.size(); ++head)
    for (std::size_t k = 0; k < gens.size(); ++k)
      add(g.elements[head] * gens[k], head, static_cast<int>(k));

  const std::size_t order = g.elements.size();
  g.inverse_of.resize(order);
  for (std::size_t i = 0; i < order; ++i)
    g.inverse_of[i] = g.find_or_throw(g.elements[i].inverse());

  // Conjugacy classes by orbit search under conjugation by generators.
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  g.class_of.assign(order, kUnset);
  for (std::size_t x = 0; x < order; ++x) {
    if (g.class_of[x] != kUnset)
      continue;
    const std::size_t cls = g.classes.size();
    ConjugacyClass c;
    c.representative = x;
    g.class_of[x] = cls;
    std::deque<std::size_t> queue{x};
    std::size_t size = 0;
    while (!queue.empty()) {
      const std::size_t y = queue.front();
      queue.pop_front();
      ++size;
      for (std::size_t k = 0; k < gens.size(); ++k) {
        const std::size_t z = g.find_or_throw(gens[k] * g.elements[y] * gen_inv[k]);
        if (g.class_of[z] == kUnset) {
          g.class_of[z] = cls;
          queue.push_back(z);
        }
      }
    }
    c.size = size;
    g.classes.push_back(std::move(c));
  }

  const int limit = static_cast<int>(std::min<std::size_t>(order, 1u << 20));
  for (auto &c : g.classes) {
    c.element_order = element_order(g.elements[c.representative], limit);
    g.exponent = std::lcm(g.exponent, c.element_order);
  }
  g.eigen_conductor = std::lcm(N, g.exponent);

  for (auto &c : g.classes) {
    const Matrix &m = g.elements[c.representative];
    c.det = m.det();
    c.trace = m.trace();
    c.eigenvalues = eigenvalues_of(m, c.element_order, g.eigen_conductor);
    const Matrix d = m - Matrix::identity(n, N);
    if (c.element_order > 1 && d.rank() == 1) {
      c.is_reflection_class = true;
      for (const auto &ev : c.eigenvalues)
        if (!ev.is_one())
          c.epsilon = ev;
      if (!c.epsilon || !(*c.epsilon == c.det))
        throw EnumerationError("reflection eigenvalue disagrees with determinant");
    }
  }
  for (std::size_t x = 0; x < order; ++x)
    if (g.classes[g.class_of[x]].is_reflection_class)
      g.reflections.push_back(x);

  // Hyperplanes: key -> reflections fixing it.
  std::map<std::string, std::vector<std::size_t>> fixers;
  std::map<std::string, std::vector<Cyclotomic>> coroots;
  for (std::size_t r : g.reflections) {
    auto v = reflection_coroot(g.elements[r]);
    auto key = projective_key(v, N);
    fixers[key].push_back(r);
    coroots.emplace(key, std::move(v));
  }

  // Classes sharing a hyperplane belong to one orbit.
  UnionFind uf(g.classes.size());
  for (const auto &[key, refl] : fixers)
    for (std::size_t r : refl)
      uf.unite(g.class_of[refl.front()], g.class_of[r]);

  struct Draft {
    int e = 1;
    std::vector<std::string> keys;
    std::vector<std::size_t> classes;
  };
  std::map<std::size_t, Draft> drafts;
  for (const auto &[key, refl] : fixers) {
    Draft &d = drafts[uf.find(g.class_of[refl.front()])];
    const int e = static_cast<int>(refl.size()) + 1;
    if (d.keys.empty())
      d.e = e;
    else if (d.e != e)
      throw EnumerationError("pointwise stabilizer order varies along a hyperplane orbit");
    d.keys.push_back(key);
  }
  for (std::size_t c = 0; c < g.classes.size(); ++c)
    if (g.classes[c].is_reflection_class)
      drafts[uf.find(c)].classes.push_back(c);

  std::vector<Draft> ordered;
  for (auto &[root, d] : drafts)
    ordered.push_back(std::move(d));
  if (!spec.pinned_orbit_order.empty()) {
    std::vector<Draft> pinned;
    for (int gi : spec.pinned_orbit_order) {
      if (gi < 0 || gi >= static_cast<int>(gens.size()))
        throw EnumerationError("pinned orbit refers to unknown generator " + std::to_string(gi));
      const std::size_t el = g.find_or_throw(gens[static_cast<std::size_t>(gi)]);
      if (!g.classes[g.class_of[el]].is_reflection_class)
        throw EnumerationError("pinned generator " + std::to_string(gi) + " is not a reflection");
      const std::string key = g.hyperplane_key(el);
      auto it = std::find_if(ordered.begin(), ordered.end(), [&](const Draft &d) {
        return std::find(d.keys.begin(), d.keys.end(), key) != d.keys.end();
      });
      if (it == ordered.end())
        throw EnumerationError("pinned generator " + std::to_string(gi) +
                               " repeats an earlier orbit");
      pinned.push_back(std::move(*it));
      ordered.erase(it);
    }
    if (!ordered.empty())
      throw EnumerationError("pinned orbit order does not cover every hyperplane orbit");
    ordered = std::move(pinned);
  } else {
    std::sort(ordered.begin(), ordered.end(), [](const Draft &a, const Draft &b) {
      return std::tuple(a.e, a.keys.size(), a.keys.front()) <
             std::tuple(b.e, b.keys.size(), b.keys.front());
    });
  }

  for (std::size_t o = 0; o < ordered.size(); ++o) {
    Draft &d = ordered[o];
    HyperplaneOrbit orbit;
    orbit.omega = static_cast<int>(o) + 1;
    orbit.e = d.e;
    for (const auto &k : d.keys)
      orbit.hyperplanes.push_back(coroots.at(k));
    if (static_cast<int>(d.classes.size()) != d.e - 1)
      throw EnumerationError("hyperplane orbit " + std::to_string(orbit.omega) + " has " +
                             std::to_string(d.classes.size()) + " reflection classes, expected " +
                             std::to_string(d.e - 1));
    std::vector<std::pair<int, std::size_t>> by_j;
    for (std::size_t c : d.classes) {
      ConjugacyClass &cc = g.classes[c];
      int found = -1;
      for (int j = 1; j < d.e; ++j)
        if (cc.det == Cyclotomic::zeta(g.eigen_conductor, static_cast<long>(j) *
                                                               (g.eigen_conductor / d.e)))
          found = j;
      if (found < 0)
        throw EnumerationError("reflection determinant is not a power of zeta_e");
      cc.orbit = orbit.omega;
      cc.j = found;
      by_j.emplace_back(found, c);
    }
    std::sort(by_j.begin(), by_j.end());
    for (std::size_t i = 0; i < by_j.size(); ++i) {
      if (by_j[i].first != static_cast<int>(i) + 1)
        throw EnumerationError("reflection classes of an orbit do not realize every exponent");
      orbit.reflection_classes.push_back(by_j[i].second);
    }
    g.orbits.push_back(std::move(orbit));
  }
  for (const auto &o : g.orbits)
    for (int j = 0; j < o.e; ++j)
      g.omega_bar.push_back({o.omega, j});

  return g;
}

} // namespace cmfam::group
