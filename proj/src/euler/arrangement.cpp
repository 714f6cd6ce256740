#include "cmfam/euler/arrangement.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cmfam::euler {

std::optional<Normal> normalize(const std::vector<exact::Rational> &v) {
  mpz_class den = 1;
  for (const auto &x : v)
    den = exact::lcm(den, x.den());
  std::vector<mpz_class> ints;
  mpz_class g = 0;
  for (const auto &x : v) {
    mpz_class i = x.num() * (den / x.den());
    g = exact::gcd(g, i);
    ints.push_back(std::move(i));
  }
  if (g == 0)
    return std::nullopt;
  int sign = 0;
  for (const auto &i : ints)
    if (sgn(i) != 0) {
      sign = sgn(i);
      break;
    }
  Normal out;
  out.reserve(ints.size());
  for (auto &i : ints) {
    mpz_class q = i / g * sign;
    if (!q.fits_slong_p())
      throw std::overflow_error("hyperplane coefficient does not fit in 64 bits");
    out.push_back(q.get_si());
  }
  return out;
}

std::optional<Normal> normalize(const Normal &v) {
  std::vector<exact::Rational> r(v.begin(), v.end());
  return normalize(r);
}

std::string to_string(const Normal &n) {
  std::string s;
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (i)
      s += ',';
    s += std::to_string(n[i]);
  }
  return s;
}

Normal parse_normal(const std::string &text) {
  Normal out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception &) {
      throw std::invalid_argument("bad hyperplane entry '" + item + "'");
    }
    if (used != item.size())
      throw std::invalid_argument("bad hyperplane entry '" + item + "'");
    out.push_back(v);
  }
  if (out.empty())
    throw std::invalid_argument("empty hyperplane vector");
  return out;
}

std::size_t HyperplaneArrangement::dimension() const {
  std::size_t d = 0;
  for (const auto &b : young_blocks)
    d += b.size();
  return d;
}

bool HyperplaneArrangement::contains(const Normal &n) const {
  return std::binary_search(planes.begin(), planes.end(), n);
}

std::size_t HyperplaneArrangement::orbit_of(const Normal &n) const {
  for (std::size_t i = 0; i < orbits.size(); ++i)
    if (std::binary_search(orbits[i].members.begin(), orbits[i].members.end(), n))
      return i;
  throw std::out_of_range("plane " + to_string(n) + " is not in the arrangement");
}

Normal permute(const Normal &n, const Permutation &perm) {
  Normal out(n.size());
  for (std::size_t i = 0; i < n.size(); ++i)
    out[perm[i]] = n[i];
  return out;
}

namespace {

std::vector<Permutation> young_generators(const std::vector<std::vector<std::size_t>> &blocks,
                                          std::size_t dim) {
  std::vector<Permutation> gens;
  for (const auto &b : blocks)
    for (std::size_t i = 0; i + 1 < b.size(); ++i) {
      Permutation p(dim);
      std::iota(p.begin(), p.end(), std::size_t{0});
      std::swap(p[b[i]], p[b[i + 1]]);
      gens.push_back(std::move(p));
    }
  return gens;
}

} // namespace

HyperplaneArrangement make_arrangement(std::vector<Normal> planes,
                                       std::vector<std::vector<std::size_t>> young_blocks) {
  HyperplaneArrangement a;
  a.young_blocks = std::move(young_blocks);
  const std::size_t dim = a.dimension();
  {
    std::vector<bool> seen(dim, false);
    for (const auto &b : a.young_blocks)
      for (std::size_t x : b) {
        if (x >= dim || seen[x])
          throw std::invalid_argument("Young blocks do not partition the coordinates");
        seen[x] = true;
      }
  }
  std::set<Normal> unique;
  for (const auto &p : planes) {
    if (p.size() != dim)
      throw std::invalid_argument("hyperplane " + to_string(p) + " has dimension " +
                                  std::to_string(p.size()) + ", expected " + std::to_string(dim));
    auto n = normalize(p);
    if (!n)
      throw std::invalid_argument("zero vector is not a hyperplane");
    unique.insert(std::move(*n));
  }
  a.planes.assign(unique.begin(), unique.end());

  const auto gens = young_generators(a.young_blocks, dim);
  std::set<Normal> assigned;
  for (const auto &p : a.planes) {
    if (assigned.count(p))
      continue;
    std::set<Normal> members{p};
    std::deque<Normal> queue{p};
    while (!queue.empty()) {
      const Normal cur = queue.front();
      queue.pop_front();
      for (const auto &g : gens) {
        Normal img = *normalize(permute(cur, g));
        if (!unique.count(img))
          throw std::invalid_argument("plane set is not closed under the Young subgroup: " +
                                      to_string(img) + " missing");
        if (members.insert(img).second)
          queue.push_back(std::move(img));
      }
    }
    PlaneOrbit o;
    o.members.assign(members.begin(), members.end());
    o.representative = o.members.front();
    assigned.insert(members.begin(), members.end());
    a.orbits.push_back(std::move(o));
  }
  std::sort(a.orbits.begin(), a.orbits.end(), [](const PlaneOrbit &x, const PlaneOrbit &y) {
    return x.representative < y.representative;
  });
  return a;
}

Normal sharp(const Normal &n, const Permutation &sharp_perm) {
  return *normalize(permute(n, sharp_perm));
}

HyperplaneArrangement sharp(const HyperplaneArrangement &a, const Permutation &sharp_perm) {
  std::vector<Normal> img;
  img.reserve(a.planes.size());
  for (const auto &p : a.planes)
    img.push_back(sharp(p, sharp_perm));
  return make_arrangement(std::move(img), a.young_blocks);
}

InclusionResult plane_inclusion(const std::vector<Normal> &a, const HyperplaneArrangement &b) {
  InclusionResult r;
  const std::size_t dim = b.dimension();
  for (const auto &p : a) {
    if (p.size() != dim)
      throw std::invalid_argument("hyperplane " + to_string(p) + " has dimension " +
                                  std::to_string(p.size()) + ", expected " + std::to_string(dim));
    auto n = normalize(p);
    if (!n || !b.contains(*n)) {
      r.included = false;
      r.missing.push_back(p);
    }
  }
  return r;
}

} // namespace cmfam::euler
