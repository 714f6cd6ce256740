// Computes the irreducible characters of an enumerated reflection group by
// the Dixon-Schneider method over a prime field, lifts them to cyclotomic
// values, and writes an unlabeled character bundle together with a summary
// (degree, trailing degrees under both conventions, values on the display
// classes) that is used to attach labels.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>

#include <CLI11.hpp>

#include "cmfam/chars/table.hpp"
#include "cmfam/group/bundle.hpp"

using namespace cmfam;
using exact::Cyclotomic;

namespace {

using u64 = std::uint64_t;

u64 pw(u64 b, u64 e, u64 p) {
  u64 r = 1;
  b %= p;
  while (e) {
    if (e & 1)
      r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}
u64 inv(u64 a, u64 p) { return pw(a, p - 2, p); }

bool is_prime(u64 n) {
  if (n < 2)
    return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

u64 primitive_root(u64 p) {
  std::vector<u64> fac;
  u64 m = p - 1;
  for (u64 d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      fac.push_back(d);
      while (m % d == 0)
        m /= d;
    }
  if (m > 1)
    fac.push_back(m);
  for (u64 g = 2;; ++g) {
    bool ok = true;
    for (u64 f : fac)
      if (pw(g, (p - 1) / f, p) == 1)
        ok = false;
    if (ok)
      return g;
  }
}

using Mat = std::vector<std::vector<u64>>;

/// Characteristic polynomial (low to high) via Hessenberg reduction.
std::vector<u64> charpoly_mod(Mat a, u64 p) {
  const std::size_t n = a.size();
  for (std::size_t m = 1; m + 1 < n + 1 && m < n; ++m) {
    std::size_t piv = m;
    while (piv < n && a[piv][m - 1] == 0)
      ++piv;
    if (piv == n)
      continue;
    if (piv != m) {
      std::swap(a[piv], a[m]);
      for (auto &row : a)
        std::swap(row[piv], row[m]);
    }
    const u64 iv = inv(a[m][m - 1], p);
    for (std::size_t i = m + 1; i < n; ++i) {
      const u64 f = a[i][m - 1] * iv % p;
      if (!f)
        continue;
      for (std::size_t j = 0; j < n; ++j)
        a[i][j] = (a[i][j] + p - f * a[m][j] % p) % p;
      for (std::size_t k = 0; k < n; ++k)
        a[k][m] = (a[k][m] + f * a[k][i]) % p;
    }
  }
  std::vector<std::vector<u64>> P(n + 1);
  P[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    std::vector<u64> cur(m + 1, 0);
    const auto &prev = P[m - 1];
    for (std::size_t k = 0; k < prev.size(); ++k) {
      cur[k + 1] = (cur[k + 1] + prev[k]) % p;
      cur[k] = (cur[k] + p - a[m - 1][m - 1] * prev[k] % p) % p;
    }
    u64 prod = 1;
    for (std::size_t i = m - 1; i-- > 0;) {
      prod = prod * a[i + 1][i] % p;
      const u64 coef = prod * a[i][m - 1] % p;
      if (!coef)
        continue;
      for (std::size_t k = 0; k < P[i].size(); ++k)
        cur[k] = (cur[k] + p - coef * P[i][k] % p) % p;
    }
    P[m] = std::move(cur);
  }
  return P[n];
}

std::vector<u64> nullvector_mod(Mat a, u64 p) {
  const std::size_t n = a.size();
  std::vector<int> pivcol;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < n; ++c) {
    std::size_t piv = r;
    while (piv < n && a[piv][c] == 0)
      ++piv;
    if (piv == n)
      continue;
    std::swap(a[piv], a[r]);
    const u64 iv = inv(a[r][c], p);
    for (auto &x : a[r])
      x = x * iv % p;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || !a[i][c])
        continue;
      const u64 f = a[i][c];
      for (std::size_t j = 0; j < n; ++j)
        a[i][j] = (a[i][j] + p - f * a[r][j] % p) % p;
    }
    pivcol.push_back(static_cast<int>(c));
    ++r;
  }
  if (r != n - 1)
    throw std::runtime_error("eigenspace is not one-dimensional");
  std::vector<bool> isp(n, false);
  for (int c : pivcol)
    isp[static_cast<std::size_t>(c)] = true;
  std::size_t free = 0;
  while (isp[free])
    ++free;
  std::vector<u64> v(n, 0);
  v[free] = 1;
  for (std::size_t i = 0; i < pivcol.size(); ++i)
    v[static_cast<std::size_t>(pivcol[i])] = (p - a[i][free]) % p;
  return v;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Dixon-Schneider character table bring-up"};
  std::string group_path, out_path, summary_path;
  unsigned seed = 1;
  app.add_option("group", group_path, "group bundle")->required();
  app.add_option("--out", out_path, "character bundle to write")->required();
  app.add_option("--summary", summary_path, "row summary to write")->required();
  app.add_option("--seed", seed, "random seed");
  CLI11_PARSE(app, argc, argv);

  const auto spec = group::load_group_bundle(group_path);
  const auto g = group::enumerate_group(spec);
  const std::size_t r = g.classes.size();
  const u64 order = g.order();
  const int L = g.eigen_conductor;

  u64 p = 10007;
  while (!(is_prime(p) && (p - 1) % static_cast<u64>(L) == 0 && p > 2 * order))
    ++p;
  const u64 rho = pw(primitive_root(p), (p - 1) / static_cast<u64>(L), p);

  std::vector<std::vector<std::size_t>> members(r);
  for (std::size_t x = 0; x < order; ++x)
    members[g.class_of[x]].push_back(x);

  // a[j][k][l] = #{x in C_j : x^{-1} g_l in C_k}
  std::vector<Mat> A(r, Mat(r, std::vector<u64>(r, 0)));
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t x : members[j]) {
      const auto &xi = g.elements[g.inverse_of[x]];
      for (std::size_t l = 0; l < r; ++l) {
        const std::size_t k =
            g.class_of[g.find_or_throw(xi * g.elements[g.classes[l].representative])];
        A[j][k][l] += 1;
      }
    }
  std::cerr << spec.name << ": structure constants done, p = " << p << "\n";

  std::mt19937_64 rng(seed);
  std::vector<std::vector<u64>> eigvecs;
  for (int attempt = 0; attempt < 20 && eigvecs.size() != r; ++attempt) {
    Mat M(r, std::vector<u64>(r, 0));
    for (std::size_t j = 0; j < r; ++j) {
      const u64 c = rng() % p;
      for (std::size_t k = 0; k < r; ++k)
        for (std::size_t l = 0; l < r; ++l)
          M[k][l] = (M[k][l] + c * A[j][k][l]) % p;
    }
    const auto cp = charpoly_mod(M, p);
    std::vector<u64> roots;
    for (u64 lam = 0; lam < p; ++lam) {
      u64 acc = 0;
      for (std::size_t i = cp.size(); i-- > 0;)
        acc = (acc * lam + cp[i]) % p;
      if (!acc)
        roots.push_back(lam);
    }
    if (roots.size() != r)
      continue;
    eigvecs.clear();
    for (u64 lam : roots) {
      Mat B = M;
      for (std::size_t i = 0; i < r; ++i)
        B[i][i] = (B[i][i] + p - lam) % p;
      auto v = nullvector_mod(B, p);
      const u64 iv = inv(v[0], p);
      for (auto &x : v)
        x = x * iv % p;
      eigvecs.push_back(std::move(v));
    }
  }
  if (eigvecs.size() != r) {
    std::cerr << "failed to split the class algebra\n";
    return 1;
  }

  // inverse classes and power maps
  std::vector<std::size_t> inv_class(r);
  for (std::size_t k = 0; k < r; ++k)
    inv_class[k] = g.class_of[g.inverse_of[g.classes[k].representative]];
  std::vector<std::vector<std::size_t>> powmap(r);
  for (std::size_t k = 0; k < r; ++k) {
    const auto &m = g.elements[g.classes[k].representative];
    auto cur = group::Matrix::identity(spec.dim, spec.conductor);
    for (int t = 0; t < g.classes[k].element_order; ++t) {
      powmap[k].push_back(g.class_of[g.find_or_throw(cur)]);
      cur = cur * m;
    }
  }

  chars::CharacterBundle b;
  b.group = spec.name;
  b.conductor = spec.conductor;
  b.degrees = spec.degrees;
  for (std::size_t k = 0; k < r; ++k) {
    const auto &c = g.classes[k];
    b.fingerprints.push_back({c.size, c.element_order, c.trace, c.det});
  }
  for (std::size_t k = 0; k < r; ++k) {
    int same = 0;
    for (std::size_t m = 0; m < r; ++m)
      if (b.fingerprints[m].size == b.fingerprints[k].size &&
          b.fingerprints[m].order == b.fingerprints[k].order &&
          b.fingerprints[m].trace == b.fingerprints[k].trace &&
          b.fingerprints[m].det == b.fingerprints[k].det)
        ++same;
    if (same > 1)
      b.column_pins.push_back({k, g.word_of(g.classes[k].representative)});
  }

  for (std::size_t row = 0; row < r; ++row) {
    const auto &w = eigvecs[row];
    u64 s = 0;
    for (std::size_t k = 0; k < r; ++k)
      s = (s + w[k] * w[inv_class[k]] % p * inv(g.classes[k].size % p, p)) % p;
    const u64 d2 = order % p * inv(s, p) % p;
    u64 d = 0;
    for (u64 c = 1; c * c <= order; ++c)
      if (c * c % p == d2)
        d = c;
    if (!d) {
      std::cerr << "no integer degree for row " << row << "\n";
      return 1;
    }
    std::vector<u64> chi(r);
    for (std::size_t k = 0; k < r; ++k)
      chi[k] = w[k] * d % p * inv(g.classes[k].size % p, p) % p;
    std::vector<Cyclotomic> vals;
    for (std::size_t k = 0; k < r; ++k) {
      const int o = g.classes[k].element_order;
      const u64 zo = pw(rho, static_cast<u64>(L / o), p);
      std::vector<std::pair<long, exact::Rational>> terms;
      u64 total = 0;
      for (int i = 0; i < o; ++i) {
        u64 acc = 0;
        for (int t = 0; t < o; ++t)
          acc = (acc + chi[powmap[k][static_cast<std::size_t>(t)]] *
                           pw(zo, static_cast<u64>((o - (static_cast<long>(i) * t) % o) % o), p)) %
                p;
        const u64 m = acc * inv(static_cast<u64>(o), p) % p;
        if (m > d) {
          std::cerr << "multiplicity out of range in row " << row << "\n";
          return 1;
        }
        total += m;
        if (m)
          terms.emplace_back(static_cast<long>(i) * (L / o), exact::Rational(static_cast<long>(m)));
      }
      if (total != d) {
        std::cerr << "multiplicities do not sum to the degree in row " << row << "\n";
        return 1;
      }
      vals.push_back(*Cyclotomic::from_terms(L, terms).restrict_to(spec.conductor));
    }
    b.values.push_back(std::move(vals));
    b.labels.push_back("X" + std::to_string(row));
  }
  b.provenance = "Computed with the Dixon-Schneider method from the generating reflections.";

  // Validate before writing, then summarise.
  const auto table = chars::load_and_validate(b, g);
  io::json summary = io::json::array();
  std::vector<chars::FakeDegreeRecord> plain, conj;
  for (std::size_t i = 0; i < r; ++i) {
    io::json row;
    row["row"] = i;
    row["d"] = table.dim(i);
    for (auto conv : {chars::Convention::plain, chars::Convention::conjugate}) {
      try {
        auto rec = chars::fake_degree(table, g, i, conv);
        row[std::string("b_") + chars::to_string(conv)] = rec.b;
        row[std::string("f_") + chars::to_string(conv)] = exact::to_string(rec.f);
      } catch (const std::exception &e) {
        row[std::string("b_") + chars::to_string(conv)] = nullptr;
      }
    }
    io::json disp;
    for (const auto &nw : spec.display_classes) {
      const std::size_t cls = g.class_of[g.element_of_word(nw.word)];
      disp[nw.name] = table.value(i, cls).to_string(spec.conductor);
    }
    row["display"] = disp;
    summary.push_back(row);
  }
  std::ofstream(out_path) << chars::character_bundle_to_json(b).dump() << "\n";
  std::ofstream(summary_path) << summary.dump(1) << "\n";
  std::cerr << spec.name << ": " << r << " characters written\n";
  return 0;
}
