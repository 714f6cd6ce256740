#include "cmfam/chars/table.hpp"

#include <map>
#include <regex>
#include <set>

namespace cmfam::chars {

using io::json;
using jp = json::json_pointer;

CharacterBundle parse_character_bundle(const json &doc, const std::string &origin) {
  io::Reader r(doc, origin);
  if (!doc.is_object())
    r.fail(jp(""), "expected an object");
  CharacterBundle b;
  b.group = r.string_at(jp("/group"));
  b.conductor = static_cast<int>(r.int_at(jp("/conductor")));
  if (b.conductor <= 0 || b.conductor > 420)
    r.fail(jp("/conductor"), "conductor must lie in 1..420");
  b.labels = r.string_array_at(jp("/labels"));

  const json &fps = r.array_at(jp("/class_fingerprints"));
  for (std::size_t i = 0; i < fps.size(); ++i) {
    const jp p = jp("/class_fingerprints") / i;
    ClassFingerprint f;
    const long size = r.int_at(p / "size");
    const long order = r.int_at(p / "order");
    if (size <= 0)
      r.fail(p / "size", "class size must be positive");
    if (order <= 0)
      r.fail(p / "order", "element order must be positive");
    f.size = static_cast<std::size_t>(size);
    f.order = static_cast<int>(order);
    f.trace = r.cyclotomic_at(p / "trace", b.conductor);
    f.det = r.cyclotomic_at(p / "det", b.conductor);
    b.fingerprints.push_back(std::move(f));
  }

  const json &rows = r.array_at(jp("/values"));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const jp p = jp("/values") / i;
    const json &row = r.array_at(p);
    if (row.size() != fps.size())
      r.fail(p, "row has " + std::to_string(row.size()) + " entries, expected " +
                    std::to_string(fps.size()));
    std::vector<Cyclotomic> vals;
    for (std::size_t j = 0; j < row.size(); ++j)
      vals.push_back(r.cyclotomic_at(p / j, b.conductor));
    b.values.push_back(std::move(vals));
  }
  if (b.values.size() != b.labels.size())
    r.fail(jp("/values"), "expected one row per label");

  if (r.has(jp("/degrees")))
    for (long d : r.int_array_at(jp("/degrees")))
      b.degrees.push_back(static_cast<int>(d));

  if (r.has(jp("/column_pins"))) {
    const json &pins = r.array_at(jp("/column_pins"));
    for (std::size_t i = 0; i < pins.size(); ++i) {
      const jp p = jp("/column_pins") / i;
      ColumnPin pin;
      const long col = r.int_at(p / "column");
      if (col < 0 || col >= static_cast<long>(fps.size()))
        r.fail(p / "column", "column index out of range");
      pin.column = static_cast<std::size_t>(col);
      for (long g : r.int_array_at(p / "element_word"))
        pin.word.push_back(static_cast<int>(g));
      b.column_pins.push_back(std::move(pin));
    }
  }
  if (r.has(jp("/provenance")))
    b.provenance = r.string_at(jp("/provenance"));
  return b;
}

CharacterBundle load_character_bundle(const std::filesystem::path &path) {
  return parse_character_bundle(io::read_json_file(path), path.string());
}

json character_bundle_to_json(const CharacterBundle &b) {
  json doc;
  doc["group"] = b.group;
  doc["conductor"] = b.conductor;
  doc["labels"] = b.labels;
  json fps = json::array();
  for (const auto &f : b.fingerprints)
    fps.push_back({{"size", f.size},
                   {"order", f.order},
                   {"trace", io::cyclotomic_to_json(f.trace, b.conductor)},
                   {"det", io::cyclotomic_to_json(f.det, b.conductor)}});
  doc["class_fingerprints"] = fps;
  json rows = json::array();
  for (const auto &row : b.values) {
    json jr = json::array();
    for (const auto &v : row)
      jr.push_back(io::cyclotomic_to_json(v, b.conductor));
    rows.push_back(jr);
  }
  doc["values"] = rows;
  if (!b.degrees.empty())
    doc["degrees"] = b.degrees;
  json pins = json::array();
  for (const auto &p : b.column_pins)
    pins.push_back({{"column", p.column}, {"element_word", p.word}});
  doc["column_pins"] = pins;
  doc["provenance"] = b.provenance;
  return doc;
}

long CharacterTable::dim(std::size_t ch) const {
  return values[ch][0].rational_value().to_int64();
}

std::optional<std::size_t> CharacterTable::find_label(const std::string &label) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label)
      return i;
  return std::nullopt;
}

Cyclotomic inner_product(const group::GroupData &g, const std::vector<Cyclotomic> &a,
                         const std::vector<Cyclotomic> &b) {
  Cyclotomic acc;
  for (std::size_t c = 0; c < g.classes.size(); ++c)
    acc += Cyclotomic(static_cast<long>(g.classes[c].size)) * a[c] * b[c].conj();
  return acc / Cyclotomic(static_cast<long>(g.order()));
}

namespace {

bool fingerprint_matches(const ClassFingerprint &f, const group::ConjugacyClass &c) {
  return f.size == c.size && f.order == c.element_order && f.trace == c.trace && f.det == c.det;
}

std::string fingerprint_text(const ClassFingerprint &f, int conductor) {
  return "(size " + std::to_string(f.size) + ", order " + std::to_string(f.order) + ", trace " +
         f.trace.to_string(conductor) + ", det " + f.det.to_string(conductor) + ")";
}

} // namespace

CharacterTable load_and_validate(const CharacterBundle &bundle, const group::GroupData &g) {
  using io::ValidationError;
  const std::string where = "character table for " + bundle.group + ": ";
  if (bundle.group != g.spec.name)
    throw ValidationError(where + "bundle belongs to " + bundle.group + ", group is " + g.spec.name);
  const std::size_t r = g.classes.size();
  if (bundle.fingerprints.size() != r)
    throw ValidationError(where + std::to_string(bundle.fingerprints.size()) +
                          " columns but the group has " + std::to_string(r) + " classes");
  if (bundle.labels.size() != r)
    throw ValidationError(where + std::to_string(bundle.labels.size()) +
                          " characters but the group has " + std::to_string(r) + " classes");
  {
    std::set<std::string> seen;
    for (const auto &l : bundle.labels)
      if (!seen.insert(l).second)
        throw ValidationError(where + "duplicate label " + l);
  }

  // Column matching: pins first, then unique fingerprint matches.
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> match(r, kUnset);
  std::vector<bool> taken(r, false);
  for (const auto &pin : bundle.column_pins) {
    std::size_t el;
    try {
      el = g.element_of_word(pin.word);
    } catch (const std::exception &e) {
      throw ValidationError(where + "column pin " + std::to_string(pin.column) + ": " + e.what());
    }
    const std::size_t cls = g.class_of[el];
    if (!fingerprint_matches(bundle.fingerprints[pin.column], g.classes[cls]))
      throw ValidationError(where + "column " + std::to_string(pin.column) +
                            " is pinned to a class with a different fingerprint");
    if (taken[cls] || match[pin.column] != kUnset)
      throw ValidationError(where + "conflicting column pins at column " +
                            std::to_string(pin.column));
    match[pin.column] = cls;
    taken[cls] = true;
  }
  for (std::size_t col = 0; col < r; ++col) {
    if (match[col] != kUnset)
      continue;
    std::vector<std::size_t> candidates;
    for (std::size_t c = 0; c < r; ++c)
      if (fingerprint_matches(bundle.fingerprints[col], g.classes[c]))
        candidates.push_back(c);
    if (candidates.empty())
      throw ValidationError(where + "no class matches the fingerprint of column " +
                            std::to_string(col) + " " +
                            fingerprint_text(bundle.fingerprints[col], g.spec.conductor));
    if (candidates.size() > 1)
      throw ValidationError(where + "fingerprint of column " + std::to_string(col) +
                            " is ambiguous (" + std::to_string(candidates.size()) +
                            " classes); add a column pin");
    if (taken[candidates[0]])
      throw ValidationError(where + "two columns match the same class");
    match[col] = candidates[0];
    taken[candidates[0]] = true;
  }

  CharacterTable t;
  t.group = bundle.group;
  t.labels = bundle.labels;
  t.column_match = match;
  t.degrees = bundle.degrees.empty() ? g.spec.degrees : bundle.degrees;
  if (t.degrees != g.spec.degrees)
    throw ValidationError(where + "invariant degrees differ from the group bundle");
  t.values.assign(r, std::vector<Cyclotomic>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t col = 0; col < r; ++col)
      t.values[i][match[col]] = bundle.values[i][col];

  Polynomial p = poincare_series(t.degrees);
  if (p.eval(exact::Rational(1)) != exact::Rational(static_cast<long>(g.order())))
    throw ValidationError(where + "product of invariant degrees is not the group order " +
                          std::to_string(g.order()));

  exact::Rational sum_sq(0);
  for (std::size_t i = 0; i < r; ++i) {
    const Cyclotomic &d = t.values[i][0];
    if (!d.is_rational() || !d.rational_value().is_integer() || d.rational_value().sign() <= 0)
      throw ValidationError(where + "degree of " + t.labels[i] + " is not a positive integer");
    sum_sq += d.rational_value() * d.rational_value();
  }
  if (sum_sq != exact::Rational(static_cast<long>(g.order())))
    throw ValidationError(where + "sum of squared degrees is " + sum_sq.to_string() +
                          ", expected " + std::to_string(g.order()));

  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i; j < r; ++j) {
      const Cyclotomic ip = inner_product(g, t.values[i], t.values[j]);
      const bool ok = i == j ? ip.is_one() : ip.is_zero();
      if (!ok)
        throw ValidationError(where + "orthogonality fails for " + t.labels[i] + " and " +
                              t.labels[j] + " (inner product " + ip.to_string() + ")");
    }
  return t;
}

std::optional<Label> parse_label(const std::string &label) {
  static const std::regex re(R"(phi\{(\d+),(\d+)\}('*))");
  std::smatch m;
  if (!std::regex_match(label, m, re))
    return std::nullopt;
  return Label{std::stol(m[1]), std::stol(m[2]), m[3]};
}

std::string pretty_label(const std::string &label) {
  auto l = parse_label(label);
  if (!l)
    return label;
  return "φ_{" + std::to_string(l->d) + "," + std::to_string(l->b) + "}" + l->primes;
}

const char *to_string(Convention c) { return c == Convention::plain ? "plain" : "conjugate"; }

Polynomial poincare_series(const std::vector<int> &degrees) {
  Polynomial p(exact::Rational(1));
  for (int d : degrees) {
    std::vector<exact::Rational> c(static_cast<std::size_t>(d), exact::Rational(1));
    p *= Polynomial(std::move(c));
  }
  return p;
}

namespace {

/// D(t) / det(1 - w t) per class with D = prod (1 - t^{d_i}).
std::vector<exact::CyclotomicPolynomial> class_kernels(const group::GroupData &g,
                                                       const std::vector<int> &degrees) {
  using CP = exact::CyclotomicPolynomial;
  CP d(Cyclotomic(1));
  for (int di : degrees)
    d *= CP(Cyclotomic(1)) - CP::monomial(static_cast<std::size_t>(di), Cyclotomic(1));
  std::vector<CP> out;
  for (const auto &c : g.classes) {
    CP q = d;
    for (const auto &ev : c.eigenvalues) {
      const CP lin(std::vector<Cyclotomic>{Cyclotomic(1), -ev});
      auto [quo, rem] = divmod(q, lin);
      if (!rem.is_zero())
        throw FakeDegreeError("det(1 - wt) does not divide the product of (1 - t^d_i) for " +
                              g.spec.name + "; eigenvalue or degree data is inconsistent");
      q = std::move(quo);
    }
    out.push_back(std::move(q));
  }
  return out;
}

FakeDegreeRecord certify(const exact::CyclotomicPolynomial &raw, const CharacterTable &t,
                         std::size_t row, long max_degree) {
  const std::string who = "fake degree of " + t.labels[row] + ": ";
  Polynomial f;
  try {
    f = exact::demote(raw);
  } catch (const std::domain_error &) {
    throw FakeDegreeError(who + "irrational coefficient");
  }
  for (const auto &c : f.coeffs())
    if (!c.is_integer() || c.sign() < 0)
      throw FakeDegreeError(who + "coefficient " + c.to_string() +
                            " is not a nonnegative integer");
  if (f.is_zero())
    throw FakeDegreeError(who + "zero polynomial");
  if (f.degree() > max_degree)
    throw FakeDegreeError(who + "degree exceeds the number of reflections");
  const long d = t.dim(row);
  if (f.eval(exact::Rational(1)) != exact::Rational(d))
    throw FakeDegreeError(who + "value at 1 differs from the character degree");
  FakeDegreeRecord rec;
  rec.character = row;
  rec.b = f.trailing_degree();
  rec.d = d;
  rec.f = std::move(f);
  return rec;
}

FakeDegreeRecord fake_degree_from_kernels(const CharacterTable &t, const group::GroupData &g,
                                          const std::vector<exact::CyclotomicPolynomial> &k,
                                          std::size_t row, Convention convention) {
  exact::CyclotomicPolynomial acc;
  for (std::size_t c = 0; c < g.classes.size(); ++c) {
    Cyclotomic v = t.value(row, c);
    if (convention == Convention::conjugate)
      v = v.conj();
    if (v.is_zero())
      continue;
    acc += k[c] * exact::CyclotomicPolynomial(Cyclotomic(static_cast<long>(g.classes[c].size)) * v);
  }
  acc *= exact::CyclotomicPolynomial(Cyclotomic(exact::Rational(1, static_cast<long>(g.order()))));
  long max_degree = 0;
  for (int d : t.degrees)
    max_degree += d - 1;
  return certify(acc, t, row, max_degree);
}

} // namespace

FakeDegreeRecord fake_degree(const CharacterTable &t, const group::GroupData &g, std::size_t row,
                             Convention convention) {
  return fake_degree_from_kernels(t, g, class_kernels(g, t.degrees), row, convention);
}

FakeDegrees fake_degrees(const CharacterTable &t, const group::GroupData &g) {
  const auto kernels = class_kernels(g, t.degrees);
  struct Attempt {
    Convention convention;
    std::optional<std::vector<FakeDegreeRecord>> records;
    std::string error;
    bool labels_agree = false;
  };
  std::vector<Attempt> attempts;
  for (Convention c : {Convention::plain, Convention::conjugate}) {
    Attempt a{c, std::nullopt, {}, false};
    try {
      std::vector<FakeDegreeRecord> recs;
      for (std::size_t i = 0; i < t.size(); ++i)
        recs.push_back(fake_degree_from_kernels(t, g, kernels, i, c));
      a.labels_agree = true;
      for (const auto &rec : recs) {
        auto l = parse_label(t.labels[rec.character]);
        if (!l || l->d != rec.d || l->b != static_cast<long>(rec.b))
          a.labels_agree = false;
      }
      a.records = std::move(recs);
    } catch (const FakeDegreeError &e) {
      a.error = e.what();
    }
    attempts.push_back(std::move(a));
  }
  for (auto &a : attempts)
    if (a.records && a.labels_agree)
      return {a.convention, std::move(*a.records)};
  for (auto &a : attempts)
    if (a.records)
      return {a.convention, std::move(*a.records)};
  throw FakeDegreeError(attempts[0].error);
}

} // namespace cmfam::chars
