// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Usage: acceptance [data-dir]

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "cmfam/io/errors.hpp"
#include "cmfam/report/report.hpp"

using namespace cmfam;
namespace fs = std::filesystem;

namespace {

const std::vector<std::string> kExceptional = {"G4", "G5", "G6", "G8", "G10", "G23", "G24", "G25", "G26"};
const std::vector<std::string> kAll = {"G4", "G5", "G6", "G8", "G10", "G23", "G24", "G25", "G26", "S6"};

struct GroupRun {
  report::Analysis analysis;
  std::vector<report::Record> records;
};

struct Criterion {
  bool ok = true;
  std::vector<std::string> notes;
  void fail(const std::string &why) {
    ok = false;
    notes.push_back(why);
  }
  void expect(bool cond, const std::string &why) {
    if (!cond)
      fail(why);
  }
};

std::string slurp(const fs::path &p) {
  std::ifstream in(p, std::ios::binary);
  if (!in)
    throw io::MissingInputError("cannot open " + p.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Golden records of one type restricted to the primary key plus `fields`.
std::string golden_subset(const fs::path &file, const std::string &type, const std::vector<std::string> &fields) {
  std::string out;
  for (const auto &[line, r] : report::parse_records(slurp(file), file.string())) {
    if (r.type != type)
      continue;
    report::Record sub(type);
    for (const auto &k : report::primary_key(type))
      sub.fields[k] = r.at(k);
    for (const auto &f : fields)
      if (auto it = r.fields.find(f); it != r.fields.end())
        sub.fields[f] = it->second;
    out += report::to_line(sub) + "\n";
  }
  return out;
}

void diff_into(Criterion &c, const std::string &group, const std::vector<report::Record> &recs,
               const std::string &golden, const fs::path &origin) {
  const auto d = report::diff_golden_text(recs, golden, origin);
  if (!d.pass)
    c.fail(group + ": " + origin.filename().string() + " record " + std::to_string(d.line) + ": " + d.message);
}

const report::Record *find(const std::vector<report::Record> &recs, const std::string &type) {
  for (const auto &r : recs)
    if (r.type == type)
      return &r;
  return nullptr;
}

std::string field(const std::vector<report::Record> &recs, const std::string &type, const std::string &key) {
  const auto *r = find(recs, type);
  if (!r)
    return "<no " + type + ">";
  auto it = r->fields.find(key);
  return it == r->fields.end() ? "<no " + key + ">" : it->second;
}

void print(int n, const std::string &title, const Criterion &c) {
  std::cout << "criterion " << n << ": " << (c.ok ? "PASS" : "FAIL") << "  " << title << "\n";
  for (const auto &note : c.notes)
    std::cout << "    " << note << "\n";
}

} // namespace

int main(int argc, char **argv) {
  const fs::path data = argc > 1 ? fs::path(argv[1]) : fs::path(CMFAM_DATA_DIR);
  const fs::path golden = data / "golden";
  report::Options opts;
  opts.bundles = data / "bundles";
  opts.seed = 20240601;
  opts.sample_points = 100;

  std::map<std::string, GroupRun> runs;
  std::map<std::string, std::string> load_errors;
  {
    std::vector<std::thread> pool;
    std::mutex m;
    for (const auto &g : kAll)
      pool.emplace_back([&, g] {
        try {
          GroupRun run;
          run.analysis = report::analyze(g, opts);
          run.records = report::build_records(run.analysis, opts);
          std::lock_guard lock(m);
          runs.emplace(g, std::move(run));
        } catch (const std::exception &e) {
          std::lock_guard lock(m);
          load_errors[g] = e.what();
        }
      });
    for (auto &t : pool)
      t.join();
  }
  auto available = [&](Criterion &c, const std::string &g) {
    if (runs.count(g))
      return true;
    c.fail(g + ": pipeline failed: " + load_errors[g]);
    return false;
  };

  int failures = 0;

  // 1. group facts
  {
    Criterion c;
    const std::map<std::string, std::string> orders = {{"G4", "24"},   {"G5", "72"},   {"G6", "48"},
                                                       {"G8", "96"},   {"G10", "288"}, {"G23", "120"},
                                                       {"G24", "336"}, {"G25", "648"}, {"G26", "1296"},
                                                       {"S6", "720"}};
    for (const auto &[g, order] : orders) {
      if (!available(c, g))
        continue;
      c.expect(field(runs[g].records, "group", "order") == order, g + ": order is not " + order);
      diff_into(c, g, runs[g].records, slurp(golden / g / "facts.golden"), golden / g / "facts.golden");
    }
    print(1, "group orders, reflection class orders, lengths and c_k forms", c);
    failures += !c.ok;
  }

  // 2. omega tables and character values
  {
    Criterion c;
    std::size_t rows = 0;
    for (const auto &g : kAll) {
      if (!available(c, g))
        continue;
      const fs::path f = golden / g / "characters.golden";
      std::vector<std::string> keep{"omega"};
      for (const auto &[line, r] : report::parse_records(slurp(f), f.string())) {
        ++rows;
        for (const auto &[k, v] : r.fields)
          if (k.rfind("value.", 0) == 0 && std::find(keep.begin(), keep.end(), k) == keep.end())
            keep.push_back(k);
      }
      diff_into(c, g, runs[g].records, golden_subset(f, "character", keep), f);
    }
    print(2, "omega forms and reflection values (" + std::to_string(rows) + " published rows)", c);
    failures += !c.ok;
  }

  // 3. supersingularity
  {
    Criterion c;
    for (const auto &g : kExceptional) {
      if (!available(c, g))
        continue;
      const fs::path f = golden / g / "characters.golden";
      diff_into(c, g, runs[g].records, golden_subset(f, "character", {"ss"}), f);
      if (g != "G4") {
        const auto &flags = runs[g].analysis.ss.flags;
        c.expect(std::count(flags.begin(), flags.end(), true) > 0, g + ": no supersingular character");
      }
    }
    print(3, "supersingularity flags; every group of index above 4 has one", c);
    failures += !c.ok;
  }

  // 4. generic Euler and CM partitions
  {
    Criterion c;
    // Sizes of the non-singleton blocks.
    const std::map<std::string, std::vector<std::size_t>> shapes = {
        {"G4", {}},           {"G25", {3}},          {"G5", {3}},
        {"G6", {2, 2, 2}},    {"G8", {2}},           {"G10", {2, 2, 2, 3, 3, 3, 3}},
        {"G23", {2, 2, 2}},   {"G24", {2, 3, 3}},    {"G26", {2, 2, 2, 2, 2}},
        {"S6", {2, 2}}};
    for (const auto &[g, shape] : shapes) {
      if (!available(c, g))
        continue;
      const auto &a = runs[g].analysis;
      std::vector<std::size_t> got;
      for (const auto &b : a.euler.generic_partition.blocks())
        if (b.size() > 1)
          got.push_back(b.size());
      std::sort(got.begin(), got.end());
      c.expect(got == shape, g + ": unexpected non-singleton block sizes");
      diff_into(c, g, runs[g].records, slurp(golden / g / "families.golden"), golden / g / "families.golden");
      if (g == "S6")
        c.expect(!a.cm.certified && a.classification.bad_census() == "2^2", "S6: expected a refusal with two bad pairs");
      else
        c.expect(a.cm.certified, g + ": CM partition not certified");
    }
    if (runs.count("G10"))
      c.expect(runs["G10"].analysis.euler.generic_partition.blocks().size() == 37, "G10: expected 37 blocks");
    if (runs.count("G25")) {
      const auto &a = runs["G25"].analysis;
      std::vector<std::string> triple;
      for (const auto &b : a.euler.generic_partition.blocks())
        if (b.size() == 3)
          for (auto i : b)
            triple.push_back(a.table.labels[i]);
      std::sort(triple.begin(), triple.end());
      c.expect(triple == std::vector<std::string>{"phi{3,6}", "phi{9,5}", "phi{9,7}"},
               "G25: the triple is not {phi{3,6}, phi{9,7}, phi{9,5}}");
    }
    print(4, "generic Euler families, CM certification, S6 refusal", c);
    failures += !c.ok;
  }

  // 5. Euler variety census
  {
    Criterion c;
    const std::map<std::string, std::size_t> planes = {{"G4", 6},   {"G5", 69}, {"G6", 22},  {"G8", 37}, {"G10", 300},
                                                       {"G23", 1},  {"G24", 1}, {"G25", 30}, {"G26", 169}};
    for (const auto &[g, n] : planes) {
      if (!available(c, g))
        continue;
      const auto &v = runs[g].analysis.euler.variety;
      c.expect(v.planes.size() == n, g + ": " + std::to_string(v.planes.size()) + " planes, expected " + std::to_string(n));
      c.expect(euler::sharp(v, runs[g].analysis.sharp_perm).planes == v.planes, g + ": not sharp-stable");
      diff_into(c, g, runs[g].records, slurp(golden / g / "variety.golden"), golden / g / "variety.golden");
    }
    print(5, "Euler variety plane counts, orbit lengths, sharp-stability", c);
    failures += !c.ok;
  }

  // 6. Martino verdicts
  {
    Criterion c;
    const std::map<std::string, std::size_t> essential = {{"G4", 6},  {"G5", 24}, {"G6", 16},  {"G8", 24}, {"G10", 81},
                                                          {"G23", 1}, {"G24", 1}, {"G25", 12}, {"G26", 31}};
    for (const auto &[g, n] : essential) {
      if (!available(c, g))
        continue;
      const auto &m = runs[g].analysis.martino;
      if (!m) {
        c.fail(g + ": no Martino verdict");
        continue;
      }
      c.expect(m->generic_equal == (g != "G25"), g + ": unexpected generic equality verdict");
      c.expect(m->cm_unions_of_rouquier, g + ": CM families are not unions of Rouquier families");
      c.expect(m->rou_in_eu, g + ": essential planes not contained in the Euler variety");
      c.expect(m->essential_count == n, g + ": " + std::to_string(m->essential_count) + " essential planes");
      diff_into(c, g, runs[g].records, slurp(golden / g / "martino.golden"), golden / g / "martino.golden");
    }
    print(6, "Martino verdicts (G25 counter-example, essential planes inside the variety)", c);
    failures += !c.ok;
  }

  // 7. property suites
  {
    Criterion c;
    std::mt19937_64 rng(opts.seed);
    for (const auto &g : kAll) {
      if (!available(c, g))
        continue;
      const auto &a = runs[g].analysis;
      exact::Polynomial sum;
      for (const auto &r : a.fake.records)
        sum = sum + exact::Polynomial::monomial(0, exact::Rational(a.table.dim(r.character))) * r.f;
      c.expect(sum == a.poincare, g + ": sum of dim * fake degree differs from P");
      c.expect(a.poincare.eval(exact::Rational(1)) == exact::Rational(static_cast<long>(a.group.order())),
               g + ": P(1) differs from |W|");
      std::size_t bad_pairs = 0;
      for (std::size_t i = 0; i < a.table.size(); ++i)
        for (std::size_t j = i + 1; j < a.table.size(); ++j)
          if (!(euler::p_form(a.table, a.group, i, j) == a.euler.omega[j] - a.euler.omega[i]))
            ++bad_pairs;
      c.expect(bad_pairs == 0, g + ": " + std::to_string(bad_pairs) + " pairs with p != omega_mu - omega_lambda");
      c.expect(a.sampled_points == 100 && a.sampling_agrees, g + ": sampled points disagree with the generic partition");
      for (const auto &p : a.euler.variety.planes)
        if (euler::sharp(euler::sharp(p, a.sharp_perm), a.sharp_perm) != p) {
          c.fail(g + ": sharp is not an involution");
          break;
        }
    }
    std::size_t law_failures = 0;
    for (int trial = 0; trial < 500; ++trial) {
      const std::size_t n = 1 + static_cast<std::size_t>(trial % 8);
      auto random_partition = [&] {
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        std::vector<std::size_t> ids(n);
        for (auto &x : ids)
          x = pick(rng);
        return euler::FamilyPartition::from_block_ids(ids);
      };
      const auto x = random_partition(), y = random_partition(), z = random_partition();
      if (!euler::refines(x, x))
        ++law_failures;
      if (euler::refines(x, y) && euler::refines(y, x) && !(x == y))
        ++law_failures;
      if (euler::refines(x, y) && euler::refines(y, z) && !euler::refines(x, z))
        ++law_failures;
    }
    c.expect(law_failures == 0, std::to_string(law_failures) + " refinement law violations");
    print(7, "fake-degree sums, P(1) = |W|, p = omega difference, 100 generic points, sharp involution, refinement laws", c);
    failures += !c.ok;
  }

  // 8. negative controls
  {
    Criterion c;
    if (available(c, "G4")) {
      const auto &g = runs["G4"].analysis.group;
      auto bundle = chars::load_character_bundle(opts.bundles / "G4" / "chars.json");
      bundle.values[3][2] = bundle.values[3][2] + exact::Cyclotomic(1);
      bool rejected = false;
      try {
        chars::load_and_validate(bundle, g);
      } catch (const io::ValidationError &) {
        rejected = true;
      }
      c.expect(rejected, "perturbed G4 table was accepted");

      // Alter one omega coefficient on a known golden line.
      const fs::path f = golden / "G4" / "characters.golden";
      std::istringstream in(slurp(f));
      std::string text, line;
      std::size_t line_no = 0, altered_line = 0;
      while (std::getline(in, line)) {
        ++line_no;
        if (altered_line == 0 && line.find("label=phi{2,3}") != std::string::npos) {
          const auto pos = line.find("omega=12*");
          if (pos != std::string::npos) {
            line.replace(pos, 9, "omega=13*");
            altered_line = line_no;
          }
        }
        text += line + "\n";
      }
      c.expect(altered_line != 0, "could not alter the golden");
      const auto d = report::diff_golden_text(runs["G4"].records, text, f);
      c.expect(!d.pass, "altered golden still passes");
      c.expect(d.line == altered_line, "diff points at record " + std::to_string(d.line) + ", altered record is " +
                                           std::to_string(altered_line));
      c.expect(d.message.find("omega") != std::string::npos, "diff message does not name the omega field");
    }
    print(8, "perturbed table rejected; altered golden fails at the altered row", c);
    failures += !c.ok;
  }

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
  return failures == 0 ? 0 : 1;
}
