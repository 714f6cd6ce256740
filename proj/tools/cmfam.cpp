// cmfam: per-group reports, golden comparison and bundle validation.

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <iostream>
#include <sstream>
#include <thread>

#include "cmfam/chars/table.hpp"
#include "cmfam/group/bundle.hpp"
#include "cmfam/io/errors.hpp"
#include "cmfam/io/json_util.hpp"
#include "cmfam/report/report.hpp"
#include "cmfam/rouquier/rouquier.hpp"

namespace fs = std::filesystem;
using namespace cmfam;

namespace {

enum Exit : int {
  ok = 0,
  usage = 1,
  parse_error = 2,
  validation_error = 3,
  refusal = 4,
  diff_fail = 5,
  missing_input = 6,
  internal_error = 7,
};

// Maps an in-flight exception to an exit code and a one-line message.
int classify(std::exception_ptr ep, std::string &msg) {
  try {
    std::rethrow_exception(ep);
  } catch (const io::ParseError &e) {
    msg = std::string("parse error: ") + e.what();
    return parse_error;
  } catch (const io::MissingInputError &e) {
    msg = std::string("missing input: ") + e.what();
    return missing_input;
  } catch (const io::ValidationError &e) {
    msg = std::string("validation error: ") + e.what();
    return validation_error;
  } catch (const group::EnumerationError &e) {
    msg = std::string("validation error: ") + e.what();
    return validation_error;
  } catch (const euler::ConsistencyError &e) {
    msg = std::string("consistency error: ") + e.what();
    return validation_error;
  } catch (const std::exception &e) {
    msg = std::string("internal error: ") + e.what();
    return internal_error;
  }
}

struct GroupOutcome {
  int code = ok;
  std::string out;
  std::string err;
};

struct Common {
  std::string group;
  bool all = false;
  std::string format = "text";
  std::string bundles = "data/bundles";
  std::string golden;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  std::size_t samples = 100;
};

std::vector<std::string> selected_groups(const Common &c) {
  if (c.all)
    return report::available_groups(c.bundles);
  return {c.group};
}

// Runs `task` for every group on up to `jobs` threads and returns outcomes
// in group order, so output does not depend on scheduling.
template <class Task>
std::vector<GroupOutcome> run_groups(const std::vector<std::string> &groups, unsigned jobs, Task task) {
  std::vector<GroupOutcome> results(groups.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < groups.size(); i = next++) {
      try {
        results[i] = task(groups[i]);
      } catch (...) {
        results[i].code = classify(std::current_exception(), results[i].err);
        results[i].err = groups[i] + ": " + results[i].err + "\n";
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(groups.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t)
    pool.emplace_back(worker);
  worker();
  for (auto &t : pool)
    t.join();
  return results;
}

// The first hard error wins; otherwise a refusal or diff failure is reported.
int combine(const std::vector<GroupOutcome> &results) {
  int code = ok;
  for (const auto &r : results) {
    std::cout << r.out;
    std::cerr << r.err;
    if (r.code != ok && r.code != refusal && r.code != diff_fail)
      return r.code;
    code = std::max(code, r.code);
  }
  return code;
}

report::Options options_for(const Common &c, std::size_t group_count) {
  report::Options o;
  o.bundles = c.bundles;
  o.seed = c.seed;
  o.sample_points = c.samples;
  // With several groups the parallelism goes across groups.
  o.jobs = group_count > 1 ? 1 : c.jobs;
  return o;
}

int cmd_report(const Common &c) {
  const auto groups = selected_groups(c);
  const auto opts = options_for(c, groups.size());
  auto results = run_groups(groups, c.jobs, [&](const std::string &g) {
    GroupOutcome r;
    const auto a = report::analyze(g, opts);
    if (c.format == "machine")
      r.out = report::render_machine(report::build_records(a, opts));
    else
      r.out = report::render_text(a, opts) + (groups.size() > 1 ? "\n" : "");
    if (report::refused(a)) {
      r.code = refusal;
      r.err = g + ": refusal: Calogero-Moser families cannot be certified (bad families " +
              a.classification.bad_census() + ")\n";
    }
    return r;
  });
  return combine(results);
}

int cmd_diff_golden(const Common &c) {
  const auto groups = selected_groups(c);
  const auto opts = options_for(c, groups.size());
  const fs::path golden_root =
      c.golden.empty() ? fs::path(c.bundles).parent_path() / "golden" : fs::path(c.golden);
  auto results = run_groups(groups, c.jobs, [&](const std::string &g) {
    GroupOutcome r;
    const fs::path dir = golden_root / g;
    if (!fs::is_directory(dir))
      throw io::MissingInputError("no goldens for " + g + " (expected " + dir.string() + ")");
    const auto a = report::analyze(g, opts);
    const auto d = report::diff_golden(report::build_records(a, opts), dir);
    if (d.pass) {
      r.out = "PASS " + g + " (" + std::to_string(d.compared) + " golden records)\n";
    } else {
      r.code = diff_fail;
      r.out = "FAIL " + g + " " + d.file.string() + ":" + std::to_string(d.line) + ": " + d.message + "\n";
    }
    return r;
  });
  return combine(results);
}

// Bundle kind from its JSON content.
std::string detect_kind(const io::json &doc) {
  if (doc.contains("generators"))
    return "group";
  if (doc.contains("essential_planes"))
    return "rouquier";
  if (doc.contains("labels") || doc.contains("values") || doc.contains("characters"))
    return "chars";
  return "unknown";
}

int cmd_validate(const std::string &path_text, std::string kind, std::string group_path) {
  const fs::path path(path_text);
  std::ostringstream os;
  try {
    const io::json doc = io::read_json_file(path);
    if (kind == "auto")
      kind = detect_kind(doc);
    auto sibling_group = [&]() -> group::GroupData {
      const fs::path gp = group_path.empty() ? path.parent_path() / "group.json" : fs::path(group_path);
      if (!fs::exists(gp))
        throw io::MissingInputError("need the group bundle " + gp.string() + " to validate " + path.string());
      return group::enumerate_group(group::load_group_bundle(gp));
    };
    if (kind == "group") {
      const auto spec = group::parse_group_bundle(doc, path.string());
      os << "ok parse " << spec.name << " (" << spec.generators.size() << " generators)\n";
      const auto g = group::enumerate_group(spec);
      os << "ok enumerate order=" << g.order() << " classes=" << g.classes.size() << "\n";
      const auto P = chars::poincare_series(spec.degrees);
      if (P.eval(exact::Rational(1)) != exact::Rational(static_cast<long>(g.order())))
        throw io::ValidationError(path.string() + "#/degrees: product of degrees is not |W| = " +
                                  std::to_string(g.order()));
      os << "ok degrees product=" << g.order() << "\n";
      std::size_t refl = 0;
      for (int d : spec.degrees)
        refl += static_cast<std::size_t>(d - 1);
      if (refl != g.reflections.size())
        throw io::ValidationError(path.string() + "#/degrees: sum of (d_i - 1) is " + std::to_string(refl) +
                                  ", the group has " + std::to_string(g.reflections.size()) + " reflections");
      os << "ok reflections count=" << refl << "\n";
    } else if (kind == "chars") {
      const auto b = chars::parse_character_bundle(doc, path.string());
      os << "ok parse " << b.group << " (" << b.labels.size() << " characters)\n";
      const auto g = sibling_group();
      const auto t = chars::load_and_validate(b, g);
      os << "ok fingerprints, orthogonality, degrees for " << t.size() << " characters\n";
      const auto fd = chars::fake_degrees(t, g);
      os << "ok fake degrees (" << chars::to_string(fd.convention) << " convention)\n";
    } else if (kind == "rouquier") {
      const auto b = rouquier::parse_rouquier_bundle(doc, path.string());
      os << "ok parse " << b.group << " (" << b.families.size() << " families, " << b.essential_planes.size()
         << " essential planes)\n";
      const auto g = sibling_group();
      const auto t = chars::load_and_validate(chars::load_character_bundle(path.parent_path() / "chars.json"), g);
      const auto part = rouquier::resolve_families(b, t);
      os << "ok families partition " << part.universe() << " characters\n";
      const auto planes = rouquier::essential_planes(b, euler::sharp_permutation(g));
      for (const auto &p : planes)
        if (p.size() != g.omega_bar.size())
          throw io::ValidationError(path.string() + "#/essential_planes: plane of dimension " +
                                    std::to_string(p.size()) + ", expected " + std::to_string(g.omega_bar.size()));
      os << "ok essential planes dimension=" << g.omega_bar.size() << "\n";
    } else {
      throw io::ParseError(path.string(), "cannot tell which kind of bundle this is; pass --kind");
    }
  } catch (...) {
    std::cout << os.str();
    std::string msg;
    const int code = classify(std::current_exception(), msg);
    std::cerr << msg << "\n";
    return code;
  }
  std::cout << os.str() << "valid " << path.string() << "\n";
  return ok;
}

void add_common(CLI::App *cmd, Common &c, bool with_format) {
  auto *g = cmd->add_option("--group", c.group, "Group name, e.g. G4");
  auto *a = cmd->add_flag("--all", c.all, "Every group with a bundle directory");
  g->excludes(a);
  a->excludes(g);
  if (with_format)
    cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "machine"}));
  cmd->add_option("--bundles", c.bundles, "Bundle root directory");
  cmd->add_option("--seed", c.seed, "Seed for generic-point sampling");
  cmd->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  cmd->add_option("--samples", c.samples, "Number of sampled generic points");
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Calogero-Moser and Euler families of complex reflection groups"};
  app.require_subcommand(1);

  Common report_opts, diff_opts;
  auto *report_cmd = app.add_subcommand("report", "Run the full pipeline and print a report");
  add_common(report_cmd, report_opts, true);
  auto *diff_cmd = app.add_subcommand("diff-golden", "Compare machine reports with golden files");
  add_common(diff_cmd, diff_opts, false);
  diff_cmd->add_option("--golden", diff_opts.golden, "Golden root (default: <bundles>/../golden)");

  std::string validate_path, validate_kind = "auto", validate_group;
  auto *validate_cmd = app.add_subcommand("validate", "Check load-time invariants of one bundle file");
  validate_cmd->add_option("path", validate_path, "Bundle file")->required();
  validate_cmd->add_option("--kind", validate_kind, "Bundle kind")
      ->check(CLI::IsMember({"auto", "group", "chars", "rouquier"}));
  validate_cmd->add_option("--group-bundle", validate_group, "Group bundle for character validation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int rc = app.exit(e);
    return rc == 0 ? ok : usage;
  }

  auto need_group = [](const Common &c) {
    if (!c.all && c.group.empty()) {
      std::cerr << "usage error: pass --group <name> or --all\n";
      return false;
    }
    return true;
  };

  try {
    if (report_cmd->parsed())
      return need_group(report_opts) ? cmd_report(report_opts) : usage;
    if (diff_cmd->parsed())
      return need_group(diff_opts) ? cmd_diff_golden(diff_opts) : usage;
    if (validate_cmd->parsed())
      return cmd_validate(validate_path, validate_kind, validate_group);
  } catch (...) {
    std::string msg;
    const int code = classify(std::current_exception(), msg);
    std::cerr << msg << "\n";
    return code;
  }
  return usage;
}
