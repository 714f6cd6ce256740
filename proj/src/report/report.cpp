#include "cmfam/report/report.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "cmfam/group/bundle.hpp"
#include "cmfam/io/errors.hpp"

namespace cmfam::report {

namespace fs = std::filesystem;

std::vector<std::string> available_groups(const fs::path &bundles) {
  std::vector<std::string> out;
  std::error_code ec;
  if (!fs::is_directory(bundles, ec))
    throw io::MissingInputError("bundle directory " + bundles.string() + " does not exist");
  for (const auto &entry : fs::directory_iterator(bundles))
    if (entry.is_directory() && fs::exists(entry.path() / "group.json"))
      out.push_back(entry.path().filename().string());
  std::sort(out.begin(), out.end());
  return out;
}

Analysis analyze(const std::string &name, const Options &opts) {
  const fs::path dir = opts.bundles / name;
  const fs::path group_file = dir / "group.json";
  const fs::path chars_file = dir / "chars.json";
  if (!fs::exists(group_file))
    throw io::MissingInputError("no group bundle for " + name + " (expected " + group_file.string() + ")");
  if (!fs::exists(chars_file))
    throw io::MissingInputError("no character bundle for " + name + " (expected " +
                                chars_file.string() + ")");

  Analysis a;
  a.group = group::enumerate_group(group::load_group_bundle(group_file));
  const auto &g = a.group;
  a.table = chars::load_and_validate(chars::load_character_bundle(chars_file), g);
  a.fake = chars::fake_degrees(a.table, g);
  a.poincare = chars::poincare_series(g.spec.degrees);
  a.euler = euler::compute_euler(a.table, g, std::max(1u, opts.jobs));
  a.sharp_perm = euler::sharp_permutation(g);

  a.ss = supersingular::supersingular_report(a.fake.records, a.poincare);
  a.classification = supersingular::classify_families(a.euler.generic_partition, a.ss.flags);
  a.cm = supersingular::generic_cm_families(a.euler.generic_partition, a.classification);

  a.class_names.assign(g.classes.size(), std::string());
  for (const auto &w : g.spec.display_classes) {
    const std::size_t cls = g.class_of[g.element_of_word(w.word)];
    if (a.class_names[cls].empty())
      a.class_names[cls] = w.name;
  }

  if (opts.sample_points > 0) {
    const auto points = euler::generic_points(a.euler, opts.sample_points, opts.seed);
    a.sampled_points = points.size();
    for (const auto &pt : points)
      if (!(euler::specialize_partition(a.euler, a.table.size(), pt) == a.euler.generic_partition)) {
        a.sampling_agrees = false;
        break;
      }
  }

  const fs::path rq = dir / "rouquier.json";
  if (fs::exists(rq)) {
    a.rouquier = rouquier::load_rouquier_bundle(rq);
    if (a.cm.certified)
      a.martino = rouquier::martino_check(a.table, *a.cm.partition, a.euler.variety, a.sharp_perm,
                                          *a.rouquier);
  }
  return a;
}

std::string class_label(const Analysis &a, std::size_t cls) {
  if (!a.class_names[cls].empty())
    return a.class_names[cls];
  const auto &c = a.group.classes[cls];
  return "r[" + std::to_string(c.orbit) + "," + std::to_string(c.j) + "]";
}

namespace {

const char *yes_no(bool b) { return b ? "true" : "false"; }

std::string cyclo_text(const exact::Cyclotomic &c, int conductor) {
  try {
    return c.to_string(conductor);
  } catch (const std::exception &) {
    return c.to_string();
  }
}

std::string form_text(const exact::LinearForm &f, int conductor) {
  try {
    return f.to_string(conductor);
  } catch (const std::exception &) {
    return f.to_string();
  }
}

std::string join_labels(const Analysis &a, const std::vector<std::size_t> &members) {
  std::vector<std::string> labels;
  for (auto m : members)
    labels.push_back(a.table.labels[m]);
  std::sort(labels.begin(), labels.end());
  std::string s;
  for (const auto &l : labels)
    s += (s.empty() ? "" : ",") + l;
  return s;
}

std::string param_list(const std::vector<exact::ParamIndex> &order) {
  std::string s;
  for (const auto &p : order)
    s += (s.empty() ? "" : ",") + p.to_string();
  return s;
}

} // namespace

std::vector<Record> build_records(const Analysis &a, const Options &opts) {
  const auto &g = a.group;
  const std::string &name = g.spec.name;
  const int N = g.spec.conductor;
  std::vector<Record> out;
  auto rec = [&](const char *type) -> Record & {
    out.emplace_back(type);
    out.back().set("group", name);
    return out.back();
  };

  rec("group")
      .set("order", std::to_string(g.order()))
      .set("classes", std::to_string(g.classes.size()))
      .set("characters", std::to_string(a.table.size()))
      .set("conductor", std::to_string(N))
      .set("rank", std::to_string(g.spec.dim))
      .set("reflections", std::to_string(g.reflections.size()))
      .set("degrees", [&] {
        std::string s;
        for (int d : g.spec.degrees)
          s += (s.empty() ? "" : ",") + std::to_string(d);
        return s;
      }())
      .set("fake_convention", chars::to_string(a.fake.convention));

  rec("parameters").set("coordinates", param_list(a.euler.order)).set("count", std::to_string(a.euler.order.size()));

  for (std::size_t cls : g.reflection_classes()) {
    const auto &c = g.classes[cls];
    rec("reflection_class")
        .set("name", class_label(a, cls))
        .set("order", std::to_string(c.element_order))
        .set("length", std::to_string(c.size))
        .set("orbit", std::to_string(c.orbit))
        .set("j", std::to_string(c.j))
        .set("epsilon", cyclo_text(*c.epsilon, N))
        .set("cform", form_text(a.euler.c_forms.at(cls), N));
  }

  for (const auto &o : g.orbits)
    rec("hyperplane_orbit")
        .set("omega", std::to_string(o.omega))
        .set("e", std::to_string(o.e))
        .set("hyperplanes", std::to_string(o.hyperplanes.size()));

  std::vector<std::size_t> display;
  for (std::size_t cls = 0; cls < g.classes.size(); ++cls)
    if (!a.class_names[cls].empty())
      display.push_back(cls);
  for (std::size_t ch = 0; ch < a.table.size(); ++ch) {
    const auto &f = a.fake.records[ch];
    auto &r = rec("character")
                  .set("label", a.table.labels[ch])
                  .set("d", std::to_string(f.d))
                  .set("b", std::to_string(f.b))
                  .set("fake", exact::to_string(f.f))
                  .set("omega", a.euler.omega[ch].to_string())
                  .set("ss", a.ss.flags[ch] ? "y" : "n");
    for (std::size_t cls : display)
      r.set("value." + a.class_names[cls], cyclo_text(a.table.value(ch, cls), N));
  }

  for (const auto &b : a.classification.blocks)
    rec("family")
        .set("kind", "euler")
        .set("members", join_labels(a, b.members))
        .set("size", std::to_string(b.members.size()))
        .set("verdict", supersingular::to_string(b.kind))
        .set("rule", b.rule);
  rec("partition")
      .set("kind", "generic_euler")
      .set("blocks", std::to_string(a.euler.generic_partition.blocks().size()))
      .set("nonsingleton", std::to_string(a.euler.generic_partition.nonsingleton_count()));
  rec("cm")
      .set("status", a.cm.certified ? "certified" : "refused")
      .set("bad_census", a.classification.bad_census());
  if (a.cm.certified) {
    for (const auto &b : a.cm.partition->blocks())
      if (b.size() > 1)
        rec("family").set("kind", "cm").set("members", join_labels(a, b)).set("size", std::to_string(b.size()));
  } else {
    for (const auto &b : a.cm.bad_blocks)
      rec("evidence").set("text", "cannot certify {" + join_labels(a, b.members) + "}: " + b.rule);
  }

  const auto &v = a.euler.variety;
  for (std::size_t i = 0; i < v.orbits.size(); ++i) {
    const auto &o = v.orbits[i];
    rec("orbit")
        .set("rep", euler::to_string(o.representative))
        .set("size", std::to_string(o.members.size()))
        .set("index", std::to_string(i + 1));
    for (const auto &p : o.members)
      rec("plane").set("normal", euler::to_string(p)).set("orbit", std::to_string(i + 1));
  }
  rec("variety")
      .set("planes", std::to_string(v.planes.size()))
      .set("orbits", std::to_string(v.orbits.size()))
      .set("coordinates", param_list(a.euler.order))
      .set("sharp_stable", yes_no(euler::sharp(v, a.sharp_perm).planes == v.planes));

  rec("sampling")
      .set("seed", std::to_string(opts.seed))
      .set("points", std::to_string(a.sampled_points))
      .set("agrees", yes_no(a.sampling_agrees));

  if (a.martino) {
    const auto &m = *a.martino;
    rec("martino")
        .set("generic_equal", yes_no(m.generic_equal))
        .set("cm_unions_of_rouquier", yes_no(m.cm_unions_of_rouquier))
        .set("rou_in_eu", yes_no(m.rou_in_eu))
        .set("sharp_stable", yes_no(m.sharp_stable))
        .set("essential", std::to_string(m.essential_count))
        .set("counterexample", yes_no(!m.generic_equal));
    for (const auto &e : m.evidence)
      rec("evidence").set("text", e);
  } else {
    rec("martino")
        .set("status", "unavailable")
        .set("reason", !a.rouquier ? "no-rouquier-bundle" : "cm-not-certified");
  }
  return out;
}

std::string render_machine(const std::vector<Record> &records) {
  std::string s;
  for (const auto &r : records)
    s += to_line(r) + "\n";
  return s;
}

namespace {

// Terminal columns of a UTF-8 string, counting code points.
std::size_t display_width(const std::string &s) {
  std::size_t w = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80)
      ++w;
  return w;
}

std::string pad(const std::string &s, std::size_t width) {
  const std::size_t w = display_width(s);
  return w >= width ? s : s + std::string(width - w, ' ');
}

// Left-aligned table with two-space gutters.
std::string table_text(const std::vector<std::vector<std::string>> &rows, const std::string &indent) {
  std::vector<std::size_t> widths;
  for (const auto &r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (widths.size() <= i)
        widths.push_back(0);
      widths[i] = std::max(widths[i], display_width(r[i]));
    }
  std::string out;
  for (const auto &r : rows) {
    std::string line = indent;
    for (std::size_t i = 0; i < r.size(); ++i)
      line += i + 1 == r.size() ? r[i] : pad(r[i], widths[i] + 2);
    out += line + "\n";
  }
  return out;
}

std::string pretty_members(const Analysis &a, const std::vector<std::size_t> &members) {
  std::string s = "{";
  for (std::size_t i = 0; i < members.size(); ++i)
    s += (i ? ", " : "") + chars::pretty_label(a.table.labels[members[i]]);
  return s + "}";
}

} // namespace

std::string render_text(const Analysis &a, const Options &opts) {
  const auto &g = a.group;
  const int N = g.spec.conductor;
  std::ostringstream os;
  os << "== " << g.spec.name << " ==\n";
  os << "order " << g.order() << ", rank " << g.spec.dim << ", " << g.classes.size() << " classes, "
     << g.reflections.size() << " reflections, field Q(z) with z = exp(2 pi i/" << N << ")\n";
  os << "parameters: " << param_list(a.euler.order) << "\n\n";

  os << "Reflection classes\n";
  std::vector<std::vector<std::string>> rows{{"class", "order", "length", "orbit", "j", "c_k(s)"}};
  for (std::size_t cls : g.reflection_classes()) {
    const auto &c = g.classes[cls];
    rows.push_back({class_label(a, cls), std::to_string(c.element_order), std::to_string(c.size),
                    std::to_string(c.orbit), std::to_string(c.j), form_text(a.euler.c_forms.at(cls), N)});
  }
  os << table_text(rows, "  ") << "\n";

  os << "Characters (fake degrees use the " << chars::to_string(a.fake.convention) << " convention)\n";
  rows = {{"character", "ss"}};
  std::vector<std::size_t> display;
  for (std::size_t cls = 0; cls < g.classes.size(); ++cls)
    if (!a.class_names[cls].empty()) {
      display.push_back(cls);
      rows[0].push_back("λ(" + a.class_names[cls] + ")");
    }
  rows[0].push_back("ω_λ");
  for (std::size_t ch = 0; ch < a.table.size(); ++ch) {
    std::vector<std::string> row{chars::pretty_label(a.table.labels[ch]), a.ss.flags[ch] ? "y" : "n"};
    for (std::size_t cls : display)
      row.push_back(cyclo_text(a.table.value(ch, cls), N));
    row.push_back(a.euler.omega[ch].to_string());
    rows.push_back(std::move(row));
  }
  os << table_text(rows, "  ") << "\n";

  const auto &part = a.euler.generic_partition;
  os << "Generic Euler families: " << part.blocks().size() << " blocks, " << part.nonsingleton_count()
     << " non-singleton\n";
  for (const auto &b : a.classification.blocks)
    if (b.members.size() > 1)
      os << "  " << pretty_members(a, b.members) << "  " << supersingular::to_string(b.kind) << " ("
         << b.rule << ")\n";
  if (a.cm.certified)
    os << "Calogero-Moser families: certified, equal to the generic Euler families\n\n";
  else
    os << "Calogero-Moser families: REFUSED, bad families " << a.classification.bad_census() << "\n\n";

  const auto &v = a.euler.variety;
  const bool stable = euler::sharp(v, a.sharp_perm).planes == v.planes;
  os << "Euler variety: " << v.planes.size() << " hyperplanes in " << v.orbits.size()
     << " orbits, sharp-stable: " << (stable ? "yes" : "no") << "\n";
  rows = {{"orbit", "representative", "length"}};
  for (std::size_t i = 0; i < v.orbits.size(); ++i)
    rows.push_back({std::to_string(i + 1), "(" + euler::to_string(v.orbits[i].representative) + ")",
                    std::to_string(v.orbits[i].members.size())});
  os << table_text(rows, "  ");
  os << "sampling: " << a.sampled_points << " generic points (seed " << opts.seed << "), "
     << (a.sampling_agrees ? "all agree with the generic partition" : "DISAGREEMENT") << "\n\n";

  if (a.martino) {
    const auto &m = *a.martino;
    os << "Martino comparison\n";
    os << "  generic CM = generic Rouquier:   " << (m.generic_equal ? "yes" : "no") << "\n";
    os << "  CM blocks unions of Rouquier:    " << (m.cm_unions_of_rouquier ? "yes" : "no") << "\n";
    os << "  essential planes in variety:     " << (m.rou_in_eu ? "yes" : "no") << " (" << m.essential_count
       << " of " << v.planes.size() << ")\n";
    os << "  variety sharp-stable:            " << (m.sharp_stable ? "yes" : "no") << "\n";
    if (!m.generic_equal)
      os << "  verdict: COUNTER-EXAMPLE to the generic conjecture\n";
    for (const auto &e : m.evidence)
      os << "  - " << e << "\n";
  } else {
    os << "Martino comparison unavailable ("
       << (!a.rouquier ? "no Rouquier bundle" : "Calogero-Moser families not certified") << ")\n";
  }
  return os.str();
}

DiffResult diff_golden_text(const std::vector<Record> &report, const std::string &golden_text,
                            const fs::path &origin) {
  DiffResult res;
  res.file = origin;
  for (const auto &[line_no, golden] : parse_records(golden_text, origin.string())) {
    ++res.compared;
    const auto &key = primary_key(golden.type);
    const Record *match = nullptr;
    for (const auto &r : report) {
      if (r.type != golden.type)
        continue;
      bool same = true;
      for (const auto &k : key) {
        auto gi = golden.fields.find(k);
        auto ri = r.fields.find(k);
        if (gi == golden.fields.end() || ri == r.fields.end() || gi->second != ri->second) {
          same = false;
          break;
        }
      }
      if (same) {
        match = &r;
        break;
      }
    }
    res.line = line_no;
    if (!match) {
      res.pass = false;
      res.message = "no report record matches '" + to_line(golden) + "'";
      return res;
    }
    Record projected(golden.type);
    for (const auto &[k, v] : golden.fields) {
      auto it = match->fields.find(k);
      projected.fields[k] = it == match->fields.end() ? std::string("<missing>") : it->second;
    }
    const std::string want = to_line(golden);
    const std::string got = to_line(projected);
    if (want != got) {
      res.pass = false;
      for (const auto &[k, v] : golden.fields)
        if (projected.fields[k] != v) {
          res.message = golden.type + " field " + k + ": golden '" + v + "', report '" +
                        projected.fields[k] + "'";
          break;
        }
      return res;
    }
  }
  res.line = 0;
  return res;
}

DiffResult diff_golden(const std::vector<Record> &report, const fs::path &golden_dir) {
  if (!fs::is_directory(golden_dir))
    throw io::MissingInputError("golden directory " + golden_dir.string() + " does not exist");
  std::vector<fs::path> files;
  for (const auto &entry : fs::directory_iterator(golden_dir))
    if (entry.is_regular_file() && entry.path().extension() == ".golden")
      files.push_back(entry.path());
  if (files.empty())
    throw io::MissingInputError("no .golden files in " + golden_dir.string());
  std::sort(files.begin(), files.end());
  DiffResult total;
  for (const auto &f : files) {
    std::ifstream in(f, std::ios::binary);
    if (!in)
      throw io::MissingInputError("cannot open " + f.string());
    std::stringstream ss;
    ss << in.rdbuf();
    auto r = diff_golden_text(report, ss.str(), f);
    total.compared += r.compared;
    if (!r.pass) {
      r.compared = total.compared;
      return r;
    }
  }
  return total;
}

} // namespace cmfam::report
