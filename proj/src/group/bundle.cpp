#include "cmfam/group/bundle.hpp"

namespace cmfam::group {

using io::json;
using jp = json::json_pointer;

MatrixGroupSpec parse_group_bundle(const json &doc, const std::string &origin) {
  io::Reader r(doc, origin);
  if (!doc.is_object())
    r.fail(jp(""), "expected an object");
  MatrixGroupSpec spec;
  spec.name = r.string_at(jp("/name"));
  spec.dim = static_cast<int>(r.int_at(jp("/dim")));
  if (spec.dim <= 0 || spec.dim > 16)
    r.fail(jp("/dim"), "dimension must lie in 1..16");
  spec.conductor = static_cast<int>(r.int_at(jp("/conductor")));
  if (spec.conductor <= 0 || spec.conductor > 420)
    r.fail(jp("/conductor"), "conductor must lie in 1..420");

  const json &gens = r.array_at(jp("/generators"));
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const jp gp = jp("/generators") / g;
    const json &rows = r.array_at(gp);
    if (static_cast<int>(rows.size()) != spec.dim)
      r.fail(gp, "expected " + std::to_string(spec.dim) + " rows");
    Matrix m(spec.dim, spec.dim, spec.conductor);
    for (int i = 0; i < spec.dim; ++i) {
      const jp rp = gp / static_cast<std::size_t>(i);
      if (static_cast<int>(r.array_at(rp).size()) != spec.dim)
        r.fail(rp, "expected " + std::to_string(spec.dim) + " entries");
      for (int j = 0; j < spec.dim; ++j)
        m.set(i, j, r.cyclotomic_at(rp / static_cast<std::size_t>(j), spec.conductor));
    }
    spec.generators.push_back(std::move(m));
  }

  for (long d : r.int_array_at(jp("/degrees"))) {
    if (d <= 0)
      r.fail(jp("/degrees"), "invariant degrees must be positive");
    spec.degrees.push_back(static_cast<int>(d));
  }
  if (static_cast<int>(spec.degrees.size()) != spec.dim)
    r.fail(jp("/degrees"), "expected " + std::to_string(spec.dim) + " invariant degrees");

  if (r.has(jp("/pinned_orbit_order")))
    for (long g : r.int_array_at(jp("/pinned_orbit_order"))) {
      if (g < 0 || g >= static_cast<long>(spec.generators.size()))
        r.fail(jp("/pinned_orbit_order"), "generator index out of range");
      spec.pinned_orbit_order.push_back(static_cast<int>(g));
    }

  if (r.has(jp("/display_classes"))) {
    const json &dc = r.array_at(jp("/display_classes"));
    for (std::size_t i = 0; i < dc.size(); ++i) {
      const jp p = jp("/display_classes") / i;
      NamedWord w;
      w.name = r.string_at(p / "name");
      for (long g : r.int_array_at(p / "word")) {
        if (g < 0 || g >= static_cast<long>(spec.generators.size()))
          r.fail(p / "word", "generator index out of range");
        w.word.push_back(static_cast<int>(g));
      }
      spec.display_classes.push_back(std::move(w));
    }
  }
  return spec;
}

MatrixGroupSpec load_group_bundle(const std::filesystem::path &path) {
  return parse_group_bundle(io::read_json_file(path), path.string());
}

} // namespace cmfam::group
