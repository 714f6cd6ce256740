#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "cmfam/chars/table.hpp"
#include "cmfam/euler/euler.hpp"
#include "cmfam/group/group.hpp"
#include "cmfam/report/records.hpp"
#include "cmfam/rouquier/rouquier.hpp"
#include "cmfam/supersingular/supersingular.hpp"

namespace cmfam::report {

struct Options {
  std::filesystem::path bundles = "data/bundles";
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  std::size_t sample_points = 100;
};

/// Everything computed for one group, in pipeline order.
struct Analysis {
  group::GroupData group;
  chars::CharacterTable table;
  chars::FakeDegrees fake;
  exact::Polynomial poincare;
  euler::EulerData euler;
  euler::Permutation sharp_perm;
  supersingular::SupersingularReport ss;
  supersingular::FamilyClassification classification;
  supersingular::CmResult cm;
  std::optional<rouquier::RouquierBundle> rouquier;
  std::optional<rouquier::MartinoVerdict> martino;
  /// Class name per class index: display name if any, else empty.
  std::vector<std::string> class_names;
  std::size_t sampled_points = 0;
  bool sampling_agrees = true;
};

/// Bundle directory names under `bundles` that contain a group.json, sorted.
std::vector<std::string> available_groups(const std::filesystem::path &bundles);

/// Runs the full pipeline. Throws io::MissingInputError when the group or
/// character bundle is absent and the module errors on invalid data.
Analysis analyze(const std::string &group, const Options &opts);

/// Name of a reflection class: its display name, or r[omega,j].
std::string class_label(const Analysis &a, std::size_t cls);

/// Machine records in a fixed order.
std::vector<Record> build_records(const Analysis &a, const Options &opts);
std::string render_machine(const std::vector<Record> &records);
std::string render_text(const Analysis &a, const Options &opts);

/// A group whose Calogero-Moser partition could not be certified.
inline bool refused(const Analysis &a) { return !a.cm.certified; }

struct DiffResult {
  bool pass = true;
  std::size_t compared = 0;
  /// First divergence, e.g. "data/golden/G4/characters.golden:5: field omega ...".
  std::filesystem::path file;
  std::size_t line = 0;
  std::string message;
};

/// Compares report records against every *.golden file in `golden_dir`
/// (sorted by name). Each golden record is matched by type and primary key
/// and the report record, projected onto the golden's keys, must produce the
/// same line byte for byte. Throws io::MissingInputError when the directory
/// or its goldens are absent.
DiffResult diff_golden(const std::vector<Record> &report, const std::filesystem::path &golden_dir);

/// Same comparison against a single golden text.
DiffResult diff_golden_text(const std::vector<Record> &report, const std::string &golden_text,
                            const std::filesystem::path &origin);

} // namespace cmfam::report
