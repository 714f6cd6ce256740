#pragma once

#include <filesystem>
#include <string>

#include "cmfam/group/group.hpp"
#include "cmfam/io/json_util.hpp"

namespace cmfam::group {

/// Reads a group bundle: name, dim, conductor, generators, degrees and the
/// optional pinned_orbit_order, generator_names and display_classes fields.
MatrixGroupSpec parse_group_bundle(const io::json &doc, const std::string &origin);
MatrixGroupSpec load_group_bundle(const std::filesystem::path &path);

} // namespace cmfam::group
