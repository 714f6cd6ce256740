#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "cmfam/chars/table.hpp"
#include "cmfam/group/bundle.hpp"
#include "cmfam/group/group.hpp"

namespace fixtures {

inline std::filesystem::path data_dir() { return CMFAM_DATA_DIR; }
inline std::filesystem::path bundle(const std::string &group, const std::string &file) {
  return data_dir() / "bundles" / group / file;
}

struct Loaded {
  cmfam::group::GroupData group;
  cmfam::chars::CharacterTable table;
};

// Shipped group and validated table, enumerated once per test binary.
inline const Loaded &load(const std::string &name) {
  static std::mutex m;
  static std::map<std::string, std::unique_ptr<Loaded>> cache;
  std::lock_guard lock(m);
  auto &slot = cache[name];
  if (!slot) {
    auto l = std::make_unique<Loaded>();
    l->group = cmfam::group::enumerate_group(cmfam::group::load_group_bundle(bundle(name, "group.json")));
    l->table = cmfam::chars::load_and_validate(
        cmfam::chars::load_character_bundle(bundle(name, "chars.json")), l->group);
    slot = std::move(l);
  }
  return *slot;
}

inline const char *const kGroups[] = {"G4", "G5", "G6", "G8", "G10", "G23", "G24", "G25", "G26", "S6"};

} // namespace fixtures
