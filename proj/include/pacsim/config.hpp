#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pacsim/mem_controller.hpp"
#include "pacsim/mitigations.hpp"
#include "pacsim/pacram.hpp"
#include "pacsim/timing.hpp"
#include "pacsim/workload.hpp"

namespace pacsim {

// ---- minimal TOML reader ------------------------------------------------
// Supports [table] / [a.b] headers, `key = value` with strings, integers,
// floats, booleans and single-line arrays of those, plus `#` comments.

struct TomlValue;
using TomlArray = std::vector<TomlValue>;
using TomlTable = std::map<std::string, TomlValue, std::less<>>;

struct TomlValue {
  std::variant<bool, std::int64_t, double, std::string, TomlArray, TomlTable> v;
  std::size_t line = 0;
};

TomlTable parse_toml(std::string_view text);

// ---- run configuration --------------------------------------------------

struct PacramSettings {
  bool enabled = false;
  std::string profile = "H5";
  RestorationLevel level{27};
  PacramMode mode = PacramMode::controller;
  bool periodic_ext = false;
  std::filesystem::path profiles;  // empty: bundled data/profiles.csv
};

struct WorkloadSettings {
  std::vector<std::filesystem::path> traces;  // one per core
  std::optional<SyntheticSpec> synthetic;     // used when no traces are given
  int cores = 1;                              // synthetic cores
  std::uint64_t instructions = 1'000'000;
  std::uint64_t warmup = 100'000;
  std::uint32_t width = 4;
  std::size_t llc_kb = 0;
  std::filesystem::path solo_cache;  // JSON cache of alone-IPCs; empty: none
};

struct AttackSettings {
  bool enabled = false;
  AttackSpec spec;
  std::uint64_t activations = 1'000'000;
};

struct SweepSettings {
  std::vector<std::uint32_t> nrh;
  std::vector<MitigationKind> mitigations;
  std::vector<std::string> pacram;  // "off" or "<module>@<level>"
  unsigned jobs = 1;
};

struct RunConfig {
  std::string preset = "ddr5_default";
  DeviceTimings timings = DeviceTimings::ddr5_default();
  Topology topo;
  ControllerConfig controller;
  MitigationKind mitigation = MitigationKind::none;
  MitigationParams mit;  // mit.nrh is the nominal threshold before PaCRAM scaling
  PacramSettings pacram;
  WorkloadSettings workload;
  AttackSettings attack;
  SweepSettings sweep;
  EnergyTable energy;
  std::uint64_t seed = 1;
  std::filesystem::path out_dir = "out";
  std::string run_id = "run";
  bool verify = false;
  bool write_log = true;
  std::filesystem::path base_dir;  // directory of the config file
};

/// Parses and validates. Relative paths resolve against `base_dir`.
RunConfig parse_config(std::string_view text, const std::filesystem::path& base_dir = {});
RunConfig load_config(const std::filesystem::path& path);
void validate(const RunConfig& cfg);

/// "S6@0.36" -> (module, level); "off" -> nullopt.
std::optional<std::pair<std::string, RestorationLevel>> parse_pacram_point(std::string_view s);
std::string pacram_label(const RunConfig& cfg);

}  // namespace pacsim
