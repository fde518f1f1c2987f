#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pacsim/timing.hpp"

namespace pacsim {

enum class Manufacturer { H, M, S };

/// Configuration parameters for one restoration level of one module.
struct PacramParams {
  std::uint32_t nrh_effective = 0;
  std::uint32_t n_pcr = 0;
  /// Full-charge-restoration interval as characterized; nullopt means every
  /// preventive refresh may be partial.
  std::optional<double> t_fcri_ns;

  friend bool operator==(const PacramParams&, const PacramParams&) = default;
};

struct LevelData {
  RestorationLevel level;
  /// Lowest observed N_RH. nullopt: no bitflips observed. 0: retention failure.
  std::optional<std::uint32_t> nrh;
  /// nullopt when the level is N/A for this module.
  std::optional<PacramParams> pacram;

  bool retention_failure() const { return nrh && *nrh == 0; }
  bool has_threshold() const { return nrh && *nrh > 0; }

  friend bool operator==(const LevelData&, const LevelData&) = default;
};

struct ChipProfile {
  std::string module_id;
  Manufacturer mfr = Manufacturer::H;
  std::vector<LevelData> levels;  // ordered from nominal downwards
  std::vector<std::string> warnings;

  /// N_RH at the nominal level, if bitflips were observed.
  std::optional<std::uint32_t> nrh_nominal() const;
  const LevelData* at(RestorationLevel level) const;
  /// True when PaCRAM parameters exist for the level (the nominal level is
  /// always applicable once a nominal N_RH exists).
  bool applicable(RestorationLevel level) const;

  friend bool operator==(const ChipProfile& a, const ChipProfile& b) {
    return a.module_id == b.module_id && a.mfr == b.mfr && a.levels == b.levels;
  }
};

enum class ProfileCheck {
  strict,   // inconsistent thresholds are a ValidationError
  lenient,  // inconsistencies are kept and listed in ChipProfile::warnings
};

/// Parses the profile CSV (`module,mfr,level,nrh,nrh_eff,n_pcr,t_fcri_ns`).
std::vector<ChipProfile> parse_profiles(std::istream& in, ProfileCheck check = ProfileCheck::strict);
std::vector<ChipProfile> load_profiles(const std::filesystem::path& path,
                                       ProfileCheck check = ProfileCheck::strict);
void write_profiles(std::ostream& out, std::span<const ChipProfile> profiles);

/// Path of the checked-in transcription of the characterization tables.
std::filesystem::path bundled_profiles_path();
const ChipProfile& find_profile(std::span<const ChipProfile> profiles, std::string_view id);

/// nrh_effective / nrh_nominal, floored to hundredths and capped at 1.
double nrh_reduction_ratio(const ChipProfile& profile, RestorationLevel level);

/// Latency of one preventive refresh (restore + precharge), in ns.
double preventive_refresh_latency(const DeviceTimings& timings, RestorationLevel level);

struct CostPoint {
  RestorationLevel level;
  std::uint32_t nrh = 0;
  double prev_ref_latency = 1.0;
  double prev_ref_count_rate = 1.0;
  double total_time_cost = 1.0;
  double total_energy_cost = 1.0;
};

enum class EnergyCostModel {
  count_times_time,     // count x total time
  count_times_latency,  // count x per-refresh energy (proportional to latency)
};

struct CostCurve {
  std::vector<CostPoint> points;
  std::vector<RestorationLevel> retention_failures;
};

CostCurve cost_curve(const ChipProfile& profile, const DeviceTimings& timings,
                     EnergyCostModel model = EnergyCostModel::count_times_time);

enum class CostMetric { time, energy };

/// Level with the lowest cost. Ties go to the larger factor.
RestorationLevel inflection_point(std::span<const CostPoint> curve, CostMetric metric);

/// curve.csv: one row per point plus flags marking both minima.
void write_curve_csv(std::ostream& out, const ChipProfile& profile, const CostCurve& curve);

}  // namespace pacsim
