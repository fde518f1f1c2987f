#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pacsim/chip_profiles.hpp"
#include "pacsim/command.hpp"
#include "pacsim/timing.hpp"

namespace pacsim {

enum class PacramMode { controller, ondie };

struct PacramConfig {
  std::string module_id;
  RestorationLevel level;
  double t_ras_red_ns = 0.0;
  std::uint32_t nrh_scaled = 0;
  std::uint32_t n_pcr = 1;
  double t_fcri_ns = 0.0;   // formula value, kept even when all_partial
  bool all_partial = false; // t_fcri >= t_refw
  PacramMode mode = PacramMode::controller;

  friend bool operator==(const PacramConfig&, const PacramConfig&) = default;
};

/// Full-charge-restoration interval: n_pcr * (nrh * t_rc + t_ras_red + t_rp).
double fcri_ns(std::uint32_t n_pcr, std::uint32_t nrh, double t_ras_red, const DeviceTimings& t);

/// Pulls (nrh_eff, n_pcr) for `level` and computes t_FCRI.
/// Throws NotApplicable for the nominal level or levels without parameters.
PacramConfig derive_config(const ChipProfile& profile, RestorationLevel level,
                           const DeviceTimings& timings);

/// Multiplies each threshold by the reduction ratio and floors.
std::vector<std::uint32_t> scale_mitigation_thresholds(std::span<const std::uint32_t> nominal,
                                                       const ChipProfile& profile,
                                                       RestorationLevel level);

/// How fast a mitigation can refresh one row. Used to size the epoch that the
/// simulator actually runs with (see runtime_fcri_ticks).
struct RefreshRateBound {
  Tick spacing = 0;                    // min ticks between two refreshes of a row
  std::uint32_t burst = 0;             // refreshes possible without fresh activations
  std::uint64_t acts_per_refresh = 0;  // activations needed per further refresh (0: unknown)
};

/// Epoch length (ticks) such that no row can receive more than n_pcr + 1
/// preventive refreshes inside one epoch, or kNever when that length reaches
/// t_REFW (all refreshes may then be partial).
Tick runtime_fcri_ticks(const PacramConfig& cfg, const RefreshRateBound& bound,
                        const TimingTicks& t);

/// One F/P bit per row, reset lazily by comparing a per-row stamp with the
/// current epoch number. A row is in P-state iff its stamp equals the epoch.
class FrBitVector {
 public:
  FrBitVector(int banks, std::uint32_t rows, Tick epoch_ticks);

  std::uint32_t epoch(Tick now) const;
  bool full_required(int bank, RowIndex row, Tick now) const;
  void mark_restored(int bank, RowIndex row, Tick now);
  Tick epoch_ticks() const { return epoch_; }

 private:
  std::uint32_t rows_;
  Tick epoch_;
  std::vector<std::vector<std::uint32_t>> stamps_;  // allocated per bank on first write
};

class Pacram {
 public:
  /// `epoch_ticks` == kNever selects all-partial operation.
  Pacram(const PacramConfig& cfg, int banks, std::uint32_t rows, Tick epoch_ticks);

  LatencyClass select_latency(int bank, RowIndex row, Tick now) const;
  /// Called when a preventive refresh of the given class is performed.
  void on_preventive_refresh(int bank, RowIndex row, LatencyClass cls, Tick now);
  /// A full periodic refresh moves the covered rows to P-state.
  void on_periodic_refresh(int first_bank, int banks, RowIndex first_row, std::uint32_t count,
                           Tick now);

  const PacramConfig& config() const { return cfg_; }
  bool all_partial() const { return all_partial_; }
  Tick epoch_ticks() const { return fr_.epoch_ticks(); }

 private:
  PacramConfig cfg_;
  bool all_partial_;
  FrBitVector fr_;
};

/// Periodic refresh latency extension: n_pcr partial windows, then one full.
class PeriodicExtension {
 public:
  explicit PeriodicExtension(std::uint32_t n_pcr);
  LatencyClass window_latency(std::uint64_t window_index) const;
  /// Stateful form driven by window boundaries.
  LatencyClass next_window();
  std::uint32_t counter() const { return counter_; }

 private:
  std::uint32_t n_pcr_;
  std::uint32_t counter_ = 0;
};

}  // namespace pacsim
