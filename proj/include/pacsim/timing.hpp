#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "pacsim/common.hpp"

namespace pacsim {

/// DDR timing parameters in nanoseconds.
struct DeviceTimings {
  double t_rcd = 15.0;
  double t_ras = 33.0;
  double t_rp = 15.0;
  double t_rc = 48.0;
  double t_cl = 16.0;
  double t_bl = 3.0;
  double t_rfc = 195.0;
  double t_refi = 3900.0;
  double t_refw = 32.0e6;

  static DeviceTimings ddr5_default();
  static DeviceTimings ddr4_default();
  /// Looks up `ddr4_default` / `ddr5_default`.
  static DeviceTimings preset(std::string_view name);

  /// Throws ValidationError when t_rc != t_ras + t_rp or a field is non-positive.
  void validate() const;
};

/// A charge restoration latency expressed as a fraction of nominal t_RAS.
/// Stored in hundredths so that levels compare exactly.
class RestorationLevel {
 public:
  constexpr RestorationLevel() = default;
  constexpr explicit RestorationLevel(int hundredths) : hundredths_(hundredths) {}

  static RestorationLevel from_factor(double m);
  static RestorationLevel parse(std::string_view text);
  static RestorationLevel nominal() { return RestorationLevel{100}; }

  constexpr int hundredths() const { return hundredths_; }
  constexpr double factor() const { return hundredths_ / 100.0; }
  constexpr bool is_nominal() const { return hundredths_ == 100; }

  /// Reduced t_RAS, rounded to whole nanoseconds.
  double t_ras_red_ns(double t_ras_nominal) const;
  std::string str() const;

  friend constexpr auto operator<=>(RestorationLevel, RestorationLevel) = default;

 private:
  int hundredths_ = 100;
};

/// The seven characterized levels, most to least conservative.
inline constexpr std::array<RestorationLevel, 7> kStandardLevels = {
    RestorationLevel{100}, RestorationLevel{81}, RestorationLevel{64}, RestorationLevel{45},
    RestorationLevel{36},  RestorationLevel{27}, RestorationLevel{18}};

/// Timings converted to controller ticks.
struct TimingTicks {
  Tick rcd = 0, ras = 0, rp = 0, rc = 0, cl = 0, bl = 0, rfc = 0, refi = 0, refw = 0;

  explicit TimingTicks(const DeviceTimings& t);
  TimingTicks() = default;

  /// Restore portion (t_RAS or reduced t_RAS) for a level.
  Tick restore(RestorationLevel level, double t_ras_ns) const;
};

struct Topology {
  int channels = 1;
  int ranks = 2;
  int bankgroups = 8;
  int banks_per_group = 2;
  std::uint32_t rows_per_bank = 65536;
  std::uint32_t columns = 128;  // 64-byte lines per row

  int banks_per_rank() const { return bankgroups * banks_per_group; }
  int total_banks() const { return channels * ranks * banks_per_rank(); }
  std::uint64_t capacity_bytes() const;
  /// Rows restored per periodic REF (8192 REFs per refresh window).
  std::uint32_t rows_per_ref() const;
  void validate() const;
};

}  // namespace pacsim
