#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <unordered_map>
#include <vector>

#include "pacsim/command.hpp"
#include "pacsim/pacram.hpp"
#include "pacsim/timing.hpp"
#include "pacsim/tracking.hpp"

namespace pacsim {

enum class BankPhase { Precharged, Activating, Active, Precharging, Refreshing };

struct BankState {
  std::optional<RowIndex> open_row;
  Tick act_tick = 0;
  Tick next_act = 0;   // t_RP / t_RC / refresh busy
  Tick next_pre = 0;   // t_RAS
  Tick next_rdwr = 0;  // t_RCD
  Tick busy_until = 0; // preventive refresh or RFM in progress

  // PRAC per-row counters; rows at or above the threshold are also kept ordered.
  std::unordered_map<RowIndex, std::uint32_t> prac;
  std::set<std::pair<std::uint32_t, RowIndex>> prac_over;

  BankPhase phase(Tick now, Tick rank_busy) const;
};

enum class DeviceTracking { none, rfm, prac };

struct DeviceConfig {
  DeviceTimings timings;
  Topology topo;
  DeviceTracking tracking = DeviceTracking::none;
  std::uint32_t prac_threshold = 0;
  std::size_t tracker_size = 16;
  int blast_radius = 2;
};

/// One channel's worth of ranks and banks. Bank indices are flat within a rank.
class Device {
 public:
  explicit Device(const DeviceConfig& cfg);

  /// Earliest tick >= now at which `cmd` may issue. Throws IllegalState when
  /// the bank state forbids the command outright.
  Tick legal_at(Cmd cmd, int rank, int bank, Tick now) const;

  /// Applies a command at c.tick. `duration` is the restore portion for PREF
  /// and the refresh time for REF (0 selects t_RFC). Returns the completion tick.
  /// Issuing before legal_at is a simulator bug and throws std::logic_error.
  Tick issue(Command& c, Tick duration = 0);

  /// Victim refreshes performed by the last RFM.
  const std::vector<Command>& last_drefs() const { return drefs_; }

  bool prac_backoff(int rank, int bank) const;
  std::uint32_t prac_counter(int rank, int bank, RowIndex row) const;

  /// Latency decisions for device-internal victim refreshes. With on-die
  /// operation the decision is made only while the mode register holds a level.
  void attach_pacram(Pacram* p, bool ondie);
  void write_mode_register(std::optional<RestorationLevel> level);
  const std::optional<RestorationLevel>& mode_register() const { return mr_; }

  const BankState& bank(int rank, int bank) const { return banks_[flat(rank, bank)]; }
  const CounterTable& tracker(int rank, int bank) const { return trackers_[flat(rank, bank)]; }
  Tick rank_busy_until(int rank) const { return rank_busy_[rank]; }
  std::uint32_t ref_pointer(int rank) const { return ref_ptr_[rank]; }
  const TimingTicks& ticks() const { return tt_; }
  const DeviceConfig& config() const { return cfg_; }
  Tick restore_ticks(LatencyClass cls) const;

 private:
  int flat(int rank, int bank) const { return rank * bpr_ + bank; }
  void service_rfm(Command& c);

  DeviceConfig cfg_;
  TimingTicks tt_;
  int bpr_;
  std::vector<BankState> banks_;
  std::vector<CounterTable> trackers_;
  std::vector<Tick> rank_busy_;
  std::vector<std::uint32_t> ref_ptr_;
  Tick cmd_next_ = 0;
  Tick data_next_ = 0;
  std::vector<Command> drefs_;
  Pacram* pacram_ = nullptr;
  bool ondie_ = false;
  std::optional<RestorationLevel> mr_;
  Tick partial_restore_ = 0;
};

}  // namespace pacsim
