#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pacsim/command.hpp"
#include "pacsim/mem_controller.hpp"
#include "pacsim/timing.hpp"

namespace pacsim {

struct TraceEntry {
  std::uint64_t bubbles = 0;
  bool write = false;
  std::uint64_t addr = 0;

  friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

/// Parses `<bubbles> <R|W> <hex-addr>`; blank lines and `#` comments are skipped.
std::optional<TraceEntry> parse_trace_line(std::string_view line, std::size_t line_no);

/// Lazy reader over a trace file.
class TraceReader {
 public:
  explicit TraceReader(const std::filesystem::path& path);
  explicit TraceReader(std::istream& in);
  std::optional<TraceEntry> next();
  std::size_t line() const { return line_; }

 private:
  std::ifstream file_;
  std::istream* in_;
  std::size_t line_ = 0;
  std::string buf_;
};

std::vector<TraceEntry> parse_trace(std::istream& in);
std::vector<TraceEntry> load_trace(const std::filesystem::path& path);
void write_trace(std::ostream& out, std::span<const TraceEntry> trace);

enum class AttackPattern { double_sided, single, half_double };
AttackPattern parse_attack_pattern(std::string_view s);
std::string_view to_string(AttackPattern p);

struct AttackSpec {
  AttackPattern pattern = AttackPattern::double_sided;
  int rank = 0;
  int bank = 0;  // flat bank within the rank
  RowIndex victim = 1000;
  std::uint32_t far_per_near = 8;  // half-double: far accesses per near access
};

/// Endless address stream for a hammering attacker.
class AttackGenerator {
 public:
  AttackGenerator(const AttackSpec& spec, const AddressMapper& mapper, const Topology& topo);
  std::uint64_t next();
  RowIndex next_row();

 private:
  std::uint64_t addr_of(RowIndex row) const;

  AttackSpec spec_;
  const AddressMapper& mapper_;
  Topology topo_;
  std::uint64_t i_ = 0;
};

std::vector<TraceEntry> gen_attacker(const AttackSpec& spec, std::uint64_t hammer_count,
                                     const AddressMapper& mapper, const Topology& topo);

enum class SyntheticKind { random, stream, hotset };
SyntheticKind parse_synthetic(std::string_view s);

struct SyntheticSpec {
  SyntheticKind kind = SyntheticKind::random;
  std::uint64_t length = 100000;
  std::uint64_t bubbles = 10;
  double write_fraction = 0.2;
  std::uint32_t hot_rows = 8;     // hotset: rows per bank in the hot set
  std::uint32_t banks = 0;        // hotset: banks in use (rank-major), 0 = all
  std::uint64_t seed = 1;
};

/// Synthetic traces; `core` offsets the footprint so cores do not share rows.
std::vector<TraceEntry> gen_synthetic(const SyntheticSpec& spec, int core,
                                      const AddressMapper& mapper, const Topology& topo);

/// Core clock: 3.2 GHz against the 0.75 ns controller tick, i.e. 12 core
/// cycles per 5 ticks.
inline constexpr std::uint64_t kCyclesPerTickNum = 12;
inline constexpr std::uint64_t kCyclesPerTickDen = 5;
inline std::uint64_t cycles_at(Tick t) { return t * kCyclesPerTickNum / kCyclesPerTickDen; }
inline Tick tick_of_cycle(std::uint64_t c) {
  return (c * kCyclesPerTickDen + kCyclesPerTickNum - 1) / kCyclesPerTickNum;
}

/// Simple last-level filter cache (per core, LRU). Disabled when size is 0.
class FilterCache {
 public:
  FilterCache(std::size_t bytes, std::uint32_t ways);
  bool enabled() const { return sets_ > 0; }
  /// Returns true on hit; fills on miss.
  bool access(std::uint64_t addr);

 private:
  std::size_t sets_ = 0;
  std::uint32_t ways_ = 0;
  std::vector<std::uint64_t> tags_;  // sets_ * ways_, most recent first; ~0 = empty
};

/// In-order core that stalls on reads; writes are posted.
class Core {
 public:
  Core(int id, std::vector<TraceEntry> trace, std::uint64_t budget, std::uint64_t warmup,
       std::uint32_t width, std::size_t llc_bytes);

  /// Tries to make progress at `now`; returns the next tick to call again
  /// (kNever while a read is outstanding or after finishing).
  Tick step(Tick now, MemController& mc);
  /// Data for the outstanding read returns at `done`.
  void on_read_done(Tick done);

  /// Tick at which step() can next make progress, kNever while blocked on a read.
  Tick wake() const { return finished_ || waiting_ ? kNever : tick_of_cycle(cycle_); }
  bool finished() const { return finished_; }
  std::uint64_t retired() const { return retired_; }
  double ipc() const;
  std::uint64_t token() const { return token_; }
  int id() const { return id_; }

 private:
  void advance();
  void retire(std::uint64_t n);

  int id_;
  std::vector<TraceEntry> trace_;
  std::size_t pos_ = 0;
  std::uint64_t budget_, warmup_;
  std::uint32_t width_;
  FilterCache llc_;
  std::uint64_t cycle_ = 0;  // cycle at which the current memory op may issue
  std::uint64_t retired_ = 0;
  bool waiting_ = false;
  bool finished_ = false;
  std::uint64_t warm_retired_ = 0, warm_cycle_ = 0;
  std::uint64_t end_cycle_ = 0;
  std::uint64_t token_ = 0;
  std::uint64_t next_token_;
};

struct EnergyTable {
  double act_pj = 1800.0;   // full-latency ACT+restore
  double pre_pj = 800.0;
  double rd_pj = 1500.0;
  double wr_pj = 1600.0;
  double ref_pj = 30000.0;  // one all-bank REF at nominal t_RFC
  double background_mw = 150.0;  // per rank
};

/// Closed-book accounting from the command stream: energy, per-bank
/// preventive busy time and command counts.
class CommandAccounting : public CommandSink {
 public:
  CommandAccounting(const DeviceTimings& t, const Topology& topo, const EnergyTable& e,
                    double t_ras_red_ns);
  void on_command(const Command& c) override;
  void finish(Tick end) override;

  /// Energy increment for one command (pJ); restoration energy scales with duration.
  double command_energy(const Command& c) const;

  double energy_pj() const { return energy_ + background_; }
  double command_energy_pj() const { return energy_; }
  double background_pj() const { return background_; }
  const std::vector<Tick>& busy_ticks() const { return busy_; }
  std::uint64_t count(Cmd c) const { return counts_[static_cast<std::size_t>(c)]; }
  std::uint64_t count(Cmd c, LatencyClass cls) const;
  Tick end() const { return end_; }

 private:
  Tick restore(LatencyClass cls) const { return cls == LatencyClass::partial ? red_ : ras_; }

  EnergyTable e_;
  Tick ras_, rp_, red_, rfc_;
  int ranks_, bpr_;
  std::vector<Tick> busy_;
  std::uint64_t counts_[8] = {};
  std::uint64_t partial_[8] = {};
  double energy_ = 0.0, background_ = 0.0;
  Tick end_ = 0;
};

struct RunStats {
  std::vector<double> ipc;
  double weighted_speedup = 0.0;
  std::vector<double> busy_fraction;  // per flat bank (rank-major)
  double busy_mean = 0.0, busy_max = 0.0;
  Tick busy_total = 0;
  std::uint64_t pref_full = 0, pref_partial = 0;
  std::uint64_t dref_full = 0, dref_partial = 0;
  double energy_pj = 0.0;
  Tick ticks = 0;
};

RunStats collect_stats(const std::vector<Core>& cores, const CommandAccounting& acct,
                       const std::vector<double>& solo_ipc);

}  // namespace pacsim
