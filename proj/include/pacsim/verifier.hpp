#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "pacsim/command.hpp"
#include "pacsim/timing.hpp"

namespace pacsim {

struct VerifierConfig {
  DeviceTimings timings;
  Topology topo;
  std::uint32_t nrh = 1024;  // disturbance limit (the configured, possibly scaled, N_RH)
  int blast_radius = 2;
  bool pacram = false;
  std::uint32_t n_pcr = 0;
  double t_ras_red_ns = 0.0;  // restore time of a partial refresh
  Tick fcri = 0;              // full-restoration epoch in ticks (0 or kNever: none)
  bool periodic_ext = false;
};

struct Violation {
  Tick tick = 0;
  std::string kind;
  int rank = 0;
  int bank = 0;
  RowIndex row = 0;
  std::uint64_t value = 0;
  std::string detail;
};

std::string to_string(const Violation& v);

/// Base for the streaming checkers: keeps the first `keep` violations and a total.
class ViolationLog {
 public:
  explicit ViolationLog(std::size_t keep = 1000) : keep_(keep) {}
  void add(Violation v);
  const std::vector<Violation>& violations() const { return list_; }
  std::uint64_t count() const { return total_; }

 private:
  std::size_t keep_;
  std::uint64_t total_ = 0;
  std::vector<Violation> list_;
};

/// Re-derives the timing rules from the log alone.
class TimingChecker : public CommandSink, public ViolationLog {
 public:
  explicit TimingChecker(const VerifierConfig& cfg);
  void on_command(const Command& c) override;

 private:
  struct Bank {
    bool open = false;
    RowIndex row = 0;
    bool seen_act = false, seen_pre = false;
    Tick act = 0, pre = 0;
    Tick busy_end = 0;
    bool rfm_open = false;  // DREFs of the latest RFM may still follow
    Tick rfm_cursor = 0;
  };
  Tick span(double ns) const;
  Tick restore(const Command& c) const;
  void flag(const Command& c, const char* kind, Tick need);
  void check_closed_and_ready(const Command& c, Bank& b);

  VerifierConfig cfg_;
  Tick rcd_, ras_, rp_, rc_, bl_, rfc_, ras_red_;
  int bpr_;
  std::vector<Bank> banks_;
  std::vector<Tick> ref_end_;
  bool any_cmd_ = false, any_col_ = false;
  Tick last_cmd_ = 0, last_col_ = 0;
  int open_rfm_ = -1;
};

/// Shadow per-row disturbance, consecutive-partial and full-restore bookkeeping.
class DisturbanceChecker : public CommandSink, public ViolationLog {
 public:
  explicit DisturbanceChecker(const VerifierConfig& cfg);
  void on_command(const Command& c) override;
  void finish(Tick end) override;

  /// Largest disturbance count seen on any row (for reporting).
  std::uint64_t max_disturbance() const { return max_seen_; }
  Tick liveness_bound() const { return bound_; }

 private:
  struct Shadow {
    std::uint32_t count = 0;
    std::uint32_t partials = 0;
    Tick last_full = 0;
  };
  Shadow& shadow(int rank, int bank, RowIndex row);
  void restore(const Command& c, int bank, RowIndex row, bool full, bool periodic);
  void check_live(const Command& c, int bank, RowIndex row, Tick last, Tick now);

  VerifierConfig cfg_;
  int bpr_;
  std::uint32_t rows_per_ref_;
  std::uint32_t groups_;
  Tick bound_;
  std::vector<std::unordered_map<RowIndex, Shadow>> rows_;
  std::vector<Tick> group_full_;              // per rank x group
  std::vector<std::uint32_t> group_partials_; // periodic partial windows since last full
  std::uint64_t max_seen_ = 0;
};

std::vector<Violation> replay_timing(std::span<const Command> log, const VerifierConfig& cfg);
std::vector<Violation> check_disturbance(std::span<const Command> log, const VerifierConfig& cfg,
                                         Tick end);

}  // namespace pacsim
