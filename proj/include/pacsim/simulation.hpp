#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pacsim/config.hpp"
#include "pacsim/verifier.hpp"

namespace pacsim {

/// Parameters derived from a RunConfig before anything is simulated.
struct ResolvedRun {
  std::optional<PacramConfig> pacram;
  std::uint32_t nrh_configured = 0;  // mitigation threshold after PaCRAM scaling
  Tick epoch = kNever;               // F-reset period used at runtime; kNever: all partial
  VerifierConfig verifier;
};

ResolvedRun resolve(const RunConfig& cfg);

struct RunOptions {
  bool write_files = false;  // stats.csv and run.cmdlog under cfg.out_dir
  bool keep_log = false;     // fill RunResult::log
  bool verify = false;       // also honoured when cfg.verify is set
  int solo_core = -1;        // run only this core of the workload (alone-IPC baseline)
  std::vector<double> solo_ipc;
  CommandSink* extra = nullptr;
};

struct RunResult {
  std::string run_id;
  ResolvedRun resolved;
  RunStats stats;
  ControllerStats ctrl;
  std::uint64_t acts = 0;
  std::uint64_t refs = 0, refs_partial = 0, rfms = 0;
  double command_energy_pj = 0.0, background_energy_pj = 0.0;
  std::uint64_t triggers = 0;
  std::uint64_t attack_requests = 0;
  bool verified = false;
  std::uint64_t timing_violations = 0;
  std::uint64_t disturbance_violations = 0;
  std::uint64_t max_disturbance = 0;
  std::vector<Violation> violations;  // first few of each checker
  std::vector<Command> log;
};

RunResult simulate(const RunConfig& cfg, const RunOptions& opt = {});

/// Alone-IPC per core, from the JSON cache when configured (missing entries are
/// simulated and stored back). Empty for single-core workloads.
std::vector<double> solo_ipcs(const RunConfig& cfg);

/// Full `run`: solo baselines, simulation, stats.csv and run.cmdlog.
RunResult run(const RunConfig& cfg, bool verify);

void write_stats_csv(std::ostream& out, const RunResult& r);

struct SweepPoint {
  RunConfig cfg;
  std::string mitigation, pacram;
  std::uint32_t nrh = 0;
};

/// Cartesian product nrh x mitigations x pacram (empty lists keep the base value).
std::vector<SweepPoint> expand_sweep(const RunConfig& base);

/// Runs every point on `cfg.sweep.jobs` threads and writes sweep.csv in point order.
std::vector<RunResult> run_sweep(const RunConfig& base, bool verify);

void write_sweep_csv(std::ostream& out, const std::vector<SweepPoint>& points,
                     const std::vector<RunResult>& results);

/// Formats doubles the same way everywhere (shortest round-trip).
std::string format_number(double v);

}  // namespace pacsim
