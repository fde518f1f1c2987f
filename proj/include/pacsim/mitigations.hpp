#pragma once

#include <cstdint>
#include <list>
#include <memory>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "pacsim/pacram.hpp"
#include "pacsim/timing.hpp"
#include "pacsim/tracking.hpp"

namespace pacsim {

enum class MitigationKind { none, para, rfm, prac, hydra, graphene };

MitigationKind parse_mitigation(std::string_view s);
std::string_view to_string(MitigationKind k);

struct MitigationParams {
  std::uint32_t nrh = 1024;  // configured (possibly scaled) threshold
  int blast_radius = 2;
  double para_c = 11.0;
  std::size_t graphene_entries = 0;  // 0: sized so the spillover stays below the quota
  std::uint32_t hydra_group = 128;
  std::size_t hydra_cache = 4096;
  std::uint32_t rfm_raaimt = 0;      // 0: nrh / 4
  std::size_t tracker_size = 16;     // device-side RFM tracker
  std::uint64_t seed = 1;
};

struct RefreshTarget {
  int rank = 0;
  int bank = 0;
  RowIndex row = 0;
  friend bool operator==(const RefreshTarget&, const RefreshTarget&) = default;
};

struct MetadataAccess {
  bool write = false;
  std::uint64_t addr = 0;
};

struct MitigationAction {
  std::vector<RefreshTarget> refreshes;
  bool rfm = false;
  std::vector<MetadataAccess> metadata;

  void clear() {
    refreshes.clear();
    rfm = false;
    metadata.clear();
  }
};

class MitigationPlugin {
 public:
  virtual ~MitigationPlugin() = default;
  virtual MitigationKind kind() const = 0;
  /// Observes a disturbing activation; appends any preventive actions to `out`.
  virtual void on_activate(int rank, int bank, RowIndex row, Tick now, MitigationAction& out) = 0;
  virtual void on_periodic_refresh(int /*rank*/, RowIndex /*first*/, std::uint32_t /*count*/,
                                   Tick /*now*/) {}
  std::uint32_t threshold() const { return nrh_; }
  /// How often one row can be refreshed; `lat` is the shortest refresh (restore + t_RP).
  virtual RefreshRateBound rate_bound(const TimingTicks& t, Tick lat) const;
  std::uint64_t triggers() const { return triggers_; }

 protected:
  MitigationPlugin(std::uint32_t nrh, int radius, const Topology& topo);
  void emit_victims(int rank, int bank, RowIndex row, MitigationAction& out);

  std::uint32_t nrh_;
  int radius_;
  Topology topo_;
  std::uint64_t triggers_ = 0;
};

class NoMitigation : public MitigationPlugin {
 public:
  NoMitigation(std::uint32_t nrh, const Topology& topo) : MitigationPlugin(nrh, 2, topo) {}
  MitigationKind kind() const override { return MitigationKind::none; }
  void on_activate(int, int, RowIndex, Tick, MitigationAction&) override {}
};

class Para : public MitigationPlugin {
 public:
  Para(const MitigationParams& p, const Topology& topo);
  MitigationKind kind() const override { return MitigationKind::para; }
  void on_activate(int rank, int bank, RowIndex row, Tick now, MitigationAction& out) override;
  double probability() const { return p_; }

 private:
  double p_;
  std::uint64_t cut_;  // trigger iff rng() < cut_
  std::uint64_t state_;
  bool always_;
};

class Rfm : public MitigationPlugin {
 public:
  Rfm(const MitigationParams& p, const Topology& topo);
  MitigationKind kind() const override { return MitigationKind::rfm; }
  void on_activate(int rank, int bank, RowIndex row, Tick now, MitigationAction& out) override;
  RefreshRateBound rate_bound(const TimingTicks& t, Tick lat) const override;
  std::uint32_t raaimt() const { return raaimt_; }
  std::uint32_t raa(int rank, int bank) const { return raa_[rank * topo_.banks_per_rank() + bank]; }

 private:
  std::uint32_t raaimt_;
  std::vector<std::uint32_t> raa_;
};

/// Controller side of PRAC: the device raises back-off, the controller answers
/// with RFM. Nothing happens per activation here.
class Prac : public MitigationPlugin {
 public:
  Prac(const MitigationParams& p, const Topology& topo);
  MitigationKind kind() const override { return MitigationKind::prac; }
  void on_activate(int, int, RowIndex, Tick, MitigationAction&) override {}
  RefreshRateBound rate_bound(const TimingTicks& t, Tick lat) const override;
  /// Per-row counter value that raises back-off.
  std::uint32_t backoff_threshold() const { return threshold_; }

 private:
  std::uint32_t threshold_;
};

class Graphene : public MitigationPlugin {
 public:
  Graphene(const MitigationParams& p, const Topology& topo, const TimingTicks& t);
  MitigationKind kind() const override { return MitigationKind::graphene; }
  void on_activate(int rank, int bank, RowIndex row, Tick now, MitigationAction& out) override;
  std::uint64_t quota() const { return quota_; }
  std::size_t entries() const { return entries_; }
  const CounterTable& table(int rank, int bank) const {
    return tables_[rank * topo_.banks_per_rank() + bank];
  }

 private:
  std::uint64_t quota_;
  std::size_t entries_;
  Tick window_;
  std::uint64_t window_index_ = 0;
  std::vector<CounterTable> tables_;
};

class Hydra : public MitigationPlugin {
 public:
  Hydra(const MitigationParams& p, const Topology& topo, const TimingTicks& t);
  MitigationKind kind() const override { return MitigationKind::hydra; }
  void on_activate(int rank, int bank, RowIndex row, Tick now, MitigationAction& out) override;
  std::uint32_t quota() const { return quota_; }
  std::uint32_t group_threshold() const { return group_threshold_; }
  std::uint64_t metadata_base() const { return meta_base_; }
  std::uint64_t metadata_reads() const { return meta_reads_; }
  std::uint64_t metadata_writes() const { return meta_writes_; }

 private:
  std::uint64_t counter_addr(std::uint64_t key) const;

  std::uint32_t quota_;
  std::uint32_t group_threshold_;
  std::uint32_t group_size_;
  std::size_t cache_size_;
  Tick window_;
  std::uint64_t window_index_ = 0;
  std::uint64_t meta_base_;
  std::vector<std::uint32_t> gct_;
  std::unordered_map<std::uint64_t, std::uint32_t> rct_;  // DRAM-resident counters
  // row-count cache: LRU list of keys plus dirty flags
  std::list<std::pair<std::uint64_t, bool>> lru_;
  std::unordered_map<std::uint64_t, std::list<std::pair<std::uint64_t, bool>>::iterator> cache_;
  std::uint64_t meta_reads_ = 0, meta_writes_ = 0;
};

/// Deterministic thresholds derived from the configured N_RH. The verifier
/// counts every activation within the blast radius at full weight, so A = 2r
/// neighbours can each contribute; tracker tables are also cleared every
/// refresh window, which doubles what one aggressor can slip in.
std::uint64_t tracker_quota(std::uint32_t nrh, int radius);
std::uint32_t prac_threshold(std::uint32_t nrh, int radius);
std::uint32_t default_raaimt(std::uint32_t nrh);
double para_probability(std::uint32_t nrh, double c);

std::unique_ptr<MitigationPlugin> make_mitigation(MitigationKind kind, const MitigationParams& p,
                                                  const Topology& topo, const TimingTicks& t);

}  // namespace pacsim
