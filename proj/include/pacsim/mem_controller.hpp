#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <vector>

#include "pacsim/command.hpp"
#include "pacsim/dram_device.hpp"
#include "pacsim/mitigations.hpp"
#include "pacsim/pacram.hpp"

namespace pacsim {

struct MappedAddress {
  int channel = 0;
  int rank = 0;
  int bankgroup = 0;
  int bank = 0;
  RowIndex row = 0;
  std::uint32_t column = 0;

  int flat_bank(const Topology& t) const { return bankgroup * t.banks_per_group + bank; }
  friend bool operator==(const MappedAddress&, const MappedAddress&) = default;
};

/// Minimalist open-page mapping. Line-index digits from least significant:
/// column-low (mop_group lines), channel, bank group, bank, rank, column-high, row.
class AddressMapper {
 public:
  AddressMapper(const Topology& topo, std::uint32_t mop_group);
  MappedAddress map(std::uint64_t addr) const;
  std::uint64_t unmap(const MappedAddress& m) const;
  std::uint64_t capacity() const { return capacity_; }

 private:
  Topology topo_;
  std::uint32_t mop_;
  std::uint64_t capacity_;
};

struct MemRequest {
  bool write = false;
  std::uint64_t addr = 0;
  int core = -1;  // -1: controller-generated metadata traffic
  Tick arrival = 0;
  std::uint64_t token = 0;
  MappedAddress loc;
};

class RequestListener {
 public:
  virtual ~RequestListener() = default;
  /// Called when the column command of a request issues; `done` is when data returns.
  virtual void on_complete(const MemRequest& r, Tick issue, Tick done) = 0;
};

struct ControllerConfig {
  std::size_t queue_depth = 64;
  std::uint32_t mop_group = 4;
  std::size_t write_high = 54;
  std::size_t write_low = 26;
  bool periodic_ext = false;
  Tick watchdog = 10'000'000;
};

struct ControllerStats {
  std::uint64_t acts = 0, reads = 0, writes = 0;
  std::uint64_t pref_full = 0, pref_partial = 0, dref_full = 0, dref_partial = 0;
  std::uint64_t rfms = 0, refs = 0, refs_partial = 0;
  std::uint64_t metadata_requests = 0;
  Tick max_latency = 0;
};

class MemController {
 public:
  /// `pacram` is the controller-side PaCRAM instance (null when disabled or on-die).
  MemController(const ControllerConfig& cfg, Device& dev, MitigationPlugin& mit, Pacram* pacram,
                CommandSink& sink);

  bool can_accept(bool write) const;
  /// Maps and queues a request; throws when the queue is full.
  void enqueue(MemRequest r, Tick now);
  void set_listener(RequestListener* l) { listener_ = l; }

  /// Issues at most one command at `now`; returns the next tick worth calling again.
  Tick tick(Tick now);

  /// Queues ACT+PRE composites for victims, deciding their latency now.
  void issue_preventive_refresh(std::span<const RefreshTarget> victims, Tick now);
  /// Back-off from the device: an RFM goes to that bank ahead of demand traffic.
  void handle_backoff(int rank, int bank, Tick now);

  bool idle() const;
  std::size_t read_queue_size() const { return rq_.size(); }
  std::size_t write_queue_size() const { return wq_.size(); }
  std::size_t pending_prefs(int rank, int bank) const { return pref_q_[flat(rank, bank)].size(); }
  bool rfm_pending(int rank, int bank) const { return rfm_pending_[flat(rank, bank)] > 0; }
  const ControllerStats& stats() const { return stats_; }
  const AddressMapper& mapper() const { return mapper_; }
  std::uint64_t refresh_window(int rank) const;

 private:
  struct PendingRefresh {
    RowIndex row;
    LatencyClass cls;
  };

  int flat(int rank, int bank) const { return rank * bpr_ + bank; }
  bool bank_blocked(int rank, int bank) const;
  bool try_cmd(Cmd cmd, int rank, int bank, Tick now, Tick& wake);
  Tick ref_duration(LatencyClass cls) const;
  void emit(Command c);
  void after_act(const Command& c, bool demand);
  void drain_metadata(Tick now);
  bool issue_refresh(Tick now, Tick& wake);
  bool issue_maintenance(Tick now, Tick& wake);
  bool issue_demand(Tick now, Tick& wake);

  ControllerConfig cfg_;
  Device& dev_;
  MitigationPlugin& mit_;
  Pacram* pacram_;
  CommandSink& sink_;
  RequestListener* listener_ = nullptr;
  AddressMapper mapper_;
  int bpr_;
  int ranks_;

  std::deque<MemRequest> rq_, wq_;
  std::deque<MemRequest> meta_backlog_;
  bool draining_ = false;
  std::vector<std::deque<PendingRefresh>> pref_q_;
  std::vector<std::uint32_t> rfm_pending_;
  std::size_t maint_banks_ = 0;  // banks with queued refreshes or RFMs
  std::vector<Tick> ref_due_;
  std::vector<std::uint64_t> ref_count_;
  std::optional<PeriodicExtension> ext_;
  MitigationAction action_;
  std::uint64_t next_token_ = 1;
  ControllerStats stats_;
};

}  // namespace pacsim
