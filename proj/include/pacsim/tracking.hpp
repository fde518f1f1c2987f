#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pacsim/common.hpp"

namespace pacsim {

/// Rows at distance 1..radius on both sides of `row`, clamped to [0, rows).
std::vector<RowIndex> victims_of(RowIndex row, int radius, std::uint32_t rows);

/// Frequent-items counter table with a spillover counter (Graphene-style).
/// A missing row claims a slot whose count equals the spillover value, or an
/// empty slot; otherwise the spillover counter absorbs the activation.
/// estimate(r) >= exact(r) and estimate(r) - exact(r) <= spillover <= W/(k+1).
class CounterTable {
 public:
  explicit CounterTable(std::size_t capacity);

  struct Update {
    std::uint64_t before = 0;  // estimate before the observation
    std::uint64_t after = 0;   // estimate after (table value, or spillover)
    bool tracked = false;      // row holds a slot after the update
  };
  Update observe(RowIndex row);

  std::uint64_t estimate(RowIndex row) const;
  std::uint64_t spillover() const { return spill_; }
  std::size_t size() const { return counts_.size(); }
  std::size_t capacity() const { return cap_; }

  /// Highest count, ties to the smaller row.
  std::optional<RowIndex> top() const;
  void remove(RowIndex row);
  void reset();

 private:
  std::size_t cap_;
  std::uint64_t spill_ = 0;
  std::unordered_map<RowIndex, std::uint64_t> counts_;
  std::set<std::pair<std::uint64_t, RowIndex>> order_;
};

}  // namespace pacsim
