#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <unordered_map>

#include "mimicry/model.hpp"

namespace mimicry {

/// A (shop, date, daypart) context cell.
struct CellKey {
  std::uint32_t shop = 0;
  Date date{};
  Daypart daypart = Daypart::OutOfWindow;

  std::uint64_t packed() const noexcept {
    const auto day = static_cast<std::uint64_t>(static_cast<std::uint32_t>(date.time_since_epoch().count()));
    return (static_cast<std::uint64_t>(shop) << 34) | (day << 2) | static_cast<std::uint64_t>(daypart);
  }
  friend auto operator<=>(const CellKey&, const CellKey&) = default;
};

inline CellKey cell_of(const TxFacts& f) { return {f.shop, f.date, f.daypart}; }

struct ContextEntry {
  double popularity = 0.0;  // share of the cell's transactions holding the feature
  bool available = false;   // bought at least once in the cell
  std::uint32_t n_transactions = 0;
};

/// Environmental context per cell: for every feature, the fraction of all
/// transactions in the cell that contain it. Availability is approximated by
/// "purchased at least once in the cell".
class ContextStats {
 public:
  static ContextStats compute(const TransactionLog& log);

  std::optional<ContextEntry> lookup(const CellKey& cell, Feature feature) const;
  /// 0 for cells without transactions.
  double popularity(const CellKey& cell, Feature feature) const;
  bool available(const CellKey& cell, Feature feature) const;
  std::size_t cell_count() const noexcept { return cells_.size(); }

  /// shop_id,date,daypart,category,popularity,available,n sorted by key.
  void write_csv(std::ostream& out, const TransactionLog& log) const;

 private:
  struct Counts {
    CellKey key;
    std::uint32_t n = 0;
    std::array<std::uint32_t, kFeatureCount> with{};
  };
  std::unordered_map<std::uint64_t, Counts> cells_;
};

inline ContextStats compute_context(const TransactionLog& log) { return ContextStats::compute(log); }

}  // namespace mimicry
