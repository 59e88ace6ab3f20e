#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "mimicry/model.hpp"

namespace mimicry {

/// One register's transactions on one date, in queue order.
struct Queue {
  std::uint32_t shop = 0;
  std::uint32_t reg = 0;
  Date date{};
  std::vector<std::uint32_t> txs;  // log indices
};

/// Partner (first in line) followed by focal. Both are log indices. The
/// delay is focal minus partner time; randomized baselines may make it
/// negative.
struct Dyad {
  std::uint32_t partner = 0;
  std::uint32_t focal = 0;
  std::int32_t delay_s = 0;

  friend bool operator==(const Dyad&, const Dyad&) = default;
};

using DyadSet = std::vector<Dyad>;

/// Groups the log per (shop, register, date). Queues are emitted in
/// (shop name, register name, date) order; ties in time keep log order,
/// which is tx_id order.
std::vector<Queue> reconstruct_queues(const TransactionLog& log);

struct DyadOptions {
  int max_gap_s = 300;
  bool require_anchor = true;
};

/// Every consecutive pair in a queue by different persons, within the gap,
/// inside one studied daypart. With require_anchor both baskets must hold
/// the daypart's anchor.
DyadSet extract_dyads(const TransactionLog& log, std::span<const Queue> queues, const DyadOptions& options = {});

DyadSet filter_anchored(const TransactionLog& log, std::span<const Dyad> dyads);

/// Keeps dyads whose unordered person pair occurs in at least min_count
/// dyads of the input.
DyadSet filter_frequent_pairs(const TransactionLog& log, std::span<const Dyad> dyads, std::size_t min_count = 10);

/// Describes the first broken dyad invariant, if any.
std::optional<std::string> dyad_violation(const TransactionLog& log, const Dyad& dyad, int max_gap_s = 300);

inline std::uint64_t pair_key(std::uint32_t a, std::uint32_t b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

struct AdditionSelection {
  StudyItem item;
  std::size_t treated = 0;  // dyads whose partner bought the addition
  std::size_t dyads = 0;    // dyads in the daypart
  double fraction = 0.0;
};

/// Additions bought by the partner in at least min_fraction of a daypart's
/// dyads, ordered by daypart then addition.
std::vector<AdditionSelection> select_additions(const TransactionLog& log, std::span<const Dyad> dyads,
                                                double min_fraction = 0.01);

/// Share of all dyads involving either person that involve both.
/// Throws Error when neither person appears in any dyad.
double tie_strength(const TransactionLog& log, std::span<const Dyad> dyads, std::string_view person_a,
                    std::string_view person_b);

/// Bulk tie strengths over one dyad set, keyed by interned person ids.
class TieStrengthIndex {
 public:
  TieStrengthIndex(const TransactionLog& log, std::span<const Dyad> dyads);
  std::optional<double> strength(std::uint32_t a, std::uint32_t b) const;

 private:
  std::unordered_map<std::uint64_t, std::size_t> pair_counts_;
  std::unordered_map<std::uint32_t, std::size_t> person_counts_;
};

enum class CoAttribute { Gender, Status, AgeTercile };

/// Age bins at transaction time. Defaults to {<=22, 23-32, >32}.
struct AgeBins {
  int first_max = 22;
  int second_max = 32;

  int bin(int age) const { return age <= first_max ? 0 : age <= second_max ? 1 : 2; }
  std::string label(int bin) const;
  /// Cut points at the empirical terciles of `ages`.
  static AgeBins data_driven(std::vector<int> ages);
};

struct CoPurchaseMatrix {
  std::vector<std::string> labels;        // row and column labels
  std::vector<std::vector<double>> cells;  // percent; rows = focal, columns = partner
  std::size_t used = 0;
  std::size_t skipped = 0;  // dyads with an attribute missing for either member
};

/// Throws Error when no dyad has the attribute for both members.
CoPurchaseMatrix co_purchase_matrix(const TransactionLog& log, std::span<const Dyad> dyads,
                                    const Demographics& demographics, CoAttribute attribute,
                                    const AgeBins& bins = {});

/// partner_tx,focal_tx,shop_id,register_id,date,daypart,delay_s
void write_dyads_csv(std::ostream& out, const TransactionLog& log, std::span<const Dyad> dyads);
DyadSet read_dyads_csv(std::istream& in, const TransactionLog& log);

}  // namespace mimicry
