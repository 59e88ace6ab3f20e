#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

namespace mimicry {

// ---------------------------------------------------------------------------
// Time
// ---------------------------------------------------------------------------

/// Civil wall-clock time at seconds resolution. Logs carry no zone, so the
/// value is interpreted as local shop time throughout.
using Timestamp = std::chrono::sys_seconds;
using Date = std::chrono::sys_days;

/// Parses "YYYY-MM-DDTHH:MM:SS" (a space is accepted in place of 'T').
std::optional<Timestamp> parse_timestamp(std::string_view text);
std::string format_timestamp(Timestamp t);
std::string format_date(Date d);
std::optional<Date> parse_date(std::string_view text);

inline Date date_of(Timestamp t) { return std::chrono::floor<std::chrono::days>(t); }
inline int seconds_of_day(Timestamp t) { return static_cast<int>((t - date_of(t)).count()); }
int year_of(Timestamp t);

enum class Daypart : std::uint8_t { Breakfast, Lunch, Afternoon, OutOfWindow };

inline constexpr std::array kStudiedDayparts = {Daypart::Breakfast, Daypart::Lunch, Daypart::Afternoon};

/// Half-open windows: [06:00,11:00) breakfast, [11:00,14:30) lunch,
/// [14:30,20:00) afternoon. Everything else is out of window.
Daypart daypart_of(Timestamp t);
std::string_view daypart_name(Daypart d);
std::optional<Daypart> parse_daypart(std::string_view name);

// ---------------------------------------------------------------------------
// Items
// ---------------------------------------------------------------------------

enum class Beverage : std::uint8_t { Coffee, Tea };

enum class Addition : std::uint8_t { Condiment, Dessert, Fruit, Pastry, Salad, SoftDrink, Soup };

inline constexpr std::array kAdditions = {Addition::Condiment, Addition::Dessert, Addition::Fruit,
                                          Addition::Pastry,    Addition::Salad,   Addition::SoftDrink,
                                          Addition::Soup};

struct AnchorMeal {
  bool vegetarian = false;
  friend bool operator==(const AnchorMeal&, const AnchorMeal&) = default;
};
struct AnchorBeverage {
  Beverage kind = Beverage::Coffee;
  friend bool operator==(const AnchorBeverage&, const AnchorBeverage&) = default;
};
struct AdditionItem {
  Addition kind = Addition::Dessert;
  friend bool operator==(const AdditionItem&, const AdditionItem&) = default;
};
struct OtherItem {
  friend bool operator==(const OtherItem&, const OtherItem&) = default;
};

using ItemCategory = std::variant<AnchorMeal, AnchorBeverage, AdditionItem, OtherItem>;

/// The daypart-defining purchase of a transaction.
using Anchor = std::variant<AnchorMeal, AnchorBeverage>;

/// Binary purchase attributes tracked per transaction. The first seven are
/// the additions; the last two are anchor attributes used for anchor
/// mimicry (a vegetarian lunch meal, a tea as the beverage anchor).
enum class Feature : std::uint8_t {
  Condiment,
  Dessert,
  Fruit,
  Pastry,
  Salad,
  SoftDrink,
  Soup,
  VegetarianMeal,
  Tea,
};
inline constexpr std::size_t kFeatureCount = 9;
using FeatureMask = std::uint16_t;

constexpr FeatureMask feature_bit(Feature f) { return static_cast<FeatureMask>(1u << static_cast<unsigned>(f)); }
constexpr Feature feature_of(Addition a) { return static_cast<Feature>(a); }

std::string_view addition_name(Addition a);
std::optional<Addition> parse_addition(std::string_view name);
std::string_view feature_name(Feature f);
std::optional<Feature> parse_feature(std::string_view name);

/// One analysis target: a feature studied within one daypart, named
/// "<daypart>/<feature>" (e.g. "lunch/dessert").
struct StudyItem {
  Daypart daypart = Daypart::Lunch;
  Feature feature = Feature::Dessert;

  std::string name() const;
  static std::optional<StudyItem> parse(std::string_view name);
  friend auto operator<=>(const StudyItem&, const StudyItem&) = default;
};

class ItemCatalog {
 public:
  /// Throws Error on a duplicate code.
  void add(std::string code, ItemCategory category);

  /// Codes absent from the catalog resolve to OtherItem.
  ItemCategory category(std::string_view code) const;
  bool contains(std::string_view code) const;
  std::size_t size() const noexcept { return items_.size(); }
  const std::map<std::string, ItemCategory, std::less<>>& items() const noexcept { return items_; }

  /// item_code,category,subtype with an optional header line.
  static ItemCatalog read_csv(std::istream& in);
  void write_csv(std::ostream& out) const;

 private:
  std::map<std::string, ItemCategory, std::less<>> items_;
};

/// Anchor of a basket for a daypart: a meal at lunch, coffee or tea at
/// breakfast and afternoon (coffee wins over tea). A lunch meal counts as
/// vegetarian only when every meal in the basket is vegetarian.
std::optional<Anchor> anchor_of(std::span<const std::string> basket, Daypart daypart, const ItemCatalog& catalog);

/// 0 meat meal, 1 vegetarian meal, 2 coffee, 3 tea.
int anchor_subtype(const Anchor& anchor);

// ---------------------------------------------------------------------------
// Demographics
// ---------------------------------------------------------------------------

enum class Gender : std::uint8_t { Female, Male };
enum class Status : std::uint8_t { Student, Staff, Other };

std::string_view gender_name(Gender g);
std::string_view status_name(Status s);
std::optional<Gender> parse_gender(std::string_view s);
std::optional<Status> parse_status(std::string_view s);

struct PersonRecord {
  std::string person_id;
  std::optional<Gender> gender;
  std::optional<Status> status;
  std::optional<int> birth_year;

  friend bool operator==(const PersonRecord&, const PersonRecord&) = default;
};

class Demographics {
 public:
  void add(PersonRecord record);
  const PersonRecord* find(std::string_view person_id) const;
  std::size_t size() const noexcept { return records_.size(); }
  const std::map<std::string, PersonRecord, std::less<>>& records() const noexcept { return records_; }

  /// Fills missing statuses from `predicted` (true labels always win).
  void merge_predicted_status(const std::map<std::string, Status, std::less<>>& predicted);

  /// person_id,gender,status,birth_year; empty fields allowed.
  static Demographics read_csv(std::istream& in);
  void write_csv(std::ostream& out) const;

 private:
  std::map<std::string, PersonRecord, std::less<>> records_;
};

// ---------------------------------------------------------------------------
// Transactions
// ---------------------------------------------------------------------------

struct Transaction {
  std::string tx_id;
  std::string person_id;
  Timestamp timestamp{};
  std::string shop_id;
  std::string register_id;
  std::vector<std::string> basket;  // sorted, unique item codes

  friend bool operator==(const Transaction&, const Transaction&) = default;
};

/// Per-transaction values derived once at load time.
struct TxFacts {
  std::uint32_t person = 0;
  std::uint32_t shop = 0;
  std::uint32_t reg = 0;
  Date date{};
  Daypart daypart = Daypart::OutOfWindow;
  std::optional<Anchor> anchor;
  FeatureMask features = 0;

  bool has(Feature f) const noexcept { return (features & feature_bit(f)) != 0; }
};

/// Dense ids for repeated strings, assigned in first-seen order.
class Interner {
 public:
  std::uint32_t intern(const std::string& s);
  std::optional<std::uint32_t> find(std::string_view s) const;
  const std::string& name(std::uint32_t id) const { return names_[id]; }
  std::size_t size() const noexcept { return names_.size(); }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::uint32_t> ids_;
};

/// Immutable, validated, timestamp-sorted transaction log.
class TransactionLog {
 public:
  TransactionLog() = default;

  /// Sorts by (timestamp, tx_id) and derives facts. Throws Error on an empty
  /// basket or a duplicate tx_id.
  TransactionLog(std::vector<Transaction> transactions, const ItemCatalog& catalog);

  std::size_t size() const noexcept { return txs_.size(); }
  bool empty() const noexcept { return txs_.empty(); }
  const Transaction& operator[](std::size_t i) const { return txs_[i]; }
  const TxFacts& facts(std::size_t i) const { return facts_[i]; }
  std::span<const Transaction> transactions() const noexcept { return txs_; }

  const Interner& persons() const noexcept { return persons_; }
  const Interner& shops() const noexcept { return shops_; }
  const Interner& registers() const noexcept { return registers_; }
  std::optional<std::size_t> find_tx(std::string_view tx_id) const;

 private:
  std::vector<Transaction> txs_;
  std::vector<TxFacts> facts_;
  Interner persons_;
  Interner shops_;
  Interner registers_;
  std::unordered_map<std::string, std::size_t> tx_index_;
};

struct RecordError {
  std::size_t line = 0;
  std::string message;
};

struct IngestResult {
  TransactionLog log;
  std::size_t unknown_items = 0;  // item occurrences absent from the catalog
  std::vector<RecordError> rejected;
};

enum class TransactionFormat { Csv, JsonLines };

/// Streams records into a log. Malformed records (bad timestamp, empty
/// basket, missing fields) are rejected with their line number; a duplicate
/// tx_id is fatal.
IngestResult parse_transactions(std::istream& in, const ItemCatalog& catalog,
                                TransactionFormat format = TransactionFormat::Csv);

/// Canonical CSV form: header, log order, basket joined by ';'.
void write_transactions_csv(std::ostream& out, std::span<const Transaction> txs);
void write_transactions_jsonl(std::ostream& out, std::span<const Transaction> txs);

/// Throws Error when a birth year gives a negative age at any transaction.
void validate_ages(const TransactionLog& log, const Demographics& demographics);

}  // namespace mimicry
