#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace sparemine {

// Dense handle for an item. Ids are assigned contiguously in first-appearance
// order of the item names in the source; the name<->id mapping is a bijection.
using ItemId = std::uint32_t;

inline constexpr std::size_t kNoRank = std::numeric_limits<std::size_t>::max();

// Canonical transaction: item ids, sorted ascending, duplicate-free.
using Transaction = std::vector<ItemId>;

struct TransactionDB {
    std::vector<Transaction> transactions;
    std::vector<std::string> item_names;                 // id -> name
    std::unordered_map<std::string, ItemId> item_ids;    // name -> id

    std::size_t n_transactions() const { return transactions.size(); }
    std::size_t n_items() const { return item_names.size(); }

    // Returns the id for `name`, interning it if unseen.
    ItemId intern(std::string_view name);
    const std::string& name_of(ItemId id) const { return item_names.at(id); }

    bool operator==(const TransactionDB& other) const {
        return transactions == other.transactions && item_names == other.item_names;
    }
};

// Minimum support, either an absolute transaction count or a fraction of the
// database. Fractions are kept as exact rationals so resolution never suffers
// a floating-point boundary: fraction num/den resolves to ceil(num*n/den).
class SupportThreshold {
public:
    static SupportThreshold absolute(std::size_t count);
    // num/den must lie in (0, 1].
    static SupportThreshold fraction_ratio(std::uint64_t num, std::uint64_t den);
    // Convenience for in-code fractions; converted to a rational over 10^9.
    static SupportThreshold fraction(double f);
    // Accepts "N" (absolute) or "P%" (relative). Throws std::invalid_argument.
    static SupportThreshold parse(std::string_view text);

    // Resolved absolute count; at least 1 so that "support >= resolved" is a
    // real constraint whenever the database is non-empty.
    std::size_t resolve(std::size_t n_transactions) const;

    bool is_fraction() const { return is_fraction_; }

private:
    SupportThreshold() = default;
    bool is_fraction_ = false;
    std::size_t absolute_ = 0;
    std::uint64_t num_ = 0;
    std::uint64_t den_ = 1;
};

// Global support-rank order over the items that survive pruning: descending
// support, ties broken by ascending item name. Rank 0 is the unique most
// frequent item.
struct RankTable {
    std::vector<ItemId> order;                 // rank -> item
    std::vector<std::size_t> rank_by_item;     // id -> rank, kNoRank when pruned
    std::vector<std::size_t> support_by_item;  // id -> global support (0 when pruned)

    std::size_t size() const { return order.size(); }
    bool empty() const { return order.empty(); }
    bool survives(ItemId id) const {
        return id < rank_by_item.size() && rank_by_item[id] != kNoRank;
    }
    std::size_t rank_of(ItemId id) const { return rank_by_item.at(id); }
    std::size_t support(ItemId id) const { return support_by_item.at(id); }
};

// Basket format: UTF-8 text, one transaction per line, items separated by
// commas and/or whitespace, '#' lines and blank lines ignored, duplicates
// within a line collapsed. Throws DecodeError on malformed UTF-8.
TransactionDB load_basket(std::istream& in);
TransactionDB load_basket(std::string_view text);

// CSV variant: comma-separated only; when first_column_is_id the first field
// of each row is a transaction label and is discarded.
TransactionDB load_csv(std::istream& in, bool first_column_is_id);

// Serializes back to basket format (items of each transaction in id order).
// Reloading the output yields a database equal to the input.
void write_basket(const TransactionDB& db, std::ostream& out);
std::string to_basket(const TransactionDB& db);

// Transaction count per item (set semantics), indexed by item id.
std::vector<std::size_t> item_supports(const TransactionDB& db);

RankTable prune_and_rank(const TransactionDB& db, const SupportThreshold& minsup);

// Drops pruned items and orders the survivors by ascending rank
// (= descending global support).
std::vector<ItemId> sort_transaction(const Transaction& t, const RankTable& ranks);

} // namespace sparemine
