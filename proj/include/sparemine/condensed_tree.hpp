#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sparemine/txdb.hpp"

namespace sparemine {

using NodeHandle = std::uint32_t;
inline constexpr NodeHandle kNullNode = std::numeric_limits<NodeHandle>::max();
inline constexpr ItemId kRootItem = std::numeric_limits<ItemId>::max();

struct CondensedNode {
    ItemId item;                        // kRootItem for the synthetic root
    NodeHandle parent;                  // kNullNode for the root
    std::vector<NodeHandle> children;
};

// The condensed prefix tree: at most one node per item, a synthetic NULL root
// whose only possible child is the globally most frequent item, and ranks
// strictly increasing along every downward edge.
class CondensedTree {
public:
    explicit CondensedTree(std::size_t n_items_total);

    NodeHandle root() const { return 0; }
    bool has_node(ItemId item) const { return node_by_item_.at(item) != kNullNode; }
    NodeHandle node_of(ItemId item) const { return node_by_item_.at(item); }
    const CondensedNode& node(NodeHandle h) const { return nodes_.at(h); }

    // Creates the unique node for `item` under `parent`.
    NodeHandle add_node(ItemId item, NodeHandle parent);

    // Item nodes only (the root is not counted).
    std::size_t n_item_nodes() const { return nodes_.size() - 1; }
    // Longest root-to-leaf chain, in item nodes.
    std::size_t depth() const;

private:
    std::vector<CondensedNode> nodes_;       // nodes_[0] is the root
    std::vector<NodeHandle> node_by_item_;   // id -> handle, kNullNode when absent
};

struct HeaderEntry {
    ItemId item;
    std::size_t tree_count;   // occurrences absorbed by the tree node
    NodeHandle node;          // kNullNode until the node is created
};

// Support-rank-ordered table of (item, in-tree count, node handle). Entries
// are pre-allocated for every surviving item and activate on first node
// creation, so existence checks are O(1) and the mandated descending order
// never needs a re-sort. Active entries (tree_count > 0) are exactly the
// items present in the tree.
class ModifiedHeaderTable {
public:
    ModifiedHeaderTable() = default;
    explicit ModifiedHeaderTable(const RankTable& ranks);

    std::size_t index_of(ItemId item) const { return index_by_item_.at(item); }
    bool has_entry(ItemId item) const {
        return item < index_by_item_.size() && index_by_item_[item] != kNoRank;
    }
    bool active(ItemId item) const {
        return has_entry(item) && entries_[index_by_item_[item]].tree_count > 0;
    }
    std::size_t tree_count(ItemId item) const { return entries_.at(index_of(item)).tree_count; }

    void activate(ItemId item, NodeHandle node);
    void increment(ItemId item) { ++entries_.at(index_of(item)).tree_count; }

    const std::vector<HeaderEntry>& entries() const { return entries_; }
    // Items with a tree node, in rank order.
    std::vector<ItemId> active_items() const;

private:
    std::vector<HeaderEntry> entries_;          // rank order
    std::vector<std::size_t> index_by_item_;    // id -> position, kNoRank if pruned
};

// Per-item counts of the occurrences the build diverts away from the tree.
// Zero entries are treated as absent.
class SpareTable {
public:
    SpareTable() = default;
    explicit SpareTable(std::size_t n_items_total) : counts_(n_items_total, 0) {}

    std::size_t count(ItemId item) const {
        return item < counts_.size() ? counts_[item] : 0;
    }
    void add(ItemId item) { ++counts_.at(item); }

    // (item, count) pairs for the non-zero entries, in the given rank order.
    std::vector<std::pair<ItemId, std::size_t>> nonzero(const RankTable& ranks) const;

private:
    std::vector<std::size_t> counts_;
};

struct BuildResult {
    RankTable ranks;
    CondensedTree tree;
    ModifiedHeaderTable header;
    SpareTable spare;
    std::size_t minsup_resolved = 0;
    // Transactions consumed by insert_transaction; build() leaves this equal
    // to the database size (the walk reads the sequence exactly once).
    std::size_t transactions_walked = 0;
};

// Support scan + prune/rank + empty tree and tables; no transactions inserted.
BuildResult init_build(const TransactionDB& db, const SupportThreshold& minsup);

// One step of the build walk. `sorted_items` must be rank-ordered and free of
// pruned items (the output of sort_transaction). If the leading item is not
// the most frequent item, every item of the transaction goes to the spare
// table. Otherwise the cursor descends from the root, and each next item
// either increments its child node, creates its first-ever node under the
// cursor, or — when it already has a node elsewhere — is diverted to the
// spare table together with all remaining items of the transaction.
void insert_transaction(BuildResult& state, std::span<const ItemId> sorted_items);

BuildResult build(const TransactionDB& db, const SupportThreshold& minsup);

// Stored spare count, 0 when absent.
std::size_t spare_count(const BuildResult& state, ItemId item);

// Items on the parent chain from `item` (exclusive) up to and including the
// most-frequent-item node; empty for the most frequent item itself.
// Throws LookupError when the item has no node.
std::vector<ItemId> ancestor_items(const BuildResult& state, ItemId item);

// Deterministic text rendering: one line per node as "item:tree_count"
// indented two spaces per depth, pre-order with children in rank order,
// then "SPARE item:count" lines in rank order. Bit-exact across runs.
std::string dump_tree(const BuildResult& state, const TransactionDB& db);

} // namespace sparemine
