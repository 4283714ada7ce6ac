#include "sparemine/condensed_tree.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "sparemine/errors.hpp"

namespace sparemine {

CondensedTree::CondensedTree(std::size_t n_items_total)
    : node_by_item_(n_items_total, kNullNode) {
    nodes_.push_back(CondensedNode{kRootItem, kNullNode, {}});
}

NodeHandle CondensedTree::add_node(ItemId item, NodeHandle parent) {
    assert(node_by_item_.at(item) == kNullNode && "one node per item");
    const NodeHandle h = static_cast<NodeHandle>(nodes_.size());
    nodes_.push_back(CondensedNode{item, parent, {}});
    nodes_[parent].children.push_back(h);
    node_by_item_[item] = h;
    return h;
}

std::size_t CondensedTree::depth() const {
    std::size_t best = 0;
    for (NodeHandle h = 1; h < nodes_.size(); ++h) {
        std::size_t d = 0;
        for (NodeHandle cur = h; cur != root(); cur = nodes_[cur].parent) ++d;
        best = std::max(best, d);
    }
    return best;
}

ModifiedHeaderTable::ModifiedHeaderTable(const RankTable& ranks)
    : index_by_item_(ranks.rank_by_item.size(), kNoRank) {
    entries_.reserve(ranks.size());
    for (std::size_t rank = 0; rank < ranks.size(); ++rank) {
        const ItemId item = ranks.order[rank];
        entries_.push_back(HeaderEntry{item, 0, kNullNode});
        index_by_item_[item] = rank;
    }
}

void ModifiedHeaderTable::activate(ItemId item, NodeHandle node) {
    HeaderEntry& e = entries_.at(index_of(item));
    assert(e.node == kNullNode && e.tree_count == 0);
    e.node = node;
    e.tree_count = 1;
}

std::vector<ItemId> ModifiedHeaderTable::active_items() const {
    std::vector<ItemId> out;
    for (const HeaderEntry& e : entries_)
        if (e.tree_count > 0) out.push_back(e.item);
    return out;
}

std::vector<std::pair<ItemId, std::size_t>> SpareTable::nonzero(const RankTable& ranks) const {
    std::vector<std::pair<ItemId, std::size_t>> out;
    for (const ItemId item : ranks.order)
        if (count(item) > 0) out.emplace_back(item, count(item));
    return out;
}

BuildResult init_build(const TransactionDB& db, const SupportThreshold& minsup) {
    RankTable ranks = prune_and_rank(db, minsup);
    CondensedTree tree(db.n_items());
    ModifiedHeaderTable header(ranks);
    SpareTable spare(db.n_items());
    return BuildResult{std::move(ranks), std::move(tree), std::move(header), std::move(spare),
                       minsup.resolve(db.n_transactions()), 0};
}

void insert_transaction(BuildResult& state, std::span<const ItemId> sorted_items) {
    ++state.transactions_walked;
    if (sorted_items.empty()) return;   // nothing survived pruning

    const ItemId first = sorted_items.front();
    if (state.ranks.rank_of(first) != 0) {
        // Leading item is not the most frequent item: the whole transaction
        // goes to the spare table.
        for (const ItemId item : sorted_items) state.spare.add(item);
        return;
    }

    // Leading item: create the root's single child or bump its count.
    NodeHandle cursor;
    if (state.tree.has_node(first)) {
        cursor = state.tree.node_of(first);
        state.header.increment(first);
    } else {
        cursor = state.tree.add_node(first, state.tree.root());
        state.header.activate(first, cursor);
    }

    bool diverted = false;
    for (const ItemId item : sorted_items.subspan(1)) {
        if (diverted) {
            // Once one item is spared, the rest follow unconditionally.
            state.spare.add(item);
            continue;
        }
        if (state.tree.has_node(item)) {
            const NodeHandle node = state.tree.node_of(item);
            if (state.tree.node(node).parent == cursor) {
                state.header.increment(item);
                cursor = node;
            } else {
                // The item's unique node lives elsewhere in the tree.
                state.spare.add(item);
                diverted = true;
            }
        } else {
            cursor = state.tree.add_node(item, cursor);
            state.header.activate(item, cursor);
        }
    }
}

BuildResult build(const TransactionDB& db, const SupportThreshold& minsup) {
    BuildResult state = init_build(db, minsup);
    for (const Transaction& t : db.transactions) {
        const std::vector<ItemId> sorted = sort_transaction(t, state.ranks);
        insert_transaction(state, sorted);
    }
    return state;
}

std::size_t spare_count(const BuildResult& state, ItemId item) {
    return state.spare.count(item);
}

std::vector<ItemId> ancestor_items(const BuildResult& state, ItemId item) {
    if (item >= state.ranks.rank_by_item.size() || !state.ranks.survives(item) ||
        !state.tree.has_node(item))
        throw LookupError("item has no node in the condensed tree");
    std::vector<ItemId> chain;
    NodeHandle cur = state.tree.node(state.tree.node_of(item)).parent;
    while (cur != state.tree.root()) {
        chain.push_back(state.tree.node(cur).item);
        cur = state.tree.node(cur).parent;
    }
    return chain;   // nearest parent first, most frequent item last
}

namespace {

void dump_node(const BuildResult& state, const TransactionDB& db, NodeHandle h,
               std::size_t depth, std::ostringstream& out) {
    const CondensedNode& node = state.tree.node(h);
    for (std::size_t i = 0; i < depth; ++i) out << "  ";
    if (node.item == kRootItem) {
        out << "NULL\n";
    } else {
        out << db.name_of(node.item) << ':' << state.header.tree_count(node.item) << '\n';
    }
    std::vector<NodeHandle> kids = node.children;
    std::sort(kids.begin(), kids.end(), [&](NodeHandle a, NodeHandle b) {
        return state.ranks.rank_of(state.tree.node(a).item) <
               state.ranks.rank_of(state.tree.node(b).item);
    });
    for (const NodeHandle kid : kids) dump_node(state, db, kid, depth + 1, out);
}

} // namespace

std::string dump_tree(const BuildResult& state, const TransactionDB& db) {
    std::ostringstream out;
    dump_node(state, db, state.tree.root(), 0, out);
    for (const auto& [item, count] : state.spare.nonzero(state.ranks))
        out << "SPARE " << db.name_of(item) << ':' << count << '\n';
    return out.str();
}

} // namespace sparemine
