#include "sparemine/mfi.hpp"

#include <algorithm>
#include <bit>

#include "sparemine/errors.hpp"

namespace sparemine {

namespace {

// All 2^|pool| subsets of `pool`, each unioned with `anchor`, in ascending
// bitmask order (bit i selects pool[i]); every emitted itemset is rank-sorted.
std::vector<std::vector<ItemId>> subsets_with_anchor(const std::vector<ItemId>& pool,
                                                     ItemId anchor, const RankTable& ranks) {
    std::vector<std::vector<ItemId>> out;
    out.reserve(std::size_t{1} << pool.size());
    for (std::size_t mask = 0; mask < (std::size_t{1} << pool.size()); ++mask) {
        std::vector<ItemId> items;
        items.reserve(std::popcount(mask) + 1);
        for (std::size_t bit = 0; bit < pool.size(); ++bit)
            if (mask & (std::size_t{1} << bit)) items.push_back(pool[bit]);
        items.push_back(anchor);
        std::sort(items.begin(), items.end(), [&](ItemId a, ItemId b) {
            return ranks.rank_of(a) < ranks.rank_of(b);
        });
        out.push_back(std::move(items));
    }
    return out;
}

std::vector<ItemId> active_items_above(const BuildResult& state, ItemId anchor) {
    std::vector<ItemId> pool;
    const std::size_t limit = state.header.index_of(anchor);
    const auto& entries = state.header.entries();
    for (std::size_t i = 0; i < limit; ++i)
        if (entries[i].tree_count > 0) pool.push_back(entries[i].item);
    return pool;
}

} // namespace

std::vector<std::vector<ItemId>> higher_ranked_subsets(const BuildResult& state, ItemId anchor) {
    if (!state.header.has_entry(anchor) || !state.header.active(anchor))
        throw LookupError("anchor has no active header entry");
    return subsets_with_anchor(active_items_above(state, anchor), anchor, state.ranks);
}

std::vector<std::vector<ItemId>> path_subsets(const BuildResult& state, ItemId anchor) {
    return subsets_with_anchor(ancestor_items(state, anchor), anchor, state.ranks);
}

MiningResult mine(const BuildResult& state) {
    MiningResult result;
    result.minsup_resolved = state.minsup_resolved;

    const std::size_t s = state.minsup_resolved;
    for (const HeaderEntry& entry : state.header.entries()) {
        if (entry.tree_count == 0) continue;   // item never obtained a tree node
        const ItemId anchor = entry.item;
        const std::size_t f = entry.tree_count;

        std::size_t ff;
        std::vector<ItemId> pool;
        if (f == s) {
            // Pair the anchor with the active header items ranked above it.
            ff = f;
            pool = active_items_above(state, anchor);
        } else {
            // Pair the anchor with its ancestors up to the most frequent
            // item; below-threshold tree counts are topped up from the spare
            // table.
            ff = (f > s) ? f : f + state.spare.count(anchor);
            pool = ancestor_items(state, anchor);
            result.node_visits += pool.size() + 1;
        }

        if (ff < s) {
            // Unreachable in practice: tree_count + spare_count equals the
            // global support, which met the threshold. Kept as a guard so the
            // output invariant never depends on that argument.
            ++result.batches_discarded;
            continue;
        }

        const std::size_t first = result.itemsets.size();
        for (auto& items : subsets_with_anchor(pool, anchor, state.ranks))
            result.itemsets.push_back(MinedItemset{std::move(items), ff});
        result.batches.push_back(
            AnchorBatch{anchor, ff, first, result.itemsets.size() - first});
    }
    return result;
}

} // namespace sparemine
