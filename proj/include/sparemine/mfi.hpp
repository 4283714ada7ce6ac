#pragma once

#include <cstddef>
#include <vector>

#include "sparemine/condensed_tree.hpp"

namespace sparemine {

struct MinedItemset {
    std::vector<ItemId> items;   // rank-sorted, strictly increasing, non-empty
    std::size_t frequency;       // FF, shared by the whole anchor batch
};

struct AnchorBatch {
    ItemId anchor;
    std::size_t ff;
    std::size_t first;   // index of the batch's first itemset in `itemsets`
    std::size_t count;
};

struct MiningResult {
    std::vector<MinedItemset> itemsets;   // (anchor order, bitmask order)
    std::vector<AnchorBatch> batches;     // header order, one per kept anchor
    std::size_t minsup_resolved = 0;
    // Instrumentation: tree nodes touched (each anchor costs its parent-chain
    // length, nothing more — there is no recursion over the tree), and
    // batches dropped by the FF >= minsup filter.
    std::size_t node_visits = 0;
    std::size_t batches_discarded = 0;
};

// Mines frequent itemsets straight off the build result, one batch per active
// header entry. With f = tree count, s = resolved minsup, scount = spare
// count: f == s pairs the anchor with every subset of the active header items
// ranked above it at FF = f; f > s pairs it with every subset of its tree
// ancestors at FF = f; f < s does the same at FF = f + scount. Batches whose
// FF falls below s are discarded whole.
MiningResult mine(const BuildResult& state);

// All 2^i subsets of the i active header items strictly above `anchor`, each
// unioned with the anchor, in bitmask order over header positions.
// Throws LookupError when the anchor has no active entry.
std::vector<std::vector<ItemId>> higher_ranked_subsets(const BuildResult& state, ItemId anchor);

// All 2^k subsets of the anchor's k tree ancestors, each unioned with the
// anchor, in bitmask order over the chain (nearest parent = bit 0).
// Throws LookupError when the anchor has no node.
std::vector<std::vector<ItemId>> path_subsets(const BuildResult& state, ItemId anchor);

} // namespace sparemine
