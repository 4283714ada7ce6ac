#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sparemine/mfi.hpp"
#include "sparemine/txdb.hpp"

namespace sparemine {

struct ExactItemset {
    std::vector<ItemId> items;      // rank-sorted
    std::size_t support_count;      // exact transaction count
};

struct OracleStats {
    std::size_t conditional_trees = 0;   // conditional trees constructed by fpgrowth_mine
};

// Number of transactions containing every item of `items` (brute force).
std::size_t exact_support(const TransactionDB& db, std::span<const ItemId> items);

// Levelwise Apriori with sorted-prefix candidate joining and subset pruning.
// Returns every itemset with support >= resolved minsup, exact counts,
// canonically ordered (lexicographic over rank positions).
std::vector<ExactItemset> apriori_mine(const TransactionDB& db, const SupportThreshold& minsup);

// Classic FP-growth: multi-node-per-item prefix tree with node links and
// recursive conditional-pattern-base projection. Output order and contents
// are identical to apriori_mine. A conditional tree is constructed (and
// counted) for every item of every projection, matching the behavior the
// condensed pipeline exists to avoid.
std::vector<ExactItemset> fpgrowth_mine(const TransactionDB& db, const SupportThreshold& minsup,
                                        OracleStats* stats = nullptr);

struct FrequencyDelta {
    std::vector<ItemId> items;
    std::size_t mfi_frequency;
    std::size_t exact_support;
};

struct ValidationReport {
    double itemset_precision = 1.0;   // |mined ∩ exact| / |mined|, 1.0 when mined empty
    double itemset_recall = 1.0;      // |mined ∩ exact| / |exact|, 1.0 when exact empty
    std::vector<FrequencyDelta> frequency_deltas;   // common itemsets with diverging counts
    std::vector<ExactItemset> missing;              // exact-frequent but unmined
    std::vector<MinedItemset> spurious;             // mined but not exact-frequent
};

// Compares MFI output against an exact result computed from the same db and
// minsup. Itemset identity ignores frequencies; all report sections are
// deterministically ordered.
ValidationReport validate(const MiningResult& mining, const std::vector<ExactItemset>& exact);

} // namespace sparemine
