#include "sparemine/oracles.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <unordered_map>

namespace sparemine {

namespace {

// Database projected to surviving items as strictly increasing rank-index
// sequences; empty rows dropped.
std::vector<std::vector<std::size_t>> rank_projected(const TransactionDB& db,
                                                     const RankTable& ranks) {
    std::vector<std::vector<std::size_t>> rows;
    rows.reserve(db.n_transactions());
    for (const Transaction& t : db.transactions) {
        std::vector<std::size_t> row;
        for (const ItemId id : t)
            if (ranks.survives(id)) row.push_back(ranks.rank_of(id));
        if (row.empty()) continue;
        std::sort(row.begin(), row.end());
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<ExactItemset> finalize(std::vector<std::vector<std::size_t>>&& rank_sets,
                                   std::vector<std::size_t>&& counts, const RankTable& ranks) {
    std::vector<ExactItemset> out;
    out.reserve(rank_sets.size());
    for (std::size_t i = 0; i < rank_sets.size(); ++i) {
        ExactItemset e;
        e.items.reserve(rank_sets[i].size());
        for (const std::size_t rank : rank_sets[i]) e.items.push_back(ranks.order[rank]);
        e.support_count = counts[i];
        out.push_back(std::move(e));
    }
    // Canonical order: lexicographic over rank positions. Items within a set
    // are already rank-sorted, but their ids are not ordered, so sort by the
    // rank sequence.
    std::vector<std::size_t> index(out.size());
    for (std::size_t i = 0; i < index.size(); ++i) index[i] = i;
    std::sort(index.begin(), index.end(), [&](std::size_t a, std::size_t b) {
        return std::lexicographical_compare(rank_sets[a].begin(), rank_sets[a].end(),
                                            rank_sets[b].begin(), rank_sets[b].end());
    });
    std::vector<ExactItemset> sorted;
    sorted.reserve(out.size());
    for (const std::size_t i : index) sorted.push_back(std::move(out[i]));
    return sorted;
}

// ---- classic FP-growth ------------------------------------------------

struct ClassicNode {
    std::size_t rank;   // global rank index of the item
    std::size_t count = 0;
    ClassicNode* parent = nullptr;
    ClassicNode* link = nullptr;   // node-link chain, insertion order
    std::vector<std::unique_ptr<ClassicNode>> children;
};

struct ClassicTree {
    std::unique_ptr<ClassicNode> root;
    // rank -> (total count, first node, last node); insertion-ordered links.
    std::map<std::size_t, std::size_t> item_count;
    std::map<std::size_t, ClassicNode*> link_head;
    std::map<std::size_t, ClassicNode*> link_tail;

    ClassicTree() : root(std::make_unique<ClassicNode>()) {}

    void insert(const std::vector<std::size_t>& path, std::size_t count) {
        ClassicNode* cur = root.get();
        for (const std::size_t rank : path) {
            ClassicNode* child = nullptr;
            for (const auto& c : cur->children)
                if (c->rank == rank) { child = c.get(); break; }
            if (!child) {
                auto owned = std::make_unique<ClassicNode>();
                child = owned.get();
                child->rank = rank;
                child->parent = cur;
                cur->children.push_back(std::move(owned));
                if (auto it = link_tail.find(rank); it != link_tail.end()) {
                    it->second->link = child;
                    it->second = child;
                } else {
                    link_head[rank] = child;
                    link_tail[rank] = child;
                }
            }
            child->count += count;
            item_count[rank] += count;
            cur = child;
        }
    }
};

void fpgrowth_project(const ClassicTree& tree, std::size_t minsup,
                      const std::vector<std::size_t>& suffix,
                      std::vector<std::vector<std::size_t>>& out_sets,
                      std::vector<std::size_t>& out_counts, OracleStats& stats) {
    // Process header items bottom-up (lowest support rank last in the global
    // order, so highest rank index first).
    for (auto it = tree.item_count.rbegin(); it != tree.item_count.rend(); ++it) {
        const std::size_t rank = it->first;
        const std::size_t count = it->second;
        if (count < minsup) continue;   // possible inside conditional trees

        std::vector<std::size_t> found{rank};
        found.insert(found.end(), suffix.begin(), suffix.end());
        std::sort(found.begin(), found.end());
        out_sets.push_back(found);
        out_counts.push_back(count);

        // Conditional pattern base: prefix path of every node of this item.
        std::vector<std::pair<std::vector<std::size_t>, std::size_t>> base;
        for (const ClassicNode* node = tree.link_head.at(rank); node; node = node->link) {
            std::vector<std::size_t> path;
            for (const ClassicNode* p = node->parent; p && p->parent; p = p->parent)
                path.push_back(p->rank);
            std::reverse(path.begin(), path.end());
            if (!path.empty()) base.emplace_back(std::move(path), node->count);
        }

        // A conditional tree is generated for every item, as the traditional
        // algorithm prescribes, even when its pattern base is empty.
        ++stats.conditional_trees;
        std::map<std::size_t, std::size_t> cond_counts;
        for (const auto& [path, c] : base)
            for (const std::size_t r : path) cond_counts[r] += c;

        ClassicTree cond;
        for (const auto& [path, c] : base) {
            std::vector<std::size_t> filtered;
            for (const std::size_t r : path)
                if (cond_counts[r] >= minsup) filtered.push_back(r);
            if (!filtered.empty()) cond.insert(filtered, c);
        }
        if (cond.item_count.empty()) continue;

        std::vector<std::size_t> new_suffix{rank};
        new_suffix.insert(new_suffix.end(), suffix.begin(), suffix.end());
        fpgrowth_project(cond, minsup, new_suffix, out_sets, out_counts, stats);
    }
}

} // namespace

std::size_t exact_support(const TransactionDB& db, std::span<const ItemId> items) {
    std::vector<ItemId> sorted(items.begin(), items.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::size_t n = 0;
    for (const Transaction& t : db.transactions)
        if (std::includes(t.begin(), t.end(), sorted.begin(), sorted.end())) ++n;
    return n;
}

std::vector<ExactItemset> apriori_mine(const TransactionDB& db, const SupportThreshold& minsup) {
    const RankTable ranks = prune_and_rank(db, minsup);
    const std::size_t s = minsup.resolve(db.n_transactions());
    const auto rows = rank_projected(db, ranks);

    std::vector<std::vector<std::size_t>> all_sets;
    std::vector<std::size_t> all_counts;

    // Level 1: the survivors themselves.
    std::vector<std::vector<std::size_t>> level;
    for (std::size_t rank = 0; rank < ranks.size(); ++rank) {
        level.push_back({rank});
        all_sets.push_back({rank});
        all_counts.push_back(ranks.support(ranks.order[rank]));
    }

    while (!level.empty()) {
        // Sorted-prefix join: two k-sets sharing their first k-1 entries make
        // a (k+1)-candidate, pruned unless every k-subset is frequent.
        std::set<std::vector<std::size_t>> previous(level.begin(), level.end());
        std::vector<std::vector<std::size_t>> candidates;
        for (std::size_t i = 0; i < level.size(); ++i) {
            for (std::size_t j = i + 1; j < level.size(); ++j) {
                const auto& a = level[i];
                const auto& b = level[j];
                if (!std::equal(a.begin(), a.end() - 1, b.begin(), b.end() - 1)) continue;
                std::vector<std::size_t> cand = a;
                cand.push_back(std::max(a.back(), b.back()));
                if (cand[cand.size() - 2] > cand.back())
                    std::swap(cand[cand.size() - 2], cand.back());

                bool prunable = false;
                std::vector<std::size_t> sub(cand.begin(), cand.end() - 1);
                for (std::size_t drop = 0; drop < cand.size(); ++drop) {
                    sub.assign(cand.begin(), cand.end());
                    sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
                    if (!previous.contains(sub)) { prunable = true; break; }
                }
                if (!prunable) candidates.push_back(std::move(cand));
            }
        }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

        std::vector<std::size_t> counts(candidates.size(), 0);
        for (const auto& row : rows)
            for (std::size_t c = 0; c < candidates.size(); ++c)
                if (std::includes(row.begin(), row.end(), candidates[c].begin(),
                                  candidates[c].end()))
                    ++counts[c];

        level.clear();
        for (std::size_t c = 0; c < candidates.size(); ++c) {
            if (counts[c] < s) continue;
            level.push_back(candidates[c]);
            all_sets.push_back(candidates[c]);
            all_counts.push_back(counts[c]);
        }
    }

    return finalize(std::move(all_sets), std::move(all_counts), ranks);
}

std::vector<ExactItemset> fpgrowth_mine(const TransactionDB& db, const SupportThreshold& minsup,
                                        OracleStats* stats) {
    const RankTable ranks = prune_and_rank(db, minsup);
    const std::size_t s = minsup.resolve(db.n_transactions());

    ClassicTree tree;
    for (const auto& row : rank_projected(db, ranks)) tree.insert(row, 1);

    OracleStats local;
    OracleStats& st = stats ? *stats : local;
    std::vector<std::vector<std::size_t>> sets;
    std::vector<std::size_t> counts;
    fpgrowth_project(tree, s, {}, sets, counts, st);

    return finalize(std::move(sets), std::move(counts), ranks);
}

ValidationReport validate(const MiningResult& mining, const std::vector<ExactItemset>& exact) {
    // Identity is the item set alone; the canonical key is the id-sorted items.
    auto key_of = [](const std::vector<ItemId>& items) {
        std::vector<ItemId> k = items;
        std::sort(k.begin(), k.end());
        return k;
    };

    std::map<std::vector<ItemId>, std::size_t> exact_by_key;
    for (const ExactItemset& e : exact) exact_by_key.emplace(key_of(e.items), e.support_count);
    std::set<std::vector<ItemId>> mined_keys;
    for (const MinedItemset& m : mining.itemsets) mined_keys.insert(key_of(m.items));

    ValidationReport report;
    std::size_t common = 0;
    for (const MinedItemset& m : mining.itemsets) {
        const auto it = exact_by_key.find(key_of(m.items));
        if (it == exact_by_key.end()) {
            report.spurious.push_back(m);
            continue;
        }
        ++common;
        if (m.frequency != it->second)
            report.frequency_deltas.push_back(FrequencyDelta{m.items, m.frequency, it->second});
    }
    for (const ExactItemset& e : exact)
        if (!mined_keys.contains(key_of(e.items))) report.missing.push_back(e);

    report.itemset_precision =
        mining.itemsets.empty()
            ? 1.0
            : static_cast<double>(common) / static_cast<double>(mining.itemsets.size());
    report.itemset_recall =
        exact.empty() ? 1.0 : static_cast<double>(common) / static_cast<double>(exact.size());

    return report;
}

} // namespace sparemine
