#include "sparemine/bench.hpp"

#include <stdexcept>

#include "sparemine/condensed_tree.hpp"
#include "sparemine/mfi.hpp"
#include "sparemine/oracles.hpp"

namespace sparemine {

namespace {

struct RunOutcome {
    std::size_t itemset_count;
    std::size_t conditional_trees;
};

template <typename RunFn>
AlgoBench time_algorithm(std::string name, std::size_t repeat, const ClockFn& clock, RunFn&& run) {
    AlgoBench bench;
    bench.name = std::move(name);
    bench.runs = repeat;
    for (std::size_t r = 0; r < repeat; ++r) {
        const auto start = clock();
        const RunOutcome outcome = run();
        const auto stop = clock();
        bench.durations_ms.push_back(
            std::chrono::duration<double, std::milli>(stop - start).count());
        if (r == 0) {
            bench.itemset_count = outcome.itemset_count;
            bench.conditional_trees = outcome.conditional_trees;
        } else if (outcome.itemset_count != bench.itemset_count) {
            throw std::logic_error("itemset count changed across benchmark runs");
        }
    }
    double sum = 0.0;
    for (const double d : bench.durations_ms) sum += d;
    bench.mean_ms = repeat ? sum / static_cast<double>(repeat) : 0.0;
    return bench;
}

} // namespace

BenchReport run_bench(const TransactionDB& db, const SupportThreshold& minsup,
                      std::size_t repeat, ClockFn clock) {
    if (repeat < 1) throw std::invalid_argument("benchmark needs repeat >= 1");
    if (!clock) clock = [] { return std::chrono::steady_clock::now(); };

    BenchReport report;
    report.dataset.n_transactions = db.n_transactions();
    report.dataset.n_items = db.n_items();
    report.dataset.minsup_resolved = minsup.resolve(db.n_transactions());
    report.dataset.source = "file";

    // Sequential on purpose: the two algorithms never interleave.
    report.algorithms.push_back(time_algorithm("improvised", repeat, clock, [&] {
        const BuildResult state = build(db, minsup);
        const MiningResult mined = mine(state);
        return RunOutcome{mined.itemsets.size(), 0};   // no conditional trees exist here
    }));
    report.algorithms.push_back(time_algorithm("fpgrowth", repeat, clock, [&] {
        OracleStats stats;
        const auto sets = fpgrowth_mine(db, minsup, &stats);
        return RunOutcome{sets.size(), stats.conditional_trees};
    }));
    return report;
}

} // namespace sparemine
