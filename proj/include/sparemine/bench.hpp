#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sparemine/synth.hpp"
#include "sparemine/txdb.hpp"

namespace sparemine {

struct AlgoBench {
    std::string name;
    std::size_t runs = 0;
    std::vector<double> durations_ms;   // wall clock per run, raw, no warm-up discard
    double mean_ms = 0.0;
    std::size_t itemset_count = 0;      // identical across runs by construction
    std::size_t conditional_trees = 0;  // per run; 0 for the condensed pipeline
};

struct DatasetDescriptor {
    std::size_t n_transactions = 0;
    std::size_t n_items = 0;
    std::size_t minsup_resolved = 0;
    std::string source;                    // "file" or "synthetic"
    std::optional<SyntheticSpec> spec;     // provenance when synthetic
};

struct BenchReport {
    DatasetDescriptor dataset;
    std::vector<AlgoBench> algorithms;     // condensed pipeline first, then fpgrowth
};

using ClockFn = std::function<std::chrono::steady_clock::time_point()>;

// Times the condensed pipeline (build + mine) and classic FP-growth `repeat`
// times each over the same in-memory database, strictly sequentially. Only
// the mining runs sit between clock samples; parsing and report rendering are
// outside. The clock is injectable for tests.
BenchReport run_bench(const TransactionDB& db, const SupportThreshold& minsup,
                      std::size_t repeat, ClockFn clock = {});

} // namespace sparemine
