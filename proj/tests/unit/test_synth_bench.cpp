#include "doctest.h"

#include <chrono>
#include <stdexcept>

#include "fixtures.hpp"
#include "sparemine/bench.hpp"
#include "sparemine/synth.hpp"
#include "sparemine/txdb.hpp"

using namespace sparemine;

TEST_CASE("synthetic generation is deterministic") {
    SyntheticSpec spec;
    spec.n_transactions = 200;
    spec.n_items = 10;
    spec.seed = 42;

    const TransactionDB a = gen_synthetic(spec);
    const TransactionDB b = gen_synthetic(spec);
    CHECK(a == b);
    CHECK(to_basket(a) == to_basket(b));

    spec.seed = 43;
    CHECK(to_basket(gen_synthetic(spec)) != to_basket(a));
}

TEST_CASE("synthetic generation basics") {
    SUBCASE("zero transactions") {
        SyntheticSpec spec;
        spec.n_transactions = 0;
        spec.n_items = 5;
        spec.seed = 1;
        const TransactionDB db = gen_synthetic(spec);
        CHECK(db.n_transactions() == 0);
        CHECK(to_basket(db).empty());
    }
    SUBCASE("transactions are canonical and bounded") {
        SyntheticSpec spec;
        spec.n_transactions = 300;
        spec.n_items = 6;
        spec.seed = 9;
        const TransactionDB db = gen_synthetic(spec);
        REQUIRE(db.n_transactions() == 300);
        for (const Transaction& t : db.transactions) {
            CHECK(!t.empty());
            CHECK(t.size() <= 6);
            for (std::size_t i = 0; i + 1 < t.size(); ++i) CHECK(t[i] < t[i + 1]);
        }
    }
    SUBCASE("parameter validation") {
        SyntheticSpec spec;
        spec.n_items = 0;
        CHECK_THROWS_AS(gen_synthetic(spec), std::invalid_argument);
        spec.n_items = 3;
        spec.popularity_decay = 1.0;
        CHECK_THROWS_AS(gen_synthetic(spec), std::invalid_argument);
        spec.popularity_decay = 0.5;
        spec.length_continue = 1.0;
        CHECK_THROWS_AS(gen_synthetic(spec), std::invalid_argument);
    }
}

TEST_CASE("popularity skew shows up in realized supports") {
    SyntheticSpec spec;
    spec.n_transactions = 1000;
    spec.n_items = 12;
    spec.seed = 7;

    const auto weights = spec.popularity_weights();
    for (std::size_t i = 0; i + 1 < weights.size(); ++i) CHECK(weights[i] > weights[i + 1]);

    const TransactionDB db = gen_synthetic(spec);
    const auto counts = item_supports(db);
    REQUIRE(counts.size() == 12);
    // item ids follow the generator's popularity order; realized counts may
    // wobble, but never by more than sampling noise
    for (std::size_t i = 0; i + 1 < counts.size(); ++i)
        CHECK(counts[i] + 40 >= counts[i + 1]);
    CHECK(counts[0] > counts[11]);
}

TEST_CASE("bench harness") {
    const TransactionDB db = testdata::table2_db();

    SUBCASE("single repeat, mean equals the run") {
        const BenchReport report = run_bench(db, SupportThreshold::absolute(4), 1);
        REQUIRE(report.algorithms.size() == 2);
        for (const AlgoBench& a : report.algorithms) {
            REQUIRE(a.durations_ms.size() == 1);
            CHECK(a.mean_ms == a.durations_ms[0]);
        }
    }
    SUBCASE("both algorithms report nine itemsets on the worked example") {
        const BenchReport report = run_bench(db, SupportThreshold::absolute(4), 2);
        CHECK(report.algorithms[0].name == "improvised");
        CHECK(report.algorithms[0].itemset_count == 9);
        CHECK(report.algorithms[1].name == "fpgrowth");
        CHECK(report.algorithms[1].itemset_count == 9);
        CHECK(report.algorithms[0].conditional_trees == 0);
        CHECK(report.algorithms[1].conditional_trees >= 1);
    }
    SUBCASE("injected clock brackets exactly the mining runs") {
        std::size_t calls = 0;
        const auto t0 = std::chrono::steady_clock::time_point{};
        const ClockFn fake = [&calls, t0] {
            return t0 + std::chrono::milliseconds(calls++);
        };
        const std::size_t repeat = 3;
        const BenchReport report = run_bench(db, SupportThreshold::absolute(4), repeat, fake);
        CHECK(calls == 2 * 2 * repeat);   // two samples per run, nothing else timed
        for (const AlgoBench& a : report.algorithms) {
            for (const double d : a.durations_ms) CHECK(d == 1.0);
            CHECK(a.mean_ms == 1.0);
        }
    }
    SUBCASE("mean is the arithmetic mean") {
        std::size_t calls = 0;
        // gaps of 1ms, 3ms, 5ms, ... between consecutive samples
        const auto t0 = std::chrono::steady_clock::time_point{};
        std::size_t accumulated = 0;
        const ClockFn fake = [&]() {
            accumulated += calls;
            ++calls;
            return t0 + std::chrono::milliseconds(accumulated);
        };
        const BenchReport report = run_bench(db, SupportThreshold::absolute(4), 2, fake);
        const AlgoBench& a = report.algorithms[0];
        REQUIRE(a.durations_ms.size() == 2);
        CHECK(a.mean_ms == (a.durations_ms[0] + a.durations_ms[1]) / 2.0);
    }
    SUBCASE("repeat must be positive") {
        CHECK_THROWS_AS(run_bench(db, SupportThreshold::absolute(4), 0),
                        std::invalid_argument);
    }
}
