#pragma once

#include <random>
#include <string>
#include <vector>

#include "sparemine/txdb.hpp"

namespace sparemine::testdata {

// Five-transaction example used for the support/confidence walkthrough:
//   T1 A,B,D | T2 A,C,D,E | T3 B,D | T4 A | T5 A,B,C,D
inline TransactionDB table1_db() {
    return load_basket(std::string_view("A,B,D\nA,C,D,E\nB,D\nA\nA,B,C,D\n"));
}

// Nine-transaction example driving the tree build and the miner:
//   T1 A,B,C | T2 A,D | T3 B,E | T4 A,C | T5 A,C,D
//   T6 A,B,C,D | T7 A,B,C | T8 B,D | T9 A,B,C,D
inline TransactionDB table2_db() {
    return load_basket(
        std::string_view("A,B,C\nA,D\nB,E\nA,C\nA,C,D\nA,B,C,D\nA,B,C\nB,D\nA,B,C,D\n"));
}

// Random database over up to `max_items` single-letter items. Transactions
// are independent Bernoulli rows, so co-occurrence structure varies widely.
inline TransactionDB random_db(std::mt19937& rng, std::size_t max_items = 12,
                               std::size_t max_transactions = 200) {
    const std::size_t n_items = 1 + rng() % max_items;
    const std::size_t n_tx = rng() % (max_transactions + 1);
    const double density = 0.05 + 0.9 * (static_cast<double>(rng() % 1000) / 1000.0);

    std::string text;
    for (std::size_t t = 0; t < n_tx; ++t) {
        std::string line;
        for (std::size_t i = 0; i < n_items; ++i) {
            if (static_cast<double>(rng() % 1000) / 1000.0 < density) {
                if (!line.empty()) line += ',';
                line += static_cast<char>('a' + i);
            }
        }
        text += line;
        text += '\n';
    }
    return load_basket(std::string_view(text));
}

} // namespace sparemine::testdata
