#pragma once

#include <cstdint>
#include <vector>

#include "sparemine/txdb.hpp"

namespace sparemine {

// Seeded synthetic basket generator: item popularity decays geometrically
// with the item index, transaction lengths follow a bounded geometric. The
// same spec always yields a byte-identical dataset; all randomness is drawn
// from raw mt19937_64 output with explicit arithmetic, so no library
// distribution implementation can shift the stream.
struct SyntheticSpec {
    std::size_t n_transactions = 0;
    std::size_t n_items = 1;
    std::uint64_t seed = 0;
    double popularity_decay = 0.8;   // weight of item i is decay^i, in (0,1)
    double length_continue = 0.7;    // P(extend transaction), in [0,1)

    // decay^i for i in [0, n_items), non-increasing by construction.
    std::vector<double> popularity_weights() const;
};

// Throws std::invalid_argument on out-of-range parameters.
TransactionDB gen_synthetic(const SyntheticSpec& spec);

} // namespace sparemine
