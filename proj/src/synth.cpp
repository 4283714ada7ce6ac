#include "sparemine/synth.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace sparemine {

namespace {

// Uniform double in [0, 1) from the top 53 bits of one mt19937_64 draw.
// Bit-stable across standard libraries, unlike std:: distributions.
double next_uniform(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::string item_name(std::size_t index, std::size_t n_items) {
    std::size_t width = 1;
    for (std::size_t v = n_items > 0 ? n_items - 1 : 0; v >= 10; v /= 10) ++width;
    std::string digits = std::to_string(index);
    std::string name = "i";
    name.append(width > digits.size() ? width - digits.size() : 0, '0');
    name += digits;
    return name;
}

} // namespace

std::vector<double> SyntheticSpec::popularity_weights() const {
    std::vector<double> w(n_items);
    double cur = 1.0;
    for (std::size_t i = 0; i < n_items; ++i) {
        w[i] = cur;
        cur *= popularity_decay;
    }
    return w;
}

TransactionDB gen_synthetic(const SyntheticSpec& spec) {
    if (spec.n_items < 1)
        throw std::invalid_argument("synthetic spec needs at least one item");
    if (!(spec.popularity_decay > 0.0) || !(spec.popularity_decay < 1.0))
        throw std::invalid_argument("popularity decay must lie in (0, 1)");
    if (!(spec.length_continue >= 0.0) || !(spec.length_continue < 1.0))
        throw std::invalid_argument("length continue probability must lie in [0, 1)");

    TransactionDB db;
    for (std::size_t i = 0; i < spec.n_items; ++i)
        db.intern(item_name(i, spec.n_items));

    const std::vector<double> weights = spec.popularity_weights();
    std::mt19937_64 rng(spec.seed);

    std::vector<char> taken(spec.n_items, 0);
    for (std::size_t t = 0; t < spec.n_transactions; ++t) {
        // Bounded geometric length, at least 1, at most n_items.
        std::size_t length = 1;
        while (length < spec.n_items && next_uniform(rng) < spec.length_continue) ++length;

        // Weighted sampling without replacement by prefix-sum walk.
        std::fill(taken.begin(), taken.end(), 0);
        double total = 0.0;
        for (const double w : weights) total += w;

        Transaction tx;
        tx.reserve(length);
        for (std::size_t pick = 0; pick < length; ++pick) {
            const double u = next_uniform(rng) * total;
            double acc = 0.0;
            std::size_t chosen = spec.n_items;
            for (std::size_t i = 0; i < spec.n_items; ++i) {
                if (taken[i]) continue;
                acc += weights[i];
                if (u < acc) { chosen = i; break; }
            }
            if (chosen == spec.n_items) {   // float edge: take the last free item
                for (std::size_t i = spec.n_items; i-- > 0;)
                    if (!taken[i]) { chosen = i; break; }
            }
            taken[chosen] = 1;
            total -= weights[chosen];
            tx.push_back(static_cast<ItemId>(chosen));
        }
        std::sort(tx.begin(), tx.end());
        db.transactions.push_back(std::move(tx));
    }
    return db;
}

} // namespace sparemine
