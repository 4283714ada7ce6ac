#include "sparemine/rules.hpp"

#include <algorithm>
#include <charconv>
#include <unordered_map>

#include "sparemine/errors.hpp"

namespace sparemine {

namespace {

// Sorted-unique union of two item sets (by id).
std::vector<ItemId> set_union(std::span<const ItemId> a, std::span<const ItemId> b) {
    std::vector<ItemId> u(a.begin(), a.end());
    u.insert(u.end(), b.begin(), b.end());
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
    return u;
}

// Transactions are stored sorted by id, so containment is std::includes.
std::size_t count_containing(const TransactionDB& db, const std::vector<ItemId>& sorted_items) {
    std::size_t n = 0;
    for (const Transaction& t : db.transactions)
        if (std::includes(t.begin(), t.end(), sorted_items.begin(), sorted_items.end())) ++n;
    return n;
}

std::vector<ItemId> sorted_by_id(std::span<const ItemId> items) {
    std::vector<ItemId> v(items.begin(), items.end());
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

struct ItemsKeyHash {
    std::size_t operator()(const std::vector<ItemId>& v) const {
        std::size_t h = 1469598103934665603ULL;
        for (const ItemId id : v) {
            h ^= id;
            h *= 1099511628211ULL;
        }
        return h;
    }
};

} // namespace

ConfidenceThreshold ConfidenceThreshold::from_ratio(std::uint64_t num, std::uint64_t den) {
    if (den == 0 || num > den)
        throw std::invalid_argument("confidence threshold must lie in [0, 1]");
    ConfidenceThreshold t;
    t.num_ = num;
    t.den_ = den;
    return t;
}

ConfidenceThreshold ConfidenceThreshold::parse(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    if (s.empty()) throw std::invalid_argument("empty confidence threshold");

    bool percent = false;
    if (s.back() == '%') {
        percent = true;
        s.remove_suffix(1);
    }
    const std::size_t dot = s.find('.');
    const std::string_view int_part = (dot == std::string_view::npos) ? s : s.substr(0, dot);
    const std::string_view frac_part = (dot == std::string_view::npos) ? "" : s.substr(dot + 1);

    auto parse_digits = [&](std::string_view d, std::uint64_t fallback) {
        if (d.empty()) return fallback;
        std::uint64_t v = 0;
        const auto [ptr, ec] = std::from_chars(d.data(), d.data() + d.size(), v);
        if (ec != std::errc() || ptr != d.data() + d.size())
            throw std::invalid_argument("malformed confidence threshold: " + std::string(text));
        return v;
    };

    const std::uint64_t whole = parse_digits(int_part, 0);
    std::uint64_t den = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) {
        if (den > 1000000000000000000ULL / 10)
            throw std::invalid_argument("confidence threshold has too many digits");
        den *= 10;
    }
    const std::uint64_t frac = parse_digits(frac_part, 0);
    std::uint64_t num = whole * den + frac;
    if (percent) den *= 100;
    return from_ratio(num, den);
}

bool ConfidenceThreshold::accepts(std::size_t joint, std::size_t base) const {
    // joint/base >= num/den  <=>  joint*den >= base*num  (base > 0)
    using W = unsigned __int128;
    return static_cast<W>(joint) * den_ >= static_cast<W>(base) * num_;
}

std::vector<AssociationRule> RuleDerivation::selected_rules() const {
    std::vector<AssociationRule> out;
    for (const EvaluatedRule& e : evaluated)
        if (e.selected) out.push_back(e.rule);
    return out;
}

double support(const TransactionDB& db, std::span<const ItemId> a, std::span<const ItemId> b) {
    if (db.n_transactions() == 0)
        throw UndefinedMeasureError("support undefined over an empty database");
    const std::size_t joint = count_containing(db, set_union(a, b));
    return static_cast<double>(joint) / static_cast<double>(db.n_transactions());
}

double confidence(const TransactionDB& db, std::span<const ItemId> a, std::span<const ItemId> b) {
    const std::size_t base = count_containing(db, sorted_by_id(a));
    if (base == 0)
        throw UndefinedMeasureError("confidence undefined: no transaction contains the antecedent");
    const std::size_t joint = count_containing(db, set_union(a, b));
    return static_cast<double>(joint) / static_cast<double>(base);
}

RuleDerivation derive_rules(const MiningResult& mining, const ConfidenceThreshold& min_conf,
                            std::size_t n_transactions) {
    // Frequencies come from the mining result, keyed by item set; the
    // database is never consulted here.
    std::unordered_map<std::vector<ItemId>, std::size_t, ItemsKeyHash> freq_of;
    freq_of.reserve(mining.itemsets.size());
    for (const MinedItemset& m : mining.itemsets)
        freq_of.emplace(sorted_by_id(m.items), m.frequency);

    RuleDerivation derivation;
    for (const MinedItemset& m : mining.itemsets) {
        const std::size_t k = m.items.size();
        if (k < 2) continue;
        for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << k); ++mask) {
            AssociationRule rule;
            for (std::size_t bit = 0; bit < k; ++bit) {
                if (mask & (std::size_t{1} << bit))
                    rule.antecedent.push_back(m.items[bit]);
                else
                    rule.consequent.push_back(m.items[bit]);
            }
            const auto it = freq_of.find(sorted_by_id(rule.antecedent));
            if (it == freq_of.end()) {
                ++derivation.splits_skipped;
                continue;
            }
            const std::size_t antecedent_freq = it->second;
            rule.support = n_transactions == 0
                               ? 0.0
                               : static_cast<double>(m.frequency) /
                                     static_cast<double>(n_transactions);
            rule.confidence =
                static_cast<double>(m.frequency) / static_cast<double>(antecedent_freq);
            const bool selected = min_conf.accepts(m.frequency, antecedent_freq);
            ++derivation.rules_considered;
            if (selected) ++derivation.rules_selected;
            derivation.evaluated.push_back(EvaluatedRule{std::move(rule), selected});
        }
    }
    return derivation;
}

} // namespace sparemine
