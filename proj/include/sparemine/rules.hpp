#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "sparemine/mfi.hpp"
#include "sparemine/txdb.hpp"

namespace sparemine {

// Minimum confidence as an exact rational in [0, 1], so threshold comparisons
// are integer cross-multiplications and never misclassify at boundaries
// like 0.6.
class ConfidenceThreshold {
public:
    static ConfidenceThreshold from_ratio(std::uint64_t num, std::uint64_t den);
    // Accepts "0.6", ".6", "60%", "1". Throws std::invalid_argument.
    static ConfidenceThreshold parse(std::string_view text);

    std::uint64_t num() const { return num_; }
    std::uint64_t den() const { return den_; }
    double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    // joint/base >= num/den, compared exactly.
    bool accepts(std::size_t joint, std::size_t base) const;

private:
    std::uint64_t num_ = 0;
    std::uint64_t den_ = 1;
};

struct AssociationRule {
    std::vector<ItemId> antecedent;   // non-empty, disjoint from consequent
    std::vector<ItemId> consequent;   // non-empty; union = source itemset
    double support = 0.0;
    double confidence = 0.0;
};

struct EvaluatedRule {
    AssociationRule rule;
    bool selected = false;
};

struct RuleDerivation {
    std::vector<EvaluatedRule> evaluated;   // source itemset order, then antecedent bitmask
    std::size_t rules_considered = 0;
    std::size_t rules_selected = 0;
    std::size_t splits_skipped = 0;         // antecedent frequency missing from the mining result

    std::vector<AssociationRule> selected_rules() const;
};

// Fraction of transactions containing a union b. Throws UndefinedMeasureError
// on an empty database.
double support(const TransactionDB& db, std::span<const ItemId> a, std::span<const ItemId> b);

// Fraction of the transactions containing a that also contain b. Throws
// UndefinedMeasureError when no transaction contains a.
double confidence(const TransactionDB& db, std::span<const ItemId> a, std::span<const ItemId> b);

// Enumerates every (antecedent, consequent) split of each mined itemset of
// size >= 2 and evaluates confidence = freq(itemset)/freq(antecedent) with
// both frequencies taken from the mining result — the database is never
// rescanned. Splits whose antecedent was not mined are skipped and counted.
RuleDerivation derive_rules(const MiningResult& mining, const ConfidenceThreshold& min_conf,
                            std::size_t n_transactions);

} // namespace sparemine
