#include "sparemine/report.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace sparemine {

namespace {

using Json = nlohmann::ordered_json;

Json names_of(const TransactionDB& db, const std::vector<ItemId>& items) {
    Json arr = Json::array();
    for (const ItemId id : items) arr.push_back(db.name_of(id));
    return arr;
}

std::string joined_names(const TransactionDB& db, const std::vector<ItemId>& items) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += ',';
        out += db.name_of(items[i]);
    }
    return out;
}

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

std::string finish(const Json& j) { return j.dump(2) + "\n"; }

} // namespace

std::string itemset_report_json(const TransactionDB& db, const MiningResult& mining) {
    Json arr = Json::array();
    for (const MinedItemset& m : mining.itemsets)
        arr.push_back(Json{{"items", names_of(db, m.items)}, {"frequency", m.frequency}});
    return finish(arr);
}

std::string itemset_report_json(const TransactionDB& db, const std::vector<ExactItemset>& sets) {
    Json arr = Json::array();
    for (const ExactItemset& e : sets)
        arr.push_back(Json{{"items", names_of(db, e.items)}, {"frequency", e.support_count}});
    return finish(arr);
}

std::string itemset_report_tsv(const TransactionDB& db, const MiningResult& mining) {
    std::ostringstream out;
    for (const MinedItemset& m : mining.itemsets)
        out << joined_names(db, m.items) << '\t' << m.frequency << '\n';
    return out.str();
}

std::string itemset_report_tsv(const TransactionDB& db, const std::vector<ExactItemset>& sets) {
    std::ostringstream out;
    for (const ExactItemset& e : sets)
        out << joined_names(db, e.items) << '\t' << e.support_count << '\n';
    return out.str();
}

std::string rule_report_json(const TransactionDB& db, const RuleDerivation& derivation) {
    Json rules = Json::array();
    for (const EvaluatedRule& e : derivation.evaluated) {
        rules.push_back(Json{{"antecedent", names_of(db, e.rule.antecedent)},
                             {"consequent", names_of(db, e.rule.consequent)},
                             {"support", e.rule.support},
                             {"confidence", e.rule.confidence},
                             {"selected", e.selected}});
    }
    Json j{{"rules", std::move(rules)},
           {"summary",
            Json{{"rules_considered", derivation.rules_considered},
                 {"rules_selected", derivation.rules_selected},
                 {"splits_skipped", derivation.splits_skipped}}}};
    return finish(j);
}

std::string rule_report_tsv(const TransactionDB& db, const RuleDerivation& derivation) {
    std::ostringstream out;
    for (const EvaluatedRule& e : derivation.evaluated) {
        out << joined_names(db, e.rule.antecedent) << '\t'
            << joined_names(db, e.rule.consequent) << '\t' << fixed6(e.rule.support) << '\t'
            << fixed6(e.rule.confidence) << '\t' << (e.selected ? 1 : 0) << '\n';
    }
    out << "# considered=" << derivation.rules_considered
        << " selected=" << derivation.rules_selected
        << " skipped=" << derivation.splits_skipped << '\n';
    return out.str();
}

std::string validation_report_json(const TransactionDB& db, const ValidationReport& report) {
    Json deltas = Json::array();
    for (const FrequencyDelta& d : report.frequency_deltas)
        deltas.push_back(Json{{"items", names_of(db, d.items)},
                              {"mfi_frequency", d.mfi_frequency},
                              {"exact_support", d.exact_support}});
    Json missing = Json::array();
    for (const ExactItemset& e : report.missing)
        missing.push_back(Json{{"items", names_of(db, e.items)}, {"exact_support", e.support_count}});
    Json spurious = Json::array();
    for (const MinedItemset& m : report.spurious)
        spurious.push_back(Json{{"items", names_of(db, m.items)}, {"mfi_frequency", m.frequency}});

    Json j{{"itemset_precision", report.itemset_precision},
           {"itemset_recall", report.itemset_recall},
           {"frequency_deltas", std::move(deltas)},
           {"missing", std::move(missing)},
           {"spurious", std::move(spurious)}};
    return finish(j);
}

std::string bench_report_json(const BenchReport& report) {
    Json dataset{{"n_transactions", report.dataset.n_transactions},
                 {"n_items", report.dataset.n_items},
                 {"minsup_resolved", report.dataset.minsup_resolved},
                 {"source", report.dataset.source}};
    if (report.dataset.spec) {
        const SyntheticSpec& s = *report.dataset.spec;
        dataset["spec"] = Json{{"n_transactions", s.n_transactions},
                               {"n_items", s.n_items},
                               {"seed", s.seed},
                               {"popularity_decay", s.popularity_decay},
                               {"length_continue", s.length_continue}};
    }
    Json algos = Json::array();
    for (const AlgoBench& a : report.algorithms) {
        algos.push_back(Json{{"name", a.name},
                             {"runs", a.runs},
                             {"durations_ms", a.durations_ms},
                             {"mean_ms", a.mean_ms},
                             {"itemset_count", a.itemset_count},
                             {"conditional_trees", a.conditional_trees}});
    }
    Json j{{"dataset", std::move(dataset)}, {"algorithms", std::move(algos)}};
    return finish(j);
}

} // namespace sparemine
