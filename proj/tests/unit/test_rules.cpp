#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "fixtures.hpp"
#include "sparemine/errors.hpp"
#include "sparemine/oracles.hpp"
#include "sparemine/rules.hpp"

using namespace sparemine;

namespace {

std::vector<ItemId> ids(const TransactionDB& db, std::initializer_list<const char*> names) {
    std::vector<ItemId> out;
    for (const char* n : names) out.push_back(db.item_ids.at(n));
    return out;
}

} // namespace

TEST_CASE("support over the five-transaction example") {
    const TransactionDB db = testdata::table1_db();
    const auto A = ids(db, {"A"}), B = ids(db, {"B"}), C = ids(db, {"C"});

    CHECK(support(db, A, B) == 2.0 / 5.0);
    // {A,C} is contained in T2 (A,C,D,E) and T5 (A,B,C,D): 2 of 5
    CHECK(support(db, A, C) == 2.0 / 5.0);
    CHECK(support(db, {}, {}) == 1.0);   // every transaction contains the empty set

    CHECK_THROWS_AS(support(TransactionDB{}, A, B), UndefinedMeasureError);
}

TEST_CASE("confidence over the five-transaction example") {
    const TransactionDB db = testdata::table1_db();
    const auto A = ids(db, {"A"}), B = ids(db, {"B"}), D = ids(db, {"D"});

    CHECK(confidence(db, A, B) == 2.0 / 4.0);
    CHECK(confidence(db, A, A) == 1.0);   // self-implication
    // B appears in T1, T3, T5 and each also contains D
    CHECK(confidence(db, B, D) == 1.0);

    CHECK_THROWS_AS(confidence(TransactionDB{}, A, B), UndefinedMeasureError);
    const TransactionDB tiny = load_basket(std::string_view("X\n"));
    const std::vector<ItemId> x{0}, unseen{5};
    CHECK(confidence(tiny, x, x) == 1.0);
    CHECK_THROWS_AS(confidence(tiny, unseen, x), UndefinedMeasureError);
}

TEST_CASE("confidence times the antecedent count equals the joint count") {
    std::mt19937 rng(777);
    for (int round = 0; round < 30; ++round) {
        const TransactionDB db = testdata::random_db(rng, 8, 60);
        if (db.n_items() == 0) continue;
        std::vector<ItemId> a{static_cast<ItemId>(rng() % db.n_items())};
        std::vector<ItemId> b{static_cast<ItemId>(rng() % db.n_items())};
        const std::size_t base = exact_support(db, a);
        if (base == 0) continue;
        std::vector<ItemId> both = a;
        both.insert(both.end(), b.begin(), b.end());
        const std::size_t joint = exact_support(db, both);
        // the ratio is exactly joint/base, so scaling back is exact
        CHECK(confidence(db, a, b) == static_cast<double>(joint) / static_cast<double>(base));
    }
}

TEST_CASE("confidence threshold parses and compares exactly") {
    const ConfidenceThreshold t = ConfidenceThreshold::parse("0.6");
    CHECK(t.num() == 6);
    CHECK(t.den() == 10);
    CHECK_FALSE(t.accepts(4, 7));   // 4*10 < 7*6
    CHECK(t.accepts(3, 5));         // equality holds
    CHECK(t.accepts(5, 7));

    CHECK(ConfidenceThreshold::parse("60%").value() == doctest::Approx(0.6));
    CHECK(ConfidenceThreshold::parse("1").accepts(1, 1));
    CHECK(ConfidenceThreshold::parse(".5").accepts(1, 2));
    CHECK(ConfidenceThreshold::parse("0").accepts(0, 5));

    CHECK_THROWS_AS(ConfidenceThreshold::parse("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(ConfidenceThreshold::parse("-0.2"), std::invalid_argument);
    CHECK_THROWS_AS(ConfidenceThreshold::parse("x"), std::invalid_argument);
}

TEST_CASE("rule derivation over the mined example") {
    const TransactionDB db = testdata::table2_db();
    const MiningResult mined = mine(build(db, SupportThreshold::absolute(4)));
    const RuleDerivation derivation =
        derive_rules(mined, ConfidenceThreshold::parse("0.6"), db.n_transactions());

    CHECK(derivation.rules_considered == 14);
    CHECK(derivation.rules_selected == 11);
    CHECK(derivation.splits_skipped == 0);

    SUBCASE("the three-item set keeps five of six splits") {
        const auto abc = ids(db, {"A", "B", "C"});
        std::size_t selected = 0, rejected = 0;
        for (const EvaluatedRule& e : derivation.evaluated) {
            std::vector<ItemId> whole = e.rule.antecedent;
            whole.insert(whole.end(), e.rule.consequent.begin(), e.rule.consequent.end());
            std::sort(whole.begin(), whole.end());
            if (whole != abc) continue;
            if (e.selected) {
                ++selected;
            } else {
                ++rejected;
                // the one rejection: {A} => {B,C} at 4/7
                CHECK(e.rule.antecedent == ids(db, {"A"}));
                CHECK(e.rule.confidence == 4.0 / 7.0);
            }
        }
        CHECK(selected == 5);
        CHECK(rejected == 1);
    }
    SUBCASE("the spare-topped pair yields both rules") {
        bool a_implies_d = false, d_implies_a = false;
        for (const EvaluatedRule& e : derivation.evaluated) {
            if (e.rule.antecedent == ids(db, {"A"}) && e.rule.consequent == ids(db, {"D"})) {
                a_implies_d = e.selected;
                CHECK(e.rule.confidence == 5.0 / 7.0);
            }
            if (e.rule.antecedent == ids(db, {"D"}) && e.rule.consequent == ids(db, {"A"})) {
                d_implies_a = e.selected;
                CHECK(e.rule.confidence == 1.0);
            }
        }
        CHECK(a_implies_d);
        CHECK(d_implies_a);
    }
}

TEST_CASE("rule derivation edge cases") {
    SUBCASE("size-1 itemsets contribute nothing") {
        MiningResult mining;
        mining.itemsets.push_back(MinedItemset{{0}, 5});
        const RuleDerivation d = derive_rules(mining, ConfidenceThreshold::parse("0"), 10);
        CHECK(d.evaluated.empty());
        CHECK(d.rules_considered == 0);
    }
    SUBCASE("missing antecedent frequencies are skipped and counted") {
        MiningResult mining;
        mining.itemsets.push_back(MinedItemset{{0, 1}, 4});   // neither {0} nor {1} present
        const RuleDerivation d = derive_rules(mining, ConfidenceThreshold::parse("0"), 10);
        CHECK(d.rules_considered == 0);
        CHECK(d.splits_skipped == 2);
    }
    SUBCASE("minconf 0 selects every evaluable split") {
        const TransactionDB db = testdata::table2_db();
        const MiningResult mined = mine(build(db, SupportThreshold::absolute(4)));
        const RuleDerivation d = derive_rules(mined, ConfidenceThreshold::parse("0"),
                                              db.n_transactions());
        CHECK(d.rules_selected == d.rules_considered);
    }
    SUBCASE("minconf 1 keeps only certainty") {
        const TransactionDB db = testdata::table2_db();
        const MiningResult mined = mine(build(db, SupportThreshold::absolute(4)));
        const RuleDerivation d = derive_rules(mined, ConfidenceThreshold::parse("1"),
                                              db.n_transactions());
        CHECK(d.rules_selected > 0);
        for (const AssociationRule& r : d.selected_rules()) CHECK(r.confidence == 1.0);
    }
}

TEST_CASE("rule invariants") {
    const TransactionDB db = testdata::table2_db();
    const MiningResult mined = mine(build(db, SupportThreshold::absolute(4)));
    const ConfidenceThreshold minconf = ConfidenceThreshold::parse("0.6");
    const RuleDerivation derivation = derive_rules(mined, minconf, db.n_transactions());

    SUBCASE("partition and confidence floor") {
        for (const EvaluatedRule& e : derivation.evaluated) {
            CHECK_FALSE(e.rule.antecedent.empty());
            CHECK_FALSE(e.rule.consequent.empty());
            for (const ItemId id : e.rule.antecedent)
                CHECK(std::find(e.rule.consequent.begin(), e.rule.consequent.end(), id) ==
                      e.rule.consequent.end());
            if (e.selected) CHECK(e.rule.confidence >= minconf.value() - 1e-12);
        }
    }
    SUBCASE("split count matches 2^k - 2 when every antecedent is mined") {
        // an exact mining result is downward-closed, so nothing is skipped
        const auto exact = apriori_mine(db, SupportThreshold::absolute(4));
        MiningResult exact_as_mining;
        for (const ExactItemset& e : exact)
            exact_as_mining.itemsets.push_back(MinedItemset{e.items, e.support_count});
        const RuleDerivation d =
            derive_rules(exact_as_mining, minconf, db.n_transactions());
        std::size_t expected = 0;
        for (const ExactItemset& e : exact)
            if (e.items.size() >= 2) expected += (std::size_t{1} << e.items.size()) - 2;
        CHECK(d.rules_considered == expected);
        CHECK(d.splits_skipped == 0);
    }
    SUBCASE("confidences are invariant under database duplication") {
        MiningResult scaled;
        scaled.minsup_resolved = mined.minsup_resolved * 3;
        for (const MinedItemset& m : mined.itemsets)
            scaled.itemsets.push_back(MinedItemset{m.items, m.frequency * 3});
        const RuleDerivation d3 = derive_rules(scaled, minconf, db.n_transactions() * 3);
        REQUIRE(d3.evaluated.size() == derivation.evaluated.size());
        for (std::size_t i = 0; i < d3.evaluated.size(); ++i) {
            CHECK(d3.evaluated[i].rule.confidence == derivation.evaluated[i].rule.confidence);
            CHECK(d3.evaluated[i].rule.support == derivation.evaluated[i].rule.support);
            CHECK(d3.evaluated[i].selected == derivation.evaluated[i].selected);
        }
    }
}
