#include <doctest.h>

#include "nmt/analyzer.hpp"
#include "nmt/corpus.hpp"
#include "nmt/counter_machine.hpp"
#include "nmt/parse.hpp"
#include "test_helpers.hpp"

using namespace nmt;

namespace {

AnalyzeOptions corpus_options(const Signature& sig) {
    AnalyzeOptions options;
    for (const CorpusEntry& e : load_corpus()) {
        if (const auto* m = std::get_if<NMatrix>(&e.artifact)) {
            if (m->signature() == sig) options.corpus.emplace_back(e.name, *m);
        }
    }
    return options;
}

}  // namespace

TEST_CASE("check_rule_set") {
    SUBCASE("the contradiction rule holds in M1") {
        const RuleSetReport r = check_rule_set(corpus_nmatrix("M1"), corpus_rules("R_M1"));
        CHECK(r.all_hold);
    }
    SUBCASE("the flat axiom fails in M7 with a designating countermodel") {
        const RuleSetReport r = check_rule_set(corpus_nmatrix("M7"), corpus_rules("R_M8"));
        REQUIRE(!r.all_hold);
        REQUIRE(r.rules.size() == 1);
        const PrevaluationTable& witness = r.rules[0].result.witness;
        const Signature& sig = corpus_nmatrix("M7").signature();
        CHECK(witness.at(parse_formula("p1", sig)) == "1");
        CHECK(witness.at(parse_formula("flat(p1)", sig)) == "0");
    }
    SUBCASE("empty rule set holds vacuously") {
        for (const char* name : {"U", "M3", "K"}) {
            CHECK(check_rule_set(corpus_nmatrix(name), RuleSet{}).all_hold);
        }
    }
    SUBCASE("every bundled rule set holds on its own Nmatrix") {
        const std::vector<std::pair<const char*, const char*>> pairs{
            {"R_U", "U"},   {"R_M1", "M1"}, {"R_M2", "M2"}, {"R_M3", "M3"},
            {"R_M4", "M4"}, {"R_M5", "M5"}, {"R_M7", "M7"}, {"R_M8", "M8"},
        };
        for (const auto& [rules, matrix] : pairs) {
            CHECK(check_rule_set(corpus_nmatrix(matrix), corpus_rules(rules)).all_hold);
        }
    }
}

TEST_CASE("inclusion_from_axiomatization") {
    SUBCASE("the M2 rule holds in M5") {
        CHECK(inclusion_from_axiomatization(corpus_rules("R_M2"), corpus_nmatrix("M5"))
                  .included);
    }
    SUBCASE("the M8 axiom does not hold in M7") {
        const AxiomatizationInclusion r =
            inclusion_from_axiomatization(corpus_rules("R_M8"), corpus_nmatrix("M7"));
        CHECK(!r.included);
        CHECK(r.failing_rule == 0);
    }
    SUBCASE("the empty axiomatization is included everywhere") {
        for (const char* name : {"U", "M1", "M6", "K"}) {
            CHECK(inclusion_from_axiomatization(corpus_rules("R_U"), corpus_nmatrix(name))
                      .included);
        }
    }
}

TEST_CASE("search_counterexample") {
    SUBCASE("theorem divergence between M7 and M8") {
        const auto cx = search_counterexample(corpus_nmatrix("M7"), corpus_nmatrix("M8"),
                                              SearchBudget{2, 1, 0});
        REQUIRE(cx.has_value());
        CHECK(cx->premises.empty());
        CHECK(cx->conclusion.text() == "flat(p1)");
        CHECK(cx->holds_in == 2);
    }
    SUBCASE("contradiction divergence between the unconstrained Nmatrix and M1") {
        const auto cx = search_counterexample(corpus_nmatrix("U"), corpus_nmatrix("M1"),
                                              SearchBudget{2, 2, 2});
        REQUIRE(cx.has_value());
        REQUIRE(cx->premises.size() == 2);
        CHECK(cx->premises[0].text() == "p1");
        CHECK(cx->premises[1].text() == "flat(p1)");
        CHECK(cx->conclusion.text() == "p2");
        CHECK(cx->holds_in == 2);
    }
    SUBCASE("no divergence between a matrix and itself") {
        for (const char* name : {"U", "M3", "tilde_M7"}) {
            CHECK(!search_counterexample(corpus_nmatrix(name), corpus_nmatrix(name),
                                         SearchBudget{3, 2, 2})
                       .has_value());
        }
    }
    SUBCASE("witness prevaluation is re-checkable") {
        const auto cx = search_counterexample(corpus_nmatrix("M2"), corpus_nmatrix("M3"),
                                              SearchBudget{3, 2, 2});
        REQUIRE(cx.has_value());
        const NMatrix& fails_in =
            cx->holds_in == 1 ? corpus_nmatrix("M3") : corpus_nmatrix("M2");
        CHECK(check_prevaluation(fails_in, cx->witness).ok);
    }
}

TEST_CASE("search_theorem_bounded") {
    SUBCASE("finds the flat theorem of M8") {
        const auto theorem = search_theorem_bounded(corpus_nmatrix("M8"), 2, 1);
        REQUIRE(theorem.has_value());
        CHECK(theorem->text() == "flat(p1)");
    }
    SUBCASE("the unconstrained Nmatrix never has theorems") {
        CHECK(!search_theorem_bounded(corpus_nmatrix("U"), 4, 2).has_value());
    }
    SUBCASE("the compiled LOOP matrix has none up to depth six") {
        const NMatrix loop = compile_machine(corpus_machine("LOOP"));
        CHECK(!search_theorem_bounded(loop, 6, 1).has_value());
    }
    SUBCASE("the compiled INC1 matrix yields exactly its trace encoding") {
        const NMatrix compiled = compile_machine(corpus_machine("INC1"));
        const auto theorem = search_theorem_bounded(compiled, 3, 0);
        REQUIRE(theorem.has_value());
        CHECK(*theorem ==
              encode_trace(run(corpus_machine("INC1"), {0}, 100)));
    }
}

TEST_CASE("analyze") {
    const NMatrix& u = corpus_nmatrix("U");

    SUBCASE("tilded family against the unconstrained Nmatrix via homomorphisms") {
        for (const char* name : {"tilde_U", "tilde_M1", "tilde_M3", "tilde_M4"}) {
            const Verdict v = analyze(corpus_nmatrix(name), u, {});
            CHECK(v.outcome == Outcome::Equivalent);
            CHECK(v.stage == 2);
            REQUIRE(v.strong_hom.has_value());
            CHECK(v.strong_hom->hom.strongly_preserving);
        }
        for (const char* name : {"tilde_M2", "tilde_M5"}) {
            const Verdict v = analyze(corpus_nmatrix(name), u, {});
            CHECK(v.outcome == Outcome::Equivalent);
            CHECK(v.stage == 3);
            REQUIRE(v.hom_pair.has_value());
            CHECK(is_strict_hom(corpus_nmatrix(name), u, v.hom_pair->forward.map));
            CHECK(is_strict_hom(u, corpus_nmatrix(name), v.hom_pair->backward.map));
        }
    }
    SUBCASE("tilde_M7 against U needs the certificate stage") {
        AnalyzeOptions options = corpus_options(u.signature());
        options.tilde_preimage = corpus_nmatrix("M7");
        const Verdict v = analyze(corpus_nmatrix("tilde_M7"), u, options);
        CHECK(v.outcome == Outcome::Equivalent);
        CHECK(v.stage == 4);
        REQUIRE(v.certificate.has_value());
        CHECK(v.certificate->certificate.base_name == "M7");
    }
    SUBCASE("without the preimage hint the pair stays unknown") {
        AnalyzeOptions options = corpus_options(u.signature());
        const Verdict v = analyze(corpus_nmatrix("tilde_M7"), u, options);
        CHECK(v.outcome == Outcome::Unknown);
        CHECK(v.stage == 6);
        CHECK(v.stages_attempted == std::vector<int>{1, 2, 3, 4, 5, 6});
    }
    SUBCASE("deterministic pairs go through the complete decision") {
        const Verdict v = analyze(corpus_nmatrix("M7"), corpus_nmatrix("M8"), {});
        CHECK(v.outcome == Outcome::NotEquivalent);
        CHECK(v.stage == 1);
        REQUIRE(v.deterministic.has_value());
    }
    SUBCASE("M6 against U is honestly unknown") {
        const Verdict v = analyze(corpus_nmatrix("M6"), u, corpus_options(u.signature()));
        CHECK(v.outcome == Outcome::Unknown);
        CHECK(v.stage == 6);
    }
    SUBCASE("analyze is reflexive on every corpus Nmatrix") {
        for (const CorpusEntry& e : load_corpus()) {
            const auto* m = std::get_if<NMatrix>(&e.artifact);
            if (m == nullptr) continue;
            const Verdict v = analyze(*m, *m, {});
            CHECK(v.outcome == Outcome::Equivalent);
            CHECK(v.stage <= 2);
        }
    }
    SUBCASE("counterexample stage separates mixed pairs") {
        const Verdict v = analyze(corpus_nmatrix("M1"), corpus_nmatrix("M7"), {});
        CHECK(v.outcome == Outcome::NotEquivalent);
        CHECK(v.stage == 5);
        REQUIRE(v.counterexample.has_value());
        const NMatrix& holds_in =
            v.counterexample->holds_in == 1 ? corpus_nmatrix("M1") : corpus_nmatrix("M7");
        const NMatrix& fails_in =
            v.counterexample->holds_in == 1 ? corpus_nmatrix("M7") : corpus_nmatrix("M1");
        CHECK(decide_consequence(holds_in, v.counterexample->premises,
                                 v.counterexample->conclusion)
                  .holds);
        CHECK(!decide_consequence(fails_in, v.counterexample->premises,
                                  v.counterexample->conclusion)
                   .holds);
        CHECK(check_prevaluation(fails_in, v.counterexample->witness).ok);
    }
    SUBCASE("the reduction pair of a halting machine separates at its trace") {
        const auto [tilded, unc] = build_reduction_pair(corpus_machine("INC1"));
        const Verdict v = analyze(tilded, unc, AnalyzeOptions{SearchBudget{3, 0, 0}, {}, {}});
        CHECK(v.outcome == Outcome::NotEquivalent);
        CHECK(v.stage == 5);
        REQUIRE(v.counterexample.has_value());
        CHECK(v.counterexample->premises.empty());
        CHECK(v.counterexample->conclusion ==
              encode_trace(run(corpus_machine("INC1"), {0}, 100)));
        CHECK(v.counterexample->holds_in == 1);
    }
    SUBCASE("the looping machine's reduction pair is provably equivalent") {
        // LOOP has no halting states, so its compiled matrix designates
        // nothing; every value of the tilded matrix then carries a designated
        // copy and the designation indicator onto the unconstrained Nmatrix
        // is strongly preserving.
        const auto [tilded, unc] = build_reduction_pair(corpus_machine("LOOP"));
        const Verdict v = analyze(tilded, unc, AnalyzeOptions{SearchBudget{3, 1, 1}, {}, {}});
        CHECK(v.outcome == Outcome::Equivalent);
        CHECK(v.stage == 2);
        REQUIRE(v.strong_hom.has_value());
        CHECK(v.strong_hom->hom.strongly_preserving);
    }
    SUBCASE("budget growth only resolves unknowns, sampled") {
        const std::vector<std::pair<const char*, const char*>> pairs{
            {"M1", "M2"}, {"M6", "U"}, {"tilde_M7", "U"}, {"M3", "M6"}};
        for (const auto& [a, b] : pairs) {
            AnalyzeOptions small;
            small.budget = SearchBudget{1, 1, 1};
            AnalyzeOptions big;
            big.budget = SearchBudget{3, 2, 2};
            const Verdict vs = analyze(corpus_nmatrix(a), corpus_nmatrix(b), small);
            const Verdict vb = analyze(corpus_nmatrix(a), corpus_nmatrix(b), big);
            if (vs.outcome != Outcome::Unknown) CHECK(vs.outcome == vb.outcome);
        }
    }
    SUBCASE("signature mismatch is rejected") {
        CHECK_THROWS_AS(analyze(u, corpus_nmatrix("I"), {}), InvalidInputError);
    }
}

TEST_CASE("every formula keeps M6 honest about the discrete logic") {
    // The everything-but-A valuation: 0 at one formula, 1 elsewhere, always a
    // prevaluation of M6 on any subformula-closed set containing A.
    const NMatrix& m6 = corpus_nmatrix("M6");
    nmt::testing::Rng rng(77);
    for (int i = 0; i < 100; ++i) {
        const Formula a = nmt::testing::random_formula(rng, m6.signature(), 2, 4);
        std::vector<Formula> seed{a};
        if (rng.chance(0.5)) {
            seed.push_back(nmt::testing::random_formula(rng, m6.signature(), 2, 3));
        }
        PrevaluationTable table;
        for (const Formula& b : subformula_closure(seed)) {
            table.emplace(b, b == a ? "0" : "1");
        }
        CHECK(check_prevaluation(m6, table).ok);
    }
    CHECK(!search_counterexample(corpus_nmatrix("U"), m6, SearchBudget{3, 2, 2}).has_value());
    CHECK(!search_counterexample(corpus_nmatrix("U"), m6, SearchBudget{2, 1, 3}).has_value());
}
