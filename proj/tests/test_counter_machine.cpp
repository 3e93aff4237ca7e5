#include <doctest.h>

#include "nmt/consequence.hpp"
#include "nmt/corpus.hpp"
#include "nmt/counter_machine.hpp"
#include "nmt/enumerate.hpp"
#include "nmt/prevaluation.hpp"
#include "test_helpers.hpp"

using namespace nmt;

TEST_CASE("step") {
    const CounterMachine& inctest = corpus_machine("INCTEST");
    SUBCASE("increment") {
        const Configuration next = step(inctest, {"q0", {0}});
        CHECK(next == Configuration{"q1", {1}});
    }
    SUBCASE("test-decrement, non-zero branch") {
        CHECK(step(inctest, {"q1", {1}}) == Configuration{"q2", {0}});
    }
    SUBCASE("test-decrement, zero branch") {
        CounterMachine m = inctest;
        m.transitions["q1"] =
            CounterTransition{CounterTransition::Kind::TestDecrement, 1, "q0", "q2"};
        CHECK(step(m, {"q1", {0}}) == Configuration{"q2", {0}});
        CHECK(step(m, {"q1", {2}}) == Configuration{"q0", {1}});
    }
    SUBCASE("halting configurations cannot step") {
        CHECK_THROWS_AS(step(inctest, {"q2", {0}}), InvalidInputError);
    }
}

TEST_CASE("run") {
    SUBCASE("INC1 halts in one step") {
        const Trace t = run(corpus_machine("INC1"), {0}, 10);
        CHECK(t.halted);
        REQUIRE(t.configurations.size() == 2);
        CHECK(t.configurations[0] == Configuration{"q0", {0}});
        CHECK(t.configurations[1] == Configuration{"q1", {1}});
    }
    SUBCASE("LOOP exhausts the budget") {
        const Trace t = run(corpus_machine("LOOP"), {0}, 5);
        CHECK(!t.halted);
        CHECK(t.configurations.size() == 6);
        CHECK(t.configurations.back() == Configuration{"q0", {5}});
    }
    SUBCASE("initial halting state yields a single configuration") {
        CounterMachine m;
        m.counters = 1;
        m.states = {"q0"};
        m.initial = "q0";
        const Trace t = run(m, {0}, 10);
        CHECK(t.halted);
        CHECK(t.configurations.size() == 1);
    }
    SUBCASE("run is a pure function of machine, input and budget") {
        const Trace a = run(corpus_machine("INCTEST"), {0}, 100);
        const Trace b = run(corpus_machine("INCTEST"), {0}, 100);
        CHECK(a.halted == b.halted);
        CHECK(a.configurations.size() == b.configurations.size());
    }
}

TEST_CASE("encodings") {
    SUBCASE("numbers") {
        CHECK(encode_number(0).text() == "zero");
        CHECK(encode_number(2).text() == "succ(succ(zero))");
        for (std::uint64_t a : {0ull, 1ull, 5ull, 9ull}) {
            const Formula f = encode_number(a);
            CHECK(f.depth() == static_cast<int>(a) + 1);
            CHECK(static_cast<std::uint64_t>(f.node_count()) == a + 1);
            CHECK(is_closed(f));
        }
    }
    SUBCASE("traces") {
        Trace empty;
        CHECK(encode_trace(empty).text() == "eps");

        Trace single;
        single.configurations.push_back({"q0", {0}});
        CHECK(encode_trace(single).text() == "step_q0(eps,zero)");

        const Trace inc1 = run(corpus_machine("INC1"), {0}, 10);
        CHECK(encode_trace(inc1).text() == "step_q1(step_q0(eps,zero),succ(zero))");
    }
}

TEST_CASE("compile_machine") {
    const CounterMachine& inc1 = corpus_machine("INC1");
    const NMatrix compiled = compile_machine(inc1);

    SUBCASE("value layout and designated set") {
        CHECK(compiled.value_count() == 14);  // 4 numerals + init + error + 2*4 configs
        std::vector<std::string> expected_designated;
        for (const char* r : {"r_eq0", "r_ge0", "r_ge1", "r_ge2"}) {
            expected_designated.push_back(std::string("conf_q1_") + r);
        }
        CHECK(compiled.designated_names() == expected_designated);
    }
    SUBCASE("numeral tables") {
        const Value eq0 = *compiled.value_index("r_eq0");
        const Value ge0 = *compiled.value_index("r_ge0");
        const Value ge1 = *compiled.value_index("r_ge1");
        const Value ge2 = *compiled.value_index("r_ge2");
        const Value error = *compiled.value_index("error");
        CHECK(compiled.output("zero", {}) == ValueSet{eq0, ge0});
        CHECK(compiled.output("eps", {}) == ValueSet{*compiled.value_index("init")});
        CHECK(compiled.output("succ", std::vector<Value>{eq0}) == ValueSet{ge1});
        CHECK(compiled.output("succ", std::vector<Value>{ge0}) == ValueSet{ge0, ge1});
        CHECK(compiled.output("succ", std::vector<Value>{ge1}) == ValueSet{ge2});
        CHECK(compiled.output("succ", std::vector<Value>{ge2}) == ValueSet{ge2});
        CHECK(compiled.output("succ", std::vector<Value>{error}) == ValueSet{error});
        CHECK(compiled.output("succ", std::vector<Value>{*compiled.value_index("init")}) ==
              ValueSet{error});
    }
    SUBCASE("initial step rows") {
        const Value init = *compiled.value_index("init");
        const Value eq0 = *compiled.value_index("r_eq0");
        const Value ge0 = *compiled.value_index("r_ge0");
        const Value ge1 = *compiled.value_index("r_ge1");
        CHECK(compiled.output("step_q0", std::vector<Value>{init, eq0}) ==
              ValueSet{*compiled.value_index("conf_q0_r_eq0")});
        CHECK(compiled.output("step_q0", std::vector<Value>{init, ge0}) ==
              ValueSet{*compiled.value_index("conf_q0_r_ge0")});
        // q1 is not initial, and mixed numerals outside the two uniform
        // tuples are errors only for n > 1; here a single slot works.
        CHECK(compiled.output("step_q1", std::vector<Value>{init, eq0}) ==
              ValueSet{*compiled.value_index("error")});
        CHECK(compiled.output("step_q0", std::vector<Value>{init, ge1}) ==
              ValueSet{*compiled.value_index("error")});
    }
    SUBCASE("transition step rows") {
        const Value c0_eq0 = *compiled.value_index("conf_q0_r_eq0");
        const Value ge1 = *compiled.value_index("r_ge1");
        const Value eq0 = *compiled.value_index("r_eq0");
        // delta(q0) = inc 1 -> q1: successor relation between the numerals.
        CHECK(compiled.output("step_q1", std::vector<Value>{c0_eq0, ge1}) ==
              ValueSet{*compiled.value_index("conf_q1_r_ge1")});
        CHECK(compiled.output("step_q1", std::vector<Value>{c0_eq0, eq0}) ==
              ValueSet{*compiled.value_index("error")});
        CHECK(compiled.output("step_q0", std::vector<Value>{c0_eq0, ge1}) ==
              ValueSet{*compiled.value_index("error")});
    }
    SUBCASE("error rows absorb everywhere") {
        const Value error = *compiled.value_index("error");
        for (const auto& [name, arity] : compiled.signature().connectives()) {
            const ConnectiveTable& t = compiled.table(name);
            std::vector<Value> args(static_cast<std::size_t>(arity), 0);
            for (std::size_t row = 0; row < t.rows.size(); ++row) {
                std::size_t rest = row;
                bool has_error_arg = false;
                for (std::size_t i = args.size(); i-- > 0;) {
                    args[i] = static_cast<Value>(rest % compiled.value_count());
                    rest /= compiled.value_count();
                    has_error_arg = has_error_arg || args[i] == error;
                }
                if (has_error_arg) CHECK(t.rows[row] == ValueSet{error});
            }
        }
    }
    SUBCASE("machines without halting states compile to an empty designated set") {
        const NMatrix loop = compile_machine(corpus_machine("LOOP"));
        CHECK(loop.designated_names().empty());
    }
    SUBCASE("error absorbs through every prevaluation") {
        // Enumerate all prevaluations of a few closed formulas and check that
        // an error anywhere forces error on every superformula.
        const Value error = *compiled.value_index("error");
        const Signature& sig = compiled.signature();
        for (const char* text :
             {"succ(eps)", "step_q0(zero,eps)", "step_q1(succ(eps),succ(zero))",
              "step_q0(step_q0(eps,zero),succ(succ(zero)))"}) {
            const Formula f = parse_formula(text, sig);
            const std::vector<Formula> closure = subformulas(f);
            std::vector<std::vector<Value>> candidates(closure.size());
            std::vector<Value> chosen(closure.size(), 0);
            std::vector<std::size_t> next(closure.size(), 0);
            auto fill = [&](std::size_t i) {
                candidates[i].clear();
                if (closure[i].is_var()) return;
                std::vector<Value> kids;
                for (const Formula& arg : closure[i].args()) {
                    for (std::size_t j = 0; j < closure.size(); ++j) {
                        if (closure[j] == arg) kids.push_back(chosen[j]);
                    }
                }
                const ValueSet& out = compiled.output(closure[i].connective(), kids);
                candidates[i].assign(out.begin(), out.end());
            };
            std::size_t level = 0;
            fill(0);
            while (true) {
                if (next[level] < candidates[level].size()) {
                    chosen[level] = candidates[level][next[level]++];
                    if (level + 1 == closure.size()) {
                        for (std::size_t i = 0; i < closure.size(); ++i) {
                            if (chosen[i] != error) continue;
                            for (std::size_t j = 0; j < closure.size(); ++j) {
                                bool is_super = false;
                                for (const Formula& s : subformulas(closure[j])) {
                                    is_super = is_super || s == closure[i];
                                }
                                if (is_super) CHECK(chosen[j] == error);
                            }
                        }
                    } else {
                        ++level;
                        fill(level);
                        next[level] = 0;
                    }
                } else {
                    if (level == 0) break;
                    --level;
                }
            }
        }
    }
}

TEST_CASE("canonical numeric assignments") {
    const NMatrix compiled = compile_machine(corpus_machine("INC1"));

    SUBCASE("the three families, pinned") {
        const PrevaluationTable eq =
            canonical_numeric_assignment(NumericAssignmentKind::Eq, 0, 2);
        CHECK(eq.at(encode_number(0)) == "r_eq0");
        CHECK(eq.at(encode_number(1)) == "r_ge1");
        CHECK(eq.at(encode_number(2)) == "r_ge2");

        const PrevaluationTable omega =
            canonical_numeric_assignment(NumericAssignmentKind::Omega, 0, 3);
        for (int a = 0; a <= 3; ++a) {
            CHECK(omega.at(encode_number(static_cast<std::uint64_t>(a))) == "r_ge0");
        }

        const PrevaluationTable k1 =
            canonical_numeric_assignment(NumericAssignmentKind::K, 1, 3);
        CHECK(k1.at(encode_number(0)) == "r_ge0");
        CHECK(k1.at(encode_number(1)) == "r_ge0");
        CHECK(k1.at(encode_number(2)) == "r_ge1");
        CHECK(k1.at(encode_number(3)) == "r_ge2");
    }
    SUBCASE("each family is a prevaluation of the compiled matrix") {
        for (int j = 0; j <= 3; ++j) {
            CHECK(check_prevaluation(
                      compiled, canonical_numeric_assignment(NumericAssignmentKind::K, j, 4))
                      .ok);
        }
        CHECK(check_prevaluation(compiled,
                                 canonical_numeric_assignment(NumericAssignmentKind::Eq, 0, 4))
                  .ok);
        CHECK(check_prevaluation(
                  compiled, canonical_numeric_assignment(NumericAssignmentKind::Omega, 0, 4))
                  .ok);
    }
    SUBCASE("exhaustive classification of numeral assignments") {
        // Every interpretation-respecting assignment on enc(0..4) is one of
        // eq, omega, or k(0..3) — nothing else.
        const int m = 4;
        std::vector<Formula> chain;
        for (int a = 0; a <= m; ++a) chain.push_back(encode_number(static_cast<std::uint64_t>(a)));
        const std::vector<Formula> closure = subformula_closure(chain);
        REQUIRE(closure.size() == static_cast<std::size_t>(m) + 1);

        std::vector<PrevaluationTable> expected;
        expected.push_back(canonical_numeric_assignment(NumericAssignmentKind::Eq, 0, m));
        expected.push_back(canonical_numeric_assignment(NumericAssignmentKind::Omega, 0, m));
        for (int j = 0; j < m; ++j) {
            expected.push_back(canonical_numeric_assignment(NumericAssignmentKind::K, j, m));
        }

        std::size_t valid_count = 0;
        std::vector<Value> assignment(closure.size(), 0);
        while (true) {
            if (nmt::testing::assignment_respects_interpretation(compiled, closure,
                                                                 assignment)) {
                ++valid_count;
                PrevaluationTable table;
                for (std::size_t i = 0; i < closure.size(); ++i) {
                    table.emplace(closure[i], compiled.value_name(assignment[i]));
                }
                bool matched = false;
                for (const PrevaluationTable& e : expected) matched = matched || e == table;
                CHECK(matched);
            }
            std::size_t i = assignment.size();
            bool rolled_over = true;
            while (i > 0) {
                --i;
                if (++assignment[i] < compiled.value_count()) {
                    rolled_over = false;
                    break;
                }
                assignment[i] = 0;
            }
            if (rolled_over) break;
        }
        CHECK(valid_count == expected.size());
    }
    SUBCASE("successor separations across the families") {
        const auto value_of = [&](const PrevaluationTable& t, int a) {
            return *compiled.value_index(t.at(encode_number(static_cast<std::uint64_t>(a))));
        };
        std::vector<PrevaluationTable> family;
        family.push_back(canonical_numeric_assignment(NumericAssignmentKind::Eq, 0, 5));
        family.push_back(canonical_numeric_assignment(NumericAssignmentKind::Omega, 0, 5));
        for (int j = 0; j <= 4; ++j) {
            family.push_back(canonical_numeric_assignment(NumericAssignmentKind::K, j, 5));
        }
        for (int a = 0; a <= 4; ++a) {
            for (int b = 0; b <= 4; ++b) {
                if (a != b + 1) {
                    bool separated = false;
                    for (const PrevaluationTable& v : family) {
                        separated =
                            separated ||
                            !compiled
                                 .output("succ", std::vector<Value>{value_of(v, b)})
                                 .contains(value_of(v, a));
                    }
                    CHECK(separated);
                }
                if (a != b) {
                    bool distinguished = false;
                    for (const PrevaluationTable& v : family) {
                        distinguished = distinguished || value_of(v, a) != value_of(v, b);
                    }
                    CHECK(distinguished);
                }
            }
        }
    }
}

TEST_CASE("compiled theorems are exactly the halting trace encodings") {
    SUBCASE("INC1") {
        const NMatrix compiled = compile_machine(corpus_machine("INC1"));
        const Trace trace = run(corpus_machine("INC1"), {0}, 10000);
        REQUIRE(trace.halted);
        const Formula theorem = encode_trace(trace);
        CHECK(is_theorem(compiled, theorem).holds);

        // Bounded uniqueness, one stratum beyond the trace encoding's depth.
        const int bound = theorem.depth() + 1;
        std::size_t checked = 0;
        for_each_closed_formula(compiled.signature(), bound, [&](const Formula& f) {
            if (!(f == theorem)) {
                ++checked;
                CHECK(!is_theorem(compiled, f).holds);
            }
            return true;
        });
        CHECK(checked > 100000);
    }
    SUBCASE("open formulas are never theorems of a compiled matrix") {
        const NMatrix compiled = compile_machine(corpus_machine("INC1"));
        nmt::testing::Rng rng(5);
        for (int i = 0; i < 50; ++i) {
            Formula f = nmt::testing::random_formula(rng, compiled.signature(), 2, 3);
            if (is_closed(f)) f = Formula::app("succ", {Formula::var(1)});
            CHECK(!is_theorem(compiled, f).holds);
        }
    }
}

TEST_CASE("two-counter machines compile correctly") {
    // inc counter 2, then halt; exercises the multi-counter tuple layout.
    CounterMachine m;
    m.counters = 2;
    m.states = {"q0", "q1"};
    m.initial = "q0";
    m.transitions["q0"] = CounterTransition{CounterTransition::Kind::Increment, 2, "q1", ""};
    const NMatrix compiled = compile_machine(m);
    CHECK(compiled.value_count() == 4 + 2 + 2 * 16);

    const Trace trace = run(m, {0, 0}, 10);
    REQUIRE(trace.halted);
    REQUIRE(trace.configurations.size() == 2);
    CHECK(trace.configurations[1] == Configuration{"q1", {0, 1}});

    const Formula theorem = encode_trace(trace);
    CHECK(theorem.text() == "step_q1(step_q0(eps,zero,zero),zero,succ(zero))");
    CHECK(is_theorem(compiled, theorem).holds);

    // The untouched counter must stay put: bump counter 1 instead and the
    // encoding stops being a theorem.
    Trace wrong = trace;
    wrong.configurations[1].counters = {1, 0};
    CHECK(!is_theorem(compiled, encode_trace(wrong)).holds);

    // Bounded uniqueness at the trace length.
    std::size_t checked = 0;
    for_each_closed_formula(compiled.signature(),
                            static_cast<int>(trace.configurations.size()) + 1,
                            [&](const Formula& f) {
                                if (!(f == theorem)) {
                                    ++checked;
                                    CHECK(!is_theorem(compiled, f).holds);
                                }
                                return true;
                            });
    CHECK(checked > 10000);
}

TEST_CASE("build_reduction_pair") {
    const auto [tilded, unc] = build_reduction_pair(corpus_machine("INC1"));
    CHECK(tilded.signature() == unc.signature());
    CHECK(unc.value_count() == 2);
    // 14 base values, 10 of them undesignated and copied.
    CHECK(tilded.value_count() == 24);
    const Trace trace = run(corpus_machine("INC1"), {0}, 100);
    CHECK(is_theorem(tilded, encode_trace(trace)).holds);
    CHECK(!is_theorem(unc, encode_trace(trace)).holds);
}
