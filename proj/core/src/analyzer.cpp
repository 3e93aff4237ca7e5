#include "nmt/analyzer.hpp"

#include <algorithm>

#include "nmt/enumerate.hpp"

namespace nmt {

RuleSetReport check_rule_set(const NMatrix& m, const RuleSet& rules) {
    RuleSetReport report;
    for (std::size_t i = 0; i < rules.rules.size(); ++i) {
        const Rule& r = rules.rules[i];
        ConsequenceResult res = decide_consequence(m, r.premises, r.conclusion);
        report.all_hold = report.all_hold && res.holds;
        report.rules.push_back(RuleCheck{i, std::move(res)});
    }
    return report;
}

AxiomatizationInclusion inclusion_from_axiomatization(const RuleSet& rules, const NMatrix& m2) {
    for (std::size_t i = 0; i < rules.rules.size(); ++i) {
        const Rule& r = rules.rules[i];
        if (!decide_consequence(m2, r.premises, r.conclusion).holds) {
            return AxiomatizationInclusion{false, i};
        }
    }
    return AxiomatizationInclusion{true, std::nullopt};
}

std::optional<Counterexample> search_counterexample(const NMatrix& m1, const NMatrix& m2,
                                                    const SearchBudget& budget) {
    if (!(m1.signature() == m2.signature())) {
        throw InvalidInputError("counterexample search requires a shared signature");
    }
    const std::vector<Formula> pool =
        enumerate_formulas(m1.signature(), budget.variables, budget.depth);

    // Premise sets by size then lexicographic index order; conclusions in
    // canonical order within each premise set.
    std::vector<std::size_t> pick;
    std::vector<Formula> premises;

    auto scan_conclusions = [&]() -> std::optional<Counterexample> {
        for (const Formula& conclusion : pool) {
            if (std::find(premises.begin(), premises.end(), conclusion) != premises.end()) {
                continue;  // reflexivity holds everywhere, never a divergence
            }
            ConsequenceResult r1 = decide_consequence(m1, premises, conclusion);
            ConsequenceResult r2 = decide_consequence(m2, premises, conclusion);
            if (r1.holds == r2.holds) continue;
            Counterexample cx;
            cx.premises = premises;
            cx.conclusion = conclusion;
            cx.holds_in = r1.holds ? 1 : 2;
            cx.witness = r1.holds ? std::move(r2.witness) : std::move(r1.witness);
            return cx;
        }
        return std::nullopt;
    };

    const int max_size = std::min<int>(budget.max_premises, static_cast<int>(pool.size()));
    for (int size = 0; size <= max_size; ++size) {
        pick.assign(static_cast<std::size_t>(size), 0);
        for (int i = 0; i < size; ++i) pick[static_cast<std::size_t>(i)] = static_cast<std::size_t>(i);
        while (true) {
            premises.clear();
            for (std::size_t idx : pick) premises.push_back(pool[idx]);
            if (auto found = scan_conclusions()) return found;
            if (size == 0) break;
            // Next size-combination in lexicographic order.
            int i = size - 1;
            while (i >= 0 && pick[static_cast<std::size_t>(i)] ==
                                 pool.size() - static_cast<std::size_t>(size - i)) {
                --i;
            }
            if (i < 0) break;
            ++pick[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < size; ++j) {
                pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
            }
        }
    }
    return std::nullopt;
}

std::optional<Formula> search_theorem_bounded(const NMatrix& m, int depth, int variables) {
    // Sound fast path: when some value is undesignated and every
    // interpretation output can be picked undesignated, the greedy bottom-up
    // assignment undesignates every formula, so the logic has no theorems at
    // any depth.
    bool has_undesignated = false;
    for (std::size_t v = 0; v < m.value_count(); ++v) {
        if (!m.is_designated(static_cast<Value>(v))) {
            has_undesignated = true;
            break;
        }
    }
    if (has_undesignated) {
        bool always_escapable = true;
        for (const auto& [name, arity] : m.signature().connectives()) {
            for (const ValueSet& out : m.table(name).rows) {
                bool escapes = false;
                for (Value v : out) {
                    if (!m.is_designated(v)) {
                        escapes = true;
                        break;
                    }
                }
                if (!escapes) {
                    always_escapable = false;
                    break;
                }
            }
            if (!always_escapable) break;
        }
        if (always_escapable) return std::nullopt;
    }

    for (const Formula& f : enumerate_formulas(m.signature(), variables, depth)) {
        if (is_theorem(m, f).holds) return f;
    }
    return std::nullopt;
}

namespace {

// Two values, exactly one designated, every output the full value set: the
// unconstrained Nmatrix up to value renaming.
bool is_unconstrained_shape(const NMatrix& m) {
    if (m.value_count() != 2) return false;
    if (m.is_designated(0) == m.is_designated(1)) return false;
    const ValueSet both{0, 1};
    for (const auto& [name, arity] : m.signature().connectives()) {
        for (const ValueSet& out : m.table(name).rows) {
            if (!(out == both)) return false;
        }
    }
    return true;
}

}  // namespace

Verdict analyze(const NMatrix& m1, const NMatrix& m2, const AnalyzeOptions& options) {
    if (!(m1.signature() == m2.signature())) {
        throw InvalidInputError("analyze requires a shared signature");
    }

    Verdict verdict;
    verdict.budget = options.budget;

    // Stage 1: both deterministic, the complete decision applies.
    verdict.stages_attempted.push_back(1);
    if (m1.deterministic() && m2.deterministic()) {
        MatrixEquivalenceResult r = decide_matrix_equivalence(m1, m2);
        verdict.outcome = r.equivalent ? Outcome::Equivalent : Outcome::NotEquivalent;
        verdict.stage = 1;
        verdict.deterministic = std::move(r);
        return verdict;
    }

    // Stage 2: a strongly-preserving strict hom in either direction forces
    // equality of the logics.
    verdict.stages_attempted.push_back(2);
    std::vector<HomCandidate> forward = enumerate_strict_homs(m1, m2);
    std::vector<HomCandidate> backward = enumerate_strict_homs(m2, m1);
    for (const HomCandidate& h : forward) {
        if (h.strongly_preserving) {
            verdict.outcome = Outcome::Equivalent;
            verdict.stage = 2;
            verdict.strong_hom = StrongHomEvidence{1, h};
            return verdict;
        }
    }
    for (const HomCandidate& h : backward) {
        if (h.strongly_preserving) {
            verdict.outcome = Outcome::Equivalent;
            verdict.stage = 2;
            verdict.strong_hom = StrongHomEvidence{2, h};
            return verdict;
        }
    }

    // Stage 3: strict homs both ways give inclusion both ways.
    verdict.stages_attempted.push_back(3);
    if (!forward.empty() && !backward.empty()) {
        verdict.outcome = Outcome::Equivalent;
        verdict.stage = 3;
        verdict.hom_pair = HomPairEvidence{forward.front(), backward.front()};
        return verdict;
    }

    // Stage 4: one side unconstrained, the other the tilde of the supplied
    // preimage; a no-theorem certificate for the preimage makes the tilded
    // logic discrete.
    verdict.stages_attempted.push_back(4);
    if (options.tilde_preimage.has_value()) {
        const NMatrix& base = *options.tilde_preimage;
        int unconstrained_side = 0;
        if (is_unconstrained_shape(m1)) unconstrained_side = 1;
        if (is_unconstrained_shape(m2)) unconstrained_side = 2;
        if (unconstrained_side != 0 && base.signature() == m1.signature()) {
            const NMatrix& other = unconstrained_side == 1 ? m2 : m1;
            bool matches_tilde = false;
            try {
                matches_tilde = tilde(base) == other;
            } catch (const InvalidInputError&) {
                matches_tilde = false;
            }
            if (matches_tilde) {
                std::vector<std::pair<std::string, NMatrix>> corpus = options.corpus;
                corpus.emplace_back("tilde-preimage", base);
                if (auto cert = certify_no_theorems(base, corpus)) {
                    verdict.outcome = Outcome::Equivalent;
                    verdict.stage = 4;
                    verdict.certificate =
                        CertificateEvidence{unconstrained_side, std::move(*cert)};
                    return verdict;
                }
            }
        }
    }

    // Stage 5: budgeted counterexample search.
    verdict.stages_attempted.push_back(5);
    if (auto cx = search_counterexample(m1, m2, options.budget)) {
        verdict.outcome = Outcome::NotEquivalent;
        verdict.stage = 5;
        verdict.counterexample = std::move(cx);
        return verdict;
    }

    verdict.stages_attempted.push_back(6);
    verdict.outcome = Outcome::Unknown;
    verdict.stage = 6;
    return verdict;
}

}  // namespace nmt
