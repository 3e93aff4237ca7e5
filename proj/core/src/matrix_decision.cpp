#include "nmt/matrix_decision.hpp"

#include <algorithm>
#include <map>

#include "nmt/consequence.hpp"

namespace nmt {

namespace {

// Deterministic matrices only: expressed functions as flat value vectors,
// composed pointwise per the compositionality equation for matrices.
using FuncTable = std::vector<Value>;

void require_deterministic(const NMatrix& m, const char* operation) {
    if (!m.deterministic()) {
        throw InvalidInputError(std::string(operation) +
                                " requires deterministic matrices (non-deterministic input)");
    }
}

Value single(const ValueSet& s) { return *s.begin(); }

FuncTable projection(std::size_t var, std::size_t n, std::size_t value_count) {
    std::size_t rows = 1;
    for (std::size_t i = 0; i < n; ++i) rows *= value_count;
    FuncTable t(rows);
    std::vector<Value> tuple(n, 0);
    for (std::size_t row = 0; row < rows; ++row) {
        std::size_t rest = row;
        for (std::size_t i = n; i-- > 0;) {
            tuple[i] = static_cast<Value>(rest % value_count);
            rest /= value_count;
        }
        t[row] = tuple[var];
    }
    return t;
}

FuncTable compose(const NMatrix& m, const std::string& connective,
                  const std::vector<const FuncTable*>& children, std::size_t rows) {
    FuncTable t(rows);
    std::vector<Value> args(children.size());
    for (std::size_t row = 0; row < rows; ++row) {
        for (std::size_t i = 0; i < children.size(); ++i) args[i] = (*children[i])[row];
        t[row] = single(m.output(connective, args));
    }
    return t;
}

MultiFunctionTable to_multi(const FuncTable& t, int arity, std::size_t value_count) {
    MultiFunctionTable out;
    out.arity = arity;
    out.value_count = value_count;
    out.entries.reserve(t.size());
    for (Value v : t) out.entries.push_back(ValueSet{v});
    return out;
}

struct ThetaBuilder {
    const NMatrix& m1;
    const NMatrix& m2;
    int n;
    std::size_t rows1, rows2;
    std::vector<Formula> reps;
    std::vector<FuncTable> tables1, tables2;
    std::map<std::pair<FuncTable, FuncTable>, std::size_t> seen;

    bool try_add(Formula f, FuncTable t1, FuncTable t2) {
        auto key = std::make_pair(std::move(t1), std::move(t2));
        if (seen.contains(key)) return false;
        seen.emplace(key, reps.size());
        reps.push_back(std::move(f));
        tables1.push_back(std::move(key.first));
        tables2.push_back(std::move(key.second));
        return true;
    }
};

}  // namespace

ThetaSet build_theta(const NMatrix& m1, const NMatrix& m2, int variable_bound,
                     std::size_t max_size) {
    require_deterministic(m1, "build_theta");
    require_deterministic(m2, "build_theta");
    if (!(m1.signature() == m2.signature())) {
        throw InvalidInputError("build_theta requires a shared signature");
    }
    const int min_bound = static_cast<int>(std::max(m1.value_count(), m2.value_count()));
    if (variable_bound < min_bound) {
        throw InvalidInputError("variable bound must be at least max(|V1|,|V2|) = " +
                                std::to_string(min_bound));
    }

    const std::size_t n = static_cast<std::size_t>(variable_bound);
    ThetaBuilder b{m1, m2, variable_bound, 0, 0, {}, {}, {}, {}};
    b.rows1 = 1;
    b.rows2 = 1;
    for (std::size_t i = 0; i < n; ++i) {
        b.rows1 *= m1.value_count();
        b.rows2 *= m2.value_count();
    }
    for (std::size_t i = 0; i < n; ++i) {
        b.try_add(Formula::var(static_cast<unsigned>(i + 1)),
                  projection(i, n, m1.value_count()), projection(i, n, m2.value_count()));
    }

    // Fixpoint rounds: apply every connective to current representatives; new
    // table pairs enter with their canonically least formula.
    std::size_t frontier_start = 0;
    while (frontier_start < b.reps.size()) {
        const std::size_t round_end = b.reps.size();
        frontier_start = round_end;

        struct Candidate {
            Formula formula;
            FuncTable t1, t2;
        };
        std::vector<Candidate> candidates;
        for (const auto& [name, arity] : m1.signature().connectives()) {
            std::vector<std::size_t> pick(static_cast<std::size_t>(arity), 0);
            while (true) {
                std::vector<Formula> args;
                std::vector<const FuncTable*> kids1, kids2;
                for (std::size_t idx : pick) {
                    args.push_back(b.reps[idx]);
                    kids1.push_back(&b.tables1[idx]);
                    kids2.push_back(&b.tables2[idx]);
                }
                candidates.push_back(Candidate{Formula::app(name, std::move(args)),
                                               compose(m1, name, kids1, b.rows1),
                                               compose(m2, name, kids2, b.rows2)});
                if (arity == 0) break;
                std::size_t i = pick.size();
                bool rolled_over = true;
                while (i > 0) {
                    --i;
                    if (++pick[i] < round_end) {
                        rolled_over = false;
                        break;
                    }
                    pick[i] = 0;
                }
                if (rolled_over) break;
            }
        }
        std::sort(candidates.begin(), candidates.end(),
                  [](const Candidate& a, const Candidate& c) {
                      return Formula::compare(a.formula, c.formula) < 0;
                  });
        for (Candidate& c : candidates) {
            b.try_add(std::move(c.formula), std::move(c.t1), std::move(c.t2));
            if (b.reps.size() > max_size) {
                throw ResourceLimitError("theta fixpoint exceeded the safety cap of " +
                                         std::to_string(max_size) + " representatives");
            }
        }
    }

    ThetaSet theta;
    theta.variable_bound = variable_bound;
    for (std::size_t i = 0; i < b.reps.size(); ++i) {
        theta.entries.push_back(ThetaEntry{b.reps[i],
                                           to_multi(b.tables1[i], variable_bound, m1.value_count()),
                                           to_multi(b.tables2[i], variable_bound, m2.value_count())});
    }
    return theta;
}

InclusionResult decide_matrix_inclusion(const NMatrix& m1, const NMatrix& m2) {
    require_deterministic(m1, "decide_matrix_inclusion");
    require_deterministic(m2, "decide_matrix_inclusion");
    if (!(m1.signature() == m2.signature())) {
        throw InvalidInputError("decide_matrix_inclusion requires a shared signature");
    }

    const int n = static_cast<int>(std::max(m1.value_count(), m2.value_count()));
    const ThetaSet theta = build_theta(m1, m2, n);

    // Per m2-valuation (one per tuple over V2^n), the maximal designated
    // premise set; by monotonicity only that set needs testing.
    std::size_t tuple_count = 1;
    for (int i = 0; i < n; ++i) tuple_count *= m2.value_count();

    std::vector<std::vector<bool>> designated_at(tuple_count);
    std::vector<Value> tuple(static_cast<std::size_t>(n), 0);
    for (std::size_t t = 0; t < tuple_count; ++t) {
        std::size_t rest = t;
        for (std::size_t i = tuple.size(); i-- > 0;) {
            tuple[i] = static_cast<Value>(rest % m2.value_count());
            rest /= m2.value_count();
        }
        std::vector<bool> row(theta.entries.size());
        for (std::size_t e = 0; e < theta.entries.size(); ++e) {
            row[e] = m2.is_designated(*theta.entries[e].table2.at(tuple).begin());
        }
        designated_at[t] = std::move(row);
    }

    // Conclusions in canonical order so the reported witness is the least one.
    for (std::size_t e = 0; e < theta.entries.size(); ++e) {
        const Formula& conclusion = theta.entries[e].representative;
        for (std::size_t t = 0; t < tuple_count; ++t) {
            if (designated_at[t][e]) continue;
            std::vector<Formula> premises;
            for (std::size_t other = 0; other < theta.entries.size(); ++other) {
                if (designated_at[t][other]) {
                    premises.push_back(theta.entries[other].representative);
                }
            }
            if (!decide_consequence(m1, premises, conclusion).holds) continue;

            // Witness found; shrink the premise set while the consequence
            // still holds in m1 (dropping premises cannot restore it in m2).
            for (std::size_t i = 0; i < premises.size();) {
                std::vector<Formula> smaller = premises;
                smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(i));
                if (decide_consequence(m1, smaller, conclusion).holds) {
                    premises = std::move(smaller);
                } else {
                    ++i;
                }
            }
            return InclusionResult{false, Separation{std::move(premises), conclusion}};
        }
    }
    return InclusionResult{true, std::nullopt};
}

MatrixEquivalenceResult decide_matrix_equivalence(const NMatrix& m1, const NMatrix& m2) {
    InclusionResult forward = decide_matrix_inclusion(m1, m2);
    if (!forward.included) {
        return MatrixEquivalenceResult{false, 1, std::move(forward.witness)};
    }
    InclusionResult backward = decide_matrix_inclusion(m2, m1);
    if (!backward.included) {
        return MatrixEquivalenceResult{false, 2, std::move(backward.witness)};
    }
    return MatrixEquivalenceResult{true, 0, std::nullopt};
}

std::optional<Formula> matrix_theorem_existence(const NMatrix& m, std::size_t max_size) {
    require_deterministic(m, "matrix_theorem_existence");

    const std::size_t value_count = m.value_count();
    auto all_designated = [&](const FuncTable& t) {
        return std::all_of(t.begin(), t.end(), [&](Value v) { return m.is_designated(v); });
    };

    std::vector<Formula> reps;
    std::vector<FuncTable> tables;
    std::map<FuncTable, std::size_t> seen;
    auto try_add = [&](Formula f, FuncTable t) {
        if (seen.contains(t)) return false;
        seen.emplace(t, reps.size());
        reps.push_back(std::move(f));
        tables.push_back(std::move(t));
        return true;
    };

    FuncTable identity(value_count);
    for (std::size_t i = 0; i < value_count; ++i) identity[i] = static_cast<Value>(i);
    if (all_designated(identity)) return Formula::var(1);
    try_add(Formula::var(1), std::move(identity));

    std::size_t frontier_start = 0;
    while (frontier_start < reps.size()) {
        const std::size_t round_end = reps.size();
        frontier_start = round_end;

        struct Candidate {
            Formula formula;
            FuncTable table;
        };
        std::vector<Candidate> candidates;
        for (const auto& [name, arity] : m.signature().connectives()) {
            std::vector<std::size_t> pick(static_cast<std::size_t>(arity), 0);
            while (true) {
                std::vector<Formula> args;
                std::vector<const FuncTable*> kids;
                for (std::size_t idx : pick) {
                    args.push_back(reps[idx]);
                    kids.push_back(&tables[idx]);
                }
                candidates.push_back(Candidate{Formula::app(name, std::move(args)),
                                               compose(m, name, kids, value_count)});
                if (arity == 0) break;
                std::size_t i = pick.size();
                bool rolled_over = true;
                while (i > 0) {
                    --i;
                    if (++pick[i] < round_end) {
                        rolled_over = false;
                        break;
                    }
                    pick[i] = 0;
                }
                if (rolled_over) break;
            }
        }
        std::sort(candidates.begin(), candidates.end(),
                  [](const Candidate& a, const Candidate& c) {
                      return Formula::compare(a.formula, c.formula) < 0;
                  });
        for (Candidate& c : candidates) {
            if (seen.contains(c.table)) continue;
            if (all_designated(c.table)) return c.formula;
            try_add(std::move(c.formula), std::move(c.table));
            if (reps.size() > max_size) {
                throw ResourceLimitError("function-table fixpoint exceeded the safety cap of " +
                                         std::to_string(max_size) + " representatives");
            }
        }
    }
    return std::nullopt;
}

}  // namespace nmt
