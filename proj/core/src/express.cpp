#include "nmt/express.hpp"

#include <algorithm>
#include <cassert>

namespace nmt {

MultiFunctionTable express(const NMatrix& m, const Formula& formula, int arity) {
    if (arity < 0) throw InvalidInputError("arity must be non-negative");
    if (auto err = well_formed_error(formula, m.signature())) {
        throw InvalidInputError("formula not over the matrix signature: " + *err);
    }
    for (unsigned v : variables(formula)) {
        if (v > static_cast<unsigned>(arity)) {
            throw InvalidInputError("variable p" + std::to_string(v) +
                                    " above the requested arity " + std::to_string(arity));
        }
    }

    // Assemble sub(A) together with p1..pn so every tuple component is pinned.
    std::vector<Formula> base;
    for (int i = 1; i <= arity; ++i) base.push_back(Formula::var(static_cast<unsigned>(i)));
    base.push_back(formula);
    const std::vector<Formula> closure = subformula_closure(base);

    auto position_of = [&](const Formula& f) {
        auto it = std::lower_bound(closure.begin(), closure.end(), f, FormulaLess{});
        assert(it != closure.end());
        return static_cast<std::size_t>(it - closure.begin());
    };

    struct Node {
        bool is_var = false;
        unsigned var_index = 0;
        const Formula* formula = nullptr;
        std::vector<std::size_t> children;
    };
    std::vector<Node> nodes(closure.size());
    for (std::size_t i = 0; i < closure.size(); ++i) {
        nodes[i].formula = &closure[i];
        nodes[i].is_var = closure[i].is_var();
        nodes[i].var_index = closure[i].is_var() ? closure[i].var_index() : 0;
        for (const Formula& arg : closure[i].args()) {
            nodes[i].children.push_back(position_of(arg));
        }
    }
    const std::size_t target = position_of(formula);
    const std::size_t value_count = m.value_count();

    MultiFunctionTable result;
    result.arity = arity;
    result.value_count = value_count;
    std::size_t tuple_count = 1;
    for (int i = 0; i < arity; ++i) tuple_count *= value_count;
    result.entries.resize(tuple_count);

    std::vector<Value> tuple(static_cast<std::size_t>(arity), 0);
    std::vector<Value> assignment(nodes.size(), 0);
    std::vector<Value> child_values;

    for (std::size_t t = 0; t < tuple_count; ++t) {
        std::size_t rest = t;
        for (std::size_t i = tuple.size(); i-- > 0;) {
            tuple[i] = static_cast<Value>(rest % value_count);
            rest /= value_count;
        }
        ValueSet& outcomes = result.entries[t];

        // Enumerate prevaluations over the closure with the variables pinned,
        // collecting the target's value; stop early once every value occurred.
        std::vector<std::vector<Value>> candidates(nodes.size());
        std::vector<std::size_t> next_choice(nodes.size(), 0);

        auto compute_candidates = [&](std::size_t i) {
            std::vector<Value>& out = candidates[i];
            out.clear();
            const Node& node = nodes[i];
            if (node.is_var) {
                out.push_back(tuple[node.var_index - 1]);
            } else {
                child_values.clear();
                for (std::size_t child : node.children) child_values.push_back(assignment[child]);
                const ValueSet& allowed = m.output(node.formula->connective(), child_values);
                out.assign(allowed.begin(), allowed.end());
            }
        };

        std::size_t level = 0;
        compute_candidates(0);
        while (true) {
            if (next_choice[level] < candidates[level].size()) {
                assignment[level] = candidates[level][next_choice[level]++];
                if (level + 1 == nodes.size()) {
                    outcomes.insert(assignment[target]);
                    if (outcomes.size() == value_count) break;
                } else {
                    ++level;
                    compute_candidates(level);
                    next_choice[level] = 0;
                }
            } else {
                if (level == 0) break;
                --level;
            }
        }
        assert(!outcomes.empty());
    }
    return result;
}

}  // namespace nmt
