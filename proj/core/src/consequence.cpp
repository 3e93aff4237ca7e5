#include "nmt/consequence.hpp"

#include <algorithm>
#include <cassert>

namespace nmt {

namespace {

struct SearchNode {
    const Formula* formula;
    bool is_premise = false;
    bool is_conclusion = false;
    // Positions (into the node array) of the immediate subformulas; empty for
    // variables.
    std::vector<std::size_t> children;
};

}  // namespace

ConsequenceResult decide_consequence(const NMatrix& m, const std::vector<Formula>& premises,
                                     const Formula& conclusion) {
    for (const Formula& f : premises) {
        if (auto err = well_formed_error(f, m.signature())) {
            throw InvalidInputError("premise not over the matrix signature: " + *err);
        }
    }
    if (auto err = well_formed_error(conclusion, m.signature())) {
        throw InvalidInputError("conclusion not over the matrix signature: " + *err);
    }

    // Reflexivity shortcut.
    for (const Formula& f : premises) {
        if (f == conclusion) return {true, {}};
    }

    std::vector<Formula> all = premises;
    all.push_back(conclusion);
    const std::vector<Formula> closure = subformula_closure(all);

    auto position_of = [&](const Formula& f) {
        auto it = std::lower_bound(closure.begin(), closure.end(), f, FormulaLess{});
        assert(it != closure.end());
        return static_cast<std::size_t>(it - closure.begin());
    };

    std::vector<SearchNode> nodes(closure.size());
    for (std::size_t i = 0; i < closure.size(); ++i) {
        nodes[i].formula = &closure[i];
        for (const Formula& arg : closure[i].args()) {
            nodes[i].children.push_back(position_of(arg));
        }
    }
    for (const Formula& f : premises) nodes[position_of(f)].is_premise = true;
    nodes[position_of(conclusion)].is_conclusion = true;

    const std::size_t value_count = m.value_count();
    std::vector<Value> assignment(nodes.size(), 0);
    std::vector<Value> child_values;

    // Depth-first search; canonical order is topological, so children are
    // always assigned before their parents.
    std::size_t level = 0;
    std::vector<std::vector<Value>> candidates(nodes.size());

    auto compute_candidates = [&](std::size_t i) {
        std::vector<Value>& out = candidates[i];
        out.clear();
        const SearchNode& node = nodes[i];
        auto admissible = [&](Value v) {
            if (node.is_premise && !m.is_designated(v)) return false;
            if (node.is_conclusion && m.is_designated(v)) return false;
            return true;
        };
        if (node.formula->is_var()) {
            for (Value v = 0; v < value_count; ++v) {
                if (admissible(v)) out.push_back(v);
            }
        } else {
            child_values.clear();
            for (std::size_t child : node.children) child_values.push_back(assignment[child]);
            for (Value v : m.output(node.formula->connective(), child_values)) {
                if (admissible(v)) out.push_back(v);
            }
        }
    };

    std::vector<std::size_t> next_choice(nodes.size(), 0);
    if (nodes.empty()) return {true, {}};

    compute_candidates(0);
    next_choice[0] = 0;
    while (true) {
        if (next_choice[level] < candidates[level].size()) {
            assignment[level] = candidates[level][next_choice[level]++];
            if (level + 1 == nodes.size()) {
                // Complete countermodel.
                PrevaluationTable witness;
                for (std::size_t i = 0; i < nodes.size(); ++i) {
                    witness.emplace(*nodes[i].formula, m.value_name(assignment[i]));
                }
                assert(check_prevaluation(m, witness).ok);
                return {false, std::move(witness)};
            }
            ++level;
            compute_candidates(level);
            next_choice[level] = 0;
        } else {
            if (level == 0) break;
            --level;
        }
    }
    return {true, {}};
}

ConsequenceResult is_theorem(const NMatrix& m, const Formula& formula) {
    return decide_consequence(m, {}, formula);
}

}  // namespace nmt
