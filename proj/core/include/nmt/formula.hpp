#ifndef NMT_FORMULA_HPP
#define NMT_FORMULA_HPP

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "nmt/signature.hpp"

namespace nmt {

// Immutable propositional formula: a variable p<i> or the application of a
// connective to argument formulas.  Copies share structure.
//
// Formulas are ordered canonically by (depth, node count, canonical text);
// the canonical text of `or(p1,neg(p2))` is exactly "or(p1,neg(p2))" and
// 0-ary connectives print as bare names.  Proper subformulas always precede
// their superformulas in this order, so it doubles as a topological order.
class Formula {
public:
    static Formula var(unsigned index);  // index >= 1
    static Formula app(std::string connective, std::vector<Formula> args);

    bool is_var() const noexcept { return node_->var != 0; }
    unsigned var_index() const noexcept { return node_->var; }
    const std::string& connective() const noexcept { return node_->connective; }
    const std::vector<Formula>& args() const noexcept { return node_->args; }

    // Depth of a variable is 0, of an application 1 + max depth of its
    // arguments (1 for 0-ary connectives).
    int depth() const noexcept { return node_->depth; }
    int node_count() const noexcept { return node_->size; }

    std::string text() const;

    // Canonical order; returns <0, 0, >0.  compare()==0 iff structural equality.
    static int compare(const Formula& a, const Formula& b);

    bool operator==(const Formula& other) const;
    bool operator!=(const Formula& other) const { return !(*this == other); }
    bool operator<(const Formula& other) const { return compare(*this, other) < 0; }

private:
    struct Node {
        unsigned var = 0;  // 0 for applications
        std::string connective;
        std::vector<Formula> args;
        int depth = 0;
        int size = 1;
    };

    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

struct FormulaLess {
    bool operator()(const Formula& a, const Formula& b) const {
        return Formula::compare(a, b) < 0;
    }
};

using FormulaSet = std::set<Formula, FormulaLess>;

// sub(A): canonically ordered, subformula-closed, ends with A itself.
std::vector<Formula> subformulas(const Formula& formula);

// Union of sub(A) over a set, canonically ordered.
std::vector<Formula> subformula_closure(const std::vector<Formula>& formulas);

// var(A): the variable indices occurring in A.
std::set<unsigned> variables(const Formula& formula);

bool is_closed(const Formula& formula);

// Finite-support substitution, identity outside its domain.
using Substitution = std::map<unsigned, Formula>;

Formula apply_substitution(const Substitution& sigma, const Formula& formula);

// Empty when A is well formed under sig; otherwise a description of the
// first unknown connective or arity mismatch found.
std::optional<std::string> well_formed_error(const Formula& formula, const Signature& sig);

}  // namespace nmt

#endif  // NMT_FORMULA_HPP
