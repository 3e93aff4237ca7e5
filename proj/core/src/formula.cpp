#include "nmt/formula.hpp"

#include <algorithm>

#include "nmt/errors.hpp"

namespace nmt {

Formula Formula::var(unsigned index) {
    if (index == 0) throw InvalidInputError("variable indices start at 1");
    auto node = std::make_shared<Node>();
    node->var = index;
    node->depth = 0;
    node->size = 1;
    return Formula(std::move(node));
}

Formula Formula::app(std::string connective, std::vector<Formula> args) {
    if (!is_valid_connective_name(connective)) {
        throw InvalidInputError("invalid connective identifier: " + connective);
    }
    auto node = std::make_shared<Node>();
    int depth = 0;
    int size = 1;
    for (const Formula& arg : args) {
        depth = std::max(depth, arg.depth());
        size += arg.node_count();
    }
    node->connective = std::move(connective);
    node->args = std::move(args);
    node->depth = depth + 1;
    node->size = size;
    return Formula(std::move(node));
}

namespace {

void write_text(const Formula& f, std::string& out) {
    if (f.is_var()) {
        out += 'p';
        out += std::to_string(f.var_index());
        return;
    }
    out += f.connective();
    if (f.args().empty()) return;
    out += '(';
    bool first = true;
    for (const Formula& arg : f.args()) {
        if (!first) out += ',';
        first = false;
        write_text(arg, out);
    }
    out += ')';
}

}  // namespace

std::string Formula::text() const {
    std::string out;
    out.reserve(static_cast<std::size_t>(node_count()) * 4);
    write_text(*this, out);
    return out;
}

int Formula::compare(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return 0;
    if (a.depth() != b.depth()) return a.depth() < b.depth() ? -1 : 1;
    if (a.node_count() != b.node_count()) return a.node_count() < b.node_count() ? -1 : 1;
    return a.text().compare(b.text());
}

bool Formula::operator==(const Formula& other) const {
    if (node_ == other.node_) return true;
    if (node_->var != other.node_->var) return false;
    if (node_->depth != other.node_->depth || node_->size != other.node_->size) return false;
    if (node_->connective != other.node_->connective) return false;
    const auto& a = node_->args;
    const auto& b = other.node_->args;
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!(a[i] == b[i])) return false;
    }
    return true;
}

namespace {

void collect_subformulas(const Formula& f, FormulaSet& out) {
    if (out.contains(f)) return;
    for (const Formula& arg : f.args()) collect_subformulas(arg, out);
    out.insert(f);
}

}  // namespace

std::vector<Formula> subformulas(const Formula& formula) {
    FormulaSet seen;
    collect_subformulas(formula, seen);
    return {seen.begin(), seen.end()};
}

std::vector<Formula> subformula_closure(const std::vector<Formula>& formulas) {
    FormulaSet seen;
    for (const Formula& f : formulas) collect_subformulas(f, seen);
    return {seen.begin(), seen.end()};
}

namespace {

void collect_variables(const Formula& f, std::set<unsigned>& out) {
    if (f.is_var()) {
        out.insert(f.var_index());
        return;
    }
    for (const Formula& arg : f.args()) collect_variables(arg, out);
}

}  // namespace

std::set<unsigned> variables(const Formula& formula) {
    std::set<unsigned> out;
    collect_variables(formula, out);
    return out;
}

bool is_closed(const Formula& formula) {
    return variables(formula).empty();
}

Formula apply_substitution(const Substitution& sigma, const Formula& formula) {
    if (formula.is_var()) {
        auto it = sigma.find(formula.var_index());
        return it == sigma.end() ? formula : it->second;
    }
    if (formula.args().empty()) return formula;
    std::vector<Formula> args;
    args.reserve(formula.args().size());
    bool changed = false;
    for (const Formula& arg : formula.args()) {
        Formula replaced = apply_substitution(sigma, arg);
        changed = changed || !(replaced == arg);
        args.push_back(std::move(replaced));
    }
    if (!changed) return formula;
    return Formula::app(formula.connective(), std::move(args));
}

std::optional<std::string> well_formed_error(const Formula& formula, const Signature& sig) {
    if (formula.is_var()) return std::nullopt;
    auto arity = sig.arity(formula.connective());
    if (!arity.has_value()) {
        return "unknown connective: " + formula.connective();
    }
    if (static_cast<std::size_t>(*arity) != formula.args().size()) {
        return "arity mismatch: " + formula.connective() + " expects " +
               std::to_string(*arity) + " arguments, got " +
               std::to_string(formula.args().size());
    }
    for (const Formula& arg : formula.args()) {
        if (auto err = well_formed_error(arg, sig)) return err;
    }
    return std::nullopt;
}

}  // namespace nmt
