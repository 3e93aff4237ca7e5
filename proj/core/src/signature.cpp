#include "nmt/signature.hpp"

#include <algorithm>
#include <cctype>

#include "nmt/errors.hpp"

namespace nmt {

bool is_variable_token(std::string_view text) {
    if (text.size() < 2 || text[0] != 'p') return false;
    if (text[1] < '1' || text[1] > '9') return false;
    for (std::size_t i = 2; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
    }
    return true;
}

bool is_valid_connective_name(std::string_view name) {
    if (name.empty()) return false;
    const char first = name[0];
    if (!std::isalpha(static_cast<unsigned char>(first)) && first != '_') return false;
    for (char c : name) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '^') return false;
    }
    return !is_variable_token(name);
}

Signature Signature::from_connectives(std::vector<std::pair<std::string, int>> connectives) {
    Signature sig;
    for (auto& [name, arity] : connectives) sig.add(name, arity);
    return sig;
}

void Signature::add(const std::string& name, int arity) {
    std::vector<Violation> problems;
    if (!is_valid_connective_name(name)) {
        problems.push_back({name, "invalid connective identifier"});
    }
    if (arity < 0) {
        problems.push_back({name, "negative arity"});
    }
    if (contains(name)) {
        problems.push_back({name, "duplicate connective"});
    }
    if (!problems.empty()) throw ValidationError(std::move(problems));

    auto it = std::lower_bound(connectives_.begin(), connectives_.end(), name,
                               [](const auto& entry, const std::string& n) { return entry.first < n; });
    connectives_.insert(it, {name, arity});
}

bool Signature::contains(std::string_view name) const {
    return arity(name).has_value();
}

std::optional<int> Signature::arity(std::string_view name) const {
    auto it = std::lower_bound(connectives_.begin(), connectives_.end(), name,
                               [](const auto& entry, std::string_view n) { return entry.first < n; });
    if (it == connectives_.end() || it->first != name) return std::nullopt;
    return it->second;
}

}  // namespace nmt
