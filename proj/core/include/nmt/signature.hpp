#ifndef NMT_SIGNATURE_HPP
#define NMT_SIGNATURE_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nmt {

// True for identifiers matching NAME := [A-Za-z_][A-Za-z0-9_^]* that are not
// variable tokens (VAR := "p" [1-9][0-9]*).
bool is_valid_connective_name(std::string_view name);

// True for variable tokens p1, p2, ...
bool is_variable_token(std::string_view text);

// A finite map from connective identifiers to arities.  Connectives are kept
// sorted by name so that every traversal of a signature is deterministic.
class Signature {
public:
    Signature() = default;

    // Throws ValidationError when a name is malformed or duplicated.
    static Signature from_connectives(std::vector<std::pair<std::string, int>> connectives);

    void add(const std::string& name, int arity);

    bool contains(std::string_view name) const;
    std::optional<int> arity(std::string_view name) const;

    // Sorted by connective name.
    const std::vector<std::pair<std::string, int>>& connectives() const noexcept {
        return connectives_;
    }

    std::size_t size() const noexcept { return connectives_.size(); }
    bool empty() const noexcept { return connectives_.empty(); }

    bool operator==(const Signature& other) const noexcept {
        return connectives_ == other.connectives_;
    }

private:
    std::vector<std::pair<std::string, int>> connectives_;
};

}  // namespace nmt

#endif  // NMT_SIGNATURE_HPP
