#ifndef NMT_NMATRIX_HPP
#define NMT_NMATRIX_HPP

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nmt/errors.hpp"
#include "nmt/signature.hpp"

namespace nmt {

// Index into an NMatrix's value list.
using Value = std::uint32_t;

// Sorted, duplicate-free set of value indices.
class ValueSet {
public:
    ValueSet() = default;
    ValueSet(std::initializer_list<Value> values) {
        for (Value v : values) insert(v);
    }

    void insert(Value v);
    bool contains(Value v) const;
    bool subset_of(const ValueSet& other) const;

    bool empty() const noexcept { return values_.empty(); }
    std::size_t size() const noexcept { return values_.size(); }
    auto begin() const noexcept { return values_.begin(); }
    auto end() const noexcept { return values_.end(); }
    const std::vector<Value>& items() const noexcept { return values_; }

    bool operator==(const ValueSet& other) const noexcept { return values_ == other.values_; }
    bool operator<(const ValueSet& other) const noexcept { return values_ < other.values_; }

private:
    std::vector<Value> values_;
};

// Total interpretation of one connective: |V|^arity rows in row-major order
// (first argument is the most significant digit).
struct ConnectiveTable {
    int arity = 0;
    std::vector<ValueSet> rows;
};

std::size_t tuple_index(std::span<const Value> args, std::size_t value_count);

// Raw, unchecked matrix description as it appears on disk.
struct RawNMatrix {
    std::vector<std::pair<std::string, int>> connectives;
    std::vector<std::string> values;
    std::vector<std::string> designated;
    struct Row {
        std::string connective;
        std::vector<std::string> args;
        std::vector<std::string> out;
    };
    std::vector<Row> rows;
};

class NMatrix {
public:
    // Checked construction; interp maps connective name -> full table.
    NMatrix(Signature sig, std::vector<std::string> values, std::vector<std::string> designated,
            std::map<std::string, ConnectiveTable> interpretation);

    const Signature& signature() const noexcept { return sig_; }
    const std::vector<std::string>& values() const noexcept { return values_; }
    std::size_t value_count() const noexcept { return values_.size(); }

    std::optional<Value> value_index(std::string_view name) const;
    const std::string& value_name(Value v) const { return values_.at(v); }

    bool is_designated(Value v) const { return designated_.at(v); }
    std::vector<Value> designated_values() const;
    std::vector<std::string> designated_names() const;

    const ConnectiveTable& table(std::string_view connective) const;
    const ValueSet& output(std::string_view connective, std::span<const Value> args) const;

    bool deterministic() const noexcept { return deterministic_; }

    bool operator==(const NMatrix& other) const;

private:
    Signature sig_;
    std::vector<std::string> values_;
    std::vector<bool> designated_;
    std::map<std::string, ConnectiveTable> interp_;
    bool deterministic_ = true;
};

// Full structural validation; empty result means raw describes a well-formed
// NMatrix (every tuple present exactly once, outputs non-empty, names known).
std::vector<Violation> validate_raw_nmatrix(const RawNMatrix& raw);

// Throws ValidationError carrying the violation list.
NMatrix nmatrix_from_raw(const RawNMatrix& raw);

RawNMatrix nmatrix_to_raw(const NMatrix& m);

}  // namespace nmt

#endif  // NMT_NMATRIX_HPP
