#include "nmt/nmatrix.hpp"

#include <algorithm>
#include <set>

namespace nmt {

void ValueSet::insert(Value v) {
    auto it = std::lower_bound(values_.begin(), values_.end(), v);
    if (it == values_.end() || *it != v) values_.insert(it, v);
}

bool ValueSet::contains(Value v) const {
    return std::binary_search(values_.begin(), values_.end(), v);
}

bool ValueSet::subset_of(const ValueSet& other) const {
    return std::includes(other.values_.begin(), other.values_.end(), values_.begin(),
                         values_.end());
}

std::size_t tuple_index(std::span<const Value> args, std::size_t value_count) {
    std::size_t index = 0;
    for (Value v : args) index = index * value_count + v;
    return index;
}

NMatrix::NMatrix(Signature sig, std::vector<std::string> values,
                 std::vector<std::string> designated,
                 std::map<std::string, ConnectiveTable> interpretation)
    : sig_(std::move(sig)), values_(std::move(values)), interp_(std::move(interpretation)) {
    std::vector<Violation> problems;
    if (values_.empty()) problems.push_back({"values", "value set must be non-empty"});

    designated_.assign(values_.size(), false);
    for (const std::string& name : designated) {
        auto v = value_index(name);
        if (!v.has_value()) {
            problems.push_back({"designated", "unknown value: " + name});
            continue;
        }
        designated_[*v] = true;
    }

    for (const auto& [name, arity] : sig_.connectives()) {
        auto it = interp_.find(name);
        if (it == interp_.end()) {
            problems.push_back({name, "missing interpretation"});
            continue;
        }
        const ConnectiveTable& t = it->second;
        std::size_t expected = 1;
        for (int i = 0; i < arity; ++i) expected *= values_.size();
        if (t.arity != arity || t.rows.size() != expected) {
            problems.push_back({name, "interpretation table has the wrong shape"});
            continue;
        }
        for (const ValueSet& out : t.rows) {
            if (out.empty()) {
                problems.push_back({name, "empty output set"});
                break;
            }
            if (!out.empty() && *std::prev(out.end()) >= values_.size()) {
                problems.push_back({name, "output value out of range"});
                break;
            }
            if (out.size() > 1) deterministic_ = false;
        }
    }
    if (interp_.size() != sig_.connectives().size()) {
        for (const auto& [name, table] : interp_) {
            if (!sig_.contains(name)) {
                problems.push_back({name, "interpretation for a connective not in the signature"});
            }
        }
    }
    if (!problems.empty()) throw ValidationError(std::move(problems));
}

std::optional<Value> NMatrix::value_index(std::string_view name) const {
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (values_[i] == name) return static_cast<Value>(i);
    }
    return std::nullopt;
}

std::vector<Value> NMatrix::designated_values() const {
    std::vector<Value> out;
    for (std::size_t i = 0; i < designated_.size(); ++i) {
        if (designated_[i]) out.push_back(static_cast<Value>(i));
    }
    return out;
}

std::vector<std::string> NMatrix::designated_names() const {
    std::vector<std::string> out;
    for (Value v : designated_values()) out.push_back(values_[v]);
    return out;
}

const ConnectiveTable& NMatrix::table(std::string_view connective) const {
    auto it = interp_.find(std::string(connective));
    if (it == interp_.end()) {
        throw InvalidInputError("no interpretation for connective: " + std::string(connective));
    }
    return it->second;
}

const ValueSet& NMatrix::output(std::string_view connective, std::span<const Value> args) const {
    const ConnectiveTable& t = table(connective);
    return t.rows[tuple_index(args, values_.size())];
}

bool NMatrix::operator==(const NMatrix& other) const {
    if (!(sig_ == other.sig_) || values_ != other.values_ || designated_ != other.designated_) {
        return false;
    }
    for (const auto& [name, t] : interp_) {
        auto it = other.interp_.find(name);
        if (it == other.interp_.end() || it->second.arity != t.arity ||
            it->second.rows != t.rows) {
            return false;
        }
    }
    return true;
}

std::vector<Violation> validate_raw_nmatrix(const RawNMatrix& raw) {
    std::vector<Violation> problems;

    Signature sig;
    try {
        sig = Signature::from_connectives(raw.connectives);
    } catch (const ValidationError& e) {
        return e.violations();
    }

    std::set<std::string> value_names;
    for (const std::string& v : raw.values) {
        if (v.empty()) problems.push_back({"values", "empty value name"});
        if (!value_names.insert(v).second) {
            problems.push_back({"values", "duplicate value: " + v});
        }
    }
    if (raw.values.empty()) problems.push_back({"values", "value set must be non-empty"});

    for (const std::string& d : raw.designated) {
        if (!value_names.contains(d)) {
            problems.push_back({"designated", "unknown value: " + d});
        }
    }

    auto describe_tuple = [](const std::vector<std::string>& args) {
        std::string out = "(";
        for (std::size_t i = 0; i < args.size(); ++i) {
            if (i > 0) out += ",";
            out += args[i];
        }
        return out + ")";
    };

    // Group rows per connective and check totality / uniqueness per tuple.
    std::map<std::string, std::set<std::vector<std::string>>> seen;
    for (const RawNMatrix::Row& row : raw.rows) {
        auto arity = sig.arity(row.connective);
        if (!arity.has_value()) {
            problems.push_back({row.connective, "row for unknown connective"});
            continue;
        }
        if (row.args.size() != static_cast<std::size_t>(*arity)) {
            problems.push_back(
                {row.connective, "tuple " + describe_tuple(row.args) + " has the wrong arity"});
            continue;
        }
        bool args_ok = true;
        for (const std::string& a : row.args) {
            if (!value_names.contains(a)) {
                problems.push_back({row.connective, "unknown value in tuple: " + a});
                args_ok = false;
            }
        }
        if (!args_ok) continue;
        if (!seen[row.connective].insert(row.args).second) {
            problems.push_back(
                {row.connective, "duplicate tuple " + describe_tuple(row.args)});
            continue;
        }
        if (row.out.empty()) {
            problems.push_back(
                {row.connective, "empty output set at tuple " + describe_tuple(row.args)});
        }
        for (const std::string& o : row.out) {
            if (!value_names.contains(o)) {
                problems.push_back({row.connective, "unknown output value: " + o});
            }
        }
    }

    for (const auto& [name, arity] : sig.connectives()) {
        std::size_t expected = 1;
        for (int i = 0; i < arity; ++i) expected *= raw.values.size();
        const std::size_t have = seen.count(name) ? seen[name].size() : 0;
        if (have < expected) {
            problems.push_back({name, "missing tuples: interpretation covers " +
                                          std::to_string(have) + " of " +
                                          std::to_string(expected)});
        }
    }
    return problems;
}

NMatrix nmatrix_from_raw(const RawNMatrix& raw) {
    std::vector<Violation> problems = validate_raw_nmatrix(raw);
    if (!problems.empty()) throw ValidationError(std::move(problems));

    Signature sig = Signature::from_connectives(raw.connectives);
    auto index_of = [&](const std::string& name) {
        for (std::size_t i = 0; i < raw.values.size(); ++i) {
            if (raw.values[i] == name) return static_cast<Value>(i);
        }
        throw InvalidInputError("unknown value: " + name);
    };

    std::map<std::string, ConnectiveTable> interp;
    for (const auto& [name, arity] : sig.connectives()) {
        std::size_t rows = 1;
        for (int i = 0; i < arity; ++i) rows *= raw.values.size();
        interp[name] = ConnectiveTable{arity, std::vector<ValueSet>(rows)};
    }
    for (const RawNMatrix::Row& row : raw.rows) {
        std::vector<Value> args;
        for (const std::string& a : row.args) args.push_back(index_of(a));
        ValueSet out;
        for (const std::string& o : row.out) out.insert(index_of(o));
        interp[row.connective].rows[tuple_index(args, raw.values.size())] = out;
    }
    return NMatrix(std::move(sig), raw.values, raw.designated, std::move(interp));
}

RawNMatrix nmatrix_to_raw(const NMatrix& m) {
    RawNMatrix raw;
    raw.connectives = m.signature().connectives();
    raw.values = m.values();
    raw.designated = m.designated_names();
    for (const auto& [name, arity] : m.signature().connectives()) {
        const ConnectiveTable& t = m.table(name);
        std::vector<Value> args(static_cast<std::size_t>(arity), 0);
        for (std::size_t row = 0; row < t.rows.size(); ++row) {
            std::size_t rest = row;
            for (std::size_t i = args.size(); i-- > 0;) {
                args[i] = static_cast<Value>(rest % m.value_count());
                rest /= m.value_count();
            }
            RawNMatrix::Row out_row;
            out_row.connective = name;
            for (Value a : args) out_row.args.push_back(m.value_name(a));
            for (Value o : t.rows[row]) out_row.out.push_back(m.value_name(o));
            raw.rows.push_back(std::move(out_row));
        }
    }
    return raw;
}

}  // namespace nmt
