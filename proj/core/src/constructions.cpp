#include "nmt/constructions.hpp"

#include <algorithm>

#include "nmt/matrix_decision.hpp"

namespace nmt {

NMatrix unconstrained(const Signature& sig) {
    std::map<std::string, ConnectiveTable> interp;
    const ValueSet both{0, 1};
    for (const auto& [name, arity] : sig.connectives()) {
        std::size_t rows = 1;
        for (int i = 0; i < arity; ++i) rows *= 2;
        interp[name] = ConnectiveTable{arity, std::vector<ValueSet>(rows, both)};
    }
    return NMatrix(sig, {"0", "1"}, {"1"}, std::move(interp));
}

NMatrix tilde(const NMatrix& m) {
    for (const std::string& name : m.values()) {
        if (name.find(kTildeSuffix) != std::string::npos) {
            throw InvalidInputError("value name uses the reserved marker '~': " + name);
        }
    }

    const std::size_t n = m.value_count();
    std::vector<std::string> values = m.values();
    std::vector<std::string> designated = m.designated_names();
    // u maps every new-matrix value index to the base value it copies.
    std::vector<Value> u;
    for (std::size_t i = 0; i < n; ++i) u.push_back(static_cast<Value>(i));
    for (std::size_t i = 0; i < n; ++i) {
        if (!m.is_designated(static_cast<Value>(i))) {
            values.push_back(m.value_name(static_cast<Value>(i)) + kTildeSuffix);
            designated.push_back(values.back());
            u.push_back(static_cast<Value>(i));
        }
    }

    const std::size_t nn = values.size();
    std::map<std::string, ConnectiveTable> interp;
    std::vector<Value> args;
    std::vector<Value> base_args;
    for (const auto& [name, arity] : m.signature().connectives()) {
        std::size_t rows = 1;
        for (int i = 0; i < arity; ++i) rows *= nn;
        ConnectiveTable t{arity, std::vector<ValueSet>(rows)};
        args.assign(static_cast<std::size_t>(arity), 0);
        for (std::size_t row = 0; row < rows; ++row) {
            std::size_t rest = row;
            for (std::size_t i = args.size(); i-- > 0;) {
                args[i] = static_cast<Value>(rest % nn);
                rest /= nn;
            }
            base_args.clear();
            for (Value a : args) base_args.push_back(u[a]);
            ValueSet out;
            for (Value b : m.output(name, base_args)) {
                for (std::size_t v = 0; v < nn; ++v) {
                    if (u[v] == b) out.insert(static_cast<Value>(v));
                }
            }
            t.rows[row] = std::move(out);
        }
        interp[name] = std::move(t);
    }
    return NMatrix(m.signature(), std::move(values), std::move(designated), std::move(interp));
}

std::vector<Value> tilde_forgetful_map(const NMatrix& base, const NMatrix& tilded) {
    std::vector<Value> u;
    for (const std::string& name : tilded.values()) {
        std::string stripped = name;
        if (!stripped.empty() && stripped.back() == kTildeSuffix) stripped.pop_back();
        auto v = base.value_index(stripped);
        if (!v.has_value()) {
            throw InvalidInputError("value " + name + " has no preimage in the base matrix");
        }
        u.push_back(*v);
    }
    return u;
}

bool is_strict_hom(const NMatrix& source, const NMatrix& target, std::span<const Value> map,
                   bool* equality_everywhere) {
    if (map.size() != source.value_count()) return false;
    if (equality_everywhere != nullptr) *equality_everywhere = true;

    for (std::size_t v = 0; v < map.size(); ++v) {
        if (source.is_designated(static_cast<Value>(v)) != target.is_designated(map[v])) {
            return false;
        }
    }

    std::vector<Value> args;
    std::vector<Value> mapped_args;
    for (const auto& [name, arity] : source.signature().connectives()) {
        const ConnectiveTable& t = source.table(name);
        args.assign(static_cast<std::size_t>(arity), 0);
        for (std::size_t row = 0; row < t.rows.size(); ++row) {
            std::size_t rest = row;
            for (std::size_t i = args.size(); i-- > 0;) {
                args[i] = static_cast<Value>(rest % source.value_count());
                rest /= source.value_count();
            }
            mapped_args.clear();
            for (Value a : args) mapped_args.push_back(map[a]);
            const ValueSet& target_out = target.output(name, mapped_args);
            ValueSet image;
            for (Value o : t.rows[row]) image.insert(map[o]);
            if (!image.subset_of(target_out)) return false;
            if (equality_everywhere != nullptr && !(image == target_out)) {
                *equality_everywhere = false;
            }
        }
    }
    return true;
}

std::vector<HomCandidate> enumerate_strict_homs(const NMatrix& source, const NMatrix& target) {
    if (!(source.signature() == target.signature())) {
        throw InvalidInputError("homomorphism enumeration requires a shared signature");
    }

    // Designation must be preserved exactly, so each source value only ranges
    // over target values of matching designation; this enumerates the same
    // strict candidates as the full |V2|^|V1| sweep, in the same order.
    std::vector<std::vector<Value>> pools(source.value_count());
    for (std::size_t v = 0; v < source.value_count(); ++v) {
        for (std::size_t w = 0; w < target.value_count(); ++w) {
            if (source.is_designated(static_cast<Value>(v)) ==
                target.is_designated(static_cast<Value>(w))) {
                pools[v].push_back(static_cast<Value>(w));
            }
        }
        if (pools[v].empty()) return {};
    }

    std::vector<HomCandidate> found;
    std::vector<std::size_t> pick(source.value_count(), 0);
    std::vector<Value> map(source.value_count());
    while (true) {
        for (std::size_t i = 0; i < pick.size(); ++i) map[i] = pools[i][pick[i]];
        bool equal = false;
        if (is_strict_hom(source, target, map, &equal)) {
            HomCandidate c;
            c.map = map;
            c.strict = true;
            std::vector<bool> hit(target.value_count(), false);
            for (Value w : map) hit[w] = true;
            c.surjective = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
            c.strongly_preserving = c.surjective && equal;
            found.push_back(std::move(c));
        }
        std::size_t i = pick.size();
        bool rolled_over = true;
        while (i > 0) {
            --i;
            if (++pick[i] < pools[i].size()) {
                rolled_over = false;
                break;
            }
            pick[i] = 0;
        }
        if (rolled_over) break;
    }
    return found;
}

std::optional<NoTheoremCertificate> certify_no_theorems(
    const NMatrix& m, const std::vector<std::pair<std::string, NMatrix>>& corpus) {
    for (const auto& [name, candidate] : corpus) {
        if (!(candidate.signature() == m.signature())) continue;
        if (!candidate.deterministic()) continue;
        if (matrix_theorem_existence(candidate).has_value()) continue;
        std::vector<HomCandidate> homs = enumerate_strict_homs(candidate, m);
        if (!homs.empty()) {
            return NoTheoremCertificate{name, candidate, homs.front().map};
        }
    }
    return std::nullopt;
}

}  // namespace nmt
