#include "nmt/enumerate.hpp"

#include <algorithm>

#include "nmt/errors.hpp"

namespace nmt {

namespace {

// Feeds every application whose maximal argument depth is exactly
// target_depth - 1 to sink, drawing arguments from pool (all formulas of
// depth < target_depth).  Stops early when sink returns false.
template <typename Sink>
bool applications_of_depth(const Signature& sig, const std::vector<Formula>& pool,
                           int target_depth, Sink&& sink) {
    for (const auto& [name, arity] : sig.connectives()) {
        if (arity == 0) {
            if (target_depth == 1 && !sink(Formula::app(name, {}))) return false;
            continue;
        }
        if (pool.empty()) continue;
        std::vector<std::size_t> pick(static_cast<std::size_t>(arity), 0);
        std::vector<Formula> args;
        while (true) {
            int max_depth = 0;
            for (std::size_t idx : pick) {
                max_depth = std::max(max_depth, pool[idx].depth());
            }
            if (max_depth == target_depth - 1) {
                args.clear();
                for (std::size_t idx : pick) args.push_back(pool[idx]);
                if (!sink(Formula::app(name, args))) return false;
            }
            std::size_t i = pick.size();
            bool rolled_over = true;
            while (i > 0) {
                --i;
                if (++pick[i] < pool.size()) {
                    rolled_over = false;
                    break;
                }
                pick[i] = 0;
            }
            if (rolled_over) break;
        }
    }
    return true;
}

}  // namespace

std::vector<Formula> enumerate_formulas(const Signature& sig, int variables, int max_depth) {
    if (variables < 0) throw InvalidInputError("variable count must be non-negative");
    std::vector<Formula> out;
    for (int i = 1; i <= variables; ++i) out.push_back(Formula::var(static_cast<unsigned>(i)));

    for (int d = 1; d <= max_depth; ++d) {
        std::vector<Formula> stratum;
        applications_of_depth(sig, out, d, [&](Formula f) {
            stratum.push_back(std::move(f));
            return true;
        });
        out.insert(out.end(), stratum.begin(), stratum.end());
    }
    std::sort(out.begin(), out.end(), FormulaLess{});
    return out;
}

bool for_each_closed_formula(const Signature& sig, int max_depth,
                             const std::function<bool(const Formula&)>& visit) {
    std::vector<Formula> pool;  // all closed formulas of depth < current stratum
    for (int d = 1; d <= max_depth; ++d) {
        std::vector<Formula> stratum;
        const bool keep_going = applications_of_depth(sig, pool, d, [&](Formula f) {
            if (!visit(f)) return false;
            if (d < max_depth) stratum.push_back(std::move(f));
            return true;
        });
        if (!keep_going) return false;
        pool.insert(pool.end(), stratum.begin(), stratum.end());
    }
    return true;
}

}  // namespace nmt
