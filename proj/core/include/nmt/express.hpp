#ifndef NMT_EXPRESS_HPP
#define NMT_EXPRESS_HPP

#include <span>
#include <vector>

#include "nmt/formula.hpp"
#include "nmt/nmatrix.hpp"

namespace nmt {

// The multi-function a formula expresses: for each tuple over V^arity, the
// non-empty set of values the formula can take.
struct MultiFunctionTable {
    int arity = 0;
    std::size_t value_count = 0;
    std::vector<ValueSet> entries;  // row-major, |V|^arity entries

    const ValueSet& at(std::span<const Value> args) const {
        return entries[tuple_index(args, value_count)];
    }
    bool operator==(const MultiFunctionTable& other) const {
        return arity == other.arity && value_count == other.value_count &&
               entries == other.entries;
    }
    bool operator<(const MultiFunctionTable& other) const {
        if (arity != other.arity) return arity < other.arity;
        return entries < other.entries;
    }
};

// [A]_M at the given arity: for every tuple fixing p1..pn, the set of values
// A receives across all prevaluations of sub(A).  Locality of prevaluations
// makes this the valuation-based multi-function.  Requires var(A) within
// {1..arity}.
MultiFunctionTable express(const NMatrix& m, const Formula& formula, int arity);

}  // namespace nmt

#endif  // NMT_EXPRESS_HPP
