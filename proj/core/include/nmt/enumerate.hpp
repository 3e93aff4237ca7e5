#ifndef NMT_ENUMERATE_HPP
#define NMT_ENUMERATE_HPP

#include <functional>
#include <vector>

#include "nmt/formula.hpp"
#include "nmt/signature.hpp"

namespace nmt {

// Every formula over variables p1..p<variables> with depth <= max_depth,
// duplicate-free, in canonical order.
std::vector<Formula> enumerate_formulas(const Signature& sig, int variables, int max_depth);

// Streams every closed formula of depth <= max_depth without materializing
// the (potentially huge) top stratum.  Visit order is deterministic but not
// canonical.  Returns false if the visitor aborted the walk.
bool for_each_closed_formula(const Signature& sig, int max_depth,
                             const std::function<bool(const Formula&)>& visit);

}  // namespace nmt

#endif  // NMT_ENUMERATE_HPP
