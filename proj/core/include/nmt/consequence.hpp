#ifndef NMT_CONSEQUENCE_HPP
#define NMT_CONSEQUENCE_HPP

#include <vector>

#include "nmt/formula.hpp"
#include "nmt/nmatrix.hpp"
#include "nmt/prevaluation.hpp"

namespace nmt {

struct ConsequenceResult {
    bool holds = false;
    // When holds is false: a prevaluation on sub(premises + conclusion) that
    // designates every premise and undesignates the conclusion.  The first
    // countermodel in value-order/canonical-order search, so regression tests
    // can pin it exactly.
    PrevaluationTable witness;
};

// Decides premises |- conclusion in m by backtracking over the subformula
// closure in canonical order: candidate values for a compound node are the
// interpretation outputs on its already-assigned children, branches where a
// premise goes undesignated or the conclusion goes designated are cut.
// Returns Holds immediately when the conclusion is itself a premise.
ConsequenceResult decide_consequence(const NMatrix& m, const std::vector<Formula>& premises,
                                     const Formula& conclusion);

ConsequenceResult is_theorem(const NMatrix& m, const Formula& formula);

}  // namespace nmt

#endif  // NMT_CONSEQUENCE_HPP
