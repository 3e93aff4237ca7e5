#ifndef NMT_PREVALUATION_HPP
#define NMT_PREVALUATION_HPP

#include <map>
#include <string>

#include "nmt/formula.hpp"
#include "nmt/nmatrix.hpp"

namespace nmt {

// Finite assignment of value names to formulas; a countermodel witness once
// it passes check_prevaluation.
using PrevaluationTable = std::map<Formula, std::string, FormulaLess>;

struct PrevaluationCheck {
    bool ok = true;
    std::vector<Violation> violations;
};

// Verifies that the domain is subformula-closed and that every non-variable
// entry satisfies the valuation condition: its value lies in the connective's
// output on the values of its immediate subformulas.
PrevaluationCheck check_prevaluation(const NMatrix& m, const PrevaluationTable& table);

}  // namespace nmt

#endif  // NMT_PREVALUATION_HPP
