#ifndef NMT_MATRIX_DECISION_HPP
#define NMT_MATRIX_DECISION_HPP

#include <optional>
#include <vector>

#include "nmt/express.hpp"
#include "nmt/formula.hpp"
#include "nmt/nmatrix.hpp"

namespace nmt {

// Decision procedures that are complete for finite deterministic matrices.
// Each operation rejects non-deterministic input: the constructions rely on
// the pointwise compositionality of expressed functions, which fails for
// proper Nmatrices.

inline constexpr std::size_t kDefaultThetaCap = 4096;

struct ThetaEntry {
    Formula representative;
    MultiFunctionTable table1;  // singleton-valued
    MultiFunctionTable table2;
};

// One canonical-first representative per distinct pair of expressed n-place
// functions, closed under connective application.
struct ThetaSet {
    int variable_bound = 0;
    std::vector<ThetaEntry> entries;
};

ThetaSet build_theta(const NMatrix& m1, const NMatrix& m2, int variable_bound,
                     std::size_t max_size = kDefaultThetaCap);

struct Separation {
    // premises |- conclusion holds in the first matrix but not the second.
    std::vector<Formula> premises;
    Formula conclusion;
};

struct InclusionResult {
    bool included = false;
    std::optional<Separation> witness;  // set when not included
};

// Included iff every consequence of m1 is a consequence of m2.  Checks, per
// valuation of m2 over the theta variables, the maximal designated premise
// set against every undesignated conclusion; conclusions are scanned in
// canonical order and the returned witness premise set is greedily minimized.
InclusionResult decide_matrix_inclusion(const NMatrix& m1, const NMatrix& m2);

struct MatrixEquivalenceResult {
    bool equivalent = false;
    int separating_direction = 0;  // 1: |-m1 not within |-m2, 2: converse
    std::optional<Separation> witness;
};

MatrixEquivalenceResult decide_matrix_equivalence(const NMatrix& m1, const NMatrix& m2);

// Canonical-first single-variable theorem, if any: closes the expressed
// 1-place function tables under connective application, checking each new
// representative for an all-designated table.
std::optional<Formula> matrix_theorem_existence(const NMatrix& m,
                                                std::size_t max_size = kDefaultThetaCap);

}  // namespace nmt

#endif  // NMT_MATRIX_DECISION_HPP
