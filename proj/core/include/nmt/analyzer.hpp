#ifndef NMT_ANALYZER_HPP
#define NMT_ANALYZER_HPP

#include <optional>
#include <string>
#include <vector>

#include "nmt/consequence.hpp"
#include "nmt/constructions.hpp"
#include "nmt/formula.hpp"
#include "nmt/matrix_decision.hpp"
#include "nmt/nmatrix.hpp"

namespace nmt {

struct Rule {
    std::string name;  // optional label, may be empty
    std::vector<Formula> premises;
    Formula conclusion = Formula::var(1);
};

struct RuleSet {
    std::vector<Rule> rules;
};

struct RuleCheck {
    std::size_t index = 0;
    ConsequenceResult result;
};

struct RuleSetReport {
    bool all_hold = true;
    std::vector<RuleCheck> rules;
};

// decide_consequence per rule.
RuleSetReport check_rule_set(const NMatrix& m, const RuleSet& rules);

struct AxiomatizationInclusion {
    bool included = false;
    std::optional<std::size_t> failing_rule;
};

// Sound only under the caller's (unverified) promise that the rule set
// axiomatizes the source logic; the trust boundary travels with the evidence.
AxiomatizationInclusion inclusion_from_axiomatization(const RuleSet& rules, const NMatrix& m2);

struct SearchBudget {
    int depth = 3;
    int variables = 2;
    int max_premises = 2;
};

struct Counterexample {
    std::vector<Formula> premises;
    Formula conclusion = Formula::var(1);
    int holds_in = 0;  // 1 or 2: the matrix where premises |- conclusion holds
    PrevaluationTable witness;  // countermodel in the other matrix
};

// First divergence of decide_consequence between the two matrices over
// candidate premise sets (by size, then lexicographically) and conclusions in
// canonical order.  None means no divergence within budget, not equivalence.
std::optional<Counterexample> search_counterexample(const NMatrix& m1, const NMatrix& m2,
                                                    const SearchBudget& budget);

// Canonical-order enumeration with is_theorem checks.  A returned formula is
// a proof; nullopt is budget-relative.  When every interpretation output
// contains an undesignated value (and one exists), no formula can ever be a
// theorem and the enumeration is skipped.
std::optional<Formula> search_theorem_bounded(const NMatrix& m, int depth, int variables);

enum class Outcome { Equivalent, NotEquivalent, Unknown };

struct HomPairEvidence {
    HomCandidate forward;   // m1 -> m2
    HomCandidate backward;  // m2 -> m1
};

struct StrongHomEvidence {
    int direction = 0;  // 1: m1 -> m2, 2: m2 -> m1
    HomCandidate hom;
};

struct CertificateEvidence {
    int unconstrained_side = 0;  // which input is the unconstrained Nmatrix
    NoTheoremCertificate certificate;
};

struct Verdict {
    Outcome outcome = Outcome::Unknown;
    int stage = 0;  // pipeline stage that produced the verdict; 6 = exhausted
    std::vector<int> stages_attempted;
    SearchBudget budget;

    std::optional<MatrixEquivalenceResult> deterministic;
    std::optional<StrongHomEvidence> strong_hom;
    std::optional<HomPairEvidence> hom_pair;
    std::optional<CertificateEvidence> certificate;
    std::optional<Counterexample> counterexample;
};

struct AnalyzeOptions {
    SearchBudget budget;
    // Base matrix whose tilde one of the inputs is claimed to be; enables the
    // no-theorem certificate stage.  Never guessed from structure.
    std::optional<NMatrix> tilde_preimage;
    // Candidate certificate bases (named, typically the bundled corpus).
    std::vector<std::pair<std::string, NMatrix>> corpus;
};

// Best-effort pipeline, stopping at the first conclusive stage:
//   1. both deterministic: complete matrix equivalence decision
//   2. strongly-preserving strict hom in either direction: Equivalent
//   3. strict homs in both directions: Equivalent
//   4. one side unconstrained, other side the tilde of the supplied preimage,
//      and a no-theorem certificate for the preimage: Equivalent
//   5. counterexample search: NotEquivalent
//   6. Unknown, carrying the attempted stages and budget
Verdict analyze(const NMatrix& m1, const NMatrix& m2, const AnalyzeOptions& options = {});

}  // namespace nmt

#endif  // NMT_ANALYZER_HPP
