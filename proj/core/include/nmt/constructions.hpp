#ifndef NMT_CONSTRUCTIONS_HPP
#define NMT_CONSTRUCTIONS_HPP

#include <optional>
#include <string>
#include <vector>

#include "nmt/nmatrix.hpp"

namespace nmt {

// Suffix appended to a value name to form the designated copy introduced by
// tilde(); inputs already using it are rejected.
inline constexpr char kTildeSuffix = '~';

// Two values 0/1, only 1 designated, every output {0,1}.  Defines the
// discrete logic over the signature.
NMatrix unconstrained(const Signature& sig);

// Adds a designated copy x~ of every undesignated value x; interpretation
// outputs are pulled back along the copy-forgetting map.  Value order:
// original values first, then the copies in original order.
NMatrix tilde(const NMatrix& m);

// Maps each tilded-matrix value index back to the base-matrix value index.
std::vector<Value> tilde_forgetful_map(const NMatrix& base, const NMatrix& tilded);

struct HomCandidate {
    std::vector<Value> map;  // indexed by source value
    bool strict = false;
    bool surjective = false;
    bool strongly_preserving = false;
};

// True when map preserves designation exactly (D1 = h^-1(D2)) and every
// interpretation output is carried into the target's output.  With
// equality_everywhere, additionally checks image equality on every tuple.
bool is_strict_hom(const NMatrix& source, const NMatrix& target, std::span<const Value> map,
                   bool* equality_everywhere = nullptr);

// Every strict homomorphism source -> target, annotated with surjectivity and
// strong preservation, in lexicographic order of the underlying value map.
std::vector<HomCandidate> enumerate_strict_homs(const NMatrix& source, const NMatrix& target);

// Evidence that Thm(m) is empty: a deterministic, theorem-free matrix from
// the corpus plus a strict homomorphism from it into m (inclusion of logics
// reverses homomorphism direction, so theorems of m embed into its).
struct NoTheoremCertificate {
    std::string base_name;
    NMatrix base;
    std::vector<Value> hom;  // base value -> m value
};

std::optional<NoTheoremCertificate> certify_no_theorems(
    const NMatrix& m, const std::vector<std::pair<std::string, NMatrix>>& corpus);

}  // namespace nmt

#endif  // NMT_CONSTRUCTIONS_HPP
