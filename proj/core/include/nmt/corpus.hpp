#ifndef NMT_CORPUS_HPP
#define NMT_CORPUS_HPP

#include <string>
#include <variant>
#include <vector>

#include "nmt/analyzer.hpp"
#include "nmt/counter_machine.hpp"
#include "nmt/nmatrix.hpp"

namespace nmt {

// A bundled artifact: the standard one-unary-connective Nmatrix family U and
// M1..M8 with their tilded variants, the Kearns modal Nmatrix K, the
// implication matrix I with its tilded variant, the rule sets axiomatizing
// the family, and three small counter machines.
struct CorpusEntry {
    std::string name;
    std::string note;
    std::variant<NMatrix, CounterMachine, RuleSet> artifact;
};

// Built once, then self-checked: every artifact must match its embedded
// checksum, every tilded entry must equal tilde() of its base entry, and
// every rule set must parse against its signature.  Throws ValidationError
// when the integrity check fails.
const std::vector<CorpusEntry>& load_corpus();

const CorpusEntry* find_corpus_entry(std::string_view name);

// Typed lookups; throw InvalidInputError when missing or of the wrong kind.
const NMatrix& corpus_nmatrix(std::string_view name);
const CounterMachine& corpus_machine(std::string_view name);
const RuleSet& corpus_rules(std::string_view name);

// Stable serialization fingerprint used by the integrity check.
std::uint64_t corpus_checksum(const CorpusEntry& entry);

}  // namespace nmt

#endif  // NMT_CORPUS_HPP
