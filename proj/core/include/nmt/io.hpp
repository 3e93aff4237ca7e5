#ifndef NMT_IO_HPP
#define NMT_IO_HPP

#include <string>
#include <variant>

#include <json.hpp>

#include "nmt/analyzer.hpp"
#include "nmt/constructions.hpp"
#include "nmt/counter_machine.hpp"
#include "nmt/nmatrix.hpp"
#include "nmt/prevaluation.hpp"
#include "nmt/signature.hpp"

namespace nmt {

using Json = nlohmann::ordered_json;

Json signature_to_json(const Signature& sig);
Signature signature_from_json(const Json& j);

Json nmatrix_to_json(const NMatrix& m);
NMatrix nmatrix_from_json(const Json& j);  // validates, throws ValidationError

Json prevaluation_to_json(const PrevaluationTable& table);
PrevaluationTable prevaluation_from_json(const Json& j, const Signature& sig);

Json machine_to_json(const CounterMachine& machine);
CounterMachine machine_from_json(const Json& j);  // validates

Json rules_to_json(const RuleSet& rules);
RuleSet rules_from_json(const Json& j);  // structural parse; arity checked on use

Json hom_to_json(const NMatrix& source, const NMatrix& target, const HomCandidate& hom);

Json counterexample_to_json(const Counterexample& cx);

// Needs both analyzed matrices to name the values appearing in hom evidence.
Json verdict_to_json(const Verdict& verdict, const NMatrix& m1, const NMatrix& m2);

// Any artifact the CLI can load or store.
using Artifact = std::variant<Signature, NMatrix, CounterMachine, RuleSet>;

Json artifact_to_json(const Artifact& artifact);
Artifact artifact_from_json(const Json& j);

// Reads a JSON artifact from a file path or a bundled "corpus:<name>" URI.
Artifact load_artifact(const std::string& path_or_uri);
void store_artifact(const Artifact& artifact, const std::string& path);

Json load_json_file(const std::string& path);
void store_json_file(const Json& j, const std::string& path);

}  // namespace nmt

#endif  // NMT_IO_HPP
