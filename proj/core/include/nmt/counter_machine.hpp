#ifndef NMT_COUNTER_MACHINE_HPP
#define NMT_COUNTER_MACHINE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nmt/formula.hpp"
#include "nmt/nmatrix.hpp"
#include "nmt/prevaluation.hpp"
#include "nmt/signature.hpp"

namespace nmt {

// Minsky counter machine: states with increment or test-decrement
// transitions over n counters.  States without a transition are halting.
struct CounterTransition {
    enum class Kind { Increment, TestDecrement };
    Kind kind = Kind::Increment;
    int counter = 1;           // 1-based
    std::string next;          // Increment: successor; TestDecrement: non-zero branch
    std::string zero_branch;   // TestDecrement only
};

struct CounterMachine {
    int counters = 0;
    std::vector<std::string> states;
    std::string initial;
    std::map<std::string, CounterTransition> transitions;

    bool is_halting(const std::string& state) const { return !transitions.contains(state); }
    std::vector<std::string> halting_states() const;
};

// Structural checks: states known, counter indices in range, identifiers fit
// the connective NAME grammar.  Empty result means valid.
std::vector<Violation> validate_machine(const CounterMachine& machine);
void require_valid_machine(const CounterMachine& machine);

struct Configuration {
    std::string state;
    std::vector<std::uint64_t> counters;

    bool operator==(const Configuration& other) const = default;
};

struct Trace {
    std::vector<Configuration> configurations;
    bool halted = false;
};

// One transition; the configuration's state must not be halting.
Configuration step(const CounterMachine& machine, const Configuration& config);

// Runs from (initial, start) for at most max_steps transitions.
Trace run(const CounterMachine& machine, const std::vector<std::uint64_t>& start,
          std::uint64_t max_steps);

// enc(a): zero under a successor tower of height a.
Formula encode_number(std::uint64_t a);

// seq(trace): the configuration sequence as a closed formula, one step_<q>
// node per configuration.
Formula encode_trace(const Trace& trace);

// zero/0, eps/0, succ/1 and step_<q>/(counters+1) for every state q.
Signature machine_signature(const CounterMachine& machine);

// The abstract-numeral names shared by every compiled matrix.
inline constexpr const char* kNumEq0 = "r_eq0";
inline constexpr const char* kNumGe0 = "r_ge0";
inline constexpr const char* kNumGe1 = "r_ge1";
inline constexpr const char* kNumGe2 = "r_ge2";

std::string conf_value_name(const std::string& state, const std::vector<std::string>& numerals);

// The Nmatrix whose sole possible theorem is the encoding of the machine's
// halting computation from zeroed counters.  Values: the four abstract
// numerals, init, error, then one configuration value per (state, numeral
// tuple); designated values are the halting configurations.
NMatrix compile_machine(const CounterMachine& machine);

// The three families of valuation restrictions on enc(0..m): "eq" pins
// enc(0) to r_eq0, "omega" keeps every numeral at r_ge0, "k" stays at r_ge0
// through enc(k) and then climbs.
enum class NumericAssignmentKind { Eq, Omega, K };

PrevaluationTable canonical_numeric_assignment(NumericAssignmentKind kind, int k, int max_number);

// (tilde(compile(machine)), unconstrained(machine signature)): non-equivalent
// exactly when the machine halts from zeroed counters.
std::pair<NMatrix, NMatrix> build_reduction_pair(const CounterMachine& machine);

}  // namespace nmt

#endif  // NMT_COUNTER_MACHINE_HPP
