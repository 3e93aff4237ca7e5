#include "nmt/counter_machine.hpp"

#include <algorithm>
#include <set>

#include "nmt/constructions.hpp"

namespace nmt {

std::vector<std::string> CounterMachine::halting_states() const {
    std::vector<std::string> out;
    for (const std::string& q : states) {
        if (is_halting(q)) out.push_back(q);
    }
    return out;
}

std::vector<Violation> validate_machine(const CounterMachine& machine) {
    std::vector<Violation> problems;
    if (machine.counters < 0) {
        problems.push_back({"counters", "counter count must be non-negative"});
    }
    std::set<std::string> state_set;
    for (const std::string& q : machine.states) {
        if (!is_valid_connective_name("step_" + q)) {
            problems.push_back({q, "state name does not fit the identifier grammar"});
        }
        if (!state_set.insert(q).second) {
            problems.push_back({q, "duplicate state"});
        }
    }
    if (!state_set.contains(machine.initial)) {
        problems.push_back({"initial", "initial state not in the state set: " + machine.initial});
    }
    for (const auto& [state, t] : machine.transitions) {
        if (!state_set.contains(state)) {
            problems.push_back({state, "transition from unknown state"});
        }
        if (t.counter < 1 || t.counter > machine.counters) {
            problems.push_back({state, "counter index out of range"});
        }
        if (!state_set.contains(t.next)) {
            problems.push_back({state, "transition to unknown state: " + t.next});
        }
        if (t.kind == CounterTransition::Kind::TestDecrement &&
            !state_set.contains(t.zero_branch)) {
            problems.push_back({state, "transition to unknown state: " + t.zero_branch});
        }
    }
    return problems;
}

void require_valid_machine(const CounterMachine& machine) {
    std::vector<Violation> problems = validate_machine(machine);
    if (!problems.empty()) throw ValidationError(std::move(problems));
}

Configuration step(const CounterMachine& machine, const Configuration& config) {
    auto it = machine.transitions.find(config.state);
    if (it == machine.transitions.end()) {
        throw InvalidInputError("step called on a halting configuration (state " + config.state +
                                ")");
    }
    const CounterTransition& t = it->second;
    const std::size_t i = static_cast<std::size_t>(t.counter - 1);
    Configuration next = config;
    if (t.kind == CounterTransition::Kind::Increment) {
        next.state = t.next;
        next.counters[i] += 1;
    } else if (config.counters[i] != 0) {
        next.state = t.next;
        next.counters[i] -= 1;
    } else {
        next.state = t.zero_branch;
    }
    return next;
}

Trace run(const CounterMachine& machine, const std::vector<std::uint64_t>& start,
          std::uint64_t max_steps) {
    require_valid_machine(machine);
    if (start.size() != static_cast<std::size_t>(machine.counters)) {
        throw InvalidInputError("initial counter vector has the wrong length");
    }
    Trace trace;
    trace.configurations.push_back(Configuration{machine.initial, start});
    for (std::uint64_t s = 0; s < max_steps; ++s) {
        const Configuration& last = trace.configurations.back();
        if (machine.is_halting(last.state)) break;
        trace.configurations.push_back(step(machine, last));
    }
    trace.halted = machine.is_halting(trace.configurations.back().state);
    return trace;
}

Formula encode_number(std::uint64_t a) {
    Formula f = Formula::app("zero", {});
    for (std::uint64_t i = 0; i < a; ++i) f = Formula::app("succ", {f});
    return f;
}

Formula encode_trace(const Trace& trace) {
    Formula f = Formula::app("eps", {});
    for (const Configuration& c : trace.configurations) {
        std::vector<Formula> args;
        args.push_back(std::move(f));
        for (std::uint64_t a : c.counters) args.push_back(encode_number(a));
        f = Formula::app("step_" + c.state, std::move(args));
    }
    return f;
}

Signature machine_signature(const CounterMachine& machine) {
    require_valid_machine(machine);
    Signature sig;
    sig.add("zero", 0);
    sig.add("eps", 0);
    sig.add("succ", 1);
    for (const std::string& q : machine.states) {
        sig.add("step_" + q, machine.counters + 1);
    }
    return sig;
}

std::string conf_value_name(const std::string& state, const std::vector<std::string>& numerals) {
    std::string name = "conf_" + state;
    for (const std::string& r : numerals) {
        name += '_';
        name += r;
    }
    return name;
}

NMatrix compile_machine(const CounterMachine& machine) {
    const Signature sig = machine_signature(machine);
    const std::size_t n = static_cast<std::size_t>(machine.counters);

    // Value layout: numerals, init, error, then configurations by state order
    // and numeral-tuple lexicographic order.
    const std::vector<std::string> numeral_names{kNumEq0, kNumGe0, kNumGe1, kNumGe2};
    std::vector<std::string> values = numeral_names;
    values.push_back("init");
    values.push_back("error");

    constexpr Value kEq0 = 0, kGe0 = 1, kGe1 = 2, kGe2 = 3;
    const Value init_value = 4;
    const Value error_value = 5;
    const Value conf_base = 6;

    std::size_t numeral_tuples = 1;
    for (std::size_t i = 0; i < n; ++i) numeral_tuples *= 4;

    // conf value index = conf_base + state_index * 4^n + numeral tuple index.
    auto conf_value = [&](std::size_t state_index, std::span<const Value> numerals) {
        return static_cast<Value>(conf_base + state_index * numeral_tuples +
                                  tuple_index(numerals, 4));
    };

    std::vector<std::string> designated;
    for (std::size_t s = 0; s < machine.states.size(); ++s) {
        for (std::size_t t = 0; t < numeral_tuples; ++t) {
            std::size_t rest = t;
            std::vector<std::string> numerals(n);
            for (std::size_t i = n; i-- > 0;) {
                numerals[i] = numeral_names[rest % 4];
                rest /= 4;
            }
            values.push_back(conf_value_name(machine.states[s], numerals));
            if (machine.is_halting(machine.states[s])) designated.push_back(values.back());
        }
    }
    const std::size_t value_count = values.size();

    auto is_numeral = [](Value v) { return v < 4; };
    auto state_of = [&](Value v) { return (v - conf_base) / numeral_tuples; };
    auto numerals_of = [&](Value v) {
        std::vector<Value> out(n);
        std::size_t rest = (v - conf_base) % numeral_tuples;
        for (std::size_t i = n; i-- > 0;) {
            out[i] = static_cast<Value>(rest % 4);
            rest /= 4;
        }
        return out;
    };

    const ValueSet zero_out{kEq0, kGe0};
    auto succ_of = [&](Value x) -> ValueSet {
        switch (x) {
            case kEq0: return {kGe1};
            case kGe0: return {kGe0, kGe1};
            case kGe1: return {kGe2};
            case kGe2: return {kGe2};
            default: return {error_value};
        }
    };

    std::map<std::string, ConnectiveTable> interp;
    interp["zero"] = ConnectiveTable{0, {zero_out}};
    interp["eps"] = ConnectiveTable{0, {ValueSet{init_value}}};
    {
        ConnectiveTable succ{1, std::vector<ValueSet>(value_count)};
        for (std::size_t x = 0; x < value_count; ++x) {
            succ.rows[x] = succ_of(static_cast<Value>(x));
        }
        interp["succ"] = std::move(succ);
    }

    for (std::size_t target = 0; target < machine.states.size(); ++target) {
        const std::string& q = machine.states[target];
        std::size_t rows = value_count;
        for (std::size_t i = 0; i < n; ++i) rows *= value_count;
        ConnectiveTable table{static_cast<int>(n) + 1, std::vector<ValueSet>(rows)};

        std::vector<Value> args(n + 1, 0);
        for (std::size_t row = 0; row < rows; ++row) {
            std::size_t rest = row;
            for (std::size_t i = args.size(); i-- > 0;) {
                args[i] = static_cast<Value>(rest % value_count);
                rest /= value_count;
            }
            const Value x = args[0];
            const std::span<const Value> zs(args.data() + 1, n);

            bool fires = false;
            if (x == init_value && q == machine.initial) {
                const bool all_eq0 = std::all_of(zs.begin(), zs.end(),
                                                 [&](Value z) { return z == kEq0; });
                const bool all_ge0 = std::all_of(zs.begin(), zs.end(),
                                                 [&](Value z) { return z == kGe0; });
                fires = all_eq0 || all_ge0;
            }
            if (!fires && x >= conf_base &&
                std::all_of(zs.begin(), zs.end(), [&](Value z) { return is_numeral(z); })) {
                const std::string& source = machine.states[state_of(x)];
                auto it = machine.transitions.find(source);
                if (it != machine.transitions.end()) {
                    const CounterTransition& delta = it->second;
                    const std::vector<Value> ys = numerals_of(x);
                    const std::size_t i = static_cast<std::size_t>(delta.counter - 1);
                    auto agree_elsewhere = [&] {
                        for (std::size_t l = 0; l < n; ++l) {
                            if (l != i && zs[l] != ys[l]) return false;
                        }
                        return true;
                    };
                    if (delta.kind == CounterTransition::Kind::Increment) {
                        fires = delta.next == q && succ_of(ys[i]).contains(zs[i]) &&
                                agree_elsewhere();
                    } else {
                        if (delta.next == q && succ_of(zs[i]).contains(ys[i]) &&
                            agree_elsewhere()) {
                            fires = true;
                        }
                        if (!fires && delta.zero_branch == q && zero_out.contains(ys[i]) &&
                            std::equal(zs.begin(), zs.end(), ys.begin())) {
                            fires = true;
                        }
                    }
                }
            }
            table.rows[row] = fires ? ValueSet{conf_value(target, zs)} : ValueSet{error_value};
        }
        interp["step_" + q] = std::move(table);
    }

    return NMatrix(sig, std::move(values), std::move(designated), std::move(interp));
}

PrevaluationTable canonical_numeric_assignment(NumericAssignmentKind kind, int k, int max_number) {
    if (max_number < 0) throw InvalidInputError("max_number must be non-negative");
    if (kind == NumericAssignmentKind::K && k < 0) {
        throw InvalidInputError("the k-family index must be non-negative");
    }
    PrevaluationTable table;
    for (int a = 0; a <= max_number; ++a) {
        std::string name;
        switch (kind) {
            case NumericAssignmentKind::Eq:
                name = a == 0 ? kNumEq0 : (a == 1 ? kNumGe1 : kNumGe2);
                break;
            case NumericAssignmentKind::Omega:
                name = kNumGe0;
                break;
            case NumericAssignmentKind::K:
                name = a <= k ? kNumGe0 : (a == k + 1 ? kNumGe1 : kNumGe2);
                break;
        }
        table.emplace(encode_number(static_cast<std::uint64_t>(a)), name);
    }
    return table;
}

std::pair<NMatrix, NMatrix> build_reduction_pair(const CounterMachine& machine) {
    return {tilde(compile_machine(machine)), unconstrained(machine_signature(machine))};
}

}  // namespace nmt
