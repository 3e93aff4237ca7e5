#include "nmt/io.hpp"

#include <fstream>
#include <sstream>

#include "nmt/corpus.hpp"
#include "nmt/parse.hpp"

namespace nmt {

namespace {

[[noreturn]] void bad_json(const std::string& what) {
    throw InvalidInputError("malformed artifact JSON: " + what);
}

template <typename Fn>
auto guarded(Fn&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const nlohmann::json::exception& e) {
        bad_json(e.what());
    }
}

}  // namespace

Json signature_to_json(const Signature& sig) {
    Json connectives = Json::array();
    for (const auto& [name, arity] : sig.connectives()) {
        connectives.push_back(Json{{"name", name}, {"arity", arity}});
    }
    return Json{{"connectives", std::move(connectives)}};
}

Signature signature_from_json(const Json& j) {
    return guarded([&] {
        std::vector<std::pair<std::string, int>> connectives;
        for (const Json& c : j.at("connectives")) {
            connectives.emplace_back(c.at("name").get<std::string>(), c.at("arity").get<int>());
        }
        return Signature::from_connectives(std::move(connectives));
    });
}

Json nmatrix_to_json(const NMatrix& m) {
    Json j;
    j["signature"] = signature_to_json(m.signature());
    j["values"] = m.values();
    j["designated"] = m.designated_names();
    Json interp = Json::object();
    const RawNMatrix raw = nmatrix_to_raw(m);
    for (const auto& [name, arity] : m.signature().connectives()) {
        Json rows = Json::array();
        for (const RawNMatrix::Row& row : raw.rows) {
            if (row.connective != name) continue;
            rows.push_back(Json{{"args", row.args}, {"out", row.out}});
        }
        interp[name] = std::move(rows);
    }
    j["interpretation"] = std::move(interp);
    return j;
}

NMatrix nmatrix_from_json(const Json& j) {
    RawNMatrix raw;
    guarded([&] {
        for (const Json& c : j.at("signature").at("connectives")) {
            raw.connectives.emplace_back(c.at("name").get<std::string>(),
                                         c.at("arity").get<int>());
        }
        raw.values = j.at("values").get<std::vector<std::string>>();
        raw.designated = j.at("designated").get<std::vector<std::string>>();
        for (const auto& [name, rows] : j.at("interpretation").items()) {
            for (const Json& row : rows) {
                RawNMatrix::Row r;
                r.connective = name;
                r.args = row.at("args").get<std::vector<std::string>>();
                r.out = row.at("out").get<std::vector<std::string>>();
                raw.rows.push_back(std::move(r));
            }
        }
        return 0;
    });
    return nmatrix_from_raw(raw);
}

Json prevaluation_to_json(const PrevaluationTable& table) {
    Json j = Json::array();
    for (const auto& [formula, value] : table) {
        j.push_back(Json{{"formula", formula.text()}, {"value", value}});
    }
    return j;
}

PrevaluationTable prevaluation_from_json(const Json& j, const Signature& sig) {
    return guarded([&] {
        PrevaluationTable table;
        for (const Json& entry : j) {
            table.emplace(parse_formula(entry.at("formula").get<std::string>(), sig),
                          entry.at("value").get<std::string>());
        }
        return table;
    });
}

Json machine_to_json(const CounterMachine& machine) {
    Json j;
    j["counters"] = machine.counters;
    j["states"] = machine.states;
    j["initial"] = machine.initial;
    Json transitions = Json::object();
    for (const std::string& q : machine.states) {
        auto it = machine.transitions.find(q);
        if (it == machine.transitions.end()) continue;
        const CounterTransition& t = it->second;
        if (t.kind == CounterTransition::Kind::Increment) {
            transitions[q] = Json{{"op", "inc"}, {"counter", t.counter}, {"next", t.next}};
        } else {
            transitions[q] = Json{{"op", "test"},
                                  {"counter", t.counter},
                                  {"nonzero", t.next},
                                  {"zero", t.zero_branch}};
        }
    }
    j["transitions"] = std::move(transitions);
    return j;
}

CounterMachine machine_from_json(const Json& j) {
    CounterMachine machine = guarded([&] {
        CounterMachine m;
        m.counters = j.at("counters").get<int>();
        m.states = j.at("states").get<std::vector<std::string>>();
        m.initial = j.at("initial").get<std::string>();
        for (const auto& [state, t] : j.at("transitions").items()) {
            CounterTransition tr;
            const std::string op = t.at("op").get<std::string>();
            tr.counter = t.at("counter").get<int>();
            if (op == "inc") {
                tr.kind = CounterTransition::Kind::Increment;
                tr.next = t.at("next").get<std::string>();
            } else if (op == "test") {
                tr.kind = CounterTransition::Kind::TestDecrement;
                tr.next = t.at("nonzero").get<std::string>();
                tr.zero_branch = t.at("zero").get<std::string>();
            } else {
                bad_json("unknown transition op: " + op);
            }
            m.transitions[state] = std::move(tr);
        }
        return m;
    });
    require_valid_machine(machine);
    return machine;
}

Json rules_to_json(const RuleSet& rules) {
    Json out = Json::array();
    for (const Rule& r : rules.rules) {
        Json premises = Json::array();
        for (const Formula& p : r.premises) premises.push_back(p.text());
        Json rule{{"premises", std::move(premises)}, {"conclusion", r.conclusion.text()}};
        if (!r.name.empty()) rule["name"] = r.name;
        out.push_back(std::move(rule));
    }
    return Json{{"rules", std::move(out)}};
}

RuleSet rules_from_json(const Json& j) {
    return guarded([&] {
        RuleSet rules;
        for (const Json& r : j.at("rules")) {
            Rule rule;
            if (r.contains("name")) rule.name = r.at("name").get<std::string>();
            for (const Json& p : r.at("premises")) {
                rule.premises.push_back(parse_term(p.get<std::string>()));
            }
            rule.conclusion = parse_term(r.at("conclusion").get<std::string>());
            rules.rules.push_back(std::move(rule));
        }
        return rules;
    });
}

Json hom_to_json(const NMatrix& source, const NMatrix& target, const HomCandidate& hom) {
    Json map = Json::object();
    for (std::size_t v = 0; v < hom.map.size(); ++v) {
        map[source.value_name(static_cast<Value>(v))] = target.value_name(hom.map[v]);
    }
    return Json{{"map", std::move(map)},
                {"strict", hom.strict},
                {"surjective", hom.surjective},
                {"strongly_preserving", hom.strongly_preserving}};
}

Json counterexample_to_json(const Counterexample& cx) {
    Json premises = Json::array();
    for (const Formula& p : cx.premises) premises.push_back(p.text());
    return Json{{"kind", "counterexample"},
                {"holds_in", cx.holds_in},
                {"premises", std::move(premises)},
                {"conclusion", cx.conclusion.text()},
                {"witness", prevaluation_to_json(cx.witness)}};
}

Json verdict_to_json(const Verdict& verdict, const NMatrix& m1, const NMatrix& m2) {
    Json j;
    switch (verdict.outcome) {
        case Outcome::Equivalent: j["outcome"] = "equivalent"; break;
        case Outcome::NotEquivalent: j["outcome"] = "not_equivalent"; break;
        case Outcome::Unknown: j["outcome"] = "unknown"; break;
    }
    j["stage"] = verdict.stage;
    j["stages_attempted"] = verdict.stages_attempted;
    j["budget"] = Json{{"depth", verdict.budget.depth},
                       {"variables", verdict.budget.variables},
                       {"max_premises", verdict.budget.max_premises}};

    Json evidence;
    if (verdict.deterministic.has_value()) {
        const MatrixEquivalenceResult& r = *verdict.deterministic;
        evidence["kind"] = "deterministic-decision";
        evidence["equivalent"] = r.equivalent;
        if (!r.equivalent && r.witness.has_value()) {
            evidence["direction"] = r.separating_direction;
            Json premises = Json::array();
            for (const Formula& p : r.witness->premises) premises.push_back(p.text());
            evidence["premises"] = std::move(premises);
            evidence["conclusion"] = r.witness->conclusion.text();
        }
    } else if (verdict.strong_hom.has_value()) {
        const StrongHomEvidence& e = *verdict.strong_hom;
        evidence["kind"] = "strongly-preserving-hom";
        evidence["direction"] = e.direction;
        evidence["hom"] = e.direction == 1 ? hom_to_json(m1, m2, e.hom)
                                           : hom_to_json(m2, m1, e.hom);
    } else if (verdict.hom_pair.has_value()) {
        evidence["kind"] = "hom-pair";
        evidence["forward"] = hom_to_json(m1, m2, verdict.hom_pair->forward);
        evidence["backward"] = hom_to_json(m2, m1, verdict.hom_pair->backward);
    } else if (verdict.certificate.has_value()) {
        const CertificateEvidence& e = *verdict.certificate;
        const NMatrix& tilded = e.unconstrained_side == 1 ? m2 : m1;
        evidence["kind"] = "no-theorem-certificate";
        evidence["unconstrained_side"] = e.unconstrained_side;
        evidence["base"] = e.certificate.base_name;
        HomCandidate hom;
        hom.map = e.certificate.hom;
        hom.strict = true;
        evidence["hom"] = hom_to_json(e.certificate.base, tilded, hom)["map"];
    } else if (verdict.counterexample.has_value()) {
        evidence = counterexample_to_json(*verdict.counterexample);
    } else {
        evidence["kind"] = "budget-exhausted";
    }
    j["evidence"] = std::move(evidence);
    return j;
}

Json artifact_to_json(const Artifact& artifact) {
    return std::visit(
        [](const auto& a) -> Json {
            using T = std::decay_t<decltype(a)>;
            if constexpr (std::is_same_v<T, Signature>) return signature_to_json(a);
            if constexpr (std::is_same_v<T, NMatrix>) return nmatrix_to_json(a);
            if constexpr (std::is_same_v<T, CounterMachine>) return machine_to_json(a);
            if constexpr (std::is_same_v<T, RuleSet>) return rules_to_json(a);
        },
        artifact);
}

Artifact artifact_from_json(const Json& j) {
    if (!j.is_object()) bad_json("expected a JSON object");
    if (j.contains("rules")) return rules_from_json(j);
    if (j.contains("states") && j.contains("transitions")) return machine_from_json(j);
    if (j.contains("values") && j.contains("interpretation")) return nmatrix_from_json(j);
    if (j.contains("connectives")) return signature_from_json(j);
    bad_json("unrecognized artifact shape");
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInputError("cannot open file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInputError("cannot parse " + path + ": " + e.what());
    }
    return j;
}

void store_json_file(const Json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InvalidInputError("cannot write file: " + path);
    out << j.dump(2) << '\n';
}

Artifact load_artifact(const std::string& path_or_uri) {
    constexpr std::string_view kCorpusScheme = "corpus:";
    if (path_or_uri.starts_with(kCorpusScheme)) {
        const std::string name = path_or_uri.substr(kCorpusScheme.size());
        const CorpusEntry* entry = find_corpus_entry(name);
        if (entry == nullptr) throw InvalidInputError("no corpus entry named " + name);
        return std::visit([](const auto& a) { return Artifact(a); }, entry->artifact);
    }
    return artifact_from_json(load_json_file(path_or_uri));
}

void store_artifact(const Artifact& artifact, const std::string& path) {
    store_json_file(artifact_to_json(artifact), path);
}

}  // namespace nmt
