#include "nmt_cli.hpp"

#include <filesystem>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "nmt/corpus.hpp"
#include "nmt/enumerate.hpp"
#include "nmt/io.hpp"
#include "nmt/parse.hpp"

namespace nmt::cli {

namespace {

NMatrix load_nmatrix_arg(const std::string& ref) {
    Artifact a = load_artifact(ref);
    if (!std::holds_alternative<NMatrix>(a)) {
        throw InvalidInputError(ref + " is not an Nmatrix");
    }
    return std::get<NMatrix>(std::move(a));
}

Signature load_signature_arg(const std::string& ref) {
    Artifact a = load_artifact(ref);
    if (std::holds_alternative<Signature>(a)) return std::get<Signature>(std::move(a));
    if (std::holds_alternative<NMatrix>(a)) return std::get<NMatrix>(a).signature();
    throw InvalidInputError(ref + " does not provide a signature");
}

CounterMachine load_machine_arg(const std::string& ref) {
    Artifact a = load_artifact(ref);
    if (!std::holds_alternative<CounterMachine>(a)) {
        throw InvalidInputError(ref + " is not a counter machine");
    }
    return std::get<CounterMachine>(std::move(a));
}

RuleSet load_rules_arg(const std::string& ref, const Signature& sig) {
    Artifact a = load_artifact(ref);
    if (!std::holds_alternative<RuleSet>(a)) {
        throw InvalidInputError(ref + " is not a rule set");
    }
    RuleSet rules = std::get<RuleSet>(std::move(a));
    for (const Rule& r : rules.rules) {
        for (const Formula& p : r.premises) {
            if (auto e = well_formed_error(p, sig)) throw InvalidInputError(*e);
        }
        if (auto e = well_formed_error(r.conclusion, sig)) throw InvalidInputError(*e);
    }
    return rules;
}

std::vector<Formula> parse_premises(const std::string& joined, const Signature& sig) {
    std::vector<Formula> out;
    std::size_t start = 0;
    while (start <= joined.size()) {
        std::size_t end = joined.find(';', start);
        if (end == std::string::npos) end = joined.size();
        std::string piece = joined.substr(start, end - start);
        const auto first = piece.find_first_not_of(" \t");
        if (first != std::string::npos) {
            out.push_back(parse_formula(piece, sig));
        }
        start = end + 1;
        if (end == joined.size()) break;
    }
    return out;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

struct Options {
    bool json = false;
};

int cmd_corpus(const std::string& action, const std::string& name, const std::string& out_path,
               const Options& opts, std::ostream& out) {
    if (action == "list") {
        if (opts.json) {
            Json j = Json::array();
            for (const CorpusEntry& e : load_corpus()) {
                const char* kind = std::holds_alternative<NMatrix>(e.artifact) ? "nmatrix"
                                   : std::holds_alternative<CounterMachine>(e.artifact)
                                       ? "counter-machine"
                                       : "rules";
                j.push_back(Json{{"name", e.name}, {"kind", kind}, {"note", e.note}});
            }
            emit(out, j);
        } else {
            for (const CorpusEntry& e : load_corpus()) {
                out << e.name << "\t" << e.note << "\n";
            }
        }
        return 0;
    }
    // export
    const CorpusEntry* entry = find_corpus_entry(name);
    if (entry == nullptr) throw InvalidInputError("no corpus entry named " + name);
    const Artifact artifact =
        std::visit([](const auto& a) { return Artifact(a); }, entry->artifact);
    if (out_path.empty()) {
        emit(out, artifact_to_json(artifact));
    } else {
        store_artifact(artifact, out_path);
    }
    return 0;
}

int cmd_check(const std::string& m_ref, const std::string& premises_text,
              const std::string& conclusion_text, const Options& opts, std::ostream& out) {
    const NMatrix m = load_nmatrix_arg(m_ref);
    const std::vector<Formula> premises = parse_premises(premises_text, m.signature());
    const Formula conclusion = parse_formula(conclusion_text, m.signature());
    ConsequenceResult r = decide_consequence(m, premises, conclusion);
    if (opts.json) {
        Json j{{"holds", r.holds}};
        if (!r.holds) j["witness"] = prevaluation_to_json(r.witness);
        emit(out, j);
    } else if (r.holds) {
        out << "holds\n";
    } else {
        out << "fails; countermodel:\n";
        for (const auto& [f, v] : r.witness) out << "  " << f.text() << " -> " << v << "\n";
    }
    return r.holds ? 0 : 1;
}

int cmd_express(const std::string& m_ref, const std::string& formula_text, int arity,
                std::ostream& out) {
    const NMatrix m = load_nmatrix_arg(m_ref);
    const Formula formula = parse_formula(formula_text, m.signature());
    const MultiFunctionTable table = express(m, formula, arity);

    Json entries = Json::array();
    std::vector<Value> tuple(static_cast<std::size_t>(arity), 0);
    for (std::size_t t = 0; t < table.entries.size(); ++t) {
        std::size_t rest = t;
        for (std::size_t i = tuple.size(); i-- > 0;) {
            tuple[i] = static_cast<Value>(rest % m.value_count());
            rest /= m.value_count();
        }
        Json args = Json::array();
        for (Value v : tuple) args.push_back(m.value_name(v));
        Json outs = Json::array();
        for (Value v : table.entries[t]) outs.push_back(m.value_name(v));
        entries.push_back(Json{{"args", std::move(args)}, {"out", std::move(outs)}});
    }
    emit(out, Json{{"arity", arity}, {"entries", std::move(entries)}});
    return 0;
}

int cmd_thmsearch(const std::string& m_ref, int depth, int vars, const Options& opts,
                  std::ostream& out) {
    const NMatrix m = load_nmatrix_arg(m_ref);
    std::optional<Formula> theorem = search_theorem_bounded(m, depth, vars);
    if (opts.json) {
        Json j{{"found", theorem.has_value()}};
        if (theorem.has_value()) j["theorem"] = theorem->text();
        emit(out, j);
    } else if (theorem.has_value()) {
        out << theorem->text() << "\n";
    } else {
        out << "none within budget\n";
    }
    return theorem.has_value() ? 0 : 1;
}

int cmd_tilde(const std::string& m_ref, const std::string& out_path, std::ostream& out) {
    const NMatrix result = tilde(load_nmatrix_arg(m_ref));
    if (out_path.empty()) {
        emit(out, nmatrix_to_json(result));
    } else {
        store_artifact(Artifact(result), out_path);
    }
    return 0;
}

int cmd_unconstrained(const std::string& sig_ref, const std::string& out_path,
                      std::ostream& out) {
    const NMatrix result = unconstrained(load_signature_arg(sig_ref));
    if (out_path.empty()) {
        emit(out, nmatrix_to_json(result));
    } else {
        store_artifact(Artifact(result), out_path);
    }
    return 0;
}

int cmd_hom(const std::string& m1_ref, const std::string& m2_ref, bool strong_only,
            std::ostream& out) {
    const NMatrix m1 = load_nmatrix_arg(m1_ref);
    const NMatrix m2 = load_nmatrix_arg(m2_ref);
    Json j = Json::array();
    std::size_t count = 0;
    for (const HomCandidate& h : enumerate_strict_homs(m1, m2)) {
        if (strong_only && !h.strongly_preserving) continue;
        j.push_back(hom_to_json(m1, m2, h));
        ++count;
    }
    emit(out, j);
    return count > 0 ? 0 : 1;
}

int cmd_eqv_matrix(const std::string& m1_ref, const std::string& m2_ref, std::ostream& out) {
    const NMatrix m1 = load_nmatrix_arg(m1_ref);
    const NMatrix m2 = load_nmatrix_arg(m2_ref);
    MatrixEquivalenceResult r = decide_matrix_equivalence(m1, m2);
    if (r.equivalent) {
        emit(out, Json{{"equivalent", true}});
        return 0;
    }
    Json premises = Json::array();
    for (const Formula& p : r.witness->premises) premises.push_back(p.text());
    emit(out, Json{{"equivalent", false},
                   {"direction", r.separating_direction},
                   {"premises", std::move(premises)},
                   {"conclusion", r.witness->conclusion.text()}});
    return 1;
}

int cmd_thm_exists(const std::string& m_ref, const Options& opts, std::ostream& out) {
    const NMatrix m = load_nmatrix_arg(m_ref);
    std::optional<Formula> theorem = matrix_theorem_existence(m);
    if (opts.json) {
        Json j{{"exists", theorem.has_value()}};
        if (theorem.has_value()) j["theorem"] = theorem->text();
        emit(out, j);
    } else if (theorem.has_value()) {
        out << theorem->text() << "\n";
    } else {
        out << "no theorems\n";
    }
    return theorem.has_value() ? 0 : 1;
}

int cmd_run_cm(const std::string& cm_ref, std::uint64_t max_steps, const Options& opts,
               std::ostream& out) {
    const CounterMachine machine = load_machine_arg(cm_ref);
    const Trace trace =
        run(machine, std::vector<std::uint64_t>(machine.counters, 0), max_steps);
    if (opts.json) {
        Json configs = Json::array();
        for (const Configuration& c : trace.configurations) {
            configs.push_back(Json{{"state", c.state}, {"counters", c.counters}});
        }
        emit(out, Json{{"configurations", std::move(configs)}, {"halted", trace.halted}});
    } else {
        for (const Configuration& c : trace.configurations) {
            out << c.state << " (";
            for (std::size_t i = 0; i < c.counters.size(); ++i) {
                if (i > 0) out << ",";
                out << c.counters[i];
            }
            out << ")\n";
        }
        out << (trace.halted ? "halted" : "budget exhausted") << "\n";
    }
    return 0;
}

int cmd_compile_cm(const std::string& cm_ref, const std::string& out_path, std::ostream& out) {
    const NMatrix compiled = compile_machine(load_machine_arg(cm_ref));
    if (out_path.empty()) {
        emit(out, nmatrix_to_json(compiled));
    } else {
        store_artifact(Artifact(compiled), out_path);
    }
    return 0;
}

int cmd_reduce(const std::string& cm_ref, const std::string& out_dir, std::ostream& out) {
    const CounterMachine machine = load_machine_arg(cm_ref);
    auto [tilded, unc] = build_reduction_pair(machine);
    std::filesystem::create_directories(out_dir);
    const std::string tilded_path = (std::filesystem::path(out_dir) / "tilded.json").string();
    const std::string unc_path = (std::filesystem::path(out_dir) / "unconstrained.json").string();
    store_artifact(Artifact(tilded), tilded_path);
    store_artifact(Artifact(unc), unc_path);
    out << tilded_path << "\n" << unc_path << "\n";
    return 0;
}

int cmd_analyze(const std::string& m1_ref, const std::string& m2_ref, const SearchBudget& budget,
                const std::string& tilde_of, std::ostream& out) {
    const NMatrix m1 = load_nmatrix_arg(m1_ref);
    const NMatrix m2 = load_nmatrix_arg(m2_ref);

    AnalyzeOptions options;
    options.budget = budget;
    if (!tilde_of.empty()) options.tilde_preimage = load_nmatrix_arg(tilde_of);
    for (const CorpusEntry& e : load_corpus()) {
        if (const auto* m = std::get_if<NMatrix>(&e.artifact)) {
            if (m->signature() == m1.signature()) options.corpus.emplace_back(e.name, *m);
        }
    }

    Verdict verdict = analyze(m1, m2, options);
    emit(out, verdict_to_json(verdict, m1, m2));
    switch (verdict.outcome) {
        case Outcome::Equivalent: return 0;
        case Outcome::NotEquivalent: return 1;
        case Outcome::Unknown: return 2;
    }
    return 2;
}

int cmd_rules_check(const std::string& m_ref, const std::string& rules_ref, const Options& opts,
                    std::ostream& out) {
    const NMatrix m = load_nmatrix_arg(m_ref);
    const RuleSet rules = load_rules_arg(rules_ref, m.signature());
    RuleSetReport report = check_rule_set(m, rules);
    if (opts.json) {
        Json j = Json::array();
        for (const RuleCheck& rc : report.rules) {
            const Rule& r = rules.rules[rc.index];
            Json entry{{"rule", r.name.empty() ? std::to_string(rc.index) : r.name},
                       {"holds", rc.result.holds}};
            if (!rc.result.holds) entry["witness"] = prevaluation_to_json(rc.result.witness);
            j.push_back(std::move(entry));
        }
        emit(out, Json{{"all_hold", report.all_hold}, {"rules", std::move(j)}});
    } else {
        for (const RuleCheck& rc : report.rules) {
            const Rule& r = rules.rules[rc.index];
            out << (r.name.empty() ? std::to_string(rc.index) : r.name) << ": "
                << (rc.result.holds ? "holds" : "fails") << "\n";
        }
    }
    return report.all_hold ? 0 : 1;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"finite non-deterministic matrix toolkit"};
    app.require_subcommand(1);
    Options opts;
    app.add_flag("--json", opts.json, "machine-readable JSON output");

    // corpus
    auto* corpus_cmd = app.add_subcommand("corpus", "list or export bundled artifacts");
    corpus_cmd->require_subcommand(1);
    auto* corpus_list = corpus_cmd->add_subcommand("list", "list bundled artifacts");
    auto* corpus_export = corpus_cmd->add_subcommand("export", "export one bundled artifact");
    std::string corpus_name, corpus_out;
    corpus_export->add_option("name", corpus_name)->required();
    corpus_export->add_option("-o,--output", corpus_out);

    // check
    auto* check_cmd = app.add_subcommand("check", "decide premises |- conclusion");
    std::string check_m, check_premises, check_conclusion;
    check_cmd->add_option("matrix", check_m)->required();
    check_cmd->add_option("--premises", check_premises)->default_val("");
    check_cmd->add_option("--conclusion", check_conclusion)->required();

    // express
    auto* express_cmd = app.add_subcommand("express", "table of the expressed multi-function");
    std::string express_m, express_formula;
    int express_arity = 0;
    express_cmd->add_option("matrix", express_m)->required();
    express_cmd->add_option("formula", express_formula)->required();
    express_cmd->add_option("--arity", express_arity)->required();

    // thmsearch
    auto* thmsearch_cmd = app.add_subcommand("thmsearch", "bounded theorem search");
    std::string thmsearch_m;
    int thmsearch_depth = 3, thmsearch_vars = 1;
    thmsearch_cmd->add_option("matrix", thmsearch_m)->required();
    thmsearch_cmd->add_option("--depth", thmsearch_depth);
    thmsearch_cmd->add_option("--vars", thmsearch_vars);

    // tilde
    auto* tilde_cmd = app.add_subcommand("tilde", "tilded Nmatrix");
    std::string tilde_m, tilde_out;
    tilde_cmd->add_option("matrix", tilde_m)->required();
    tilde_cmd->add_option("-o,--output", tilde_out);

    // unconstrained
    auto* unc_cmd = app.add_subcommand("unconstrained", "unconstrained Nmatrix of a signature");
    std::string unc_sig, unc_out;
    unc_cmd->add_option("signature", unc_sig)->required();
    unc_cmd->add_option("-o,--output", unc_out);

    // hom
    auto* hom_cmd = app.add_subcommand("hom", "enumerate strict homomorphisms");
    std::string hom_m1, hom_m2;
    bool hom_strong_only = false;
    hom_cmd->add_option("m1", hom_m1)->required();
    hom_cmd->add_option("m2", hom_m2)->required();
    hom_cmd->add_flag("--strong-only", hom_strong_only);

    // eqv-matrix
    auto* eqv_cmd = app.add_subcommand("eqv-matrix", "decide equivalence of two matrices");
    std::string eqv_m1, eqv_m2;
    eqv_cmd->add_option("m1", eqv_m1)->required();
    eqv_cmd->add_option("m2", eqv_m2)->required();

    // thm-exists
    auto* thm_cmd = app.add_subcommand("thm-exists", "decide theorem existence for a matrix");
    std::string thm_m;
    thm_cmd->add_option("matrix", thm_m)->required();

    // run-cm
    auto* run_cmd = app.add_subcommand("run-cm", "run a counter machine from zeroed counters");
    std::string run_machine;
    std::uint64_t run_max_steps = 10000;
    run_cmd->add_option("machine", run_machine)->required();
    run_cmd->add_option("--max-steps", run_max_steps);

    // compile-cm
    auto* compile_cmd = app.add_subcommand("compile-cm", "compile a machine to an Nmatrix");
    std::string compile_machine_ref, compile_out;
    compile_cmd->add_option("machine", compile_machine_ref)->required();
    compile_cmd->add_option("-o,--output", compile_out);

    // reduce
    auto* reduce_cmd = app.add_subcommand("reduce", "write the reduction pair for a machine");
    std::string reduce_machine, reduce_out;
    reduce_cmd->add_option("machine", reduce_machine)->required();
    reduce_cmd->add_option("-o,--output", reduce_out)->required();

    // analyze
    auto* analyze_cmd = app.add_subcommand("analyze", "best-effort Nmatrix equivalence analysis");
    std::string analyze_m1, analyze_m2, analyze_tilde_of;
    SearchBudget analyze_budget;
    analyze_cmd->add_option("m1", analyze_m1)->required();
    analyze_cmd->add_option("m2", analyze_m2)->required();
    analyze_cmd->add_option("--depth", analyze_budget.depth);
    analyze_cmd->add_option("--vars", analyze_budget.variables);
    analyze_cmd->add_option("--premises", analyze_budget.max_premises);
    analyze_cmd->add_option("--tilde-of", analyze_tilde_of);

    // rules-check
    auto* rules_cmd = app.add_subcommand("rules-check", "check every rule against a matrix");
    std::string rules_m, rules_file;
    rules_cmd->add_option("matrix", rules_m)->required();
    rules_cmd->add_option("rules", rules_file)->required();

    // Let the global --json flag appear after a subcommand name.
    for (CLI::App* sub :
         {corpus_cmd, corpus_list, corpus_export, check_cmd, express_cmd, thmsearch_cmd,
          tilde_cmd, unc_cmd, hom_cmd, eqv_cmd, thm_cmd, run_cmd, compile_cmd, reduce_cmd,
          analyze_cmd, rules_cmd}) {
        sub->fallthrough();
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 3;
    }

    try {
        if (corpus_list->parsed()) return cmd_corpus("list", "", "", opts, out);
        if (corpus_export->parsed()) return cmd_corpus("export", corpus_name, corpus_out, opts, out);
        if (check_cmd->parsed()) return cmd_check(check_m, check_premises, check_conclusion, opts, out);
        if (express_cmd->parsed()) return cmd_express(express_m, express_formula, express_arity, out);
        if (thmsearch_cmd->parsed()) return cmd_thmsearch(thmsearch_m, thmsearch_depth, thmsearch_vars, opts, out);
        if (tilde_cmd->parsed()) return cmd_tilde(tilde_m, tilde_out, out);
        if (unc_cmd->parsed()) return cmd_unconstrained(unc_sig, unc_out, out);
        if (hom_cmd->parsed()) return cmd_hom(hom_m1, hom_m2, hom_strong_only, out);
        if (eqv_cmd->parsed()) return cmd_eqv_matrix(eqv_m1, eqv_m2, out);
        if (thm_cmd->parsed()) return cmd_thm_exists(thm_m, opts, out);
        if (run_cmd->parsed()) return cmd_run_cm(run_machine, run_max_steps, opts, out);
        if (compile_cmd->parsed()) return cmd_compile_cm(compile_machine_ref, compile_out, out);
        if (reduce_cmd->parsed()) return cmd_reduce(reduce_machine, reduce_out, out);
        if (analyze_cmd->parsed()) return cmd_analyze(analyze_m1, analyze_m2, analyze_budget, analyze_tilde_of, out);
        if (rules_cmd->parsed()) return cmd_rules_check(rules_m, rules_file, opts, out);
        err << "no command given\n";
        return 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace nmt::cli
