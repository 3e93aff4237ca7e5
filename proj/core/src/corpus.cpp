#include "nmt/corpus.hpp"

#include <algorithm>
#include <map>

#include "nmt/constructions.hpp"
#include "nmt/io.hpp"
#include "nmt/parse.hpp"

namespace nmt {

namespace {

Signature flat_signature() {
    return Signature::from_connectives({{"flat", 1}});
}

// Shorthand for a two-valued matrix over {0,1} with designated {1} and the
// given flat-outputs on inputs 0 and 1.
NMatrix unary_nmatrix(ValueSet on0, ValueSet on1) {
    std::map<std::string, ConnectiveTable> interp;
    interp["flat"] = ConnectiveTable{1, {std::move(on0), std::move(on1)}};
    return NMatrix(flat_signature(), {"0", "1"}, {"1"}, std::move(interp));
}

NMatrix kearns_nmatrix() {
    const Signature sig = Signature::from_connectives(
        {{"neg", 1}, {"box", 1}, {"or", 2}, {"imp", 2}});
    const std::vector<std::string> values{"F", "f", "t", "T"};
    constexpr Value F = 0, f = 1, t = 2, T = 3;

    std::map<std::string, ConnectiveTable> interp;
    interp["neg"] = ConnectiveTable{1, {{T}, {t}, {f}, {F}}};
    interp["box"] = ConnectiveTable{1, {{F, f}, {F, f}, {F, f}, {t, T}}};
    // Row-major over (left, right).
    interp["or"] = ConnectiveTable{2,
                                   {
                                       {F}, {f}, {t}, {T},        // F or _
                                       {f}, {f}, {t, T}, {T},     // f or _
                                       {t}, {t, T}, {t, T}, {T},  // t or _
                                       {T}, {T}, {T}, {T},        // T or _
                                   }};
    interp["imp"] = ConnectiveTable{2,
                                    {
                                        {T}, {T}, {T}, {T},        // F imp _
                                        {t}, {t, T}, {t, T}, {T},  // f imp _
                                        {f}, {f}, {t, T}, {T},     // t imp _
                                        {F}, {f}, {t}, {T},        // T imp _
                                    }};
    return NMatrix(sig, values, {"t", "T"}, std::move(interp));
}

NMatrix implication_matrix() {
    const Signature sig = Signature::from_connectives({{"imp", 2}});
    std::map<std::string, ConnectiveTable> interp;
    interp["imp"] = ConnectiveTable{2, {{1}, {1}, {0}, {1}}};
    return NMatrix(sig, {"0", "1"}, {"1"}, std::move(interp));
}

Rule make_rule(const std::string& name, const std::vector<std::string>& premises,
               const std::string& conclusion, const Signature& sig) {
    Rule r;
    r.name = name;
    for (const std::string& p : premises) r.premises.push_back(parse_formula(p, sig));
    r.conclusion = parse_formula(conclusion, sig);
    return r;
}

CounterMachine inc1_machine() {
    CounterMachine m;
    m.counters = 1;
    m.states = {"q0", "q1"};
    m.initial = "q0";
    m.transitions["q0"] = CounterTransition{CounterTransition::Kind::Increment, 1, "q1", ""};
    return m;
}

CounterMachine loop_machine() {
    CounterMachine m;
    m.counters = 1;
    m.states = {"q0"};
    m.initial = "q0";
    m.transitions["q0"] = CounterTransition{CounterTransition::Kind::Increment, 1, "q0", ""};
    return m;
}

CounterMachine inctest_machine() {
    CounterMachine m;
    m.counters = 1;
    m.states = {"q0", "q1", "q2"};
    m.initial = "q0";
    m.transitions["q0"] = CounterTransition{CounterTransition::Kind::Increment, 1, "q1", ""};
    m.transitions["q1"] =
        CounterTransition{CounterTransition::Kind::TestDecrement, 1, "q2", "q2"};
    return m;
}

// Expected tilded tables for the unary family, value order [0, 1, 0~]:
// one entry per input value, each a set over the same order.
struct ExpectedTilde {
    const char* base;
    std::vector<ValueSet> rows;  // inputs 0, 1, 0~
};

const std::vector<ExpectedTilde>& expected_tilde_tables() {
    static const std::vector<ExpectedTilde> tables{
        {"U", {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}}},
        {"M1", {{0, 1, 2}, {0, 2}, {0, 1, 2}}},
        {"M2", {{0, 1, 2}, {1}, {0, 1, 2}}},
        {"M3", {{0, 2}, {0, 1, 2}, {0, 2}}},
        {"M4", {{0, 2}, {0, 2}, {0, 2}}},
        {"M5", {{0, 2}, {1}, {0, 2}}},
        {"M6", {{1}, {0, 1, 2}, {1}}},
        {"M7", {{1}, {0, 2}, {1}}},
        {"M8", {{1}, {1}, {1}}},
    };
    return tables;
}

// Frozen FNV-1a fingerprints of every bundled artifact's canonical JSON.
const std::map<std::string, std::uint64_t>& expected_checksums() {
    static const std::map<std::string, std::uint64_t> checksums{
        {"U", 4545858346085950310ull},
        {"M1", 12785783086759407921ull},
        {"M2", 7927716474909176346ull},
        {"M3", 14199226980007413359ull},
        {"M4", 13423267047001460444ull},
        {"M5", 12204355638010233915ull},
        {"M6", 2817061610158474418ull},
        {"M7", 12538398533654570821ull},
        {"M8", 10762754986069150190ull},
        {"tilde_U", 8090086749614771646ull},
        {"tilde_M1", 6300903212082364865ull},
        {"tilde_M2", 16506593895340239690ull},
        {"tilde_M3", 13197464586194807800ull},
        {"tilde_M4", 11034656299935638167ull},
        {"tilde_M5", 15734157919156564242ull},
        {"tilde_M6", 8609099648424352444ull},
        {"tilde_M7", 16341413992329263325ull},
        {"tilde_M8", 11415683105583785680ull},
        {"K", 8934144202999144082ull},
        {"I", 1646448781881645301ull},
        {"tilde_I", 17802346411173893072ull},
        {"R_U", 11569065192606140148ull},
        {"R_M1", 9639729250531330111ull},
        {"R_M2", 18355385026379257176ull},
        {"R_M3", 15817035745419666131ull},
        {"R_M4", 8222434113152828959ull},
        {"R_M5", 4801315427237943823ull},
        {"R_M7", 10139196271491491434ull},
        {"R_M8", 15249167698134091110ull},
        {"INC1", 12241917932241235975ull},
        {"LOOP", 12700604644221357646ull},
        {"INCTEST", 17422324333157381557ull},
    };
    return checksums;
}

const CorpusEntry* find_entry(const std::vector<CorpusEntry>& entries, std::string_view name) {
    for (const CorpusEntry& entry : entries) {
        if (entry.name == name) return &entry;
    }
    throw InvalidInputError("corpus construction referenced a missing entry: " +
                            std::string(name));
}

std::vector<CorpusEntry> build_corpus() {
    std::vector<CorpusEntry> entries;
    const Signature flat = flat_signature();

    auto add_matrix = [&](std::string name, std::string note, NMatrix m) {
        entries.push_back(CorpusEntry{std::move(name), std::move(note), std::move(m)});
    };

    add_matrix("U", "two-valued unconstrained Nmatrix over the one-unary-connective signature",
               unconstrained(flat));
    add_matrix("M1", "flat: 0 -> {0,1}, 1 -> {0}", unary_nmatrix({0, 1}, {0}));
    add_matrix("M2", "flat: 0 -> {0,1}, 1 -> {1}", unary_nmatrix({0, 1}, {1}));
    add_matrix("M3", "flat: 0 -> {0}, 1 -> {0,1}", unary_nmatrix({0}, {0, 1}));
    add_matrix("M4", "flat: 0 -> {0}, 1 -> {0}", unary_nmatrix({0}, {0}));
    add_matrix("M5", "flat: 0 -> {0}, 1 -> {1}", unary_nmatrix({0}, {1}));
    add_matrix("M6", "flat: 0 -> {1}, 1 -> {0,1}", unary_nmatrix({1}, {0, 1}));
    add_matrix("M7", "flat: 0 -> {1}, 1 -> {0}; negation fragment of classical logic",
               unary_nmatrix({1}, {0}));
    add_matrix("M8", "flat: 0 -> {1}, 1 -> {1}", unary_nmatrix({1}, {1}));

    for (const char* base : {"U", "M1", "M2", "M3", "M4", "M5", "M6", "M7", "M8"}) {
        const NMatrix& m = std::get<NMatrix>(find_entry(entries, base)->artifact);
        add_matrix(std::string("tilde_") + base,
                   std::string("tilded variant of ") + base, tilde(m));
    }

    add_matrix("K", "Kearns four-valued modal Nmatrix (neg, box, or, imp)", kearns_nmatrix());
    add_matrix("I", "two-valued classical implication matrix", implication_matrix());
    add_matrix("tilde_I", "tilded variant of I", tilde(implication_matrix()));

    auto add_rules = [&](std::string name, std::string note,
                         const std::vector<Rule>& rules) {
        entries.push_back(CorpusEntry{std::move(name), std::move(note), RuleSet{rules}});
    };
    const Rule r1 = make_rule("r1", {"p1", "flat(p1)"}, "p2", flat);
    const Rule r2 = make_rule("r2", {"p1"}, "flat(p1)", flat);
    const Rule r3 = make_rule("r3", {"flat(p1)"}, "p1", flat);
    const Rule r4 = make_rule("r4", {"flat(p1)"}, "p2", flat);
    const Rule r5 = make_rule("r5", {"p1"}, "flat(flat(p1))", flat);
    const Rule r6 = make_rule("r6", {"flat(flat(p1))"}, "p1", flat);
    const Rule r7 = make_rule("r7", {}, "flat(p1)", flat);
    add_rules("R_U", "empty axiomatization of the discrete logic", {});
    add_rules("R_M1", "axiomatization of M1", {r1});
    add_rules("R_M2", "axiomatization of M2", {r2});
    add_rules("R_M3", "axiomatization of M3", {r3});
    add_rules("R_M4", "axiomatization of M4", {r4});
    add_rules("R_M5", "axiomatization of M5", {r2, r3});
    add_rules("R_M7", "axiomatization of M7", {r1, r5, r6});
    add_rules("R_M8", "axiomatization of M8", {r7});

    entries.push_back(CorpusEntry{"INC1", "one increment, then halt", inc1_machine()});
    entries.push_back(CorpusEntry{"LOOP", "increments forever", loop_machine()});
    entries.push_back(
        CorpusEntry{"INCTEST", "increment, test-decrement, halt", inctest_machine()});
    return entries;
}

}  // namespace

std::uint64_t corpus_checksum(const CorpusEntry& entry) {
    const Artifact artifact =
        std::visit([](const auto& a) { return Artifact(a); }, entry.artifact);
    const std::string text = artifact_to_json(artifact).dump();
    std::uint64_t hash = 1469598103934665603ull;  // FNV-1a 64
    for (unsigned char c : text) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    return hash;
}

const std::vector<CorpusEntry>& load_corpus() {
    static const std::vector<CorpusEntry> corpus = [] {
        std::vector<CorpusEntry> entries = build_corpus();
        std::vector<Violation> problems;

        // Tilded entries must equal tilde() of their base entry and, for the
        // unary family, the frozen expected tables.
        for (const ExpectedTilde& expected : expected_tilde_tables()) {
            const auto* base = find_entry(entries, expected.base);
            const auto* tilded = find_entry(entries, std::string("tilde_") + expected.base);
            const NMatrix& computed = std::get<NMatrix>(tilded->artifact);
            if (!(tilde(std::get<NMatrix>(base->artifact)) == computed)) {
                problems.push_back({tilded->name, "tilded entry differs from tilde(base)"});
                continue;
            }
            const ConnectiveTable& table = computed.table("flat");
            if (table.rows != expected.rows) {
                problems.push_back({tilded->name, "tilded table differs from the frozen table"});
            }
        }

        for (const CorpusEntry& entry : entries) {
            auto it = expected_checksums().find(entry.name);
            if (it == expected_checksums().end()) {
                problems.push_back({entry.name, "no embedded checksum"});
            } else if (it->second != corpus_checksum(entry)) {
                problems.push_back({entry.name, "checksum mismatch"});
            }
            if (const auto* rules = std::get_if<RuleSet>(&entry.artifact)) {
                const Signature flat = flat_signature();
                for (const Rule& r : rules->rules) {
                    for (const Formula& p : r.premises) {
                        if (auto err = well_formed_error(p, flat)) {
                            problems.push_back({entry.name, *err});
                        }
                    }
                    if (auto err = well_formed_error(r.conclusion, flat)) {
                        problems.push_back({entry.name, *err});
                    }
                }
            }
        }
        if (!problems.empty()) throw ValidationError(std::move(problems));
        return entries;
    }();
    return corpus;
}

const CorpusEntry* find_corpus_entry(std::string_view name) {
    for (const CorpusEntry& entry : load_corpus()) {
        if (entry.name == name) return &entry;
    }
    return nullptr;
}

const NMatrix& corpus_nmatrix(std::string_view name) {
    const CorpusEntry* entry = find_corpus_entry(name);
    if (entry == nullptr || !std::holds_alternative<NMatrix>(entry->artifact)) {
        throw InvalidInputError("no corpus Nmatrix named " + std::string(name));
    }
    return std::get<NMatrix>(entry->artifact);
}

const CounterMachine& corpus_machine(std::string_view name) {
    const CorpusEntry* entry = find_corpus_entry(name);
    if (entry == nullptr || !std::holds_alternative<CounterMachine>(entry->artifact)) {
        throw InvalidInputError("no corpus machine named " + std::string(name));
    }
    return std::get<CounterMachine>(entry->artifact);
}

const RuleSet& corpus_rules(std::string_view name) {
    const CorpusEntry* entry = find_corpus_entry(name);
    if (entry == nullptr || !std::holds_alternative<RuleSet>(entry->artifact)) {
        throw InvalidInputError("no corpus rule set named " + std::string(name));
    }
    return std::get<RuleSet>(entry->artifact);
}

}  // namespace nmt
