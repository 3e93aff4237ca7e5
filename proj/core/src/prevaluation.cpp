#include "nmt/prevaluation.hpp"

namespace nmt {

PrevaluationCheck check_prevaluation(const NMatrix& m, const PrevaluationTable& table) {
    PrevaluationCheck result;
    auto flag = [&](const Formula& f, std::string detail) {
        result.ok = false;
        result.violations.push_back({f.text(), std::move(detail)});
    };

    for (const auto& [formula, value_name] : table) {
        if (auto err = well_formed_error(formula, m.signature())) {
            flag(formula, *err);
            continue;
        }
        auto value = m.value_index(value_name);
        if (!value.has_value()) {
            flag(formula, "value not in V: " + value_name);
            continue;
        }
        if (formula.is_var()) continue;

        std::vector<Value> child_values;
        bool children_ok = true;
        for (const Formula& arg : formula.args()) {
            auto it = table.find(arg);
            if (it == table.end()) {
                flag(formula, "domain not subformula-closed: missing " + arg.text());
                children_ok = false;
                break;
            }
            auto child = m.value_index(it->second);
            if (!child.has_value()) {
                children_ok = false;  // reported at the child's own entry
                break;
            }
            child_values.push_back(*child);
        }
        if (!children_ok) continue;

        const ValueSet& allowed = m.output(formula.connective(), child_values);
        if (!allowed.contains(*value)) {
            flag(formula, "value " + value_name + " not permitted by the interpretation");
        }
    }
    return result;
}

}  // namespace nmt
