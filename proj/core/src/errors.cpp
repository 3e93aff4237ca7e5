#include "nmt/errors.hpp"

namespace nmt {

std::string ValidationError::describe(const std::vector<Violation>& vs) {
    if (vs.empty()) return "validation failed";
    std::string out = "validation failed:";
    for (const auto& v : vs) {
        out += "\n  ";
        if (!v.where.empty()) {
            out += v.where;
            out += ": ";
        }
        out += v.detail;
    }
    return out;
}

}  // namespace nmt
