#include "segal/report.hpp"

namespace segal {

std::string IdentityReport::detail() const {
    if (ok) return "exact";
    std::string s = "first mismatch";
    if (term) s += " at " + term->to_string();
    s += ": lhs = " + lhs_value.to_string() + ", rhs = " + rhs_value.to_string();
    return s;
}

IdentityReport compare_polynomials(std::string context, const SparsePolynomial& lhs,
                                   const SparsePolynomial& rhs) {
    IdentityReport report;
    report.context = std::move(context);
    if (lhs.num_vars() != rhs.num_vars()) {
        report.ok = false;
        report.context += " [variable count mismatch]";
        return report;
    }
    if (lhs == rhs) return report;

    report.ok = false;
    auto lit = lhs.terms().begin();
    auto rit = rhs.terms().begin();
    while (lit != lhs.terms().end() || rit != rhs.terms().end()) {
        if (rit == rhs.terms().end() || (lit != lhs.terms().end() && lit->first < rit->first)) {
            if (rhs.coefficient(lit->first) != lit->second) {
                report.term = lit->first;
                report.lhs_value = lit->second;
                report.rhs_value = rhs.coefficient(lit->first);
                return report;
            }
            ++lit;
        } else {
            if (lhs.coefficient(rit->first) != rit->second) {
                report.term = rit->first;
                report.lhs_value = lhs.coefficient(rit->first);
                report.rhs_value = rit->second;
                return report;
            }
            ++rit;
        }
    }
    return report;
}

IdentityReport compare_values(std::string context, const Rational& lhs, const Rational& rhs) {
    IdentityReport report;
    report.context = std::move(context);
    report.lhs_value = lhs;
    report.rhs_value = rhs;
    report.ok = (lhs == rhs);
    return report;
}

}  // namespace segal
