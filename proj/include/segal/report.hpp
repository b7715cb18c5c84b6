#ifndef SEGAL_REPORT_HPP
#define SEGAL_REPORT_HPP

#include <optional>
#include <string>

#include "segal/multi_index.hpp"
#include "segal/polynomial.hpp"
#include "segal/rational.hpp"

namespace segal {

/// Outcome of an exact identity check. A bare boolean is useless for
/// debugging exact arithmetic, so a failing report carries the first
/// counterexample term with both coefficients.
struct IdentityReport {
    bool ok = true;
    std::string context;                 // which identity, with parameters
    std::optional<MultiIndex> term;      // first differing exponent (polynomial checks)
    Rational lhs_value;                  // coefficient / scalar on each side
    Rational rhs_value;

    std::string detail() const;
};

/// Compares two polynomials exactly; on mismatch records the lexicographically
/// first exponent whose coefficients differ.
IdentityReport compare_polynomials(std::string context, const SparsePolynomial& lhs,
                                   const SparsePolynomial& rhs);

/// Scalar variant for coefficient-level identities.
IdentityReport compare_values(std::string context, const Rational& lhs, const Rational& rhs);

}  // namespace segal

#endif
