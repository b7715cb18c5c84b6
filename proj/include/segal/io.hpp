#ifndef SEGAL_IO_HPP
#define SEGAL_IO_HPP

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "segal/linear_map.hpp"
#include "segal/measures.hpp"
#include "segal/polynomial.hpp"
#include "segal/report.hpp"

namespace segal {

using Json = nlohmann::ordered_json;

/// Schema violation in an input document; the message names the offending field.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Integers travel as decimal strings so coefficients never lose precision.
Json rational_to_json(const Rational& r);
/// Accepts {"num": "...", "den": "..."} (strings or integers), a bare JSON
/// integer, or a "p/q" string.
Rational rational_from_json(const Json& j, const std::string& field);

Json polynomial_to_json(const SparsePolynomial& p);
SparsePolynomial polynomial_from_json(const Json& j);

Json matrix_to_json(const LinearMap& m);
LinearMap matrix_from_json(const Json& j);

/// Builds the measure described by a {"kind": ...} document. Any measure may
/// carry an optional "orderBound" declaring fewer available moments.
MeasurePtr measure_from_json(const Json& j);

Json report_to_json(const IdentityReport& report);

Json load_json_file(const std::string& path);

}  // namespace segal

#endif
