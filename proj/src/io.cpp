#include "segal/io.hpp"

#include <fstream>

namespace segal {

namespace {

const Json& require(const Json& j, const std::string& key, const std::string& where) {
    if (!j.is_object()) throw ParseError(where + ": expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(where + ": missing field \"" + key + "\"");
    return *it;
}

int require_int(const Json& j, const std::string& key, const std::string& where) {
    const Json& v = require(j, key, where);
    if (!v.is_number_integer()) throw ParseError(where + ": field \"" + key + "\" must be an integer");
    return v.get<int>();
}

Integer integer_from_json(const Json& j, const std::string& field) {
    if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
    if (j.is_string()) {
        Integer n;
        if (n.set_str(j.get<std::string>(), 10) != 0)
            throw ParseError(field + ": '" + j.get<std::string>() + "' is not a decimal integer");
        return n;
    }
    throw ParseError(field + ": expected an integer or a decimal string");
}

}  // namespace

Json rational_to_json(const Rational& r) {
    return Json{{"num", r.num().get_str()}, {"den", r.den().get_str()}};
}

Rational rational_from_json(const Json& j, const std::string& field) {
    if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
    if (j.is_string()) {
        try {
            return Rational::from_string(j.get<std::string>());
        } catch (const std::exception& e) {
            throw ParseError(field + ": " + e.what());
        }
    }
    if (j.is_object()) {
        const Integer num = integer_from_json(require(j, "num", field), field + ".num");
        Integer den = 1;
        if (j.contains("den")) den = integer_from_json(j.at("den"), field + ".den");
        if (den == 0) throw ParseError(field + ": zero denominator");
        return Rational(num, den);
    }
    throw ParseError(field + ": expected a rational ({num,den}, integer, or \"p/q\")");
}

Json polynomial_to_json(const SparsePolynomial& p) {
    Json terms = Json::array();
    for (const auto& [gamma, c] : p.terms()) {
        Json term;
        term["exp"] = gamma.exponents();
        term["num"] = c.num().get_str();
        term["den"] = c.den().get_str();
        terms.push_back(std::move(term));
    }
    return Json{{"numVars", p.num_vars()}, {"terms", std::move(terms)}};
}

SparsePolynomial polynomial_from_json(const Json& j) {
    const int num_vars = require_int(j, "numVars", "polynomial");
    if (num_vars < 0) throw ParseError("polynomial: \"numVars\" must be nonnegative");
    const Json& terms = require(j, "terms", "polynomial");
    if (!terms.is_array()) throw ParseError("polynomial: \"terms\" must be an array");

    SparsePolynomial p(num_vars);
    for (std::size_t k = 0; k < terms.size(); ++k) {
        const std::string where = "polynomial.terms[" + std::to_string(k) + "]";
        const Json& term = terms[k];
        const Json& exp = require(term, "exp", where);
        if (!exp.is_array()) throw ParseError(where + ": \"exp\" must be an array");
        std::vector<int> e;
        for (const Json& v : exp) {
            if (!v.is_number_integer() || v.get<int>() < 0)
                throw ParseError(where + ": exponents must be nonnegative integers");
            e.push_back(v.get<int>());
        }
        if (static_cast<int>(e.size()) != num_vars)
            throw ParseError(where + ": \"exp\" has length " + std::to_string(e.size()) +
                             ", expected numVars = " + std::to_string(num_vars));
        p.add_term(MultiIndex(std::move(e)), rational_from_json(term, where));
    }
    return p;
}

Json matrix_to_json(const LinearMap& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(rational_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

LinearMap matrix_from_json(const Json& j) {
    const int rows = require_int(j, "rows", "matrix");
    const int cols = require_int(j, "cols", "matrix");
    if (rows < 0 || cols < 0) throw ParseError("matrix: dimensions must be nonnegative");
    const Json& entries = require(j, "entries", "matrix");
    if (!entries.is_array() || static_cast<int>(entries.size()) != rows)
        throw ParseError("matrix: \"entries\" must be an array of " + std::to_string(rows) +
                         " rows");
    std::vector<Rational> flat;
    flat.reserve(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
    for (int i = 0; i < rows; ++i) {
        const Json& row = entries[static_cast<std::size_t>(i)];
        const std::string where = "matrix.entries[" + std::to_string(i) + "]";
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw ParseError(where + ": expected " + std::to_string(cols) + " entries");
        for (int c = 0; c < cols; ++c)
            flat.push_back(rational_from_json(row[static_cast<std::size_t>(c)],
                                              where + "[" + std::to_string(c) + "]"));
    }
    return LinearMap(rows, cols, std::move(flat));
}

namespace {

std::vector<Rational> rational_vector(const Json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": expected an array");
    std::vector<Rational> v;
    for (std::size_t i = 0; i < j.size(); ++i)
        v.push_back(rational_from_json(j[i], where + "[" + std::to_string(i) + "]"));
    return v;
}

MeasurePtr measure_from_json_inner(const Json& j) {
    const Json& kind_field = require(j, "kind", "measure");
    if (!kind_field.is_string()) throw ParseError("measure: \"kind\" must be a string");
    const std::string kind = kind_field.get<std::string>();

    if (kind == "discrete") {
        const Json& atoms = require(j, "atoms", "measure(discrete)");
        if (!atoms.is_array() || atoms.empty())
            throw ParseError("measure(discrete): \"atoms\" must be a non-empty array");
        std::vector<DiscreteMeasure::Atom> parsed;
        for (std::size_t i = 0; i < atoms.size(); ++i) {
            const std::string where = "measure(discrete).atoms[" + std::to_string(i) + "]";
            DiscreteMeasure::Atom atom;
            atom.point = rational_vector(require(atoms[i], "point", where), where + ".point");
            atom.weight = rational_from_json(require(atoms[i], "weight", where), where + ".weight");
            parsed.push_back(std::move(atom));
        }
        try {
            return std::make_shared<DiscreteMeasure>(std::move(parsed));
        } catch (const std::invalid_argument& e) {
            throw ParseError(std::string("measure(discrete): ") + e.what());
        }
    }
    if (kind == "gaussian") {
        std::vector<Rational> mean = rational_vector(require(j, "mean", "measure(gaussian)"),
                                                     "measure(gaussian).mean");
        const Json& cov = require(j, "cov", "measure(gaussian)");
        if (!cov.is_array()) throw ParseError("measure(gaussian): \"cov\" must be an array");
        std::vector<std::vector<Rational>> rows;
        for (std::size_t i = 0; i < cov.size(); ++i)
            rows.push_back(rational_vector(cov[i], "measure(gaussian).cov[" + std::to_string(i) + "]"));
        try {
            return std::make_shared<GaussianMeasure>(std::move(mean), std::move(rows));
        } catch (const std::invalid_argument& e) {
            throw ParseError(std::string("measure(gaussian): ") + e.what());
        }
    }
    if (kind == "product") {
        const Json& factors = require(j, "factors", "measure(product)");
        if (!factors.is_array() || factors.empty())
            throw ParseError("measure(product): \"factors\" must be a non-empty array");
        std::vector<MeasurePtr> parsed;
        for (const Json& f : factors) parsed.push_back(measure_from_json(f));
        return std::make_shared<ProductMeasure>(std::move(parsed));
    }
    if (kind == "pushforward") {
        MeasurePtr base = measure_from_json(require(j, "base", "measure(pushforward)"));
        LinearMap map = matrix_from_json(require(j, "map", "measure(pushforward)"));
        try {
            return std::make_shared<PushforwardMeasure>(std::move(base), std::move(map));
        } catch (const std::invalid_argument& e) {
            throw ParseError(std::string("measure(pushforward): ") + e.what());
        }
    }
    throw ParseError("measure: unknown kind \"" + kind +
                     "\" (expected discrete, gaussian, product, or pushforward)");
}

}  // namespace

MeasurePtr measure_from_json(const Json& j) {
    MeasurePtr measure = measure_from_json_inner(j);
    if (j.is_object() && j.contains("orderBound")) {
        const Json& bound = j.at("orderBound");
        if (!bound.is_number_integer() || bound.get<int>() < 1)
            throw ParseError("measure: \"orderBound\" must be a positive integer");
        measure = std::make_shared<TruncatedMeasure>(std::move(measure), bound.get<int>());
    }
    return measure;
}

Json report_to_json(const IdentityReport& report) {
    Json j;
    j["ok"] = report.ok;
    j["context"] = report.context;
    if (!report.ok) {
        if (report.term) j["term"] = report.term->exponents();
        j["lhs"] = rational_to_json(report.lhs_value);
        j["rhs"] = rational_to_json(report.rhs_value);
    }
    return j;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

}  // namespace segal
