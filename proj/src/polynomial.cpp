#include "segal/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace segal {

SparsePolynomial::SparsePolynomial(int num_vars) : num_vars_(num_vars) {
    if (num_vars < 0) throw std::invalid_argument("SparsePolynomial: negative variable count");
}

SparsePolynomial SparsePolynomial::constant(int num_vars, const Rational& c) {
    SparsePolynomial p(num_vars);
    p.add_term(MultiIndex(num_vars), c);
    return p;
}

SparsePolynomial SparsePolynomial::monomial(const MultiIndex& exponent, const Rational& coeff) {
    SparsePolynomial p(exponent.size());
    p.add_term(exponent, coeff);
    return p;
}

SparsePolynomial SparsePolynomial::variable(int num_vars, int j) {
    if (j < 0 || j >= num_vars) throw std::invalid_argument("SparsePolynomial::variable: index out of range");
    return monomial(MultiIndex(num_vars).plus_unit(j));
}

int SparsePolynomial::total_degree() const {
    int deg = -1;
    for (const auto& [gamma, c] : terms_) deg = std::max(deg, gamma.order());
    return deg;
}

Rational SparsePolynomial::coefficient(const MultiIndex& gamma) const {
    auto it = terms_.find(gamma);
    return it == terms_.end() ? Rational(0) : it->second;
}

void SparsePolynomial::add_term(const MultiIndex& gamma, const Rational& c) {
    if (gamma.size() != num_vars_)
        throw std::invalid_argument("SparsePolynomial::add_term: exponent length " +
                                    std::to_string(gamma.size()) + " != numVars " +
                                    std::to_string(num_vars_));
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(gamma, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void SparsePolynomial::check_same_vars(const SparsePolynomial& other, const char* op) const {
    if (num_vars_ != other.num_vars_)
        throw std::invalid_argument(std::string("SparsePolynomial ") + op + ": numVars mismatch (" +
                                    std::to_string(num_vars_) + " vs " +
                                    std::to_string(other.num_vars_) + ")");
}

SparsePolynomial SparsePolynomial::operator-() const {
    SparsePolynomial r(num_vars_);
    for (const auto& [gamma, c] : terms_) r.terms_.emplace(gamma, -c);
    return r;
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& other) {
    check_same_vars(other, "add");
    for (const auto& [gamma, c] : other.terms_) add_term(gamma, c);
    return *this;
}

SparsePolynomial& SparsePolynomial::operator-=(const SparsePolynomial& other) {
    check_same_vars(other, "sub");
    for (const auto& [gamma, c] : other.terms_) add_term(gamma, -c);
    return *this;
}

SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
    a.check_same_vars(b, "mul");
    SparsePolynomial r(a.num_vars_);
    for (const auto& [ga, ca] : a.terms_) {
        for (const auto& [gb, cb] : b.terms_) {
            std::vector<int> e(static_cast<std::size_t>(a.num_vars_));
            for (int i = 0; i < a.num_vars_; ++i) e[static_cast<std::size_t>(i)] = ga[i] + gb[i];
            r.add_term(MultiIndex(std::move(e)), ca * cb);
        }
    }
    return r;
}

SparsePolynomial operator*(const Rational& c, const SparsePolynomial& p) {
    SparsePolynomial r(p.num_vars_);
    if (c.is_zero()) return r;
    for (const auto& [gamma, pc] : p.terms_) r.terms_.emplace(gamma, c * pc);
    return r;
}

SparsePolynomial SparsePolynomial::partial_derivative(int j) const {
    if (j < 0 || j >= num_vars_)
        throw std::invalid_argument("partial_derivative: variable index " + std::to_string(j) +
                                    " out of range for " + std::to_string(num_vars_) + " variables");
    SparsePolynomial r(num_vars_);
    for (const auto& [gamma, c] : terms_) {
        if (gamma[j] == 0) continue;
        r.add_term(gamma.minus_unit(j), Rational(gamma[j]) * c);
    }
    return r;
}

Rational SparsePolynomial::eval(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != num_vars_)
        throw std::invalid_argument("eval: point length " + std::to_string(point.size()) +
                                    " != numVars " + std::to_string(num_vars_));
    Rational sum = 0;
    for (const auto& [gamma, c] : terms_) {
        Rational term = c;
        for (int i = 0; i < num_vars_; ++i)
            if (gamma[i] > 0) term *= segal::pow(point[static_cast<std::size_t>(i)],
                                                 static_cast<unsigned int>(gamma[i]));
        sum += term;
    }
    return sum;
}

SparsePolynomial SparsePolynomial::compose_linear(const LinearMap& map) const {
    if (num_vars_ != map.rows())
        throw std::invalid_argument("compose_linear: polynomial has " + std::to_string(num_vars_) +
                                    " variables but map has " + std::to_string(map.rows()) + " rows");
    const int n = map.cols();

    // Linear form for each substituted variable, built once.
    std::vector<SparsePolynomial> forms;
    forms.reserve(static_cast<std::size_t>(num_vars_));
    for (int i = 0; i < num_vars_; ++i) {
        SparsePolynomial li(n);
        for (int j = 0; j < n; ++j)
            li.add_term(MultiIndex(n).plus_unit(j), map(i, j));
        forms.push_back(std::move(li));
    }

    SparsePolynomial result(n);
    for (const auto& [gamma, c] : terms_) {
        SparsePolynomial term = SparsePolynomial::constant(n, c);
        for (int i = 0; i < num_vars_; ++i)
            if (gamma[i] > 0) term = term * forms[static_cast<std::size_t>(i)].pow(gamma[i]);
        result += term;
    }
    return result;
}

SparsePolynomial SparsePolynomial::pow(int e) const {
    if (e < 0) throw std::invalid_argument("SparsePolynomial::pow: negative exponent");
    SparsePolynomial acc = SparsePolynomial::constant(num_vars_, 1);
    SparsePolynomial base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return acc;
}

SparsePolynomial SparsePolynomial::shift_vars(int new_num_vars, int offset) const {
    if (offset < 0 || offset + num_vars_ > new_num_vars)
        throw std::invalid_argument("shift_vars: block does not fit");
    SparsePolynomial r(new_num_vars);
    for (const auto& [gamma, c] : terms_) {
        std::vector<int> e(static_cast<std::size_t>(new_num_vars), 0);
        for (int i = 0; i < num_vars_; ++i) e[static_cast<std::size_t>(offset + i)] = gamma[i];
        r.terms_.emplace(MultiIndex(std::move(e)), c);
    }
    return r;
}

namespace {

std::string monomial_string(const MultiIndex& gamma) {
    std::string s;
    for (int i = 0; i < gamma.size(); ++i) {
        if (gamma[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += "x" + std::to_string(i + 1);
        if (gamma[i] > 1) s += "^" + std::to_string(gamma[i]);
    }
    return s;
}

}  // namespace

std::string SparsePolynomial::to_string() const {
    if (terms_.empty()) return "0";

    // Graded lex, highest first: matches how one writes polynomials by hand.
    std::vector<const std::pair<const MultiIndex, Rational>*> order;
    order.reserve(terms_.size());
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
        if (a->first.order() != b->first.order()) return a->first.order() > b->first.order();
        return b->first < a->first;
    });

    std::string s;
    bool first = true;
    for (const auto* t : order) {
        const Rational& c = t->second;
        const std::string mono = monomial_string(t->first);
        const Rational abs_c = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) s += "-";
            first = false;
        } else {
            s += c.sign() < 0 ? " - " : " + ";
        }
        if (mono.empty()) {
            s += abs_c.to_string();
        } else {
            if (abs_c != Rational(1)) s += abs_c.to_string() + "*";
            s += mono;
        }
    }
    return s;
}

}  // namespace segal
