#ifndef SEGAL_RATIONAL_HPP
#define SEGAL_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace segal {

/// Arbitrary-precision integer (factorials, multinomial weights, rational parts).
using Integer = mpz_class;

/// Exact rational scalar. Canonical invariant: lowest terms, denominator > 0.
/// All arithmetic is exact; there is no rounding anywhere in this type.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(int n) : value_(n) {}  // NOLINT: implicit by design, 2 * x etc.
    Rational(long n) : value_(static_cast<signed long>(n)) {}
    Rational(const Integer& n) : value_(n) {}

    Rational(const Integer& num, const Integer& den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }

    /// Parses "n" or "n/d" in base 10.
    static Rational from_string(const std::string& text) {
        mpq_class q;
        if (q.set_str(text, 10) != 0)
            throw std::invalid_argument("Rational: cannot parse '" + text + "'");
        if (q.get_den() == 0) throw std::domain_error("Rational: zero denominator in '" + text + "'");
        q.canonicalize();
        Rational r;
        r.value_ = q;
        return r;
    }

    Integer num() const { return value_.get_num(); }
    Integer den() const { return value_.get_den(); }

    bool is_zero() const { return value_ == 0; }
    int sign() const { return sgn(value_); }

    double to_double() const { return value_.get_d(); }

    std::string to_string() const {
        if (value_.get_den() == 1) return value_.get_num().get_str();
        return value_.get_num().get_str() + "/" + value_.get_den().get_str();
    }

    Rational operator-() const { return Rational(mpq_class(-value_)); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.value_ == 0) throw std::domain_error("Rational: division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

private:
    explicit Rational(const mpq_class& q) : value_(q) {}

    mpq_class value_;  // kept canonical by mpq_class
};

/// r^e with the convention 0^0 = 1.
inline Rational pow(const Rational& r, unsigned int e) {
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), r.num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), r.den().get_mpz_t(), e);
    return Rational(num, den);
}

inline Integer factorial(unsigned int n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

inline Integer binomial(unsigned int n, unsigned int k) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

}  // namespace segal

#endif
