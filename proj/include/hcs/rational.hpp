#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hcs {

/// Thrown on malformed numeric input or division by zero.
class ArithmeticError : public std::runtime_error {
public:
    explicit ArithmeticError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Exact rational number. Always canonical: gcd(|num|, den) = 1, den > 0,
/// zero is 0/1. Arithmetic is arbitrary precision (GMP underneath).
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}  // NOLINT: implicit by design, enables literals
    Rational(long n, long d);
    explicit Rational(mpq_class q);
    explicit Rational(const mpz_class& n) : q_(n) {}

    /// Parses "p", "-p", or "p/q". Throws ArithmeticError on bad input.
    static Rational from_string(const std::string& text);

    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational abs() const { return sign() < 0 ? -*this : *this; }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    Rational pow(long e) const;

    /// Canonical form: "-3/2", "7", "0".
    std::string str() const;

private:
    mpq_class q_;
};

/// gcd of |a|, |b| as a nonnegative integer Rational (gcd(0,0) = 0).
Rational integer_gcd(const Rational& a, const Rational& b);
/// lcm of |a|, |b| as a nonnegative integer Rational.
Rational integer_lcm(const Rational& a, const Rational& b);

}  // namespace hcs
