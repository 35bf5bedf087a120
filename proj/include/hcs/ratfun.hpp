#pragma once

#include <map>
#include <optional>
#include <string>

#include "hcs/multipoly.hpp"

namespace hcs {

/// Thrown when an operation hits an identically-zero denominator.
class ZeroDenominator : public ArithmeticError {
public:
    ZeroDenominator() : ArithmeticError("identically zero denominator") {}
};

/// Thrown when evaluating at a pole of the expression.
class PoleError : public ArithmeticError {
public:
    explicit PoleError(const std::string& msg) : ArithmeticError(msg) {}
};

/// Normalized quotient of multivariate polynomials: gcd(num, den) = 1, the
/// denominator is primitive with integer coefficients and positive leading
/// coefficient (graded lex), and 0 is 0/1. Two equal rational functions are
/// bitwise-identical, so == is structural.
class RatFun {
public:
    RatFun() = default;
    explicit RatFun(MultiPoly num);                 // num / 1
    RatFun(MultiPoly num, MultiPoly den);           // normalizes

    static RatFun zero(VarListPtr vars) { return RatFun(MultiPoly::zero(std::move(vars))); }
    static RatFun constant(VarListPtr vars, Rational c) {
        return RatFun(MultiPoly::constant(std::move(vars), std::move(c)));
    }
    static RatFun variable(VarListPtr vars, int index) {
        return RatFun(MultiPoly::variable(std::move(vars), index));
    }

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    const VarListPtr& vars() const { return num_.vars(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.is_constant() && num_.is_constant() && num_.constant_value() == den_.constant_value(); }
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational constant_value() const { return num_.constant_value() / den_.constant_value(); }

    RatFun operator-() const;
    RatFun operator+(const RatFun& o) const;
    RatFun operator-(const RatFun& o) const;
    RatFun operator*(const RatFun& o) const;
    RatFun operator/(const RatFun& o) const;
    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
    RatFun inverse() const;
    RatFun pow(int e) const;

    friend bool operator==(const RatFun& a, const RatFun& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

    RatFun derivative(int var) const;

    /// Composition: every variable is replaced by the given rational function.
    /// All bindings must share one target variable context.
    RatFun substitute(const std::vector<RatFun>& bindings) const;

    Rational evaluate(const std::vector<Rational>& point) const;

    std::string str() const;

private:
    MultiPoly num_;
    MultiPoly den_;
    void normalize_full();
};

/// Restores the invariants on an arbitrary num/den pair (full gcd).
RatFun normalize(MultiPoly num, MultiPoly den);

}  // namespace hcs
