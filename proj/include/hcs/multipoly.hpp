#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hcs/rational.hpp"

namespace hcs {

/// Ordered variable context shared by polynomials. At most kMaxVars symbols.
using VarList = std::vector<std::string>;
using VarListPtr = std::shared_ptr<const VarList>;

inline constexpr int kMaxVars = 8;

VarListPtr make_vars(std::initializer_list<const char*> names);
VarListPtr make_vars(const VarList& names);

/// Exponent vector with cached total degree. Compared in graded
/// lexicographic order (total degree first, then exponents left to right).
class Monomial {
public:
    Monomial() : deg_(0) { e_.fill(0); }

    uint32_t degree() const { return deg_; }
    uint16_t exp(int i) const { return e_[static_cast<size_t>(i)]; }
    void set_exp(int i, uint16_t v) {
        deg_ = deg_ - e_[static_cast<size_t>(i)] + v;
        e_[static_cast<size_t>(i)] = v;
    }
    bool is_constant() const { return deg_ == 0; }

    Monomial operator*(const Monomial& o) const {
        Monomial r;
        for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = static_cast<uint16_t>(e_[i] + o.e_[i]);
        r.deg_ = deg_ + o.deg_;
        return r;
    }
    /// Componentwise quotient; nullopt if any exponent would go negative.
    std::optional<Monomial> divide(const Monomial& o) const {
        Monomial r;
        for (size_t i = 0; i < e_.size(); ++i) {
            if (e_[i] < o.e_[i]) return std::nullopt;
            r.e_[i] = static_cast<uint16_t>(e_[i] - o.e_[i]);
        }
        r.deg_ = deg_ - o.deg_;
        return r;
    }
    Monomial gcd(const Monomial& o) const {
        Monomial r;
        for (size_t i = 0; i < e_.size(); ++i) {
            r.e_[i] = std::min(e_[i], o.e_[i]);
            r.deg_ += r.e_[i];
        }
        return r;
    }
    bool divides(const Monomial& o) const {
        for (size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.deg_ == b.deg_ && a.e_ == b.e_;
    }
    /// Graded lex: a < b iff deg(a) < deg(b), or equal degree and a is
    /// lexicographically smaller in the first differing variable.
    friend bool operator<(const Monomial& a, const Monomial& b) {
        if (a.deg_ != b.deg_) return a.deg_ < b.deg_;
        for (size_t i = 0; i < a.e_.size(); ++i)
            if (a.e_[i] != b.e_[i]) return a.e_[i] < b.e_[i];
        return false;
    }
    friend bool operator>(const Monomial& a, const Monomial& b) { return b < a; }

private:
    std::array<uint16_t, kMaxVars> e_;
    uint32_t deg_;
};

/// Sparse multivariate polynomial over exact rationals. Terms are kept in
/// strictly descending graded-lex order with no zero coefficients, so equal
/// polynomials are bitwise-equal term sequences.
class MultiPoly {
public:
    struct Term {
        Monomial mono;
        Rational coeff;
    };

    MultiPoly() = default;
    explicit MultiPoly(VarListPtr vars) : vars_(std::move(vars)) {}

    static MultiPoly zero(VarListPtr vars) { return MultiPoly(std::move(vars)); }
    static MultiPoly constant(VarListPtr vars, Rational c);
    static MultiPoly variable(VarListPtr vars, int index);
    /// Builds from (exponent vector, coefficient) pairs; merges duplicates.
    static MultiPoly from_terms(VarListPtr vars,
                                const std::vector<std::pair<std::vector<int>, Rational>>& terms);

    const VarListPtr& vars() const { return vars_; }
    int nvars() const { return vars_ ? static_cast<int>(vars_->size()) : 0; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_constant()); }
    /// Constant term value (the whole value if is_constant()).
    Rational constant_value() const;
    int total_degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_[0].mono.degree()); }
    int degree_in(int var) const;
    const Term& leading() const { return terms_.front(); }

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly mul_term(const Monomial& m, const Rational& c) const;
    MultiPoly mul_scalar(const Rational& c) const;
    MultiPoly pow(int e) const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b);
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    MultiPoly derivative(int var) const;
    Rational evaluate(const std::vector<Rational>& point) const;

    /// Positive rational c with (*this)/c integer-coefficient and primitive;
    /// zero polynomial yields 1.
    Rational content() const;
    /// this / content(), sign unchanged.
    MultiPoly primitive_part() const;
    /// Largest monomial dividing every term (zero poly: the unit monomial).
    Monomial monomial_content() const;

    /// Exact division; nullopt when the division leaves a remainder.
    std::optional<MultiPoly> divide_exact(const MultiPoly& d) const;

    std::string str() const;  // canonical printed form, see parse.hpp grammar

    /// Internal: takes ownership of a descending-sorted, zero-free term list.
    static MultiPoly from_sorted(VarListPtr vars, std::vector<Term> terms);

private:
    VarListPtr vars_;
    std::vector<Term> terms_;  // descending graded-lex, no zero coefficients
};

/// GCD over Q[x1..xn], returned primitive with integer coefficients and
/// positive leading coefficient; gcd(0,0) = 0, gcd(f,0) = primitive(f).
MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b);

/// True when the two contexts name the same variables in the same order.
bool same_vars(const VarListPtr& a, const VarListPtr& b);

}  // namespace hcs
