#include "hcs/ratfun.hpp"

#include <cassert>

namespace hcs {

namespace {

MultiPoly one_poly(const VarListPtr& vars) {
    return MultiPoly::constant(vars, Rational(1));
}

MultiPoly exact_div(const MultiPoly& a, const MultiPoly& d) {
    auto q = a.divide_exact(d);
    if (!q) throw ArithmeticError("internal: inexact division in rational-function arithmetic");
    return *q;
}

}  // namespace

RatFun::RatFun(MultiPoly num) : num_(std::move(num)), den_(one_poly(num_.vars())) {}

RatFun::RatFun(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    normalize_full();
}

void RatFun::normalize_full() {
    if (!same_vars(num_.vars(), den_.vars()))
        throw ArithmeticError("numerator and denominator have different variable contexts");
    if (den_.is_zero()) throw ZeroDenominator();
    if (num_.is_zero()) {
        den_ = one_poly(num_.vars());
        return;
    }
    MultiPoly g = poly_gcd(num_, den_);
    if (!g.is_constant() || !g.constant_value().is_one()) {
        num_ = exact_div(num_, g);
        den_ = exact_div(den_, g);
    }
    // canonical scale: denominator primitive-integer with positive leading coeff
    Rational c = den_.content();
    if (den_.leading().coeff.sign() < 0) c = -c;
    if (!c.is_one()) {
        den_ = den_.mul_scalar(Rational(1) / c);
        num_ = num_.mul_scalar(Rational(1) / c);
    }
}

RatFun normalize(MultiPoly num, MultiPoly den) {
    return RatFun(std::move(num), std::move(den));
}

RatFun RatFun::operator-() const {
    RatFun r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFun RatFun::operator+(const RatFun& o) const {
    if (!same_vars(vars(), o.vars()))
        throw ArithmeticError("operands have different variable contexts");
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    // a/b + c/d with g = gcd(b,d): numerator a*(d/g) + c*(b/g) can only share
    // factors with g, so one small gcd restores the invariants.
    MultiPoly g = poly_gcd(den_, o.den_);
    RatFun r;
    if (g.is_constant()) {
        r.num_ = num_ * o.den_ + o.num_ * den_;
        r.den_ = den_ * o.den_;
        if (r.num_.is_zero()) { r.den_ = one_poly(vars()); return r; }
    } else {
        MultiPoly b1 = exact_div(den_, g);
        MultiPoly d1 = exact_div(o.den_, g);
        MultiPoly n = num_ * d1 + o.num_ * b1;
        if (n.is_zero()) { r.num_ = n; r.den_ = one_poly(vars()); return r; }
        MultiPoly g2 = poly_gcd(n, g);
        if (g2.is_constant()) {
            r.num_ = std::move(n);
            r.den_ = den_ * d1;
        } else {
            r.num_ = exact_div(n, g2);
            r.den_ = exact_div(den_, g2) * d1;
        }
    }
    // scale normalization only; coprimality is already guaranteed
    Rational c = r.den_.content();
    if (r.den_.leading().coeff.sign() < 0) c = -c;
    if (!c.is_one()) {
        r.den_ = r.den_.mul_scalar(Rational(1) / c);
        r.num_ = r.num_.mul_scalar(Rational(1) / c);
    }
    return r;
}

RatFun RatFun::operator-(const RatFun& o) const {
    return *this + (-o);
}

RatFun RatFun::operator*(const RatFun& o) const {
    if (!same_vars(vars(), o.vars()))
        throw ArithmeticError("operands have different variable contexts");
    if (is_zero() || o.is_zero()) return zero(vars());
    // cross-cancel: gcd(a,d) and gcd(c,b); the reduced product is coprime.
    MultiPoly g1 = poly_gcd(num_, o.den_);
    MultiPoly g2 = poly_gcd(o.num_, den_);
    MultiPoly a = g1.is_constant() ? num_ : exact_div(num_, g1);
    MultiPoly d = g1.is_constant() ? o.den_ : exact_div(o.den_, g1);
    MultiPoly c = g2.is_constant() ? o.num_ : exact_div(o.num_, g2);
    MultiPoly b = g2.is_constant() ? den_ : exact_div(den_, g2);
    RatFun r;
    r.num_ = a * c;
    r.den_ = b * d;
    Rational k = r.den_.content();
    if (r.den_.leading().coeff.sign() < 0) k = -k;
    if (!k.is_one()) {
        r.den_ = r.den_.mul_scalar(Rational(1) / k);
        r.num_ = r.num_.mul_scalar(Rational(1) / k);
    }
    return r;
}

RatFun RatFun::inverse() const {
    if (is_zero()) throw ZeroDenominator();
    RatFun r;
    r.num_ = den_;
    r.den_ = num_;
    Rational c = r.den_.content();
    if (r.den_.leading().coeff.sign() < 0) c = -c;
    if (!c.is_one()) {
        r.den_ = r.den_.mul_scalar(Rational(1) / c);
        r.num_ = r.num_.mul_scalar(Rational(1) / c);
    }
    return r;
}

RatFun RatFun::operator/(const RatFun& o) const {
    if (o.is_zero()) throw ZeroDenominator();
    return *this * o.inverse();
}

RatFun RatFun::pow(int e) const {
    if (e == 0) return constant(vars(), Rational(1));
    if (e < 0) return inverse().pow(-e);
    // num/den stay coprime under powers
    RatFun r;
    r.num_ = num_.pow(e);
    r.den_ = den_.pow(e);
    return r;
}

RatFun RatFun::derivative(int var) const {
    // (a/b)' = (a'b - a b')/b^2
    MultiPoly n = num_.derivative(var) * den_ - num_ * den_.derivative(var);
    if (n.is_zero()) return zero(vars());
    // two gcd passes against b fully reduce n/b^2: the first clears factors up
    // to multiplicity v_p(b), the second the excess beyond it
    MultiPoly g1 = poly_gcd(n, den_);
    MultiPoly n1 = g1.is_constant() ? std::move(n) : exact_div(n, g1);
    MultiPoly g2 = poly_gcd(n1, den_);
    MultiPoly n2 = g2.is_constant() ? std::move(n1) : exact_div(n1, g2);
    MultiPoly d = (g1.is_constant() ? den_ : exact_div(den_, g1)) *
                  (g2.is_constant() ? den_ : exact_div(den_, g2));
    RatFun r;
    r.num_ = std::move(n2);
    r.den_ = std::move(d);
    Rational c = r.den_.content();
    if (r.den_.leading().coeff.sign() < 0) c = -c;
    if (!c.is_one()) {
        r.den_ = r.den_.mul_scalar(Rational(1) / c);
        r.num_ = r.num_.mul_scalar(Rational(1) / c);
    }
    return r;
}

RatFun RatFun::substitute(const std::vector<RatFun>& bindings) const {
    if (static_cast<int>(bindings.size()) != num_.nvars())
        throw ArithmeticError("binding count does not match variable count");
    VarListPtr target = bindings.empty() ? vars() : bindings[0].vars();
    for (const auto& b : bindings)
        if (!same_vars(b.vars(), target))
            throw ArithmeticError("bindings have mixed variable contexts");

    auto eval_poly = [&](const MultiPoly& p) {
        // cache binding powers
        std::vector<std::vector<RatFun>> pows(bindings.size());
        for (size_t v = 0; v < bindings.size(); ++v) {
            int maxe = p.degree_in(static_cast<int>(v));
            auto& pw = pows[v];
            pw.push_back(RatFun::constant(target, Rational(1)));
            for (int e = 1; e <= maxe; ++e) pw.push_back(pw.back() * bindings[v]);
        }
        RatFun acc = RatFun::zero(target);
        for (const auto& t : p.terms()) {
            RatFun prod = RatFun::constant(target, t.coeff);
            for (size_t v = 0; v < bindings.size(); ++v) {
                uint16_t e = t.mono.exp(static_cast<int>(v));
                if (e) prod = prod * pows[v][e];
            }
            acc = acc + prod;
        }
        return acc;
    };

    RatFun dn = eval_poly(den_);
    if (dn.is_zero()) throw ZeroDenominator();
    return eval_poly(num_) / dn;
}

Rational RatFun::evaluate(const std::vector<Rational>& point) const {
    Rational d = den_.evaluate(point);
    if (d.is_zero()) throw PoleError("evaluation point lies on a pole (denominator vanishes)");
    return num_.evaluate(point) / d;
}

std::string RatFun::str() const {
    if (den_.is_constant() && den_.constant_value().is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace hcs
