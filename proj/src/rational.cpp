#include "hcs/rational.hpp"

namespace hcs {

Rational::Rational(long n, long d) {
    if (d == 0) throw ArithmeticError("rational with zero denominator");
    q_ = mpq_class(n, d);
    q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) {
    if (q_.get_den() == 0) throw ArithmeticError("rational with zero denominator");
    q_.canonicalize();
}

Rational Rational::from_string(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ArithmeticError("empty rational literal");
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw ArithmeticError("bad rational literal: '" + text + "'");
    if (q.get_den() == 0) throw ArithmeticError("rational with zero denominator: '" + text + "'");
    q.canonicalize();
    return Rational(std::move(q));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw ArithmeticError("division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero()) {
        if (e < 0) throw ArithmeticError("zero to a negative power");
        return Rational(0);
    }
    mpz_class n, d;
    unsigned long ue = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(n.get_mpz_t(), q_.get_num().get_mpz_t(), ue);
    mpz_pow_ui(d.get_mpz_t(), q_.get_den().get_mpz_t(), ue);
    mpq_class r(n, d);  // already canonical: num/den coprime implies powers coprime
    if (e < 0) r = 1 / r;
    if (sgn(r.get_den()) < 0) { r.get_num() *= -1; r.get_den() *= -1; }
    return Rational(std::move(r));
}

std::string Rational::str() const {
    return q_.get_str();
}

Rational integer_gcd(const Rational& a, const Rational& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.num().get_mpz_t(), b.num().get_mpz_t());
    return Rational(g);
}

Rational integer_lcm(const Rational& a, const Rational& b) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), a.num().get_mpz_t(), b.num().get_mpz_t());
    return Rational(l);
}

}  // namespace hcs
