#include "hcs/multipoly.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace hcs {

VarListPtr make_vars(std::initializer_list<const char*> names) {
    auto v = std::make_shared<VarList>();
    for (const char* n : names) v->push_back(n);
    if (static_cast<int>(v->size()) > kMaxVars)
        throw ArithmeticError("too many variables (max " + std::to_string(kMaxVars) + ")");
    return v;
}

VarListPtr make_vars(const VarList& names) {
    if (static_cast<int>(names.size()) > kMaxVars)
        throw ArithmeticError("too many variables (max " + std::to_string(kMaxVars) + ")");
    return std::make_shared<VarList>(names);
}

bool same_vars(const VarListPtr& a, const VarListPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

static void require_same_vars(const MultiPoly& a, const MultiPoly& b) {
    if (!same_vars(a.vars(), b.vars()))
        throw ArithmeticError("polynomial operands have different variable contexts");
}

MultiPoly MultiPoly::constant(VarListPtr vars, Rational c) {
    MultiPoly p(std::move(vars));
    if (!c.is_zero()) p.terms_.push_back({Monomial(), std::move(c)});
    return p;
}

MultiPoly MultiPoly::variable(VarListPtr vars, int index) {
    if (index < 0 || index >= static_cast<int>(vars->size()))
        throw ArithmeticError("variable index out of range");
    MultiPoly p(std::move(vars));
    Monomial m;
    m.set_exp(index, 1);
    p.terms_.push_back({m, Rational(1)});
    return p;
}

MultiPoly MultiPoly::from_terms(VarListPtr vars,
                                const std::vector<std::pair<std::vector<int>, Rational>>& terms) {
    std::vector<Term> out;
    out.reserve(terms.size());
    for (const auto& [exps, c] : terms) {
        if (static_cast<int>(exps.size()) > static_cast<int>(vars->size()))
            throw ArithmeticError("exponent vector longer than variable list");
        Monomial m;
        for (size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] < 0) throw ArithmeticError("negative exponent in term");
            m.set_exp(static_cast<int>(i), static_cast<uint16_t>(exps[i]));
        }
        out.push_back({m, c});
    }
    std::sort(out.begin(), out.end(),
              [](const Term& x, const Term& y) { return y.mono < x.mono; });
    std::vector<Term> merged;
    for (auto& t : out) {
        if (!merged.empty() && merged.back().mono == t.mono)
            merged.back().coeff += t.coeff;
        else
            merged.push_back(std::move(t));
    }
    std::erase_if(merged, [](const Term& t) { return t.coeff.is_zero(); });
    return from_sorted(std::move(vars), std::move(merged));
}

MultiPoly MultiPoly::from_sorted(VarListPtr vars, std::vector<Term> terms) {
    MultiPoly p(std::move(vars));
    p.terms_ = std::move(terms);
    return p;
}

Rational MultiPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!terms_.back().mono.is_constant()) return Rational(0);
    return terms_.back().coeff;
}

int MultiPoly::degree_in(int var) const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.exp(var)));
    return d;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(vars_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono, -t.coeff});
    return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    require_same_vars(*this, o);
    MultiPoly r(vars_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        const Term& x = terms_[i];
        const Term& y = o.terms_[j];
        if (x.mono == y.mono) {
            Rational c = x.coeff + y.coeff;
            if (!c.is_zero()) r.terms_.push_back({x.mono, std::move(c)});
            ++i; ++j;
        } else if (y.mono < x.mono) {
            r.terms_.push_back(x); ++i;
        } else {
            r.terms_.push_back(y); ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    return *this + (-o);
}

MultiPoly MultiPoly::mul_term(const Monomial& m, const Rational& c) const {
    if (c.is_zero()) return MultiPoly(vars_);
    MultiPoly r(vars_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
    return r;
}

MultiPoly MultiPoly::mul_scalar(const Rational& c) const {
    return mul_term(Monomial(), c);
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    require_same_vars(*this, o);
    if (is_zero() || o.is_zero()) return MultiPoly(vars_);
    const MultiPoly& small = terms_.size() <= o.terms_.size() ? *this : o;
    const MultiPoly& big = terms_.size() <= o.terms_.size() ? o : *this;
    if (small.terms_.size() == 1)
        return big.mul_term(small.terms_[0].mono, small.terms_[0].coeff);

    // Block accumulation: products of a block are sorted and merged into the
    // accumulator, bounding peak memory on large operands.
    const size_t kBlock = 128;
    MultiPoly acc(vars_);
    std::vector<Term> buf;
    for (size_t start = 0; start < small.terms_.size(); start += kBlock) {
        size_t stop = std::min(small.terms_.size(), start + kBlock);
        buf.clear();
        buf.reserve((stop - start) * big.terms_.size());
        for (size_t i = start; i < stop; ++i)
            for (const auto& t : big.terms_)
                buf.push_back({t.mono * small.terms_[i].mono, t.coeff * small.terms_[i].coeff});
        std::sort(buf.begin(), buf.end(),
                  [](const Term& x, const Term& y) { return y.mono < x.mono; });
        std::vector<Term> merged;
        merged.reserve(buf.size());
        for (auto& t : buf) {
            if (!merged.empty() && merged.back().mono == t.mono)
                merged.back().coeff += t.coeff;
            else
                merged.push_back(std::move(t));
        }
        std::erase_if(merged, [](const Term& t) { return t.coeff.is_zero(); });
        acc = acc + from_sorted(vars_, std::move(merged));
    }
    return acc;
}

MultiPoly MultiPoly::pow(int e) const {
    if (e < 0) throw ArithmeticError("negative polynomial power");
    MultiPoly r = constant(vars_, Rational(1));
    MultiPoly base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (!same_vars(a.vars_, b.vars_)) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    for (size_t i = 0; i < a.terms_.size(); ++i)
        if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff)
            return false;
    return true;
}

MultiPoly MultiPoly::derivative(int var) const {
    MultiPoly r(vars_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        uint16_t e = t.mono.exp(var);
        if (e == 0) continue;
        Monomial m = t.mono;
        m.set_exp(var, static_cast<uint16_t>(e - 1));
        r.terms_.push_back({m, t.coeff * Rational(static_cast<long>(e))});
    }
    // differentiating preserves descending graded-lex within the surviving terms
    return r;
}

Rational MultiPoly::evaluate(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != nvars())
        throw ArithmeticError("evaluation point has wrong dimension");
    // cache powers per variable
    std::vector<std::vector<Rational>> pows(point.size());
    for (size_t v = 0; v < point.size(); ++v) {
        int maxe = degree_in(static_cast<int>(v));
        auto& p = pows[v];
        p.reserve(static_cast<size_t>(std::max(maxe, 0)) + 1);
        p.push_back(Rational(1));
        for (int e = 1; e <= maxe; ++e) p.push_back(p.back() * point[v]);
    }
    Rational acc(0);
    for (const auto& t : terms_) {
        Rational prod = t.coeff;
        for (size_t v = 0; v < point.size(); ++v) {
            uint16_t e = t.mono.exp(static_cast<int>(v));
            if (e) prod *= pows[v][e];
        }
        acc += prod;
    }
    return acc;
}

Rational MultiPoly::content() const {
    if (terms_.empty()) return Rational(1);
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& t : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.den().get_mpz_t());
    }
    mpq_class c(num_gcd, den_lcm);
    c.canonicalize();
    return Rational(std::move(c));
}

MultiPoly MultiPoly::primitive_part() const {
    if (terms_.empty()) return *this;
    Rational c = content();
    MultiPoly r(vars_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono, t.coeff / c});
    return r;
}

Monomial MultiPoly::monomial_content() const {
    if (terms_.empty()) return Monomial();
    Monomial g = terms_[0].mono;
    for (size_t i = 1; i < terms_.size() && !g.is_constant(); ++i) g = g.gcd(terms_[i].mono);
    return g;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& d) const {
    require_same_vars(*this, d);
    if (d.is_zero()) throw ArithmeticError("polynomial division by zero");
    if (is_zero()) return MultiPoly(vars_);
    if (d.is_constant()) return mul_scalar(Rational(1) / d.constant_value());
    if (d.terms_.size() == 1) {
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (const auto& t : terms_) {
            auto m = t.mono.divide(d.terms_[0].mono);
            if (!m) return std::nullopt;
            out.push_back({*m, t.coeff / d.terms_[0].coeff});
        }
        return from_sorted(vars_, std::move(out));
    }

    MultiPoly rem = *this;
    std::vector<Term> quot;
    const Term& dl = d.leading();
    while (!rem.is_zero()) {
        const Term& rl = rem.leading();
        auto m = rl.mono.divide(dl.mono);
        if (!m) return std::nullopt;  // exact divisor would keep leading terms divisible
        Rational c = rl.coeff / dl.coeff;
        quot.push_back({*m, c});
        rem = rem - d.mul_term(*m, c);
    }
    // quotient terms are produced in strictly descending order
    return from_sorted(vars_, std::move(quot));
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Rational c = t.coeff;
        if (first) {
            if (c.sign() < 0) { os << "-"; c = -c; }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
            if (c.sign() < 0) c = -c;
        }
        std::string mono;
        for (int v = 0; v < nvars(); ++v) {
            uint16_t e = t.mono.exp(v);
            if (e == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += (*vars_)[static_cast<size_t>(v)];
            if (e > 1) mono += "^" + std::to_string(e);
        }
        if (mono.empty()) {
            os << c.str();
        } else if (c.is_one()) {
            os << mono;
        } else {
            os << c.str() << "*" << mono;
        }
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// GCD: content/primitive-part recursion with a subresultant PRS in the
// selected main variable.
// ---------------------------------------------------------------------------

namespace {

// fix sign so the graded-lex leading coefficient is positive
MultiPoly sign_fixed(const MultiPoly& p) {
    if (!p.is_zero() && p.leading().coeff.sign() < 0) return -p;
    return p;
}

MultiPoly canonical_primitive(const MultiPoly& p) {
    return sign_fixed(p.primitive_part());
}

// view of p as a univariate polynomial in variable v with MultiPoly coefficients
std::vector<MultiPoly> to_univariate(const MultiPoly& p, int v) {
    int d = p.degree_in(v);
    std::vector<std::vector<MultiPoly::Term>> buckets(static_cast<size_t>(d) + 1);
    for (const auto& t : p.terms()) {
        uint16_t e = t.mono.exp(v);
        Monomial m = t.mono;
        m.set_exp(v, 0);
        buckets[e].push_back({m, t.coeff});
    }
    std::vector<MultiPoly> out;
    out.reserve(buckets.size());
    for (auto& b : buckets) {
        std::sort(b.begin(), b.end(), [](const MultiPoly::Term& x, const MultiPoly::Term& y) {
            return y.mono < x.mono;
        });
        out.push_back(MultiPoly::from_sorted(p.vars(), std::move(b)));
    }
    return out;
}

MultiPoly from_univariate(const std::vector<MultiPoly>& c, int v, const VarListPtr& vars) {
    MultiPoly acc(vars);
    for (size_t e = 0; e < c.size(); ++e) {
        if (c[e].is_zero()) continue;
        Monomial m;
        m.set_exp(v, static_cast<uint16_t>(e));
        acc = acc + c[e].mul_term(m, Rational(1));
    }
    return acc;
}

int uni_deg(const std::vector<MultiPoly>& u) {
    for (int i = static_cast<int>(u.size()) - 1; i >= 0; --i)
        if (!u[i].is_zero()) return i;
    return -1;
}

void uni_trim(std::vector<MultiPoly>& u) {
    while (!u.empty() && u.back().is_zero()) u.pop_back();
}

// pseudo-remainder: lc(b)^(deg a - deg b + 1) * a  =  q*b + r,  deg r < deg b
std::vector<MultiPoly> pseudo_rem(std::vector<MultiPoly> a, const std::vector<MultiPoly>& b) {
    int db = static_cast<int>(b.size()) - 1;
    const MultiPoly& lb = b.back();
    int e = static_cast<int>(a.size()) - 1 - db + 1;
    while (true) {
        uni_trim(a);
        int da = static_cast<int>(a.size()) - 1;
        if (da < db) break;
        const MultiPoly la = a.back();
        // a = lb*a - la * x^(da-db) * b
        for (auto& c : a) c = c * lb;
        for (int i = 0; i <= db; ++i) {
            size_t k = static_cast<size_t>(da - db + i);
            a[k] = a[k] - la * b[static_cast<size_t>(i)];
        }
        a.pop_back();  // leading term cancels exactly
        --e;
    }
    if (e > 0) {
        MultiPoly f = lb.pow(e);
        for (auto& c : a) c = c * f;
    }
    uni_trim(a);
    return a;
}

MultiPoly exact_div_checked(const MultiPoly& a, const MultiPoly& d) {
    auto q = a.divide_exact(d);
    if (!q) throw ArithmeticError("internal: inexact division in gcd");
    return *q;
}

MultiPoly gcd_many(const std::vector<MultiPoly>& polys) {
    MultiPoly g(polys.front().vars());
    for (const auto& p : polys) {
        g = poly_gcd(g, p);
        if (!g.is_zero() && g.is_constant()) break;
    }
    return g;
}

}  // namespace

MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b) {
    require_same_vars(a, b);
    const VarListPtr& vars = a.vars();
    if (a.is_zero()) return canonical_primitive(b);
    if (b.is_zero()) return canonical_primitive(a);

    Monomial ma = a.monomial_content();
    Monomial mb = b.monomial_content();
    Monomial mg = ma.gcd(mb);

    MultiPoly A = canonical_primitive(a.divide_exact(MultiPoly::from_sorted(
        vars, {{ma, Rational(1)}})).value());
    MultiPoly B = canonical_primitive(b.divide_exact(MultiPoly::from_sorted(
        vars, {{mb, Rational(1)}})).value());

    MultiPoly unit = MultiPoly::from_sorted(vars, {{mg, Rational(1)}});
    if (A.is_constant() || B.is_constant()) return unit;
    if (A == B) return A.mul_term(mg, Rational(1));

    // cheap one-sided divisibility probes catch most normalization calls
    if (A.terms().size() <= B.terms().size()) {
        if (B.divide_exact(A)) return A.mul_term(mg, Rational(1));
    } else if (A.divide_exact(B)) {
        return B.mul_term(mg, Rational(1));
    }

    // main variable: present in both, smallest max-degree for a short PRS
    int best = -1;
    long best_key = 0;
    for (int v = 0; v < A.nvars(); ++v) {
        int da = A.degree_in(v), db = B.degree_in(v);
        if (da <= 0 || db <= 0) continue;
        long key = static_cast<long>(std::max(da, db)) * 1000 + std::min(da, db);
        if (best < 0 || key < best_key) { best = v; best_key = key; }
    }
    if (best < 0) return unit;  // no shared variable: primitive parts are coprime

    auto ua = to_univariate(A, best);
    auto ub = to_univariate(B, best);
    MultiPoly cont_a = gcd_many(ua);
    MultiPoly cont_b = gcd_many(ub);
    MultiPoly cont = poly_gcd(cont_a, cont_b);
    for (auto& c : ua) c = exact_div_checked(c, cont_a);
    for (auto& c : ub) c = exact_div_checked(c, cont_b);

    if (uni_deg(ua) < uni_deg(ub)) std::swap(ua, ub);

    // Brown's subresultant PRS
    MultiPoly g = MultiPoly::constant(vars, Rational(1));
    MultiPoly h = g;
    while (true) {
        int delta = uni_deg(ua) - uni_deg(ub);
        std::vector<MultiPoly> r = pseudo_rem(ua, ub);
        if (uni_deg(r) < 0) break;                      // ub divides: gcd is pp(ub)
        if (uni_deg(r) == 0) { ub = {MultiPoly::constant(vars, Rational(1))}; break; }
        ua = std::move(ub);
        MultiPoly divisor = g * h.pow(delta);
        ub = std::move(r);
        for (auto& c : ub) c = exact_div_checked(c, divisor);
        g = ua.back();
        if (delta == 1) {
            h = g;
        } else if (delta > 1) {
            h = exact_div_checked(g.pow(delta), h.pow(delta - 1));
        }
    }

    MultiPoly pp = from_univariate(ub, best, vars);
    MultiPoly pp_cont = gcd_many(to_univariate(pp, best));
    pp = exact_div_checked(pp, pp_cont);
    MultiPoly result = canonical_primitive(cont * pp);
    return result.mul_term(mg, Rational(1));
}

}  // namespace hcs
