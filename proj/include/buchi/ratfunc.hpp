#pragma once

// Rational functions num/den over a shared variable universe.
//
// Reduction policy: cancel the numeric content and the common monomial
// factor, then attempt one exact polynomial division each way. Everything
// this project produces has monomial denominators (substitution chains only
// ever divide by single terms), for which this is a full gcd reduction; the
// exact-division attempt additionally collapses quotients like
// (x^2-y^2)/(x-y) that appear when comparing claimed factorizations.

#include "buchi/poly.hpp"

#include <optional>
#include <utility>

namespace buchi {

class RatFunc {
   public:
    RatFunc() = default;
    explicit RatFunc(MultiPoly num) : num_(std::move(num)), den_(MultiPoly::constant(num_.vars(), 1)) {
        normalize();
    }
    RatFunc(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
        num_.check_same_universe(den_);
        if (den_.is_zero()) throw ExactError("RatFunc: zero denominator");
        normalize();
    }

    static RatFunc constant(const VarSetPtr& vars, const Rational& c) {
        return RatFunc(MultiPoly::constant(vars, c));
    }
    static RatFunc variable(const VarSetPtr& vars, const std::string& name) {
        return RatFunc(MultiPoly::variable(vars, name));
    }

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    const VarSetPtr& vars() const { return num_.vars(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }

    MultiPoly as_polynomial() const {
        if (!is_polynomial()) throw ExactError("RatFunc: not a polynomial");
        return num_ * (Rational(1) / den_.constant_value());
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw ExactError("RatFunc: division by zero");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    friend RatFunc operator*(const RatFunc& a, const Rational& c) {
        RatFunc r = a;
        r.num_ *= c;
        r.normalize();
        return r;
    }
    friend RatFunc operator*(const Rational& c, const RatFunc& a) { return a * c; }

    bool operator==(const RatFunc& o) const {
        // canonical after normalize(), but compare cross-multiplied to be safe
        return (num_ * o.den_) == (o.num_ * den_);
    }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    Rational eval(const std::vector<Rational>& point) const {
        Rational d = den_.eval(point);
        if (d == 0) throw ExactError("RatFunc::eval: denominator vanishes at point");
        return num_.eval(point) / d;
    }

    std::string to_string() const {
        if (is_polynomial()) return as_polynomial().to_string();
        return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
    }

   private:
    void normalize() {
        if (num_.is_zero()) {
            den_ = MultiPoly::constant(num_.vars(), 1);
            return;
        }
        Monomial gn = num_.monomial_gcd();
        Monomial gd = den_.monomial_gcd();
        Monomial g(gn.size());
        bool nontrivial = false;
        for (size_t i = 0; i < g.size(); ++i) {
            g[i] = std::min(gn[i], gd[i]);
            nontrivial |= g[i] > 0;
        }
        if (nontrivial) {
            num_ = num_.divide_by_monomial(g);
            den_ = den_.divide_by_monomial(g);
        }
        if (!den_.is_constant()) {
            try {
                MultiPoly q = exact_divide(num_, den_);
                num_ = q;
                den_ = MultiPoly::constant(num_.vars(), 1);
            } catch (const ExactError&) {
                // denominator does not divide numerator; keep the fraction
            }
        }
        // scale so den has content 1 and positive leading coefficient
        Rational c = den_.content();
        if (den_.leading().second < 0) c = -c;
        if (c != 1) {
            Rational inv = Rational(1) / c;
            num_ *= inv;
            den_ *= inv;
        }
    }

    MultiPoly num_;
    MultiPoly den_;
};

// If p == c*q for a nonzero rational c, return c. Both zero gives 1.
inline std::optional<Rational> equal_up_to_scalar(const RatFunc& p, const RatFunc& q) {
    if (p.is_zero() && q.is_zero()) return Rational(1);
    if (p.is_zero() || q.is_zero()) return std::nullopt;
    MultiPoly a = p.num() * q.den();
    MultiPoly b = q.num() * p.den();
    if (a.term_count() != b.term_count()) return std::nullopt;
    std::optional<Rational> scale;
    auto ia = a.terms().begin();
    auto ib = b.terms().begin();
    for (; ia != a.terms().end(); ++ia, ++ib) {
        if (ia->first != ib->first) return std::nullopt;
        Rational c = ia->second / ib->second;
        if (!scale) {
            scale = c;
        } else if (*scale != c) {
            return std::nullopt;
        }
    }
    return scale;
}

// If p == c * m * q for a rational c and a (Laurent) monomial m, return
// (c, m_num, m_den). Used where a claimed determinant is quoted for a
// row-rescaled matrix: the mismatch is always a unit in always-positive
// variables, and gets recorded rather than ignored.
struct MonomialScale {
    Rational coef;
    Monomial num;
    Monomial den;
    bool is_plain_scalar() const { return total_degree(num) == 0 && total_degree(den) == 0; }
};

inline std::optional<MonomialScale> equal_up_to_monomial(const RatFunc& p, const RatFunc& q) {
    if (p.is_zero() && q.is_zero()) {
        size_t n = p.vars()->size();
        return MonomialScale{1, Monomial(n, 0), Monomial(n, 0)};
    }
    if (p.is_zero() || q.is_zero()) return std::nullopt;
    // p = c*m*q  <=>  p.num*q.den = c*m * q.num*p.den with m a Laurent monomial
    MultiPoly a = p.num() * q.den();
    MultiPoly b = q.num() * p.den();
    Monomial ga = a.monomial_gcd();
    Monomial gb = b.monomial_gcd();
    MultiPoly ra = a.divide_by_monomial(ga);
    MultiPoly rb = b.divide_by_monomial(gb);
    auto c = equal_up_to_scalar(RatFunc(ra), RatFunc(rb));
    if (!c) return std::nullopt;
    Monomial mn(ga.size(), 0), md(ga.size(), 0);
    for (size_t i = 0; i < ga.size(); ++i) {
        uint32_t lo = std::min(ga[i], gb[i]);
        mn[i] = ga[i] - lo;
        md[i] = gb[i] - lo;
    }
    return MonomialScale{*c, mn, md};
}

// Substitute rational functions for a subset of variables (by index).
// Unlisted variables stay themselves.
inline RatFunc substitute(const MultiPoly& p, const std::map<size_t, RatFunc>& subs) {
    const VarSetPtr& vars = p.vars();
    for (const auto& [idx, rf] : subs) {
        if (rf.vars() != vars) throw ExactError("substitute: universe mismatch");
        if (idx >= vars->size()) throw ExactError("substitute: variable index out of range");
    }
    RatFunc acc = RatFunc::constant(vars, 0);
    for (const auto& [m, c] : p.terms()) {
        RatFunc t = RatFunc::constant(vars, c);
        Monomial untouched(m.size(), 0);
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            auto it = subs.find(i);
            if (it == subs.end()) {
                untouched[i] = m[i];
            } else {
                for (uint32_t k = 0; k < m[i]; ++k) t *= it->second;
            }
        }
        t *= RatFunc(MultiPoly::term(vars, 1, untouched));
        acc += t;
    }
    return acc;
}

inline RatFunc substitute(const RatFunc& f, const std::map<size_t, RatFunc>& subs) {
    RatFunc n = substitute(f.num(), subs);
    RatFunc d = substitute(f.den(), subs);
    return n / d;
}

}  // namespace buchi
