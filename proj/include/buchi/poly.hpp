#pragma once

// Sparse multivariate polynomials over Q with a declared variable universe.
//
// Every polynomial carries a shared pointer to its VarSet; arithmetic between
// polynomials from different universes is an error rather than a silent
// symbol merge. Terms are kept in a map ordered by graded lexicographic
// order, which fixes the canonical text form and the sign normalization of
// rational functions downstream.

#include "buchi/numbers.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <sstream>
#include <utility>
#include <vector>

namespace buchi {

class VarSet {
   public:
    explicit VarSet(std::vector<std::string> names) : names_(std::move(names)) {
        for (size_t i = 0; i < names_.size(); ++i) {
            if (index_.count(names_[i])) throw ExactError("duplicate variable " + names_[i]);
            index_[names_[i]] = i;
        }
    }

    size_t size() const { return names_.size(); }
    const std::string& name(size_t i) const { return names_.at(i); }
    size_t index(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) throw ExactError("unknown variable " + name);
        return it->second;
    }
    bool has(const std::string& name) const { return index_.count(name) != 0; }

   private:
    std::vector<std::string> names_;
    std::map<std::string, size_t> index_;
};

using VarSetPtr = std::shared_ptr<const VarSet>;

inline VarSetPtr make_vars(std::vector<std::string> names) {
    return std::make_shared<const VarSet>(std::move(names));
}

// Indexed variable family t1..tN (or s0..s31 with lo=0).
inline VarSetPtr make_indexed_vars(const std::string& stem, int lo, int hi) {
    std::vector<std::string> names;
    for (int i = lo; i <= hi; ++i) names.push_back(stem + std::to_string(i));
    return make_vars(std::move(names));
}

using Monomial = std::vector<uint32_t>;

inline uint64_t total_degree(const Monomial& m) {
    uint64_t d = 0;
    for (auto e : m) d += e;
    return d;
}

// Graded lexicographic: compare total degree, then exponents left to right.
struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        uint64_t da = total_degree(a), db = total_degree(b);
        if (da != db) return da > db;
        return a > b;
    }
};

class MultiPoly {
   public:
    using TermMap = std::map<Monomial, Rational, GrlexGreater>;

    MultiPoly() = default;
    explicit MultiPoly(VarSetPtr vars) : vars_(std::move(vars)) {}

    static MultiPoly constant(VarSetPtr vars, const Rational& c) {
        MultiPoly p(std::move(vars));
        if (c != 0) p.terms_[Monomial(p.vars_->size(), 0)] = c;
        return p;
    }

    static MultiPoly variable(VarSetPtr vars, const std::string& name, uint32_t power = 1) {
        MultiPoly p(vars);
        Monomial m(vars->size(), 0);
        m[vars->index(name)] = power;
        p.terms_[m] = 1;
        return p;
    }

    static MultiPoly term(VarSetPtr vars, const Rational& c, const Monomial& m) {
        MultiPoly p(vars);
        if (m.size() != vars->size()) throw ExactError("monomial arity mismatch");
        if (c != 0) p.terms_[m] = c;
        return p;
    }

    const VarSetPtr& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
    }
    Rational constant_value() const {
        if (terms_.empty()) return 0;
        if (!is_constant()) throw ExactError("polynomial is not constant");
        return terms_.begin()->second;
    }
    bool is_single_term() const { return terms_.size() == 1; }

    // Leading term under grlex.
    const std::pair<const Monomial, Rational>& leading() const {
        if (terms_.empty()) throw ExactError("leading term of zero polynomial");
        return *terms_.begin();
    }

    void check_same_universe(const MultiPoly& other) const {
        if (vars_ != other.vars_) {
            // distinct shared sets with identical contents still count as a mix-up
            throw ExactError("variable universe mismatch");
        }
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        check_same_universe(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        check_same_universe(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

    MultiPoly operator-() const {
        MultiPoly r(vars_);
        for (const auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        a.check_same_universe(b);
        MultiPoly r(a.vars_);
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m(ma.size());
                for (size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
                r.add_term(m, ca * cb);
            }
        }
        return r;
    }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    MultiPoly& operator*=(const Rational& c) {
        if (c == 0) {
            terms_.clear();
        } else {
            for (auto& [m, coef] : terms_) coef *= c;
        }
        return *this;
    }
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }

    MultiPoly pow(uint32_t e) const {
        MultiPoly r = constant(vars_, 1);
        MultiPoly base = *this;
        while (e) {
            if (e & 1) r *= base;
            base = (e >>= 1) ? base * base : base;
        }
        return r;
    }

    bool operator==(const MultiPoly& o) const {
        if (vars_ != o.vars_) return false;
        return terms_ == o.terms_;
    }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    // Exact multivariate division: repeatedly cancel the leading term.
    // Throws DivisionNotExact (as ExactError) when the remainder is nonzero.
    friend MultiPoly exact_divide(const MultiPoly& a, const MultiPoly& b) {
        a.check_same_universe(b);
        if (b.is_zero()) throw ExactError("exact_divide: division by zero polynomial");
        MultiPoly q(a.vars_);
        MultiPoly rem = a;
        const auto& [lm, lc] = b.leading();
        while (!rem.is_zero()) {
            const auto& [rm, rc] = rem.leading();
            Monomial qm(rm.size());
            for (size_t i = 0; i < rm.size(); ++i) {
                if (rm[i] < lm[i]) throw ExactError("DivisionNotExact");
                qm[i] = rm[i] - lm[i];
            }
            Rational qc = rc / lc;
            MultiPoly t = term(a.vars_, qc, qm);
            q += t;
            rem -= t * b;
        }
        return q;
    }

    // Substitute exact rational values for every variable.
    Rational eval(const std::vector<Rational>& point) const {
        if (point.size() != vars_->size()) throw ExactError("eval: wrong point arity");
        Rational acc = 0;
        for (const auto& [m, c] : terms_) {
            Rational t = c;
            for (size_t i = 0; i < m.size(); ++i) {
                for (uint32_t k = 0; k < m[i]; ++k) t *= point[i];
            }
            acc += t;
        }
        return acc;
    }

    Rational content() const {
        Rational g = 0;
        for (const auto& [m, c] : terms_) {
            Integer n = numerator(c) < 0 ? Integer(-numerator(c)) : numerator(c);
            g = (g == 0) ? Rational(n, denominator(c))
                         : Rational(igcd(numerator(g), n),
                                    denominator(g) * denominator(c) / igcd(denominator(g), denominator(c)));
        }
        return g;
    }

    // Componentwise min of all exponent vectors (the monomial content).
    Monomial monomial_gcd() const {
        if (terms_.empty()) return Monomial(vars_->size(), 0);
        Monomial g = terms_.begin()->first;
        for (const auto& [m, c] : terms_) {
            for (size_t i = 0; i < g.size(); ++i) g[i] = std::min(g[i], m[i]);
        }
        return g;
    }

    MultiPoly divide_by_monomial(const Monomial& g) const {
        MultiPoly r(vars_);
        for (const auto& [m, c] : terms_) {
            Monomial n(m.size());
            for (size_t i = 0; i < m.size(); ++i) {
                if (m[i] < g[i]) throw ExactError("divide_by_monomial: not divisible");
                n[i] = m[i] - g[i];
            }
            r.terms_[n] = c;
        }
        return r;
    }

    // Canonical text form: terms in grlex order, `coef*var^k*...`.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            Rational a = c;
            if (first) {
                if (a < 0) {
                    out << "-";
                    a = -a;
                }
            } else {
                out << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            first = false;
            bool has_vars = total_degree(m) > 0;
            bool coef_shown = (a != 1) || !has_vars;
            if (coef_shown) out << a;
            bool need_star = coef_shown;
            for (size_t i = 0; i < m.size(); ++i) {
                if (m[i] == 0) continue;
                if (need_star) out << "*";
                out << vars_->name(i);
                if (m[i] > 1) out << "^" << m[i];
                need_star = true;
            }
        }
        return out.str();
    }

    static MultiPoly parse(const VarSetPtr& vars, const std::string& text);

   private:
    void add_term(const Monomial& m, const Rational& c) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            if (c != 0) terms_[m] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    VarSetPtr vars_;
    TermMap terms_;
};

// Parser for the canonical form above (and small extensions: leading '+',
// whitespace). Round-trips with to_string.
inline MultiPoly MultiPoly::parse(const VarSetPtr& vars, const std::string& text) {
    MultiPoly acc(vars);
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i == text.size()) throw ExactError("parse: empty polynomial");
    bool any = false;
    while (i < text.size()) {
        skip_ws();
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            if (text[i] == '-') sign = -1;
            ++i;
            skip_ws();
        } else if (any) {
            throw ExactError("parse: expected '+' or '-' at position " + std::to_string(i));
        }
        Rational coef = 1;
        Monomial m(vars->size(), 0);
        bool saw_factor = false;
        while (true) {
            skip_ws();
            if (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])))) {
                size_t j = i;
                while (j < text.size() && (std::isdigit(static_cast<unsigned char>(text[j])) || text[j] == '/')) ++j;
                std::string num = text.substr(i, j - i);
                i = j;
                auto slash = num.find('/');
                if (slash == std::string::npos) {
                    coef *= Rational(parse_integer(num));
                } else {
                    coef *= Rational(parse_integer(num.substr(0, slash)), parse_integer(num.substr(slash + 1)));
                }
                saw_factor = true;
            } else if (i < text.size() && (std::isalpha(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
                size_t j = i;
                while (j < text.size() &&
                       (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
                    ++j;
                }
                std::string name = text.substr(i, j - i);
                i = j;
                uint32_t e = 1;
                skip_ws();
                if (i < text.size() && text[i] == '^') {
                    ++i;
                    skip_ws();
                    size_t k = i;
                    while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
                    if (k == i) throw ExactError("parse: exponent expected");
                    e = static_cast<uint32_t>(std::stoul(text.substr(i, k - i)));
                    i = k;
                }
                m[vars->index(name)] += e;
                saw_factor = true;
            } else {
                break;
            }
            skip_ws();
            if (i < text.size() && text[i] == '*') {
                ++i;
                continue;
            }
            break;
        }
        if (!saw_factor) throw ExactError("parse: empty term");
        acc += MultiPoly::term(vars, sign * coef, m);
        any = true;
        skip_ws();
    }
    return acc;
}

}  // namespace buchi
