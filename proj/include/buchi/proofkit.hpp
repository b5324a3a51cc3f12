#pragma once

// Symbolic verification of the quintuple non-existence chain: the five
// sub-quadruple Pfaffian systems and their calibration identities, the ten
// structural equations and the 10x10 / 10x5 matrices M and calM they induce,
// the catalog of factored 5x5 sub-determinants, and the Type I / Type II
// elimination chains ending in forced-zero conclusions.
//
// Every display from the source material is transcribed exactly once into a
// data table here and cross-validated against machinery that re-derives the
// same object from the defining relations, so a transcription slip cannot
// silently pass. Where a printed display provably deviates from its own
// derivation (a handful of sign/constant misprints), the comparison records
// the deviation and the verified derived form is used downstream.

#include "buchi/matrix.hpp"
#include "buchi/quadsys.hpp"
#include "buchi/report.hpp"

#include <array>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace buchi {

// --- structural constants ----------------------------------------------------

struct ConstAssign {
    Rational b1, b2, b3, d1, d2, g;

    std::string label() const {
        return "b1=" + rational_str(b1) + ",b2=" + rational_str(b2) + ",b3=" + rational_str(b3) +
               ",d1=" + rational_str(d1) + ",d2=" + rational_str(d2) + ",g=" + rational_str(g);
    }
};

// Full enumeration: beta in {1,2}^3, delta in {1,2,3}^2, gamma in {1,2,4}
// (216 assignments; 108 once beta1 = beta3 is imposed). The deltas realized
// by integral tuples lie in {1,3}; the identities are rational in the
// constants and are checked on the full grid.
inline std::vector<ConstAssign> all_assignments(bool b1_eq_b3) {
    std::vector<ConstAssign> out;
    for (int b1 : {1, 2})
        for (int b3 : {1, 2}) {
            if (b1_eq_b3 && b1 != b3) continue;
            for (int b2 : {1, 2})
                for (int d1 : {1, 2, 3})
                    for (int d2 : {1, 2, 3})
                        for (int g : {1, 2, 4})
                            out.push_back({b1, b2, b3, d1, d2, g});
        }
    return out;
}

// Filter strings like "b1=1,b3=2,g=4".
inline bool assignment_matches(const ConstAssign& c, const std::string& filter) {
    if (filter.empty()) return true;
    size_t pos = 0;
    while (pos < filter.size()) {
        size_t comma = filter.find(',', pos);
        std::string item = filter.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        pos = comma == std::string::npos ? filter.size() : comma + 1;
        size_t eq = item.find('=');
        if (eq == std::string::npos) throw ExactError("bad assignment filter item: " + item);
        std::string key = item.substr(0, eq);
        Rational want(parse_integer(item.substr(eq + 1)));
        Rational have;
        if (key == "b1") have = c.b1;
        else if (key == "b2") have = c.b2;
        else if (key == "b3") have = c.b3;
        else if (key == "d1") have = c.d1;
        else if (key == "d2") have = c.d2;
        else if (key == "g")  have = c.g;
        else throw ExactError("bad assignment filter key: " + key);
        if (have != want) return false;
    }
    return true;
}

// --- the t-variable universe --------------------------------------------------

// t_j = s_j * s_{31-j}; hearts and spades per the bilinear split.
inline const std::array<int, 5>& heart_indices() {
    static const std::array<int, 5> h = {1, 2, 4, 8, 15};
    return h;
}
inline const std::array<int, 10>& spade_indices() {
    static const std::array<int, 10> s = {3, 5, 6, 7, 9, 10, 11, 12, 13, 14};
    return s;
}

struct TUniverse {
    VarSetPtr vars;  // t1..t15

    TUniverse() : vars(make_indexed_vars("t", 1, 15)) {}

    RatFunc t(int j) const { return RatFunc::variable(vars, "t" + std::to_string(j)); }
    MultiPoly tp(int j) const { return MultiPoly::variable(vars, "t" + std::to_string(j)); }
    RatFunc konst(const Rational& c) const { return RatFunc::constant(vars, c); }
};

// --- the ten structural equations ---------------------------------------------

using CoefFn = std::function<Rational(const ConstAssign&)>;

struct BilinearTerm {
    CoefFn coef;
    int heart;
    int spade;
};
using StructEq = std::vector<BilinearTerm>;

// Transcription of the consolidated equation display, in "sum of terms = 0"
// form. Each pair of rows belongs to one deleted-pair quadruple, in order
// B(5), B(1), B(4), B(2), B(3).
inline const std::array<StructEq, 10>& structural_equations() {
    auto b1 = [](const ConstAssign& c) { return c.b1; };
    (void)b1;
    static const std::array<StructEq, 10> eqs = {{
        // B(5): delta1 splits
        {{[](const ConstAssign& c) { return c.d1; }, 1, 14},
         {[](const ConstAssign& c) { return -c.b1 * 2 / c.b2; }, 2, 13},
         {[](const ConstAssign&) { return Rational(1); }, 4, 11}},
        {{[](const ConstAssign& c) { return c.d1; }, 8, 7},
         {[](const ConstAssign&) { return Rational(1); }, 2, 13},
         {[](const ConstAssign& c) { return -c.b2 * 2 / c.b1; }, 4, 11}},
        // B(1): delta2 splits
        {{[](const ConstAssign& c) { return c.d2; }, 2, 3},
         {[](const ConstAssign&) { return Rational(1); }, 8, 9},
         {[](const ConstAssign& c) { return -c.b2 * 2 / c.b3; }, 4, 5}},
        {{[](const ConstAssign& c) { return c.d2; }, 15, 14},
         {[](const ConstAssign& c) { return -c.b3 * 2 / c.b2; }, 8, 9},
         {[](const ConstAssign&) { return Rational(1); }, 4, 5}},
        // B(4): gamma splits
        {{[](const ConstAssign& c) { return c.g; }, 1, 9},
         {[](const ConstAssign& c) { return -c.b1 * c.d2; }, 2, 10},
         {[](const ConstAssign& c) { return Rational(2) / c.b3; }, 4, 12}},
        {{[](const ConstAssign& c) { return c.g; }, 15, 7},
         {[](const ConstAssign& c) { return c.b3; }, 2, 10},
         {[](const ConstAssign& c) { return -(Rational(3) / c.d2) * (2 / c.b1); }, 4, 12}},
        // B(2): gamma splits
        {{[](const ConstAssign& c) { return c.g; }, 1, 3},
         {[](const ConstAssign& c) { return c.b3; }, 8, 10},
         {[](const ConstAssign& c) { return -(Rational(3) / c.d1) * (2 / c.b1); }, 4, 6}},
        {{[](const ConstAssign& c) { return c.g; }, 15, 13},
         {[](const ConstAssign& c) { return -c.b1 * c.d1; }, 8, 10},
         {[](const ConstAssign& c) { return Rational(2) / c.b3; }, 4, 6}},
        // B(3): beta2*gamma splits
        {{[](const ConstAssign& c) { return c.b2 * c.g; }, 1, 5},
         {[](const ConstAssign& c) { return -c.d2 * 3 / c.d1; }, 2, 6},
         {[](const ConstAssign&) { return Rational(1); }, 8, 12}},
        {{[](const ConstAssign& c) { return c.b2 * c.g; }, 15, 11},
         {[](const ConstAssign&) { return Rational(1); }, 2, 6},
         {[](const ConstAssign& c) { return -c.d1 * 3 / c.d2; }, 8, 12}},
    }};
    return eqs;
}

// --- M and calM ---------------------------------------------------------------

// One transcribed matrix entry: coef * t_heart at a (row, spade-column) or
// coef * t_spade at a (row, heart-column).
struct DisplayEntry {
    int row;
    int var_t;   // the t-index appearing in the entry
    int col_t;   // the t-index labelling the column
    CoefFn coef;
};

// The 10x10 matrix display (columns are spades, entries carry hearts).
inline const std::vector<DisplayEntry>& m_display() {
    auto C = [](const char* expr) { (void)expr; };
    (void)C;
    static const std::vector<DisplayEntry> d = {
        {0, 4, 11, [](const ConstAssign&) { return Rational(-1); }},
        {0, 2, 13, [](const ConstAssign& c) { return c.b1 * 2 / c.b2; }},
        {0, 1, 14, [](const ConstAssign& c) { return -c.d1; }},
        {1, 8, 7, [](const ConstAssign& c) { return c.d1; }},
        {1, 4, 11, [](const ConstAssign& c) { return -c.b2 * 2 / c.b1; }},
        {1, 2, 13, [](const ConstAssign&) { return Rational(1); }},
        {2, 2, 3, [](const ConstAssign& c) { return -c.d2; }},
        {2, 4, 5, [](const ConstAssign& c) { return c.b2 * 2 / c.b3; }},
        {2, 8, 9, [](const ConstAssign&) { return Rational(-1); }},
        {3, 4, 5, [](const ConstAssign&) { return Rational(1); }},
        {3, 8, 9, [](const ConstAssign& c) { return -c.b3 * 2 / c.b2; }},
        {3, 15, 14, [](const ConstAssign& c) { return c.d2; }},
        {4, 1, 9, [](const ConstAssign& c) { return c.g; }},
        {4, 2, 10, [](const ConstAssign& c) { return -c.b1 * c.d2; }},
        {4, 4, 12, [](const ConstAssign& c) { return Rational(2) / c.b3; }},
        {5, 15, 7, [](const ConstAssign& c) { return c.g; }},
        {5, 2, 10, [](const ConstAssign& c) { return c.b3; }},
        {5, 4, 12, [](const ConstAssign& c) { return -(Rational(3) / c.d2) * (2 / c.b1); }},
        {6, 1, 3, [](const ConstAssign& c) { return c.g; }},
        {6, 4, 6, [](const ConstAssign& c) { return -(Rational(3) / c.d1) * (2 / c.b1); }},
        {6, 8, 10, [](const ConstAssign& c) { return c.b3; }},
        {7, 4, 6, [](const ConstAssign& c) { return Rational(2) / c.b3; }},
        {7, 8, 10, [](const ConstAssign& c) { return -c.b1 * c.d1; }},
        {7, 15, 13, [](const ConstAssign& c) { return c.g; }},
        {8, 1, 5, [](const ConstAssign& c) { return -c.b2 * c.g; }},
        {8, 2, 6, [](const ConstAssign& c) { return c.d2 * 3 / c.d1; }},
        {8, 8, 12, [](const ConstAssign&) { return Rational(-1); }},
        {9, 2, 6, [](const ConstAssign&) { return Rational(1); }},
        {9, 15, 11, [](const ConstAssign& c) { return c.b2 * c.g; }},
        {9, 8, 12, [](const ConstAssign& c) { return -c.d1 * 3 / c.d2; }},
    };
    return d;
}

// The 10x5 matrix display (columns are hearts, entries carry spades). The
// printed display assumes beta1 = beta3 = beta; entry (7, t15) is printed as
// -gamma*t13 where the structural-equation table gives +gamma*t13. Both
// variants are constructible so the discrepancy can be exercised and the
// factorization catalog pins down which one the claimed identities refer to.
enum class CalMVariant { display, table };

inline const std::vector<DisplayEntry>& calm_display() {
    static const std::vector<DisplayEntry> d = {
        {0, 14, 1, [](const ConstAssign& c) { return -c.d1; }},
        {0, 13, 2, [](const ConstAssign& c) { return c.b1 * 2 / c.b2; }},
        {0, 11, 4, [](const ConstAssign&) { return Rational(-1); }},
        {1, 13, 2, [](const ConstAssign&) { return Rational(1); }},
        {1, 11, 4, [](const ConstAssign& c) { return -(Rational(2) / c.b1) * c.b2; }},
        {1, 7, 8, [](const ConstAssign& c) { return c.d1; }},
        {2, 3, 2, [](const ConstAssign& c) { return c.d2; }},
        {2, 5, 4, [](const ConstAssign& c) { return -(Rational(2) / c.b1) * c.b2; }},
        {2, 9, 8, [](const ConstAssign&) { return Rational(1); }},
        {3, 5, 4, [](const ConstAssign&) { return Rational(1); }},
        {3, 9, 8, [](const ConstAssign& c) { return -(Rational(2) / c.b2) * c.b1; }},
        {3, 14, 15, [](const ConstAssign& c) { return c.d2; }},
        {4, 9, 1, [](const ConstAssign& c) { return c.g; }},
        {4, 10, 2, [](const ConstAssign& c) { return -c.b1 * c.d2; }},
        {4, 12, 4, [](const ConstAssign& c) { return Rational(2) / c.b1; }},
        {5, 10, 2, [](const ConstAssign& c) { return c.b1; }},
        {5, 12, 4, [](const ConstAssign& c) { return -(Rational(2) / c.b1) * (3 / c.d2); }},
        {5, 7, 15, [](const ConstAssign& c) { return c.g; }},
        {6, 3, 1, [](const ConstAssign& c) { return c.g; }},
        {6, 6, 4, [](const ConstAssign& c) { return -(Rational(2) / c.b1) * (3 / c.d1); }},
        {6, 10, 8, [](const ConstAssign& c) { return c.b1; }},
        {7, 6, 4, [](const ConstAssign& c) { return Rational(2) / c.b1; }},
        {7, 10, 8, [](const ConstAssign& c) { return -c.b1 * c.d1; }},
        {7, 13, 15, [](const ConstAssign& c) { return -c.g; }},  // sign deviates from the table
        {8, 5, 1, [](const ConstAssign& c) { return c.b2 * c.g; }},
        {8, 6, 2, [](const ConstAssign& c) { return -c.d2 * 3 / c.d1; }},
        {8, 12, 8, [](const ConstAssign&) { return Rational(1); }},
        {9, 6, 2, [](const ConstAssign&) { return Rational(1); }},
        {9, 12, 8, [](const ConstAssign& c) { return -c.d1 * 3 / c.d2; }},
        {9, 11, 15, [](const ConstAssign& c) { return c.b2 * c.g; }},
    };
    return d;
}

inline int heart_col(int t) {
    const auto& h = heart_indices();
    for (size_t i = 0; i < h.size(); ++i)
        if (h[i] == t) return static_cast<int>(i);
    throw ExactError("not a heart index: t" + std::to_string(t));
}
inline int spade_col(int t) {
    const auto& s = spade_indices();
    for (size_t i = 0; i < s.size(); ++i)
        if (s[i] == t) return static_cast<int>(i);
    throw ExactError("not a spade index: t" + std::to_string(t));
}

inline PolyMatrix build_M(const TUniverse& tu, const ConstAssign& c) {
    PolyMatrix m(10, 10, tu.vars);
    for (const auto& e : m_display()) {
        m.at(e.row, spade_col(e.col_t)) += tu.konst(e.coef(c)) * tu.t(e.var_t);
    }
    return m;
}

inline PolyMatrix build_calM(const TUniverse& tu, const ConstAssign& c,
                             CalMVariant variant = CalMVariant::display) {
    if (variant == CalMVariant::display) {
        PolyMatrix m(10, 5, tu.vars);
        for (const auto& e : calm_display())
            m.at(e.row, heart_col(e.col_t)) += tu.konst(e.coef(c)) * tu.t(e.var_t);
        return m;
    }
    // straight from the structural-equation table
    PolyMatrix m(10, 5, tu.vars);
    const auto& eqs = structural_equations();
    for (int i = 0; i < 10; ++i)
        for (const auto& term : eqs[i])
            m.at(i, heart_col(term.heart)) += tu.konst(term.coef(c)) * tu.t(term.spade);
    return m;
}

inline PolyMatrix build_M_from_table(const TUniverse& tu, const ConstAssign& c) {
    PolyMatrix m(10, 10, tu.vars);
    const auto& eqs = structural_equations();
    for (int i = 0; i < 10; ++i)
        for (const auto& term : eqs[i])
            m.at(i, spade_col(term.spade)) += tu.konst(term.coef(c)) * tu.t(term.heart);
    return m;
}

// --- the five sub-quadruples ----------------------------------------------------

struct SubQuadSpec {
    int deleted;  // which pair the quadruple omits (1..5)
    TriparaPattern fir, sec;
    LambdaSplit split;
    Rational lambda;         // value the calibration constant takes
    Rational claimed_ratio;  // claimed (v_{1,4}-w_{1,4}) / (u_{2,1}-u_{1,2})
    // display transcription constants (see quad_display_matrix)
    std::array<Rational, 8> mat;   // A,B,C,D,E,F,G,H
    std::array<Rational, 4> pfeq;  // P,Q,R,S
    // printed reconstruction formulas, keyed by entry index
    std::map<int, std::function<RatFunc(const QuadSystem&)>> printed;
};

inline std::vector<SubQuadSpec> sub_quadruples(const ConstAssign& c) {
    const Rational b1 = c.b1, b2 = c.b2, b3 = c.b3, d1 = c.d1, d2 = c.d2, g = c.g;
    auto r = [](const QuadSystem& q, int i) { return q.r(i); };

    auto plain_printed = [r](Rational E1, Rational E2, Rational D) {
        std::map<int, std::function<RatFunc(const QuadSystem&)>> f;
        Rational kc = E1 * 2 / E2;
        f[13] = [=](const QuadSystem& q) {
            return (r(q, 4) * r(q, 11) + D * r(q, 1) * r(q, 14)) / (kc * r(q, 2));
        };
        f[8] = [=](const QuadSystem& q) {
            return (Rational(3) / D * r(q, 4) * r(q, 11) - r(q, 1) * r(q, 14)) / (kc * r(q, 7));
        };
        f[3] = [=](const QuadSystem& q) {
            return ((r(q, 1) * r(q, 14) + Rational(3) / D * r(q, 4) * r(q, 11)) * r(q, 9) -
                    2 * r(q, 4) * r(q, 14) * r(q, 12)) /
                   (2 * r(q, 2) * r(q, 7));
        };
        f[6] = [=](const QuadSystem& q) {
            return (2 * r(q, 1) * r(q, 11) * r(q, 9) -
                    (D * r(q, 1) * r(q, 14) - r(q, 4) * r(q, 11)) * r(q, 12)) /
                   (2 * r(q, 2) * r(q, 7));
        };
        f[0] = [=](const QuadSystem& q) {
            return (r(q, 9) * r(q, 11) - D * r(q, 12) * r(q, 14)) / (E1 * r(q, 2));
        };
        f[5] = [=](const QuadSystem& q) {
            return (Rational(3) / D * r(q, 9) * r(q, 11) - r(q, 12) * r(q, 14)) / (E1 * r(q, 7));
        };
        f[10] = [=](const QuadSystem& q) {
            return (r(q, 1) * r(q, 9) + r(q, 4) * r(q, 12)) / (E1 * r(q, 2));
        };
        f[15] = [=](const QuadSystem& q) {
            return (r(q, 4) * r(q, 12) - r(q, 1) * r(q, 9)) / (E1 * r(q, 7));
        };
        return f;
    };

    std::vector<SubQuadSpec> specs;

    // B(5): delete pair 5; plain system with (beta1, beta2); lambda = delta1
    specs.push_back({5,
                     {1, 1, 1, 1, b1},
                     {1, 1, 1, 1, b2},
                     {1, 1, b1 * 2 / b2},
                     d1,
                     d1,
                     {b1, b2, b1, b2, b1, b2, b2, b1},
                     {1, -(b2 * 2 / b1), -1, b1 * 2 / b2},
                     plain_printed(b1, b2, d1)});

    // B(1): delete pair 1; plain system with (beta2, beta3); lambda = delta2
    specs.push_back({1,
                     {1, 1, 1, 1, b2},
                     {1, 1, 1, 1, b3},
                     {1, 1, b2 * 2 / b3},
                     d2,
                     d2,
                     {b2, b3, b2, b3, b2, b3, b3, b2},
                     {1, -(b3 * 2 / b2), -1, b2 * 2 / b3},
                     plain_printed(b2, b3, d2)});

    // B(4): delete pair 4; lambda = gamma
    {
        std::map<int, std::function<RatFunc(const QuadSystem&)>> f;
        f[13] = [=](const QuadSystem& q) {
            return ((2 / b3) * r(q, 4) * r(q, 11) + g * r(q, 1) * r(q, 14)) / (b1 * d2 * r(q, 2));
        };
        f[8] = [=](const QuadSystem& q) {
            return ((4 / g) * r(q, 4) * r(q, 11) - b3 * r(q, 1) * r(q, 14)) / (b1 * d2 * r(q, 7));
        };
        f[0] = [=](const QuadSystem& q) {
            return (2 * r(q, 9) * r(q, 11) - b3 * g * r(q, 12) * r(q, 14)) / (b1 * b3 * r(q, 2));
        };
        f[5] = [=](const QuadSystem& q) {
            return ((4 / g) * r(q, 9) * r(q, 11) - b3 * r(q, 12) * r(q, 14)) / (b1 * r(q, 7));
        };
        f[10] = [=](const QuadSystem& q) {
            return (r(q, 4) * r(q, 12) + r(q, 1) * r(q, 9)) / (b1 * r(q, 2));
        };
        f[15] = [=](const QuadSystem& q) {
            return (r(q, 4) * r(q, 12) - r(q, 1) * r(q, 9)) / (b1 * r(q, 7));
        };
        f[3] = [=](const QuadSystem& q) {
            return ((r(q, 1) * r(q, 14) + (4 / g) * (2 / b3) * r(q, 4) * r(q, 11)) * r(q, 9) -
                    3 * r(q, 4) * r(q, 14) * r(q, 12)) /
                   (b1 * d2 * r(q, 2) * r(q, 7));
        };
        f[6] = [=](const QuadSystem& q) {
            return (3 * r(q, 1) * r(q, 11) * r(q, 9) +
                    (r(q, 4) * r(q, 11) - b3 * g * r(q, 1) * r(q, 14)) * r(q, 12)) /
                   (b1 * d2 * r(q, 2) * r(q, 7));
        };
        specs.push_back({4,
                         {1, 1, 1, 1, b1},
                         {1, 1, b3, 2 / b3, Rational(3) / d2},
                         {2 / b3, 1, b1 * d2},
                         g,
                         g,
                         {b1, Rational(3) / d2, b1 * b3, Rational(3) / d2, b1 * 2 / b3,
                          Rational(3) / d2, Rational(3) / d2, b1},
                         {-b3, (Rational(3) / d2) * (2 / b1), 2 / b3, -(b1 * d2)},
                         std::move(f)});
    }

    // B(2): delete pair 2; lambda = gamma; claimed ratio gamma / beta1
    {
        Rational kc = (2 / b3) * (Rational(3) / d1);
        std::map<int, std::function<RatFunc(const QuadSystem&)>> f;
        f[13] = [=](const QuadSystem& q) {
            return (b1 * r(q, 4) * r(q, 11) + g * r(q, 1) * r(q, 14)) / (kc * r(q, 2));
        };
        f[8] = [=](const QuadSystem& q) {
            return ((4 / g) * r(q, 4) * r(q, 11) - (2 / b1) * r(q, 1) * r(q, 14)) / (kc * r(q, 7));
        };
        f[0] = [=](const QuadSystem& q) {
            return (r(q, 9) * r(q, 11) - g * r(q, 12) * r(q, 14)) / ((Rational(3) / d1) * r(q, 2));
        };
        f[5] = [=](const QuadSystem& q) {
            return ((4 / g) * r(q, 9) * r(q, 11) - r(q, 12) * r(q, 14)) / ((Rational(3) / d1) * r(q, 7));
        };
        f[10] = [=](const QuadSystem& q) {
            return (b1 * r(q, 4) * r(q, 12) + r(q, 1) * r(q, 9)) / r(q, 2);
        };
        f[15] = [=](const QuadSystem& q) {
            return (r(q, 4) * r(q, 12) - (2 / b1) * r(q, 1) * r(q, 9)) / r(q, 7);
        };
        f[3] = [=](const QuadSystem& q) {
            return (((2 / b1) * r(q, 1) * r(q, 14) + (4 / g) * r(q, 4) * r(q, 11)) * r(q, 9) -
                    2 * r(q, 4) * r(q, 14) * r(q, 12)) /
                   (kc * r(q, 2) * r(q, 7));
        };
        f[6] = [=](const QuadSystem& q) {
            return (2 * r(q, 1) * r(q, 11) * r(q, 9) +
                    (b1 * r(q, 4) * r(q, 11) - g * r(q, 1) * r(q, 14)) * r(q, 12)) /
                   (kc * r(q, 2) * r(q, 7));
        };
        specs.push_back({2,
                         {b1, 2 / b1, 1, 1, Rational(3) / d1},
                         {1, 1, 1, 1, b3},
                         {b1, 1, kc},
                         g,
                         g / b1,
                         {Rational(3) / d1, b3, Rational(3) / d1, b1 * b3, Rational(3) / d1,
                          (2 / b1) * b3, b3, Rational(3) / d1},
                         {2 / b3, -(b1 * d1), -b3, (2 / b1) * (Rational(3) / d1)},
                         std::move(f)});
    }

    // B(3): delete pair 3; lambda = beta2 * gamma; claimed ratio gamma
    {
        Rational kc = d2 * (Rational(3) / d1);
        std::map<int, std::function<RatFunc(const QuadSystem&)>> f;
        f[13] = [=](const QuadSystem& q) {
            return (r(q, 4) * r(q, 11) + b2 * g * r(q, 1) * r(q, 14)) / (kc * r(q, 2));
        };
        f[8] = [=](const QuadSystem& q) {
            // printed denominator is delta2 * r7; its own lambda split gives
            // (3/delta1) * delta2 * r7
            return ((2 / b2) * (4 / g) * r(q, 4) * r(q, 11) - r(q, 1) * r(q, 14)) / (d2 * r(q, 7));
        };
        f[0] = [=](const QuadSystem& q) {
            return (r(q, 9) * r(q, 11) - g * r(q, 12) * r(q, 14)) / ((Rational(3) / d1) * r(q, 2));
        };
        f[5] = [=](const QuadSystem& q) {
            return ((4 / g) * r(q, 9) * r(q, 11) - r(q, 12) * r(q, 14)) / ((Rational(3) / d1) * r(q, 7));
        };
        f[10] = [=](const QuadSystem& q) {
            return (r(q, 4) * r(q, 12) + b2 * r(q, 1) * r(q, 9)) / ((Rational(3) / d1) * r(q, 2));
        };
        f[15] = [=](const QuadSystem& q) {
            return ((2 / b2) * r(q, 4) * r(q, 12) - r(q, 1) * r(q, 9)) / ((Rational(3) / d1) * r(q, 7));
        };
        f[3] = [=](const QuadSystem& q) {
            return ((b2 * r(q, 1) * r(q, 14) + (4 / g) * r(q, 4) * r(q, 11)) * r(q, 9) -
                    3 * r(q, 4) * r(q, 14) * r(q, 12)) /
                   (kc * r(q, 2) * r(q, 7));
        };
        f[6] = [=](const QuadSystem& q) {
            return (3 * r(q, 1) * r(q, 11) * r(q, 9) +
                    ((2 / b2) * r(q, 4) * r(q, 11) - g * r(q, 1) * r(q, 14)) * r(q, 12)) /
                   (kc * r(q, 2) * r(q, 7));
        };
        specs.push_back({3,
                         {1, 1, b2, 2 / b2, Rational(3) / d1},
                         {b2, 2 / b2, 1, 1, Rational(3) / d2},
                         {1, 1, kc},
                         b2 * g,
                         g,
                         {d2, d1, d2 / b2, d1 / b2, b2 * d2 / 2, b2 * d1 / 2, d1, d2},
                         {1, -(d1 * 3 / d2), -1, d2 * 3 / d1},
                         std::move(f)});
    }

    return specs;
}

// Map an r-universe polynomial into the 32-variable s-universe via the
// deletion lexicon: r_j -> s_psi * s_{psi + 2^{i-1}}.
inline MultiPoly lexicon_to_s(const MultiPoly& p, int deleted, const VarSetPtr& svars) {
    MultiPoly out(svars);
    for (const auto& [mono, coef] : p.terms()) {
        Monomial m(svars->size(), 0);
        for (size_t rj = 0; rj < mono.size(); ++rj) {
            if (mono[rj] == 0) continue;
            auto [a, b] = lexicon_map(deleted, static_cast<int>(rj));
            m[a] += mono[rj];
            m[b] += mono[rj];
        }
        out += MultiPoly::term(svars, coef, m);
    }
    return out;
}

// The transcribed display matrix of a sub-quadruple, in s-variables.
inline PolyMatrix quad_display_matrix(const SubQuadSpec& spec, const VarSetPtr& svars) {
    auto sv = [&](int i) { return MultiPoly::variable(svars, "s" + std::to_string(i)); };
    auto rprod = [&](int j, int k) {
        auto [a1, b1x] = lexicon_map(spec.deleted, j);
        auto [a2, b2x] = lexicon_map(spec.deleted, k);
        return sv(a1) * sv(b1x) * sv(a2) * sv(b2x);
    };
    const auto& k = spec.mat;
    PolyMatrix m(4, 4, svars);
    m.at(0, 1) = RatFunc(rprod(2, 7) * k[0]);
    m.at(0, 2) = RatFunc(rprod(1, 11) * (-k[1]));
    m.at(0, 3) = RatFunc(rprod(2, 13) * k[2] - rprod(4, 11) * k[3]);
    m.at(1, 2) = RatFunc(rprod(7, 8) * k[4] + rprod(1, 14) * k[5]);
    m.at(1, 3) = RatFunc(rprod(4, 14) * (-k[6]));
    m.at(2, 3) = RatFunc(rprod(8, 13) * k[7]);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) m.at(j, i) = -m.at(i, j);
    return m;
}

// The transcribed Pfaffian-equation display (LHS - RHS), in s-variables:
// r1 r14 (P r2r13 + Q r4r11) + r7 r8 (R r4r11 + S r2r13).
inline MultiPoly quad_display_pfaffeq(const SubQuadSpec& spec, const VarSetPtr& svars,
                                      const std::array<Rational, 4>& k) {
    auto sv = [&](int i) { return MultiPoly::variable(svars, "s" + std::to_string(i)); };
    auto rprod = [&](int j, int kk) {
        auto [a1, b1x] = lexicon_map(spec.deleted, j);
        auto [a2, b2x] = lexicon_map(spec.deleted, kk);
        return sv(a1) * sv(b1x) * sv(a2) * sv(b2x);
    };
    return rprod(1, 14) * (rprod(2, 13) * k[0] + rprod(4, 11) * k[1]) +
           rprod(7, 8) * (rprod(4, 11) * k[2] + rprod(2, 13) * k[3]);
}

// The same equation derived from the generic skew system.
inline std::array<Rational, 4> derived_pfaffeq_constants(const SubQuadSpec& spec) {
    const auto& f = spec.fir;
    const auto& s = spec.sec;
    Rational S1 = f.a * f.b + f.c * f.d;
    Rational S2 = s.a * s.b + s.c * s.d;
    return {f.e * s.e * f.b * s.c, -(s.e * s.e * S1), -(f.e * s.e * f.a * s.d), f.e * f.e * S2};
}

}  // namespace buchi
