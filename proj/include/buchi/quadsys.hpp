#pragma once

// The generic "triple relation" pattern and the skew-symmetric 4x4 systems
// built from pairs of such patterns. One parametrized engine covers the
// plain quadruple case and all five sub-quadruples of a quintuple; the
// concrete instances differ only in a handful of rational constants.
//
// Pattern(a, b, c, d, e) stands for an 8-tuple q_0..q_7 subject to
//     a = q1*q5 - q2*q6        (inner u-difference, first gap)
//     b = q0*q4 - q3*q7        (inner v-difference, first gap)
//     c = q2*q3 - q4*q5        (inner u-difference, second gap)
//     d = q0*q1 - q6*q7        (inner v-difference, second gap)
// with outer difference e = q1*q3 - q4*q6, which forces the four linear
// relations
//     e*q0 = d*q3 - b*q6,   e*q2 = c*q1 + a*q4,
//     e*q5 = a*q3 + c*q6,   e*q7 = d*q4 - b*q1.

#include "buchi/matrix.hpp"
#include "buchi/paramet.hpp"

#include <array>
#include <functional>
#include <string>

namespace buchi {

struct TriparaPattern {
    Rational a, b, c, d, e;
};

// The four relations with q0, q2, q5, q7 eliminated; used both to generate
// relation sets and to verify that they imply the four inner differences.
struct TriparaRelations {
    // each entry: lhs variable index, rhs as (coef on q3/q1-type var pairs)
    // kept symbolic via callback into a variable supplier
    TriparaPattern pat;
};

inline TriparaRelations skew_triple_relations(const TriparaPattern& pat) {
    Rational prod = pat.c * pat.d;
    if (prod != 1 && prod != 2 && prod != 4) throw ExactError("UnsupportedPattern");
    if (pat.e == 0) throw ExactError("UnsupportedPattern: zero outer scale");
    return TriparaRelations{pat};
}

// Substitute the four relations and check that each inner difference reduces
// to (constant) * (q1*q3 - q4*q6) / e, so that all four hold exactly when
// the outer difference equals e. Returns true when all four reductions are
// identities.
inline bool verify_tripara_reduction(const TriparaPattern& pat) {
    auto vars = make_vars({"q1", "q3", "q4", "q6"});
    auto q1 = RatFunc::variable(vars, "q1");
    auto q3 = RatFunc::variable(vars, "q3");
    auto q4 = RatFunc::variable(vars, "q4");
    auto q6 = RatFunc::variable(vars, "q6");
    Rational inv_e = 1 / pat.e;
    RatFunc q0 = (pat.d * q3 - pat.b * q6) * inv_e;
    RatFunc q2 = (pat.c * q1 + pat.a * q4) * inv_e;
    RatFunc q5 = (pat.a * q3 + pat.c * q6) * inv_e;
    RatFunc q7 = (pat.d * q4 - pat.b * q1) * inv_e;
    RatFunc outer = (q1 * q3 - q4 * q6) * inv_e;
    bool ok = true;
    ok &= (q1 * q5 - q2 * q6 - pat.a * outer).is_zero();
    ok &= (q0 * q4 - q3 * q7 - pat.b * outer).is_zero();
    ok &= (q2 * q3 - q4 * q5 - pat.c * outer).is_zero();
    ok &= (q0 * q1 - q6 * q7 - pat.d * outer).is_zero();
    return ok;
}

// --- quadruple-shaped skew systems -----------------------------------------
//
// A 16-entry sequence r_0..r_15 subject to a "fir" pattern on the products
// q_j = r_j * r_{j+8} and a "sec" pattern on q'_j = r_{2j} * r_{2j+1}.
// Eliminating the entries shared between the two relation sets yields four
// bilinear equations in (r3, r6, r9, r12), i.e. a 4x4 skew matrix acting on
// that vector.

struct QuadSystem {
    TriparaPattern fir;
    TriparaPattern sec;
    VarSetPtr rvars;  // r0..r15

    RatFunc r(int i) const { return RatFunc::variable(rvars, "r" + std::to_string(i)); }
    MultiPoly rp(int i) const { return MultiPoly::variable(rvars, "r" + std::to_string(i)); }
};

inline QuadSystem make_quad_system(const TriparaPattern& fir, const TriparaPattern& sec) {
    if (fir.c != fir.d || sec.a != sec.b) {
        // the eliminated system would not be skew-symmetric
        throw ExactError("UnsupportedPattern: system is not skew-symmetrizable");
    }
    return QuadSystem{fir, sec, make_indexed_vars("r", 0, 15)};
}

// The eight defining relations, as polynomials that must vanish.
inline std::vector<MultiPoly> quad_relations(const QuadSystem& q) {
    auto P = [&](int i) { return q.rp(i); };
    const auto& f = q.fir;
    const auto& s = q.sec;
    std::vector<MultiPoly> rel;
    // fir pattern on q_j = r_j r_{j+8}
    rel.push_back(f.e * P(0) * P(8) - f.d * P(3) * P(11) + f.b * P(6) * P(14));
    rel.push_back(f.e * P(2) * P(10) - f.c * P(1) * P(9) - f.a * P(4) * P(12));
    rel.push_back(f.e * P(5) * P(13) - f.a * P(3) * P(11) - f.c * P(6) * P(14));
    rel.push_back(f.e * P(7) * P(15) - f.d * P(4) * P(12) + f.b * P(1) * P(9));
    // sec pattern on q'_j = r_{2j} r_{2j+1}
    rel.push_back(s.e * P(0) * P(1) - s.d * P(6) * P(7) + s.b * P(12) * P(13));
    rel.push_back(s.e * P(4) * P(5) - s.c * P(2) * P(3) - s.a * P(8) * P(9));
    rel.push_back(s.e * P(10) * P(11) - s.a * P(6) * P(7) - s.c * P(12) * P(13));
    rel.push_back(s.e * P(14) * P(15) - s.d * P(8) * P(9) + s.b * P(2) * P(3));
    return rel;
}

// The skew matrix A with A * (r3, r6, r9, r12)^T = 0, rows being the four
// eliminations (of r10, r15, r0, r5 respectively, with signs arranged so
// that A^T = -A).
inline PolyMatrix quad_skew_matrix(const QuadSystem& q) {
    auto R = [&](int i) { return q.r(i); };
    const auto& f = q.fir;
    const auto& s = q.sec;
    Rational e1 = f.e, e2 = s.e;
    PolyMatrix A(4, 4, q.rvars);
    A.at(0, 1) = e1 * s.a * R(2) * R(7);
    A.at(0, 2) = -(e2 * f.c) * R(1) * R(11);
    A.at(0, 3) = e1 * s.c * R(2) * R(13) - e2 * f.a * R(4) * R(11);
    A.at(1, 2) = e2 * f.b * R(1) * R(14) + e1 * s.d * R(7) * R(8);
    A.at(1, 3) = -(e2 * f.d) * R(4) * R(14);
    A.at(2, 3) = e1 * s.b * R(8) * R(13);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) A.at(j, i) = -A.at(i, j);
    return A;
}

// Kernel relation: the matrix annihilates (r3, r6, r9, r12) exactly when the
// eight defining relations hold; used as a consistency check in tests.
inline std::vector<RatFunc> quad_matrix_times_kernel(const QuadSystem& q) {
    PolyMatrix A = quad_skew_matrix(q);
    std::array<int, 4> idx = {3, 6, 9, 12};
    std::vector<RatFunc> rows;
    for (int i = 0; i < 4; ++i) {
        RatFunc acc = RatFunc::constant(q.rvars, 0);
        for (int j = 0; j < 4; ++j) acc += A.at(i, j) * q.r(idx[j]);
        rows.push_back(acc);
    }
    return rows;
}

// --- generic reconstruction --------------------------------------------------
//
// Given the two patterns and the lambda-normalized split of the Pfaffian
// equation (transcribed per instance as the r13 formula), express the eight
// dependent entries r0, r3, r5, r6, r8, r10, r13, r15 in the eight free ones
// r1, r2, r4, r7, r9, r11, r12, r14. The r8 companion is derived from the
// Pfaffian equation itself rather than transcribed, so a misprinted display
// cannot poison the reconstruction; callers compare the derived form against
// the printed one separately.

struct QuadReconstruction {
    QuadSystem sys;
    Rational lambda;                    // the calibration constant value
    std::array<RatFunc, 16> r;          // all sixteen entries as RatFuncs in the free ones
    std::vector<RatFunc> residuals;     // the eight defining relations after substitution
    RatFunc pfaffian_residual;          // pf(A) after substitution
    std::optional<Rational> ratio;      // (v_{1,4}-w_{1,4}) / (u_{2,1}-u_{1,2}) if constant
    bool all_identities_vanish = false;
};

// r13 split: kc * r2 * r13 = ka * r4 * r11 + lambda * kb * r1 * r14
struct LambdaSplit {
    Rational ka, kb, kc;
};

inline QuadReconstruction reconstruct_quadruple(const QuadSystem& sys, const LambdaSplit& split,
                                                const Rational& lambda) {
    QuadReconstruction out{sys, lambda, {}, {}, RatFunc(), std::nullopt, false};
    const auto& f = sys.fir;
    const auto& s = sys.sec;
    Rational e1 = f.e, e2 = s.e;
    auto R = [&](int i) { return sys.r(i); };

    std::array<RatFunc, 16> v;
    for (int i : {1, 2, 4, 7, 9, 11, 12, 14}) v[i] = R(i);

    // r13 from the transcribed lambda split
    v[13] = (split.ka * v[4] * v[11] + lambda * split.kb * v[1] * v[14]) / (split.kc * v[2]);

    // r8 from the Pfaffian equation:
    //   r1 r14 (e1 e2 b1 c2 r2r13 - e2^2 S1 r4r11) = r7 r8 (e1 e2 a1 d2 r4r11 - e1^2 S2 r2r13)
    Rational S1 = f.a * f.b + f.c * f.d;
    Rational S2 = s.a * s.b + s.c * s.d;
    RatFunc lhs = v[1] * v[14] * (e1 * e2 * f.b * s.c * v[2] * v[13] - e2 * e2 * S1 * v[4] * v[11]);
    RatFunc rhs_factor = e1 * e2 * f.a * s.d * v[4] * v[11] - e1 * e1 * S2 * v[2] * v[13];
    v[8] = lhs / (v[7] * rhs_factor);

    // r3, r6 from the skew system rows (rank-2 kernel)
    v[3] = ((e2 * f.b * v[1] * v[14] + e1 * s.d * v[7] * v[8]) * v[9] - e2 * f.d * v[4] * v[14] * v[12]) /
           (e1 * s.b * v[2] * v[7]);
    v[6] = (e2 * f.c * v[1] * v[11] * v[9] - (e1 * s.c * v[2] * v[13] - e2 * f.a * v[4] * v[11]) * v[12]) /
           (e1 * s.a * v[2] * v[7]);

    // remaining four from the fir relations
    v[0] = (f.d * v[3] * v[11] - f.b * v[6] * v[14]) / (f.e * v[8]);
    v[5] = (f.a * v[3] * v[11] + f.c * v[6] * v[14]) / (f.e * v[13]);
    v[10] = (f.c * v[1] * v[9] + f.a * v[4] * v[12]) / (f.e * v[2]);
    v[15] = (f.d * v[4] * v[12] - f.b * v[1] * v[9]) / (f.e * v[7]);

    out.r = v;

    // all eight defining relations must vanish identically
    auto rels = quad_relations(sys);
    bool ok = true;
    std::map<size_t, RatFunc> subs;
    for (int i : {0, 3, 5, 6, 8, 10, 13, 15}) subs[sys.rvars->index("r" + std::to_string(i))] = v[i];
    for (const auto& rel : rels) {
        RatFunc res = substitute(rel, subs);
        ok &= res.is_zero();
        out.residuals.push_back(std::move(res));
    }

    PolyMatrix A = quad_skew_matrix(sys);
    out.pfaffian_residual = substitute(pfaffian4(A), subs);
    ok &= out.pfaffian_residual.is_zero();

    // ratio (v_{1,4} - w_{1,4}) / (u_{2,1} - u_{1,2}) as rational functions
    RatFunc vdiff = v[0] * v[2] * v[4] * v[6] - v[9] * v[11] * v[13] * v[15];
    RatFunc udiff = v[1] * v[5] * v[9] * v[13] - v[2] * v[6] * v[10] * v[14];
    auto ratio = equal_up_to_scalar(vdiff, udiff);
    if (ratio) out.ratio = *ratio;
    ok &= ratio.has_value();

    out.all_identities_vanish = ok;
    return out;
}

// --- the plain quadruple (n = 4) -------------------------------------------

inline TriparaPattern plain_pattern(const Rational& e) { return {1, 1, 1, 1, e}; }

inline QuadSystem plain_quad_system(const Rational& beta1, const Rational& beta2) {
    return make_quad_system(plain_pattern(beta1), plain_pattern(beta2));
}

// kc * r2 r13 = ka * r4 r11 + lambda * kb * r1 r14 with the plain-quadruple
// normalization; lambda plays the role of the delta constant.
inline LambdaSplit plain_lambda_split(const Rational& beta1, const Rational& beta2) {
    return {1, 1, beta1 * 2 / beta2};
}

struct QuadrupleSymbolicReport {
    Rational beta1, beta2, delta;
    bool relations_vanish = false;    // all eight defining relations
    bool pfaffian_vanishes = false;   // pf of the skew system
    bool ratio_is_delta = false;      // (v14 - w14)/(u21 - u12) == delta
    bool r8_matches_display = false;  // derived r8 equals the printed formula
};

// Symbolic mode: the reconstructed entries satisfy every defining relation
// identically in the eight free variables.
inline QuadrupleSymbolicReport quadruple_reconstruct_symbolic(const Rational& beta1,
                                                              const Rational& beta2,
                                                              const Rational& delta) {
    QuadSystem sys = plain_quad_system(beta1, beta2);
    QuadReconstruction rec = reconstruct_quadruple(sys, plain_lambda_split(beta1, beta2), delta);
    QuadrupleSymbolicReport rep;
    rep.beta1 = beta1;
    rep.beta2 = beta2;
    rep.delta = delta;
    bool rels = true;
    for (const auto& res : rec.residuals) rels &= res.is_zero();
    rep.relations_vanish = rels;
    rep.pfaffian_vanishes = rec.pfaffian_residual.is_zero();
    rep.ratio_is_delta = rec.ratio.has_value() && *rec.ratio == delta;
    // printed companion formula: kc * r7 r8 = (3/delta) r4 r11 - r1 r14
    Rational kc = beta1 * 2 / beta2;
    RatFunc printed =
        (Rational(3) / delta * sys.r(4) * sys.r(11) - sys.r(1) * sys.r(14)) / (kc * sys.r(7));
    rep.r8_matches_display = (rec.r[8] - printed).is_zero();
    return rep;
}

// Concrete mode: rebuild the full 16-entry sequence from the eight free
// entries; every division must land on a positive integer.
inline ParamSeq quadruple_reconstruct_concrete(const std::array<Integer, 16>& free_entries,
                                               const Rational& beta1, const Rational& beta2,
                                               const Rational& delta) {
    // free positions: 1, 2, 4, 7, 9, 11, 12, 14
    auto val = [&](int i) { return Rational(free_entries[i]); };
    Rational kc = beta1 * 2 / beta2;
    std::array<Rational, 16> s{};
    for (int i : {1, 2, 4, 7, 9, 11, 12, 14}) s[i] = val(i);
    s[13] = (s[4] * s[11] + delta * s[1] * s[14]) / (kc * s[2]);
    s[8] = (Rational(3) / delta * s[4] * s[11] - s[1] * s[14]) / (kc * s[7]);
    s[3] = ((beta1 * s[7] * s[8] + beta2 * s[1] * s[14]) * s[9] - beta2 * s[4] * s[14] * s[12]) /
           (beta1 * s[2] * s[7]);
    s[6] = (beta2 * s[1] * s[11] * s[9] - (beta1 * s[2] * s[13] - beta2 * s[4] * s[11]) * s[12]) /
           (beta1 * s[2] * s[7]);
    s[0] = (s[9] * s[11] - delta * s[12] * s[14]) / (beta1 * s[2]);
    s[5] = (Rational(3) / delta * s[9] * s[11] - s[12] * s[14]) / (beta1 * s[7]);
    s[10] = (s[1] * s[9] + s[4] * s[12]) / (beta1 * s[2]);
    s[15] = (s[4] * s[12] - s[1] * s[9]) / (beta1 * s[7]);

    ParamSeq seq;
    seq.n = 4;
    for (const auto& q : s) {
        if (!is_integer(q) || q <= 0)
            throw ExactError("NotIntegral: reconstructed entry " + q.str() + " is not a positive integer");
        seq.s.push_back(numerator(q));
    }
    seq.check();
    return seq;
}

}  // namespace buchi
