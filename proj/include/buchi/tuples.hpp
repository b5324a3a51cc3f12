#pragma once

// Squares in monic quadratic progression: tuples u_1..u_n whose squares have
// constant second difference 2, the equivalent pair representation
// (x_i, y_i) with constant product D and sums stepping by 1, the exhaustive
// divisor-chain search that serves as the desk-scale oracle, and the Hensley
// quadruple family.

#include "buchi/numbers.hpp"

#include <algorithm>
#include <functional>
#include <thread>
#include <vector>

namespace buchi {

struct BuchiTuple {
    std::vector<Integer> u;

    // Non-negative, strictly increasing beyond any zero entry.
    explicit BuchiTuple(std::vector<Integer> values) : u(std::move(values)) {
        if (u.empty()) throw ExactError("BuchiTuple: empty");
        for (size_t i = 0; i < u.size(); ++i) {
            if (u[i] < 0) throw ExactError("BuchiTuple: negative entry");
            if (i > 0 && u[i] <= u[i - 1]) throw ExactError("BuchiTuple: not increasing");
        }
    }

    size_t n() const { return u.size(); }
    bool contains_zero() const { return u.front() == 0; }
};

struct TupleClass {
    bool valid = false;     // squares have constant second difference 2
    bool trivial = false;   // u_j = x0 + j for some integer x0
    bool contains_zero = false;
};

inline std::vector<Integer> second_differences(const std::vector<Integer>& seq) {
    if (seq.size() < 3) throw ExactError("TooShort: need at least 3 terms");
    std::vector<Integer> out;
    for (size_t k = 0; k + 2 < seq.size(); ++k) out.push_back(seq[k + 2] - 2 * seq[k + 1] + seq[k]);
    return out;
}

inline TupleClass classify(const BuchiTuple& t) {
    TupleClass c;
    c.contains_zero = t.contains_zero();
    c.valid = true;
    if (t.n() >= 3) {
        std::vector<Integer> sq;
        for (const auto& v : t.u) sq.push_back(v * v);
        for (const auto& d : second_differences(sq)) {
            if (d != 2) {
                c.valid = false;
                break;
            }
        }
    }
    if (c.valid) {
        c.trivial = true;
        for (size_t i = 1; i < t.n(); ++i) {
            if (t.u[i] != t.u[i - 1] + 1) {
                c.trivial = false;
                break;
            }
        }
        if (t.n() == 1) c.trivial = true;
    }
    return c;
}

// Pairs (x_i, y_i) with x_i*y_i = D constant and sums increasing by 1.
struct PairTuple {
    std::vector<std::pair<Integer, Integer>> pairs;

    size_t n() const { return pairs.size(); }
    Integer D() const { return pairs.at(0).first * pairs.at(0).second; }
    Integer s() const { return pairs.at(0).first + pairs.at(0).second - 1; }
    bool trivial() const { return D() == 0; }

    void check() const {
        if (pairs.empty()) throw ExactError("InvariantViolation: empty pair tuple");
        Integer d = D();
        if (d < 0) throw ExactError("InvariantViolation: negative product");
        for (size_t i = 0; i < pairs.size(); ++i) {
            if (pairs[i].first * pairs[i].second != d)
                throw ExactError("InvariantViolation: products differ");
            if (i > 0) {
                Integer step = pairs[i].first + pairs[i].second - pairs[i - 1].first - pairs[i - 1].second;
                if (step != 1) throw ExactError("InvariantViolation: sums do not step by 1");
            }
        }
    }
};

// Monic progression f(k) = k^2 + 2ak + b with u_k^2 = f(k); discriminant 16D.
struct QuadProgression {
    Integer a;  // the shift: u_k^2 = (a + k)^2 - 4D
    Integer b;  // constant term, b = a^2 - 4D

    Integer discriminant() const { return 4 * (a * a - b); }
    Integer D() const { return (a * a - b) / 4; }
    Integer eval(const Integer& k) const { return k * k + 2 * a * k + b; }
};

// Bijection of pairs <-> tuple (the paper's index-offset variant of the
// progression formula is avoided; everything is derived from the sum and
// difference of each pair).
inline PairTuple pairs_from_tuple(const BuchiTuple& t) {
    if (t.n() < 2) throw ExactError("pairs_from_tuple: need n >= 2");
    const Integer& u1 = t.u[0];
    const Integer& u2 = t.u[1];
    if ((u2 - u1) % 2 == 0)
        throw ExactError("ParityViolation: u2 - u1 must be odd for a monic progression");
    // (s+2)^2 - (s+1)^2 = u2^2 - u1^2  =>  s = (u2^2 - u1^2 - 3) / 2
    Integer s = (u2 * u2 - u1 * u1 - 3) / 2;
    PairTuple p;
    for (size_t j = 1; j <= t.n(); ++j) {
        Integer sum = s + Integer(j);
        const Integer& u = t.u[j - 1];
        if ((sum + u) % 2 != 0) throw ExactError("ParityViolation: non-integral pair");
        p.pairs.emplace_back((sum + u) / 2, (sum - u) / 2);
    }
    p.check();
    return p;
}

inline BuchiTuple tuple_from_pairs(const PairTuple& p) {
    p.check();
    std::vector<Integer> u;
    for (const auto& [x, y] : p.pairs) {
        if (x < y) throw ExactError("InvariantViolation: x < y; normalize first");
        u.push_back(x - y);
    }
    return BuchiTuple(std::move(u));
}

inline QuadProgression progression_from_pairs(const PairTuple& p) {
    p.check();
    Integer s = p.s();
    Integer D = p.D();
    return QuadProgression{s, s * s - 4 * D};
}

// --- exhaustive divisor-chain search -------------------------------------
//
// For each D: enumerate divisor pairs (x, y), x >= y, sort by x + y and emit
// every window of n consecutive sums. Deterministic ascending-D order, then
// ascending starting sum. This is the oracle that the closed-form
// generators and the non-existence claim for n = 5 are tested against.

struct SearchOptions {
    unsigned shards = 1;
};

inline void search_chains_range(int n, uint64_t d_lo, uint64_t d_hi,
                                std::vector<PairTuple>& out) {
    for (uint64_t D = d_lo; D < d_hi; ++D) {
        std::vector<std::pair<uint64_t, uint64_t>> by_sum;  // (sum, y)
        uint64_t r = u64_isqrt(D);
        for (uint64_t y = 1; y <= r; ++y) {
            if (D % y == 0) by_sum.emplace_back(D / y + y, y);
        }
        if (by_sum.size() < static_cast<size_t>(n)) continue;
        std::sort(by_sum.begin(), by_sum.end());
        size_t m = by_sum.size();
        size_t run_start = 0;
        for (size_t i = 1; i <= m; ++i) {
            if (i < m && by_sum[i].first == by_sum[i - 1].first + 1) continue;
            size_t run_len = i - run_start;
            if (run_len >= static_cast<size_t>(n)) {
                for (size_t w = run_start; w + n <= i; ++w) {
                    PairTuple chain;
                    for (size_t k = w; k < w + n; ++k) {
                        uint64_t y = by_sum[k].second;
                        chain.pairs.emplace_back(Integer(D / y), Integer(y));
                    }
                    out.push_back(std::move(chain));
                }
            }
            run_start = i;
        }
    }
}

inline std::vector<PairTuple> search_chains(int n, const Integer& d_max,
                                            const SearchOptions& opts = {}) {
    if (n < 3) throw ExactError("search_chains: n >= 3 required");
    if (d_max < 1) throw ExactError("search_chains: D_max >= 1 required");
    auto dm = to_u64(d_max);
    if (!dm || *dm > (uint64_t(1) << 62)) throw ExactError("search_chains: D_max out of supported range");
    uint64_t hi = *dm + 1;

    unsigned shards = std::max(1u, opts.shards);
    std::vector<std::vector<PairTuple>> results(shards);
    if (shards == 1) {
        search_chains_range(n, 1, hi, results[0]);
    } else {
        std::vector<std::thread> workers;
        uint64_t span = (hi - 1 + shards - 1) / shards;
        for (unsigned w = 0; w < shards; ++w) {
            uint64_t lo = 1 + uint64_t(w) * span;
            uint64_t up = std::min<uint64_t>(hi, lo + span);
            if (lo >= up) continue;
            workers.emplace_back(
                [n, lo, up, &results, w] { search_chains_range(n, lo, up, results[w]); });
        }
        for (auto& t : workers) t.join();
    }
    std::vector<PairTuple> merged;
    for (auto& shard : results)
        for (auto& c : shard) merged.push_back(std::move(c));
    std::sort(merged.begin(), merged.end(), [](const PairTuple& a, const PairTuple& b) {
        if (a.D() != b.D()) return a.D() < b.D();
        return a.s() < b.s();
    });
    return merged;
}

// --- the Hensley family ----------------------------------------------------

inline Integer hensley_cubic(int which, const Integer& t) {
    static const int64_t coef[4][4] = {
        {2, 12, 19, 6}, {2, 14, 31, 23}, {2, 16, 41, 32}, {2, 18, 49, 39}};
    const auto& c = coef[which];
    return ((c[0] * t + c[1]) * t + c[2]) * t + c[3];
}

// |values| of the four cubics form a Buchi quadruple for every t that keeps
// them nonzero; for t <= -3 the magnitudes come out decreasing and are
// reversed (second differences are symmetric under reversal).
inline BuchiTuple hensley(const Integer& t) {
    std::vector<Integer> v;
    for (int i = 0; i < 4; ++i) {
        Integer c = hensley_cubic(i, t);
        if (c == 0) throw ExactError("DegenerateParameter: cubic vanishes at t=" + t.str());
        v.push_back(c < 0 ? -c : c);
    }
    if (v[0] > v[3]) std::reverse(v.begin(), v.end());
    return BuchiTuple(std::move(v));
}

// --- direct u-space triple enumeration (independent oracle) ----------------
//
// All Buchi triples with u3 <= bound, by solving u1^2 = 2 + 2*u2^2 - u3^2
// over u2 < u3. Complements the D-indexed search for ranges where D would be
// astronomically large.

inline std::vector<BuchiTuple> enumerate_triples_by_u(uint64_t u3_max) {
    std::vector<BuchiTuple> out;
    for (uint64_t u3 = 2; u3 <= u3_max; ++u3) {
        uint64_t u3sq = u3 * u3;
        for (uint64_t u2 = u3 - 1; u2 >= 1; --u2) {
            uint64_t u2sq = u2 * u2;
            if (2 * u2sq + 2 < u3sq) break;  // u1^2 would be negative
            uint64_t u1sq = 2 * u2sq + 2 - u3sq;
            uint64_t u1;
            if (u64_is_square(u1sq, &u1) && u1 < u2) {
                out.push_back(BuchiTuple({Integer(u1), Integer(u2), Integer(u3)}));
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const BuchiTuple& a, const BuchiTuple& b) { return a.u < b.u; });
    return out;
}

}  // namespace buchi
