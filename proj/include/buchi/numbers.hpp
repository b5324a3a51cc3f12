#pragma once

// Exact arithmetic substrate: arbitrary-precision integers and rationals
// plus the few integer helpers (isqrt, perfect-square test, divisor walks)
// the search and parametrization code leans on.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace buchi {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

struct ExactError : std::runtime_error {
    explicit ExactError(const std::string& what) : std::runtime_error(what) {}
};

inline Integer igcd(Integer a, Integer b) { return boost::multiprecision::gcd(a, b); }

// Floor square root of a non-negative integer.
inline Integer isqrt(const Integer& n) {
    if (n < 0) throw ExactError("isqrt: negative argument");
    return boost::multiprecision::sqrt(n);
}

inline bool is_square(const Integer& n, Integer* root = nullptr) {
    if (n < 0) return false;
    Integer r = isqrt(n);
    if (r * r != n) return false;
    if (root) *root = r;
    return true;
}

inline uint64_t u64_isqrt(uint64_t n) {
    auto r = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)));
    using u128 = unsigned __int128;
    while (r > 0 && u128(r) * r > n) --r;
    while (u128(r + 1) * (r + 1) <= n) ++r;
    return r;
}

inline bool u64_is_square(uint64_t n, uint64_t* root = nullptr) {
    // quadratic-residue sieve mod 64 rejects ~81% of non-squares cheaply
    static constexpr uint64_t kMask = 0x202021202030213ull;
    if (!((kMask >> (n & 63)) & 1)) return false;
    uint64_t r = u64_isqrt(n);
    if (r * r != n) return false;
    if (root) *root = r;
    return true;
}

// Exact narrowing; the desk-scale searches run on native words.
inline std::optional<uint64_t> to_u64(const Integer& n) {
    if (n < 0 || n > Integer(UINT64_MAX)) return std::nullopt;
    return static_cast<uint64_t>(n);
}

inline Integer parse_integer(const std::string& s) {
    try {
        return Integer(s);
    } catch (const std::exception&) {
        throw ExactError("not an integer: '" + s + "'");
    }
}

}  // namespace buchi
