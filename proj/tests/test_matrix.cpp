#include <catch2/catch_amalgamated.hpp>

#include "buchi/matrix.hpp"

#include <random>

using namespace buchi;

namespace {

PolyMatrix random_int_matrix(const VarSetPtr& vars, size_t n, std::mt19937_64& rng, int bound = 9) {
    std::uniform_int_distribution<int> coef(-bound, bound);
    PolyMatrix m(n, n, vars);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) m.at(i, j) = RatFunc::constant(vars, coef(rng));
    return m;
}

PolyMatrix random_skew4(const VarSetPtr& vars, std::mt19937_64& rng, int bound = 99) {
    std::uniform_int_distribution<int> coef(-bound, bound);
    PolyMatrix m(4, 4, vars);
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = i + 1; j < 4; ++j) {
            Rational c = coef(rng);
            m.at(i, j) = RatFunc::constant(vars, c);
            m.at(j, i) = RatFunc::constant(vars, -c);
        }
    return m;
}

}  // namespace

TEST_CASE("determinant basics") {
    auto vars = make_vars({"t5", "t6", "t7"});
    PolyMatrix id(3, 3, vars);
    for (int i = 0; i < 3; ++i) id.at(i, i) = RatFunc::constant(vars, 1);
    CHECK(det(id) == RatFunc::constant(vars, 1));

    PolyMatrix d(3, 3, vars);
    d.at(0, 0) = RatFunc::variable(vars, "t5");
    d.at(1, 1) = RatFunc::variable(vars, "t6");
    d.at(2, 2) = RatFunc::variable(vars, "t7");
    auto t5 = MultiPoly::variable(vars, "t5");
    auto t6 = MultiPoly::variable(vars, "t6");
    auto t7 = MultiPoly::variable(vars, "t7");
    CHECK(det(d) == RatFunc(t5 * t6 * t7));

    PolyMatrix rect(2, 3, vars);
    CHECK_THROWS_AS(det(rect), ExactError);
}

TEST_CASE("det is multiplicative on random small matrices") {
    auto vars = make_vars({"x"});
    std::mt19937_64 rng(4242);
    for (size_t n = 2; n <= 5; ++n) {
        for (int trial = 0; trial < 25; ++trial) {
            PolyMatrix a = random_int_matrix(vars, n, rng);
            PolyMatrix b = random_int_matrix(vars, n, rng);
            CHECK(det(a * b) == det(a) * det(b));
        }
    }
}

TEST_CASE("pfaffian4 basics") {
    auto vars = make_vars({"x"});
    PolyMatrix m(4, 4, vars);
    m.at(0, 1) = RatFunc::constant(vars, 1);
    m.at(1, 0) = RatFunc::constant(vars, -1);
    m.at(2, 3) = RatFunc::constant(vars, 1);
    m.at(3, 2) = RatFunc::constant(vars, -1);
    CHECK(pfaffian4(m) == RatFunc::constant(vars, 1));

    m.at(0, 0) = RatFunc::constant(vars, 2);
    CHECK_THROWS_AS(pfaffian4(m), ExactError);
}

TEST_CASE("pf^2 == det for 1000 random 4x4 skew integer matrices") {
    auto vars = make_vars({"x"});
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 1000; ++trial) {
        PolyMatrix m = random_skew4(vars, rng);
        RatFunc pf = pfaffian4(m);
        CHECK(pf * pf == det(m));
    }
}

TEST_CASE("pf^2 == det for symbolic skew matrices") {
    auto vars = make_vars({"a", "b", "c", "d", "e", "f"});
    PolyMatrix m(4, 4, vars);
    const char* names[4][4] = {};
    names[0][1] = "a";
    names[0][2] = "b";
    names[0][3] = "c";
    names[1][2] = "d";
    names[1][3] = "e";
    names[2][3] = "f";
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = i + 1; j < 4; ++j) {
            m.at(i, j) = RatFunc::variable(vars, names[i][j]);
            m.at(j, i) = -m.at(i, j);
        }
    RatFunc pf = pfaffian4(m);
    CHECK(pf * pf == det(m));
}

TEST_CASE("subdet with full index sets equals det; bad indices rejected") {
    auto vars = make_vars({"x"});
    std::mt19937_64 rng(5);
    PolyMatrix a = random_int_matrix(vars, 4, rng);
    CHECK(subdet(a, {0, 1, 2, 3}, {0, 1, 2, 3}) == det(a));
    CHECK_THROWS_AS(subdet(a, {0, 1}, {0, 1, 2}), ExactError);
    CHECK_THROWS_AS(subdet(a, {0, 7}, {0, 1}), ExactError);
}

TEST_CASE("rank_at_point") {
    auto vars = make_vars({"x"});
    PolyMatrix a(3, 3, vars);
    auto x = RatFunc::variable(vars, "x");
    a.at(0, 0) = x;
    a.at(0, 1) = x * Rational(2);
    a.at(1, 0) = x * x;
    a.at(1, 1) = x * x * Rational(2);
    a.at(2, 2) = RatFunc::constant(vars, 1);
    CHECK(rank_at_point(a, {Rational(3)}) == 2);
}
