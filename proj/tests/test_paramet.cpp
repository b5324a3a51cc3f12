#include <catch2/catch_amalgamated.hpp>

#include "buchi/paramet.hpp"
#include "buchi/quadsys.hpp"

#include <set>

using namespace buchi;

namespace {
PairTuple P(std::initializer_list<std::pair<int64_t, int64_t>> ps) {
    PairTuple p;
    for (auto [x, y] : ps) p.pairs.emplace_back(x, y);
    return p;
}
}  // namespace

TEST_CASE("gcd_split examples") {
    auto g1 = gcd_split({4, 3}, {6, 2});
    CHECK(g1.v == 2);
    CHECK(g1.w == 1);
    CHECK(g1.u_fwd == 2);
    CHECK(g1.u_bwd == 3);

    auto g2 = gcd_split({36, 35}, {42, 30});
    CHECK(g2.v == 6);
    CHECK(g2.w == 5);
    CHECK(g2.u_fwd == 6);
    CHECK(g2.u_bwd == 7);

    auto g3 = gcd_split({126, 120}, {135, 112});
    CHECK(g3.v == 9);
    CHECK(g3.w == 8);
    CHECK(g3.u_fwd == 14);
    CHECK(g3.u_bwd == 15);

    CHECK_THROWS_AS(gcd_split({4, 3}, {5, 2}), ExactError);
}

TEST_CASE("order_normalize") {
    auto fixed = order_normalize(P({{36, 35}, {30, 42}, {45, 28}}));
    CHECK(fixed.pairs == P({{36, 35}, {42, 30}, {45, 28}}).pairs);

    auto already = order_normalize(P({{36, 35}, {42, 30}, {45, 28}}));
    CHECK(already.pairs == P({{36, 35}, {42, 30}, {45, 28}}).pairs);

    auto flipped = order_normalize(P({{35, 36}, {30, 42}, {28, 45}}));
    CHECK(flipped.pairs[0] == std::make_pair(Integer(36), Integer(35)));
    CHECK(is_ordered(flipped));

    CHECK_THROWS_AS(order_normalize(P({{1, 0}, {2, 0}})), ExactError);  // trivial
}

TEST_CASE("ordered tuples are monotone (ordlem1)") {
    for (const auto& c : search_chains(3, 3000)) {
        PairTuple p = order_normalize(c);
        for (size_t i = 1; i < p.n(); ++i) {
            CHECK(p.pairs[i].first >= p.pairs[i - 1].first);
            CHECK(p.pairs[i].second <= p.pairs[i - 1].second);
        }
    }
}

TEST_CASE("build_param_seq frozen examples") {
    auto triple = build_param_seq(P({{36, 35}, {42, 30}, {45, 28}}));
    CHECK(triple.s == std::vector<Integer>{3, 1, 3, 5, 2, 7, 2, 1});

    auto pair2 = build_param_seq(P({{4, 3}, {6, 2}}));
    CHECK(pair2.s == std::vector<Integer>{2, 3, 2, 1});

    // the quadruple split is not unique; the canonical sequence must at least
    // reconstruct the chain, and the 8-prefix products r_j = s_j s_{j+8}
    // must match the triple-level sequence of the first three pairs
    PairTuple quad = P({{126, 120}, {135, 112}, {140, 108}, {144, 105}});
    auto seq = build_param_seq(quad);
    REQUIRE(seq.s.size() == 16);
    CHECK(reconstruct(seq).pairs == quad.pairs);
    auto triple_prefix = build_param_seq(P({{126, 120}, {135, 112}, {140, 108}}));
    for (int j = 0; j < 8; ++j) CHECK(seq.s[j] * seq.s[j + 8] == triple_prefix.s[j]);
}

TEST_CASE("reconstruct examples") {
    ParamSeq s1{3, {3, 1, 3, 5, 2, 7, 2, 1}};
    CHECK(reconstruct(s1).pairs == P({{36, 35}, {42, 30}, {45, 28}}).pairs);

    ParamSeq ones{3, std::vector<Integer>(8, 1)};
    for (auto& [x, y] : reconstruct(ones).pairs) {
        CHECK(x == 1);
        CHECK(y == 1);
    }

    ParamSeq s2{2, {2, 3, 2, 1}};
    CHECK(reconstruct(s2).pairs == P({{4, 3}, {6, 2}}).pairs);
}

TEST_CASE("round trip: reconstruct(build_param_seq(p)) == p on search output") {
    int count = 0;
    for (int n : {3, 4}) {
        for (const auto& c : search_chains(n, n == 3 ? 100000 : 2000000, {.shards = 4})) {
            PairTuple p = order_normalize(c);
            ParamSeq seq = build_param_seq(p);
            for (const auto& e : seq.s) CHECK(e > 0);
            CHECK(reconstruct(seq).pairs == p.pairs);
            ++count;
        }
    }
    CHECK(count >= 23);
}

TEST_CASE("structural constants") {
    ParamSeq triple{3, {3, 1, 3, 5, 2, 7, 2, 1}};
    auto c3 = structural_constants(triple);
    REQUIRE(c3.beta1.has_value());
    CHECK(*c3.beta1 == 1);

    PairTuple quad = P({{126, 120}, {135, 112}, {140, 108}, {144, 105}});
    auto seq = build_param_seq(quad);
    auto c4 = structural_constants(seq);
    CHECK(*c4.beta1 == 2);  // r1*r3 - r4*r6 = 20 - 18 on the 8-prefix products
    CHECK((*c4.beta2 == 1 || *c4.beta2 == 2));
    CHECK((*c4.delta1 == 1 || *c4.delta1 == 3));

    ParamSeq bad{3, {1, 1, 1, 1, 1, 1, 1, 1}};  // all-ones: every difference 0
    CHECK_THROWS_AS(structural_constants(bad), ExactError);
}

TEST_CASE("lexicon map") {
    for (int j = 0; j <= 15; ++j) CHECK(lexicon_map(5, j) == std::make_pair(j, j + 16));
    CHECK(lexicon_map(1, 5) == std::make_pair(10, 11));
    CHECK(lexicon_map(4, 9) == std::make_pair(17, 25));
    CHECK_THROWS_AS(lexicon_map(6, 0), ExactError);
    CHECK_THROWS_AS(lexicon_map(1, 16), ExactError);

    // injective per i; image covers exactly the index pairs differing in bit i-1
    for (int i = 1; i <= 5; ++i) {
        std::set<std::pair<int, int>> image;
        for (int j = 0; j <= 15; ++j) {
            auto [lo, hi] = lexicon_map(i, j);
            CHECK(hi == lo + (1 << (i - 1)));
            CHECK((lo >> (i - 1) & 1) == 0);
            image.insert({lo, hi});
        }
        CHECK(image.size() == 16);
    }
}

TEST_CASE("tripara reductions hold for every pattern instance") {
    std::vector<Rational> betas = {1, 2};
    std::vector<Rational> deltas = {1, 3};
    // plain (1,1) with outer beta
    for (const auto& b : betas) CHECK(verify_tripara_reduction({1, 1, 1, 1, b}));
    // stretched second gap: (a,b) = (1,1), (c,d) = (beta, 2/beta), outer 3/delta
    for (const auto& b : betas)
        for (const auto& d : deltas)
            CHECK(verify_tripara_reduction({1, 1, b, 2 / b, Rational(3) / d}));
    // stretched first gap: (a,b) = (beta, 2/beta), (c,d) = (1,1), outer 3/delta
    for (const auto& b : betas)
        for (const auto& d : deltas)
            CHECK(verify_tripara_reduction({b, 2 / b, 1, 1, Rational(3) / d}));
    CHECK_THROWS_AS(skew_triple_relations({1, 1, 3, 1, 1}), ExactError);
}

TEST_CASE("quad system kernel identities") {
    // A * (r3, r6, r9, r12) is the expected combination of defining relations
    auto check_system = [](const TriparaPattern& f, const TriparaPattern& s) {
        QuadSystem q = make_quad_system(f, s);
        auto rows = quad_matrix_times_kernel(q);
        auto rel = quad_relations(q);
        auto R = [&](int i) { return RatFunc(q.rp(i)); };
        Rational e1 = f.e, e2 = s.e;
        CHECK((rows[0] - (e2 * R(11) * RatFunc(rel[1]) - e1 * R(2) * RatFunc(rel[6]))).is_zero());
        CHECK((rows[1] - (e2 * R(14) * RatFunc(rel[3]) - e1 * R(7) * RatFunc(rel[7]))).is_zero());
        CHECK((rows[2] - (e1 * R(8) * RatFunc(rel[4]) - e2 * R(1) * RatFunc(rel[0]))).is_zero());
        CHECK((rows[3] - (e1 * R(13) * RatFunc(rel[5]) - e2 * R(4) * RatFunc(rel[2]))).is_zero());
        CHECK(quad_skew_matrix(q).is_skew_symmetric());
    };
    check_system({1, 1, 1, 1, 1}, {1, 1, 1, 1, 2});               // plain quadruple
    check_system({1, 1, 1, 1, 2}, {1, 1, 2, Rational(1, 2), 3});  // B4-shaped
    check_system({2, Rational(1, 2), 1, 1, 3}, {1, 1, 1, 1, 1});  // B2-shaped
    CHECK_THROWS_AS(make_quad_system({1, 1, 2, 1, 1}, {1, 1, 1, 1, 1}), ExactError);
}

TEST_CASE("triple_from_seed") {
    auto t1 = triple_from_seed(1, 5, 2, 2, 1);
    REQUIRE(t1.tuple.has_value());
    CHECK(t1.seq.s == std::vector<Integer>{3, 1, 3, 5, 2, 7, 2, 1});
    CHECK(t1.tuple->u == std::vector<Integer>{1, 12, 17});
    CHECK(!t1.degenerate);

    auto t2 = triple_from_seed(1, 3, 2, 1, 1);
    REQUIRE(t2.tuple.has_value());
    CHECK(t2.tuple->u == std::vector<Integer>{0, 7, 10});

    auto t3 = triple_from_seed(1, 1, 0, 0, 1);
    CHECK(t3.degenerate);
    CHECK(!t3.tuple.has_value());

    CHECK_THROWS_AS(triple_from_seed(1, 1, 1, 1, 1), ExactError);  // s1*s3 - s4*s6 = 0 != beta
    CHECK_THROWS_AS(triple_from_seed(3, 2, 2, 2, 2), ExactError);  // 2 does not divide s1+s4 = 5
}

TEST_CASE("triple_from_seed output always passes classify") {
    int built = 0;
    for (int s1 = 1; s1 <= 12; ++s1)
        for (int s3 = 1; s3 <= 12; ++s3)
            for (int s4 = 1; s4 <= 12; ++s4)
                for (int s6 = 1; s6 <= 12; ++s6) {
                    Integer beta = Integer(s1) * s3 - Integer(s4) * s6;
                    if (beta != 1 && beta != 2) continue;
                    int b = int(beta);
                    if ((s3 - s6) % b != 0 || (s1 + s4) % b != 0) continue;
                    auto r = triple_from_seed(s1, s3, s4, s6, beta);
                    if (!r.tuple) continue;
                    auto c = classify(*r.tuple);
                    CHECK(c.valid);
                    ++built;
                }
    CHECK(built > 50);
}

TEST_CASE("seed recovery reproduces search triples") {
    for (const auto& c : search_chains(3, 20000)) {
        PairTuple p = order_normalize(c);
        ParamSeq seq = build_param_seq(p);
        TripleSeed seed = recover_triple_seed(seq);
        CHECK((seed.beta == 1 || seed.beta == 2));
        auto r = triple_from_seed(seed.s1, seed.s3, seed.s4, seed.s6, seed.beta);
        REQUIRE(r.tuple.has_value());
        CHECK(r.seq.s == seq.s);
        CHECK(r.tuple->u == tuple_from_pairs(p).u);
    }
}

TEST_CASE("quadruple symbolic identities for all 12 assignments") {
    for (const Rational& b1 : {Rational(1), Rational(2)})
        for (const Rational& b2 : {Rational(1), Rational(2)})
            for (const Rational& d : {Rational(1), Rational(2), Rational(3)}) {
                auto rep = quadruple_reconstruct_symbolic(b1, b2, d);
                INFO("beta1=" << b1 << " beta2=" << b2 << " delta=" << d);
                CHECK(rep.relations_vanish);
                CHECK(rep.pfaffian_vanishes);
                CHECK(rep.ratio_is_delta);
                CHECK(rep.r8_matches_display);
            }
}

TEST_CASE("quadruple concrete round trip on the D=15120 chain") {
    PairTuple quad = P({{126, 120}, {135, 112}, {140, 108}, {144, 105}});
    ParamSeq seq = build_param_seq(quad);
    auto c = structural_constants(seq);
    std::array<Integer, 16> frees{};
    for (int i : {1, 2, 4, 7, 9, 11, 12, 14}) frees[i] = seq.s[i];
    ParamSeq back = quadruple_reconstruct_concrete(frees, Rational(*c.beta1), Rational(*c.beta2),
                                                   Rational(*c.delta1));
    CHECK(back.s == seq.s);

    // non-integral case: distort one free entry
    frees[9] += 1;
    CHECK_THROWS_AS(quadruple_reconstruct_concrete(frees, Rational(*c.beta1), Rational(*c.beta2),
                                                   Rational(*c.delta1)),
                    ExactError);
}

TEST_CASE("gcd-of-nonconsecutive-pairs caveat") {
    // gcd(x1,x3)*gcd(x1,y3) can exceed x1; the sub-product route is required
    Integer x1 = 126, x3 = 140, y3 = 108;
    CHECK(igcd(x1, x3) * igcd(x1, y3) > x1);
}
