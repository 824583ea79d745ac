#include <catch2/catch_amalgamated.hpp>

#include "wgcalc/weingarten.hpp"

using namespace wgcalc;

namespace {

PairPartition pp(const std::string& s) { return PairPartition::parse(s); }

RatFrac bt_wg_1212() {
    MPoly M = var_M(), N = var_N(), b = var_b();
    return RatFrac(M * (M * N + b * M - b - 1), N * (N + b + 1) * (N - 1));
}

RatFrac bt_wg_cross() {
    MPoly M = var_M(), N = var_N(), b = var_b();
    return RatFrac(M * (N - M), N * (N + b + 1) * (N - 1));
}

RatFrac at_b1(const RatFrac& f) { return substitute(f, {{Var::b, RatFrac(1)}}); }

} // namespace

TEST_CASE("neighbors of the trivial pairing, profile BT") {
    auto edges = neighbors(PairPartition::trivial(2), Profile::BT);
    REQUIRE(edges.size() == 3);
    MPoly N = var_N();
    bool seen_1423 = false, seen_1324 = false, seen_b = false;
    for (const auto& e : edges) {
        if (e.type == 'A' && e.target == pp("(14|23)")) {
            seen_1423 = true;
            CHECK(frac_equal(e.weight, RatFrac(MPoly(-1), N)));
        } else if (e.type == 'A' && e.target == pp("(13|24)")) {
            seen_1324 = true;
            CHECK(frac_equal(e.weight, RatFrac(-var_b(), N)));
        } else if (e.type == 'B') {
            seen_b = true;
            CHECK(e.target == pp("(12)"));
            CHECK(frac_equal(e.weight, RatFrac(var_M(), N)));
        }
    }
    CHECK(seen_1423);
    CHECK(seen_1324);
    CHECK(seen_b);
}

TEST_CASE("neighbors of (14|23), profile BT, includes the C edge") {
    auto edges = neighbors(pp("(14|23)"), Profile::BT);
    bool seen_c = false;
    for (const auto& e : edges) {
        if (e.type == 'C') {
            seen_c = true;
            CHECK(e.target == pp("(12)"));
            CHECK(frac_equal(e.weight, RatFrac(MPoly(1), var_N())));
        }
        CHECK(e.type != 'B'); // {3,4} not a pair of (14|23)
    }
    CHECK(seen_c);
}

TEST_CASE("neighbors at k=1: single B edge") {
    for (Profile p : {Profile::O, Profile::A, Profile::B, Profile::BT}) {
        auto edges = neighbors(pp("(12)"), p);
        REQUIRE(edges.size() == 1);
        CHECK(edges[0].type == 'B');
        CHECK(edges[0].target.empty());
    }
    CHECK_THROWS_AS(neighbors(PairPartition(), Profile::O), EmptyPairPartition);
}

TEST_CASE("wg_solve level 1, profile BT: M/N") {
    const auto& table = wg_solve(1, Profile::BT);
    CHECK(frac_equal(table.value(pp("(12)")), RatFrac(var_M(), var_N())));
}

TEST_CASE("wg_solve level 2, profile BT, matches the known closed forms") {
    const auto& table = wg_solve(2, Profile::BT);
    CHECK(frac_equal(table.value(pp("(12|34)")), bt_wg_1212()));
    CHECK(frac_equal(table.value(pp("(14|23)")), bt_wg_cross()));
    CHECK(frac_equal(table.value(pp("(13|24)")), bt_wg_cross()));
}

TEST_CASE("solved tables satisfy their own orthogonality relations") {
    for (Profile p : {Profile::O, Profile::A, Profile::B, Profile::BT}) {
        for (int k = 1; k <= 3; ++k) {
            const auto& table = wg_solve(k, p);
            const auto& lower = wg_solve(k - 1, p);
            for (const auto& m : all_pair_partitions(k)) {
                RatFrac rhs(0);
                for (const auto& e : neighbors(m, p)) {
                    const auto& tbl = (e.type == 'A') ? table : lower;
                    rhs += e.weight * tbl.value(e.target);
                }
                CHECK(frac_equal(table.value(m), rhs));
            }
        }
    }
}

TEST_CASE("level 4 class-reduced solve passes every relation for all profiles") {
    // construction throws if any of the 105 relations fails
    for (Profile p : {Profile::O, Profile::A, Profile::B, Profile::BT}) {
        const auto& table = wg_solve(4, p);
        CHECK(table.classes.size() == 5);
    }
}

TEST_CASE("classical orthogonal values at levels 2 and 3") {
    MPoly N = var_N();
    const auto& t2 = wg_solve(2, Profile::O);
    MPoly d2 = N * (N - 1) * (N + 2);
    CHECK(frac_equal(t2.classes.at(Partition({1, 1})), RatFrac(N + 1, d2)));
    CHECK(frac_equal(t2.classes.at(Partition({2})), RatFrac(MPoly(-1), d2)));

    const auto& t3 = wg_solve(3, Profile::O);
    MPoly d3 = d2 * (N - 2) * (N + 4);
    CHECK(frac_equal(t3.classes.at(Partition({1, 1, 1})), RatFrac(N * N + 3 * N - 2, d3)));
    CHECK(frac_equal(t3.classes.at(Partition({2, 1})),
                     RatFrac(MPoly(-1), N * (N - 1) * (N - 2) * (N + 4))));
    CHECK(frac_equal(t3.classes.at(Partition({3})), RatFrac(MPoly(2), d3)));
}

TEST_CASE("b=0 recovers the classical unitary values on permutation pairings") {
    // sigma embeds as {2i-1, 2 sigma(i)}; the identity at level k is e_k
    auto at_b0 = [](const RatFrac& f) { return substitute(f, {{Var::b, RatFrac(0)}}); };
    MPoly N = var_N();
    const auto& t2 = wg_solve(2, Profile::B);
    CHECK(frac_equal(at_b0(t2.value(PairPartition::trivial(2))), RatFrac(MPoly(1), N * N - 1)));
    CHECK(frac_equal(at_b0(t2.value(pp("(14|23)"))), RatFrac(MPoly(-1), N * (N * N - 1))));

    const auto& t3 = wg_solve(3, Profile::B);
    MPoly d3 = N * (N * N - 1) * (N * N - 4);
    CHECK(frac_equal(at_b0(t3.value(PairPartition::trivial(3))), RatFrac(N * N - 2, d3)));
    // a transposition and a 3-cycle of S_3, embedded
    CHECK(frac_equal(at_b0(t3.value(pp("(1 4|2 3|5 6)"))),
                     RatFrac(MPoly(-1), (N * N - 1) * (N * N - 4))));
    CHECK(frac_equal(at_b0(t3.value(pp("(1 4|3 6|2 5)"))), RatFrac(MPoly(2), d3)));
}

TEST_CASE("b=1 specialisation chain") {
    for (int k = 1; k <= 3; ++k) {
        const auto& bt = wg_solve(k, Profile::BT);
        const auto& a = wg_solve(k, Profile::A);
        const auto& bo = wg_solve(k, Profile::B);
        const auto& o = wg_solve(k, Profile::O);
        for (const auto& [ty, v] : bt.classes) CHECK(frac_equal(at_b1(v), a.classes.at(ty)));
        for (const auto& [ty, v] : bo.classes) CHECK(frac_equal(at_b1(v), o.classes.at(ty)));
    }
}

TEST_CASE("b=1 BT values satisfy the A-profile orthogonality relations") {
    for (int k = 1; k <= 2; ++k) {
        const auto& bt = wg_solve(k, Profile::BT);
        const auto& bt_low = wg_solve(k - 1, Profile::BT);
        for (const auto& m : all_pair_partitions(k)) {
            RatFrac rhs(0);
            for (const auto& e : neighbors(m, Profile::A)) {
                const auto& tbl = (e.type == 'A') ? bt : bt_low;
                rhs += e.weight * at_b1(tbl.value(e.target));
            }
            CHECK(frac_equal(at_b1(bt.value(m)), rhs));
        }
    }
}

TEST_CASE("path series: one B edge at k=1") {
    TruncSeries s = path_series(pp("(12)"), Profile::O, 2);
    CHECK(s.at(0).is_zero());
    CHECK(frac_equal(s.at(1), RatFrac(1)));
    CHECK(s.at(2).is_zero());

    // profile BT: single path of length 1, coefficient 1/(1-t) at r = 0
    TruncSeries sbt = path_series(pp("(12)"), Profile::BT, 2);
    CHECK(frac_equal(sbt.at(0), RatFrac(MPoly(1), MPoly(1) - var_t())));
    CHECK(sbt.at(1).is_zero());
}

TEST_CASE("path series: trivial pairing of P_2, profile O, through length 2") {
    TruncSeries s = path_series(PairPartition::trivial(2), Profile::O, 2);
    CHECK(s.at(0).is_zero());
    CHECK(s.at(1).is_zero());
    CHECK(frac_equal(s.at(2), RatFrac(1))); // the unique B,B path
}

TEST_CASE("path series agrees with the expanded closed form, profile BT") {
    std::map<Var, RatFrac> sub{{Var::M, RatFrac(var_N(), MPoly(1) - var_t())}};
    for (const auto& m : all_pair_partitions(2)) {
        const int R = 3;
        TruncSeries paths = path_series(m, Profile::BT, R + 2); // length bound r_max + k
        RatFrac closed = substitute(wg_solve(2, Profile::BT).value(m), sub);
        TruncSeries expanded = series_at_infinity(closed, R);
        for (int r = 0; r <= R; ++r) CHECK(frac_equal(paths.at(r), expanded.at(r)));
    }
    // same check at k = 1
    TruncSeries paths = path_series(pp("(12)"), Profile::BT, 4);
    RatFrac closed = substitute(wg_solve(1, Profile::BT).value(pp("(12)")), sub);
    TruncSeries expanded = series_at_infinity(closed, 3);
    for (int r = 0; r <= 3; ++r) CHECK(frac_equal(paths.at(r), expanded.at(r)));
}

TEST_CASE("path series agrees with the closed form, profile O") {
    for (const auto& m : all_pair_partitions(2)) {
        const int R = 5;
        TruncSeries paths = path_series(m, Profile::O, R);
        TruncSeries expanded = series_at_infinity(wg_solve(2, Profile::O).value(m), R);
        // a path to (~) has length >= k, and coefficients of index r are
        // complete once r <= R - k... for profile O the index is the length
        for (int r = 0; r <= R - 2; ++r) CHECK(frac_equal(paths.at(r), expanded.at(r)));
    }
}

TEST_CASE("integrate_monomial") {
    // single entry squared: A_11 integrates to M/N
    CHECK(integrate_monomial({1, 1}, 2, 5) == rat(2, 5));

    // trace: sum over i of A_ii integrates to M
    for (long N = 3; N <= 5; ++N) {
        Rational total = 0;
        for (long i = 1; i <= N; ++i) total += integrate_monomial({static_cast<int>(i), static_cast<int>(i)}, 2, N);
        CHECK(total == Rational(2));
    }

    // constant index function at k=2: all three pairings admissible
    std::map<Var, Rational> at{{Var::M, Rational(2)}, {Var::N, Rational(7)},
                               {Var::b, Rational(1)}};
    Rational expect = bt_wg_1212().evaluate(at) + bt_wg_cross().evaluate(at) * 2;
    CHECK(integrate_monomial({1, 1, 1, 1}, 2, 7) == expect);

    CHECK_THROWS_AS(integrate_monomial({1, 1}, 5, 3), ParameterOutOfRange);
    CHECK_THROWS_AS(integrate_monomial({1, 8}, 2, 7), ParameterOutOfRange);
}

TEST_CASE("jucys-murphy product formula") {
    CHECK(jm_product_check(1, Profile::A));
    CHECK(jm_product_check(2, Profile::A));
    CHECK(jm_product_check(3, Profile::A));
    CHECK(jm_product_check(1, Profile::BT));
    CHECK(jm_product_check(2, Profile::BT));
    CHECK(jm_product_check(3, Profile::BT));
    CHECK_THROWS_AS(jm_product_check(4, Profile::BT), ParameterOutOfRange);
}
