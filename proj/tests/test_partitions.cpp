#include <catch2/catch_amalgamated.hpp>

#include "wgcalc/partitions.hpp"

using namespace wgcalc;

TEST_CASE("partition basics and enumeration") {
    CHECK(Partition({3, 1, 2}).parts() == std::vector<int>({3, 2, 1}));
    CHECK(all_partitions(0).size() == 1);
    CHECK(all_partitions(4).size() == 5);
    CHECK(all_partitions(6).size() == 11);
    CHECK(all_partitions(5).front() == Partition({5}));
    CHECK(all_partitions(5).back() == Partition({1, 1, 1, 1, 1}));
    CHECK(Partition({4, 2, 1}).conjugate() == Partition({3, 2, 1, 1}));
}

TEST_CASE("dominance order") {
    CHECK(dominance_less(Partition({1, 1, 1}), Partition({3})));
    CHECK(dominance_less(Partition({2, 1}), Partition({3})));
    CHECK(!dominance_less(Partition({3}), Partition({2, 1})));
    // (3,3) and (4,1,1) are incomparable
    CHECK(!dominance_less(Partition({3, 3}), Partition({4, 1, 1})));
    CHECK(!dominance_less(Partition({4, 1, 1}), Partition({3, 3})));
}

TEST_CASE("z_lambda") {
    CHECK(z_lambda(Partition({1, 1})) == 2);
    CHECK(z_lambda(Partition({2})) == 2);
    CHECK(z_lambda(Partition({3, 1, 1})) == 6); // 3 * (1^2 * 2!)
}

TEST_CASE("b-contents across the (5,4,4,2) diagram") {
    CHECK(b_content(1, 1) == MPoly(0));
    CHECK(b_content(1, 5) == var_b() * 4 + MPoly(4));
    CHECK(b_content(4, 1) == MPoly(-3));
    CHECK(b_content(3, 3) == var_b() * 2); // "2b"
    CHECK_THROWS_AS(b_content(0, 1), IndexOutOfRange);
}

TEST_CASE("hook products") {
    // corner box of (5,4,4,2): arm 4, leg 3, so h_b = 4b+8
    Partition la({5, 4, 4, 2});
    int a = arm(la, 1, 1), l = leg(la, 1, 1);
    CHECK((var_b() + MPoly(1)) * a + MPoly(l + 1) == var_b() * 4 + MPoly(8));

    auto [h1, h1p] = hook_products(Partition({1}));
    CHECK(h1 == MPoly(1));
    CHECK(h1p == var_b() + MPoly(1));

    auto [h2, h2p] = hook_products(Partition({2}));
    CHECK(h2 == var_b() + MPoly(2));
    CHECK(h2p == (var_b() * 2 + MPoly(2)) * (var_b() + MPoly(1)));
}

TEST_CASE("hook products at b=0 agree and give integer dimensions") {
    for (int k = 1; k <= 6; ++k) {
        for (const auto& la : all_partitions(k)) {
            auto [h, hp] = hook_products(la);
            CHECK(h.subst(Var::b, MPoly(0)) == MPoly(Rational(hook0(la))));
            CHECK(hp.subst(Var::b, MPoly(0)) == MPoly(Rational(hook0(la))));
            Integer d = factorial(k);
            CHECK(d % hook0(la) == 0);
        }
    }
}

TEST_CASE("standard tableaux enumeration") {
    CHECK(standard_tableaux(Partition({1, 1, 1})).size() == 1);
    CHECK(standard_tableaux(Partition({2, 1})).size() == 2);
    CHECK(standard_tableaux_all(3).size() == 4);

    // counts agree with the hook length formula, totals are involution numbers
    std::vector<long> involutions = {1, 2, 4, 10, 26};
    for (int k = 1; k <= 5; ++k) {
        long total = 0;
        for (const auto& la : all_partitions(k)) {
            auto tabs = standard_tableaux(la);
            CHECK(Integer(static_cast<long>(tabs.size())) == dim_lambda(la));
            total += static_cast<long>(tabs.size());
        }
        CHECK(total == involutions[k - 1]);
    }
}

TEST_CASE("tableau box removal and containment") {
    auto tabs = standard_tableaux(Partition({2, 1}));
    for (const auto& t : tabs) {
        Tableau bar = t.removed_top();
        CHECK(bar.size() == 2);
        CHECK(t.contains(bar));
    }
}

TEST_CASE("content multiset sum identity") {
    for (int k = 1; k <= 6; ++k) {
        for (const auto& la : all_partitions(k)) {
            MPoly sum(0);
            for (const auto& c : contents_multiset(la)) sum += c;
            MPoly expected = (var_b() + MPoly(1)) * MPoly(Rational(la.conjugate().n_stat())) -
                             MPoly(Rational(la.n_stat()));
            CHECK(sum == expected);
        }
    }
}

TEST_CASE("addable shapes") {
    auto shapes = addable_shapes(Partition({2, 1}));
    REQUIRE(shapes.size() == 3);
    CHECK(shapes[0] == Partition({3, 1}));
    CHECK(shapes[1] == Partition({2, 2}));
    CHECK(shapes[2] == Partition({2, 1, 1}));
}
