#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <array>

#include "wgcalc/pairings.hpp"

using namespace wgcalc;

namespace {

PairPartition pp(const std::string& s) { return PairPartition::parse(s); }

// Applies a full permutation (one-line images) to a pair partition.
PairPartition act_perm(const std::vector<int>& image, const PairPartition& m) {
    std::vector<std::pair<int, int>> ps;
    for (const auto& [x, y] : m.pairs()) ps.emplace_back(image[x - 1], image[y - 1]);
    return PairPartition(std::move(ps));
}

// All permutations of {1..n} commuting with (1 2)(3 4)...(2k-1 2k).
std::vector<std::vector<int>> hyperoctahedral(int k) {
    int n = 2 * k;
    std::vector<int> image(n);
    std::iota(image.begin(), image.end(), 1);
    auto iota_inv = [&](int v) { return (v % 2) ? v + 1 : v - 1; };
    std::vector<std::vector<int>> out;
    do {
        bool ok = true;
        for (int v = 1; v <= n && ok; ++v)
            ok = image[iota_inv(v) - 1] == iota_inv(image[v - 1]);
        if (ok) out.push_back(image);
    } while (std::next_permutation(image.begin(), image.end()));
    return out;
}

} // namespace

TEST_CASE("canonical form, parsing and printing") {
    PairPartition m = pp("(2 6 | 1 8|3 9|4 10|5 7)");
    CHECK(m.str() == "(1 8|2 6|3 9|4 10|5 7)");
    CHECK(pp("(~)").empty());
    CHECK(pp("(14|23)") == pp("(1 4 | 2 3)"));
    CHECK(PairPartition::trivial(3).str() == "(1 2|3 4|5 6)");
    CHECK_THROWS(pp("(1 1|2 3)"));
}

TEST_CASE("enumeration counts (2k-1)!!") {
    std::array<size_t, 7> expect = {1, 1, 3, 15, 105, 945, 10395};
    for (int k = 0; k <= 6; ++k) {
        auto all = all_pair_partitions(k);
        CHECK(all.size() == expect[k]);
        CHECK(std::is_sorted(all.begin(), all.end()));
    }
}

TEST_CASE("transposition action") {
    CHECK(PairPartition::trivial(2).act(2, 3) == pp("(13|24)"));
    // fixed pair
    CHECK(PairPartition::trivial(2).act(1, 2) == PairPartition::trivial(2));
    // worked example from P_5
    PairPartition m = pp("(1 8|2 6|3 9|4 10|5 7)");
    CHECK(m.act(3, 7) == pp("(1 8|2 6|3 5|4 10|7 9)"));
    CHECK(m.act(5, 9) == pp("(1 8|2 6|3 5|4 10|7 9)"));
    CHECK_THROWS_AS(m.act(0, 3), IndexOutOfRange);
}

TEST_CASE("coset type") {
    for (int k = 1; k <= 4; ++k)
        CHECK(PairPartition::trivial(k).coset_type() == Partition(std::vector<int>(k, 1)));
    CHECK(pp("(13|24)").coset_type() == Partition({2}));
    CHECK(pp("(14|23)").coset_type() == Partition({2}));
    PairPartition m = pp("(1 8|2 6|3 9|4 10|5 7)");
    CHECK(m.coset_type().size() == 5);
    // cycle structure read off the explicit graph walk: lengths 6 and 4
    CHECK(m.coset_type() == Partition({3, 2}));
}

TEST_CASE("representative pairing of each coset type") {
    for (int k = 1; k <= 5; ++k)
        for (const auto& la : all_partitions(k))
            CHECK(pairing_of_coset_type(la).coset_type() == la);
}

TEST_CASE("charges") {
    auto q1 = PairPartition::trivial(1).charges();
    CHECK(q1[2] == +1);
    CHECK(q1[1] == -1);

    // the worked P_5 example: q(3) = +, q(7) = -
    auto q = pp("(1 8|2 6|3 9|4 10|5 7)").charges();
    CHECK(q[3] == +1);
    CHECK(q[7] == -1);
    CHECK(q[1] == -1);
    CHECK(q[2] == +1);
    CHECK(q[10] == +1);

    auto q2 = pp("(13|24)").charges();
    CHECK(q2[4] == +1);
    CHECK(q2[3] == -1);
    CHECK(q2[2] == -1);
    CHECK(q2[1] == +1);

    CHECK_THROWS_AS(PairPartition().charges(), EmptyPairPartition);
}

TEST_CASE("charges are balanced and alternate along edges") {
    for (int k = 1; k <= 4; ++k) {
        for (const auto& m : all_pair_partitions(k)) {
            auto q = m.charges();
            int plus = 0;
            for (int v = 1; v <= 2 * k; ++v) plus += q[v] == +1;
            CHECK(plus == k);
            for (const auto& [x, y] : m.pairs()) CHECK(q[x] != q[y]);
            for (int i = 1; i <= k; ++i) CHECK(q[2 * i - 1] != q[2 * i]);
        }
    }
}

TEST_CASE("omega weight function") {
    MPoly b = var_b();
    // diagonal values
    for (const auto& m : all_pair_partitions(2)) CHECK(omega_b(m, m) == b);
    CHECK(omega_b(PairPartition(), PairPartition()) == MPoly(1));

    CHECK(omega_b(PairPartition::trivial(2), pp("(13|24)")) == b);
    CHECK(omega_b(pp("(13|24)"), PairPartition::trivial(2)) == MPoly(1));

    // size mismatch
    CHECK(omega_b(pp("(12)"), PairPartition::trivial(2)) == MPoly(0));
    // no transposition relates (12|34) and itself-after-two-swaps
    CHECK(omega_b(pp("(13|24)"), pp("(13|24)")) == b);

    PairPartition m = pp("(1 8|2 6|3 9|4 10|5 7)");
    CHECK(omega_b(m, m.act(3, 7)) == b);
}

TEST_CASE("omega is nonzero exactly on transposition-related pairs") {
    for (int k = 2; k <= 3; ++k) {
        auto all = all_pair_partitions(k);
        for (const auto& m : all) {
            for (const auto& n : all) {
                bool related = false;
                for (int i = 1; i <= 2 * k && !related; ++i)
                    for (int j = i + 1; j <= 2 * k && !related; ++j)
                        related = m.act(i, j) == n;
                CHECK(omega_b(m, n).is_zero() == !related);
            }
        }
    }
}

TEST_CASE("omega is well-defined: both carrying transpositions agree") {
    for (int k = 2; k <= 3; ++k) {
        auto all = all_pair_partitions(k);
        for (const auto& m : all) {
            auto q = m.charges();
            for (const auto& n : all) {
                if (m == n) continue;
                std::vector<MPoly> vals;
                for (int i = 1; i <= 2 * k; ++i)
                    for (int j = i + 1; j <= 2 * k; ++j)
                        if (m.act(i, j) == n)
                            vals.push_back(q[i] == q[j] ? MPoly(1) : var_b());
                if (vals.empty()) continue;
                CHECK(vals.size() == 2);
                CHECK(vals[0] == vals[1]);
                CHECK(vals[0] == omega_b(m, n));
            }
        }
    }
}

TEST_CASE("omega fast path agrees with the search path") {
    for (const auto& m : all_pair_partitions(3)) {
        for (int i = 1; i <= 6; ++i)
            for (int j = i + 1; j <= 6; ++j)
                CHECK(omega_b_move(m, i, j) == omega_b(m, m.act(i, j)));
    }
}

TEST_CASE("coset type is invariant under the hyperoctahedral action") {
    // H_2 is the centraliser of (1 2)(3 4); the paper lists its 8 elements.
    auto h2 = hyperoctahedral(2);
    CHECK(h2.size() == 8);
    for (const auto& rho : h2)
        for (const auto& m : all_pair_partitions(2))
            CHECK(act_perm(rho, m).coset_type() == m.coset_type());

    auto h3 = hyperoctahedral(3);
    CHECK(h3.size() == 48);
    for (const auto& rho : h3)
        for (const auto& m : all_pair_partitions(3))
            CHECK(act_perm(rho, m).coset_type() == m.coset_type());
}

TEST_CASE("connectivity of factorisations") {
    CHECK(is_connected_factorisation({}, 1));
    CHECK(!is_connected_factorisation({}, 2));
    CHECK(is_connected_factorisation({{2, 3}}, 2));
    CHECK_THROWS_AS(is_connected_factorisation({{1, 9}}, 2), IndexOutOfRange);
}

TEST_CASE("admissibility predicates") {
    PairPartition m = PairPartition::trivial(2);
    CHECK(admissible(m, {1, 1, 2, 2}));
    CHECK(strongly_admissible(m, {1, 1, 2, 2}));
    CHECK(admissible(m, {1, 1, 1, 1}));
    CHECK(!strongly_admissible(m, {1, 1, 1, 1}));
    CHECK(!admissible(m, {1, 2, 3, 3}));
}
