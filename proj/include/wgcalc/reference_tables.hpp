#pragma once

#include <vector>

#include "wgcalc/mpoly.hpp"
#include "wgcalc/partitions.hpp"

namespace wgcalc {

// Known low-order bt-monotone Hurwitz numbers, used by the verification
// harness. Each entry stores (prod mu_i) * H_{g,n}(mu) as a polynomial in
// (b, t), with the genus doubled.
struct ReferenceHurwitz {
    int g2;
    std::vector<int> mu;
    MPoly scaled_value; // (prod mu_i) H
};

namespace detail {

using BRow = std::initializer_list<std::pair<int, long>>;          // (b-exp, coef)
using TSpec = std::initializer_list<std::pair<int, BRow>>;         // (t-exp, b-poly)

inline MPoly tb(TSpec spec) {
    MPoly out(0);
    for (const auto& [texp, brow] : spec)
        for (const auto& [bexp, c] : brow)
            out += MPoly::term(Rational(c), {{Var::t, texp}, {Var::b, bexp}});
    return out;
}

} // namespace detail

// H_{g,1}(lambda) for 2g in 0..3 and lambda = (2)..(6).
inline std::vector<ReferenceHurwitz> reference_table_n1() {
    using detail::tb;
    std::vector<ReferenceHurwitz> rows;
    auto add = [&](int g2, int la, MPoly v) { rows.push_back({g2, {la}, std::move(v)}); };
    // g = 0
    add(0, 2, tb({{1, {{0, 1}}}}));
    add(0, 3, tb({{2, {{0, 1}}}, {1, {{0, 1}}}}));
    add(0, 4, tb({{3, {{0, 1}}}, {2, {{0, 3}}}, {1, {{0, 1}}}}));
    add(0, 5, tb({{4, {{0, 1}}}, {3, {{0, 6}}}, {2, {{0, 6}}}, {1, {{0, 1}}}}));
    add(0, 6, tb({{5, {{0, 1}}}, {4, {{0, 10}}}, {3, {{0, 20}}}, {2, {{0, 10}}}, {1, {{0, 1}}}}));
    // g = 1/2
    add(1, 2, tb({{1, {{1, 1}}}}));
    add(1, 3, tb({{2, {{1, 3}}}, {1, {{1, 3}}}}));
    add(1, 4, tb({{3, {{1, 6}}}, {2, {{1, 17}}}, {1, {{1, 6}}}}));
    add(1, 5, tb({{4, {{1, 10}}}, {3, {{1, 55}}}, {2, {{1, 55}}}, {1, {{1, 10}}}}));
    add(1, 6, tb({{5, {{1, 15}}}, {4, {{1, 135}}}, {3, {{1, 262}}}, {2, {{1, 135}}}, {1, {{1, 15}}}}));
    // g = 1
    add(2, 2, tb({{1, {{2, 1}, {1, 1}, {0, 1}}}}));
    add(2, 3, tb({{2, {{2, 7}, {1, 5}, {0, 5}}}, {1, {{2, 7}, {1, 5}, {0, 5}}}}));
    add(2, 4, tb({{3, {{2, 25}, {1, 15}, {0, 15}}},
                  {2, {{2, 68}, {1, 40}, {0, 40}}},
                  {1, {{2, 25}, {1, 15}, {0, 15}}}}));
    add(2, 5, tb({{4, {{2, 65}, {1, 35}, {0, 35}}},
                  {3, {{2, 335}, {1, 175}, {0, 175}}},
                  {2, {{2, 335}, {1, 175}, {0, 175}}},
                  {1, {{2, 65}, {1, 35}, {0, 35}}}}));
    add(2, 6, tb({{5, {{2, 140}, {1, 70}, {0, 70}}},
                  {4, {{2, 1162}, {1, 560}, {0, 560}}},
                  {3, {{2, 2202}, {1, 1050}, {0, 1050}}},
                  {2, {{2, 1162}, {1, 560}, {0, 560}}},
                  {1, {{2, 140}, {1, 70}, {0, 70}}}}));
    // g = 3/2
    add(3, 2, tb({{1, {{3, 1}, {2, 2}, {1, 2}}}}));
    add(3, 3, tb({{2, {{3, 15}, {2, 24}, {1, 24}}}, {1, {{3, 15}, {2, 24}, {1, 24}}}}));
    add(3, 4, tb({{3, {{3, 90}, {2, 127}, {1, 127}}},
                  {2, {{3, 238}, {2, 332}, {1, 332}}},
                  {1, {{3, 90}, {2, 127}, {1, 127}}}}));
    add(3, 5, tb({{4, {{3, 350}, {2, 455}, {1, 455}}},
                  {3, {{3, 1720}, {2, 2195}, {1, 2195}}},
                  {2, {{3, 1720}, {2, 2195}, {1, 2195}}},
                  {1, {{3, 350}, {2, 455}, {1, 455}}}}));
    add(3, 6, tb({{5, {{3, 1050}, {2, 1288}, {1, 1288}}},
                  {4, {{3, 8196}, {2, 9823}, {1, 9823}}},
                  {3, {{3, 15246}, {2, 18148}, {1, 18148}}},
                  {2, {{3, 8196}, {2, 9823}, {1, 9823}}},
                  {1, {{3, 1050}, {2, 1288}, {1, 1288}}}}));
    return rows;
}

// H_{g,2}(lambda_1, lambda_2) for 2g in 0..2 and |lambda| <= 4.
inline std::vector<ReferenceHurwitz> reference_table_n2() {
    using detail::tb;
    std::vector<ReferenceHurwitz> rows;
    auto add = [&](int g2, std::vector<int> mu, MPoly v) {
        rows.push_back({g2, std::move(mu), std::move(v)});
    };
    // g = 0
    add(0, {1, 1}, tb({{1, {{1, 1}, {0, 1}}}}));
    add(0, {2, 1}, tb({{2, {{1, 2}, {0, 2}}}, {1, {{1, 2}, {0, 2}}}}));
    add(0, {3, 1}, tb({{3, {{1, 3}, {0, 3}}}, {2, {{1, 9}, {0, 9}}}, {1, {{1, 3}, {0, 3}}}}));
    add(0, {2, 2}, tb({{3, {{1, 4}, {0, 4}}}, {2, {{1, 10}, {0, 10}}}, {1, {{1, 4}, {0, 4}}}}));
    // g = 1/2
    add(1, {1, 1}, tb({{1, {{2, 1}, {1, 1}}}}));
    add(1, {2, 1}, tb({{2, {{2, 6}, {1, 6}}}, {1, {{2, 6}, {1, 6}}}}));
    add(1, {3, 1}, tb({{3, {{2, 18}, {1, 18}}}, {2, {{2, 51}, {1, 51}}}, {1, {{2, 18}, {1, 18}}}}));
    add(1, {2, 2}, tb({{3, {{2, 22}, {1, 22}}}, {2, {{2, 56}, {1, 56}}}, {1, {{2, 22}, {1, 22}}}}));
    // g = 1
    add(2, {1, 1}, tb({{1, {{3, 1}, {2, 2}, {1, 2}, {0, 1}}}}));
    add(2, {2, 1}, tb({{2, {{3, 14}, {2, 24}, {1, 20}, {0, 10}}},
                       {1, {{3, 14}, {2, 24}, {1, 20}, {0, 10}}}}));
    add(2, {3, 1}, tb({{3, {{3, 75}, {2, 120}, {1, 90}, {0, 45}}},
                       {2, {{3, 204}, {2, 324}, {1, 240}, {0, 120}}},
                       {1, {{3, 75}, {2, 120}, {1, 90}, {0, 45}}}}));
    add(2, {2, 2}, tb({{3, {{3, 86}, {2, 136}, {1, 100}, {0, 50}}},
                       {2, {{3, 220}, {2, 348}, {1, 256}, {0, 128}}},
                       {1, {{3, 86}, {2, 136}, {1, 100}, {0, 50}}}}));
    return rows;
}

// H_{g,3}(lambda) for 2g in 0..2 and |lambda| <= 4.
inline std::vector<ReferenceHurwitz> reference_table_n3() {
    using detail::tb;
    std::vector<ReferenceHurwitz> rows;
    auto add = [&](int g2, std::vector<int> mu, MPoly v) {
        rows.push_back({g2, std::move(mu), std::move(v)});
    };
    add(0, {1, 1, 1}, tb({{2, {{2, 4}, {1, 8}, {0, 4}}}, {1, {{2, 4}, {1, 8}, {0, 4}}}}));
    add(0, {2, 1, 1}, tb({{3, {{2, 10}, {1, 20}, {0, 10}}},
                          {2, {{2, 28}, {1, 56}, {0, 28}}},
                          {1, {{2, 10}, {1, 20}, {0, 10}}}}));
    add(1, {1, 1, 1}, tb({{2, {{3, 12}, {2, 24}, {1, 12}}}, {1, {{3, 12}, {2, 24}, {1, 12}}}}));
    add(1, {2, 1, 1}, tb({{3, {{3, 58}, {2, 116}, {1, 58}}},
                          {2, {{3, 158}, {2, 316}, {1, 158}}},
                          {1, {{3, 58}, {2, 116}, {1, 58}}}}));
    add(2, {1, 1, 1}, tb({{2, {{4, 28}, {3, 76}, {2, 88}, {1, 60}, {0, 20}}},
                          {1, {{4, 28}, {3, 76}, {2, 88}, {1, 60}, {0, 20}}}}));
    add(2, {2, 1, 1}, tb({{3, {{4, 236}, {3, 612}, {2, 656}, {1, 420}, {0, 140}}},
                          {2, {{4, 628}, {3, 1624}, {2, 1732}, {1, 1104}, {0, 368}}},
                          {1, {{4, 236}, {3, 612}, {2, 656}, {1, 420}, {0, 140}}}}));
    return rows;
}

inline std::vector<ReferenceHurwitz> reference_tables_all() {
    auto rows = reference_table_n1();
    auto n2 = reference_table_n2();
    auto n3 = reference_table_n3();
    rows.insert(rows.end(), n2.begin(), n2.end());
    rows.insert(rows.end(), n3.begin(), n3.end());
    return rows;
}

} // namespace wgcalc
