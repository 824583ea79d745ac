#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "wgcalc/jmops.hpp"
#include "wgcalc/pairings.hpp"
#include "wgcalc/series.hpp"

namespace wgcalc {

// The four Weingarten-graph profiles. O and A are the b = 1 specialisations
// of B and BT; all four share one graph engine.
enum class Profile { O, A, B, BT };

inline std::string profile_name(Profile p) {
    switch (p) {
        case Profile::O: return "o";
        case Profile::A: return "a";
        case Profile::B: return "b";
        case Profile::BT: return "bt";
    }
    return "?";
}

inline Profile profile_from_name(const std::string& s) {
    if (s == "o" || s == "O") return Profile::O;
    if (s == "a" || s == "A") return Profile::A;
    if (s == "b" || s == "B") return Profile::B;
    if (s == "bt" || s == "BT") return Profile::BT;
    throw ParseError("unknown profile: " + s);
}

inline bool has_c_edges(Profile p) { return p == Profile::A || p == Profile::BT; }
inline bool b_edge_carries_M(Profile p) { return p == Profile::A || p == Profile::BT; }
inline bool omega_weighted(Profile p) { return p == Profile::B || p == Profile::BT; }

namespace detail {

// Raw edge: weight excludes the universal 1/N factor. Type A edges carry
// omega (or 1) and an implicit sign; type B carries M (or 1); type C carries 1.
struct RawEdge {
    PairPartition target;
    char type; // 'A', 'B', 'C'
    MPoly weight;
};

inline std::vector<RawEdge> raw_edges(const PairPartition& m, Profile profile) {
    if (m.empty()) throw EmptyPairPartition("edges of the empty pair partition");
    std::vector<RawEdge> out;
    int top = m.n_points() - 1; // 2k-1
    // A-edge weights are omega(m, (i 2k-1).m): charges of the source pairing
    std::vector<int> q;
    if (omega_weighted(profile)) q = m.charges();
    for (int i = 1; i <= top - 1; ++i) {
        PairPartition tgt = m.act(i, top);
        MPoly w = omega_weighted(profile) ? (q[i] == q[top] ? MPoly(1) : var_b()) : MPoly(1);
        out.push_back({std::move(tgt), 'A', std::move(w)});
    }
    if (m.contains(top, top + 1))
        out.push_back({m.remove_top(), 'B', b_edge_carries_M(profile) ? var_M() : MPoly(1)});
    if (has_c_edges(profile)) {
        int i = m.partner(top + 1);
        if (i <= top - 1)
            out.push_back({m.act(i, top).remove_top(), 'C', MPoly(1)});
    }
    return out;
}

} // namespace detail

// Public adjacency view: weights include the per-edge coefficient, so a type
// A edge carries -omega/N, type B carries M/N (or 1/N) and type C carries 1/N.
struct WgEdge {
    PairPartition target;
    char type;
    RatFrac weight;
};

inline std::vector<WgEdge> neighbors(const PairPartition& m, Profile profile) {
    std::vector<WgEdge> out;
    for (auto& e : detail::raw_edges(m, profile)) {
        MPoly num = e.type == 'A' ? -e.weight : e.weight;
        out.push_back({e.target, e.type, RatFrac(num, var_N())});
    }
    return out;
}

namespace detail {

// Solves A x = w exactly for a polynomial right-hand side: fraction-free
// (Bareiss) forward elimination with w carried as an extra column, then a
// triangular solve in which every division is exact. The solution is the
// polynomial vector num with common denominator den.
struct PolySolution {
    std::vector<MPoly> num;
    MPoly den;
};

inline PolySolution solve_linear_poly(std::vector<std::vector<MPoly>> A, std::vector<MPoly> w) {
    const int n = static_cast<int>(A.size());
    MPoly prev(1);
    for (int p = 0; p < n - 1; ++p) {
        if (A[p][p].is_zero()) {
            int swap_row = -1;
            for (int i = p + 1; i < n; ++i)
                if (!A[i][p].is_zero()) { swap_row = i; break; }
            if (swap_row < 0) throw SingularSystem("solve_linear: singular matrix");
            std::swap(A[p], A[swap_row]);
            std::swap(w[p], w[swap_row]);
        }
        for (int i = p + 1; i < n; ++i) {
            if (A[i][p].is_zero()) {
                // row untouched except for the Bareiss rescale
                for (int j = p + 1; j < n; ++j)
                    if (!A[i][j].is_zero()) A[i][j] = exact_div(A[p][p] * A[i][j], prev);
                if (!w[i].is_zero()) w[i] = exact_div(A[p][p] * w[i], prev);
                continue;
            }
            for (int j = p + 1; j < n; ++j)
                A[i][j] = exact_div(A[p][p] * A[i][j] - A[i][p] * A[p][j], prev);
            w[i] = exact_div(A[p][p] * w[i] - A[i][p] * w[p], prev);
            A[i][p] = MPoly(0);
        }
        prev = A[p][p];
    }
    MPoly det = A[n - 1][n - 1];
    if (det.is_zero()) throw SingularSystem("solve_linear: singular matrix");
    // x_i = y_i / det with y polynomial: U_ii y_i = det w_i - sum_{j>i} U_ij y_j
    std::vector<MPoly> y(n);
    for (int i = n - 1; i >= 0; --i) {
        MPoly acc = det * w[i];
        for (int j = i + 1; j < n; ++j) acc -= A[i][j] * y[j];
        y[i] = exact_div(acc, A[i][i]);
    }
    return {std::move(y), std::move(det)};
}

// Fraction right-hand sides: a common denominator is pulled out first so the
// matrix entries never grow.
inline std::vector<RatFrac> solve_linear(std::vector<std::vector<MPoly>> A,
                                         const std::vector<RatFrac>& rhs) {
    const int n = static_cast<int>(A.size());
    std::vector<MPoly> distinct;
    MPoly D(1);
    for (const auto& r : rhs) {
        bool found = false;
        for (const auto& d : distinct)
            if (d == r.den()) { found = true; break; }
        if (!found) {
            distinct.push_back(r.den());
            D *= r.den();
        }
    }
    std::vector<MPoly> w(n);
    for (int i = 0; i < n; ++i) w[i] = rhs[i].num() * exact_div(D, rhs[i].den());
    auto sol = solve_linear_poly(std::move(A), std::move(w));
    std::vector<RatFrac> x;
    x.reserve(n);
    MPoly den = sol.den * D;
    for (int i = 0; i < n; ++i) x.emplace_back(std::move(sol.num[i]), den);
    return x;
}

} // namespace detail

// Exact Weingarten values at one level. Values are constant on coset-type
// (proven for O and A, verified during construction for B and BT), so the
// class map is authoritative; the per-pairing map is kept at solved levels.
struct WeingartenTable {
    Profile profile = Profile::O;
    int k = 0;
    std::map<Partition, RatFrac> classes;
    std::map<PairPartition, RatFrac> values; // filled when the full system was solved

    const RatFrac& value(const PairPartition& m) const {
        auto it = classes.find(m.coset_type());
        if (it == classes.end())
            throw ParameterOutOfRange("WeingartenTable: pairing not at this level");
        return it->second;
    }
};

inline int wg_level_bound() {
#ifdef WGCALC_WG_LEVEL_BOUND
    return WGCALC_WG_LEVEL_BOUND;
#else
    return 4;
#endif
}

namespace detail {

inline RatFrac lower_value(const WeingartenTable& lower, const PairPartition& m) {
    return lower.value(m);
}

// Full solve over all pairings of one level; equations in lexicographic
// P_k order: N x_m + sum_A omega x_target = Bnum d x_{m down} + sum_C x_...
inline WeingartenTable solve_level_full(int k, Profile profile, const WeingartenTable& lower) {
    const auto& idx = PkIndex::at(k);
    const int n = static_cast<int>(idx.list.size());
    std::vector<std::vector<MPoly>> A(n, std::vector<MPoly>(n, MPoly(0)));
    std::vector<RatFrac> rhs(n, RatFrac(0));
    for (int row = 0; row < n; ++row) {
        A[row][row] += var_N();
        for (const auto& e : raw_edges(idx.list[row], profile)) {
            if (e.type == 'A')
                A[row][idx.pos.at(e.target)] += e.weight;
            else
                rhs[row] += RatFrac(e.weight) * lower_value(lower, e.target);
        }
    }
    auto x = solve_linear(std::move(A), std::move(rhs));
    WeingartenTable table;
    table.profile = profile;
    table.k = k;
    for (int i = 0; i < n; ++i) {
        table.values.emplace(idx.list[i], x[i]);
        Partition ty = idx.list[i].coset_type();
        auto it = table.classes.find(ty);
        if (it == table.classes.end())
            table.classes.emplace(ty, x[i]);
        else if (!frac_equal(it->second, x[i]))
            throw Error("Weingarten values not constant on coset-type at level " +
                        std::to_string(k));
    }
    return table;
}

// Class-reduced solve: one representative equation per coset-type, followed
// by verification of every orthogonality relation at the level against the
// class values. The verification makes the reduction rigorous profile by
// profile rather than an assumption.
inline WeingartenTable solve_level_classes(int k, Profile profile, const WeingartenTable& lower) {
    auto classes = all_partitions(k);
    const int n = static_cast<int>(classes.size());
    std::map<Partition, int> cpos;
    for (int i = 0; i < n; ++i) cpos[classes[i]] = i;
    std::vector<std::vector<MPoly>> A(n, std::vector<MPoly>(n, MPoly(0)));
    std::vector<RatFrac> rhs(n, RatFrac(0));
    for (int row = 0; row < n; ++row) {
        PairPartition rep = pairing_of_coset_type(classes[row]);
        A[row][row] += var_N();
        for (const auto& e : raw_edges(rep, profile)) {
            if (e.type == 'A')
                A[row][cpos.at(e.target.coset_type())] += e.weight;
            else
                rhs[row] += RatFrac(e.weight) * lower_value(lower, e.target);
        }
    }
    auto x = solve_linear(std::move(A), std::move(rhs));
    WeingartenTable table;
    table.profile = profile;
    table.k = k;
    for (int i = 0; i < n; ++i) table.classes.emplace(classes[i], x[i]);

    for (const auto& m : all_pair_partitions(k)) {
        RatFrac residual = RatFrac(var_N()) * table.value(m);
        for (const auto& e : raw_edges(m, profile)) {
            if (e.type == 'A')
                residual += RatFrac(e.weight) * table.value(e.target);
            else
                residual -= RatFrac(e.weight) * lower_value(lower, e.target);
        }
        if (!residual.is_zero())
            throw Error("class-reduced Weingarten solution fails a relation at " + m.str());
    }
    return table;
}

} // namespace detail

// Exact Weingarten table for a profile and level, solved bottom-up from
// Wg((~)) = 1 and memoized. Levels up to 3 solve the full linear system;
// level 4 solves on coset-type classes and then checks every relation.
inline const WeingartenTable& wg_solve(int k, Profile profile) {
    if (k < 0 || k > wg_level_bound())
        throw ParameterOutOfRange("wg_solve: level exceeds the configured bound");
    static std::map<std::pair<int, int>, std::unique_ptr<WeingartenTable>> cache;
    static std::mutex mutex;
    std::scoped_lock lock(mutex);
    auto key = std::make_pair(static_cast<int>(profile), k);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;

    WeingartenTable base;
    base.profile = profile;
    base.k = 0;
    base.classes.emplace(Partition(), RatFrac(1));
    base.values.emplace(PairPartition(), RatFrac(1));
    cache.emplace(std::make_pair(static_cast<int>(profile), 0),
                  std::make_unique<WeingartenTable>(std::move(base)));
    for (int j = 1; j <= k; ++j) {
        auto jkey = std::make_pair(static_cast<int>(profile), j);
        if (cache.count(jkey)) continue;
        const WeingartenTable& lower = *cache.at(std::make_pair(static_cast<int>(profile), j - 1));
        WeingartenTable table = (j <= 3) ? detail::solve_level_full(j, profile, lower)
                                         : detail::solve_level_classes(j, profile, lower);
        cache.emplace(jkey, std::make_unique<WeingartenTable>(std::move(table)));
    }
    return *cache.at(key);
}

// Weighted path enumeration from m to the empty pair partition, organised as
// a series in 1/N. For profiles with M-weighted B edges the substitution
// M = N/(1-t) is applied, the series index is the transposition count
// l_A + l_C, and coefficients of index r <= R - k are complete. For O and B
// the index is the path length.
inline TruncSeries path_series(const PairPartition& m, Profile profile, int R) {
    if (R < 0) throw ParameterOutOfRange("path_series: negative length bound");
    bool substituted = b_edge_carries_M(profile);
    int order = substituted ? R - m.k() : R;
    TruncSeries s;
    s.grading = Var::N;
    if (order < 0) return s; // no complete coefficients at this bound
    s.coeff.assign(order + 1, RatFrac(0));

    MPoly one_minus_t = MPoly(1) - var_t();
    auto dfs = [&](auto&& self, const PairPartition& cur, int lA, int lB, int lC,
                   int flips) -> void {
        if (cur.empty()) {
            MPoly num = var_b().pow(flips);
            if ((lA % 2) != 0) num = -num;
            if (substituted) {
                int r = lA + lC;
                if (r <= order) s.coeff[r] += RatFrac(num, one_minus_t.pow(lB));
            } else {
                int len = lA + lB + lC;
                if (len <= order) s.coeff[len] += RatFrac(num);
            }
            return;
        }
        if (lA + lB + lC >= R) return;
        for (const auto& e : detail::raw_edges(cur, profile)) {
            int df = (e.type == 'A' && e.weight == var_b()) ? 1 : 0;
            self(self, e.target, lA + (e.type == 'A'), lB + (e.type == 'B'),
                 lC + (e.type == 'C'), flips + df);
        }
    };
    dfs(dfs, m, 0, 0, 0, 0);
    return s;
}

// Exact moment of matrix entries on the rank-M projector ensemble: the sum of
// Wg^A over the pair partitions admissible for the index function.
inline Rational integrate_monomial(const std::vector<int>& index_fn, long M_val, long N_val) {
    if (index_fn.size() % 2 != 0 || index_fn.empty())
        throw ParameterOutOfRange("integrate_monomial: need an even number of indices");
    int k = static_cast<int>(index_fn.size()) / 2;
    if (k > wg_level_bound())
        throw ParameterOutOfRange("integrate_monomial: level exceeds the configured bound");
    if (!(0 < M_val && M_val < N_val))
        throw ParameterOutOfRange("integrate_monomial: require 0 < M < N");
    if (k > N_val) throw ParameterOutOfRange("integrate_monomial: require k <= N");
    for (int v : index_fn)
        if (v < 1 || v > N_val)
            throw ParameterOutOfRange("integrate_monomial: index value out of range");
    const auto& table = wg_solve(k, Profile::A);
    std::map<Var, Rational> at{{Var::M, Rational(M_val)}, {Var::N, Rational(N_val)}};
    Rational total = 0;
    for (const auto& m : all_pair_partitions(k))
        if (admissible(m, index_fn)) total += table.value(m).evaluate(at);
    return total;
}

// Checks the operator product formula sum_m Wg(m) m = prod (M+J)/(N+J) e_k,
// with the classical odd Jucys-Murphy action for profile A and the b-deformed
// operators (factor i = k outermost) for profile BT.
inline bool jm_product_check(int k, Profile profile) {
    if (profile != Profile::A && profile != Profile::BT)
        throw ParameterOutOfRange("jm_product_check: profile must be A or BT");
    if (k < 1 || k > 3) throw ParameterOutOfRange("jm_product_check: k must be 1..3");

    const auto& idx = PkIndex::at(k);
    const int n = static_cast<int>(idx.list.size());
    bool deformed = profile == Profile::BT;

    // matrix of J_i on the pairing basis (column = image of a basis vector)
    auto jm_matrix = [&](int i) {
        std::vector<std::vector<MPoly>> J(n, std::vector<MPoly>(n, MPoly(0)));
        for (int col = 0; col < n; ++col) {
            const PairPartition& m = idx.list[col];
            for (int a = 1; a <= 2 * i - 2; ++a) {
                PairPartition tgt = m.act(a, 2 * i - 1);
                int row = idx.pos.at(tgt);
                J[row][col] += deformed ? omega_b_move(tgt, a, 2 * i - 1) : MPoly(1);
            }
        }
        return J;
    };

    // u kept as a polynomial vector over a single common denominator
    std::vector<MPoly> y(n, MPoly(0));
    y[idx.pos.at(PairPartition::trivial(k))] = MPoly(1);
    MPoly den(1);
    for (int i = 1; i <= k; ++i) {
        auto J = jm_matrix(i);
        // (M + J_i) y
        std::vector<MPoly> w(n, MPoly(0));
        for (int r = 0; r < n; ++r) {
            w[r] = var_M() * y[r];
            for (int c = 0; c < n; ++c)
                if (!J[r][c].is_zero() && !y[c].is_zero()) w[r] += J[r][c] * y[c];
        }
        // (N + J_i)^-1
        for (int d = 0; d < n; ++d) J[d][d] += var_N();
        auto sol = detail::solve_linear_poly(std::move(J), std::move(w));
        y = std::move(sol.num);
        den *= sol.den;
    }

    const auto& table = wg_solve(k, profile);
    for (int i = 0; i < n; ++i)
        if (!frac_equal(RatFrac(y[i], den), table.value(idx.list[i]))) return false;
    return true;
}

} // namespace wgcalc
