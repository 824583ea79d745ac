#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <vector>

#include "wgcalc/pairings.hpp"
#include "wgcalc/symfunc.hpp"
#include "wgcalc/univar.hpp"
#include "wgcalc/weingarten.hpp"

namespace wgcalc {

// A monotone factorisation of the pair partition `target`: transpositions
// (a_i b_i) with a_i < b_i, the b_i odd and weakly increasing, whose
// right-to-left composition carries `target` to the trivial pairing.
struct MonotoneFactorisation {
    std::vector<std::pair<int, int>> transpositions;
    PairPartition target;
    int flip = 0;
    int hive = 0;
    bool connected = false;
};

// Streams all monotone factorisations of m with exactly r transpositions.
// flip accumulates the omega weight along the b-graph path; hive counts the
// distinct odd values used. Pruned by the coset-type step lower bound.
inline void monotone_factorisations(const PairPartition& m, int r,
                                    const std::function<void(const MonotoneFactorisation&)>& emit) {
    if (r < 0) throw ParameterOutOfRange("monotone_factorisations: negative length");
    std::vector<std::pair<int, int>> taus; // collected in path order (tau_r first)

    auto min_steps = [](const PairPartition& cur) {
        Partition ty = cur.coset_type();
        return ty.size() - ty.length();
    };

    auto rec = [&](auto&& self, const PairPartition& cur, int rem, int flips, int hive,
                   bool level_used) -> void {
        if (cur.empty()) {
            if (rem != 0) return;
            MonotoneFactorisation f;
            f.transpositions.assign(taus.rbegin(), taus.rend());
            f.target = m;
            f.flip = flips;
            f.hive = hive;
            f.connected = is_connected_factorisation(taus, m.k());
            emit(f);
            return;
        }
        if (min_steps(cur) > rem) return;
        int top = cur.n_points() - 1; // 2j-1
        // descend when the top pair is present
        if (cur.contains(top, top + 1))
            self(self, cur.remove_top(), rem, flips, hive, false);
        if (rem == 0) return;
        auto q = cur.charges();
        for (int i = 1; i <= top - 1; ++i) {
            taus.emplace_back(i, top);
            self(self, cur.act(i, top), rem - 1, flips + (q[i] != q[top]),
                 hive + (level_used ? 0 : 1), true);
            taus.pop_back();
        }
    };
    rec(rec, m, r, 0, 0, false);
}

// Disconnected bt-monotone Hurwitz number: the (b, t)-weighted count of all
// monotone factorisations of length r of any pairing of coset-type lambda.
inline MPoly h_bt(const Partition& lambda, int r) {
    MPoly total(0);
    monotone_factorisations(pairing_of_coset_type(lambda), r,
                            [&](const MonotoneFactorisation& f) {
                                total += MPoly::term(1, {{Var::b, f.flip}, {Var::t, f.hive}});
                            });
    return total;
}

namespace detail {

struct HurwitzMemo {
    // key: (2g, parts of mu)
    std::map<std::pair<int, std::vector<int>>, MPoly> values;
    std::mutex mutex;
};

inline HurwitzMemo& hurwitz_memo() {
    static HurwitzMemo memo;
    return memo;
}

} // namespace detail

// Connected bt-monotone Hurwitz number by the cut-join-flip recursion, with
// the initial condition H_{0,1}(1) = 1 and value 0 on all out-of-range keys.
// g is passed doubled so that half-integral genus stays integral.
inline MPoly hurwitz_H2(int g2, const Partition& mu) {
    if (g2 < 0 || mu.empty()) return MPoly(0);
    int n = mu.length();
    int r = mu.size() + g2 - 2 + n;
    if (r < 0) return MPoly(0);
    if (g2 == 0 && mu == Partition({1})) return MPoly(1);
    if (r == 0) return MPoly(0); // only the initial condition has r = 0

    auto key = std::make_pair(g2, mu.parts());
    auto& memo = detail::hurwitz_memo();
    {
        std::scoped_lock lock(memo.mutex);
        auto it = memo.values.find(key);
        if (it != memo.values.end()) return it->second;
    }

    const int mu1 = mu.parts()[0];
    std::vector<int> rest(mu.parts().begin() + 1, mu.parts().end());
    MPoly total(0);
    MPoly b = var_b(), t = var_t();

    // join: (b+1) sum_i (mu1 + mu_i) H_{g, n-1}(mu1 + mu_i, rest minus i)
    for (size_t i = 0; i < rest.size(); ++i) {
        std::vector<int> parts;
        for (size_t j = 0; j < rest.size(); ++j)
            if (j != i) parts.push_back(rest[j]);
        parts.push_back(mu1 + rest[i]);
        total += (b + 1) * MPoly(mu1 + rest[i]) * hurwitz_H2(g2, Partition(parts));
    }

    // cut: sum_{alpha+beta=mu1} alpha beta [ H_{g-1, n+1}(alpha, beta, rest)
    //        + sum over genus and set splittings of the product ]
    for (int alpha = 1; alpha < mu1; ++alpha) {
        int beta = mu1 - alpha;
        MPoly ab(static_cast<long>(alpha) * beta);
        {
            std::vector<int> parts = rest;
            parts.push_back(alpha);
            parts.push_back(beta);
            total += ab * hurwitz_H2(g2 - 2, Partition(parts));
        }
        int nrest = static_cast<int>(rest.size());
        for (int mask = 0; mask < (1 << nrest); ++mask) {
            std::vector<int> left{alpha}, right{beta};
            for (int j = 0; j < nrest; ++j)
                (mask & (1 << j) ? left : right).push_back(rest[j]);
            for (int ga = 0; ga <= g2; ++ga) {
                MPoly lhs = hurwitz_H2(ga, Partition(left));
                if (lhs.is_zero()) continue;
                MPoly rhs = hurwitz_H2(g2 - ga, Partition(right));
                if (rhs.is_zero()) continue;
                total += ab * lhs * rhs;
            }
        }
    }

    // flip: b mu1 (mu1 - 1) H_{g - 1/2, n}(mu)
    if (mu1 > 1) total += b * MPoly(static_cast<long>(mu1) * (mu1 - 1)) * hurwitz_H2(g2 - 1, mu);

    // shift: (t - 1)(mu1 - 1) H_{g, n}(mu1 - 1, rest)
    if (mu1 > 1) {
        std::vector<int> parts = rest;
        parts.push_back(mu1 - 1);
        total += (t - 1) * MPoly(mu1 - 1) * hurwitz_H2(g2, Partition(parts));
    }

    MPoly result = total * rat(1, mu1);
    std::scoped_lock lock(memo.mutex);
    memo.values.emplace(key, result);
    return result;
}

// Same value through direct enumeration of connected factorisations of
// length |lambda| + 2g - 2 + n, divided by the product of the parts.
inline MPoly hurwitz_H2_enum(int g2, const Partition& lambda) {
    if (g2 < 0) return MPoly(0);
    int r = lambda.size() + g2 - 2 + lambda.length();
    if (r < 0) return MPoly(0);
    MPoly total(0);
    monotone_factorisations(pairing_of_coset_type(lambda), r,
                            [&](const MonotoneFactorisation& f) {
                                if (!f.connected) return;
                                total += MPoly::term(1, {{Var::b, f.flip}, {Var::t, f.hive}});
                            });
    Rational scale(1);
    for (int part : lambda.parts()) scale /= part;
    return total * scale;
}

// ---------------------------------------------------------------------------
// The partition function Z^(bt) as a doubly truncated series. A cell (k, r)
// holds the symmetric-function coefficient of z^k hbar^(r-k); cells beyond
// the stored bounds are unknown, not zero, unless the series is exact.
// ---------------------------------------------------------------------------
struct ZSeries {
    int kmax = 0;
    int rmax = 0;
    bool exact = false; // a finite object: every absent cell is genuinely zero
    std::map<std::pair<int, int>, SymFunc> cells;

    bool known(int k, int r) const {
        if (exact) return true;
        return k >= 0 && k <= kmax && r <= rmax; // r < 0 cells are structural zeros
    }

    SymFunc cell(int k, int r) const {
        auto it = cells.find({k, r});
        return it == cells.end() ? SymFunc() : it->second;
    }

    void add_cell(int k, int r, const SymFunc& f) {
        if (f.is_zero()) return;
        auto it = cells.find({k, r});
        if (it == cells.end()) {
            cells.emplace(std::make_pair(k, r), f);
        } else {
            it->second += f;
            if (it->second.is_zero()) cells.erase(it);
        }
    }
};

// Truncated product: valid on the rectangle when both factors are.
inline ZSeries zs_multiply(const ZSeries& a, const ZSeries& b, int kmax, int rmax) {
    ZSeries out;
    out.kmax = kmax;
    out.rmax = rmax;
    out.exact = a.exact && b.exact;
    for (const auto& [ka, fa] : a.cells)
        for (const auto& [kb, fb] : b.cells) {
            int k = ka.first + kb.first, r = ka.second + kb.second;
            if (!out.exact && (k > kmax || r > rmax)) continue;
            out.add_cell(k, r, fa * fb);
        }
    return out;
}

// exp of a connected generating function (cells all have k >= 1), truncated
// to the (kmax, rmax) rectangle.
inline ZSeries zs_exp(const ZSeries& f, int kmax, int rmax) {
    for (const auto& [kr, c] : f.cells)
        if (kr.first < 1) throw NonzeroConstantTerm("zs_exp: cell with zero z-degree");
    ZSeries out;
    out.kmax = kmax;
    out.rmax = rmax;
    out.add_cell(0, 0, SymFunc(RatFrac(1)));
    ZSeries power;
    power.kmax = kmax;
    power.rmax = rmax;
    power.add_cell(0, 0, SymFunc(RatFrac(1)));
    Rational mfact(1);
    for (int m = 1; m <= kmax; ++m) {
        power = zs_multiply(power, f, kmax, rmax);
        if (power.cells.empty()) break;
        mfact *= m;
        for (const auto& [kr, c] : power.cells)
            out.add_cell(kr.first, kr.second, c * RatFrac(Rational(1) / mfact));
    }
    return out;
}

// log of a series with constant cell 1: inverse of zs_exp on the rectangle.
inline ZSeries zs_log(const ZSeries& z, int kmax, int rmax) {
    ZSeries u = z;
    u.cells.erase({0, 0}); // z - 1
    for (const auto& [kr, c] : u.cells)
        if (kr.first < 1) throw NonzeroConstantTerm("zs_log: cell with zero z-degree");
    ZSeries out;
    out.kmax = kmax;
    out.rmax = rmax;
    ZSeries power;
    power.kmax = kmax;
    power.rmax = rmax;
    power.add_cell(0, 0, SymFunc(RatFrac(1)));
    Rational sign(1);
    for (int m = 1; m <= kmax; ++m) {
        power = zs_multiply(power, u, kmax, rmax);
        if (power.cells.empty()) break;
        Rational c = sign / m;
        for (const auto& [kr, f] : power.cells) out.add_cell(kr.first, kr.second, f * RatFrac(c));
        sign = -sign;
    }
    return out;
}

// Z^(bt) from the Jack-function expansion: cell (k, r) is
//   sum over lambda of k of [sum over nu of r of t^len(nu) m_nu(cont_b(lambda))]
//   J_lambda / (hook_b hook_b').
inline ZSeries z_truncated_jack(int k_max, int h_order = -1) {
    if (h_order < 0) h_order = 2 * k_max;
    ZSeries out;
    out.kmax = k_max;
    out.rmax = h_order;
    out.add_cell(0, 0, SymFunc(RatFrac(1)));
    for (int k = 1; k <= k_max; ++k) {
        for (const auto& la : all_partitions(k)) {
            auto [h, hp] = hook_products(la);
            SymFunc scaled = jack(la) * RatFrac(MPoly(1), h * hp);
            // hbar-expansion of prod over boxes of (1 - (1-t) hbar c)/(1 - hbar c)
            std::vector<MPoly> coeff(h_order + 1, MPoly(0));
            coeff[0] = MPoly(1);
            for (const auto& c : contents_multiset(la)) {
                // multiply by 1 + t (hbar c + (hbar c)^2 + ...)
                std::vector<MPoly> next = coeff;
                MPoly cpow(1);
                for (int s = 1; s <= h_order; ++s) {
                    cpow *= c;
                    MPoly tc = var_t() * cpow;
                    for (int r = 0; r + s <= h_order; ++r) {
                        if (coeff[r].is_zero()) continue;
                        next[r + s] += tc * coeff[r];
                    }
                }
                coeff = std::move(next);
            }
            for (int r = 0; r <= h_order; ++r)
                if (!coeff[r].is_zero()) out.add_cell(k, r, scaled * RatFrac(coeff[r]));
        }
    }
    return out;
}

// The connected generating function assembled from the recursion, on the
// same cell grid: cell (|mu|, |mu| + 2g - 2 + n) collects
//   H_{g,n}(mu) p_mu / ((b+1)^n prod m_j(mu)!).
inline ZSeries z_connected_from_recursion(int k_max, int r_max) {
    ZSeries out;
    out.kmax = k_max;
    out.rmax = r_max;
    MPoly bp1 = var_b() + 1;
    for (int k = 1; k <= k_max; ++k) {
        for (const auto& mu : all_partitions(k)) {
            int n = mu.length();
            Integer mults = 1;
            {
                int i = 0;
                while (i < n) {
                    int j = i;
                    while (j < n && mu.parts()[j] == mu.parts()[i]) ++j;
                    mults *= factorial(j - i);
                    i = j;
                }
            }
            for (int g2 = 0;; ++g2) {
                int r = k + g2 - 2 + n;
                if (r > r_max) break;
                if (r < 0) continue;
                MPoly H = hurwitz_H2(g2, mu);
                if (H.is_zero()) continue;
                RatFrac c = RatFrac(H) / RatFrac(bp1.pow(n) * MPoly(Rational(mults)));
                out.add_cell(k, r, SymFunc::p(mu, c));
            }
        }
    }
    return out;
}

// Extraction of the disconnected numbers from a Z-type series:
// h_r(mu) = z_mu (b+1)^len(mu) [coefficient of p_mu in cell (|mu|, r)].
inline RatFrac h_bt_from_series(const ZSeries& z, const Partition& mu, int r) {
    if (!z.known(mu.size(), r))
        throw IndexOutOfRange("h_bt_from_series: cell outside the truncation");
    MPoly bp1 = var_b() + 1;
    return z.cell(mu.size(), r).coeff(mu) *
           RatFrac(bp1.pow(mu.length()) * MPoly(Rational(z_lambda(mu))));
}

// Disconnected numbers read off the exact Weingarten solution:
// h_r(lambda) = (-1)^r (1-t)^k [N^-r] Wg^(bt) with M = N/(1-t).
inline RatFrac h_bt_from_weingarten(const Partition& lambda, int r) {
    int k = lambda.size();
    const auto& table = wg_solve(k, Profile::BT);
    MPoly one_minus_t = MPoly(1) - var_t();
    RatFrac closed = substitute(table.classes.at(lambda),
                                {{Var::M, RatFrac(var_N(), one_minus_t)}});
    TruncSeries s = series_at_infinity(closed, r);
    RatFrac c = s.at(r) * RatFrac(one_minus_t.pow(k));
    return (r % 2) ? -c : c;
}

// ---------------------------------------------------------------------------
// Virasoro constraints.
// ---------------------------------------------------------------------------

// L_m for the bt partition function, or the b = 1 form attached to Z^A.
// The sign convention is the one under which [L_m, L_n] = (m-n) L_{m+n}
// holds with [A,B] = AB - BA; it is the negative of the convention that
// leads with +m d_m / hbar. Both annihilate the partition function.
struct VirasoroOp {
    int m = 1;
    bool deformed = true; // false: the A-profile operator (b = 1 coefficients)
};

inline ZSeries apply_virasoro(const VirasoroOp& op, const ZSeries& s) {
    const int m = op.m;
    RatFrac c_dd = op.deformed ? RatFrac(var_b() + 1) : RatFrac(2);
    RatFrac c_mm = op.deformed ? RatFrac(var_b() * (static_cast<long>(m) * (m - 1)))
                               : RatFrac(Rational(static_cast<long>(m) * (m - 1)));
    RatFrac c_z = op.deformed ? RatFrac(MPoly(1), var_b() + 1) : RatFrac(rat(1, 2));

    ZSeries out;
    out.exact = s.exact;
    out.kmax = s.kmax;
    out.rmax = s.rmax - 1;
    auto emit = [&](int k, int r, const SymFunc& f) {
        if (!out.exact && (k > out.kmax || r > out.rmax)) return;
        out.add_cell(k, r, f);
    };
    for (const auto& [kr, f] : s.cells) {
        auto [k, r] = kr;
        // -m d_m / hbar
        emit(k, r - 1, p_derivative(f, m) * RatFrac(Rational(-m)));
        // +(1+b) sum_{i+j=m} ij d_i d_j
        for (int i = 1; i < m; ++i) {
            int j = m - i;
            SymFunc d = p_derivative(p_derivative(f, i), j);
            emit(k, r, d * (c_dd * RatFrac(Rational(static_cast<long>(i) * j))));
        }
        // + sum_i (i+m) p_i d_{i+m}
        std::set<int> parts_present;
        for (const auto& [mu, c] : f.terms())
            for (int part : mu.parts()) parts_present.insert(part);
        for (int s_part : parts_present) {
            int i = s_part - m;
            if (i < 1) continue;
            SymFunc d = p_multiply(p_derivative(f, s_part), i);
            emit(k, r, d * RatFrac(Rational(s_part)));
        }
        // +b m(m-1) d_m
        if (m >= 2) emit(k, r, p_derivative(f, m) * c_mm);
        // +(z/hbar)(t-1)(m-1) d_{m-1}
        if (m >= 2) {
            SymFunc d = p_derivative(f, m - 1);
            emit(k + 1, r, d * (RatFrac(var_t() - MPoly(1)) * RatFrac(Rational(m - 1))));
        }
        // +d_{m,1} z / (hbar^2 (1+b))
        if (m == 1) emit(k + 1, r - 1, f * c_z);
    }
    return out;
}

// L_m . Z on the truncation; all representable cells must vanish. Returns the
// residual restricted to its valid rectangle.
inline ZSeries virasoro_residual(int m, int k_max, int h_order = -1) {
    if (m < 1) throw ParameterOutOfRange("virasoro_residual: m must be positive");
    ZSeries z = z_truncated_jack(k_max, h_order);
    return apply_virasoro({m, true}, z);
}

// ---------------------------------------------------------------------------
// Lambda-polynomial test: nonnegative, palindromic, unimodal coefficients on
// the support window after specialising b.
// ---------------------------------------------------------------------------
inline bool lambda_poly_check(const MPoly& P, const Rational& b_val) {
    if (!(b_val > 0)) throw ParameterOutOfRange("lambda_poly_check: b must be positive");
    UniPoly p = UniPoly::from_mpoly(P.subst(Var::b, MPoly(b_val)), Var::t);
    if (p.is_zero()) return false;
    int lo = 0;
    while (is_zero(p.coeff(lo))) ++lo;
    std::vector<Rational> w;
    for (int i = lo; i <= p.degree(); ++i) w.push_back(p.coeff(i));
    int n = static_cast<int>(w.size());
    for (const auto& c : w)
        if (sgn(c) < 0) return false;
    for (int i = 0; i < n; ++i)
        if (w[i] != w[n - 1 - i]) return false;
    int peak = 0;
    while (peak + 1 < n && w[peak] <= w[peak + 1]) ++peak;
    for (int i = peak; i + 1 < n; ++i)
        if (w[i] < w[i + 1]) return false;
    return true;
}

// Public entry point taking the genus as a half-integer numerator: H_{g,n}(mu)
// with g = g2/2. Compositions are sorted on entry (the numbers are symmetric
// in their arguments).
inline MPoly hurwitz_connected(int g2, const std::vector<int>& mu) {
    for (int part : mu)
        if (part < 1) throw ParameterOutOfRange("hurwitz: parts must be positive");
    return hurwitz_H2(g2, Partition(mu));
}

} // namespace wgcalc
