#pragma once

#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "wgcalc/hurwitz.hpp"
#include "wgcalc/univar.hpp"

namespace wgcalc {

// Sturm chain of a squarefree polynomial.
inline std::vector<UniPoly> sturm_chain(const UniPoly& p) {
    std::vector<UniPoly> chain{p, p.derivative()};
    while (!chain.back().is_zero()) {
        auto [q, r] = divmod(chain[chain.size() - 2], chain.back());
        (void)q;
        chain.push_back(-r);
    }
    chain.pop_back();
    return chain;
}

inline int sign_variations(const std::vector<UniPoly>& chain, const Rational& x) {
    int var = 0, prev = 0;
    for (const auto& p : chain) {
        int s = sgn(p(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

// Number of real roots of a squarefree polynomial in (a, b].
inline int sturm_count(const UniPoly& p, const Rational& a, const Rational& b) {
    if (!(a < b)) throw ParameterOutOfRange("sturm_count: need a < b");
    if (is_zero(p(a)) || is_zero(p(b)))
        throw EndpointIsRoot("sturm_count: endpoint is a root");
    auto chain = sturm_chain(p);
    return sign_variations(chain, a) - sign_variations(chain, b);
}

// Cauchy bound: all real roots lie in (-B, B).
inline Rational cauchy_bound(const UniPoly& p) {
    Rational mx = 0;
    for (int i = 0; i < p.degree(); ++i) {
        Rational a = abs(p.coeff(i) / p.lead());
        if (a > mx) mx = a;
    }
    return mx + 1;
}

// One real root of a squarefree polynomial, isolated in (lo, hi] with
// lo < root <= hi and p nonvanishing at both endpoints.
struct AlgebraicRoot {
    UniPoly poly;
    Rational lo, hi;

    // Halves (at least thirds) the interval, keeping endpoints off the roots.
    void refine() {
        Rational candidates[3] = {(lo + hi) / 2, (lo * 2 + hi) / 3, (lo + hi * 2) / 3};
        for (const auto& c : candidates) {
            if (is_zero(poly(c))) continue;
            auto chain = sturm_chain(poly);
            if (sign_variations(chain, lo) - sign_variations(chain, c) == 1)
                hi = c;
            else
                lo = c;
            return;
        }
        throw Error("AlgebraicRoot::refine: no valid split point"); // cannot happen
    }
};

// -1, 0, +1 comparison of two isolated algebraic roots.
inline int compare_roots(AlgebraicRoot a, AlgebraicRoot b) {
    // equality first, via a shared factor with a root in the overlap
    UniPoly g = gcd(a.poly, b.poly);
    if (g.degree() >= 1) {
        Rational lo = std::max(a.lo, b.lo), hi = std::min(a.hi, b.hi);
        if (lo < hi && !is_zero(g(lo)) && !is_zero(g(hi)) && sturm_count(g, lo, hi) >= 1)
            return 0;
        // overlap endpoints can only vanish under g at the common root itself
        if (lo < hi && (is_zero(g(lo)) || is_zero(g(hi)))) {
            Rational x = is_zero(g(lo)) ? lo : hi;
            if (a.lo < x && x <= a.hi && b.lo < x && x <= b.hi && is_zero(a.poly(x)) &&
                is_zero(b.poly(x)))
                return 0;
        }
    }
    while (true) {
        if (a.hi <= b.lo) return -1;
        if (b.hi <= a.lo) return +1;
        a.refine();
        b.refine();
    }
}

// Real-root census of an arbitrary nonzero polynomial, exact and multiplicity
// aware: degree, the number of real roots counted with multiplicity, and
// pairwise disjoint isolating intervals per distinct root.
struct RootReport {
    int degree = 0;
    int real_count = 0;
    std::vector<std::pair<AlgebraicRoot, int>> roots; // (root, multiplicity)
};

// All real roots of a squarefree polynomial, in increasing order.
inline std::vector<AlgebraicRoot> isolate_roots(const UniPoly& p) {
    std::vector<AlgebraicRoot> out;
    if (p.degree() < 1) return out;
    Rational B = cauchy_bound(p);
    // endpoints of (-B, B] are off the roots by construction of the bound
    auto rec = [&](auto&& self, const Rational& lo, const Rational& hi) -> void {
        int count = sturm_count(p, lo, hi);
        if (count == 0) return;
        if (count == 1) {
            out.push_back({p, lo, hi});
            return;
        }
        Rational candidates[3] = {(lo + hi) / 2, (lo * 2 + hi) / 3, (lo + hi * 2) / 3};
        for (const auto& c : candidates) {
            if (is_zero(p(c))) continue;
            self(self, lo, c);
            self(self, c, hi);
            return;
        }
        throw Error("isolate_roots: no valid split point"); // cannot happen
    };
    rec(rec, -B, B);
    return out;
}

inline std::pair<bool, RootReport> is_real_rooted(const UniPoly& p) {
    if (p.is_zero()) throw ParameterOutOfRange("is_real_rooted: zero polynomial");
    RootReport report;
    report.degree = p.degree();
    bool all_real = true;
    for (const auto& [q, mult] : squarefree_factor(p)) {
        auto roots = isolate_roots(q);
        if (static_cast<int>(roots.size()) != q.degree()) all_real = false;
        for (const auto& r : roots) {
            report.real_count += mult;
            report.roots.emplace_back(r, mult);
        }
    }
    std::sort(report.roots.begin(), report.roots.end(),
              [](const auto& x, const auto& y) { return compare_roots(x.first, y.first) < 0; });
    return {all_real, report};
}

// Weak interlacing: deg Q = deg P + 1, both real-rooted, and the sorted root
// multisets weakly alternate b_1 <= a_1 <= b_2 <= ... <= a_n <= b_{n+1}.
// Constant P with affine Q holds by convention.
inline bool interlaces(const UniPoly& p, const UniPoly& q) {
    if (p.is_zero() || q.is_zero()) throw ParameterOutOfRange("interlaces: zero polynomial");
    if (p.degree() == 0 && q.degree() == 1) return true;
    if (q.degree() != p.degree() + 1) return false;
    auto [p_real, p_report] = is_real_rooted(p);
    auto [q_real, q_report] = is_real_rooted(q);
    if (!p_real || !q_real) return false;

    auto expand = [](const RootReport& rep) {
        std::vector<AlgebraicRoot> flat;
        for (const auto& [root, mult] : rep.roots)
            for (int i = 0; i < mult; ++i) flat.push_back(root);
        return flat;
    };
    std::vector<AlgebraicRoot> a = expand(p_report), b = expand(q_report);
    for (size_t i = 0; i < a.size(); ++i) {
        if (compare_roots(b[i], a[i]) > 0) return false;
        if (compare_roots(a[i], b[i + 1]) > 0) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Conjecture sweeps over (g, n, mu, b) grids.
// ---------------------------------------------------------------------------
struct SweepRow {
    int g2 = 0;
    Partition mu;
    Rational b;
    bool skipped = false; // H vanished identically at this key
    bool real_rooted = false;
    bool interlacing = false;
    std::string witness;
};

struct SweepReport {
    std::vector<SweepRow> rows;
    long checked = 0;
    long failures = 0;
};

inline UniPoly specialise_t(const MPoly& H, const Rational& b_val) {
    return UniPoly::from_mpoly(H.subst(Var::b, MPoly(b_val)), Var::t);
}

// Real-rootedness of H_{g,n}(mu) at each b, and interlacing of H(mu) against
// each one-part increment. Keys with identically vanishing H are reported as
// skipped. Rows come back in deterministic key order.
inline SweepReport sweep(const std::vector<int>& g2_values, int n_max, int size_max,
                         const std::vector<Rational>& b_values, int threads = 0) {
    for (const auto& b : b_values)
        if (b == Rational(0) || b == Rational(-1))
            throw ParameterOutOfRange("sweep: b must avoid 0 and -1");

    struct Key {
        int g2;
        Partition mu;
        Rational b;
    };
    std::vector<Key> keys;
    for (int g2 : g2_values)
        for (int size = 1; size <= size_max; ++size)
            for (const auto& mu : partitions_max_length(size, n_max))
                for (const auto& b : b_values) keys.push_back({g2, mu, b});

    // precompute every Hurwitz polynomial serially (shared memo), then fan out
    std::vector<MPoly> base(keys.size());
    std::vector<std::vector<MPoly>> bumps(keys.size());
    for (size_t i = 0; i < keys.size(); ++i) {
        base[i] = hurwitz_H2(keys[i].g2, keys[i].mu);
        std::set<Partition> seen;
        for (int part = 0; part < keys[i].mu.length(); ++part) {
            std::vector<int> parts = keys[i].mu.parts();
            parts[part]++;
            Partition grown(parts);
            if (!seen.insert(grown).second) continue;
            bumps[i].push_back(hurwitz_H2(keys[i].g2, grown));
        }
    }

    std::vector<SweepRow> rows(keys.size());
    auto work = [&](size_t i) {
        SweepRow row;
        row.g2 = keys[i].g2;
        row.mu = keys[i].mu;
        row.b = keys[i].b;
        if (base[i].is_zero()) {
            row.skipped = true;
            rows[i] = row;
            return;
        }
        UniPoly P = specialise_t(base[i], keys[i].b);
        if (P.is_zero()) {
            row.skipped = true;
            rows[i] = row;
            return;
        }
        row.real_rooted = is_real_rooted(P).first;
        row.interlacing = true;
        if (!row.real_rooted) row.witness = "not real-rooted";
        for (const auto& bumped : bumps[i]) {
            UniPoly Q = specialise_t(bumped, keys[i].b);
            if (Q.is_zero() || !interlaces(P, Q)) {
                row.interlacing = false;
                row.witness = "interlacing fails against a part increment";
                break;
            }
        }
        rows[i] = row;
    };

    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (size_t i = next++; i < keys.size(); i = next++) work(i);
        });
    for (auto& t : pool) t.join();

    SweepReport report;
    report.rows = std::move(rows);
    for (const auto& row : report.rows) {
        if (row.skipped) continue;
        ++report.checked;
        if (!row.real_rooted || !row.interlacing) ++report.failures;
    }
    return report;
}

} // namespace wgcalc
