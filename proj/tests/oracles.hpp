// Test-only oracles, independent of the library implementation paths they
// check: explicit expansion of symmetric functions in x-variables, the
// Murnaghan-Nakayama rule for Schur functions, and a brute-force count of
// classical monotone transposition factorisations.
#pragma once

#include <map>
#include <numeric>
#include <vector>

#include "wgcalc/partitions.hpp"
#include "wgcalc/ratfrac.hpp"
#include "wgcalc/symfunc.hpp"

namespace oracles {

using namespace wgcalc;

using XPoly = std::map<std::vector<int>, RatFrac>; // exponent vector over x_1..x_v

inline void xadd(XPoly& f, const std::vector<int>& e, const RatFrac& c) {
    if (c.is_zero()) return;
    auto it = f.find(e);
    if (it == f.end()) f.emplace(e, c);
    else {
        it->second += c;
        if (it->second.is_zero()) f.erase(it);
    }
}

inline XPoly xmul(const XPoly& a, const XPoly& b, int nvars) {
    XPoly r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            std::vector<int> e(nvars);
            for (int i = 0; i < nvars; ++i) e[i] = ea[i] + eb[i];
            xadd(r, e, ca * cb);
        }
    return r;
}

// p_r = x_1^r + ... + x_v^r
inline XPoly x_power_sum(int r, int nvars) {
    XPoly f;
    for (int i = 0; i < nvars; ++i) {
        std::vector<int> e(nvars, 0);
        e[i] = r;
        xadd(f, e, RatFrac(1));
    }
    return f;
}

// Expands a power-sum expression into explicit x-variables.
inline XPoly expand_x(const SymFunc& f, int nvars) {
    XPoly out;
    for (const auto& [mu, c] : f.terms()) {
        XPoly term;
        term[std::vector<int>(nvars, 0)] = c;
        for (int r : mu.parts()) term = xmul(term, x_power_sum(r, nvars), nvars);
        for (const auto& [e, coef] : term) xadd(out, e, coef);
    }
    return out;
}

// m_mu expanded directly: sum of x^alpha over distinct rearrangements of mu.
inline XPoly monomial_direct(const Partition& mu, int nvars) {
    XPoly out;
    std::vector<int> e(nvars, 0);
    for (int i = 0; i < mu.length(); ++i) e[i] = mu.parts()[i];
    std::sort(e.begin(), e.end());
    do {
        out[e] = RatFrac(1);
    } while (std::next_permutation(e.begin(), e.end()));
    return out;
}

// Murnaghan-Nakayama character chi^lambda(mu), via beta-sets.
inline Rational mn_character(const Partition& lambda, const Partition& mu) {
    if (lambda.empty() && mu.empty()) return 1;
    // beta-set: {lambda_i + (len - i)} for i = 1..len
    std::vector<int> beta;
    int len = lambda.length();
    for (int i = 1; i <= len; ++i) beta.push_back(lambda.part(i - 1) + len - i);
    int r = mu.part(0);
    std::vector<int> rest(mu.parts().begin() + 1, mu.parts().end());
    Rational total = 0;
    for (size_t idx = 0; idx < beta.size(); ++idx) {
        int target = beta[idx] - r;
        if (target < 0) continue;
        if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
        int crossings = 0;
        for (int v : beta)
            if (v > target && v < beta[idx]) ++crossings;
        std::vector<int> nb = beta;
        nb[idx] = target;
        std::sort(nb.rbegin(), nb.rend());
        std::vector<int> parts;
        int l = static_cast<int>(nb.size());
        for (int i = 1; i <= l; ++i) parts.push_back(nb[i - 1] - (l - i));
        Rational sign((crossings % 2) ? -1 : 1);
        total += sign * mn_character(Partition(parts), Partition(rest));
    }
    return total;
}

// s_lambda = sum_mu chi^lambda(mu) p_mu / z_mu
inline SymFunc schur_in_powersum(const Partition& lambda) {
    SymFunc f;
    for (const auto& mu : all_partitions(lambda.size()))
        f.add_term(mu, RatFrac(mn_character(lambda, mu) / Rational(z_lambda(mu))));
    return f;
}

// Classical monotone Hurwitz number (transposition model in S_q): 1/q! times
// the number of monotone transitive tuples whose product has cycle type mu,
// with cycles labelled so that cycle i has length mu_i.
inline Rational classical_monotone_hurwitz(int g, const Partition& mu) {
    int q = mu.size();
    int n = mu.length();
    int r = q + 2 * g - 2 + n;
    if (r < 0) return 0;
    std::vector<std::pair<int, int>> taus;
    long count = 0;

    auto cycle_type = [&](const std::vector<std::pair<int, int>>& ts) {
        std::vector<int> perm(q);
        std::iota(perm.begin(), perm.end(), 0);
        // product tau_1 ... tau_r applied right to left
        for (auto it = ts.rbegin(); it != ts.rend(); ++it) {
            for (int& v : perm)
                if (v == it->first - 1) v = it->second - 1;
                else if (v == it->second - 1) v = it->first - 1;
        }
        // perm[i] = image of i; read cycle lengths
        std::vector<bool> seen(q, false);
        std::vector<int> type;
        for (int s = 0; s < q; ++s) {
            if (seen[s]) continue;
            int len = 0, cur = s;
            while (!seen[cur]) {
                seen[cur] = true;
                ++len;
                cur = perm[cur];
            }
            type.push_back(len);
        }
        return Partition(type);
    };
    auto transitive = [&](const std::vector<std::pair<int, int>>& ts) {
        std::vector<int> root(q);
        std::iota(root.begin(), root.end(), 0);
        auto find = [&](int v) {
            while (root[v] != v) v = root[v] = root[root[v]];
            return v;
        };
        for (const auto& [a, b] : ts) root[find(a - 1)] = find(b - 1);
        int classes = 0;
        for (int v = 0; v < q; ++v) classes += find(v) == v;
        return classes == 1;
    };

    auto rec = [&](auto&& self, int pos, int minb) -> void {
        if (pos == r) {
            if (cycle_type(taus) == mu && transitive(taus)) ++count;
            return;
        }
        for (int b = minb; b <= q; ++b)
            for (int a = 1; a < b; ++a) {
                taus.emplace_back(a, b);
                self(self, pos + 1, b);
                taus.pop_back();
            }
    };
    rec(rec, 0, 2);

    // labellings of cycles by 1..n with prescribed lengths
    Integer labellings = 1;
    int i = 0;
    while (i < n) {
        int j = i;
        while (j < n && mu.parts()[j] == mu.parts()[i]) ++j;
        labellings *= factorial(j - i);
        i = j;
    }
    Rational result = Rational(count) * Rational(labellings) / Rational(factorial(q));
    result.canonicalize();
    return result;
}

} // namespace oracles
