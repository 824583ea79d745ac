#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "wgcalc/partitions.hpp"
#include "wgcalc/ratfrac.hpp"

namespace wgcalc {

// Symmetric function in the power-sum basis: a finite linear combination of
// p_mu with RatFrac coefficients. deg p_mu = |mu|.
class SymFunc {
public:
    using TermMap = std::map<Partition, RatFrac>;

    SymFunc() = default;
    /* implicit */ SymFunc(const RatFrac& c) {
        if (!c.is_zero()) terms_[Partition()] = c;
    }

    static SymFunc p(const Partition& mu, const RatFrac& c = RatFrac(1)) {
        SymFunc f;
        if (!c.is_zero()) terms_of(f)[mu] = c;
        return f;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    RatFrac coeff(const Partition& mu) const {
        auto it = terms_.find(mu);
        return it == terms_.end() ? RatFrac(0) : it->second;
    }

    void add_term(const Partition& mu, const RatFrac& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(mu);
        if (it == terms_.end()) {
            terms_.emplace(mu, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    SymFunc& operator+=(const SymFunc& o) {
        for (const auto& [mu, c] : o.terms_) add_term(mu, c);
        return *this;
    }
    SymFunc& operator-=(const SymFunc& o) {
        for (const auto& [mu, c] : o.terms_) add_term(mu, -c);
        return *this;
    }
    friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
    friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
    friend SymFunc operator-(const SymFunc& a) {
        SymFunc r;
        for (const auto& [mu, c] : a.terms_) r.terms_[mu] = -c;
        return r;
    }

    SymFunc& operator*=(const RatFrac& c) {
        if (c.is_zero()) { terms_.clear(); return *this; }
        for (auto& [mu, coef] : terms_) coef *= c;
        return *this;
    }
    friend SymFunc operator*(SymFunc a, const RatFrac& c) { return a *= c; }
    friend SymFunc operator*(const RatFrac& c, SymFunc a) { return a *= c; }

    // Product: p_mu * p_nu = p_{mu union nu}.
    friend SymFunc operator*(const SymFunc& a, const SymFunc& b) {
        SymFunc r;
        for (const auto& [mu, cm] : a.terms_) {
            for (const auto& [nu, cn] : b.terms_) {
                std::vector<int> parts = mu.parts();
                parts.insert(parts.end(), nu.parts().begin(), nu.parts().end());
                r.add_term(Partition(parts), cm * cn);
            }
        }
        return r;
    }
    SymFunc& operator*=(const SymFunc& o) { return *this = *this * o; }

    bool operator==(const SymFunc& o) const {
        // RatFrac equality is semantic (cross-multiplied), so compare termwise.
        if (terms_.size() != o.terms_.size()) return false;
        auto it = terms_.begin();
        auto jt = o.terms_.begin();
        for (; it != terms_.end(); ++it, ++jt) {
            if (it->first != jt->first) return false;
            if (!frac_equal(it->second, jt->second)) return false;
        }
        return true;
    }
    bool operator!=(const SymFunc& o) const { return !(*this == o); }

    SymFunc map_coeffs(const std::function<RatFrac(const RatFrac&)>& f) const {
        SymFunc r;
        for (const auto& [mu, c] : terms_) r.add_term(mu, f(c));
        return r;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [mu, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += "(" + c.str() + ")";
            for (int part : mu.parts()) s += "*p" + std::to_string(part);
        }
        return s;
    }

private:
    static TermMap& terms_of(SymFunc& f) { return f.terms_; }
    TermMap terms_;
};

// <p_la, p_mu>_b = delta (b+1)^{len} z_la, extended bilinearly.
inline RatFrac inner_product_b(const SymFunc& f, const SymFunc& g) {
    RatFrac total(0);
    MPoly bp1 = var_b() + MPoly(1);
    for (const auto& [mu, cf] : f.terms()) {
        RatFrac cg = g.coeff(mu);
        if (cg.is_zero()) continue;
        total += cf * cg * RatFrac(bp1.pow(mu.length()) * MPoly(Rational(z_lambda(mu))));
    }
    return total;
}

namespace detail {

// p_r * m_nu in the monomial basis: add r to an existing part or as a new
// part; the coefficient is the multiplicity of the grown part in the result.
inline std::map<Partition, Rational> mult_p_into_m(int r, const Partition& nu) {
    std::map<Partition, Rational> out;
    std::vector<int> values;
    for (int p : nu.parts()) values.push_back(p);
    values.push_back(0); // adding r as a brand new part
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    for (int v : values) {
        std::vector<int> parts = nu.parts();
        if (v > 0) {
            parts.erase(std::find(parts.begin(), parts.end(), v));
        }
        parts.push_back(v + r);
        Partition rho(parts);
        out[rho] += Rational(rho.multiplicity(v + r));
    }
    return out;
}

// Expansion of p_mu in the monomial basis.
inline std::map<Partition, Rational> powersum_in_monomial_raw(const Partition& mu) {
    std::map<Partition, Rational> acc;
    acc[Partition()] = 1;
    for (int r : mu.parts()) {
        std::map<Partition, Rational> next;
        for (const auto& [nu, c] : acc)
            for (const auto& [rho, d] : mult_p_into_m(r, nu)) {
                next[rho] += c * d;
                if (is_zero(next[rho])) next.erase(rho);
            }
        acc = std::move(next);
    }
    return acc;
}

struct MonomialTables {
    // per size: partitions (descending lex), m-expansion of each m_mu in p-basis
    std::map<int, std::map<Partition, SymFunc>> m_in_p;
    std::mutex mutex;
};

inline MonomialTables& monomial_tables() {
    static MonomialTables tables;
    return tables;
}

} // namespace detail

// m_mu expressed in the power-sum basis (exact rational coefficients).
// Computed once per degree by inverting the p-to-m transition matrix.
inline SymFunc monomial_in_powersum(const Partition& mu) {
    auto& tables = detail::monomial_tables();
    std::scoped_lock lock(tables.mutex);
    int n = mu.size();
    auto it = tables.m_in_p.find(n);
    if (it == tables.m_in_p.end()) {
        auto parts = all_partitions(n);
        int dim = static_cast<int>(parts.size());
        // A[i][j]: coefficient of m_{parts[j]} in p_{parts[i]}
        std::vector<std::vector<Rational>> A(dim, std::vector<Rational>(dim, Rational(0)));
        for (int i = 0; i < dim; ++i) {
            auto exp = detail::powersum_in_monomial_raw(parts[i]);
            for (int j = 0; j < dim; ++j) {
                auto jt = exp.find(parts[j]);
                if (jt != exp.end()) A[i][j] = jt->second;
            }
        }
        // invert by Gauss-Jordan over Q
        std::vector<std::vector<Rational>> inv(dim, std::vector<Rational>(dim, Rational(0)));
        for (int i = 0; i < dim; ++i) inv[i][i] = 1;
        for (int col = 0; col < dim; ++col) {
            int piv = -1;
            for (int r = col; r < dim; ++r)
                if (!is_zero(A[r][col])) { piv = r; break; }
            if (piv < 0) throw Error("monomial_in_powersum: singular transition matrix");
            std::swap(A[piv], A[col]);
            std::swap(inv[piv], inv[col]);
            Rational d = A[col][col];
            for (int j = 0; j < dim; ++j) { A[col][j] /= d; inv[col][j] /= d; }
            for (int r = 0; r < dim; ++r) {
                if (r == col || is_zero(A[r][col])) continue;
                Rational f = A[r][col];
                for (int j = 0; j < dim; ++j) {
                    A[r][j] -= f * A[col][j];
                    inv[r][j] -= f * inv[col][j];
                }
            }
        }
        // column j of inv expresses m_{parts[j]} = sum_i inv[i][j]... careful:
        // p_i = sum_j A0[i][j] m_j  =>  m_j = sum_i (A0^-1)[j][i] p_i.
        std::map<Partition, SymFunc> table;
        for (int j = 0; j < dim; ++j) {
            SymFunc f;
            for (int i = 0; i < dim; ++i)
                f.add_term(parts[i], RatFrac(inv[j][i]));
            table[parts[j]] = f;
        }
        it = tables.m_in_p.emplace(n, std::move(table)).first;
    }
    auto jt = it->second.find(mu);
    if (jt == it->second.end()) throw Error("monomial_in_powersum: unknown partition");
    return jt->second;
}

// p_mu expanded in the monomial basis.
inline std::map<Partition, Rational> powersum_in_monomial(const Partition& mu) {
    return detail::powersum_in_monomial_raw(mu);
}

// e_r and h_r in the power-sum basis: e_r = sum eps_mu p_mu / z_mu,
// h_r = sum p_mu / z_mu.
inline SymFunc elementary_in_powersum(int r) {
    SymFunc f;
    for (const auto& mu : all_partitions(r)) {
        Rational c(((r - mu.length()) % 2 == 0) ? 1 : -1);
        f.add_term(mu, RatFrac(c / Rational(z_lambda(mu))));
    }
    return f;
}

inline SymFunc homogeneous_in_powersum(int r) {
    SymFunc f;
    for (const auto& mu : all_partitions(r))
        f.add_term(mu, RatFrac(Rational(1) / Rational(z_lambda(mu))));
    return f;
}

// Laplace-Beltrami operator
//   D(b) = 1/2 [ (b+1) sum ij p_{i+j} d_i d_j + sum (i+j) p_i p_j d_{i+j}
//                + b sum i(i-1) p_i d_i ]
inline SymFunc laplace_beltrami(const SymFunc& f) {
    SymFunc out;
    RatFrac half(rat(1, 2));
    RatFrac bp1(var_b() + MPoly(1));
    RatFrac b(var_b());
    for (const auto& [mu, c] : f.terms()) {
        // distinct part values with multiplicities
        std::vector<std::pair<int, int>> vals; // (value, multiplicity)
        {
            int i = 0;
            while (i < mu.length()) {
                int j = i;
                while (j < mu.length() && mu.parts()[j] == mu.parts()[i]) ++j;
                vals.emplace_back(mu.parts()[i], j - i);
                i = j;
            }
        }
        auto remove_parts = [&](std::initializer_list<int> to_remove) {
            std::vector<int> parts = mu.parts();
            for (int v : to_remove)
                parts.erase(std::find(parts.begin(), parts.end(), v));
            return parts;
        };
        // (b+1) sum_{i,j} i j p_{i+j} d_i d_j
        for (const auto& [i, mi] : vals) {
            for (const auto& [j, mj] : vals) {
                long count = (i == j) ? static_cast<long>(mi) * (mi - 1)
                                      : static_cast<long>(mi) * mj;
                if (count == 0) continue;
                std::vector<int> parts = remove_parts({i, j});
                parts.push_back(i + j);
                out.add_term(Partition(parts),
                             c * half * bp1 * RatFrac(Rational(static_cast<long>(i) * j * count)));
            }
        }
        // sum_{i+j=s} s p_i p_j d_s  (ordered pairs i, j >= 1)
        for (const auto& [s, ms] : vals) {
            for (int i = 1; i < s; ++i) {
                int j = s - i;
                std::vector<int> parts = remove_parts({s});
                parts.push_back(i);
                parts.push_back(j);
                out.add_term(Partition(parts),
                             c * half * RatFrac(Rational(static_cast<long>(s) * ms)));
            }
        }
        // b sum i(i-1) p_i d_i
        for (const auto& [i, mi] : vals) {
            long w = static_cast<long>(i) * (i - 1) * mi;
            if (w == 0) continue;
            out.add_term(mu, c * half * b * RatFrac(Rational(w)));
        }
    }
    return out;
}

namespace detail {

struct JackTable {
    std::map<Partition, SymFunc> values;
    std::mutex mutex;
};

inline JackTable& jack_table() {
    static JackTable table;
    return table;
}

inline int jack_degree_bound() {
#ifdef WGCALC_JACK_DEGREE_BOUND
    return WGCALC_JACK_DEGREE_BOUND;
#else
    return 8;
#endif
}

} // namespace detail

// Jack function J_lambda^(b) in the power-sum basis (J-normalisation):
// leading coefficient hook_b(lambda) on m_lambda, support dominance-below,
// orthogonal family for <.,.>_b. Built by Gram-Schmidt over the m-basis in a
// dominance-compatible order; the eigenvector property under D(b) is checked
// by tests rather than used in the construction.
inline SymFunc jack(const Partition& lambda) {
    if (lambda.size() > detail::jack_degree_bound())
        throw DegreeBoundExceeded("jack: |lambda| exceeds the configured degree bound");
    auto& table = detail::jack_table();
    {
        std::scoped_lock lock(table.mutex);
        auto it = table.values.find(lambda);
        if (it != table.values.end()) return it->second;
    }
    int n = lambda.size();
    // increasing lexicographic order refines dominance upward
    auto parts = all_partitions(n);
    std::reverse(parts.begin(), parts.end());
    std::map<Partition, SymFunc> basis; // orthogonalised, leading coeff 1 on m_la
    for (const auto& la : parts) {
        SymFunc v = monomial_in_powersum(la);
        for (const auto& [nu, u] : basis) {
            RatFrac proj = inner_product_b(v, u) / inner_product_b(u, u);
            v -= u * proj;
        }
        basis.emplace(la, std::move(v));
    }
    std::scoped_lock lock(table.mutex);
    for (const auto& [la, v] : basis) {
        auto [h, hp] = hook_products(la);
        (void)hp;
        table.values.emplace(la, v * RatFrac(h));
    }
    return table.values.at(lambda);
}

// d/dp_m, acting on the power-sum basis.
inline SymFunc p_derivative(const SymFunc& f, int m) {
    SymFunc out;
    for (const auto& [mu, c] : f.terms()) {
        int mult = mu.multiplicity(m);
        if (mult == 0) continue;
        std::vector<int> parts = mu.parts();
        parts.erase(std::find(parts.begin(), parts.end(), m));
        out.add_term(Partition(parts), c * RatFrac(Rational(mult)));
    }
    return out;
}

// Multiplication by p_i.
inline SymFunc p_multiply(const SymFunc& f, int i) {
    SymFunc out;
    for (const auto& [mu, c] : f.terms()) {
        std::vector<int> parts = mu.parts();
        parts.push_back(i);
        out.add_term(Partition(parts), c);
    }
    return out;
}

// Evaluates a power-sum expression at a finite multiset of values: p_r maps
// to sum values_j^r. The arity k must match the multiset size.
inline RatFrac eval_at_multiset(const SymFunc& f, const std::vector<MPoly>& values, int k) {
    if (static_cast<int>(values.size()) != k)
        throw ArityMismatch("eval_at_multiset: |values| != k");
    std::map<int, MPoly> psums;
    auto power_sum = [&](int r) -> const MPoly& {
        auto it = psums.find(r);
        if (it == psums.end()) {
            MPoly s(0);
            for (const auto& v : values) s += v.pow(r);
            it = psums.emplace(r, std::move(s)).first;
        }
        return it->second;
    };
    RatFrac total(0);
    for (const auto& [mu, c] : f.terms()) {
        RatFrac term = c;
        for (int part : mu.parts()) term *= RatFrac(power_sum(part));
        total += term;
    }
    return total;
}

} // namespace wgcalc
