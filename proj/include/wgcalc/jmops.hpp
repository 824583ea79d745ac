#pragma once

#include <functional>
#include <future>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "wgcalc/pairings.hpp"
#include "wgcalc/symfunc.hpp"
#include "wgcalc/univar.hpp"

namespace wgcalc {

// Indexing of P_k in the canonical lexicographic order, with cached charge
// assignments. Built once per level.
struct PkIndex {
    int k = 0;
    std::vector<PairPartition> list;
    std::map<PairPartition, int> pos;
    std::vector<std::vector<int>> charges;

    static const PkIndex& at(int k) {
        static std::map<int, PkIndex> cache;
        static std::mutex mutex;
        std::scoped_lock lock(mutex);
        auto it = cache.find(k);
        if (it == cache.end()) {
            PkIndex idx;
            idx.k = k;
            idx.list = all_pair_partitions(k);
            for (int i = 0; i < static_cast<int>(idx.list.size()); ++i)
                idx.pos[idx.list[i]] = i;
            idx.charges.resize(idx.list.size());
            if (k >= 1)
                for (size_t i = 0; i < idx.list.size(); ++i)
                    idx.charges[i] = idx.list[i].charges();
            it = cache.emplace(k, std::move(idx)).first;
        }
        return it->second;
    }
};

template <class K>
struct ScalarTraits;

template <>
struct ScalarTraits<UFrac> {
    // weights are polynomials in b only
    static UFrac from_b_poly(const MPoly& w) { return UFrac(UniPoly::from_mpoly(w, Var::b)); }
};

template <>
struct ScalarTraits<RatFrac> {
    static RatFrac from_b_poly(const MPoly& w) { return RatFrac(w); }
};

template <>
struct ScalarTraits<UniPoly> {
    static UniPoly from_b_poly(const MPoly& w) { return UniPoly::from_mpoly(w, Var::b); }
};

// Formal linear combination of pair partitions of {1..2k}; coefficients K are
// univariate fractions in b for the Jucys-Murphy layer and full rational
// functions for the Weingarten product formula.
template <class K>
class PkVec {
public:
    PkVec() = default;
    explicit PkVec(int k) : k_(k) {}

    static PkVec unit(int k, const PairPartition& m, const K& c = K(1)) {
        PkVec v(k);
        v.coeff_[PkIndex::at(k).pos.at(m)] = c;
        return v;
    }
    static PkVec e_k(int k) { return unit(k, PairPartition::trivial(k)); }

    int level() const { return k_; }
    const std::map<int, K>& entries() const { return coeff_; }
    bool is_zero() const { return coeff_.empty(); }

    K coeff(const PairPartition& m) const {
        auto it = coeff_.find(PkIndex::at(k_).pos.at(m));
        return it == coeff_.end() ? K(0) : it->second;
    }

    void add(int idx, const K& c) {
        if (c == K(0)) return;
        auto it = coeff_.find(idx);
        if (it == coeff_.end()) {
            coeff_.emplace(idx, c);
        } else {
            it->second += c;
            if (it->second == K(0)) coeff_.erase(it);
        }
    }

    PkVec& operator+=(const PkVec& o) {
        for (const auto& [i, c] : o.coeff_) add(i, c);
        return *this;
    }
    PkVec& operator-=(const PkVec& o) {
        for (const auto& [i, c] : o.coeff_) add(i, K(0) - c);
        return *this;
    }
    friend PkVec operator+(PkVec a, const PkVec& b) { return a += b; }
    friend PkVec operator-(PkVec a, const PkVec& b) { return a -= b; }
    PkVec& operator*=(const K& s) {
        if (s == K(0)) { coeff_.clear(); return *this; }
        for (auto& [i, c] : coeff_) c *= s;
        return *this;
    }
    friend PkVec operator*(PkVec a, const K& s) { return a *= s; }
    friend PkVec operator*(const K& s, PkVec a) { return a *= s; }

    bool operator==(const PkVec& o) const { return k_ == o.k_ && coeff_ == o.coeff_; }
    bool operator!=(const PkVec& o) const { return !(*this == o); }

    // Embeds into V_j (j >= k) by appending trivial top pairs to the support.
    PkVec embed(int j) const {
        PkVec out(j);
        const auto& src = PkIndex::at(k_);
        const auto& dst = PkIndex::at(j);
        for (const auto& [i, c] : coeff_)
            out.add(dst.pos.at(src.list[i].embed(j)), c);
        return out;
    }

    std::string str() const {
        if (coeff_.empty()) return "0";
        const auto& idx = PkIndex::at(k_);
        std::string s;
        for (const auto& [i, c] : coeff_) {
            if (!s.empty()) s += " + ";
            s += "(" + c.str("b") + ")*" + idx.list[i].str();
        }
        return s;
    }

private:
    int k_ = 0;
    std::map<int, K> coeff_;
};

using BVec = PkVec<UFrac>;

// J_i(m) = sum_{a=1}^{2i-2} omega((a 2i-1).m, m) (a 2i-1).m, with J_1 = 0.
// The weight looks at the charges of the *target* pair partition.
template <class K>
PkVec<K> j_apply(int i, const PkVec<K>& v) {
    if (i < 1 || i > v.level()) throw IndexOutOfRange("j_apply: index exceeds the level");
    const auto& idx = PkIndex::at(v.level());
    PkVec<K> out(v.level());
    for (const auto& [mi, c] : v.entries()) {
        const PairPartition& m = idx.list[mi];
        for (int a = 1; a <= 2 * i - 2; ++a) {
            PairPartition n = m.act(a, 2 * i - 1);
            int ni = idx.pos.at(n);
            const auto& q = idx.charges[ni];
            K w = (q[a] == q[2 * i - 1]) ? K(1) : ScalarTraits<K>::from_b_poly(var_b());
            out.add(ni, w * c);
        }
    }
    return out;
}

// Classical odd Jucys-Murphy action: J_{2i-1} = (1 2i-1) + ... + (2i-2 2i-1),
// all weights 1.
template <class K>
PkVec<K> odd_jm_apply(int i, const PkVec<K>& v) {
    if (i < 1 || i > v.level()) throw IndexOutOfRange("odd_jm_apply: index exceeds the level");
    const auto& idx = PkIndex::at(v.level());
    PkVec<K> out(v.level());
    for (const auto& [mi, c] : v.entries()) {
        const PairPartition& m = idx.list[mi];
        for (int a = 1; a <= 2 * i - 2; ++a)
            out.add(idx.pos.at(m.act(a, 2 * i - 1)), c);
    }
    return out;
}

// Row-echelon basis of a subspace of V_k over the fraction field in b, kept
// in reduced form so membership tests are exact.
class SubspaceBasis {
public:
    explicit SubspaceBasis(int k) : k_(k) {}

    int dimension() const { return static_cast<int>(rows_.size()); }
    int level() const { return k_; }
    const std::vector<BVec>& rows() const { return rows_; }

    BVec reduce(BVec v) const {
        for (size_t r = 0; r < rows_.size(); ++r) {
            auto it = v.entries().find(pivots_[r]);
            if (it == v.entries().end()) continue;
            UFrac f = it->second;
            BVec scaled = rows_[r];
            scaled *= f;
            v -= scaled;
        }
        return v;
    }

    bool contains(const BVec& v) const { return reduce(v).is_zero(); }

    // Returns true if v enlarged the span.
    bool insert(BVec v) {
        v = reduce(std::move(v));
        if (v.is_zero()) return false;
        // pivot: entry of smallest combined degree, ties by position
        int pivot = -1;
        long best = -1;
        for (const auto& [i, c] : v.entries()) {
            long deg = c.num().degree() + c.den().degree();
            if (pivot < 0 || deg < best) { pivot = i; best = deg; }
        }
        UFrac inv = UFrac(1) / v.entries().at(pivot);
        v *= inv;
        for (size_t r = 0; r < rows_.size(); ++r) {
            auto it = rows_[r].entries().find(pivot);
            if (it == rows_[r].entries().end()) continue;
            UFrac f = it->second;
            BVec scaled = v;
            scaled *= f;
            rows_[r] -= scaled;
        }
        rows_.push_back(std::move(v));
        pivots_.push_back(pivot);
        return true;
    }

private:
    int k_;
    std::vector<BVec> rows_;
    std::vector<int> pivots_;
};

// X(k): the orbit of e_k under the algebra generated by the J-operators.
// Built once per level; the echelonised basis is immutable afterwards.
inline const SubspaceBasis& orbit_space(int k) {
    static std::map<int, SubspaceBasis> cache;
    static std::mutex mutex;
    std::scoped_lock lock(mutex);
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    SubspaceBasis basis(k);
    std::vector<BVec> queue{BVec::e_k(k)};
    basis.insert(queue.front());
    while (!queue.empty()) {
        BVec v = std::move(queue.back());
        queue.pop_back();
        for (int i = 2; i <= k; ++i) {
            BVec u = j_apply(i, v);
            if (basis.insert(u)) queue.push_back(std::move(u));
        }
    }
    return cache.emplace(k, std::move(basis)).first->second;
}

namespace detail {

inline UFrac content_ufrac(const MPoly& c) {
    return UFrac(UniPoly::from_mpoly(c, Var::b));
}

// Addable corner contents of a shape, paired with the resulting shape.
inline std::vector<std::pair<Partition, MPoly>> addable_corners(const Partition& shape) {
    std::vector<std::pair<Partition, MPoly>> out;
    for (const auto& grown : addable_shapes(shape)) {
        // locate the added box
        for (int i = 0; i < grown.length(); ++i) {
            if (grown.part(i) != shape.part(i)) {
                out.emplace_back(grown, b_content(i + 1, grown.part(i)));
                break;
            }
        }
    }
    return out;
}

} // namespace detail

// The conjectural Gelfand-Tsetlin vector w_T, built by the sibling-product
// recursion from the one-box tableau, whose vector is e_1 (embedded at level k).
// Results are memoized per (tableau, level): the suite reuses them heavily.
inline BVec w_tableau(const Tableau& T, int level = -1) {
    int k = T.size();
    if (level < 0) level = k;
    if (level < k) throw IndexOutOfRange("w_tableau: level below tableau size");
    static std::map<std::pair<std::vector<std::vector<int>>, int>, BVec> cache;
    static std::mutex mutex;
    auto key = std::make_pair(T.rows(), level);
    {
        std::scoped_lock lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    BVec v = BVec::e_k(level);
    for (int j = 2; j <= k; ++j) {
        // shape after j-1 boxes and the content of T's j-th box
        Tableau cur = T;
        for (int s = k; s > j; --s) cur = cur.removed_top();
        Tableau prev = cur.removed_top();
        MPoly cT = cur.content_of(j);
        for (const auto& [shape, cS] : detail::addable_corners(prev.shape())) {
            if (shape == cur.shape()) continue;
            UFrac denom = detail::content_ufrac(cT - cS);
            BVec jv = j_apply(j, v);
            BVec scaled = v;
            scaled *= detail::content_ufrac(cS);
            jv -= scaled;
            jv *= UFrac(1) / denom;
            v = std::move(jv);
        }
    }
    std::scoped_lock lock(mutex);
    return cache.emplace(key, std::move(v)).first->second;
}

// p_lambda: indicator sum of the pairings of coset-type lambda.
inline BVec p_vector(const Partition& lambda, int k) {
    if (lambda.size() != k) throw ParameterOutOfRange("p_vector: lambda must partition k");
    const auto& idx = PkIndex::at(k);
    BVec v(k);
    for (int i = 0; i < static_cast<int>(idx.list.size()); ++i)
        if (idx.list[i].coset_type() == lambda) v.add(i, UFrac(1));
    return v;
}

// w_lambda = (1 / hook hook') sum_mu <J_lambda, p_mu>_b p_mu-vector.
inline BVec w_vector(const Partition& lambda, int k) {
    if (lambda.size() != k) throw ParameterOutOfRange("w_vector: lambda must partition k");
    static std::map<std::pair<std::vector<int>, int>, BVec> cache;
    static std::mutex mutex;
    auto key = std::make_pair(lambda.parts(), k);
    {
        std::scoped_lock lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto [h, hp] = hook_products(lambda);
    UFrac scale = UFrac(1) / detail::content_ufrac(h * hp);
    SymFunc J = jack(lambda);
    BVec out(k);
    MPoly bp1 = var_b() + 1;
    for (const auto& [mu, c] : J.terms()) {
        // <J, p_mu> = coeff * z_mu (b+1)^len(mu)
        RatFrac ip = c * RatFrac(bp1.pow(mu.length()) * MPoly(Rational(z_lambda(mu))));
        BVec pmu = p_vector(mu, k);
        pmu *= UFrac::from_ratfrac(ip, Var::b) * scale;
        out += pmu;
    }
    std::scoped_lock lock(mutex);
    return cache.emplace(key, std::move(out)).first->second;
}

// The b-deformed characteristic map: p_mu-vector -> p_mu / ((1+b)^len z_mu).
// Requires the input to be constant on coset-type.
inline SymFunc ch_b(const BVec& v) {
    const auto& idx = PkIndex::at(v.level());
    std::map<Partition, UFrac> class_coeff;
    std::map<Partition, int> class_size;
    for (int i = 0; i < static_cast<int>(idx.list.size()); ++i) {
        Partition ty = idx.list[i].coset_type();
        auto it = v.entries().find(i);
        UFrac c = (it == v.entries().end()) ? UFrac(0) : it->second;
        auto jt = class_coeff.find(ty);
        if (jt == class_coeff.end()) class_coeff.emplace(ty, c);
        else if (!(jt->second == c))
            throw NotCosetTypeInvariant("ch_b: coefficients not constant on coset-type");
        class_size[ty]++;
    }
    SymFunc out;
    MPoly bp1 = var_b() + 1;
    for (const auto& [mu, c] : class_coeff) {
        if (c == UFrac(0)) continue;
        RatFrac scale(MPoly(1), bp1.pow(mu.length()) * MPoly(Rational(z_lambda(mu))));
        out.add_term(mu, c.to_ratfrac(Var::b) * scale);
    }
    return out;
}

// f^>=: each monomial J_{i_1} J_{i_2} ... ordered with indices weakly
// decreasing left to right, so the smallest index acts first.
template <class K>
PkVec<K> apply_monomial_ge(const std::vector<int>& exponents, const PkVec<K>& v) {
    PkVec<K> out = v;
    for (int i = 1; i <= static_cast<int>(exponents.size()); ++i)
        for (int rep = 0; rep < exponents[i - 1]; ++rep) out = j_apply(i, out);
    return out;
}

namespace detail {

// Common-denominator form of a fraction vector; the operator cascades can
// then run over plain polynomials with no per-step gcd work.
inline std::pair<PkVec<UniPoly>, UniPoly> to_common_den(const BVec& v) {
    UniPoly D(1);
    for (const auto& [i, c] : v.entries()) {
        if (c.den().degree() < 1) continue;
        UniPoly g = gcd(D, c.den());
        D = D * (c.den() / g);
    }
    PkVec<UniPoly> y(v.level());
    for (const auto& [i, c] : v.entries()) y.add(i, c.num() * (D / c.den()));
    return {std::move(y), std::move(D)};
}

inline BVec from_common_den(const PkVec<UniPoly>& y, const UniPoly& D, int level) {
    BVec out(level);
    for (const auto& [i, c] : y.entries()) out.add(i, UFrac(c, D));
    return out;
}

template <class Body>
BVec over_common_den(const BVec& v, Body&& body) {
    auto [y, D] = to_common_den(v);
    PkVec<UniPoly> total = body(y);
    return from_common_den(total, D, v.level());
}

} // namespace detail

template <class K>
PkVec<K> e_ge_apply_on(int r, const PkVec<K>& v) {
    int k = v.level();
    PkVec<K> total(k);
    std::vector<int> idxs;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(idxs.size()) == r) {
            std::vector<int> exps(k, 0);
            for (int i : idxs) exps[i - 1] = 1;
            total += apply_monomial_ge(exps, v);
            return;
        }
        for (int i = next; i <= k; ++i) {
            idxs.push_back(i);
            self(self, i + 1);
            idxs.pop_back();
        }
    };
    rec(rec, 1);
    return total;
}

template <class K>
PkVec<K> h_ge_apply_on(int r, const PkVec<K>& v) {
    int k = v.level();
    PkVec<K> total(k);
    std::vector<int> exps(k, 0);
    auto rec = [&](auto&& self, int minvar, int rem) -> void {
        if (rem == 0) {
            total += apply_monomial_ge(exps, v);
            return;
        }
        for (int i = minvar; i <= k; ++i) {
            exps[i - 1]++;
            self(self, i, rem - 1);
            exps[i - 1]--;
        }
    };
    rec(rec, 1, r);
    return total;
}

template <class K>
PkVec<K> m_ge_apply_on(const Partition& nu, const PkVec<K>& v) {
    int k = v.level();
    int l = nu.length();
    PkVec<K> total(k);
    if (l > k) return total;
    std::vector<int> idxs;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(idxs.size()) == l) {
            std::vector<int> perm = nu.parts();
            std::sort(perm.begin(), perm.end());
            do {
                std::vector<int> exps(k, 0);
                for (int s = 0; s < l; ++s) exps[idxs[s] - 1] = perm[s];
                total += apply_monomial_ge(exps, v);
            } while (std::next_permutation(perm.begin(), perm.end()));
            return;
        }
        for (int i = next; i <= k; ++i) {
            idxs.push_back(i);
            self(self, i + 1);
            idxs.pop_back();
        }
    };
    rec(rec, 1);
    return total;
}

inline BVec e_ge_apply(int r, const BVec& v) {
    return detail::over_common_den(v, [&](const PkVec<UniPoly>& y) { return e_ge_apply_on(r, y); });
}

inline BVec h_ge_apply(int r, const BVec& v) {
    return detail::over_common_den(v, [&](const PkVec<UniPoly>& y) { return h_ge_apply_on(r, y); });
}

inline BVec m_ge_apply(const Partition& nu, const BVec& v) {
    return detail::over_common_den(v,
                                   [&](const PkVec<UniPoly>& y) { return m_ge_apply_on(nu, y); });
}

// One entry of the verification report. Conjecture-class failures are
// reported; theorem-class failures indicate an implementation bug.
struct CheckResult {
    std::string name;
    bool theorem = false;
    bool pass = false;
    std::string witness;
};

// Runs the Jucys-Murphy verification suite at level k: commutation on X(k),
// the eigenvector table, branching sums, the w_lambda decomposition, the
// symmetric-function eigen-action, the Laplace-Beltrami intertwining, and the
// elementary/homogeneous product identities.
inline std::vector<CheckResult> verify_suite(int k) {
    std::vector<std::function<CheckResult()>> checks;
    auto add = [&](std::string name, bool theorem, std::function<std::string()> run) {
        checks.push_back([name = std::move(name), theorem, run = std::move(run)]() {
            CheckResult r;
            r.name = name;
            r.theorem = theorem;
            r.witness = run();
            r.pass = r.witness.empty();
            return r;
        });
    };

    add("dimension of X(k) equals #Tab(k)", false, [k] {
        auto dim = orbit_space(k).dimension();
        auto tabs = static_cast<int>(standard_tableaux_all(k).size());
        return dim == tabs ? "" : "dim " + std::to_string(dim) + " vs " + std::to_string(tabs);
    });

    add("J-operators commute on X(k)", false, [k] {
        const auto& basis = orbit_space(k);
        for (int m = 2; m <= k; ++m)
            for (int n = m + 1; n <= k; ++n)
                for (const auto& v : basis.rows())
                    if (j_apply(m, j_apply(n, v)) != j_apply(n, j_apply(m, v)))
                        return "[J_" + std::to_string(m) + ", J_" + std::to_string(n) +
                               "] != 0 on X(" + std::to_string(k) + ")";
        return std::string();
    });

    add("eigen-action J_i w_T = c_b(T_i) w_T", false, [k] {
        for (const auto& T : standard_tableaux_all(k)) {
            BVec w = w_tableau(T);
            for (int i = 1; i <= k; ++i) {
                BVec lhs = j_apply(i, w);
                BVec rhs = w;
                rhs *= detail::content_ufrac(T.content_of(i));
                if (lhs != rhs) return "tableau " + T.str() + ", i = " + std::to_string(i);
            }
        }
        return std::string();
    });

    add("branching sum w_S = sum_{T contains S} w_T", false, [k] {
        for (int j = 1; j < k; ++j) {
            for (const auto& S : standard_tableaux_all(j)) {
                BVec lhs = w_tableau(S, k);
                BVec rhs(k);
                for (const auto& T : standard_tableaux_all(k))
                    if (T.contains(S)) rhs += w_tableau(T);
                if (lhs != rhs) return "S = " + S.str() + " at level " + std::to_string(k);
            }
        }
        // j = 0 limit: e_k decomposes over all tableaux
        BVec sum(k);
        for (const auto& T : standard_tableaux_all(k)) sum += w_tableau(T);
        if (sum != BVec::e_k(k)) return std::string("sum of all w_T differs from e_k");
        return std::string();
    });

    add("w_lambda = sum over Tab(lambda) of w_T", false, [k] {
        for (const auto& la : all_partitions(k)) {
            BVec rhs(k);
            for (const auto& T : standard_tableaux(la)) rhs += w_tableau(T);
            if (w_vector(la, k) != rhs) return "lambda = " + la.str();
        }
        return std::string();
    });

    add("symmetric functions of J act on w_lambda by f(cont_b)", false, [k] {
        for (const auto& la : all_partitions(k)) {
            BVec w = w_vector(la, k);
            auto contents = contents_multiset(la);
            auto eigencheck = [&](const PkVec<UFrac>& lhs, const SymFunc& f) {
                RatFrac ev = eval_at_multiset(f, contents, k);
                BVec rhs = w;
                rhs *= UFrac::from_ratfrac(ev, Var::b);
                return lhs == rhs;
            };
            for (int r = 1; r <= 3; ++r) {
                if (r <= k && !eigencheck(e_ge_apply(r, w), elementary_in_powersum(r)))
                    return "e_" + std::to_string(r) + " on " + la.str();
                if (!eigencheck(h_ge_apply(r, w), homogeneous_in_powersum(r)))
                    return "h_" + std::to_string(r) + " on " + la.str();
            }
            for (int d = 1; d <= 3; ++d)
                for (const auto& nu : all_partitions(d)) {
                    if (nu.length() > k) continue;
                    if (!eigencheck(m_ge_apply(nu, w), monomial_in_powersum(nu)))
                        return "m_" + nu.str() + " on " + la.str();
                }
        }
        return std::string();
    });

    add("Laplace-Beltrami intertwining through ch", false, [k] {
        for (const auto& la : all_partitions(k)) {
            BVec p = p_vector(la, k);
            BVec sum(k);
            for (int i = 1; i <= k; ++i) sum += j_apply(i, p);
            SymFunc lhs;
            try {
                lhs = ch_b(sum);
            } catch (const NotCosetTypeInvariant&) {
                return "(sum J_i) p_" + la.str() + " leaves ZV_k";
            }
            if (lhs != laplace_beltrami(ch_b(p))) return "lambda = " + la.str();
        }
        return std::string();
    });

    add("e_r identity", true, [k] {
        for (int r = 0; r < k; ++r) {
            BVec lhs = e_ge_apply(r, BVec::e_k(k));
            BVec rhs(k);
            for (const auto& la : all_partitions(k))
                if (la.length() == k - r) rhs += p_vector(la, k);
            if (lhs != rhs) return "r = " + std::to_string(r);
        }
        return std::string();
    });

    add("h_r identity", true, [k] {
        for (int r = 0; r <= 3; ++r) {
            BVec lhs = h_ge_apply(r, BVec::e_k(k));
            BVec rhs(k);
            for (const auto& la : all_partitions(k)) {
                RatFrac hv = eval_at_multiset(homogeneous_in_powersum(r), contents_multiset(la), k);
                BVec w = w_vector(la, k);
                w *= UFrac::from_ratfrac(hv, Var::b);
                rhs += w;
            }
            if (lhs != rhs) return "r = " + std::to_string(r);
        }
        return std::string();
    });

    // independent checks run concurrently; report order stays fixed
    std::vector<std::future<CheckResult>> futs;
    futs.reserve(checks.size());
    for (auto& c : checks) futs.push_back(std::async(std::launch::async, c));
    std::vector<CheckResult> results;
    results.reserve(futs.size());
    for (auto& f : futs) results.push_back(f.get());
    return results;
}

} // namespace wgcalc
