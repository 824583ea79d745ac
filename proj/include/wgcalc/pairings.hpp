#pragma once

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "wgcalc/partitions.hpp"

namespace wgcalc {

// Perfect matching of {1..2k} in canonical form: smaller element first within
// each pair, pairs sorted by first element. The empty pair partition (k = 0)
// is a valid value.
class PairPartition {
public:
    PairPartition() = default;
    explicit PairPartition(std::vector<std::pair<int, int>> pairs) : pairs_(std::move(pairs)) {
        canonicalize();
        validate();
    }

    static PairPartition trivial(int k) {
        std::vector<std::pair<int, int>> ps;
        ps.reserve(k);
        for (int i = 1; i <= k; ++i) ps.emplace_back(2 * i - 1, 2 * i);
        return PairPartition(std::move(ps));
    }

    int k() const { return static_cast<int>(pairs_.size()); }
    int n_points() const { return 2 * k(); }
    bool empty() const { return pairs_.empty(); }
    const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }

    bool contains(int a, int b) const {
        if (a > b) std::swap(a, b);
        for (const auto& [x, y] : pairs_)
            if (x == a && y == b) return true;
        return false;
    }

    int partner(int v) const {
        for (const auto& [x, y] : pairs_) {
            if (x == v) return y;
            if (y == v) return x;
        }
        throw IndexOutOfRange("PairPartition: no such point " + std::to_string(v));
    }

    // Relabelling action: pair {a,b} maps to {sigma(a), sigma(b)}. The
    // transposition (a b) is the only permutation needed anywhere.
    PairPartition act(int a, int b) const {
        if (a < 1 || b < 1 || a > n_points() || b > n_points() || a == b)
            throw IndexOutOfRange("act: transposition out of range");
        auto swp = [&](int v) { return v == a ? b : (v == b ? a : v); };
        std::vector<std::pair<int, int>> ps;
        ps.reserve(pairs_.size());
        for (const auto& [x, y] : pairs_) ps.emplace_back(swp(x), swp(y));
        return PairPartition(std::move(ps));
    }

    // Removes the pair {2k-1, 2k}; only valid when it is present.
    PairPartition remove_top() const {
        if (!contains(n_points() - 1, n_points()))
            throw Error("remove_top: top pair not present");
        std::vector<std::pair<int, int>> ps;
        for (const auto& pr : pairs_)
            if (pr.first != n_points() - 1) ps.push_back(pr);
        return PairPartition(std::move(ps));
    }

    // Embeds into P_j (j >= k) by appending trivial top pairs.
    PairPartition embed(int j) const {
        if (j < k()) throw IndexOutOfRange("embed: target level too small");
        auto ps = pairs_;
        for (int i = k() + 1; i <= j; ++i) ps.emplace_back(2 * i - 1, 2 * i);
        return PairPartition(std::move(ps));
    }

    // The graph Gamma(m) with edges of e_k and of m has even cycles; the
    // coset-type records half their lengths.
    Partition coset_type() const {
        int n = n_points();
        std::vector<int> epar(n + 1), mpar(n + 1, 0);
        for (int v = 1; v <= n; ++v) epar[v] = (v % 2) ? v + 1 : v - 1;
        for (const auto& [x, y] : pairs_) { mpar[x] = y; mpar[y] = x; }
        std::vector<bool> seen(n + 1, false);
        std::vector<int> halves;
        for (int v = 1; v <= n; ++v) {
            if (seen[v]) continue;
            int len = 0, cur = v;
            bool use_e = true;
            do {
                seen[cur] = true;
                ++len;
                cur = use_e ? epar[cur] : mpar[cur];
                use_e = !use_e;
            } while (cur != v);
            halves.push_back(len / 2);
        }
        return Partition(halves);
    }

    // Charge assignment on Gamma(m): the largest label of each cycle gets +,
    // adjacent vertices get opposite charges. charges[v] is +1 or -1.
    std::vector<int> charges() const {
        if (empty()) throw EmptyPairPartition("charges: empty pair partition");
        int n = n_points();
        std::vector<int> epar(n + 1), mpar(n + 1, 0), q(n + 1, 0);
        for (int v = 1; v <= n; ++v) epar[v] = (v % 2) ? v + 1 : v - 1;
        for (const auto& [x, y] : pairs_) { mpar[x] = y; mpar[y] = x; }
        std::vector<bool> seen(n + 1, false);
        for (int v = 1; v <= n; ++v) {
            if (seen[v]) continue;
            std::vector<int> cyc;
            int cur = v;
            bool use_e = true;
            do {
                seen[cur] = true;
                cyc.push_back(cur);
                cur = use_e ? epar[cur] : mpar[cur];
                use_e = !use_e;
            } while (cur != v);
            int mx = static_cast<int>(std::max_element(cyc.begin(), cyc.end()) - cyc.begin());
            for (size_t s = 0; s < cyc.size(); ++s)
                q[cyc[(mx + s) % cyc.size()]] = (s % 2 == 0) ? +1 : -1;
        }
        return q;
    }

    bool operator==(const PairPartition& o) const { return pairs_ == o.pairs_; }
    bool operator!=(const PairPartition& o) const { return !(*this == o); }
    bool operator<(const PairPartition& o) const { return pairs_ < o.pairs_; }

    // Textual form "(1 4|2 3|5 6)", whitespace-insensitive; "(~)" or "()" is empty.
    std::string str() const {
        if (empty()) return "(~)";
        std::string s = "(";
        for (size_t i = 0; i < pairs_.size(); ++i) {
            if (i) s += "|";
            s += std::to_string(pairs_[i].first) + " " + std::to_string(pairs_[i].second);
        }
        return s + ")";
    }

    static PairPartition parse(const std::string& text) {
        std::string body;
        for (char c : text)
            if (c != '(' && c != ')') body += c;
        bool blank = true;
        for (char c : body)
            if (!isspace(static_cast<unsigned char>(c)) && c != '~') blank = false;
        if (blank) return PairPartition();
        std::vector<std::pair<int, int>> ps;
        std::stringstream blocks(body);
        std::string blk;
        while (std::getline(blocks, blk, '|')) {
            std::vector<int> vals;
            std::string cur;
            auto flush = [&] {
                if (!cur.empty()) vals.push_back(std::stoi(cur));
                cur.clear();
            };
            for (char c : blk) {
                if (isdigit(static_cast<unsigned char>(c))) cur += c;
                else if (isspace(static_cast<unsigned char>(c)) || c == ',') flush();
                else throw ParseError("bad pair partition: " + text);
            }
            flush();
            if (vals.size() == 1) { // compact form like "14" meaning {1,4}
                std::string d = std::to_string(vals[0]);
                if (d.size() != 2) throw ParseError("ambiguous pair block: " + blk);
                vals = {d[0] - '0', d[1] - '0'};
            }
            if (vals.size() != 2) throw ParseError("pair block needs two points: " + blk);
            ps.emplace_back(vals[0], vals[1]);
        }
        return PairPartition(std::move(ps));
    }

private:
    void canonicalize() {
        for (auto& [x, y] : pairs_)
            if (x > y) std::swap(x, y);
        std::sort(pairs_.begin(), pairs_.end());
    }
    void validate() const {
        int n = n_points();
        std::vector<bool> seen(n + 1, false);
        for (const auto& [x, y] : pairs_) {
            if (x < 1 || y < 1 || x > n || y > n || x == y)
                throw Error("PairPartition: labels must cover {1..2k}: " + str());
            if (seen[x] || seen[y]) throw Error("PairPartition: repeated label: " + str());
            seen[x] = seen[y] = true;
        }
    }

    std::vector<std::pair<int, int>> pairs_;
};

// All pair partitions of {1..2k} in lexicographic order of the canonical
// pair list; |P_k| = (2k-1)!!.
inline std::vector<PairPartition> all_pair_partitions(int k) {
    std::vector<PairPartition> out;
    std::vector<std::pair<int, int>> cur;
    std::vector<bool> used(2 * k + 1, false);
    auto rec = [&](auto&& self) -> void {
        int first = 0;
        for (int v = 1; v <= 2 * k; ++v)
            if (!used[v]) { first = v; break; }
        if (first == 0) {
            out.emplace_back(cur);
            return;
        }
        used[first] = true;
        for (int w = first + 1; w <= 2 * k; ++w) {
            if (used[w]) continue;
            used[w] = true;
            cur.emplace_back(first, w);
            self(self);
            cur.pop_back();
            used[w] = false;
        }
        used[first] = false;
    };
    rec(rec);
    std::sort(out.begin(), out.end());
    return out;
}

// The weight omega^(b)(m, n) in {0, 1, b}: zero unless some transposition
// carries m to n (sizes equal); otherwise compare the charges, in Gamma(m),
// of the two swapped points. Equal charges give 1, opposite give b.
inline MPoly omega_b(const PairPartition& m, const PairPartition& n) {
    if (m.k() != n.k()) return MPoly(0);
    if (m.empty()) return MPoly(1);
    if (m == n) return var_b(); // any pair {i,j} in m is an edge of Gamma(m)
    int a = 0;
    for (int v = 1; v <= m.n_points(); ++v)
        if (m.partner(v) != n.partner(v)) { a = v; break; }
    // Any transposition carrying m to n must move a or a's partner in m.
    auto q = m.charges();
    for (int moved : {a, m.partner(a)}) {
        for (int c = 1; c <= m.n_points(); ++c) {
            if (c == moved) continue;
            if (m.act(moved, c) == n)
                return q[moved] == q[c] ? MPoly(1) : var_b();
        }
    }
    return MPoly(0);
}

// Fast path when the transposition (i j) with (i j).m = n is already known;
// returns 1 or b.
inline MPoly omega_b_move(const PairPartition& m, int i, int j) {
    auto q = m.charges();
    return q[i] == q[j] ? MPoly(1) : var_b();
}

// Transitivity of <tau_1, ..., tau_r, iota> on {1..2k}, by union-find seeded
// with the pairs of iota = (1 2)(3 4)...(2k-1 2k).
inline bool is_connected_factorisation(const std::vector<std::pair<int, int>>& taus, int k) {
    int n = 2 * k;
    std::vector<int> root(n + 1);
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](int v) {
        while (root[v] != v) v = root[v] = root[root[v]];
        return v;
    };
    auto unite = [&](int a, int b) { root[find(a)] = find(b); };
    for (int i = 1; i <= k; ++i) unite(2 * i - 1, 2 * i);
    for (const auto& [a, b] : taus) {
        if (a < 1 || b < 1 || a > n || b > n)
            throw IndexOutOfRange("is_connected_factorisation: transposition out of range");
        unite(a, b);
    }
    int classes = 0;
    for (int v = 1; v <= n; ++v)
        if (find(v) == v) ++classes;
    return classes == 1;
}

// Index-function predicates from the convolution formula.
inline bool admissible(const PairPartition& m, const std::vector<int>& idx) {
    for (const auto& [a, b] : m.pairs())
        if (idx.at(a - 1) != idx.at(b - 1)) return false;
    return true;
}

inline bool strongly_admissible(const PairPartition& m, const std::vector<int>& idx) {
    if (!admissible(m, idx)) return false;
    int n = m.n_points();
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            if (idx.at(a - 1) == idx.at(b - 1) && !m.contains(a, b)) return false;
    return true;
}

// A canonical pair partition with the given coset-type.
inline PairPartition pairing_of_coset_type(const Partition& lambda) {
    std::vector<std::pair<int, int>> ps;
    int offset = 0;
    for (int part : lambda.parts()) {
        if (part == 1) {
            ps.emplace_back(offset + 1, offset + 2);
        } else {
            for (int j = 1; j < part; ++j) ps.emplace_back(offset + 2 * j, offset + 2 * j + 1);
            ps.emplace_back(offset + 1, offset + 2 * part);
        }
        offset += 2 * part;
    }
    return PairPartition(std::move(ps));
}

} // namespace wgcalc
