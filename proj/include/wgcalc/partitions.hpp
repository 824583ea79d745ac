#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "wgcalc/mpoly.hpp"

namespace wgcalc {

// Integer partition: weakly decreasing positive parts; empty is allowed.
class Partition {
public:
    Partition() = default;
    /* implicit */ Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        std::sort(parts_.rbegin(), parts_.rend());
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (int p : parts_)
            if (p < 0) throw Error("Partition: negative part");
    }
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int part(int i) const { return i < length() ? parts_[i] : 0; } // 0-indexed

    Partition conjugate() const {
        if (parts_.empty()) return {};
        std::vector<int> c(parts_[0], 0);
        for (int p : parts_)
            for (int j = 0; j < p; ++j) c[j]++;
        return Partition(std::move(c));
    }

    int multiplicity(int value) const {
        return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
    }

    // n(lambda) = sum (i-1) lambda_i
    long n_stat() const {
        long s = 0;
        for (int i = 0; i < length(); ++i) s += static_cast<long>(i) * parts_[i];
        return s;
    }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return !(*this == o); }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

    std::string str() const {
        std::string s = "(";
        for (int i = 0; i < length(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }

private:
    std::vector<int> parts_;
};

// All partitions of k, in descending lexicographic order ((k) first).
inline std::vector<Partition> all_partitions(int k) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rem, int maxpart) -> void {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rem, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    rec(rec, k, k);
    return out;
}

// Partitions of k with at most max_len parts.
inline std::vector<Partition> partitions_max_length(int k, int max_len) {
    std::vector<Partition> out;
    for (const auto& p : all_partitions(k))
        if (p.length() <= max_len) out.push_back(p);
    return out;
}

// Dominance order: mu strictly below lambda (partial sums of mu all <=, not equal).
inline bool dominance_less(const Partition& mu, const Partition& lambda) {
    if (mu.size() != lambda.size() || mu == lambda) return false;
    long sm = 0, sl = 0;
    int len = std::max(mu.length(), lambda.length());
    for (int i = 0; i < len; ++i) {
        sm += mu.part(i);
        sl += lambda.part(i);
        if (sm > sl) return false;
    }
    return true;
}

inline bool dominance_leq(const Partition& mu, const Partition& lambda) {
    return mu == lambda || dominance_less(mu, lambda);
}

// z_lambda = prod_i i^{m_i} m_i!
inline Integer z_lambda(const Partition& lambda) {
    Integer z = 1;
    int i = 0;
    while (i < lambda.length()) {
        int j = i;
        while (j < lambda.length() && lambda.parts()[j] == lambda.parts()[i]) ++j;
        int mult = j - i;
        for (int s = 0; s < mult; ++s) z *= lambda.parts()[i];
        z *= factorial(mult);
        i = j;
    }
    return z;
}

// b-content of the box in row i, column j (1-indexed): (b+1)(j-1) - (i-1).
inline MPoly b_content(int i, int j) {
    if (i < 1 || j < 1) throw IndexOutOfRange("b_content: box indices start at 1");
    return (var_b() + MPoly(1)) * MPoly(j - 1) - MPoly(i - 1);
}

// Multiset of b-contents of the boxes of lambda (row-major).
inline std::vector<MPoly> contents_multiset(const Partition& lambda) {
    std::vector<MPoly> out;
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.parts()[i - 1]; ++j)
            out.push_back(b_content(i, j));
    return out;
}

inline int arm(const Partition& la, int i, int j) { return la.part(i - 1) - j; }
inline int leg(const Partition& la, int i, int j) { return la.conjugate().part(j - 1) - i; }

// hook_b(lambda) = prod (b+1)a + l + 1,  hook_b'(lambda) = prod (b+1)a + l + b + 1.
inline std::pair<MPoly, MPoly> hook_products(const Partition& lambda) {
    MPoly h(1), hp(1);
    Partition conj = lambda.conjugate();
    for (int i = 1; i <= lambda.length(); ++i) {
        for (int j = 1; j <= lambda.parts()[i - 1]; ++j) {
            int a = lambda.parts()[i - 1] - j;
            int l = conj.part(j - 1) - i;
            MPoly base = (var_b() + MPoly(1)) * MPoly(a) + MPoly(l + 1);
            h *= base;
            hp *= base + var_b();
        }
    }
    return {h, hp};
}

inline Integer hook0(const Partition& lambda) {
    Integer h = 1;
    Partition conj = lambda.conjugate();
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.parts()[i - 1]; ++j)
            h *= (lambda.parts()[i - 1] - j) + (conj.part(j - 1) - i) + 1;
    return h;
}

inline Integer dim_lambda(const Partition& lambda) {
    return factorial(lambda.size()) / hook0(lambda);
}

// Standard Young tableau, stored row-major; entries 1..n strictly increase
// along rows and down columns.
class Tableau {
public:
    Tableau() = default;
    explicit Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {}

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int size() const {
        int n = 0;
        for (const auto& r : rows_) n += static_cast<int>(r.size());
        return n;
    }
    Partition shape() const {
        std::vector<int> s;
        for (const auto& r : rows_) s.push_back(static_cast<int>(r.size()));
        return Partition(s);
    }

    // Row and column (1-indexed) of the box labelled v.
    std::pair<int, int> box_of(int v) const {
        for (int i = 0; i < static_cast<int>(rows_.size()); ++i)
            for (int j = 0; j < static_cast<int>(rows_[i].size()); ++j)
                if (rows_[i][j] == v) return {i + 1, j + 1};
        throw IndexOutOfRange("Tableau: no box labelled " + std::to_string(v));
    }

    MPoly content_of(int v) const {
        auto [i, j] = box_of(v);
        return b_content(i, j);
    }

    // Removes the box labelled n (always a removable corner in a SYT).
    Tableau removed_top() const {
        int n = size();
        auto [i, j] = box_of(n);
        auto rows = rows_;
        rows[i - 1].pop_back();
        if (rows[i - 1].empty()) rows.pop_back();
        (void)j;
        return Tableau(rows);
    }

    // True if this tableau restricted to 1..|s| equals s.
    bool contains(const Tableau& s) const {
        Tableau cur = *this;
        for (int n = size(); n > s.size(); --n) cur = cur.removed_top();
        return cur.rows() == s.rows();
    }

    bool operator==(const Tableau& o) const { return rows_ == o.rows_; }
    bool operator<(const Tableau& o) const { return rows_ < o.rows_; }

    std::string str() const {
        std::string s;
        for (const auto& r : rows_) {
            if (!s.empty()) s += " / ";
            for (size_t j = 0; j < r.size(); ++j) {
                if (j) s += " ";
                s += std::to_string(r[j]);
            }
        }
        return "[" + s + "]";
    }

private:
    std::vector<std::vector<int>> rows_;
};

// All standard Young tableaux of shape lambda, in a deterministic
// (lexicographic by row content) order.
inline std::vector<Tableau> standard_tableaux(const Partition& lambda) {
    std::vector<Tableau> out;
    int n = lambda.size();
    std::vector<std::vector<int>> rows(lambda.length());
    auto rec = [&](auto&& self, int next) -> void {
        if (next > n) {
            out.emplace_back(rows);
            return;
        }
        for (int i = 0; i < lambda.length(); ++i) {
            int filled = static_cast<int>(rows[i].size());
            if (filled >= lambda.parts()[i]) continue;
            if (i > 0 && static_cast<int>(rows[i - 1].size()) <= filled) continue;
            rows[i].push_back(next);
            self(self, next + 1);
            rows[i].pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

// All SYT with k boxes, grouped by the partition order of all_partitions(k).
inline std::vector<Tableau> standard_tableaux_all(int k) {
    std::vector<Tableau> out;
    for (const auto& la : all_partitions(k)) {
        auto tabs = standard_tableaux(la);
        out.insert(out.end(), tabs.begin(), tabs.end());
    }
    return out;
}

// Shapes obtained from lambda by adding one box.
inline std::vector<Partition> addable_shapes(const Partition& lambda) {
    std::vector<Partition> out;
    for (int i = 0; i <= lambda.length(); ++i) {
        int row = lambda.part(i);
        int above = (i == 0) ? -1 : lambda.part(i - 1);
        if (i > 0 && row == above) continue; // not addable here
        auto parts = lambda.parts();
        if (i < lambda.length()) parts[i]++;
        else parts.push_back(1);
        out.emplace_back(parts);
    }
    return out;
}

} // namespace wgcalc
