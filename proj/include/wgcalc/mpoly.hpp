#pragma once

#include <algorithm>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "wgcalc/rational.hpp"

namespace wgcalc {

#ifndef WGCALC_MAX_POWER_SUM
#define WGCALC_MAX_POWER_SUM 12
#endif

// Fixed, globally ordered variable universe. Exponent vectors are comparable
// across all modules because every polynomial lives in the same ring.
enum class Var : int {
    b = 0,
    t = 1,
    N = 2,
    M = 3,
    hbar = 4,
    z = 5,
    p1 = 6,
    // p2 .. p_P follow contiguously
};

inline constexpr int kMaxPowerSum = WGCALC_MAX_POWER_SUM;
inline constexpr int kNumVars = 6 + kMaxPowerSum;

inline Var power_sum_var(int i) {
    if (i < 1 || i > kMaxPowerSum)
        throw IndexOutOfRange("power-sum index out of range: " + std::to_string(i));
    return static_cast<Var>(static_cast<int>(Var::p1) + i - 1);
}

inline std::string var_name(Var v) {
    switch (v) {
        case Var::b: return "b";
        case Var::t: return "t";
        case Var::N: return "N";
        case Var::M: return "M";
        case Var::hbar: return "hbar";
        case Var::z: return "z";
        default: {
            int i = static_cast<int>(v) - static_cast<int>(Var::p1) + 1;
            return "p" + std::to_string(i);
        }
    }
}

inline Var var_from_name(const std::string& s) {
    if (s == "b") return Var::b;
    if (s == "t") return Var::t;
    if (s == "N") return Var::N;
    if (s == "M") return Var::M;
    if (s == "hbar") return Var::hbar;
    if (s == "z") return Var::z;
    if (s.size() >= 2 && s[0] == 'p')
        return power_sum_var(std::stoi(s.substr(1)));
    throw ParseError("unknown variable: " + s);
}

using Exponents = std::vector<int>; // always length kNumVars

// Sparse multivariate polynomial over Q in the fixed universe. No zero
// coefficients are stored; terms are kept in lexicographic exponent order.
class MPoly {
public:
    using TermMap = std::map<Exponents, Rational>;

    MPoly() = default;
    /* implicit */ MPoly(const Rational& c) {
        if (!wgcalc::is_zero(c)) terms_[Exponents(kNumVars, 0)] = c;
    }
    /* implicit */ MPoly(long c) : MPoly(Rational(c)) {}

    static MPoly variable(Var v, int exp = 1) {
        MPoly f;
        if (exp == 0) return MPoly(1);
        Exponents e(kNumVars, 0);
        e[static_cast<int>(v)] = exp;
        f.terms_[e] = 1;
        return f;
    }

    static MPoly term(const Rational& c, std::initializer_list<std::pair<Var, int>> exps) {
        if (wgcalc::is_zero(c)) return MPoly();
        Exponents e(kNumVars, 0);
        for (auto [v, k] : exps) e[static_cast<int>(v)] += k;
        MPoly f;
        f.terms_[e] = c;
        return f;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        if (terms_.empty()) return true;
        return terms_.size() == 1 && terms_.begin()->first == Exponents(kNumVars, 0);
    }

    Rational constant_value() const {
        if (terms_.empty()) return Rational(0);
        auto it = terms_.find(Exponents(kNumVars, 0));
        return it == terms_.end() ? Rational(0) : it->second;
    }

    bool depends_on(Var v) const {
        for (const auto& [e, c] : terms_)
            if (e[static_cast<int>(v)] != 0) return true;
        return false;
    }

    int degree(Var v) const {
        int d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<int>(v)]);
        return d;
    }

    // Total degree over a subset of variables.
    int total_degree(std::initializer_list<Var> vars) const {
        int d = 0;
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (Var v : vars) s += e[static_cast<int>(v)];
            d = std::max(d, s);
        }
        return d;
    }

    void add_term(const Exponents& e, const Rational& c) {
        if (wgcalc::is_zero(c)) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (wgcalc::is_zero(it->second)) terms_.erase(it);
        }
    }

    MPoly& operator+=(const MPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    MPoly& operator-=(const MPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator-(const MPoly& a) {
        MPoly r;
        for (const auto& [e, c] : a.terms_) r.terms_[e] = -c;
        return r;
    }

    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        MPoly r;
        Exponents e(kNumVars);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                for (int i = 0; i < kNumVars; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

    MPoly& operator*=(const Rational& c) {
        if (wgcalc::is_zero(c)) { terms_.clear(); return *this; }
        for (auto& [e, coef] : terms_) coef *= c;
        return *this;
    }
    friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }
    friend MPoly operator*(const Rational& c, MPoly a) { return a *= c; }
    friend MPoly operator*(MPoly a, long c) { return a *= Rational(c); }
    friend MPoly operator*(long c, MPoly a) { return a *= Rational(c); }
    friend MPoly operator+(MPoly a, long c) { return a += MPoly(c); }
    friend MPoly operator+(long c, MPoly a) { return a += MPoly(c); }
    friend MPoly operator-(MPoly a, long c) { return a -= MPoly(c); }
    friend MPoly operator-(long c, const MPoly& a) { return MPoly(c) - a; }

    MPoly pow(int n) const {
        if (n < 0) throw Error("MPoly::pow: negative exponent");
        MPoly r(1), base(*this);
        while (n > 0) {
            if (n & 1) r *= base;
            base = (n >>= 1) ? base * base : base;
        }
        return r;
    }

    bool operator==(const MPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const MPoly& o) const { return !(*this == o); }
    bool operator<(const MPoly& o) const { return terms_ < o.terms_; }

    // Leading term per lexicographic order on exponent vectors.
    const std::pair<const Exponents, Rational>& leading() const {
        if (terms_.empty()) throw Error("leading term of zero polynomial");
        return *terms_.rbegin();
    }

    // Exact division; throws NotDivisible if the quotient is not polynomial.
    friend MPoly exact_div(const MPoly& a, const MPoly& d) {
        if (d.is_zero()) throw Error("exact_div: division by zero polynomial");
        MPoly rem = a, quot;
        const auto& [de, dc] = d.leading();
        Exponents q(kNumVars);
        while (!rem.is_zero()) {
            const auto& [re, rc] = rem.leading();
            for (int i = 0; i < kNumVars; ++i) {
                q[i] = re[i] - de[i];
                if (q[i] < 0) throw NotDivisible("exact_div: non-divisible leading term");
            }
            Rational qc = rc / dc;
            MPoly qt;
            qt.terms_[q] = qc;
            quot += qt;
            rem -= qt * d;
        }
        return quot;
    }

    // Divides out the rational content, leaving integer coefficients with
    // gcd 1 and positive lexicographically-leading coefficient. Returns the
    // removed content (so *this == content * result holds).
    Rational extract_content() {
        if (terms_.empty()) return Rational(0);
        Integer num_gcd = 0, den_lcm = 1;
        for (const auto& [e, c] : terms_) {
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
        }
        Rational content(num_gcd, den_lcm);
        content.canonicalize();
        if (sgn(terms_.rbegin()->second) < 0) content = -content;
        for (auto& [e, c] : terms_) c /= content;
        return content;
    }

    // Substitutes a single variable by a polynomial.
    MPoly subst(Var v, const MPoly& value) const {
        const int vi = static_cast<int>(v);
        MPoly r;
        for (const auto& [e, c] : terms_) {
            int k = e[vi];
            Exponents e0 = e;
            e0[vi] = 0;
            MPoly mono;
            mono.terms_[e0] = c;
            if (k == 0) r += mono;
            else r += mono * value.pow(k);
        }
        return r;
    }

    // Full evaluation: every variable the polynomial depends on must be bound.
    Rational evaluate(const std::map<Var, Rational>& vals) const {
        Rational total = 0;
        for (const auto& [e, c] : terms_) {
            Rational t = c;
            for (int i = 0; i < kNumVars; ++i) {
                if (e[i] == 0) continue;
                auto it = vals.find(static_cast<Var>(i));
                if (it == vals.end())
                    throw Error("evaluate: unbound variable " + var_name(static_cast<Var>(i)));
                Rational p = 1;
                for (int k = 0; k < e[i]; ++k) p *= it->second;
                t *= p;
            }
            total += t;
        }
        return total;
    }

    // Coefficient of v^k, as a polynomial in the remaining variables.
    MPoly coefficient_of(Var v, int k) const {
        const int vi = static_cast<int>(v);
        MPoly r;
        for (const auto& [e, c] : terms_) {
            if (e[vi] != k) continue;
            Exponents e0 = e;
            e0[vi] = 0;
            r.add_term(e0, c);
        }
        return r;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            std::string mono;
            for (int i = 0; i < kNumVars; ++i) {
                if (e[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += var_name(static_cast<Var>(i));
                if (e[i] != 1) mono += "^" + std::to_string(e[i]);
            }
            std::string cs = wgcalc::to_string(c);
            if (!out.empty()) {
                if (cs[0] == '-') { out += " - "; cs = cs.substr(1); }
                else out += " + ";
            }
            if (mono.empty()) out += cs;
            else if (cs == "1") out += mono;
            else if (cs == "-1") out += "-" + mono;
            else out += cs + "*" + mono;
        }
        return out;
    }

private:
    TermMap terms_;
};

inline MPoly var_b() { return MPoly::variable(Var::b); }
inline MPoly var_t() { return MPoly::variable(Var::t); }
inline MPoly var_N() { return MPoly::variable(Var::N); }
inline MPoly var_M() { return MPoly::variable(Var::M); }
inline MPoly var_hbar() { return MPoly::variable(Var::hbar); }
inline MPoly var_z() { return MPoly::variable(Var::z); }
inline MPoly var_p(int i) { return MPoly::variable(power_sum_var(i)); }

} // namespace wgcalc
