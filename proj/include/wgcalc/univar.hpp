#pragma once

#include <vector>

#include "wgcalc/mpoly.hpp"

namespace wgcalc {

// Dense univariate polynomial over Q. The indeterminate is contextual (b for
// the Jucys-Murphy scalars, t for root analysis).
class UniPoly {
public:
    UniPoly() = default;
    /* implicit */ UniPoly(const Rational& c) {
        if (!wgcalc::is_zero(c)) c_ = {c};
    }
    /* implicit */ UniPoly(long c) : UniPoly(Rational(c)) {}
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly x(int power = 1) {
        std::vector<Rational> c(power + 1, Rational(0));
        c[power] = 1;
        return UniPoly(std::move(c));
    }

    static UniPoly from_mpoly(const MPoly& f, Var v) {
        std::vector<Rational> c(f.degree(v) + 1, Rational(0));
        for (const auto& [e, coef] : f.terms()) {
            for (int i = 0; i < kNumVars; ++i)
                if (i != static_cast<int>(v) && e[i] != 0)
                    throw Error("UniPoly::from_mpoly: polynomial not univariate in " + var_name(v));
            c[e[static_cast<int>(v)]] = coef;
        }
        return UniPoly(std::move(c));
    }

    MPoly to_mpoly(Var v) const {
        MPoly f;
        for (int i = 0; i <= degree(); ++i)
            if (!wgcalc::is_zero(c_[i])) f += MPoly::term(c_[i], {{v, i}});
        return f;
    }

    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    Rational coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rational(0);
    }
    Rational lead() const { return c_.empty() ? Rational(0) : c_.back(); }

    Rational operator()(const Rational& x0) const {
        Rational v = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x0 + *it;
        return v;
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return UniPoly(std::move(c));
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
        return UniPoly(std::move(c));
    }
    friend UniPoly operator-(const UniPoly& a) { return UniPoly(0) - a; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return UniPoly();
        std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return UniPoly(std::move(c));
    }
    friend UniPoly operator*(const UniPoly& a, const Rational& s) {
        std::vector<Rational> c = a.c_;
        for (auto& x : c) x *= s;
        return UniPoly(std::move(c));
    }
    UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
    UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

    bool operator==(const UniPoly& o) const { return c_ == o.c_; }
    bool operator!=(const UniPoly& o) const { return !(*this == o); }

    UniPoly derivative() const {
        if (c_.size() <= 1) return UniPoly();
        std::vector<Rational> d(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
        return UniPoly(std::move(d));
    }

    // Division with remainder over Q.
    friend std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& d) {
        if (d.is_zero()) throw Error("UniPoly: division by zero");
        std::vector<Rational> rem = a.c_;
        std::vector<Rational> quot(rem.size() > d.c_.size() ? rem.size() - d.c_.size() + 1 : 1,
                                   Rational(0));
        while (rem.size() >= d.c_.size() && !rem.empty()) {
            Rational q = rem.back() / d.c_.back();
            size_t off = rem.size() - d.c_.size();
            quot[off] = q;
            for (size_t i = 0; i < d.c_.size(); ++i) rem[off + i] -= q * d.c_[i];
            while (!rem.empty() && wgcalc::is_zero(rem.back())) rem.pop_back();
        }
        return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
    }

    friend UniPoly operator/(const UniPoly& a, const UniPoly& d) {
        auto [q, r] = divmod(a, d);
        if (!r.is_zero()) throw NotDivisible("UniPoly: non-exact division");
        return q;
    }

    // Monic gcd.
    friend UniPoly gcd(UniPoly a, UniPoly b) {
        while (!b.is_zero()) {
            auto [q, r] = divmod(a, b);
            (void)q;
            a = std::move(b);
            b = std::move(r);
        }
        if (!a.is_zero()) {
            Rational l = a.lead();
            for (auto& c : a.c_) c /= l;
        }
        return a;
    }

    UniPoly monic() const {
        if (is_zero()) return *this;
        return *this * (Rational(1) / lead());
    }

    // Coefficients scaled to integers with gcd 1 and positive leading term.
    UniPoly primitive() const {
        if (is_zero()) return *this;
        Integer num_gcd = 0, den_lcm = 1;
        for (const auto& c : c_) {
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
        }
        Rational content(num_gcd, den_lcm);
        content.canonicalize();
        if (sgn(lead()) < 0) content = -content;
        return *this * (Rational(1) / content);
    }

    std::string str(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string s;
        for (int i = degree(); i >= 0; --i) {
            if (wgcalc::is_zero(c_[i])) continue;
            std::string cs = to_string(c_[i]);
            if (!s.empty()) {
                if (cs[0] == '-') { s += " - "; cs = cs.substr(1); }
                else s += " + ";
            }
            if (i == 0) { s += cs; continue; }
            std::string mono = var + (i == 1 ? "" : "^" + std::to_string(i));
            if (cs == "1") s += mono;
            else if (cs == "-1") s += "-" + mono;
            else s += cs + "*" + mono;
        }
        return s;
    }

private:
    void trim() {
        while (!c_.empty() && wgcalc::is_zero(c_.back())) c_.pop_back();
    }
    std::vector<Rational> c_;
};

// Square-free factorisation P = prod Q_i^i (Yun); returns [(Q_i, i)] with
// the Q_i squarefree, pairwise coprime, non-constant.
inline std::vector<std::pair<UniPoly, int>> squarefree_factor(const UniPoly& p) {
    std::vector<std::pair<UniPoly, int>> out;
    if (p.degree() < 1) return out;
    UniPoly a = p.monic();
    UniPoly g = gcd(a, a.derivative());
    UniPoly w = a / g;
    int i = 1;
    while (w.degree() >= 1) {
        UniPoly y = gcd(w, g);
        UniPoly f = w / y;
        if (f.degree() >= 1) out.emplace_back(f.monic(), i);
        w = y;
        g = g / y;
        ++i;
    }
    return out;
}

// Reduced fraction of univariate polynomials, denominator monic. Used as the
// scalar field for the Jucys-Murphy layer (variable b).
class UFrac {
public:
    UFrac() : num_(), den_(1) {}
    /* implicit */ UFrac(const Rational& c) : num_(c), den_(1) {}
    /* implicit */ UFrac(long c) : num_(Rational(c)), den_(1) {}
    /* implicit */ UFrac(UniPoly n) : num_(std::move(n)), den_(1) {}
    UFrac(UniPoly n, UniPoly d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_.is_zero()) throw DenominatorVanishes("UFrac: zero denominator");
        reduce();
    }

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend UFrac operator+(const UFrac& a, const UFrac& b) {
        return UFrac(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend UFrac operator-(const UFrac& a, const UFrac& b) {
        return UFrac(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend UFrac operator*(const UFrac& a, const UFrac& b) {
        return UFrac(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend UFrac operator/(const UFrac& a, const UFrac& b) {
        if (b.is_zero()) throw DenominatorVanishes("UFrac: division by zero");
        return UFrac(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend UFrac operator-(const UFrac& a) { return UFrac(-a.num_, a.den_); }
    UFrac& operator+=(const UFrac& o) { return *this = *this + o; }
    UFrac& operator-=(const UFrac& o) { return *this = *this - o; }
    UFrac& operator*=(const UFrac& o) { return *this = *this * o; }
    UFrac& operator/=(const UFrac& o) { return *this = *this / o; }

    // Reduced with monic denominator, so equality is structural.
    bool operator==(const UFrac& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const UFrac& o) const { return !(*this == o); }

    Rational evaluate(const Rational& x0) const {
        Rational d = den_(x0);
        if (wgcalc::is_zero(d)) throw DenominatorVanishes("UFrac: pole at evaluation point");
        return num_(x0) / d;
    }

    RatFrac to_ratfrac(Var v) const { return RatFrac(num_.to_mpoly(v), den_.to_mpoly(v)); }

    static UFrac from_ratfrac(const RatFrac& f, Var v) {
        return UFrac(UniPoly::from_mpoly(f.num(), v), UniPoly::from_mpoly(f.den(), v));
    }

    std::string str(const std::string& var = "x") const {
        if (den_ == UniPoly(1)) return num_.str(var);
        return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
    }

private:
    void reduce() {
        if (num_.is_zero()) { den_ = UniPoly(1); return; }
        // constant numerator or denominator cannot share a polynomial factor
        if (den_.degree() >= 1 && num_.degree() >= 1) {
            UniPoly g = gcd(num_, den_);
            if (g.degree() >= 1) {
                num_ = num_ / g;
                den_ = den_ / g;
            }
        }
        Rational l = den_.lead();
        if (l == Rational(1)) return;
        num_ = num_ * (Rational(1) / l);
        den_ = den_ * (Rational(1) / l);
    }

    UniPoly num_, den_;
};

} // namespace wgcalc
