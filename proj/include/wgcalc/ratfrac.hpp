#pragma once

#include <map>
#include <optional>
#include <vector>

#include "wgcalc/mpoly.hpp"

namespace wgcalc {

namespace detail {

// Dense coefficient list of a univariate polynomial, used only for the cheap
// single-variable gcd reduction below.
inline std::vector<Rational> dense_coeffs(const MPoly& f, Var v) {
    std::vector<Rational> c(f.degree(v) + 1, Rational(0));
    for (const auto& [e, coef] : f.terms()) c[e[static_cast<int>(v)]] = coef;
    return c;
}

inline void dense_trim(std::vector<Rational>& a) {
    while (!a.empty() && is_zero(a.back())) a.pop_back();
}

inline std::vector<Rational> dense_rem(std::vector<Rational> a, const std::vector<Rational>& b) {
    while (a.size() >= b.size() && !a.empty()) {
        Rational q = a.back() / b.back();
        size_t off = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[off + i] -= q * b[i];
        dense_trim(a);
    }
    return a;
}

inline std::vector<Rational> dense_gcd(std::vector<Rational> a, std::vector<Rational> b) {
    dense_trim(a);
    dense_trim(b);
    while (!b.empty()) {
        auto r = dense_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rational lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

inline MPoly from_dense(const std::vector<Rational>& c, Var v) {
    MPoly f;
    for (size_t i = 0; i < c.size(); ++i)
        if (!is_zero(c[i])) f += MPoly::term(c[i], {{v, static_cast<int>(i)}});
    return f;
}

// The single variable a polynomial depends on, if there is exactly one.
inline std::optional<Var> sole_variable(const MPoly& f) {
    std::optional<Var> found;
    for (int i = 0; i < kNumVars; ++i) {
        Var v = static_cast<Var>(i);
        if (!f.depends_on(v)) continue;
        if (found) return std::nullopt;
        found = v;
    }
    return found;
}

} // namespace detail

// Fraction of multivariate polynomials. Fractions are not kept fully reduced:
// only the integer content and sign of the denominator are normalised, and
// equality is decided by cross-multiplication. The one exception is that
// fractions univariate in a single common variable are reduced by the (cheap)
// univariate gcd, which keeps chained arithmetic from swelling.
class RatFrac {
public:
    RatFrac() : num_(0), den_(1) {}
    /* implicit */ RatFrac(const Rational& c) : num_(c), den_(1) {}
    /* implicit */ RatFrac(long c) : num_(c), den_(1) {}
    /* implicit */ RatFrac(MPoly n) : num_(std::move(n)), den_(1) {}
    RatFrac(MPoly n, MPoly d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_.is_zero()) throw DenominatorVanishes("RatFrac: zero denominator");
        normalize();
    }

    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    bool is_polynomial() const { return den_.is_constant(); }
    MPoly as_polynomial() const {
        if (den_.is_constant()) {
            Rational d = den_.constant_value();
            MPoly r = num_;
            r *= Rational(1) / d;
            return r;
        }
        MPoly q = exact_div(num_, den_); // throws NotDivisible when not exact
        return q;
    }

    friend RatFrac operator+(const RatFrac& a, const RatFrac& b) {
        if (a.den_ == b.den_) return RatFrac(a.num_ + b.num_, a.den_);
        return RatFrac(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFrac operator-(const RatFrac& a, const RatFrac& b) {
        if (a.den_ == b.den_) return RatFrac(a.num_ - b.num_, a.den_);
        return RatFrac(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFrac operator*(const RatFrac& a, const RatFrac& b) {
        return RatFrac(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFrac operator/(const RatFrac& a, const RatFrac& b) {
        if (b.num_.is_zero()) throw DenominatorVanishes("RatFrac: division by zero");
        return RatFrac(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend RatFrac operator-(const RatFrac& a) { return RatFrac(-a.num_, a.den_); }
    RatFrac& operator+=(const RatFrac& o) { return *this = *this + o; }
    RatFrac& operator-=(const RatFrac& o) { return *this = *this - o; }
    RatFrac& operator*=(const RatFrac& o) { return *this = *this * o; }
    RatFrac& operator/=(const RatFrac& o) { return *this = *this / o; }

    RatFrac pow(int n) const {
        if (n < 0) return RatFrac(1) / pow(-n);
        RatFrac r(1), base(*this);
        while (n > 0) {
            if (n & 1) r *= base;
            n >>= 1;
            if (n) base *= base;
        }
        return r;
    }

    // Exact equality of the represented rational functions.
    friend bool frac_equal(const RatFrac& a, const RatFrac& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    bool operator==(const RatFrac& o) const { return frac_equal(*this, o); }
    bool operator!=(const RatFrac& o) const { return !(*this == o); }

    Rational evaluate(const std::map<Var, Rational>& vals) const {
        Rational d = den_.evaluate(vals);
        if (wgcalc::is_zero(d)) throw DenominatorVanishes("evaluate: denominator vanishes");
        return num_.evaluate(vals) / d;
    }

    bool depends_on(Var v) const { return num_.depends_on(v) || den_.depends_on(v); }

    std::string str() const {
        if (den_ == MPoly(1)) return num_.str();
        return "(" + num_.str() + ") / (" + den_.str() + ")";
    }

private:
    void normalize() {
        if (num_.is_zero()) { den_ = MPoly(1); return; }
        if (auto v = detail::sole_variable(den_)) {
            if (!num_.is_zero() && (num_.is_constant() || detail::sole_variable(num_) == v)) {
                auto g = detail::dense_gcd(detail::dense_coeffs(num_, *v),
                                           detail::dense_coeffs(den_, *v));
                if (g.size() > 1) {
                    MPoly gp = detail::from_dense(g, *v);
                    num_ = exact_div(num_, gp);
                    den_ = exact_div(den_, gp);
                }
            }
        }
        Rational c = den_.extract_content();
        num_ *= Rational(1) / c;
    }

    MPoly num_, den_;
};

// Simultaneous substitution of several variables into a polynomial. The
// result is assembled over the single common denominator prod d_i^(deg_i f),
// with precomputed power tables, so no intermediate fraction arithmetic runs.
inline RatFrac substitute(const MPoly& f, const std::map<Var, RatFrac>& bindings) {
    struct Bound {
        int var;
        int maxdeg;
        std::vector<MPoly> npow, dpow;
    };
    std::vector<Bound> bound;
    for (const auto& [v, val] : bindings) {
        if (!f.depends_on(v)) continue;
        Bound b;
        b.var = static_cast<int>(v);
        b.maxdeg = f.degree(v);
        b.npow.assign(1, MPoly(1));
        b.dpow.assign(1, MPoly(1));
        for (int k = 1; k <= b.maxdeg; ++k) {
            b.npow.push_back(b.npow.back() * val.num());
            b.dpow.push_back(b.dpow.back() * val.den());
        }
        bound.push_back(std::move(b));
    }
    if (bound.empty()) return RatFrac(f);
    MPoly num(0);
    for (const auto& [e, c] : f.terms()) {
        Exponents e0 = e;
        MPoly m(c);
        for (const auto& b : bound) {
            int k = e0[b.var];
            e0[b.var] = 0;
            m *= b.npow[k] * b.dpow[b.maxdeg - k];
        }
        MPoly residual;
        residual.add_term(e0, Rational(1));
        num += m * residual;
    }
    MPoly den(1);
    for (const auto& b : bound) den *= b.dpow[b.maxdeg];
    return RatFrac(num, den);
}

// The ring-homomorphism image of a fraction; substitute(f, {}) == f.
inline RatFrac substitute(const RatFrac& f, const std::map<Var, RatFrac>& bindings) {
    RatFrac dn = substitute(f.den(), bindings);
    if (dn.is_zero()) throw DenominatorVanishes("substitute: denominator vanishes");
    return substitute(f.num(), bindings) / dn;
}

} // namespace wgcalc
