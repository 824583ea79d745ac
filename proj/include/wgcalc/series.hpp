#pragma once

#include <vector>

#include "wgcalc/ratfrac.hpp"

namespace wgcalc {

// Truncated expansion at N = infinity: coefficients of N^0, N^-1, ..., N^-R.
// Coefficients beyond the stored order are unknown, not zero; arithmetic
// never claims precision beyond the min of the operand orders.
struct TruncSeries {
    Var grading = Var::N;
    std::vector<RatFrac> coeff; // index r holds the coefficient of N^-r

    int order() const { return static_cast<int>(coeff.size()) - 1; }

    RatFrac at(int r) const {
        if (r < 0 || r > order()) throw IndexOutOfRange("TruncSeries: order exceeded");
        return coeff[r];
    }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        TruncSeries r;
        r.coeff.resize(std::min(a.coeff.size(), b.coeff.size()));
        for (size_t i = 0; i < r.coeff.size(); ++i) r.coeff[i] = a.coeff[i] + b.coeff[i];
        return r;
    }

    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        TruncSeries r;
        int R = std::min(a.order(), b.order());
        r.coeff.assign(R + 1, RatFrac(Rational(0)));
        for (int i = 0; i <= R; ++i)
            for (int j = 0; i + j <= R; ++j)
                r.coeff[i + j] += a.coeff[i] * b.coeff[j];
        return r;
    }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        if (a.coeff.size() != b.coeff.size()) return false;
        for (size_t i = 0; i < a.coeff.size(); ++i)
            if (!frac_equal(a.coeff[i], b.coeff[i])) return false;
        return true;
    }
};

// Expands a rational function bounded at N = infinity as a series in 1/N by
// exact long division. Requires deg_N(num) <= deg_N(den); the remaining
// variables pass through into the coefficients. The division runs over
// polynomials with the common denominator B0^(r+1), B0 the leading
// denominator coefficient, so no fraction arithmetic is involved.
inline TruncSeries series_at_infinity(const RatFrac& f, int R, Var v = Var::N) {
    int dn = f.num().degree(v);
    int dd = f.den().degree(v);
    if (!f.num().is_zero() && dn > dd)
        throw PoleAtInfinity("series_at_infinity: pole at infinity");

    // In u = 1/v: f = (sum_d num_d u^(D-d)) / (sum_d den_d u^(D-d)), D = dd.
    auto coeff_at = [&](const MPoly& p, int r) {
        return (r < 0 || r > dd) ? MPoly(0) : p.coefficient_of(v, dd - r);
    };
    MPoly B0 = coeff_at(f.den(), 0); // nonzero by construction
    std::vector<MPoly> b0_pow{MPoly(1)};
    for (int r = 1; r <= R; ++r) b0_pow.push_back(b0_pow.back() * B0);

    // c_r = y_r / B0^(r+1), y_r = A_r B0^r - sum_{s<r} y_s B_{r-s} B0^(r-1-s)
    std::vector<MPoly> y;
    TruncSeries s;
    s.grading = v;
    s.coeff.reserve(R + 1);
    for (int r = 0; r <= R; ++r) {
        MPoly acc = coeff_at(f.num(), r) * b0_pow[r];
        for (int k = 0; k < r; ++k) {
            MPoly br = coeff_at(f.den(), r - k);
            if (br.is_zero() || y[k].is_zero()) continue;
            acc -= y[k] * br * b0_pow[r - 1 - k];
        }
        y.push_back(acc);
        s.coeff.emplace_back(y.back(), b0_pow[r] * B0);
    }
    return s;
}

namespace detail {

inline MPoly truncate_grade(const MPoly& f, int bound, std::initializer_list<Var> vars) {
    MPoly r;
    for (const auto& [e, c] : f.terms()) {
        int g = 0;
        for (Var v : vars) g += e[static_cast<int>(v)];
        if (g <= bound) r.add_term(e, c);
    }
    return r;
}

inline int min_grade(const MPoly& f, std::initializer_list<Var> vars) {
    int g = -1;
    for (const auto& [e, c] : f.terms()) {
        int s = 0;
        for (Var v : vars) s += e[static_cast<int>(v)];
        if (g < 0 || s < g) g = s;
    }
    return g;
}

} // namespace detail

// exp of a series with zero constant term in the (hbar, z) grading,
// truncated at the given total degree in (hbar, z).
inline MPoly graded_series_exp(const MPoly& s, int bound) {
    if (!s.is_zero() && detail::min_grade(s, {Var::hbar, Var::z}) < 1)
        throw NonzeroConstantTerm("graded_series_exp: nonzero constant term in grading");
    MPoly result(1), power(1);
    Rational mfact(1);
    for (int m = 1; m <= bound; ++m) {
        power = detail::truncate_grade(power * s, bound, {Var::hbar, Var::z});
        if (power.is_zero()) break;
        mfact *= m;
        result += power * (Rational(1) / mfact);
    }
    return result;
}

// Inverse of graded_series_exp on series with constant term 1.
inline MPoly graded_series_log(const MPoly& s, int bound) {
    MPoly u = s - MPoly(1);
    if (!u.is_zero() && detail::min_grade(u, {Var::hbar, Var::z}) < 1)
        throw NonzeroConstantTerm("graded_series_log: constant term is not 1");
    MPoly result, power(1);
    for (int m = 1; m <= bound; ++m) {
        power = detail::truncate_grade(power * u, bound, {Var::hbar, Var::z});
        if (power.is_zero()) break;
        Rational c(((m % 2) ? 1 : -1), m);
        c.canonicalize();
        result += power * c;
    }
    return result;
}

} // namespace wgcalc
