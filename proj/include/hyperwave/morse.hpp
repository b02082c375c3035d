#pragma once

#include <cmath>
#include <complex>

#include "hyperwave/errors.hpp"
#include "hyperwave/quat.hpp"

namespace hw {

// Generalized Laguerre polynomial L_n^c(x) by its series. The Gamma ratio
// Gamma(1+n+c)/Gamma(1+c+r) collapses to the product (c+r+1)...(c+n), so no
// special functions are needed. Exact up to rounding for the small orders
// used here.
inline double laguerre(int n, double c, double x) {
    if (n > 12) throw OrderTooLarge(n);
    double sum = 0.0;
    for (int r = 0; r <= n; ++r) {
        double coeff = 1.0;
        for (int m2 = r + 1; m2 <= n; ++m2) coeff *= (c + m2);
        double fact = 1.0;
        for (int m2 = 2; m2 <= n - r; ++m2) fact *= m2;
        double xr = 1.0;
        for (int m2 = 0; m2 < r; ++m2) xr *= -x / (m2 + 1);
        sum += coeff / fact * xr;
    }
    return sum;
}

// 1-D Morse parameters (n; beta, gamma). c = (2 beta + 1)/gamma - 1.
struct MorseParams1D {
    int n{0};
    double beta{9.0};
    double gamma{4.0};

    double c() const { return (2.0 * beta + 1.0) / gamma - 1.0; }
    bool valid() const { return beta > 0 && gamma > 0 && c() > -1.0 && n >= 0; }
    // A = sqrt(pi gamma 2^{c+1} Gamma(n+1)/Gamma(n+c+1)); unit analytic energy.
    double log_norm() const {
        const double cc = c();
        return 0.5 * (std::log(pi * gamma) + (cc + 1.0) * std::log(2.0) + std::lgamma(n + 1.0) -
                      std::lgamma(n + cc + 1.0));
    }
    // Peak of f^beta exp(-f^gamma): (2 pi f0)^gamma = beta/gamma.
    double peak_frequency() const {
        return std::pow(beta / gamma, 1.0 / gamma) / two_pi;
    }
};

enum class MorsePart { Analytic, Even, Odd };

// Analytic part: sqrt(2) A (2 pi f)^beta exp(-(2 pi f)^gamma) L_n^c(2 (2 pi f)^gamma)
// for f > 0, zero for f <= 0. Even/odd parts follow from the analytic one.
inline double morse1d_analytic_ft(const MorseParams1D& p, double f) {
    if (f <= 0.0) return 0.0;
    const double u = two_pi * f;
    const double ug = std::pow(u, p.gamma);
    const double logmag = 0.5 * std::log(2.0) + p.log_norm() + p.beta * std::log(u) - ug;
    return std::exp(logmag) * laguerre(p.n, p.c(), 2.0 * ug);
}

inline double morse1d_even_ft(const MorseParams1D& p, double f) {
    return 0.5 * morse1d_analytic_ft(p, std::abs(f));
}

// Odd component transform -j sgn(f) Psi_e(f); pure imaginary.
inline std::complex<double> morse1d_odd_ft(const MorseParams1D& p, double f) {
    const double s = (f > 0.0) - (f < 0.0);
    return {0.0, -s * morse1d_even_ft(p, f)};
}

inline std::complex<double> morse1d_ft(const MorseParams1D& p, MorsePart part, double f) {
    switch (part) {
        case MorsePart::Analytic: return {morse1d_analytic_ft(p, f), 0.0};
        case MorsePart::Even: return {morse1d_even_ft(p, f), 0.0};
        case MorsePart::Odd: return morse1d_odd_ft(p, f);
    }
    return {};
}

// Isotropic Morse parameters (n; l, m). c' = (2l+2)/m - 1. The normalization
// makes the 2-D frequency-domain energy equal one, which is what the
// admissibility convention here requires.
struct MorseParamsIso {
    int n{0};
    double l{9.0};
    double m{4.0};

    double cprime() const { return (2.0 * l + 2.0) / m - 1.0; }
    bool valid() const { return m >= 1.0 && l > 0.0 && l >= m / 2.0 - 1.0 && n >= 0; }
    double log_norm() const {
        const double cc = cprime();
        return 0.5 * (std::log(two_pi * m) + (cc + 1.0) * std::log(2.0) + std::lgamma(n + 1.0) -
                      std::lgamma(n + cc + 1.0));
    }
    double peak_frequency() const { return std::pow(l / m, 1.0 / m) / two_pi; }
};

// Radial transform; real-valued, QFT identical.
inline double morse_iso_ft(const MorseParamsIso& p, double f) {
    if (f <= 0.0) return 0.0;
    const double u = two_pi * f;
    const double um = std::pow(u, p.m);
    const double logmag = p.log_norm() + p.l * std::log(u) - um;
    return std::exp(logmag) * laguerre(p.n, p.cprime(), 2.0 * um);
}

// Kummer 1F1(a; 1; z) by series, truncated when the term falls below
// 1e-16 of the running sum.
inline double hyp1f1_b1(double a, double z) {
    double term = 1.0, sum = 1.0;
    for (int k2 = 1; k2 <= 10000; ++k2) {
        term *= (a + k2 - 1.0) * z / (static_cast<double>(k2) * k2);
        sum += term;
        if (std::abs(term) < 1e-16 * std::abs(sum)) return sum;
    }
    throw SeriesNonconvergent{};
}

// Spatial profile of the n=0, m=2 isotropic Morse wavelet:
// (A'/(2 pi)) (1/2) Gamma((l+2)/2) 1F1((l+2)/2; 1; -x^2/4).
inline double closed_form_iso_m2(double l, double x) {
    MorseParamsIso p{0, l, 2.0};
    const double A = std::exp(p.log_norm());
    return (A / two_pi) * 0.5 * std::tgamma((l + 2.0) / 2.0) * hyp1f1_b1((l + 2.0) / 2.0, -x * x / 4.0);
}

} // namespace hw
