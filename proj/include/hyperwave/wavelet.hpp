#pragma once

#include <complex>
#include <functional>

#include "hyperwave/fft.hpp"
#include "hyperwave/field.hpp"
#include "hyperwave/morse.hpp"
#include "hyperwave/spectral.hpp"

namespace hw {

enum class WaveletFamily {
    SeparableHypercomplexing,
    IsotropicHypercomplexing,
    IsotropicMonogenic,
    DirectionalMonogenic,
    HypercomplexDirectional,
};

// Analysis wavelet: a family plus its Morse parameters. Monogenic families
// carry a sign (+1 monogenic, -1 anti-monogenic).
struct WaveletKind {
    WaveletFamily family{WaveletFamily::IsotropicMonogenic};
    MorseParams1D p1{};   // separable / directional families
    int n2{0};            // second order index of the separable family
    MorseParamsIso iso{}; // isotropic families
    int sign{+1};

    static WaveletKind separable_hypercomplexing(int n1, int n2, double beta, double gamma) {
        WaveletKind k;
        k.family = WaveletFamily::SeparableHypercomplexing;
        k.p1 = {n1, beta, gamma};
        k.n2 = n2;
        return k;
    }
    static WaveletKind isotropic_hypercomplexing(int n, double l, double m) {
        WaveletKind k;
        k.family = WaveletFamily::IsotropicHypercomplexing;
        k.iso = {n, l, m};
        return k;
    }
    static WaveletKind isotropic_monogenic(int n, double l, double m, int sign = +1) {
        WaveletKind k;
        k.family = WaveletFamily::IsotropicMonogenic;
        k.iso = {n, l, m};
        k.sign = sign;
        return k;
    }
    static WaveletKind directional_monogenic(int n, double beta, double gamma, int sign = +1) {
        WaveletKind k;
        k.family = WaveletFamily::DirectionalMonogenic;
        k.p1 = {n, beta, gamma};
        k.sign = sign;
        return k;
    }
    static WaveletKind hypercomplex_directional(int n, double beta, double gamma) {
        WaveletKind k;
        k.family = WaveletFamily::HypercomplexDirectional;
        k.p1 = {n, beta, gamma};
        return k;
    }

    bool hypercomplexing() const {
        return family == WaveletFamily::SeparableHypercomplexing ||
               family == WaveletFamily::IsotropicHypercomplexing;
    }
    bool monogenic() const {
        return family == WaveletFamily::IsotropicMonogenic ||
               family == WaveletFamily::DirectionalMonogenic;
    }
    bool isotropic_envelope() const {
        return family == WaveletFamily::IsotropicHypercomplexing ||
               family == WaveletFamily::IsotropicMonogenic;
    }
    // Separable admissibility needs index symmetry; n1 != n2 breaks it.
    bool symmetric_separable() const {
        return family != WaveletFamily::SeparableHypercomplexing || p1.n == n2;
    }

    // Modulus maximum of the defining frequency profile. For the directional
    // families the passband center sits at sqrt(2) f0 on the f1 axis.
    double peak_frequency() const {
        switch (family) {
            case WaveletFamily::SeparableHypercomplexing: return p1.peak_frequency();
            case WaveletFamily::IsotropicHypercomplexing:
            case WaveletFamily::IsotropicMonogenic: return iso.peak_frequency();
            case WaveletFamily::DirectionalMonogenic:
            case WaveletFamily::HypercomplexDirectional:
                return std::sqrt(2.0) * p1.peak_frequency();
        }
        return 0.0;
    }
};

// xi = [a, theta, b]: scale (samples), rotation (radians), position (samples).
struct LocalityIndex {
    double a{1.0};
    double theta{0.0};
    double b1{0.0}, b2{0.0};
};

// Rotation handled through its (cos, sin) pair so that a half turn is an
// exact negation.
struct Rotation {
    double c{1.0}, s{0.0};
    static Rotation from_angle(double theta) { return {std::cos(theta), std::sin(theta)}; }
    Rotation half_turn() const { return {-c, -s}; }
    // r_{-theta} f
    void rotate_back(double f1, double f2, double& u1, double& u2) const {
        u1 = c * f1 + s * f2;
        u2 = -s * f1 + c * f2;
    }
};

// The four component transforms (each complex in j) of a quaternionic wavelet.
struct ComponentFT {
    std::complex<double> r{}, i{}, j{}, k{};

    ComponentFT& operator*=(const std::complex<double>& z) {
        r *= z; i *= z; j *= z; k *= z;
        return *this;
    }
};

// Collapse the component transforms into the quaternion-valued transform
// R + i I + j J + k K with each letter a complex number in j.
inline Quaternion quaternion_ft(const ComponentFT& c) {
    return {c.r.real() - c.j.imag(), c.i.real() - c.k.imag(),
            c.r.imag() + c.j.real(), c.i.imag() + c.k.real()};
}

namespace detail {

inline double val_sgn(double v) { return static_cast<double>((v > 0.0) - (v < 0.0)); }

} // namespace detail

// Mother wavelet component transforms at continuous frequency (u1, u2).
inline ComponentFT wavelet_mother_ft(const WaveletKind& kind, double u1, double u2) {
    using detail::val_sgn;
    const std::complex<double> mj{0.0, -1.0};
    ComponentFT out;
    switch (kind.family) {
        case WaveletFamily::SeparableHypercomplexing: {
            MorseParams1D p2 = kind.p1;
            p2.n = kind.n2;
            const double ee = morse1d_even_ft(kind.p1, u1) * morse1d_even_ft(p2, u2);
            out.r = ee;
            out.i = mj * val_sgn(u1) * ee;
            out.j = mj * val_sgn(u2) * ee;
            out.k = val_sgn(u1) * val_sgn(u2) * ee; // k plane is -psi^(oo)
            break;
        }
        case WaveletFamily::IsotropicHypercomplexing: {
            const double ee = morse_iso_ft(kind.iso, std::hypot(u1, u2));
            out.r = ee;
            out.i = mj * val_sgn(u1) * ee;
            out.j = mj * val_sgn(u2) * ee;
            out.k = val_sgn(u1) * val_sgn(u2) * ee;
            break;
        }
        case WaveletFamily::IsotropicMonogenic: {
            const double rho = std::hypot(u1, u2);
            const double e = morse_iso_ft(kind.iso, rho);
            out.r = e;
            if (rho > 0.0) {
                out.i = static_cast<double>(kind.sign) * (mj * (u1 / rho) * e);
                out.j = static_cast<double>(kind.sign) * (mj * (u2 / rho) * e);
            }
            break;
        }
        case WaveletFamily::DirectionalMonogenic: {
            const double g1 = (u1 - u2) / std::sqrt(2.0);
            const double g2 = (u1 + u2) / std::sqrt(2.0);
            const double d = (1.0 + val_sgn(g1) * val_sgn(g2)) * morse1d_even_ft(kind.p1, g1) *
                             morse1d_even_ft(kind.p1, g2);
            out.r = d;
            const double rho = std::hypot(u1, u2);
            if (rho > 0.0) out.i = static_cast<double>(kind.sign) * (mj * (u1 / rho) * d);
            break;
        }
        case WaveletFamily::HypercomplexDirectional: {
            const double g1 = (u1 - u2) / std::sqrt(2.0);
            const double g2 = (u1 + u2) / std::sqrt(2.0);
            const double d = (1.0 + val_sgn(g1) * val_sgn(g2)) * morse1d_even_ft(kind.p1, g1) *
                             morse1d_even_ft(kind.p1, g2);
            out.r = d;
            out.i = mj * val_sgn(u1) * d;
            break;
        }
    }
    return out;
}

// Family member transform a Psi(a r_{-theta} f) exp(-2 pi j f.b), evaluated
// analytically at continuous rotated coordinates.
inline ComponentFT wavelet_ft_at(const WaveletKind& kind, double a, const Rotation& rot,
                                 double b1, double b2, double f1, double f2) {
    double u1, u2;
    rot.rotate_back(f1, f2, u1, u2);
    ComponentFT c = wavelet_mother_ft(kind, a * u1, a * u2);
    const double phase = -two_pi * (f1 * b1 + f2 * b2);
    c *= a * std::exp(std::complex<double>(0.0, phase));
    return c;
}

inline ComponentFT wavelet_ft_at(const WaveletKind& kind, const LocalityIndex& xi, double f1,
                                 double f2) {
    if (!(xi.a > 0)) throw NonpositiveScale(xi.a);
    return wavelet_ft_at(kind, xi.a, Rotation::from_angle(xi.theta), xi.b1, xi.b2, f1, f2);
}

// --- Admissibility ----------------------------------------------------------

enum class WaveletPart { Full, R, I, J, K };

namespace detail {

inline double part_energy(const WaveletKind& kind, WaveletPart part, double u1, double u2) {
    const ComponentFT c = wavelet_mother_ft(kind, u1, u2);
    switch (part) {
        case WaveletPart::Full: return quaternion_ft(c).norm2();
        case WaveletPart::R: return std::norm(c.r);
        case WaveletPart::I: return std::norm(c.i);
        case WaveletPart::J: return std::norm(c.j);
        case WaveletPart::K: return std::norm(c.k);
    }
    return 0.0;
}

} // namespace detail

// c = (2 pi)^2 iint |Psi|^2 / f^2 d^2 f, by log-radial x angular quadrature.
// The log substitution turns the radial weight into unity and localizes the
// integrand doubly-exponentially around the passband.
inline double admissibility_constant(const WaveletKind& kind, WaveletPart part = WaveletPart::Full,
                                     double tol = 1e-9) {
    const double v0 = std::log(kind.peak_frequency());
    const int n_phi = 256;
    double lo = v0 - 3.0, hi = v0 + 1.5;
    int n_v = 192;
    double prev = 0.0;
    for (int iter = 0; iter < 10; ++iter) {
        double sum = 0.0;
        const double dv = (hi - lo) / n_v;
        for (int iv = 0; iv <= n_v; ++iv) {
            const double rho = std::exp(lo + iv * dv);
            double ring = 0.0;
            for (int ip = 0; ip < n_phi; ++ip) {
                const double phi = two_pi * ip / n_phi;
                ring += detail::part_energy(kind, part, rho * std::cos(phi), rho * std::sin(phi));
            }
            const double w = (iv == 0 || iv == n_v) ? 0.5 : 1.0;
            sum += w * ring;
        }
        sum *= dv * (two_pi / n_phi) * two_pi * two_pi;
        if (iter > 0 && std::abs(sum - prev) <= tol * std::abs(sum)) return sum;
        prev = sum;
        lo -= 1.0;
        hi += 0.5;
        n_v *= 2;
    }
    throw DivergentIntegral{};
}

// --- Spatial rendering --------------------------------------------------------

namespace detail {

// Project a sampled spectrum onto the DFT-Hermitian subspace so the inverse
// transform is exactly real. Only Nyquist lines are actually moved: there the
// continuous odd multipliers are inconsistent with grid periodicity.
inline void hermitian_project(ComplexField& F) {
    const int H = F.H, W = F.W;
    for (int k1 = 0; k1 < H; ++k1)
        for (int k2 = 0; k2 < W; ++k2) {
            const int r1 = (H - k1) % H, r2 = (W - k2) % W;
            if (k1 * static_cast<long>(W) + k2 > r1 * static_cast<long>(W) + r2) continue;
            const std::complex<double> a = F.at(k1, k2), b = std::conj(F.at(r1, r2));
            const std::complex<double> avg = 0.5 * (a + b);
            F.at(k1, k2) = avg;
            F.at(r1, r2) = std::conj(avg);
        }
}

} // namespace detail

// Renders the family member on an N x N grid by inverse FFT of the sampled
// analytic transform. Throws WindowTooSmall when more than 0.1% of the energy
// sits in the outer frame of the window.
inline QuaternionField spatial_field(const WaveletKind& kind, const LocalityIndex& xi, int N) {
    if (!(xi.a > 0)) throw NonpositiveScale(xi.a);
    const FreqGrid grid(N, N);
    const Rotation rot = Rotation::from_angle(xi.theta);
    ComplexField planes[4];
    for (auto& p : planes) p = ComplexField(N, N);
    for (int k1 = 0; k1 < N; ++k1)
        for (int k2 = 0; k2 < N; ++k2) {
            const ComponentFT c =
                wavelet_ft_at(kind, xi.a, rot, xi.b1, xi.b2, grid.f1(k1), grid.f2(k2));
            planes[0].at(k1, k2) = c.r;
            planes[1].at(k1, k2) = c.i;
            planes[2].at(k1, k2) = c.j;
            planes[3].at(k1, k2) = c.k;
        }
    QuaternionField out(N, N);
    for (int u = 0; u < 4; ++u) {
        detail::hermitian_project(planes[u]);
        out.plane(u) = real_part(ifft2(planes[u]));
    }

    const int ring = std::max(1, N / 16);
    double total = 0.0, boundary = 0.0;
    for (int x1 = 0; x1 < N; ++x1)
        for (int x2 = 0; x2 < N; ++x2) {
            const double e = out.at(x1, x2).norm2();
            total += e;
            if (x1 < ring || x1 >= N - ring || x2 < ring || x2 >= N - ring) boundary += e;
        }
    if (total > 0 && boundary > 1e-3 * total) throw WindowTooSmall(N, boundary / total);
    return out;
}

// Default render window: at least six peak wavelengths at scale a.
inline int default_window(const WaveletKind& kind, double a) {
    int n = static_cast<int>(std::ceil(6.0 * a / kind.peak_frequency()));
    return n + (n % 2);
}

} // namespace hw
