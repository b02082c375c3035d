#pragma once

#include <random>

#include "hyperwave/fft.hpp"
#include "hyperwave/field.hpp"
#include "hyperwave/spectral.hpp"

namespace hw {

// cos(2 pi f0 (x1 cos phi0 + x2 sin phi0) + 2 pi phase)
inline RealField plane_wave(int H, int W, double f0, double phi0, double amp = 1.0,
                            double phase = 0.0) {
    RealField g(H, W);
    const double c = std::cos(phi0), s = std::sin(phi0);
    for (int x1 = 0; x1 < H; ++x1)
        for (int x2 = 0; x2 < W; ++x2)
            g.at(x1, x2) = amp * std::cos(two_pi * (f0 * (x1 * c + x2 * s) + phase));
    return g;
}

// cos(2 pi f1 x1') cos(2 pi f2 x2') in the frame rotated by theta
inline RealField separable_wave(int H, int W, double f1, double f2, double theta = 0.0,
                                double amp = 1.0) {
    RealField g(H, W);
    const double c = std::cos(theta), s = std::sin(theta);
    for (int x1 = 0; x1 < H; ++x1)
        for (int x2 = 0; x2 < W; ++x2) {
            const double u1 = c * x1 + s * x2, u2 = -s * x1 + c * x2;
            g.at(x1, x2) = amp * std::cos(two_pi * f1 * u1) * std::cos(two_pi * f2 * u2);
        }
    return g;
}

// Radially chirping oscillation, instantaneous frequency f_lo at the center
// to f_hi at the corner distance.
inline RealField radial_chirp(int H, int W, double f_lo, double f_hi, double amp = 1.0) {
    RealField g(H, W);
    const double c1 = 0.5 * (H - 1), c2 = 0.5 * (W - 1);
    const double rmax = std::hypot(c1, c2);
    const double k = (f_hi - f_lo) / (2.0 * rmax);
    for (int x1 = 0; x1 < H; ++x1)
        for (int x2 = 0; x2 < W; ++x2) {
            const double r = std::hypot(x1 - c1, x2 - c2);
            g.at(x1, x2) = amp * std::cos(two_pi * (f_lo * r + k * r * r));
        }
    return g;
}

// Seeded white Gaussian field; own Box-Muller so the bytes do not depend on
// the standard library.
inline RealField gaussian_noise(int H, int W, std::uint64_t seed, double sigma = 1.0) {
    RealField g(H, W);
    std::mt19937_64 rng(seed);
    auto uniform = [&rng]() {
        return (static_cast<double>(rng() >> 11) + 0.5) * (1.0 / 9007199254740992.0);
    };
    for (std::size_t n = 0; n < g.data.size(); n += 2) {
        const double u1 = uniform(), u2 = uniform();
        const double r = sigma * std::sqrt(-2.0 * std::log(u1));
        g.data[n] = r * std::cos(two_pi * u2);
        if (n + 1 < g.data.size()) g.data[n + 1] = r * std::sin(two_pi * u2);
    }
    return g;
}

// Random field with spectrum confined to f in [f_min, f_max]; Hermitian by
// construction so the samples are real. DC, Nyquist and the frequency axes
// stay empty, which keeps the exact identities free of convention bins.
inline RealField band_limited_noise(int H, int W, std::uint64_t seed, double f_min, double f_max,
                                    bool avoid_axes = true) {
    std::mt19937_64 rng(seed);
    auto uniform = [&rng]() {
        return (static_cast<double>(rng() >> 11) + 0.5) * (1.0 / 9007199254740992.0);
    };
    const FreqGrid grid(H, W);
    ComplexField F(H, W);
    for (int k1 = 0; k1 < H; ++k1)
        for (int k2 = 0; k2 < W; ++k2) {
            const double f = grid.radius(k1, k2);
            const double re = uniform() * 2 - 1, im = uniform() * 2 - 1; // draw always: layout-stable
            if (f < f_min || f > f_max) continue;
            if (grid.nyquist1(k1) || grid.nyquist2(k2)) continue;
            if (avoid_axes && (k1 == 0 || k2 == 0)) continue;
            F.at(k1, k2) = {re, im};
        }
    // Hermitian fold: keep the half-spectrum, mirror the rest
    for (int k1 = 0; k1 < H; ++k1)
        for (int k2 = 0; k2 < W; ++k2) {
            const int r1 = (H - k1) % H, r2 = (W - k2) % W;
            if (k1 * W + k2 < r1 * W + r2) F.at(r1, r2) = std::conj(F.at(k1, k2));
        }
    RealField out = real_part(ifft2(F));
    const double m = linf_norm(out);
    if (m > 0) out *= 1.0 / m;
    return out;
}

} // namespace hw
