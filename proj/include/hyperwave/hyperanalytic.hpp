#pragma once

#include <functional>

#include "hyperwave/spectral.hpp"
#include "hyperwave/wavelet.hpp"

namespace hw {

// Hypercomplex signal (g, H1 g, H2 g, HT g). The real plane is the input
// itself, not a transform round trip.
inline QuaternionField hypercomplex_extend(const RealField& g) {
    const FreqGrid grid(g.H, g.W);
    const ComplexField G = fft2(g);
    QuaternionField out(g.H, g.W);
    out.r = g;
    out.i = real_part(ifft2(apply_multiplier(G, Multiplier::HilbertPartial1, grid)));
    out.j = real_part(ifft2(apply_multiplier(G, Multiplier::HilbertPartial2, grid)));
    out.k = real_part(ifft2(apply_multiplier(G, Multiplier::HilbertTotal, grid)));
    return out;
}

// Monogenic (+) / anti-monogenic (-) signal g +- (i R1 g + j R2 g).
inline QuaternionField monogenic_extend(const RealField& g, int sign = +1) {
    const FreqGrid grid(g.H, g.W);
    const ComplexField G = fft2(g);
    QuaternionField out(g.H, g.W);
    out.r = g;
    out.i = real_part(ifft2(apply_multiplier(G, Multiplier::Riesz1, grid)));
    out.j = real_part(ifft2(apply_multiplier(G, Multiplier::Riesz2, grid)));
    if (sign < 0) {
        out.i *= -1.0;
        out.j *= -1.0;
    }
    return out;
}

// theta-monogenic/anti-monogenic decomposition. The rotated Riesz components
// are plain linear combinations of (R1 g, R2 g), so any theta is exact.
inline std::pair<QuaternionField, QuaternionField> theta_monogenic_decompose(const RealField& g,
                                                                             double theta) {
    const FreqGrid grid(g.H, g.W);
    const ComplexField G = fft2(g);
    const RealField r1 = real_part(ifft2(apply_multiplier(G, Multiplier::Riesz1, grid)));
    const RealField r2 = real_part(ifft2(apply_multiplier(G, Multiplier::Riesz2, grid)));
    const double c = std::cos(theta), s = std::sin(theta);
    QuaternionField plus(g.H, g.W), minus(g.H, g.W);
    plus.r = g;
    minus.r = g;
    for (std::size_t n = 0; n < g.data.size(); ++n) {
        const double v1 = c * r1.data[n] + s * r2.data[n];
        const double v2 = -s * r1.data[n] + c * r2.data[n];
        plus.i.data[n] = v1;
        plus.j.data[n] = v2;
        minus.i.data[n] = -v1;
        minus.j.data[n] = -v2;
    }
    return {plus, minus};
}

// --- theta-hypercomplex -------------------------------------------------------

// Quarter turns are the only rotations a sampled grid supports exactly.
inline int quarter_turns(double theta) {
    const double t = theta / (pi / 2.0);
    const int n = static_cast<int>(std::lround(t));
    if (std::abs(t - n) > 1e-12) throw UnsupportedRotation(theta);
    return ((n % 4) + 4) % 4;
}

inline QuaternionField theta_hypercomplex_extend(const RealField& g, double theta) {
    const int turns = quarter_turns(theta);
    if (turns == 0) return hypercomplex_extend(g);
    QuaternionField ext = hypercomplex_extend(rotate_quarter(g, -turns));
    QuaternionField out(g.H, g.W);
    for (int u = 0; u < 4; ++u) out.plane(u) = rotate_quarter(ext.plane(u), turns);
    return out;
}

// Closed-form signal separable in the frame rotated by theta: factor
// functions of the rotated coordinates together with their Hilbert pairs.
struct SeparableGenerator {
    std::function<double(double)> f1, f1_hilbert;
    std::function<double(double)> f2, f2_hilbert;

    static SeparableGenerator cosine(double freq1, double freq2, double amp = 1.0) {
        SeparableGenerator gen;
        gen.f1 = [freq1, amp](double t) { return amp * std::cos(two_pi * freq1 * t); };
        gen.f1_hilbert = [freq1, amp](double t) { return amp * std::sin(two_pi * freq1 * t); };
        if (freq2 > 0.0) {
            gen.f2 = [freq2](double t) { return std::cos(two_pi * freq2 * t); };
            gen.f2_hilbert = [freq2](double t) { return std::sin(two_pi * freq2 * t); };
        } else {
            gen.f2 = [](double) { return 1.0; };
            gen.f2_hilbert = [](double) { return 0.0; }; // Hilbert of a constant
        }
        return gen;
    }

    RealField sample(double theta, int H, int W) const {
        const Rotation rot = Rotation::from_angle(theta);
        RealField out(H, W);
        for (int x1 = 0; x1 < H; ++x1)
            for (int x2 = 0; x2 < W; ++x2) {
                double u1, u2;
                rot.rotate_back(x1, x2, u1, u2);
                out.at(x1, x2) = f1(u1) * f2(u2);
            }
        return out;
    }
};

// theta-hypercomplex extension from closed-form rotated samples: the Hilbert
// transforms act per factor in the rotated frame, so all four planes are
// evaluated analytically on the original grid. Any theta.
inline QuaternionField theta_hypercomplex_extend(const SeparableGenerator& gen, double theta,
                                                 int H, int W) {
    const Rotation rot = Rotation::from_angle(theta);
    QuaternionField out(H, W);
    for (int x1 = 0; x1 < H; ++x1)
        for (int x2 = 0; x2 < W; ++x2) {
            double u1, u2;
            rot.rotate_back(x1, x2, u1, u2);
            const double a = gen.f1(u1), ah = gen.f1_hilbert(u1);
            const double b = gen.f2(u2), bh = gen.f2_hilbert(u2);
            out.set(x1, x2, {a * b, ah * b, a * bh, ah * bh});
        }
    return out;
}

// Rotated-frame Hilbert multipliers evaluated on the DFT grid; this is the
// frequency-domain form of R_theta H_s R_{-theta} and needs no resampling.
// Plain value sgn here (the Nyquist convention lives in Multiplier).
inline QuaternionField theta_hypercomplex_extend_spectral(const RealField& g, double theta) {
    const FreqGrid grid(g.H, g.W);
    const ComplexField G = fft2(g);
    const Rotation rot = Rotation::from_angle(theta);
    ComplexField S1(g.H, g.W), S2(g.H, g.W), ST(g.H, g.W);
    const std::complex<double> mj{0.0, -1.0};
    for (int k1 = 0; k1 < g.H; ++k1)
        for (int k2 = 0; k2 < g.W; ++k2) {
            double u1, u2;
            rot.rotate_back(grid.f1(k1), grid.f2(k2), u1, u2);
            const double s1 = detail::val_sgn(u1), s2 = detail::val_sgn(u2);
            const std::complex<double> Gv = G.at(k1, k2);
            S1.at(k1, k2) = mj * s1 * Gv;
            S2.at(k1, k2) = mj * s2 * Gv;
            ST.at(k1, k2) = -s1 * s2 * Gv;
        }
    QuaternionField out(g.H, g.W);
    out.r = g;
    out.i = real_part(ifft2(S1));
    out.j = real_part(ifft2(S2));
    out.k = real_part(ifft2(ST));
    return out;
}

// One of the four theta-hypercomplex/anti-hypercomplex components; signs
// (mu1, mu2) flip the odd planes per the decomposition.
inline QuaternionField theta_hypercomplex_component(const QuaternionField& ext, int mu1, int mu2) {
    QuaternionField out = ext;
    if (mu1 < 0) out.i *= -1.0;
    if (mu2 < 0) out.j *= -1.0;
    if (mu1 * mu2 < 0) out.k *= -1.0;
    return out;
}

// --- Phase shifts ---------------------------------------------------------------

// Plane-wave phase shift |g+| cos(2 pi phi - theta_s). The per-pixel
// orientation is canonicalized to [0, pi) so the shifted field keeps a signed
// quadrature component; pixels with no oscillation energy pass through.
inline RealField phase_shift_plane(const RealField& g, double theta_s) {
    const QuaternionField mono = monogenic_extend(g);
    double peak = 0.0;
    for (std::size_t n = 0; n < g.data.size(); ++n)
        peak = std::max(peak, std::hypot(mono.i.data[n], mono.j.data[n]));
    const double floor = 1e-12 * peak;
    const double cs = std::cos(theta_s), sn = std::sin(theta_s);
    RealField out(g.H, g.W);
    for (std::size_t n = 0; n < g.data.size(); ++n) {
        const double r1 = mono.i.data[n], r2 = mono.j.data[n];
        if (std::hypot(r1, r2) <= floor) {
            out.data[n] = g.data[n];
            continue;
        }
        double nu = std::atan2(r2, r1);
        if (nu < 0.0) nu += pi;
        if (nu >= pi) nu -= pi;
        const double quad = r1 * std::cos(nu) + r2 * std::sin(nu); // signed Riesz magnitude
        out.data[n] = g.data[n] * cs + quad * sn;
    }
    return out;
}

// Separable phase shift Re{ e^{-i t1} g^{(++)} e^{-j t2} } in the frame
// rotated by theta (quarter turns for sampled fields).
inline RealField phase_shift_separable(const RealField& g, double ts1, double ts2,
                                       double theta = 0.0) {
    const int turns = quarter_turns(theta);
    const RealField base = (turns == 0) ? g : rotate_quarter(g, -turns);
    const QuaternionField ext = hypercomplex_extend(base);
    const double cA = std::cos(ts1), sA = std::sin(ts1);
    const double cB = std::cos(ts2), sB = std::sin(ts2);
    RealField out(base.H, base.W);
    for (std::size_t n = 0; n < base.data.size(); ++n) {
        const double wr = ext.r.data[n], wi = ext.i.data[n];
        const double wj = ext.j.data[n], wk = ext.k.data[n];
        out.data[n] = (wr * cA + wi * sA) * cB + (wj * cA + wk * sA) * sB;
    }
    return (turns == 0) ? out : rotate_quarter(out, turns);
}

} // namespace hw
