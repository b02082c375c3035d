#pragma once

#include <string>
#include <vector>

#include "hyperwave/hyperanalytic.hpp"
#include "hyperwave/parallel.hpp"
#include "hyperwave/wavelet.hpp"

namespace hw {

// Discretization of the locality index: log-spaced scales, uniform angles,
// positions = the full b grid of the field.
struct LocalityGrid {
    std::vector<double> scales;
    std::vector<double> angles;

    static LocalityGrid log_scales(double a_min, double a_max, int voices_per_octave,
                                   int n_angles) {
        LocalityGrid g;
        const int octaves = static_cast<int>(
            std::ceil(voices_per_octave * std::log2(a_max / a_min)));
        for (int i = 0; i <= octaves; ++i) {
            const double a = a_min * std::pow(2.0, static_cast<double>(i) / voices_per_octave);
            g.scales.push_back(std::min(a, a_max));
        }
        if (g.scales.back() < a_max) g.scales.push_back(a_max);
        for (int t = 0; t < n_angles; ++t) g.angles.push_back(two_pi * t / n_angles);
        return g;
    }
};

// Quaternion coefficient field over b for one (a, theta).
struct CoefficientSlab {
    double a{};
    double theta{};
    QuaternionField w;
};

namespace detail {

// One coefficient slab from the precomputed input spectrum. Four real inverse
// transforms against the conjugated component transforms, assembled as
// w = w_r - i w_i - j w_j - k w_k (valid for real input).
inline QuaternionField cwt_slab(const ComplexField& G, const WaveletKind& kind, double a,
                                double theta) {
    const int H = G.H, W = G.W;
    const FreqGrid grid(H, W);
    const Rotation rot = Rotation::from_angle(theta);
    ComplexField planes[4];
    for (auto& p : planes) p = ComplexField(H, W);
    for (int k1 = 0; k1 < H; ++k1)
        for (int k2 = 0; k2 < W; ++k2) {
            const ComponentFT c =
                wavelet_ft_at(kind, a, rot, 0.0, 0.0, grid.f1(k1), grid.f2(k2));
            const std::complex<double> Gv = G.at(k1, k2);
            planes[0].at(k1, k2) = Gv * std::conj(c.r);
            planes[1].at(k1, k2) = Gv * std::conj(c.i);
            planes[2].at(k1, k2) = Gv * std::conj(c.j);
            planes[3].at(k1, k2) = Gv * std::conj(c.k);
        }
    QuaternionField out(H, W);
    for (int u = 0; u < 4; ++u) {
        hermitian_project(planes[u]);
        out.plane(u) = real_part(ifft2(planes[u]));
        if (u > 0) out.plane(u) *= -1.0;
    }
    return out;
}

// CWT of a quaternion-valued input: left-multiply the per-plane transforms by
// the basis units and sum. Used by the identity suite.
inline QuaternionField cwt_quaternion_input(const QuaternionField& h, const WaveletKind& kind,
                                            double a, double theta, bool real_wavelet_only) {
    QuaternionField acc(h.H(), h.W());
    for (int u = 0; u < 4; ++u) {
        QuaternionField part = cwt_slab(fft2(h.plane(u)), kind, a, theta);
        if (real_wavelet_only) {
            // keep only the correlation against the real wavelet component
            RealField wr = part.r;
            part = QuaternionField(h.H(), h.W());
            part.r = wr;
        }
        switch (u) {
            case 0: break;
            case 1: part = imul_left(part); break;
            case 2: part = jmul_left(part); break;
            case 3: part = kmul_left(part); break;
        }
        add_into(acc, part);
    }
    return acc;
}

} // namespace detail

// Forward quaternionic CWT over the locality grid. Slabs are independent
// jobs; outputs do not depend on the worker count.
inline std::vector<CoefficientSlab> cwt(const RealField& g, const WaveletKind& kind,
                                        const LocalityGrid& grid) {
    const double lo = 2.0, hi = std::min(g.H, g.W) / 6.0;
    for (double a : grid.scales)
        if (a < lo || a > hi) throw ScaleOutOfRange(a, lo, hi);

    const ComplexField G = fft2(g);
    const bool angle_free = kind.isotropic_envelope() && grid.angles.size() <= 1;
    std::vector<double> angles = grid.angles.empty() ? std::vector<double>{0.0} : grid.angles;
    if (angle_free) angles = {grid.angles.empty() ? 0.0 : grid.angles[0]};

    std::vector<CoefficientSlab> slabs(grid.scales.size() * angles.size());
    parallel_for(slabs.size(), [&](std::size_t idx) {
        const std::size_t is = idx / angles.size(), it = idx % angles.size();
        CoefficientSlab& s = slabs[idx];
        s.a = grid.scales[is];
        s.theta = angles[it];
        s.w = detail::cwt_slab(G, kind, s.a, s.theta);
    });
    return slabs;
}

inline RealField scalogram(const CoefficientSlab& slab) {
    RealField out(slab.w.H(), slab.w.W());
    for (std::size_t n = 0; n < out.data.size(); ++n) {
        const double r = slab.w.r.data[n], i = slab.w.i.data[n];
        const double j = slab.w.j.data[n], k = slab.w.k.data[n];
        out.data[n] = r * r + i * i + j * j + k * k;
    }
    return out;
}

// --- Reconstruction ------------------------------------------------------------

// Discretized inversion over the measure da dtheta d^2b / a^3. The scale sum
// is a Riemann sum in a over the log-spaced nodes, so halving the voice
// spacing visibly halves the discretization error. Isotropic kinds built
// from a single angle use the exact angle-free reduction (the angular
// integral contributes 2 pi).
inline RealField reconstruct(const std::vector<CoefficientSlab>& slabs, const WaveletKind& kind,
                             const LocalityGrid& grid) {
    if (slabs.empty()) throw GridTooCoarse("no slabs");
    const int H = slabs[0].w.H(), W = slabs[0].w.W();

    const auto& sc = grid.scales;
    if (sc.size() < 2) throw GridTooCoarse("need at least two scales");
    const double decades = std::log10(sc.back() / sc.front());
    if (decades > 0 && (sc.size() - 1) / decades < 24.0 - 1e-9)
        throw GridTooCoarse("fewer than 24 scales per decade");
    const bool angle_free = kind.isotropic_envelope() && grid.angles.size() <= 1;
    if (!angle_free && grid.angles.size() < 16)
        throw GridTooCoarse("fewer than 16 angles for an anisotropic wavelet");

    // left Riemann weights a_i (e^{dlog} - 1); dlog of the last node repeats
    // its predecessor so uniform log grids keep a uniform relative step
    std::vector<double> wa(sc.size(), 0.0);
    for (std::size_t i = 0; i < sc.size(); ++i) {
        const double dlog = (i + 1 < sc.size()) ? std::log(sc[i + 1] / sc[i])
                                                : std::log(sc[i] / sc[i - 1]);
        wa[i] = sc[i] * std::expm1(dlog);
    }
    const double dtheta = angle_free ? two_pi : two_pi / grid.angles.size();

    const FreqGrid fgrid(H, W);
    ComplexField acc(H, W);
    for (const CoefficientSlab& s : slabs) {
        std::size_t is = 0;
        while (is < sc.size() && sc[is] != s.a) ++is;
        if (is == sc.size()) throw GridTooCoarse("slab scale not on the grid");
        const double weight = wa[is] * dtheta / (s.a * s.a * s.a);

        const Rotation rot = Rotation::from_angle(s.theta);
        ComplexField planes[4];
        for (int u = 0; u < 4; ++u) planes[u] = fft2(s.w.plane(u));
        for (int k1 = 0; k1 < H; ++k1)
            for (int k2 = 0; k2 < W; ++k2) {
                const ComponentFT c =
                    wavelet_ft_at(kind, s.a, rot, 0.0, 0.0, fgrid.f1(k1), fgrid.f2(k2));
                // real part of w * psi: + on the r plane, - on the others
                acc.at(k1, k2) += weight * (planes[0].at(k1, k2) * c.r -
                                            planes[1].at(k1, k2) * c.i -
                                            planes[2].at(k1, k2) * c.j -
                                            planes[3].at(k1, k2) * c.k);
            }
    }
    // The admissibility constant carries the conventional (2 pi)^2; the
    // resolution of the identity for this measure does not.
    const double c_rec = admissibility_constant(kind) / (two_pi * two_pi);
    detail::hermitian_project(acc);
    RealField out = real_part(ifft2(acc));
    out *= 1.0 / c_rec;
    return out;
}

// --- Exact coefficient identities ------------------------------------------------

// Max relative residuals of the frequency-domain coefficient identities.
// Monogenic kinds fill m*, hypercomplexing kinds fill h*; all are exact in
// the transform algebra, so residuals are floating noise.
struct IdentityReport {
    // monogenic: coefficient = extension of real-wavelet coefficients
    double m1_extension_route = 0.0;
    // monogenic: anti-monogenic component annihilated
    double m2_annihilation = 0.0;
    // monogenic: CWT of the monogenic component = twice the real-wavelet CWT
    double m2_plus_conversion = 0.0;
    // monogenic: CWT(g) = 1/2 CWT(monogenic extension)
    double m3_half = 0.0;
    // hypercomplex: even-wavelet CWT of the extension route
    double h1_even_route = 0.0;
    // hypercomplex: extension-of-coefficients route
    double h1_extension_route = 0.0;
    // hypercomplex: four-component average reassembles the coefficients
    double h2_split_sum = 0.0;
    // hypercomplex: (-+) and (--) components cancel pairwise
    double h2_cancellation = 0.0;
    // hypercomplex: (+-) component converts to the (++) coefficients
    double h2_conversion = 0.0;

    double max_residual() const {
        double m = 0.0;
        for (double v : {m1_extension_route, m2_annihilation, m2_plus_conversion, m3_half,
                         h1_even_route, h1_extension_route, h2_split_sum, h2_cancellation,
                         h2_conversion})
            m = std::max(m, v);
        return m;
    }
};

inline IdentityReport verify_identities(const RealField& g, const WaveletKind& kind,
                                        const std::vector<double>& scales,
                                        const std::vector<double>& thetas) {
    IdentityReport rep;
    const ComplexField G = fft2(g);
    const FreqGrid grid(g.H, g.W);

    for (double a : scales)
        for (double theta : thetas) {
            const QuaternionField ref = detail::cwt_slab(G, kind, a, theta);
            const double scale = std::max(max_abs(ref), 1e-300);

            if (kind.monogenic()) {
                // (M1) theta-monogenic extension of the real-wavelet CWT
                const RealField& h = ref.r;
                const ComplexField Hs = fft2(h);
                const RealField r1 =
                    real_part(ifft2(apply_multiplier(Hs, Multiplier::Riesz1, grid)));
                const RealField r2 =
                    real_part(ifft2(apply_multiplier(Hs, Multiplier::Riesz2, grid)));
                const double c = std::cos(theta), s = std::sin(theta);
                QuaternionField ext(g.H, g.W);
                ext.r = h;
                for (std::size_t n = 0; n < h.data.size(); ++n) {
                    ext.i.data[n] = c * r1.data[n] + s * r2.data[n];
                    ext.j.data[n] = -s * r1.data[n] + c * r2.data[n];
                }
                rep.m1_extension_route =
                    std::max(rep.m1_extension_route, max_abs_diff(ref, ext) / scale);

                // (M2) annihilation / conversion of the decomposition parts
                auto [plus, minus] = theta_monogenic_decompose(g, theta);
                const QuaternionField wminus =
                    detail::cwt_quaternion_input(minus, kind, a, theta, false);
                rep.m2_annihilation = std::max(rep.m2_annihilation, max_abs(wminus) / scale);

                const QuaternionField wplus =
                    detail::cwt_quaternion_input(plus, kind, a, theta, false);
                QuaternionField wplus_real =
                    detail::cwt_quaternion_input(plus, kind, a, theta, true);
                for (int u = 0; u < 4; ++u) wplus_real.plane(u) *= 2.0;
                rep.m2_plus_conversion =
                    std::max(rep.m2_plus_conversion, max_abs_diff(wplus, wplus_real) / scale);

                // (M3) half of the CWT of the extension
                QuaternionField half = wplus;
                for (int u = 0; u < 4; ++u) half.plane(u) *= 0.5;
                rep.m3_half = std::max(rep.m3_half, max_abs_diff(ref, half) / scale);
            }

            if (kind.hypercomplexing()) {
                // (H1) even-wavelet CWT of the theta-hypercomplex extension
                const QuaternionField ext = theta_hypercomplex_extend_spectral(g, theta);
                const QuaternionField routeB =
                    detail::cwt_quaternion_input(ext, kind, a, theta, true);
                rep.h1_even_route =
                    std::max(rep.h1_even_route, max_abs_diff(ref, routeB) / scale);

                // (H1) theta-hypercomplex extension of the even-wavelet CWT
                const QuaternionField routeC =
                    theta_hypercomplex_extend_spectral(ref.r, theta);
                rep.h1_extension_route =
                    std::max(rep.h1_extension_route, max_abs_diff(ref, routeC) / scale);

                // (H2) four-component split
                QuaternionField sum(g.H, g.W);
                QuaternionField parts[4];
                int idx = 0;
                for (int mu1 : {+1, -1})
                    for (int mu2 : {+1, -1}) {
                        const QuaternionField comp = theta_hypercomplex_component(ext, mu1, mu2);
                        parts[idx] = detail::cwt_quaternion_input(comp, kind, a, theta, false);
                        detail::add_into(sum, parts[idx]);
                        ++idx;
                    }
                for (int u = 0; u < 4; ++u) sum.plane(u) *= 0.25;
                rep.h2_split_sum = std::max(rep.h2_split_sum, max_abs_diff(ref, sum) / scale);
                // parts: 0 = (++), 1 = (+-), 2 = (-+), 3 = (--)
                QuaternionField cancel = parts[2];
                detail::add_into(cancel, parts[3]);
                rep.h2_cancellation = std::max(rep.h2_cancellation, max_abs(cancel) / scale);
                rep.h2_conversion =
                    std::max(rep.h2_conversion, max_abs_diff(parts[1], parts[0]) / scale);
            }
        }
    return rep;
}

} // namespace hw
