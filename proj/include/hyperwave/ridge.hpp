#pragma once

#include <optional>
#include <vector>

#include "hyperwave/cwt.hpp"

namespace hw {

// Extracted local oscillation descriptor. Monogenic ridges fill (nu, phi,
// freq1 = passband/a*, freq2 = phase-gradient magnitude); hypercomplex
// ridges fill (alpha, beta, gamma_score) and the two axis frequencies.
struct RidgePoint {
    int b1{}, b2{};
    double a{};
    double theta{};
    double amplitude{};
    bool has_orientation{false};
    double nu{};
    double phi{};
    double alpha{}, beta{};
    double freq1{}, freq2{};
    double gamma_score{};
};

namespace detail {

inline double wrap_cycles(double x) { return x - std::round(x); }

inline double wrap_angle_pi(double x) {
    x = std::fmod(x, pi);
    if (x < 0) x += pi;
    return x;
}

// Signed phase increment between neighbouring monogenic coefficients,
// measured against a reference orientation; immune to phase wrapping.
inline double mono_phase_step(const Quaternion& from, const Quaternion& to, double nu_ref) {
    const Quaternion p = qmul(from.conj(), to);
    const double along = p.i * std::cos(nu_ref) + p.j * std::sin(nu_ref);
    if (p.r == 0.0 && along == 0.0) return 0.0;
    return std::atan2(along, p.r) / two_pi;
}

} // namespace detail

// Plane-wave ridges from isotropic-monogenic slabs (one theta suffices).
// Per position: scale argmax of |w| (smallest scale wins ties), orientation
// and phase from the monogenic polar form, amplitude normalized by the
// wavelet passband gain.
inline std::vector<RidgePoint> monogenic_ridge(const std::vector<CoefficientSlab>& slabs,
                                               const WaveletKind& kind, double threshold = 0.05) {
    if (slabs.empty()) throw NoRidge{};
    const int H = slabs[0].w.H(), W = slabs[0].w.W();

    double gmax = 0.0;
    for (const auto& s : slabs) gmax = std::max(gmax, max_abs(s.w));
    const double thr = threshold * gmax;
    if (gmax == 0.0) throw NoRidge{};

    const double f_peak = kind.peak_frequency();
    const double gain_peak = (kind.family == WaveletFamily::IsotropicMonogenic)
                                 ? morse_iso_ft(kind.iso, f_peak)
                                 : std::abs(quaternion_ft(wavelet_mother_ft(kind, f_peak, 0.0)).r);

    std::vector<RidgePoint> out;
    for (int b1 = 0; b1 < H; ++b1)
        for (int b2 = 0; b2 < W; ++b2) {
            std::size_t best = 0;
            double best_mag = -1.0;
            for (std::size_t s = 0; s < slabs.size(); ++s) {
                // strict improvement: the first (smallest) scale wins ties
                const double m = slabs[s].w.at(b1, b2).norm();
                if (m > best_mag) {
                    best = s;
                    best_mag = m;
                }
            }
            if (best_mag < thr) continue;
            const CoefficientSlab& slab = slabs[best];
            const Quaternion w = slab.w.at(b1, b2);

            RidgePoint p;
            p.b1 = b1;
            p.b2 = b2;
            p.a = slab.a;
            p.theta = slab.theta;
            const PolarMonogenic pol = polar_monogenic(w, 1e-12 * gmax);
            p.has_orientation = pol.orientation_defined;
            if (pol.orientation_defined) p.nu = detail::wrap_angle_pi(pol.nu + slab.theta);
            p.phi = pol.phi;
            p.amplitude = best_mag / (slab.a * gain_peak);
            p.freq1 = f_peak / slab.a;

            // centered phase-gradient frequency estimate
            const double nu_ref = pol.orientation_defined ? pol.nu : 0.0;
            const auto& wf = slab.w;
            const double d1 = 0.5 * (detail::mono_phase_step(w, wf.at((b1 + 1) % H, b2), nu_ref) +
                                     detail::mono_phase_step(wf.at((b1 + H - 1) % H, b2), w, nu_ref));
            const double d2 = 0.5 * (detail::mono_phase_step(w, wf.at(b1, (b2 + 1) % W), nu_ref) +
                                     detail::mono_phase_step(wf.at(b1, (b2 + W - 1) % W), w, nu_ref));
            p.freq2 = std::hypot(d1, d2);
            out.push_back(p);
        }
    if (out.empty()) throw NoRidge{};
    return out;
}

// Separable ridges from hypercomplexing slabs over a (scale, angle) grid.
// (a*, theta*) = argmax of |w|; phases from the hypercomplex polar form;
// axis frequencies from centered phase differences taken along the rotated
// axes by the chain rule (no resampling).
inline std::vector<RidgePoint> hypercomplex_ridge(const std::vector<CoefficientSlab>& slabs,
                                                  const WaveletKind& kind,
                                                  double threshold = 0.05) {
    if (slabs.empty()) throw NoRidge{};
    const int H = slabs[0].w.H(), W = slabs[0].w.W();

    double gmax = 0.0;
    for (const auto& s : slabs) gmax = std::max(gmax, max_abs(s.w));
    const double thr = threshold * gmax;
    if (gmax == 0.0) throw NoRidge{};

    std::vector<RidgePoint> out;
    for (int b1 = 0; b1 < H; ++b1)
        for (int b2 = 0; b2 < W; ++b2) {
            std::size_t best = 0;
            double best_mag = -1.0;
            for (std::size_t s = 0; s < slabs.size(); ++s) {
                const double m = slabs[s].w.at(b1, b2).norm();
                if (m > best_mag) {
                    best = s;
                    best_mag = m;
                }
            }
            if (best_mag < thr) continue;
            const CoefficientSlab& slab = slabs[best];
            const Quaternion w = slab.w.at(b1, b2);
            const PolarHypercomplex pol = polar_hypercomplex(w);

            RidgePoint p;
            p.b1 = b1;
            p.b2 = b2;
            p.a = slab.a;
            p.theta = slab.theta;
            p.alpha = pol.alpha;
            p.beta = pol.beta;
            p.gamma_score = std::abs(pol.gamma);

            // phase differences of alpha and beta on the sample grid
            auto alpha_at = [&](int x1, int x2) {
                const Quaternion q = slab.w.at((x1 + H) % H, (x2 + W) % W);
                return (q.norm() > 0.0) ? polar_hypercomplex(q) : pol;
            };
            const PolarHypercomplex pe = alpha_at(b1 + 1, b2), pw = alpha_at(b1 - 1, b2);
            const PolarHypercomplex pn = alpha_at(b1, b2 + 1), ps = alpha_at(b1, b2 - 1);
            const double da_1 = 0.5 * (detail::wrap_cycles(pe.alpha - pol.alpha) +
                                       detail::wrap_cycles(pol.alpha - pw.alpha));
            const double da_2 = 0.5 * (detail::wrap_cycles(pn.alpha - pol.alpha) +
                                       detail::wrap_cycles(pol.alpha - ps.alpha));
            const double db_1 = 0.5 * (detail::wrap_cycles(pe.beta - pol.beta) +
                                       detail::wrap_cycles(pol.beta - pw.beta));
            const double db_2 = 0.5 * (detail::wrap_cycles(pn.beta - pol.beta) +
                                       detail::wrap_cycles(pol.beta - ps.beta));
            const double c = std::cos(slab.theta), s = std::sin(slab.theta);
            p.freq1 = std::abs(c * da_1 + s * da_2);  // d alpha / d b1'
            p.freq2 = std::abs(-s * db_1 + c * db_2); // d beta / d b2'

            // amplitude normalized by the passband gain at the measured pattern
            const double gain =
                std::abs(wavelet_mother_ft(kind, slab.a * p.freq1, slab.a * p.freq2).r.real());
            p.amplitude = (gain > 1e-12) ? best_mag / (slab.a * gain) : 0.0;
            out.push_back(p);
        }
    if (out.empty()) throw NoRidge{};
    return out;
}

// Per-position orientation (mod pi) of a directional signal from one
// isotropic-monogenic slab pair of Riesz planes; positions with no
// oscillation energy are masked.
struct OrientationField {
    RealField angle; // radians, in [0, pi)
    std::vector<std::uint8_t> mask;
};

inline OrientationField estimate_orientation_field(const CoefficientSlab& slab) {
    const int H = slab.w.H(), W = slab.w.W();
    OrientationField out{RealField(H, W), std::vector<std::uint8_t>(static_cast<std::size_t>(H) * W, 0)};
    double peak = 0.0;
    for (std::size_t n = 0; n < slab.w.r.data.size(); ++n)
        peak = std::max(peak, std::hypot(slab.w.i.data[n], slab.w.j.data[n]));
    const double floor = 1e-12 * peak;
    for (int b1 = 0; b1 < H; ++b1)
        for (int b2 = 0; b2 < W; ++b2) {
            const double w1 = slab.w.i.at(b1, b2), w2 = slab.w.j.at(b1, b2);
            if (std::hypot(w1, w2) <= floor) continue;
            const double phi0 = slab.theta - std::atan2(w2, w1);
            out.angle.at(b1, b2) = detail::wrap_angle_pi(phi0);
            out.mask[static_cast<std::size_t>(b1) * W + b2] = 1;
        }
    return out;
}

} // namespace hw
