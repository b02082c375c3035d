#pragma once

#include <complex>

#include "hyperwave/fft.hpp"
#include "hyperwave/field.hpp"

namespace hw {

// DFT bin frequencies in cycles/sample, centered convention: bins at or above
// the midpoint carry negative frequencies, so f in [-1/2, 1/2).
struct FreqGrid {
    int H{}, W{};

    FreqGrid() = default;
    FreqGrid(int h, int w) : H(h), W(w) {}

    static double bin_freq(int k, int N) {
        return (2 * k < N ? k : k - N) / static_cast<double>(N);
    }
    double f1(int k1) const { return bin_freq(k1, H); }
    double f2(int k2) const { return bin_freq(k2, W); }
    double radius(int k1, int k2) const { return std::hypot(f1(k1), f2(k2)); }
    double angle(int k1, int k2) const { return std::atan2(f2(k2), f1(k1)); }

    bool nyquist1(int k1) const { return (H % 2 == 0) && k1 == H / 2; }
    bool nyquist2(int k2) const { return (W % 2 == 0) && k2 == W / 2; }

    // sgn with sgn(0) = 0; Nyquist bins also map to 0 so odd multipliers stay
    // Hermitian on even grids.
    int sgn1(int k1) const { return (k1 == 0 || nyquist1(k1)) ? 0 : (2 * k1 < H ? 1 : -1); }
    int sgn2(int k2) const { return (k2 == 0 || nyquist2(k2)) ? 0 : (2 * k2 < W ? 1 : -1); }
};

enum class Multiplier { HilbertPartial1, HilbertPartial2, HilbertTotal, Riesz1, Riesz2 };

// Frequency factor of the multiplier at one bin, as a complex number in the
// j subfield.
inline std::complex<double> multiplier_factor(Multiplier m, const FreqGrid& g, int k1, int k2) {
    const std::complex<double> mj{0.0, -1.0};
    switch (m) {
        case Multiplier::HilbertPartial1: return mj * static_cast<double>(g.sgn1(k1));
        case Multiplier::HilbertPartial2: return mj * static_cast<double>(g.sgn2(k2));
        case Multiplier::HilbertTotal:
            return {-static_cast<double>(g.sgn1(k1) * g.sgn2(k2)), 0.0};
        case Multiplier::Riesz1: {
            if (g.sgn1(k1) == 0) return {0.0, 0.0};
            const double f = g.radius(k1, k2);
            return mj * (g.f1(k1) / f);
        }
        case Multiplier::Riesz2: {
            if (g.sgn2(k2) == 0) return {0.0, 0.0};
            const double f = g.radius(k1, k2);
            return mj * (g.f2(k2) / f);
        }
    }
    return {};
}

inline ComplexField apply_multiplier(const ComplexField& spectrum, Multiplier m,
                                     const FreqGrid& grid) {
    ComplexField out(spectrum.H, spectrum.W);
    for (int k1 = 0; k1 < spectrum.H; ++k1)
        for (int k2 = 0; k2 < spectrum.W; ++k2)
            out.at(k1, k2) = spectrum.at(k1, k2) * multiplier_factor(m, grid, k1, k2);
    return out;
}

// Multiplier applied straight to a real field: fft, multiply, inverse, real part.
inline RealField filter_real(const RealField& g, Multiplier m) {
    const FreqGrid grid(g.H, g.W);
    return real_part(ifft2(apply_multiplier(fft2(g), m, grid)));
}

// --- Quaternion Fourier transform ------------------------------------------
//
// Forward kernel: exp(-2 pi i x1 q1) on the left, exp(-2 pi j x2 q2) on the
// right. A real plane h maps to (1-k)/2 H(q) + (1+k)/2 H(-q1, q2) where H is
// the ordinary 2-D transform; general quaternion inputs split into four real
// planes, the j and k planes picking up the (-q1, q2) reflection.

namespace detail {

inline QuaternionField embed_complex(const ComplexField& c) {
    QuaternionField q(c.H, c.W);
    for (std::size_t n = 0; n < c.data.size(); ++n) {
        q.r.data[n] = c.data[n].real();
        q.j.data[n] = c.data[n].imag();
    }
    return q;
}

template <class T>
Field<T> flip_axis1(const Field<T>& f) {
    Field<T> out(f.H, f.W);
    for (int k1 = 0; k1 < f.H; ++k1)
        for (int k2 = 0; k2 < f.W; ++k2) out.at(k1, k2) = f.at((f.H - k1) % f.H, k2);
    return out;
}

inline QuaternionField kmul_left(const QuaternionField& q) {
    QuaternionField out(q.H(), q.W());
    for (std::size_t n = 0; n < q.r.data.size(); ++n) {
        out.r.data[n] = -q.k.data[n];
        out.i.data[n] = -q.j.data[n];
        out.j.data[n] = q.i.data[n];
        out.k.data[n] = q.r.data[n];
    }
    return out;
}

inline QuaternionField imul_left(const QuaternionField& q) {
    QuaternionField out(q.H(), q.W());
    for (std::size_t n = 0; n < q.r.data.size(); ++n) {
        out.r.data[n] = -q.i.data[n];
        out.i.data[n] = q.r.data[n];
        out.j.data[n] = -q.k.data[n];
        out.k.data[n] = q.j.data[n];
    }
    return out;
}

inline QuaternionField jmul_left(const QuaternionField& q) {
    QuaternionField out(q.H(), q.W());
    for (std::size_t n = 0; n < q.r.data.size(); ++n) {
        out.r.data[n] = -q.j.data[n];
        out.i.data[n] = q.k.data[n];
        out.j.data[n] = q.r.data[n];
        out.k.data[n] = -q.i.data[n];
    }
    return out;
}

inline void add_into(QuaternionField& acc, const QuaternionField& q) {
    for (int u = 0; u < 4; ++u) acc.plane(u) += q.plane(u);
}

// Two-sided transform of one real plane; sign = -1 forward, +1 inverse kernel.
inline QuaternionField qft_real_plane(const RealField& h, int sign) {
    ComplexField G = (sign < 0) ? fft2(h) : [&] {
        ComplexField c = fft2(h);
        ComplexField conjc(c.H, c.W);
        // exp(+...) transform of a real field is the conjugate spectrum
        for (std::size_t n = 0; n < c.data.size(); ++n) conjc.data[n] = std::conj(c.data[n]);
        return conjc;
    }();
    QuaternionField Q1 = embed_complex(G);
    ComplexField Gm(G.H, G.W);
    for (int k1 = 0; k1 < G.H; ++k1)
        for (int k2 = 0; k2 < G.W; ++k2) Gm.at(k1, k2) = G.at((G.H - k1) % G.H, k2);
    QuaternionField Q2 = embed_complex(Gm);

    QuaternionField out(h.H, h.W);
    QuaternionField k1f = kmul_left(Q1), k2f = kmul_left(Q2);
    for (int u = 0; u < 4; ++u)
        for (std::size_t n = 0; n < out.r.data.size(); ++n)
            out.plane(u).data[n] = 0.5 * (Q1.plane(u).data[n] - k1f.plane(u).data[n] +
                                          Q2.plane(u).data[n] + k2f.plane(u).data[n]);
    return out;
}

inline QuaternionField qft_impl(const QuaternionField& g, int sign) {
    QuaternionField acc = qft_real_plane(g.r, sign);
    add_into(acc, imul_left(qft_real_plane(g.i, sign)));
    QuaternionField pj = jmul_left(qft_real_plane(g.j, sign));
    QuaternionField pk = kmul_left(qft_real_plane(g.k, sign));
    for (int u = 0; u < 4; ++u) {
        acc.plane(u) += flip_axis1(pj.plane(u));
        acc.plane(u) += flip_axis1(pk.plane(u));
    }
    return acc;
}

} // namespace detail

inline QuaternionField qft_forward(const QuaternionField& g) { return detail::qft_impl(g, -1); }

inline QuaternionField qft_forward(const RealField& g) {
    return detail::qft_real_plane(g, -1);
}

inline QuaternionField qft_inverse(const QuaternionField& G) {
    QuaternionField out = detail::qft_impl(G, +1);
    const double s = 1.0 / (static_cast<double>(G.H()) * G.W());
    for (int u = 0; u < 4; ++u) out.plane(u) *= s;
    return out;
}

// --- Unit quaternion Fourier transform --------------------------------------
//
// Kernel exp(-2 pi e f.x) for a pure unit e; {a + b e} is a complex plane, so
// one ordinary FFT suffices. The output occupies the (1, e) components.

inline QuaternionField uqft_forward(const RealField& g, const UnitPureQuaternion& e) {
    ComplexField G = fft2(g);
    const double c = std::cos(e.nu), s = std::sin(e.nu);
    QuaternionField out(g.H, g.W);
    for (std::size_t n = 0; n < G.data.size(); ++n) {
        out.r.data[n] = G.data[n].real();
        out.i.data[n] = G.data[n].imag() * c;
        out.j.data[n] = G.data[n].imag() * s;
    }
    return out;
}

// Forward UQFT of a field already lying in the (1, e) plane.
inline QuaternionField uqft_forward(const QuaternionField& g, const UnitPureQuaternion& e) {
    const double c = std::cos(e.nu), s = std::sin(e.nu);
    ComplexField z(g.H(), g.W());
    for (std::size_t n = 0; n < z.data.size(); ++n)
        z.data[n] = {g.r.data[n], g.i.data[n] * c + g.j.data[n] * s};
    ComplexField Z = fft2(z);
    QuaternionField out(g.H(), g.W());
    for (std::size_t n = 0; n < Z.data.size(); ++n) {
        out.r.data[n] = Z.data[n].real();
        out.i.data[n] = Z.data[n].imag() * c;
        out.j.data[n] = Z.data[n].imag() * s;
    }
    return out;
}

inline RealField uqft_inverse(const QuaternionField& G, const UnitPureQuaternion& e) {
    const double c = std::cos(e.nu), s = std::sin(e.nu);
    ComplexField z(G.H(), G.W());
    for (std::size_t n = 0; n < z.data.size(); ++n)
        z.data[n] = {G.r.data[n], G.i.data[n] * c + G.j.data[n] * s};
    return real_part(ifft2(z));
}

// --- Poisson kernels ---------------------------------------------------------

enum class PoissonKind { P, Q1, Q2 };

// 1-D kernels p(x,y) = y/(pi (x^2+y^2)), q(x,y) = x/(pi (x^2+y^2)).
inline double poisson_p_1d(double x, double y) { return y / (pi * (x * x + y * y)); }
inline double poisson_q_1d(double x, double y) { return x / (pi * (x * x + y * y)); }

// 2-D kernels with c_2 = Gamma(3/2)/pi^{3/2} = 1/(2 pi).
inline double poisson_p_2d(double x1, double x2, double y) {
    const double d = x1 * x1 + x2 * x2 + y * y;
    return y / (two_pi * d * std::sqrt(d));
}
inline double poisson_q_2d(double xl, double x1, double x2, double y) {
    const double d = x1 * x1 + x2 * x2 + y * y;
    return xl / (two_pi * d * std::sqrt(d));
}

// Torus periodizations. In 1-D the image sums have closed forms (the circle
// Poisson kernels); in 2-D the images are summed directly, which converges
// absolutely for p and with pairwise cancellation for q.
inline double poisson_p_1d_torus(double x, double y, int N) {
    const double r = std::exp(-two_pi * y / N), phi = two_pi * x / N;
    return (1.0 - r * r) / ((1.0 - 2.0 * r * std::cos(phi) + r * r) * N);
}
inline double poisson_q_1d_torus(double x, double y, int N) {
    const double r = std::exp(-two_pi * y / N), phi = two_pi * x / N;
    return 2.0 * r * std::sin(phi) / ((1.0 - 2.0 * r * std::cos(phi) + r * r) * N);
}

namespace detail {

// Offset wrapped to the centered periodic representative in [-N/2, N/2).
inline double wrapped_offset(int m, int N) {
    return (2 * m < N) ? m : m - N;
}

inline RealField circular_convolve(const RealField& g, const RealField& kernel) {
    ComplexField G = fft2(g), K = fft2(kernel);
    for (std::size_t n = 0; n < G.data.size(); ++n) G.data[n] *= K.data[n];
    return real_part(ifft2(G));
}

// Under-resolved p spikes carry discrete mass above one; renormalizing keeps
// the y -> 0 limit an identity on the grid.
inline void normalize_mass(RealField& kernel) {
    double s = 0;
    for (double v : kernel.data) s += v;
    if (s != 0) kernel *= 1.0 / s;
}

} // namespace detail

// 1-D Poisson/conjugate-Poisson convolution along one axis (1 or 2), applied
// to every line of the field; exact torus kernels.
inline RealField poisson_convolve_axis(const RealField& g, double y, bool conjugate, int axis) {
    if (!(y > 0)) throw NonpositiveScale(y);
    RealField kernel(g.H, g.W, 0.0);
    const int N = (axis == 1) ? g.H : g.W;
    RealField line(1, N, 0.0);
    for (int m = 0; m < N; ++m) {
        const double x = detail::wrapped_offset(m, N);
        line.data[m] = conjugate ? poisson_q_1d_torus(x, y, N) : poisson_p_1d_torus(x, y, N);
    }
    if (!conjugate) detail::normalize_mass(line);
    for (int m = 0; m < N; ++m) {
        if (axis == 1)
            kernel.at(m, 0) = line.data[m];
        else
            kernel.at(0, m) = line.data[m];
    }
    return detail::circular_convolve(g, kernel);
}

inline RealField poisson_convolve(const RealField& g, double y, PoissonKind kind, int dim) {
    if (!(y > 0)) throw NonpositiveScale(y);
    if (dim == 1) {
        switch (kind) {
            case PoissonKind::P: return poisson_convolve_axis(g, y, false, 1);
            case PoissonKind::Q1: return poisson_convolve_axis(g, y, true, 1);
            case PoissonKind::Q2: return poisson_convolve_axis(g, y, true, 2);
        }
    }
    RealField kernel(g.H, g.W, 0.0);
    const int rings = 3; // image sum truncation
    for (int m1 = 0; m1 < g.H; ++m1)
        for (int m2 = 0; m2 < g.W; ++m2) {
            const double x1 = detail::wrapped_offset(m1, g.H);
            const double x2 = detail::wrapped_offset(m2, g.W);
            double v = 0;
            for (int i1 = -rings; i1 <= rings; ++i1)
                for (int i2 = -rings; i2 <= rings; ++i2) {
                    const double a1 = x1 + i1 * g.H, a2 = x2 + i2 * g.W;
                    switch (kind) {
                        case PoissonKind::P: v += poisson_p_2d(a1, a2, y); break;
                        case PoissonKind::Q1: v += poisson_q_2d(a1, a1, a2, y); break;
                        case PoissonKind::Q2: v += poisson_q_2d(a2, a1, a2, y); break;
                    }
                }
            kernel.at(m1, m2) = v;
        }
    if (kind == PoissonKind::P) detail::normalize_mass(kernel);
    return detail::circular_convolve(g, kernel);
}

} // namespace hw
