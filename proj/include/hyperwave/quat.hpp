#pragma once

#include <cmath>
#include <complex>
#include <utility>

#include "hyperwave/errors.hpp"

namespace hw {

inline constexpr double pi = 3.141592653589793238462643383279502884;
inline constexpr double two_pi = 2.0 * pi;

// Quaternion q = r + i*qi + j*qj + k*qk with ij = k, jk = i, ki = j.
struct Quaternion {
    double r{}, i{}, j{}, k{};

    constexpr Quaternion() = default;
    constexpr Quaternion(double r_, double i_, double j_, double k_) : r(r_), i(i_), j(j_), k(k_) {}

    static constexpr Quaternion real(double v) { return {v, 0, 0, 0}; }

    constexpr Quaternion conj() const { return {r, -i, -j, -k}; }
    double norm2() const { return r * r + i * i + j * j + k * k; }
    double norm() const { return std::sqrt(norm2()); }

    constexpr Quaternion& operator+=(const Quaternion& o) {
        r += o.r; i += o.i; j += o.j; k += o.k;
        return *this;
    }
    constexpr Quaternion& operator-=(const Quaternion& o) {
        r -= o.r; i -= o.i; j -= o.j; k -= o.k;
        return *this;
    }
    constexpr Quaternion& operator*=(double s) {
        r *= s; i *= s; j *= s; k *= s;
        return *this;
    }
    friend constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
    friend constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
    friend constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
    friend constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
    friend constexpr Quaternion operator-(const Quaternion& a) { return {-a.r, -a.i, -a.j, -a.k}; }
};

// Hamilton product.
constexpr Quaternion qmul(const Quaternion& a, const Quaternion& b) {
    return {a.r * b.r - a.i * b.i - a.j * b.j - a.k * b.k,
            a.r * b.i + a.i * b.r + a.j * b.k - a.k * b.j,
            a.r * b.j - a.i * b.k + a.j * b.r + a.k * b.i,
            a.r * b.k + a.i * b.j - a.j * b.i + a.k * b.r};
}

constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) { return qmul(a, b); }

constexpr double re(const Quaternion& q) { return q.r; }
constexpr Quaternion pure(const Quaternion& q) { return {0, q.i, q.j, q.k}; }
constexpr double dot(const Quaternion& a, const Quaternion& b) {
    return a.r * b.r + a.i * b.i + a.j * b.j + a.k * b.k;
}

// Unit pure quaternion e_nu = i cos(nu) + j sin(nu); e_nu^2 = -1.
struct UnitPureQuaternion {
    double nu{};
    Quaternion value() const { return {0, std::cos(nu), std::sin(nu), 0}; }
};

// exp(angle * e) for unit pure e, by De Moivre.
inline Quaternion qexp_pure(const Quaternion& e, double angle) {
    return Quaternion::real(std::cos(angle)) + qmul(e, Quaternion::real(std::sin(angle)));
}

// --- Cayley-Dickson forms -------------------------------------------------

enum class CdAxis { I, J };

struct CayleyDickson {
    std::complex<double> simplex;
    std::complex<double> perplex;
};

// axis I: q = (r + j*qj) + i*(qi + j*qk); axis J: q = (r + i*qi) + (qj + i*qk)*j.
inline CayleyDickson cayley_dickson_split(const Quaternion& q, CdAxis axis) {
    if (axis == CdAxis::I) return {{q.r, q.j}, {q.i, q.k}};
    return {{q.r, q.i}, {q.j, q.k}};
}

inline Quaternion cayley_dickson_join(const CayleyDickson& cd, CdAxis axis) {
    if (axis == CdAxis::I)
        return {cd.simplex.real(), cd.perplex.real(), cd.simplex.imag(), cd.perplex.imag()};
    return {cd.simplex.real(), cd.simplex.imag(), cd.perplex.real(), cd.perplex.imag()};
}

// --- Polar representations ------------------------------------------------

// q = magnitude * e^{2*pi*i*alpha} e^{2*pi*k*gamma} e^{2*pi*j*beta}.
// Phases are in cycles: alpha in (-1/2, 1/2], beta in (-1/4, 1/4],
// gamma in [-1/8, 1/8]. The arctan formulas place alpha, beta in
// (-1/8, 1/8]; the atan2 extension and the half-cycle fixup below widen the
// alpha range so the factorization covers the whole unit sphere.
struct PolarHypercomplex {
    double magnitude{};
    double alpha{}, beta{}, gamma{};
};

inline Quaternion from_polar_hypercomplex(const PolarHypercomplex& p) {
    const double A = two_pi * p.alpha, B = two_pi * p.beta, G = two_pi * p.gamma;
    const Quaternion ea{std::cos(A), std::sin(A), 0, 0};
    const Quaternion eg{std::cos(G), 0, 0, std::sin(G)};
    const Quaternion eb{std::cos(B), 0, std::sin(B), 0};
    return qmul(qmul(ea, eg), eb) * p.magnitude;
}

inline PolarHypercomplex polar_hypercomplex(const Quaternion& q) {
    const double m = q.norm();
    if (m == 0.0) throw ZeroQuaternion{};
    const double q1 = q.r / m, q2 = q.i / m, q3 = q.j / m, q4 = q.k / m;

    PolarHypercomplex p;
    p.magnitude = m;
    p.alpha = std::atan2(2.0 * (q3 * q4 + q1 * q2),
                         q1 * q1 + q3 * q3 - (q2 * q2 + q4 * q4)) / (4.0 * pi);
    p.beta = std::atan2(2.0 * (q2 * q4 + q1 * q3),
                        q1 * q1 + q2 * q2 - (q3 * q3 + q4 * q4)) / (4.0 * pi);
    double s = 2.0 * (q2 * q3 - q1 * q4);
    s = std::max(-1.0, std::min(1.0, s));
    p.gamma = -std::asin(s) / (4.0 * pi);

    // The angle formulas are blind to the sign of q; recover it here.
    PolarHypercomplex unit = p;
    unit.magnitude = 1.0;
    const Quaternion rec = from_polar_hypercomplex(unit);
    if (rec.r * q1 + rec.i * q2 + rec.j * q3 + rec.k * q4 < 0.0) {
        p.alpha += (p.alpha > 0.0) ? -0.5 : 0.5;
        if (p.alpha == -0.5) p.alpha = 0.5;
    }
    return p;
}

// Monogenic polar: q = amplitude * e^{2*pi*e_nu*phi} for q with zero k part.
// phi is in cycles in [0, 1/2]; nu = atan2(j, i) picks the representative
// with sin(2*pi*phi) >= 0. orientation_defined is false when i = j = 0, in
// which case phi is 0 or 1/2 by the sign of the real part.
struct PolarMonogenic {
    double amplitude{};
    double nu{};
    double phi{};
    bool orientation_defined{true};
};

inline PolarMonogenic polar_monogenic(const Quaternion& q, double pure_floor = 0.0) {
    PolarMonogenic p;
    const double rho = std::hypot(q.i, q.j);
    p.amplitude = std::hypot(q.r, rho);
    if (rho <= pure_floor) {
        p.orientation_defined = false;
        p.nu = 0.0;
        p.phi = (q.r >= 0.0) ? 0.0 : 0.5;
        p.amplitude = std::abs(q.r);
        return p;
    }
    p.nu = std::atan2(q.j, q.i);
    p.phi = std::atan2(rho, q.r) / two_pi;
    return p;
}

inline Quaternion from_polar_monogenic(const PolarMonogenic& p) {
    const double c = std::cos(two_pi * p.phi), s = std::sin(two_pi * p.phi);
    return {p.amplitude * c, p.amplitude * s * std::cos(p.nu), p.amplitude * s * std::sin(p.nu), 0};
}

} // namespace hw
