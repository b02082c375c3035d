#include <catch2/catch_amalgamated.hpp>

#include "hyperwave/spectral.hpp"
#include "hyperwave/synth.hpp"
#include "oracles.hpp"

using namespace hw;

TEST_CASE("frequency grid conventions") {
    FreqGrid g(8, 5);
    CHECK(g.f1(0) == 0.0);
    CHECK(g.f1(3) == Catch::Approx(3.0 / 8));
    CHECK(g.f1(4) == Catch::Approx(-0.5));
    CHECK(g.f1(7) == Catch::Approx(-1.0 / 8));
    CHECK(g.f2(2) == Catch::Approx(2.0 / 5));
    CHECK(g.f2(3) == Catch::Approx(-2.0 / 5));
    CHECK(g.sgn1(0) == 0);
    CHECK(g.sgn1(4) == 0); // Nyquist
    CHECK(g.sgn1(1) == 1);
    CHECK(g.sgn1(5) == -1);
}

TEST_CASE("partial Hilbert transform maps cos to sin") {
    const int N = 32;
    RealField g(N, N);
    for (int x1 = 0; x1 < N; ++x1)
        for (int x2 = 0; x2 < N; ++x2) g.at(x1, x2) = std::cos(two_pi * 3.0 * x1 / N);
    RealField h = filter_real(g, Multiplier::HilbertPartial1);
    double err = 0;
    for (int x1 = 0; x1 < N; ++x1)
        for (int x2 = 0; x2 < N; ++x2)
            err = std::max(err, std::abs(h.at(x1, x2) - std::sin(two_pi * 3.0 * x1 / N)));
    CHECK(err < 1e-11);
}

TEST_CASE("total Hilbert transform maps cc to ss") {
    const int N = 32;
    RealField g = separable_wave(N, N, 3.0 / N, 5.0 / N);
    RealField h = filter_real(g, Multiplier::HilbertTotal);
    double err = 0;
    for (int x1 = 0; x1 < N; ++x1)
        for (int x2 = 0; x2 < N; ++x2)
            err = std::max(err, std::abs(h.at(x1, x2) - std::sin(two_pi * 3.0 * x1 / N) *
                                                            std::sin(two_pi * 5.0 * x2 / N)));
    CHECK(err < 1e-11);
}

TEST_CASE("Riesz transform of a commensurate plane wave") {
    const int N = 40;
    // orientation atan2(3,4): bins +-(4,3) sit on the integer lattice
    const double nu = std::atan2(3.0, 4.0);
    const double f0 = 5.0 / N;
    RealField g = plane_wave(N, N, f0, nu);
    RealField r1 = filter_real(g, Multiplier::Riesz1);
    RealField r2 = filter_real(g, Multiplier::Riesz2);
    double err = 0;
    for (int x1 = 0; x1 < N; ++x1)
        for (int x2 = 0; x2 < N; ++x2) {
            const double s = std::sin(two_pi * f0 * (x1 * std::cos(nu) + x2 * std::sin(nu)));
            err = std::max(err, std::abs(r1.at(x1, x2) - std::cos(nu) * s));
            err = std::max(err, std::abs(r2.at(x1, x2) - std::sin(nu) * s));
        }
    CHECK(err < 1e-11);
}

TEST_CASE("multiplier output is real for real input") {
    RealField g = gaussian_noise(16, 16, 99); // full-band input incl. Nyquist content
    const FreqGrid grid(16, 16);
    const ComplexField G = fft2(g);
    for (Multiplier m : {Multiplier::HilbertPartial1, Multiplier::HilbertPartial2,
                         Multiplier::HilbertTotal, Multiplier::Riesz1, Multiplier::Riesz2}) {
        ComplexField filtered = ifft2(apply_multiplier(G, m, grid));
        CHECK(max_imag(filtered) < 1e-11 * linf_norm(g) * 16);
    }
}

TEST_CASE("orthogonality and norms of the transforms") {
    RealField g = band_limited_noise(48, 48, 21, 0.06, 0.4, /*avoid_axes=*/false);
    const double n2 = inner(g, g);

    SECTION("Riesz components") {
        RealField r1 = filter_real(g, Multiplier::Riesz1);
        RealField r2 = filter_real(g, Multiplier::Riesz2);
        CHECK(std::abs(inner(r1, g)) <= 1e-10 * n2);
        CHECK(std::abs(inner(r2, g)) <= 1e-10 * n2);
        CHECK(inner(r1, r1) + inner(r2, r2) == Catch::Approx(n2).epsilon(1e-10));
        // generic field: the two components are not mutually orthogonal
        CHECK(std::abs(inner(r1, r2)) > 1e-6 * n2);
    }
    SECTION("Hilbert components") {
        // exclude the f_l = 0 lines the odd multipliers annihilate
        RealField gq = band_limited_noise(48, 48, 22, 0.06, 0.4, /*avoid_axes=*/true);
        const double nq = inner(gq, gq);
        for (Multiplier m : {Multiplier::HilbertPartial1, Multiplier::HilbertPartial2,
                             Multiplier::HilbertTotal}) {
            RealField h = filter_real(gq, m);
            CHECK(std::abs(inner(h, gq)) <= 1e-10 * nq);
            CHECK(inner(h, h) == Catch::Approx(nq).epsilon(1e-10));
        }
    }
    SECTION("isotropic input decouples the Riesz pair") {
        const int N = 64;
        RealField iso(N, N);
        for (int x1 = 0; x1 < N; ++x1)
            for (int x2 = 0; x2 < N; ++x2) {
                const double d1 = std::min(x1, N - x1), d2 = std::min(x2, N - x2);
                const double r2d = d1 * d1 + d2 * d2;
                iso.at(x1, x2) = std::exp(-r2d / 36.0) * std::cos(0.9 * std::sqrt(r2d));
            }
        RealField r1 = filter_real(iso, Multiplier::Riesz1);
        RealField r2 = filter_real(iso, Multiplier::Riesz2);
        CHECK(std::abs(inner(r1, r2)) <= 1e-10 * inner(iso, iso));
        CHECK(inner(r1, r1) == Catch::Approx(0.5 * inner(iso, iso)).epsilon(1e-6));
    }
}

namespace {

// fixed band-limited periodic test function on the unit torus; modes are
// low-order so every grid resolves them
RealField physical_field(int N) {
    RealField g(N, N);
    for (int x1 = 0; x1 < N; ++x1)
        for (int x2 = 0; x2 < N; ++x2) {
            const double u = static_cast<double>(x1) / N, v = static_cast<double>(x2) / N;
            g.at(x1, x2) = std::cos(two_pi * (3 * u + 2 * v)) +
                           0.7 * std::sin(two_pi * (u - 4 * v)) +
                           0.4 * std::cos(two_pi * (2 * u + 2 * v) + 0.3);
        }
    return g;
}

// max residual of the hypercomplex generalized Cauchy-Riemann system at
// resolution N; everything in physical units on the unit torus
double hypercomplex_cr_residual(int N) {
    const double y = 0.04, h = 1.0 / N;
    const RealField g = physical_field(N);
    const double ys = y * N, dys = h * N;

    struct Set {
        RealField u, v1, v2, v3;
    };
    auto build = [&](double y1s, double y2s) {
        auto conv = [&](bool c1, bool c2) {
            RealField t = poisson_convolve_axis(g, y1s, c1, 1);
            return poisson_convolve_axis(t, y2s, c2, 2);
        };
        return Set{conv(false, false), conv(true, false), conv(false, true), conv(true, true)};
    };
    const Set mid = build(ys, ys);
    const Set y1p = build(ys + dys, ys), y1m = build(ys - dys, ys);
    const Set y2p = build(ys, ys + dys), y2m = build(ys, ys - dys);

    double res = 0;
    for (int x1 = 0; x1 < N; ++x1)
        for (int x2 = 0; x2 < N; ++x2) {
            auto dyq = [&](const Set& p, const Set& m, RealField Set::*f) {
                return ((p.*f).at(x1, x2) - (m.*f).at(x1, x2)) / (2.0 * h);
            };
            // Cauchy-Riemann in (x1, y1) for (u + j v2, v1 + j v3)
            const double e1 = dyq(y1p, y1m, &Set::u) + oracle::ddx(mid.v1, x1, x2, 1, h);
            const double e2 = dyq(y1p, y1m, &Set::v2) + oracle::ddx(mid.v3, x1, x2, 1, h);
            const double e3 = oracle::ddx(mid.u, x1, x2, 1, h) - dyq(y1p, y1m, &Set::v1);
            const double e4 = oracle::ddx(mid.v2, x1, x2, 1, h) - dyq(y1p, y1m, &Set::v3);
            // and in (x2, y2) for (u + j v1, v2 + j v3)
            const double e5 = dyq(y2p, y2m, &Set::u) + oracle::ddx(mid.v2, x1, x2, 2, h);
            const double e6 = dyq(y2p, y2m, &Set::v1) + oracle::ddx(mid.v3, x1, x2, 2, h);
            const double e7 = oracle::ddx(mid.u, x1, x2, 2, h) - dyq(y2p, y2m, &Set::v2);
            const double e8 = oracle::ddx(mid.v1, x1, x2, 2, h) - dyq(y2p, y2m, &Set::v3);
            for (double e : {e1, e2, e3, e4, e5, e6, e7, e8}) res = std::max(res, std::abs(e));
        }
    return res;
}

double riesz_cr_residual(int N) {
    const double y = 0.04, h = 1.0 / N;
    const RealField g = physical_field(N);
    const double ys = y * N, dys = h * N;

    struct Set {
        RealField u, v1, v2;
    };
    auto build = [&](double yy) {
        return Set{poisson_convolve(g, yy, PoissonKind::P, 2),
                   poisson_convolve(g, yy, PoissonKind::Q1, 2),
                   poisson_convolve(g, yy, PoissonKind::Q2, 2)};
    };
    const Set mid = build(ys), up = build(ys + dys), dn = build(ys - dys);

    double res = 0;
    for (int x1 = 0; x1 < N; ++x1)
        for (int x2 = 0; x2 < N; ++x2) {
            const double du_dy = (up.u.at(x1, x2) - dn.u.at(x1, x2)) / (2.0 * h);
            const double dv1_dy = (up.v1.at(x1, x2) - dn.v1.at(x1, x2)) / (2.0 * h);
            const double dv2_dy = (up.v2.at(x1, x2) - dn.v2.at(x1, x2)) / (2.0 * h);
            const double e1 =
                du_dy + oracle::ddx(mid.v1, x1, x2, 1, h) + oracle::ddx(mid.v2, x1, x2, 2, h);
            const double e2 = oracle::ddx(mid.u, x1, x2, 1, h) - dv1_dy;
            const double e3 = oracle::ddx(mid.u, x1, x2, 2, h) - dv2_dy;
            const double e4 =
                oracle::ddx(mid.v1, x1, x2, 2, h) - oracle::ddx(mid.v2, x1, x2, 1, h);
            for (double e : {e1, e2, e3, e4}) res = std::max(res, std::abs(e));
        }
    return res;
}

} // namespace

TEST_CASE("Poisson kernel normalization and limits") {
    SECTION("2-D kernel integrates to one") {
        for (double y : {0.3, 1.0, 2.5}) {
            const double val = oracle::simpson(
                [y](double r) { return two_pi * r * poisson_p_2d(r, 0.0, y); }, 0.0, 400.0 * y,
                200000);
            CHECK(val == Catch::Approx(1.0).epsilon(1e-6));
        }
    }
    SECTION("1-D kernel integrates to one") {
        for (double y : {0.3, 1.7}) {
            const double val = oracle::simpson([y](double x) { return poisson_p_1d(x, y); },
                                               -3000.0 * y, 3000.0 * y, 400000);
            CHECK(val == Catch::Approx(1.0).epsilon(1e-6));
        }
    }
    SECTION("p-convolution is near-identity at small y") {
        RealField g = band_limited_noise(96, 96, 4, 0.005, 0.03);
        RealField u = poisson_convolve(g, 0.25, PoissonKind::P, 2);
        RealField diff = u;
        diff -= g;
        CHECK(l2_norm(diff) < 0.05 * l2_norm(g));
    }
    SECTION("q-convolution tends to the Hilbert transform with known attenuation") {
        const int N = 64;
        const double f0 = 4.0 / N;
        RealField g(N, N);
        for (int x1 = 0; x1 < N; ++x1)
            for (int x2 = 0; x2 < N; ++x2) g.at(x1, x2) = std::cos(two_pi * f0 * x1);
        auto max_err = [&](double y) {
            RealField q = poisson_convolve(g, y, PoissonKind::Q1, 1);
            const double atten = std::exp(-two_pi * f0 * y);
            double err = 0;
            for (int x1 = 0; x1 < N; ++x1)
                err = std::max(err, std::abs(q.at(x1, 0) - atten * std::sin(two_pi * f0 * x1)));
            return err;
        };
        // resolved kernel: attenuation law to high accuracy
        CHECK(max_err(1.5) < 1e-3);
        // sub-sample y: the sampled kernel cannot beat its own aliasing
        CHECK(max_err(0.25) < 0.06);
    }
    SECTION("nonpositive scale rejected") {
        RealField g(4, 4, 1.0);
        CHECK_THROWS_AS(poisson_convolve(g, 0.0, PoissonKind::P, 2), NonpositiveScale);
        CHECK_THROWS_AS(poisson_convolve(g, -1.0, PoissonKind::Q1, 1), NonpositiveScale);
    }
}

TEST_CASE("generalized Cauchy-Riemann residuals vanish at second order") {
    SECTION("hypercomplex system") {
        const double r32 = hypercomplex_cr_residual(32);
        const double r64 = hypercomplex_cr_residual(64);
        const double r128 = hypercomplex_cr_residual(128);
        INFO("residuals " << r32 << " " << r64 << " " << r128);
        CHECK(std::log2(r32 / r64) >= 1.7);
        CHECK(std::log2(r64 / r128) >= 1.7);
    }
    SECTION("Riesz system") {
        const double r32 = riesz_cr_residual(32);
        const double r64 = riesz_cr_residual(64);
        const double r128 = riesz_cr_residual(128);
        INFO("residuals " << r32 << " " << r64 << " " << r128);
        CHECK(std::log2(r32 / r64) >= 1.7);
        CHECK(std::log2(r64 / r128) >= 1.7);
    }
}
