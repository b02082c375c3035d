#pragma once

#include <stdexcept>
#include <string>

namespace hw {

struct ZeroQuaternion : std::domain_error {
    ZeroQuaternion() : std::domain_error("polar decomposition of zero quaternion") {}
};

struct NonpositiveScale : std::domain_error {
    explicit NonpositiveScale(double y)
        : std::domain_error("nonpositive kernel scale y=" + std::to_string(y)) {}
};

struct OrderTooLarge : std::domain_error {
    explicit OrderTooLarge(int n)
        : std::domain_error("Laguerre series order n=" + std::to_string(n) + " exceeds 12") {}
};

struct ScaleOutOfRange : std::out_of_range {
    ScaleOutOfRange(double a, double lo, double hi)
        : std::out_of_range("scale a=" + std::to_string(a) + " outside [" + std::to_string(lo) +
                            ", " + std::to_string(hi) + "]") {}
};

struct WindowTooSmall : std::runtime_error {
    WindowTooSmall(int n, double boundary_fraction)
        : std::runtime_error("render window N=" + std::to_string(n) + " leaves " +
                             std::to_string(boundary_fraction) + " of wavelet energy on the boundary") {}
};

struct SeriesNonconvergent : std::runtime_error {
    SeriesNonconvergent() : std::runtime_error("hypergeometric series exceeded 10^4 terms") {}
};

struct DivergentIntegral : std::runtime_error {
    DivergentIntegral() : std::runtime_error("admissibility quadrature failed to converge") {}
};

struct GridTooCoarse : std::runtime_error {
    explicit GridTooCoarse(const std::string& what) : std::runtime_error(what) {}
};

struct UnsupportedRotation : std::invalid_argument {
    explicit UnsupportedRotation(double theta)
        : std::invalid_argument("sampled-field rotation theta=" + std::to_string(theta) +
                                " is not a quarter turn") {}
};

struct NoRidge : std::runtime_error {
    NoRidge() : std::runtime_error("no coefficient exceeds the ridge threshold") {}
};

struct BadFieldFile : std::runtime_error {
    explicit BadFieldFile(const std::string& what) : std::runtime_error(what) {}
};

} // namespace hw
