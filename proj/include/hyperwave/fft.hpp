#pragma once

#include <complex>
#include <map>
#include <mutex>
#include <tuple>
#include <vector>

#include <fftw3.h>

#include "hyperwave/field.hpp"

namespace hw {
namespace detail {

// FFTW planning is not thread-safe; execution of a cached plan on fresh
// arrays is. Plans use FFTW_ESTIMATE so the chosen algorithm (and hence the
// exact rounding) never depends on timing.
class FftwPlans {
public:
    static FftwPlans& instance() {
        static FftwPlans p;
        return p;
    }

    fftw_plan get(int H, int W, int sign) {
        std::lock_guard<std::mutex> lock(mutex_);
        auto key = std::make_tuple(H, W, sign);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        std::vector<std::complex<double>> scratch(static_cast<std::size_t>(H) * W);
        fftw_plan plan = fftw_plan_dft_2d(H, W,
                                          reinterpret_cast<fftw_complex*>(scratch.data()),
                                          reinterpret_cast<fftw_complex*>(scratch.data()),
                                          sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
        cache_.emplace(key, plan);
        return plan;
    }

private:
    FftwPlans() = default;
    std::mutex mutex_;
    std::map<std::tuple<int, int, int>, fftw_plan> cache_;
};

inline void execute(const ComplexField& in, ComplexField& out, int sign) {
    out.H = in.H;
    out.W = in.W;
    out.data = in.data; // in-place transform on the copy
    fftw_plan plan = FftwPlans::instance().get(in.H, in.W, sign);
    fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(out.data.data()),
                     reinterpret_cast<fftw_complex*>(out.data.data()));
}

} // namespace detail

// Unnormalized forward transform, kernel exp(-2*pi*j*f.x).
inline ComplexField fft2(const ComplexField& f) {
    ComplexField out;
    detail::execute(f, out, FFTW_FORWARD);
    return out;
}

inline ComplexField fft2(const RealField& f) {
    ComplexField c(f.H, f.W);
    for (std::size_t n = 0; n < f.data.size(); ++n) c.data[n] = f.data[n];
    return fft2(c);
}

// Inverse with 1/(H*W).
inline ComplexField ifft2(const ComplexField& f) {
    ComplexField out;
    detail::execute(f, out, FFTW_BACKWARD);
    const double s = 1.0 / (static_cast<double>(f.H) * f.W);
    for (auto& v : out.data) v *= s;
    return out;
}

inline RealField real_part(const ComplexField& f) {
    RealField out(f.H, f.W);
    for (std::size_t n = 0; n < f.data.size(); ++n) out.data[n] = f.data[n].real();
    return out;
}

inline double max_imag(const ComplexField& f) {
    double m = 0;
    for (const auto& v : f.data) m = std::max(m, std::abs(v.imag()));
    return m;
}

} // namespace hw
