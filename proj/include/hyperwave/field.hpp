#pragma once

#include <cassert>
#include <complex>
#include <vector>

#include "hyperwave/quat.hpp"

namespace hw {

// Sampled 2-D field, row-major over (x1, x2) with x1 the row index.
// Unit sample spacing.
template <class T>
struct Field {
    int H{}, W{};
    std::vector<T> data;

    Field() = default;
    Field(int h, int w, T fill = T{}) : H(h), W(w), data(static_cast<std::size_t>(h) * w, fill) {
        assert(h >= 2 && w >= 2);
    }

    T& at(int x1, int x2) { return data[static_cast<std::size_t>(x1) * W + x2]; }
    const T& at(int x1, int x2) const { return data[static_cast<std::size_t>(x1) * W + x2]; }

    std::size_t size() const { return data.size(); }

    Field& operator+=(const Field& o) {
        for (std::size_t n = 0; n < data.size(); ++n) data[n] += o.data[n];
        return *this;
    }
    Field& operator-=(const Field& o) {
        for (std::size_t n = 0; n < data.size(); ++n) data[n] -= o.data[n];
        return *this;
    }
    Field& operator*=(T s) {
        for (auto& v : data) v *= s;
        return *this;
    }
};

using RealField = Field<double>;
using ComplexField = Field<std::complex<double>>;

// Four co-indexed real planes.
struct QuaternionField {
    RealField r, i, j, k;

    QuaternionField() = default;
    QuaternionField(int h, int w) : r(h, w), i(h, w), j(h, w), k(h, w) {}

    int H() const { return r.H; }
    int W() const { return r.W; }

    Quaternion at(int x1, int x2) const {
        return {r.at(x1, x2), i.at(x1, x2), j.at(x1, x2), k.at(x1, x2)};
    }
    void set(int x1, int x2, const Quaternion& q) {
        r.at(x1, x2) = q.r;
        i.at(x1, x2) = q.i;
        j.at(x1, x2) = q.j;
        k.at(x1, x2) = q.k;
    }

    RealField& plane(int u) { return u == 0 ? r : u == 1 ? i : u == 2 ? j : k; }
    const RealField& plane(int u) const { return u == 0 ? r : u == 1 ? i : u == 2 ? j : k; }
};

inline double linf_norm(const RealField& f) {
    double m = 0;
    for (double v : f.data) m = std::max(m, std::abs(v));
    return m;
}

inline double l2_norm(const RealField& f) {
    double s = 0;
    for (double v : f.data) s += v * v;
    return std::sqrt(s);
}

inline double inner(const RealField& a, const RealField& b) {
    double s = 0;
    for (std::size_t n = 0; n < a.data.size(); ++n) s += a.data[n] * b.data[n];
    return s;
}

inline double max_abs(const QuaternionField& q) {
    double m = 0;
    for (int x1 = 0; x1 < q.H(); ++x1)
        for (int x2 = 0; x2 < q.W(); ++x2) m = std::max(m, q.at(x1, x2).norm());
    return m;
}

inline double max_abs_diff(const QuaternionField& a, const QuaternionField& b) {
    double m = 0;
    for (int x1 = 0; x1 < a.H(); ++x1)
        for (int x2 = 0; x2 < a.W(); ++x2) m = std::max(m, (a.at(x1, x2) - b.at(x1, x2)).norm());
    return m;
}

// Exact quarter-turn rotation of periodic sample indices: out(x) = in(r_{-turns*pi/2} x).
// Square fields only for odd quarter turns.
template <class T>
Field<T> rotate_quarter(const Field<T>& in, int turns) {
    turns = ((turns % 4) + 4) % 4;
    if (turns == 0) return in;
    if (turns != 2) assert(in.H == in.W);
    Field<T> out(in.H, in.W);
    const int H = in.H, W = in.W;
    for (int x1 = 0; x1 < H; ++x1)
        for (int x2 = 0; x2 < W; ++x2) {
            int y1, y2; // source index r_{-theta} x, theta = turns*pi/2
            switch (turns) {
                case 1: y1 = x2; y2 = (H - x1) % H; break;          // (x2, -x1)
                case 2: y1 = (H - x1) % H; y2 = (W - x2) % W; break; // (-x1, -x2)
                default: y1 = (W - x2) % W; y2 = x1; break;          // (-x2, x1)
            }
            out.at(x1, x2) = in.at(y1, y2);
        }
    return out;
}

} // namespace hw
