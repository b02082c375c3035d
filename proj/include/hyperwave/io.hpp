#pragma once

#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>
#include <variant>

#include "hyperwave/errors.hpp"
#include "hyperwave/field.hpp"

namespace hw {

// HWF1 field file: ASCII header "HWF1 <KIND> <H> <W>\n" followed by 1, 2 or 4
// row-major little-endian float64 planes.
enum class FieldKind { Real, Complex, Quaternion };

namespace detail {

static_assert(sizeof(double) == 8, "float64 planes");

inline void write_plane(std::ostream& os, const RealField& f) {
    os.write(reinterpret_cast<const char*>(f.data.data()),
             static_cast<std::streamsize>(f.data.size() * sizeof(double)));
}

inline void read_plane(std::istream& is, RealField& f) {
    is.read(reinterpret_cast<char*>(f.data.data()),
            static_cast<std::streamsize>(f.data.size() * sizeof(double)));
    if (!is) throw BadFieldFile("truncated plane data");
}

inline void write_header(std::ostream& os, FieldKind kind, int H, int W) {
    const char* k = kind == FieldKind::Real ? "REAL" : kind == FieldKind::Complex ? "CPLX" : "QUAT";
    os << "HWF1 " << k << ' ' << H << ' ' << W << '\n';
}

struct Header {
    FieldKind kind;
    int H, W;
};

inline Header read_header(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw BadFieldFile("missing header");
    std::istringstream hs(line);
    std::string magic, kind;
    Header h{};
    if (!(hs >> magic >> kind >> h.H >> h.W) || magic != "HWF1")
        throw BadFieldFile("bad header: " + line);
    if (kind == "REAL")
        h.kind = FieldKind::Real;
    else if (kind == "CPLX")
        h.kind = FieldKind::Complex;
    else if (kind == "QUAT")
        h.kind = FieldKind::Quaternion;
    else
        throw BadFieldFile("unknown field kind: " + kind);
    if (h.H < 2 || h.W < 2) throw BadFieldFile("bad dimensions");
    return h;
}

} // namespace detail

inline void write_field(const std::string& path, const RealField& f) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw BadFieldFile("cannot open " + path);
    detail::write_header(os, FieldKind::Real, f.H, f.W);
    detail::write_plane(os, f);
}

inline void write_field(const std::string& path, const ComplexField& f) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw BadFieldFile("cannot open " + path);
    detail::write_header(os, FieldKind::Complex, f.H, f.W);
    RealField re(f.H, f.W), im(f.H, f.W);
    for (std::size_t n = 0; n < f.data.size(); ++n) {
        re.data[n] = f.data[n].real();
        im.data[n] = f.data[n].imag();
    }
    detail::write_plane(os, re);
    detail::write_plane(os, im);
}

inline void write_field(const std::string& path, const QuaternionField& f) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw BadFieldFile("cannot open " + path);
    detail::write_header(os, FieldKind::Quaternion, f.H(), f.W());
    for (int u = 0; u < 4; ++u) detail::write_plane(os, f.plane(u));
}

using AnyField = std::variant<RealField, ComplexField, QuaternionField>;

inline AnyField read_field(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw BadFieldFile("cannot open " + path);
    const detail::Header h = detail::read_header(is);
    switch (h.kind) {
        case FieldKind::Real: {
            RealField f(h.H, h.W);
            detail::read_plane(is, f);
            return f;
        }
        case FieldKind::Complex: {
            RealField re(h.H, h.W), im(h.H, h.W);
            detail::read_plane(is, re);
            detail::read_plane(is, im);
            ComplexField f(h.H, h.W);
            for (std::size_t n = 0; n < f.data.size(); ++n) f.data[n] = {re.data[n], im.data[n]};
            return f;
        }
        default: {
            QuaternionField f(h.H, h.W);
            for (int u = 0; u < 4; ++u) detail::read_plane(is, f.plane(u));
            return f;
        }
    }
}

inline RealField read_real_field(const std::string& path) {
    AnyField f = read_field(path);
    if (auto* r = std::get_if<RealField>(&f)) return *r;
    throw BadFieldFile(path + " is not a REAL field");
}

inline QuaternionField read_quaternion_field(const std::string& path) {
    AnyField f = read_field(path);
    if (auto* q = std::get_if<QuaternionField>(&f)) return *q;
    throw BadFieldFile(path + " is not a QUAT field");
}

// PGM (P5) input, 8- or 16-bit, scaled to [0,1].
inline RealField read_pgm(const std::string& path, bool remove_mean = true) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw BadFieldFile("cannot open " + path);
    std::string magic;
    is >> magic;
    if (magic != "P5") throw BadFieldFile("unsupported PGM variant: " + magic);
    auto next_int = [&is, &path]() {
        // skip whitespace and '#' comments
        for (;;) {
            int c = is.peek();
            if (c == '#') {
                std::string junk;
                std::getline(is, junk);
            } else if (std::isspace(c)) {
                is.get();
            } else {
                break;
            }
            if (!is) throw BadFieldFile("truncated PGM header in " + path);
        }
        long v = 0;
        is >> v;
        return v;
    };
    const long W = next_int(), H = next_int(), maxval = next_int();
    if (maxval <= 0 || maxval > 65535) throw BadFieldFile("bad PGM maxval");
    is.get(); // single whitespace before raster
    RealField f(static_cast<int>(H), static_cast<int>(W));
    const bool wide = maxval > 255;
    std::vector<unsigned char> raw(static_cast<std::size_t>(H) * W * (wide ? 2 : 1));
    is.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
    if (!is) throw BadFieldFile("truncated PGM raster");
    for (std::size_t n = 0; n < static_cast<std::size_t>(H) * W; ++n) {
        const unsigned v = wide ? (raw[2 * n] << 8 | raw[2 * n + 1]) : raw[n];
        f.data[n] = static_cast<double>(v) / maxval;
    }
    if (remove_mean) {
        double mean = 0;
        for (double v : f.data) mean += v;
        mean /= static_cast<double>(f.data.size());
        for (double& v : f.data) v -= mean;
    }
    return f;
}

// RFC 4180 CSV writer: comma separated, CRLF line ends, header row.
class CsvWriter {
public:
    explicit CsvWriter(const std::string& path) : os_(path, std::ios::binary) {
        if (!os_) throw BadFieldFile("cannot open " + path);
    }
    void row(const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) os_ << ',';
            os_ << cells[i];
        }
        os_ << "\r\n";
    }

private:
    std::ofstream os_;
};

} // namespace hw
