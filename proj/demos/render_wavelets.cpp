// Renders the Morse wavelet families from the figures as HWF1 fields, one
// file per family, for plotting with external tools.

#include <iostream>

#include "hyperwave/hyperwave.hpp"

int main() {
    using namespace hw;
    struct Entry {
        const char* name;
        WaveletKind kind;
    };
    const Entry entries[] = {
        {"separable_hypercomplexing", WaveletKind::separable_hypercomplexing(0, 0, 9, 4)},
        {"isotropic_hypercomplexing", WaveletKind::isotropic_hypercomplexing(0, 9, 4)},
        {"isotropic_monogenic", WaveletKind::isotropic_monogenic(0, 9, 4)},
        {"directional_monogenic", WaveletKind::directional_monogenic(0, 9, 4)},
        {"hypercomplex_directional", WaveletKind::hypercomplex_directional(0, 9, 4)},
    };
    const double a = 3.0;
    for (const Entry& e : entries) {
        const int N = default_window(e.kind, a);
        QuaternionField w = spatial_field(e.kind, LocalityIndex{a, 0.0, N / 2.0, N / 2.0}, N);
        const std::string file = std::string(e.name) + ".hwf";
        write_field(file, w);
        std::cout << file << ": " << N << "x" << N << "\n";
    }
    return 0;
}
