// hyperwave: quaternionic wavelet analysis of 2-D fields.
//
// Subcommands: synth, wavelet, cwt, ridge, polar, verify. See README.md.

#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperwave/hyperwave.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace hw;

namespace {

constexpr double kDeg = pi / 180.0;

struct KindOptions {
    std::string name = "iso-mono";
    int n = 0, n2 = 0;
    double beta = 9.0, gamma = 4.0;
    double l = 9.0, m = 4.0;
    bool anti = false;

    void attach(CLI::App* cmd) {
        cmd->add_option("--kind", name,
                        "wavelet family: sep-hyper, iso-hyper, iso-mono, dir-mono, hyper-dir")
            ->check(CLI::IsMember({"sep-hyper", "iso-hyper", "iso-mono", "dir-mono", "hyper-dir"}));
        cmd->add_option("--order", n, "Morse order n (first index for sep-hyper)");
        cmd->add_option("--order2", n2, "second Morse order for sep-hyper");
        cmd->add_option("--beta", beta, "Morse beta (1-D families)");
        cmd->add_option("--gamma", gamma, "Morse gamma (1-D families)");
        cmd->add_option("--ell", l, "Morse l (isotropic families)");
        cmd->add_option("--em", m, "Morse m (isotropic families)");
        cmd->add_flag("--anti", anti, "anti-monogenic sign for monogenic families");
    }

    WaveletKind build() const {
        const int sign = anti ? -1 : +1;
        WaveletKind k;
        if (name == "sep-hyper")
            k = WaveletKind::separable_hypercomplexing(n, n2, beta, gamma);
        else if (name == "iso-hyper")
            k = WaveletKind::isotropic_hypercomplexing(n, l, m);
        else if (name == "iso-mono")
            k = WaveletKind::isotropic_monogenic(n, l, m, sign);
        else if (name == "dir-mono")
            k = WaveletKind::directional_monogenic(n, beta, gamma, sign);
        else
            k = WaveletKind::hypercomplex_directional(n, beta, gamma);
        if (!k.symmetric_separable())
            std::cerr << "warning: separable orders n1 != n2 break the index-symmetry "
                         "admissibility condition\n";
        return k;
    }

    json to_json() const {
        return {{"kind", name},   {"order", n},   {"order2", n2}, {"beta", beta},
                {"gamma", gamma}, {"ell", l},     {"em", m},      {"anti", anti}};
    }
    static KindOptions from_json(const json& j) {
        KindOptions o;
        o.name = j.at("kind");
        o.n = j.at("order");
        o.n2 = j.at("order2");
        o.beta = j.at("beta");
        o.gamma = j.at("gamma");
        o.l = j.at("ell");
        o.m = j.at("em");
        o.anti = j.at("anti");
        return o;
    }
};

RealField run_generator(const std::string& spec, int H, int W) {
    const auto colon = spec.find(':');
    const std::string kind = spec.substr(0, colon);
    std::vector<double> arg;
    if (colon != std::string::npos) {
        std::istringstream ss(spec.substr(colon + 1));
        std::string tok;
        while (std::getline(ss, tok, ',')) arg.push_back(std::stod(tok));
    }
    auto get = [&](std::size_t i, double dflt) { return i < arg.size() ? arg[i] : dflt; };
    if (kind == "planewave") {
        const double f0 = get(0, 0.08);
        if (!(f0 > 0 && f0 < 0.5)) throw CLI::ValidationError("planewave: f0 outside (0, 0.5)");
        return plane_wave(H, W, f0, get(1, 0.0) * kDeg, get(2, 1.0));
    }
    if (kind == "separable") {
        const double f1 = get(0, 0.06), f2 = get(1, 0.11);
        if (!(f1 > 0 && f1 < 0.5 && f2 > 0 && f2 < 0.5))
            throw CLI::ValidationError("separable: frequencies outside (0, 0.5)");
        return separable_wave(H, W, f1, f2, get(2, 0.0) * kDeg, get(3, 1.0));
    }
    if (kind == "chirp") return radial_chirp(H, W, get(0, 0.02), get(1, 0.2), get(2, 1.0));
    if (kind == "noise")
        return gaussian_noise(H, W, static_cast<std::uint64_t>(get(0, 1)), get(1, 1.0));
    throw CLI::ValidationError("unknown generator: " + kind);
}

std::string fmt(double v) {
    std::ostringstream ss;
    ss << std::setprecision(17) << v;
    return ss.str();
}

int cmd_synth(const std::vector<std::string>& gens, int H, int W, const std::string& out) {
    RealField g(H, W, 0.0);
    for (const auto& spec : gens) g += run_generator(spec, H, W);
    write_field(out, g);
    return 0;
}

int cmd_wavelet(const KindOptions& opt, double a, double theta_deg, int window,
                const std::string& out) {
    const WaveletKind kind = opt.build();
    const int N = window > 0 ? window : default_window(kind, a);
    const LocalityIndex xi{a, theta_deg * kDeg, N / 2.0, N / 2.0};
    write_field(out, spatial_field(kind, xi, N));
    std::cout << "wrote " << out << " (" << N << "x" << N << ")\n";
    return 0;
}

int cmd_cwt(const KindOptions& opt, const std::string& in, const std::string& outdir,
            double amin, double amax, int voices, int n_angles, bool keep_mean) {
    const WaveletKind kind = opt.build();
    RealField g = [&] {
        if (in.size() > 4 && in.substr(in.size() - 4) == ".pgm") return read_pgm(in, !keep_mean);
        return read_real_field(in);
    }();
    if (amax <= 0) amax = std::min(g.H, g.W) / 6.0;
    LocalityGrid grid = LocalityGrid::log_scales(amin, amax, voices, n_angles);
    if (kind.isotropic_envelope() && n_angles <= 1) grid.angles = {0.0};

    auto slabs = cwt(g, kind, grid);
    fs::create_directories(outdir);
    json manifest;
    manifest["input"] = in;
    manifest["height"] = g.H;
    manifest["width"] = g.W;
    manifest["wavelet"] = opt.to_json();
    manifest["scales"] = grid.scales;
    manifest["angles"] = grid.angles;
    json jslabs = json::array();
    for (std::size_t i = 0; i < slabs.size(); ++i) {
        std::ostringstream name;
        name << "slab_" << std::setw(4) << std::setfill('0') << i << ".hwf";
        write_field((fs::path(outdir) / name.str()).string(), slabs[i].w);
        jslabs.push_back({{"a", slabs[i].a}, {"theta", slabs[i].theta}, {"file", name.str()}});
    }
    manifest["slabs"] = jslabs;
    std::ofstream(fs::path(outdir) / "manifest.json") << manifest.dump(2) << '\n';
    std::cout << "wrote " << slabs.size() << " slabs to " << outdir << "\n";
    return 0;
}

int cmd_ridge(const std::string& manifest_path, double threshold, const std::string& out) {
    json manifest;
    std::ifstream(manifest_path) >> manifest;
    const fs::path dir = fs::path(manifest_path).parent_path();
    const KindOptions opt = KindOptions::from_json(manifest.at("wavelet"));
    const WaveletKind kind = opt.build();

    std::vector<CoefficientSlab> slabs;
    for (const auto& js : manifest.at("slabs")) {
        CoefficientSlab s;
        s.a = js.at("a");
        s.theta = js.at("theta");
        s.w = read_quaternion_field((dir / js.at("file").get<std::string>()).string());
        slabs.push_back(std::move(s));
    }
    std::vector<RidgePoint> points = kind.monogenic()
                                         ? monogenic_ridge(slabs, kind, threshold)
                                         : hypercomplex_ridge(slabs, kind, threshold);

    CsvWriter csv(out);
    csv.row({"b1", "b2", "a", "theta", "amplitude", "nu", "alpha", "beta", "freq1", "freq2",
             "gamma_score"});
    for (const RidgePoint& p : points) {
        if (kind.monogenic())
            csv.row({std::to_string(p.b1), std::to_string(p.b2), fmt(p.a), fmt(p.theta),
                     fmt(p.amplitude), p.has_orientation ? fmt(p.nu) : "", "", "", fmt(p.freq1),
                     fmt(p.freq2), ""});
        else
            csv.row({std::to_string(p.b1), std::to_string(p.b2), fmt(p.a), fmt(p.theta),
                     fmt(p.amplitude), "", fmt(p.alpha), fmt(p.beta), fmt(p.freq1), fmt(p.freq2),
                     fmt(p.gamma_score)});
    }
    std::cout << "wrote " << points.size() << " ridge points to " << out << "\n";
    return 0;
}

int cmd_polar(const std::string& in, const std::string& mode, const std::string& prefix) {
    QuaternionField q = read_quaternion_field(in);
    const int H = q.H(), W = q.W();
    if (mode == "hyper") {
        RealField mag(H, W), alpha(H, W), beta(H, W), gamma(H, W);
        for (int x1 = 0; x1 < H; ++x1)
            for (int x2 = 0; x2 < W; ++x2) {
                const Quaternion v = q.at(x1, x2);
                if (v.norm() == 0.0) continue;
                const PolarHypercomplex p = polar_hypercomplex(v);
                mag.at(x1, x2) = p.magnitude;
                alpha.at(x1, x2) = p.alpha;
                beta.at(x1, x2) = p.beta;
                gamma.at(x1, x2) = p.gamma;
            }
        write_field(prefix + ".magnitude.hwf", mag);
        write_field(prefix + ".alpha.hwf", alpha);
        write_field(prefix + ".beta.hwf", beta);
        write_field(prefix + ".gamma.hwf", gamma);
    } else {
        RealField amp(H, W), nu(H, W), phi(H, W), mask(H, W);
        double peak = 0;
        for (int x1 = 0; x1 < H; ++x1)
            for (int x2 = 0; x2 < W; ++x2)
                peak = std::max(peak, std::hypot(q.i.at(x1, x2), q.j.at(x1, x2)));
        for (int x1 = 0; x1 < H; ++x1)
            for (int x2 = 0; x2 < W; ++x2) {
                const PolarMonogenic p = polar_monogenic(q.at(x1, x2), 1e-12 * peak);
                amp.at(x1, x2) = p.amplitude;
                nu.at(x1, x2) = p.orientation_defined ? p.nu : 0.0;
                phi.at(x1, x2) = p.phi;
                mask.at(x1, x2) = p.orientation_defined ? 1.0 : 0.0;
            }
        write_field(prefix + ".amplitude.hwf", amp);
        write_field(prefix + ".nu.hwf", nu);
        write_field(prefix + ".phi.hwf", phi);
        write_field(prefix + ".mask.hwf", mask);
    }
    std::cout << "wrote polar planes with prefix " << prefix << "\n";
    return 0;
}

int cmd_verify(int size, std::uint64_t seed, const std::string& report_path) {
    RealField g = band_limited_noise(size, size, seed, 0.06, 0.22);
    const std::vector<double> scales{3.0, 5.5};
    const std::vector<double> thetas{0.0, pi / 6, pi / 3};
    const double tol = 1e-9;

    json report;
    report["field"] = {{"size", size}, {"seed", seed}, {"band", {0.06, 0.22}}};
    report["tolerance"] = tol;
    report["thetas"] = thetas;
    report["scales"] = scales;
    double worst = 0;

    {
        IdentityReport rep =
            verify_identities(g, WaveletKind::isotropic_monogenic(0, 9, 4), scales, thetas);
        report["monogenic"] = {{"extension_route", rep.m1_extension_route},
                               {"anti_annihilation", rep.m2_annihilation},
                               {"plus_conversion", rep.m2_plus_conversion},
                               {"half_identity", rep.m3_half}};
        worst = std::max(worst, rep.max_residual());
    }
    for (const char* name : {"iso-hyper", "sep-hyper"}) {
        const WaveletKind kind = std::string(name) == "iso-hyper"
                                     ? WaveletKind::isotropic_hypercomplexing(0, 9, 4)
                                     : WaveletKind::separable_hypercomplexing(0, 0, 9, 4);
        IdentityReport rep = verify_identities(g, kind, scales, thetas);
        report[name] = {{"even_route", rep.h1_even_route},
                        {"extension_route", rep.h1_extension_route},
                        {"split_sum", rep.h2_split_sum},
                        {"anti_cancellation", rep.h2_cancellation},
                        {"conversion", rep.h2_conversion}};
        worst = std::max(worst, rep.max_residual());
    }
    report["max_residual"] = worst;
    report["pass"] = worst <= tol;
    if (report_path.empty()) {
        std::cout << report.dump(2) << '\n';
    } else {
        std::ofstream(report_path) << report.dump(2) << '\n';
        std::cout << "max residual " << worst << (worst <= tol ? " (pass)" : " (FAIL)") << "\n";
    }
    return worst <= tol ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"quaternionic wavelet analysis of 2-D fields"};
    app.require_subcommand(1);

    // synth
    auto* synth = app.add_subcommand("synth", "generate a synthetic field");
    std::vector<std::string> gens;
    int height = 128, width = 0;
    std::string out = "field.hwf";
    synth->add_option("--gen", gens,
                      "generator spec, repeatable (summed): planewave:f0,phi0_deg,amp | "
                      "separable:f1,f2,theta_deg,amp | chirp:flo,fhi,amp | noise:seed,sigma")
        ->required();
    synth->add_option("--size", height, "field height (and width unless --width)");
    synth->add_option("--width", width, "field width");
    synth->add_option("-o,--out", out, "output HWF1 file");

    // wavelet
    auto* wav = app.add_subcommand("wavelet", "render a wavelet family member");
    KindOptions wav_kind;
    wav_kind.attach(wav);
    double wav_a = 3.0, wav_theta = 0.0;
    int wav_window = 0;
    std::string wav_out = "wavelet.hwf";
    wav->add_option("--scale", wav_a, "scale a (samples)");
    wav->add_option("--theta", wav_theta, "rotation (degrees)");
    wav->add_option("--window", wav_window, "render window (0 = automatic)");
    wav->add_option("-o,--out", wav_out, "output HWF1 file");

    // cwt
    auto* tr = app.add_subcommand("cwt", "forward transform over a locality grid");
    KindOptions tr_kind;
    tr_kind.attach(tr);
    std::string tr_in, tr_outdir = "slabs";
    double tr_amin = 4.0, tr_amax = 0.0, tr_threshold = 0.05;
    int tr_voices = 8, tr_angles = 16;
    bool tr_keepmean = false;
    tr->add_option("-i,--in", tr_in, "input field (.hwf REAL or .pgm)")->required();
    tr->add_option("--outdir", tr_outdir, "output directory for slabs + manifest");
    tr->add_option("--scales", tr_amin, "smallest scale (samples)");
    tr->add_option("--scales-max", tr_amax, "largest scale (0 = min(H,W)/6)");
    tr->add_option("--voices", tr_voices, "voices per octave");
    tr->add_option("--angles", tr_angles, "rotation count over the full turn");
    tr->add_flag("--keep-mean", tr_keepmean, "do not remove the PGM mean");
    (void)tr_threshold;

    // ridge
    auto* rd = app.add_subcommand("ridge", "extract oscillation descriptors from slabs");
    std::string rd_manifest = "slabs/manifest.json", rd_out = "ridges.csv";
    double rd_threshold = 0.05;
    rd->add_option("--manifest", rd_manifest, "slab manifest from the cwt command");
    rd->add_option("--threshold", rd_threshold, "fraction of the global magnitude maximum");
    rd->add_option("-o,--out", rd_out, "output CSV");

    // polar
    auto* pl = app.add_subcommand("polar", "polar decomposition planes of a QUAT field");
    std::string pl_in, pl_mode = "hyper", pl_prefix = "polar";
    pl->add_option("-i,--in", pl_in, "input HWF1 QUAT field")->required();
    pl->add_option("--mode", pl_mode, "hyper or mono")->check(CLI::IsMember({"hyper", "mono"}));
    pl->add_option("-o,--out", pl_prefix, "output file prefix");

    // verify
    auto* vf = app.add_subcommand("verify", "coefficient identity suite; exit 0 iff clean");
    int vf_size = 64;
    std::uint64_t vf_seed = 17;
    std::string vf_report;
    vf->add_option("--size", vf_size, "test field size");
    vf->add_option("--seed", vf_seed, "test field seed");
    vf->add_option("--report", vf_report, "write the JSON report here instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (synth->parsed()) return cmd_synth(gens, height, width > 0 ? width : height, out);
        if (wav->parsed()) return cmd_wavelet(wav_kind, wav_a, wav_theta, wav_window, wav_out);
        if (tr->parsed())
            return cmd_cwt(tr_kind, tr_in, tr_outdir, tr_amin, tr_amax, tr_voices, tr_angles,
                           tr_keepmean);
        if (rd->parsed()) return cmd_ridge(rd_manifest, rd_threshold, rd_out);
        if (pl->parsed()) return cmd_polar(pl_in, pl_mode, pl_prefix);
        if (vf->parsed()) return cmd_verify(vf_size, vf_seed, vf_report);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
