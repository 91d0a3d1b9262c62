// diskspec: command-line access to the disk eigenfunctions, geodesics and
// layered-medium Green's function.
//
// Exit codes: 0 success, 1 verification failure, 2 input error, 3 resource guard.

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>

#include <CLI11.hpp>

#include "diskspec/eigenfunctions.hpp"
#include "diskspec/errors.hpp"
#include "diskspec/geodesics.hpp"
#include "diskspec/io.hpp"
#include "diskspec/oracle.hpp"
#include "diskspec/scattering.hpp"
#include "diskspec/verify.hpp"

namespace {

using namespace diskspec;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInput = 2;
constexpr int kExitGuard = 3;

// Writes to the file at `path`, or stdout when it is empty.
class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw InputError("cannot open output file '" + path + "'");
        }
    }
    std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

private:
    std::ofstream file_;
};

ExactComplex parse_point(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) return {parse_rational(text), Rational(0)};
    return {parse_rational(text.substr(0, comma)), parse_rational(text.substr(comma + 1))};
}

struct EigenArgs {
    long p = -1;
    long q = -1;
    std::string at;
    bool check = false;
};

int cmd_eigen(const EigenArgs& args) {
    if (args.p < 0 || args.q < 0 || args.p > 64 || args.q > 64) throw InputError("eigen indices must lie in 0..64");
    const auto p = static_cast<std::uint32_t>(args.p);
    const auto q = static_cast<std::uint32_t>(args.q);
    const BivarPoly u = eigenfunction(p, q);
    std::cout << to_json(u).dump() << '\n';
    if (!args.at.empty()) {
        const ExactComplex v = eval(u, parse_point(args.at));
        std::cout << "value " << to_string(v.re) << ' ' << to_string(v.im) << '\n';
    }
    if (args.check) {
        const Rational lambda(Integer(p) * q);
        const bool exact = apply_laplacian(u) == lambda * u;
        std::cout << "eigenvalue " << to_string(lambda) << ": " << (exact ? "exact" : "MISMATCH") << '\n';
        if (!exact) return kExitVerifyFailed;
    }
    return kExitOk;
}

struct SpectrumArgs {
    long max = 0;
    std::optional<double> zeta;
    long terms = 100000;
    bool exact = false;
};

int cmd_spectrum(const SpectrumArgs& args) {
    if (args.max < 0) throw InputError("--max must be >= 1");
    if (args.max == 0 && !args.zeta) throw InputError("spectrum needs --max and/or --zeta");
    if (args.max > 0) io::write_spectrum_csv(std::cout, spectrum_table(static_cast<std::uint64_t>(args.max)));
    if (args.zeta) {
        const double s = *args.zeta;
        if (!(s > 1.0) && !args.exact) throw InputError("--zeta needs s > 1 in numeric mode");
        if (args.terms < 1) throw InputError("--terms must be >= 1");
        const auto terms = static_cast<std::uint64_t>(args.terms);
        if (args.exact) {
            if (s != std::round(s) || s < 1.0) throw InputError("exact mode needs a positive integer s");
            std::cout << "zeta_partial_exact," << to_string(spectral_zeta_partial_exact(static_cast<std::uint32_t>(s), terms))
                      << '\n';
        }
        if (s > 1.0) {
            const double partial = spectral_zeta_partial(s, terms);
            const double zeta = std::riemann_zeta(s);
            std::cout << "zeta_partial," << io::format_double(partial) << '\n';
            std::cout << "zeta_squared," << io::format_double(zeta * zeta) << '\n';
            std::cout << "gap," << io::format_double(zeta * zeta - partial) << '\n';
        }
    }
    return kExitOk;
}

struct GeodesicArgs {
    std::string a;
    long p = 0;
    long q = 0;
    long closed = 0;
    long samples = 1000;
    long arcs = 0;
    std::string output;
};

int cmd_geodesic(const GeodesicArgs& args) {
    Output out(args.output);
    if (args.closed > 0) {
        const auto n = static_cast<std::uint64_t>(args.closed);
        io::write_closed_geodesics_csv(out.stream(), n, closed_geodesics_of_length(n));
        return kExitOk;
    }
    Rational a;
    if (!args.a.empty()) {
        a = parse_rational(args.a);
    } else if (args.p > 0 && args.q > 0) {
        a = Rational(Integer(args.p), Integer(args.p + args.q));
        a.canonicalize();
    } else {
        throw InputError("geodesic needs --a, --p/--q, or --closed");
    }
    if (!(a > 0 && a < 1)) throw InputError("a must lie in (0, 1)");
    if (args.samples < 2) throw InputError("--samples must be >= 2");
    // a = p/m in lowest terms closes after m cusp-to-cusp arcs
    long arcs = args.arcs;
    if (arcs <= 0) arcs = a.get_den() <= 1000 ? static_cast<long>(a.get_den().get_si()) : 1;
    const HypocycloidGeodesic curve(to_double(a));
    io::write_polyline_csv(out.stream(), curve, curve.arc_period() * static_cast<double>(arcs),
                           static_cast<std::uint64_t>(args.samples));
    return kExitOk;
}

struct GreensArgs {
    std::string medium;
    std::string horizon;
    bool exact = false;
    std::string output;
};

int cmd_greens(const GreensArgs& args) {
    const LayeredMedium medium = io::read_medium(args.medium);
    const Rational horizon = parse_rational(args.horizon);
    if (horizon < 0) throw InputError("horizon must be nonnegative");
    const SpikeTrain train = greens_function(medium, horizon);
    Output out(args.output);
    io::write_spikes_csv(out.stream(), train, args.exact);
    return kExitOk;
}

struct VerifyArgs {
    std::string suite = "all";
    std::string report;
};

int cmd_verify(const VerifyArgs& args) {
    const auto results = verify::run(args.suite);
    bool ok = true;
    std::vector<oracle::Mismatch> mismatches;
    for (const auto& r : results) {
        std::cerr << r.summary() << '\n';
        ok = ok && r.ok();
        mismatches.insert(mismatches.end(), r.mismatches.begin(), r.mismatches.end());
    }
    if (ok) {
        std::cout << "verify " << args.suite << ": pass\n";
        return kExitOk;
    }
    Output out(args.report);
    out.stream() << oracle::mismatch_csv(mismatches);
    return kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral geometry of the disk metric 4/(1-r^2)(dx^2+dy^2) and layered-medium echoes"};
    app.require_subcommand(1);

    EigenArgs eigen_args;
    auto* eigen = app.add_subcommand("eigen", "Print the eigenfunction u^(p,q) as JSON");
    eigen->add_option("--p", eigen_args.p, "first index (>= 0)")->required();
    eigen->add_option("--q", eigen_args.q, "second index (>= 0)")->required();
    eigen->add_option("--at", eigen_args.at, "exact evaluation point \"x\" or \"x,y\" (rationals)");
    eigen->add_flag("--check", eigen_args.check, "verify Delta u = pq u exactly");

    SpectrumArgs spectrum_args;
    auto* spectrum = app.add_subcommand("spectrum", "Eigenvalue multiplicity table and spectral zeta sums");
    spectrum->add_option("--max", spectrum_args.max, "largest eigenvalue in the table");
    spectrum->add_option("--zeta", spectrum_args.zeta, "exponent s of sum tau(n) n^-s");
    spectrum->add_option("--terms", spectrum_args.terms, "number of terms of the zeta sum");
    spectrum->add_flag("--exact", spectrum_args.exact, "exact rational partial sum (integer s)");

    GeodesicArgs geodesic_args;
    auto* geodesic = app.add_subcommand("geodesic", "Hypocycloid polylines and closed-geodesic tables");
    geodesic->add_option("--a", geodesic_args.a, "rolling radius in (0,1), e.g. 1/3");
    geodesic->add_option("--p", geodesic_args.p, "with --q: a = p/(p+q)");
    geodesic->add_option("--q", geodesic_args.q, "with --p: a = p/(p+q)");
    geodesic->add_option("--closed", geodesic_args.closed, "list closed geodesics of length 4 pi sqrt(n)");
    geodesic->add_option("--samples", geodesic_args.samples, "polyline sample count");
    geodesic->add_option("--arcs", geodesic_args.arcs, "number of cusp-to-cusp arcs (default: until closed)");
    geodesic->add_option("-o,--output", geodesic_args.output, "output CSV path (default stdout)");

    GreensArgs greens_args;
    auto* greens = app.add_subcommand("greens", "Boundary Green's function of a layered medium as spikes");
    greens->add_option("--medium", greens_args.medium, "medium JSON file")->required();
    greens->add_option("--horizon", greens_args.horizon, "largest arrival time (rational)")->required();
    greens->add_flag("--exact", greens_args.exact, "add exact time_exact,amp_exact columns");
    greens->add_option("-o,--output", greens_args.output, "output CSV path (default stdout)");

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "Run the built-in verification suites");
    verify_cmd->add_option("--suite", verify_args.suite, "all|eigen|spectrum|geodesic|scatter");
    verify_cmd->add_option("--report", verify_args.report, "mismatch CSV path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (*eigen) return cmd_eigen(eigen_args);
        if (*spectrum) return cmd_spectrum(spectrum_args);
        if (*geodesic) return cmd_geodesic(geodesic_args);
        if (*greens) return cmd_greens(greens_args);
        if (*verify_cmd) return cmd_verify(verify_args);
    } catch (const GuardExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitGuard;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitInput;
}
