#include "diskspec/verify.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "diskspec/eigenfunctions.hpp"
#include "diskspec/errors.hpp"
#include "diskspec/geodesics.hpp"

namespace diskspec::verify {

std::string SuiteResult::summary() const {
    return name + ": " + std::to_string(passed) + "/" + std::to_string(total) + (ok() ? " exact" : " FAILED");
}

namespace {

void record(SuiteResult& r, bool pass, std::string label, const Rational& expected, const Rational& got) {
    ++r.total;
    if (pass) {
        ++r.passed;
        return;
    }
    r.mismatches.push_back({std::move(label), Rational(0), expected, got, r.name});
}

Rational as_rational(double v) { return std::isfinite(v) ? Rational(v) : Rational(-1); }

}  // namespace

SuiteResult eigen_suite() {
    SuiteResult r;
    r.name = "eigen";
    for (std::uint32_t p = 1; p <= 8; ++p) {
        for (std::uint32_t q = 1; q <= 8; ++q) {
            const BivarPoly u = rodrigues_eigenfunction(p, q);
            const BivarPoly lhs = apply_laplacian(u);
            const bool pass = lhs == Rational(Integer(p) * q) * u;
            record(r, pass, "eigen(" + std::to_string(p) + ";" + std::to_string(q) + ")", Rational(Integer(p) * q),
                   Rational(0));
        }
    }
    return r;
}

SuiteResult spectrum_suite() {
    SuiteResult r;
    r.name = "spectrum";
    // integer spectrum per angular order
    for (std::uint32_t n = 0; n <= 2; ++n) {
        std::vector<double> expected;
        for (std::uint64_t m = 1; m * (m + n) <= 20; ++m) expected.push_back(static_cast<double>(m * (m + n)));
        const auto roots = locate_spectrum(n, 20.0);
        bool pass = roots.size() == expected.size();
        for (std::size_t i = 0; pass && i < roots.size(); ++i) pass = std::abs(roots[i] - expected[i]) <= 1e-6;
        record(r, pass, "spectrum(n=" + std::to_string(n) + ")", Rational(static_cast<long>(expected.size())),
               Rational(static_cast<long>(roots.size())));
    }
    // multiplicities with distinct angular indices
    for (std::uint64_t lambda = 1; lambda <= 100; ++lambda) {
        const auto basis = eigenspace_basis(lambda);
        bool pass = basis.size() == divisor_count(lambda);
        for (std::size_t i = 0; pass && i + 1 < basis.size(); ++i) {
            pass = basis[i].index.angular_index() != basis[i + 1].index.angular_index();
        }
        record(r, pass, "multiplicity(" + std::to_string(lambda) + ")",
               Rational(static_cast<long>(divisor_count(lambda))), Rational(static_cast<long>(basis.size())));
    }
    // Dirichlet convolution identity
    for (std::uint32_t s = 1; s <= 3; ++s) {
        const std::uint64_t terms = 60;
        Rational convolution(0);
        for (std::uint64_t a = 1; a <= terms; ++a) {
            for (std::uint64_t b = 1; a * b <= terms; ++b) {
                Integer d;
                mpz_ui_pow_ui(d.get_mpz_t(), a * b, s);
                convolution += Rational(Integer(1), d);
            }
        }
        const Rational lhs = spectral_zeta_partial_exact(s, terms);
        record(r, lhs == convolution, "dirichlet(s=" + std::to_string(s) + ")", convolution, lhs);
    }
    for (std::uint64_t n = 1; n <= 50; ++n) {
        for (std::uint64_t m = 2; m <= 10; ++m) {
            record(r, harmonic_closure(n, m), "harmonic(" + std::to_string(n) + ";" + std::to_string(m) + ")",
                   Rational(1), Rational(0));
        }
    }
    return r;
}

SuiteResult geodesic_suite() {
    SuiteResult r;
    r.name = "geodesic";
    for (std::uint64_t q = 1; q <= 6; ++q) {
        for (std::uint64_t p = 1; p <= q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            const ClosedGeodesic cg{p, q};
            const HypocycloidGeodesic curve(to_double(cg.a()));
            const double period = cg.length();
            const auto start = curve.state(0.0);
            const auto end = curve.state(period);
            const double gap = std::abs(end.position - start.position) + std::abs(end.velocity - start.velocity);
            record(r, gap <= 1e-9, "closure(" + std::to_string(p) + ";" + std::to_string(q) + ")", Rational(0),
                   as_rational(gap));
            double worst_res = 0.0, worst_speed = 0.0;
            for (int i = 0; i < 100; ++i) {
                const double t = period * (i + 0.5) / 100.0;
                const auto st = curve.state(t);
                if (std::abs(st.position) > 1.0 - 1e-4) continue;
                worst_res = std::max(worst_res, std::abs(geodesic_residual(st)));
                worst_speed = std::max(worst_speed, std::abs(g_speed(st) - 1.0));
            }
            record(r, worst_res <= 1e-9 && worst_speed <= 1e-10,
                   "geodesic(" + std::to_string(p) + ";" + std::to_string(q) + ")", Rational(0),
                   as_rational(std::max(worst_res, worst_speed)));
        }
    }
    bool psi_ok = true;
    for (std::uint64_t n = 1; n <= 10000; ++n) {
        std::uint64_t distinct = 0, m = n;
        for (std::uint64_t d = 2; d <= m / d; ++d) {
            if (m % d == 0) {
                ++distinct;
                while (m % d == 0) m /= d;
            }
        }
        if (m > 1) ++distinct;
        const std::uint64_t formula = n == 1 ? 1 : (std::uint64_t{1} << (distinct - 1));
        const std::uint64_t got = psi(n);
        if (got != formula) {
            psi_ok = false;
            r.mismatches.push_back({"psi(" + std::to_string(n) + ")", Rational(0), Rational(static_cast<long>(formula)),
                                    Rational(static_cast<long>(got)), r.name});
        }
    }
    ++r.total;
    if (psi_ok) ++r.passed;
    return r;
}

SuiteResult scatter_suite() {
    SuiteResult r;
    r.name = "scatter";
    const std::vector<Rational> values{make_rational(1, 2), make_rational(-1, 3), make_rational(1, 4)};
    auto run_one = [&](const LayeredMedium& medium, const Rational& horizon) {
        const auto report = oracle::compare_green_vs_oracles(medium, horizon);
        ++r.total;
        if (report.ok()) ++r.passed;
        r.mismatches.insert(r.mismatches.end(), report.mismatches.begin(), report.mismatches.end());
    };
    for (std::size_t n = 1; n <= 3; ++n) {
        std::vector<std::size_t> idx(n, 0);
        while (true) {
            std::vector<Rational> R;
            for (auto i : idx) R.push_back(values[i]);
            run_one(LayeredMedium(std::vector<Rational>(n, Rational(1)), R), Rational(8));
            std::size_t pos = 0;
            while (pos < n && ++idx[pos] == values.size()) idx[pos++] = 0;
            if (pos == n) break;
        }
    }
    run_one(LayeredMedium({Rational(1), make_rational(1, 2)}, {make_rational(1, 2), make_rational(1, 3)}), Rational(4));
    run_one(LayeredMedium({Rational(1), make_rational(1, 2), make_rational(1, 2)},
                          {make_rational(1, 3), make_rational(-1, 2), make_rational(1, 4)}),
            Rational(4));
    return r;
}

std::vector<SuiteResult> run(const std::string& suite) {
    if (suite == "eigen") return {eigen_suite()};
    if (suite == "spectrum") return {spectrum_suite()};
    if (suite == "geodesic") return {geodesic_suite()};
    if (suite == "scatter") return {scatter_suite()};
    if (suite == "all") return {eigen_suite(), spectrum_suite(), geodesic_suite(), scatter_suite()};
    throw InputError("unknown verification suite '" + suite + "'");
}

}  // namespace diskspec::verify
