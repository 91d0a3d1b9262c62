#include "diskspec/eigenfunctions.hpp"

#include <cmath>
#include <limits>

#include "diskspec/errors.hpp"
#include "diskspec/special_functions.hpp"

namespace diskspec {

BivarPoly rodrigues_eigenfunction(std::uint32_t p, std::uint32_t q) {
    if (p == 0 || q == 0) throw InputError("Rodrigues eigenfunction needs p, q >= 1");
    const std::uint32_t degree = p + q - 1;
    BivarPoly body = pow(BivarPoly::one_minus_zzbar(), degree);
    body = diff(body, Variable::Z, q);
    body = diff(body, Variable::ZBar, p);
    Rational prefactor(Integer(p % 2 == 0 ? 1 : -1), Integer(q) * factorial(degree));
    prefactor.canonicalize();
    return prefactor * (BivarPoly::one_minus_zzbar() * body);
}

BivarPoly eigenfunction(std::uint32_t p, std::uint32_t q) {
    if (q == 0) return BivarPoly::monomial({p, 0});
    if (p == 0) return BivarPoly{};
    return rodrigues_eigenfunction(p, q);
}

bool check_eigen_equation(std::uint32_t p, std::uint32_t q) {
    const BivarPoly u = rodrigues_eigenfunction(p, q);
    return apply_laplacian(u) == Rational(Integer(p) * q) * u;
}

Rational PolarForm::radial_at(const Rational& r) const {
    Rational acc(0);
    for (auto it = radial.rbegin(); it != radial.rend(); ++it) acc = acc * r + *it;
    return acc;
}

double PolarForm::radial_at(double r) const {
    double acc = 0.0;
    for (auto it = radial.rbegin(); it != radial.rend(); ++it) acc = acc * r + to_double(*it);
    return acc;
}

PolarForm polar_form(std::uint32_t p, std::uint32_t q) {
    if (p == 0 || q == 0) throw InputError("polar form needs p, q >= 1");
    const std::uint32_t m = p > q ? p - q : q - p;
    const std::uint32_t nu = std::min(p, q) - 1;

    // inner sum over j in powers of r^2
    std::vector<Rational> inner(nu + 1);
    for (std::uint32_t j = 0; j <= nu; ++j) {
        Rational c(factorial(j + nu + m + 1), factorial(j) * factorial(j + m) * factorial(nu - j));
        c.canonicalize();
        inner[j] = (j % 2 == 0) ? c : Rational(-c);
    }
    const bool negative = (q + nu + 1) % 2 == 1;
    Rational prefactor(Integer(negative ? -1 : 1), Integer(q));
    prefactor.canonicalize();

    PolarForm out;
    out.angular = std::int64_t{p} - std::int64_t{q};
    out.radial.assign(m + 2 * nu + 3, Rational(0));
    // (1 - r^2) r^m sum_j inner[j] r^{2j}
    for (std::uint32_t j = 0; j <= nu; ++j) {
        out.radial[m + 2 * j] += prefactor * inner[j];
        out.radial[m + 2 * j + 2] -= prefactor * inner[j];
    }
    return out;
}

RadialJet polynomial_jet(std::span<const Rational> coeffs) {
    std::vector<double> c;
    c.reserve(coeffs.size());
    for (const auto& v : coeffs) c.push_back(to_double(v));
    return [c = std::move(c)](double r) {
        std::array<double, 3> jet{0.0, 0.0, 0.0};
        for (std::size_t k = c.size(); k-- > 0;) {
            jet[2] = jet[2] * r + 2.0 * jet[1];
            jet[1] = jet[1] * r + jet[0];
            jet[0] = jet[0] * r + c[k];
        }
        return jet;
    };
}

double radial_ode_residual(const RadialJet& f, std::uint32_t n, double lambda, double r) {
    if (!(r > 0.0 && r < 1.0)) throw InputError("radial residual needs 0 < r < 1");
    const auto [f0, f1, f2] = f(r);
    const double s = 1.0 - r * r;
    const double nn = static_cast<double>(n) * n;
    return r * r * s * f2 + r * s * f1 + (4.0 * lambda * r * r - nn * s) * f0;
}

RadialSolution RadialSolution::make(std::uint32_t n, double lambda) {
    const double nd = n;
    const double root = std::sqrt(nd * nd + 4.0 * lambda);
    return {n, lambda, (nd + root) / 2.0, (nd - root) / 2.0, nd + 1.0};
}

double RadialSolution::evaluate(double r) const {
    if (!(r >= 0.0 && r <= 1.0)) throw InputError("radius must lie in [0, 1]");
    return std::pow(r, n) * hypergeometric_2f1(a, b, c, r * r);
}

std::optional<std::uint64_t> integer_root_index(std::uint32_t n, double lambda) {
    if (!(lambda > 0.0) || lambda > 1e15) return std::nullopt;
    const double nd = n;
    const double estimate = (-nd + std::sqrt(nd * nd + 4.0 * lambda)) / 2.0;
    const auto m = static_cast<std::uint64_t>(std::llround(estimate));
    if (m == 0) return std::nullopt;
    if (static_cast<double>(m * (m + n)) == lambda) return m;
    return std::nullopt;
}

namespace {

double boundary_value_unchecked(std::uint32_t n, double lambda) {
    if (integer_root_index(n, lambda)) return 0.0;
    const RadialSolution sol = RadialSolution::make(n, lambda);
    return std::tgamma(static_cast<double>(n) + 1.0) * reciprocal_gamma(1.0 + sol.a) * reciprocal_gamma(1.0 + sol.b);
}

int sign(double v) { return (v > 0.0) - (v < 0.0); }

}  // namespace

double boundary_value(std::uint32_t n, double lambda) {
    if (!(lambda > 0.0)) throw InputError("boundary value needs lambda > 0");
    return boundary_value_unchecked(n, lambda);
}

std::vector<double> locate_spectrum(std::uint32_t n, double lambda_max, const SpectrumScanOptions& options) {
    if (!(lambda_max > 0.0)) throw InputError("lambda_max must be positive");
    if (!(options.step > 0.0)) throw InputError("scan step must be positive");
    const auto cells = static_cast<long>(std::ceil(lambda_max / options.step - 1e-9));
    auto grid = [&](long i) { return lambda_max * static_cast<double>(i) / static_cast<double>(cells); };
    auto f = [&](double lambda) { return boundary_value_unchecked(n, lambda); };

    auto bisect = [&](double lo, double hi, double flo) {
        while (hi - lo > options.root_tolerance) {
            const double mid = 0.5 * (lo + hi);
            const double fm = f(mid);
            if (fm == 0.0) return mid;
            if (sign(fm) == sign(flo)) {
                lo = mid;
                flo = fm;
            } else {
                hi = mid;
            }
        }
        return 0.5 * (lo + hi);
    };

    std::vector<double> roots;
    double x0 = 0.0;
    double f0 = f(0.0);
    for (long i = 1; i <= cells; ++i) {
        const double x1 = grid(i);
        const double f1 = f(x1);
        if (f1 == 0.0) roots.push_back(x1);
        if (f0 != 0.0 && f1 != 0.0) {
            const double xm = 0.5 * (x0 + x1);
            const double fm = f(xm);
            const bool left = sign(f0) != sign(fm);
            const bool right = sign(fm) != sign(f1);
            if (fm == 0.0) {
                if (sign(f0) == sign(f1)) throw ScanResolutionError("scan cell may hold two roots near " + std::to_string(xm));
                roots.push_back(xm);
            } else if (left && right) {
                throw ScanResolutionError("two roots in scan cell [" + std::to_string(x0) + ", " + std::to_string(x1) + "]");
            } else if (left) {
                roots.push_back(bisect(x0, xm, f0));
            } else if (right) {
                roots.push_back(bisect(xm, x1, fm));
            }
        }
        x0 = x1;
        f0 = f1;
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::uint64_t divisor_count(std::uint64_t n) {
    if (n == 0) throw InputError("divisor_count needs n >= 1");
    std::uint64_t count = 0;
    for (std::uint64_t d = 1; d <= n / d; ++d) {
        if (n % d == 0) count += (d == n / d) ? 1 : 2;
    }
    return count;
}

std::vector<SpectrumEntry> spectrum_table(std::uint64_t lambda_max) {
    std::vector<SpectrumEntry> rows;
    for (std::uint64_t l = 1; l <= lambda_max; ++l) rows.push_back({l, divisor_count(l)});
    return rows;
}

std::vector<EigenBasisMember> eigenspace_basis(std::uint64_t lambda) {
    if (lambda == 0) throw InputError("eigenvalue must be positive");
    if (lambda > std::numeric_limits<std::uint32_t>::max()) throw InputError("eigenvalue too large");
    std::vector<EigenBasisMember> basis;
    for (std::uint64_t p = 1; p <= lambda; ++p) {
        if (lambda % p != 0) continue;
        const auto pp = static_cast<std::uint32_t>(p);
        const auto qq = static_cast<std::uint32_t>(lambda / p);
        basis.push_back({{pp, qq}, rodrigues_eigenfunction(pp, qq)});
    }
    return basis;
}

double spectral_zeta_partial(double s, std::uint64_t terms) {
    if (terms == 0) throw InputError("need at least one term");
    double sum = 0.0;
    for (std::uint64_t n = terms; n >= 1; --n) {
        sum += static_cast<double>(divisor_count(n)) * std::pow(static_cast<double>(n), -s);
    }
    return sum;
}

Rational spectral_zeta_partial_exact(std::uint32_t s, std::uint64_t terms) {
    if (terms == 0) throw InputError("need at least one term");
    Rational sum(0);
    for (std::uint64_t n = 1; n <= terms; ++n) {
        Integer denom;
        mpz_ui_pow_ui(denom.get_mpz_t(), n, s);
        Rational term(Integer(static_cast<unsigned long>(divisor_count(n))), denom);
        term.canonicalize();
        sum += term;
    }
    return sum;
}

bool harmonic_closure(std::uint64_t n, std::uint64_t m) {
    if (n == 0) throw InputError("harmonic closure needs n >= 1");
    if (m < 2) throw InputError("harmonic closure needs m >= 2");
    if (m > (std::uint64_t{1} << 20) || n > std::numeric_limits<std::uint64_t>::max() / (m * m)) {
        throw InputError("m^2 n overflows");
    }
    const std::uint64_t lambda = m * m * n;
    const double omega = static_cast<double>(m) * std::sqrt(static_cast<double>(n));
    const double root = std::sqrt(static_cast<double>(lambda));
    return divisor_count(lambda) >= 1 && std::abs(omega - root) <= 1e-12 * root;
}

}  // namespace diskspec
