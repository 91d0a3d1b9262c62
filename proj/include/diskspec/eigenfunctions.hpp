#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "diskspec/bivar_poly.hpp"
#include "diskspec/rational.hpp"

namespace diskspec {

// Index (p, q) of an eigenfunction u^(p,q).
//   p, q >= 1 : Rodrigues eigenfunction, eigenvalue pq
//   q == 0    : monomial z^p (harmonic, includes u^(0,0) = 1)
//   p == 0    : identically zero for q >= 1
struct EigenIndex {
    std::uint32_t p = 0;
    std::uint32_t q = 0;

    std::uint64_t eigenvalue() const { return std::uint64_t{p} * q; }
    std::int64_t angular_index() const { return std::int64_t{p} - std::int64_t{q}; }
    auto operator<=>(const EigenIndex&) const = default;
};

// (-1)^p / (q (p+q-1)!) (1 - z zbar) d^{p+q}/(dzbar^p dz^q) (1 - z zbar)^{p+q-1}.
// Throws InputError if p or q is zero.
BivarPoly rodrigues_eigenfunction(std::uint32_t p, std::uint32_t q);

// Full dispatch over EigenIndex, including the q = 0 and p = 0 conventions.
BivarPoly eigenfunction(std::uint32_t p, std::uint32_t q);

// Exact check of apply_laplacian(u) == pq u for p, q >= 1.
bool check_eigen_equation(std::uint32_t p, std::uint32_t q);

// u^(p,q)(r e^{i theta}) = e^{i angular theta} * sum_k radial[k] r^k.
struct PolarForm {
    std::int64_t angular = 0;
    std::vector<Rational> radial;

    Rational radial_at(const Rational& r) const;
    double radial_at(double r) const;
};

// Closed-form polar expansion from the finite factorial sum, independent of
// the Rodrigues construction. Requires p, q >= 1.
PolarForm polar_form(std::uint32_t p, std::uint32_t q);

// Value and first two derivatives of a radial profile f(r).
using RadialJet = std::function<std::array<double, 3>(double)>;

// Jet of the polynomial sum_k coeffs[k] r^k.
RadialJet polynomial_jet(std::span<const Rational> coeffs);

// r^2(1-r^2) f'' + r(1-r^2) f' + (4 lambda r^2 - n^2 (1-r^2)) f.
// Requires 0 < r < 1.
double radial_ode_residual(const RadialJet& f, std::uint32_t n, double lambda, double r);

// Hypergeometric parameters of the radial reduction f(r) = r^n g(r^2).
struct RadialSolution {
    std::uint32_t n = 0;
    double lambda = 0.0;
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;

    static RadialSolution make(std::uint32_t n, double lambda);
    // g(r^2) r^n, the regular solution evaluated at radius r.
    double evaluate(double r) const;
};

// The positive integer m with lambda == m (m + n), if one exists.
std::optional<std::uint64_t> integer_root_index(std::uint32_t n, double lambda);

// n! / (Gamma(1+a) Gamma(1+b)), the regular solution at r = 1. Returns
// exactly 0 when lambda = m(m+n) for a positive integer m.
double boundary_value(std::uint32_t n, double lambda);

struct SpectrumScanOptions {
    double step = 0.01;
    double root_tolerance = 1e-9;
};

// Zeros of lambda -> boundary_value(n, lambda) in (0, lambda_max], sorted.
// Throws ScanResolutionError when a scan cell shows evidence of two roots.
std::vector<double> locate_spectrum(std::uint32_t n, double lambda_max, const SpectrumScanOptions& options = {});

// tau(n) by trial division up to sqrt(n). Throws InputError for n == 0.
std::uint64_t divisor_count(std::uint64_t n);

struct SpectrumEntry {
    std::uint64_t lambda = 0;
    std::uint64_t multiplicity = 0;
};

std::vector<SpectrumEntry> spectrum_table(std::uint64_t lambda_max);

struct EigenBasisMember {
    EigenIndex index;
    BivarPoly poly;
};

// {u^(p,q) : pq = lambda}, ordered by increasing p.
std::vector<EigenBasisMember> eigenspace_basis(std::uint64_t lambda);

// sum_{n <= terms} tau(n) / n^s. Throws InputError for terms == 0.
double spectral_zeta_partial(double s, std::uint64_t terms);
Rational spectral_zeta_partial_exact(std::uint32_t s, std::uint64_t terms);

// True when m sqrt(n) = sqrt(m^2 n) is an eigenfrequency, i.e. m^2 n is a
// positive integer eigenvalue. Requires n >= 1 and m >= 2.
bool harmonic_closure(std::uint64_t n, std::uint64_t m);

}  // namespace diskspec
