#include <doctest.h>

#include <set>

#include "diskspec/eigenfunctions.hpp"
#include "diskspec/errors.hpp"

using namespace diskspec;

namespace {

BivarPoly mono(std::uint32_t a, std::uint32_t b, long num = 1, long den = 1) {
    return BivarPoly::monomial({a, b}, make_rational(num, den));
}

// Quotient of p by (1 - z zbar) when the division is exact.
// Each angular slice z^{s+d} zbar^s is a polynomial f(w) in w = z zbar, and
// f(w) = (1 - w) g(w) iff f(1) = 0, with g_k = f_0 + ... + f_k.
std::optional<BivarPoly> divide_by_one_minus_zzbar(const BivarPoly& p) {
    std::map<std::int64_t, std::map<std::uint32_t, Rational>> slices;
    for (const auto& [e, c] : p.terms()) {
        const std::uint32_t s = std::min(e.dz, e.dzbar);
        slices[std::int64_t{e.dz} - std::int64_t{e.dzbar}][s] = c;
    }
    BivarPoly quotient;
    for (const auto& [d, f] : slices) {
        const std::uint32_t top = f.rbegin()->first;
        Rational running(0);
        for (std::uint32_t k = 0; k <= top; ++k) {
            if (auto it = f.find(k); it != f.end()) running += it->second;
            if (k == top) {
                if (running != 0) return std::nullopt;
                break;
            }
            const std::uint32_t dz = d >= 0 ? k + static_cast<std::uint32_t>(d) : k;
            const std::uint32_t dzbar = d >= 0 ? k : k + static_cast<std::uint32_t>(-d);
            quotient += BivarPoly::monomial({dz, dzbar}, running);
        }
    }
    return quotient;
}

}  // namespace

// Reference polynomials below were expanded independently with a computer
// algebra system from the Rodrigues formula.
TEST_CASE("Rodrigues eigenfunctions for small indices") {
    CHECK(rodrigues_eigenfunction(1, 1) == BivarPoly::one_minus_zzbar());
    CHECK(rodrigues_eigenfunction(1, 2) == -(BivarPoly::one_minus_zzbar() * BivarPoly::zbar()));
    CHECK(rodrigues_eigenfunction(2, 1) == mono(1, 0, 2) * BivarPoly::one_minus_zzbar());
    CHECK(rodrigues_eigenfunction(2, 2) == mono(0, 0) + mono(1, 1, -4) + mono(2, 2, 3));
    CHECK(rodrigues_eigenfunction(3, 1) == mono(2, 0, 3) + mono(3, 1, -3));
    CHECK(rodrigues_eigenfunction(1, 3) == mono(0, 2) + mono(1, 3, -1));
    CHECK(rodrigues_eigenfunction(2, 3) == mono(0, 1, -2) + mono(1, 2, 6) + mono(2, 3, -4));
    CHECK(rodrigues_eigenfunction(3, 4) == mono(0, 1, -3) + mono(1, 2, 18) + mono(2, 3, -30) + mono(3, 4, 15));
    CHECK_THROWS_AS(rodrigues_eigenfunction(0, 2), InputError);
    CHECK_THROWS_AS(rodrigues_eigenfunction(3, 0), InputError);
}

TEST_CASE("eigenfunction dispatch conventions") {
    CHECK(eigenfunction(3, 0) == mono(3, 0));
    CHECK(eigenfunction(0, 2).is_zero());
    CHECK(eigenfunction(0, 0) == BivarPoly(Rational(1)));
    CHECK(eigenfunction(2, 5) == rodrigues_eigenfunction(2, 5));
}

TEST_CASE("exact eigen-equation for 1 <= p, q <= 8") {
    for (std::uint32_t p = 1; p <= 8; ++p) {
        for (std::uint32_t q = 1; q <= 8; ++q) {
            CAPTURE(p);
            CAPTURE(q);
            CHECK(check_eigen_equation(p, q));
        }
    }
}

TEST_CASE("a perturbed eigenfunction fails the eigen-equation") {
    const BivarPoly u = rodrigues_eigenfunction(2, 3) + mono(1, 0);
    CHECK_FALSE(apply_laplacian(u) == Rational(6) * u);
}

TEST_CASE("eigenfunctions vanish on the boundary circle") {
    for (std::uint32_t p = 1; p <= 7; ++p) {
        for (std::uint32_t q = 1; q <= 7; ++q) {
            const BivarPoly u = rodrigues_eigenfunction(p, q);
            const auto quotient = divide_by_one_minus_zzbar(u);
            REQUIRE(quotient.has_value());
            CHECK(BivarPoly::one_minus_zzbar() * *quotient == u);
        }
    }
    CHECK_FALSE(divide_by_one_minus_zzbar(mono(1, 0) + mono(0, 0)).has_value());
}

TEST_CASE("angular homogeneity and total degree") {
    for (std::uint32_t p = 1; p <= 8; ++p) {
        for (std::uint32_t q = 1; q <= 8; ++q) {
            const BivarPoly u = rodrigues_eigenfunction(p, q);
            CHECK(u.total_degree() == p + q);
            for (const auto& [e, c] : u.terms()) {
                CHECK(std::int64_t{e.dz} - std::int64_t{e.dzbar} == std::int64_t{p} - std::int64_t{q});
            }
        }
    }
}

TEST_CASE("polar form examples") {
    const PolarForm a = polar_form(1, 2);
    CHECK(a.angular == -1);
    // -r (1 - r^2)
    CHECK(a.radial == std::vector<Rational>{Rational(0), Rational(-1), Rational(0), Rational(1)});
    const PolarForm b = polar_form(2, 1);
    CHECK(b.angular == 1);
    CHECK(b.radial == std::vector<Rational>{Rational(0), Rational(2), Rational(0), Rational(-2)});
    const PolarForm c = polar_form(2, 2);
    CHECK(c.radial == std::vector<Rational>{Rational(1), Rational(0), Rational(-4), Rational(0), Rational(3)});
    CHECK_THROWS_AS(polar_form(0, 1), InputError);
}

TEST_CASE("polar form agrees with the Rodrigues polynomial") {
    const std::vector<Rational> radii{make_rational(1, 2), make_rational(1, 3), make_rational(5, 7), make_rational(-2, 9)};
    for (std::uint32_t p = 1; p <= 8; ++p) {
        for (std::uint32_t q = 1; q <= 8; ++q) {
            CAPTURE(p);
            CAPTURE(q);
            const BivarPoly u = rodrigues_eigenfunction(p, q);
            const PolarForm f = polar_form(p, q);
            CHECK(f.angular == std::int64_t{p} - std::int64_t{q});

            // structural: z^a zbar^b -> r^{a+b} e^{i(a-b) theta}
            std::vector<Rational> collected(f.radial.size() + 1, Rational(0));
            for (const auto& [e, c] : u.terms()) {
                REQUIRE(e.dz + e.dzbar < collected.size());
                collected[e.dz + e.dzbar] += c;
            }
            collected.resize(f.radial.size());
            CHECK(collected == f.radial);

            for (const auto& r : radii) {
                // theta = 0
                CHECK(eval(u, ExactComplex(r)) == ExactComplex(f.radial_at(r)));
                // theta = pi/2: e^{i (p-q) pi/2} = i^{p-q}
                ExactComplex phase(Rational(1));
                const std::int64_t turns = ((f.angular % 4) + 4) % 4;
                for (std::int64_t k = 0; k < turns; ++k) phase *= ExactComplex(Rational(0), Rational(1));
                CHECK(eval(u, ExactComplex(Rational(0), r)) == phase * ExactComplex(f.radial_at(r)));
            }
        }
    }
}

TEST_CASE("eigenspace bases") {
    const auto one = eigenspace_basis(1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].poly == BivarPoly::one_minus_zzbar());

    const auto four = eigenspace_basis(4);
    REQUIRE(four.size() == 3);
    CHECK(four[0].index == EigenIndex{1, 4});
    CHECK(four[1].index == EigenIndex{2, 2});
    CHECK(four[2].index == EigenIndex{4, 1});

    std::vector<std::int64_t> angular;
    for (const auto& m : eigenspace_basis(6)) angular.push_back(m.index.angular_index());
    CHECK(angular == std::vector<std::int64_t>{-5, -1, 1, 5});

    for (std::uint64_t lambda = 1; lambda <= 100; ++lambda) {
        const auto basis = eigenspace_basis(lambda);
        CHECK(basis.size() == divisor_count(lambda));
        std::set<std::int64_t> distinct;
        for (const auto& m : basis) {
            distinct.insert(m.index.angular_index());
            CHECK(m.index.eigenvalue() == lambda);
        }
        CHECK(distinct.size() == basis.size());
    }
    CHECK_THROWS_AS(eigenspace_basis(0), InputError);
}
