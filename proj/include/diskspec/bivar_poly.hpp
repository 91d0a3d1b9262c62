#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>

#include <nlohmann/json.hpp>

#include "diskspec/rational.hpp"

namespace diskspec {

enum class Variable { Z, ZBar };

// Exponent pair of a monomial z^dz zbar^dzbar. Ordered lexicographically.
struct Exponent {
    std::uint32_t dz = 0;
    std::uint32_t dzbar = 0;

    auto operator<=>(const Exponent&) const = default;
};

/**
 * Polynomial in the commuting formal symbols z and zbar with exact rational
 * coefficients. The two symbols are independent: nothing ties the
 * coefficient of z^a zbar^b to that of z^b zbar^a.
 *
 * Zero coefficients are never stored, so structural equality is polynomial
 * equality and iteration order is the canonical (dz, dzbar) order.
 */
class BivarPoly {
public:
    using TermMap = std::map<Exponent, Rational>;

    BivarPoly() = default;
    explicit BivarPoly(const Rational& constant);

    static BivarPoly monomial(Exponent e, const Rational& coeff = Rational(1));
    static BivarPoly z() { return monomial({1, 0}); }
    static BivarPoly zbar() { return monomial({0, 1}); }
    // 1 - z zbar, the boundary-defining function of the disk.
    static BivarPoly one_minus_zzbar();

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Rational coefficient(Exponent e) const;
    // Largest dz + dzbar over stored terms; 0 for the zero polynomial.
    std::uint32_t total_degree() const;

    BivarPoly& operator+=(const BivarPoly& rhs);
    BivarPoly& operator-=(const BivarPoly& rhs);
    BivarPoly& operator*=(const Rational& s);

    friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
    friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
    friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
    friend BivarPoly operator*(BivarPoly a, const Rational& s) { return a *= s; }
    friend BivarPoly operator*(const Rational& s, BivarPoly a) { return a *= s; }
    BivarPoly operator-() const;

    friend bool operator==(const BivarPoly& a, const BivarPoly& b) { return a.terms_ == b.terms_; }

    std::string to_string() const;

private:
    void add_term(Exponent e, const Rational& c);

    TermMap terms_;
};

BivarPoly pow(const BivarPoly& base, unsigned exponent);

// Formal partial derivative with respect to one symbol, applied `order` times.
// Throws InputError for order 0.
BivarPoly diff(const BivarPoly& p, Variable wrt, unsigned order = 1);

// Substitutes z = point and zbar = conj(point).
ExactComplex eval(const BivarPoly& p, const ExactComplex& point);
NumericComplex eval(const BivarPoly& p, const NumericComplex& point);

// -(1 - z zbar) d^2 p / (dzbar dz): the Laplace-Beltrami operator of the
// disk metric 4/(1-r^2)(dx^2+dy^2), written in complex coordinates.
BivarPoly apply_laplacian(const BivarPoly& p);

// Serialized as [{"dz":a,"dzbar":b,"num":"..","den":".."}, ...] in canonical order.
nlohmann::json to_json(const BivarPoly& p);
BivarPoly poly_from_json(const nlohmann::json& j);

}  // namespace diskspec
