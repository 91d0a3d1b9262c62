#include "diskspec/bivar_poly.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "diskspec/errors.hpp"

namespace diskspec {

BivarPoly::BivarPoly(const Rational& constant) { add_term({0, 0}, constant); }

BivarPoly BivarPoly::monomial(Exponent e, const Rational& coeff) {
    BivarPoly p;
    p.add_term(e, coeff);
    return p;
}

BivarPoly BivarPoly::one_minus_zzbar() {
    BivarPoly p(Rational(1));
    p.add_term({1, 1}, Rational(-1));
    return p;
}

Rational BivarPoly::coefficient(Exponent e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::uint32_t BivarPoly::total_degree() const {
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.dz + e.dzbar);
    return d;
}

void BivarPoly::add_term(Exponent e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, Rational(-c));
    return *this;
}

BivarPoly& BivarPoly::operator*=(const Rational& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

BivarPoly BivarPoly::operator-() const {
    BivarPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
    BivarPoly r;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            r.add_term({ea.dz + eb.dz, ea.dzbar + eb.dzbar}, ca * cb);
        }
    }
    return r;
}

std::string BivarPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << "(" << diskspec::to_string(c) << ")";
        if (e.dz) out << "*z^" << e.dz;
        if (e.dzbar) out << "*zbar^" << e.dzbar;
    }
    return out.str();
}

BivarPoly pow(const BivarPoly& base, unsigned exponent) {
    BivarPoly result(Rational(1));
    BivarPoly square = base;
    while (exponent) {
        if (exponent & 1u) result = result * square;
        exponent >>= 1u;
        if (exponent) square = square * square;
    }
    return result;
}

BivarPoly diff(const BivarPoly& p, Variable wrt, unsigned order) {
    if (order == 0) throw InputError("derivative order must be positive");
    BivarPoly r;
    for (const auto& [e, c] : p.terms()) {
        std::uint32_t k = wrt == Variable::Z ? e.dz : e.dzbar;
        if (k < order) continue;
        // falling factorial k (k-1) ... (k-order+1)
        Integer falling(1);
        for (std::uint32_t i = 0; i < order; ++i) falling *= (k - i);
        Exponent ne = e;
        (wrt == Variable::Z ? ne.dz : ne.dzbar) -= order;
        r += BivarPoly::monomial(ne, c * Rational(falling));
    }
    return r;
}

namespace {

ExactComplex scale(const Rational& c, const ExactComplex& v) { return c * v; }
NumericComplex scale(const Rational& c, const NumericComplex& v) { return to_double(c) * v; }

template <class C>
C eval_impl(const BivarPoly& p, const C& point, const C& conj_point, const C& one) {
    std::uint32_t max_dz = 0, max_dzbar = 0;
    for (const auto& [e, c] : p.terms()) {
        max_dz = std::max(max_dz, e.dz);
        max_dzbar = std::max(max_dzbar, e.dzbar);
    }
    std::vector<C> zp{one}, zbp{one};
    for (std::uint32_t i = 0; i < max_dz; ++i) zp.push_back(zp.back() * point);
    for (std::uint32_t i = 0; i < max_dzbar; ++i) zbp.push_back(zbp.back() * conj_point);
    C sum{};
    for (const auto& [e, c] : p.terms()) sum += scale(c, zp[e.dz] * zbp[e.dzbar]);
    return sum;
}

}  // namespace

ExactComplex eval(const BivarPoly& p, const ExactComplex& point) {
    return eval_impl(p, point, point.conj(), ExactComplex(Rational(1)));
}

NumericComplex eval(const BivarPoly& p, const NumericComplex& point) {
    return eval_impl(p, point, std::conj(point), NumericComplex(1.0, 0.0));
}

BivarPoly apply_laplacian(const BivarPoly& p) {
    BivarPoly mixed;
    for (const auto& [e, c] : p.terms()) {
        if (e.dz == 0 || e.dzbar == 0) continue;
        mixed += BivarPoly::monomial({e.dz - 1, e.dzbar - 1}, c * Rational(Integer(e.dz) * e.dzbar));
    }
    return -(BivarPoly::one_minus_zzbar() * mixed);
}

nlohmann::json to_json(const BivarPoly& p) {
    auto out = nlohmann::json::array();
    for (const auto& [e, c] : p.terms()) {
        out.push_back({{"dz", e.dz},
                       {"dzbar", e.dzbar},
                       {"num", c.get_num().get_str()},
                       {"den", c.get_den().get_str()}});
    }
    return out;
}

BivarPoly poly_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw InputError("polynomial JSON must be an array of terms");
    BivarPoly p;
    try {
        for (const auto& t : j) {
            Exponent e{t.at("dz").get<std::uint32_t>(), t.at("dzbar").get<std::uint32_t>()};
            Rational c = parse_rational(t.at("num").get<std::string>() + "/" + t.at("den").get<std::string>());
            p += BivarPoly::monomial(e, c);
        }
    } catch (const nlohmann::json::exception& ex) {
        throw InputError(std::string("malformed polynomial term: ") + ex.what());
    }
    return p;
}

}  // namespace diskspec
