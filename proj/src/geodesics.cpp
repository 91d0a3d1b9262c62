#include "diskspec/geodesics.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "diskspec/errors.hpp"

namespace diskspec {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

NumericComplex unit(double angle) {
    const double reduced = std::fmod(angle, kTwoPi);
    return {std::cos(reduced), std::sin(reduced)};
}

}  // namespace

HypocycloidGeodesic::HypocycloidGeodesic(double a) : a_(a) {
    if (!(a > 0.0 && a < 1.0)) throw InputError("rolling radius a must lie in (0, 1)");
    const double s = std::sqrt(a * (1.0 - a));
    theta_rate_ = a / (2.0 * s);
    phi_rate_ = (1.0 - a) / (2.0 * s);
}

double HypocycloidGeodesic::arc_period() const { return 4.0 * std::numbers::pi * std::sqrt(a_ * (1.0 - a_)); }

CurveState HypocycloidGeodesic::state(double t) const {
    const NumericComplex big = (1.0 - a_) * unit(theta_rate_ * t);
    const NumericComplex small = a_ * unit(-phi_rate_ * t);
    const NumericComplex i(0.0, 1.0);
    CurveState s;
    s.position = big + small;
    s.velocity = i * theta_rate_ * big - i * phi_rate_ * small;
    s.acceleration = -(theta_rate_ * theta_rate_) * big - (phi_rate_ * phi_rate_) * small;
    return s;
}

CurveState curve_state(double a, double t) { return HypocycloidGeodesic(a).state(t); }

double rolling_constraint_residual(double a, double theta_rate, double phi_rate) {
    return std::abs(a * phi_rate - (1.0 - a) * theta_rate);
}

double rolling_constraint_residual(double a, double /*t*/) {
    const HypocycloidGeodesic g(a);
    return rolling_constraint_residual(a, g.theta_rate(), g.phi_rate());
}

NumericComplex geodesic_residual(const CurveState& s) {
    const NumericComplex z = s.position;
    const double conformal = 1.0 - std::norm(z);
    return conformal * s.acceleration + std::conj(z) * s.velocity * s.velocity;
}

NumericComplex geodesic_residual(double a, double t) { return geodesic_residual(curve_state(a, t)); }

double g_speed(const CurveState& s) { return 2.0 * std::abs(s.velocity) / std::sqrt(1.0 - std::norm(s.position)); }

double g_speed(double a, double t) { return g_speed(curve_state(a, t)); }

Trajectory integrate_geodesic(NumericComplex z0, NumericComplex v0, double duration, const IntegratorOptions& options) {
    if (!(std::abs(z0) < 1.0)) throw InputError("initial point must lie inside the unit disk");
    if (!(options.step > 0.0)) throw InputError("integration step must be positive");
    if (!(duration >= 0.0)) throw InputError("duration must be nonnegative");
    const std::uint32_t stride = std::max<std::uint32_t>(options.sample_stride, 1);

    struct Deriv {
        NumericComplex dz, dv;
    };
    auto rhs = [](NumericComplex z, NumericComplex v) -> Deriv {
        return {v, -std::conj(z) * v * v / (1.0 - std::norm(z))};
    };

    Trajectory out;
    NumericComplex z = z0, v = v0;
    out.samples.push_back({0.0, z, v});
    const auto steps = static_cast<std::uint64_t>(std::ceil(duration / options.step - 1e-12));
    const double limit = 1.0 - options.boundary_margin;
    double t = 0.0;
    for (std::uint64_t k = 1; k <= steps; ++k) {
        const double h = std::min(options.step, duration - t);
        const Deriv k1 = rhs(z, v);
        const Deriv k2 = rhs(z + 0.5 * h * k1.dz, v + 0.5 * h * k1.dv);
        const Deriv k3 = rhs(z + 0.5 * h * k2.dz, v + 0.5 * h * k2.dv);
        const Deriv k4 = rhs(z + h * k3.dz, v + h * k3.dv);
        z += h / 6.0 * (k1.dz + 2.0 * k2.dz + 2.0 * k3.dz + k4.dz);
        v += h / 6.0 * (k1.dv + 2.0 * k2.dv + 2.0 * k3.dv + k4.dv);
        t = (k == steps) ? duration : static_cast<double>(k) * options.step;
        const bool at_boundary = std::abs(z) > limit;
        if (k % stride == 0 || k == steps || at_boundary) out.samples.push_back({t, z, v});
        if (at_boundary) {
            out.halted_at_boundary = true;
            break;
        }
    }
    out.time_reached = t;
    return out;
}

Rational ClosedGeodesic::a() const {
    Rational r(Integer(static_cast<unsigned long>(p)), Integer(static_cast<unsigned long>(p + q)));
    r.canonicalize();
    return r;
}

double ClosedGeodesic::length() const {
    return 4.0 * std::numbers::pi * std::sqrt(static_cast<double>(p) * static_cast<double>(q));
}

std::vector<ClosedGeodesic> closed_geodesics_of_length(std::uint64_t n) {
    if (n == 0) throw InputError("closed geodesic length index must be >= 1");
    std::vector<ClosedGeodesic> out;
    for (std::uint64_t p = 1; p <= n / p; ++p) {
        if (n % p == 0 && std::gcd(p, n / p) == 1) out.push_back({p, n / p});
    }
    return out;
}

std::uint64_t psi(std::uint64_t n) { return closed_geodesics_of_length(n).size(); }

std::vector<BoundaryReturn> boundary_returns(double a, std::uint64_t m_max) {
    const HypocycloidGeodesic g(a);
    std::vector<BoundaryReturn> out;
    for (std::uint64_t m = 1; m <= m_max; ++m) {
        const double md = static_cast<double>(m);
        // m a reduced mod 1 before scaling keeps the angle small
        const double turns = std::fmod(md * a, 1.0);
        out.push_back({m, md * g.arc_period(), unit(kTwoPi * turns)});
    }
    return out;
}

double accumulated_argument(double a, double t0, double t1, std::uint32_t steps) {
    const HypocycloidGeodesic g(a);
    double total = 0.0;
    NumericComplex prev = g.state(t0).position;
    for (std::uint32_t k = 1; k <= steps; ++k) {
        const double t = t0 + (t1 - t0) * static_cast<double>(k) / static_cast<double>(steps);
        const NumericComplex cur = g.state(t).position;
        total += std::arg(cur / prev);
        prev = cur;
    }
    return total;
}

}  // namespace diskspec
