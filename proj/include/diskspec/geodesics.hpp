#pragma once

#include <cstdint>
#include <vector>

#include "diskspec/rational.hpp"

namespace diskspec {

struct CurveState {
    NumericComplex position;
    NumericComplex velocity;
    NumericComplex acceleration;
};

/**
 * Hypocycloid traced by a point on a circle of radius a rolling inside the
 * unit circle:
 *
 *   c(t) = (1-a) e^{i theta(t)} + a e^{-i phi(t)},
 *   theta(t) = a t / (2 s),  phi(t) = (1-a) t / (2 s),  s = sqrt(a(1-a)).
 *
 * With these rates c is a unit-speed geodesic of 4/(1-r^2)(dx^2+dy^2).
 * Successive boundary cusps are 4 pi s apart in t.
 */
class HypocycloidGeodesic {
public:
    // Throws InputError unless 0 < a < 1.
    explicit HypocycloidGeodesic(double a);

    double a() const { return a_; }
    double theta_rate() const { return theta_rate_; }
    double phi_rate() const { return phi_rate_; }
    // Parameter time between consecutive boundary cusps.
    double arc_period() const;

    // Exact derivatives of the closed form.
    CurveState state(double t) const;

private:
    double a_;
    double theta_rate_;
    double phi_rate_;
};

CurveState curve_state(double a, double t);

// |a phi' - (1-a) theta'| for the given angular rates; zero means the small
// circle rolls without slipping.
double rolling_constraint_residual(double a, double theta_rate, double phi_rate);
double rolling_constraint_residual(double a, double t);

// (1 - z zbar) z'' + zbar z'^2 for an arbitrary state.
NumericComplex geodesic_residual(const CurveState& s);
NumericComplex geodesic_residual(double a, double t);

// Speed in the disk metric: 2|z'| / sqrt(1 - |z|^2).
double g_speed(const CurveState& s);
double g_speed(double a, double t);

struct TrajectorySample {
    double t;
    NumericComplex position;
    NumericComplex velocity;
};

struct Trajectory {
    std::vector<TrajectorySample> samples;
    bool halted_at_boundary = false;
    double time_reached = 0.0;
};

struct IntegratorOptions {
    double step = 1e-4;
    double boundary_margin = 1e-6;
    // Keep every k-th step in the output (the final state is always kept).
    std::uint32_t sample_stride = 1;
};

// Fixed-step RK4 on z'' = -zbar z'^2 / (1 - z zbar) from time 0 to `duration`.
// Halts (and says so) once |z| > 1 - boundary_margin.
Trajectory integrate_geodesic(NumericComplex z0, NumericComplex v0, double duration,
                              const IntegratorOptions& options = {});

struct ClosedGeodesic {
    std::uint64_t p = 0;
    std::uint64_t q = 0;

    Rational a() const;  // p / (p + q)
    double length() const;  // 4 pi sqrt(pq)
    std::uint64_t boundary_visits() const { return p + q; }
};

// All (p, q) with pq = n, p <= q, gcd(p, q) = 1, ordered by p.
std::vector<ClosedGeodesic> closed_geodesics_of_length(std::uint64_t n);

// Number of closed geodesics of length 4 pi sqrt(n).
std::uint64_t psi(std::uint64_t n);

struct BoundaryReturn {
    std::uint64_t index;
    double time;
    NumericComplex point;
};

// c(t) at its first m_max boundary returns t_m = 4 pi m sqrt(a(1-a)).
std::vector<BoundaryReturn> boundary_returns(double a, std::uint64_t m_max);

// Continuous change in arg c(t) over [t0, t1], tracked by unwrapping on a
// fine grid. Requires c to avoid the origin on the interval.
double accumulated_argument(double a, double t0, double t1, std::uint32_t steps = 10000);

}  // namespace diskspec
