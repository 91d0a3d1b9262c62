#include "diskspec/special_functions.hpp"

#include <cmath>
#include <numbers>

#include "diskspec/errors.hpp"

namespace diskspec {
namespace {

bool is_nonpositive_integer(double v) { return v <= 0.0 && v == std::round(v); }

}  // namespace

double reciprocal_gamma(double x) {
    if (is_nonpositive_integer(x)) return 0.0;
    if (x < 0.5) {
        // 1/Gamma(x) = Gamma(1-x) sin(pi x) / pi
        return std::tgamma(1.0 - x) * std::sin(std::numbers::pi * x) / std::numbers::pi;
    }
    return 1.0 / std::tgamma(x);
}

double hypergeometric_2f1(double a, double b, double c, double x, const HypergeometricOptions& options) {
    if (is_nonpositive_integer(c)) throw InputError("2F1: c must not be a nonpositive integer");
    if (!(x >= 0.0 && x <= 1.0)) throw InputError("2F1: x must lie in [0, 1]");

    double sum = 1.0;
    double term = 1.0;
    for (long k = 0; k < options.max_terms; ++k) {
        const double kd = static_cast<double>(k);
        const double factor = (a + kd) * (b + kd) / ((c + kd) * (kd + 1.0));
        term *= factor * x;
        if (term == 0.0) return sum;  // terminating series or x == 0
        sum += term;

        // Past the parameters the term ratio tends to x monotonically, so
        // max(ratio, x) bounds every later ratio and the tail is geometric.
        const double next = kd + 1.0;
        const double ratio = std::abs((a + next) * (b + next) / ((c + next) * (next + 1.0))) * x;
        const double bound_ratio = std::max(ratio, x);
        if (next > std::abs(a) + std::abs(b) + std::abs(c) && bound_ratio < 1.0) {
            const double tail = std::abs(term) * bound_ratio / (1.0 - bound_ratio);
            if (tail <= options.relative_tail * std::abs(sum)) return sum;
        }
    }
    throw NonConvergence("2F1 series did not converge within the term cap");
}

}  // namespace diskspec
