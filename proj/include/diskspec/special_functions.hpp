#pragma once

namespace diskspec {

// 1/Gamma(x), entire; exactly 0 at nonpositive integers. Uses the reflection
// formula below x = 1/2 so the zeros are crossed smoothly.
double reciprocal_gamma(double x);

struct HypergeometricOptions {
    double relative_tail = 1e-14;
    long max_terms = 100000;
};

// Gauss series 2F1(a, b; c; x) on [0, 1].
//
// Terminates exactly when a or b is a nonpositive integer. Otherwise the
// series is summed until a ratio-test bound on the tail drops below
// `relative_tail` times the partial sum; exceeding `max_terms` throws
// NonConvergence. Throws InputError when c is a nonpositive integer or x
// lies outside [0, 1].
double hypergeometric_2f1(double a, double b, double c, double x,
                          const HypergeometricOptions& options = {});

}  // namespace diskspec
