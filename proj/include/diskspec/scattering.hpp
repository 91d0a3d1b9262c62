#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "diskspec/rational.hpp"

namespace diskspec {

// Stack of n interfaces. travel_times[j] is the two-way travel time of layer
// j+1 (the first entry includes the trip from the reference plane);
// reflections[j] is the downward reflection coefficient of interface j+1.
class LayeredMedium {
public:
    // Throws InputError unless sizes agree, n >= 1, L_j > 0 and |R_j| < 1.
    LayeredMedium(std::vector<Rational> travel_times, std::vector<Rational> reflections);

    std::size_t layers() const { return travel_times_.size(); }
    const std::vector<Rational>& travel_times() const { return travel_times_; }
    const std::vector<Rational>& reflections() const { return reflections_; }
    bool equal_travel_times() const;

private:
    std::vector<Rational> travel_times_;
    std::vector<Rational> reflections_;
};

// Visit counts k_j; k_1 = 1 and no zero may precede a nonzero entry.
using Profile = std::vector<std::uint32_t>;

bool is_admissible(const Profile& k);

// u^(p,q)(R) at a real point, from the polar radial polynomial.
Rational eigenfunction_at_real(std::uint32_t p, std::uint32_t q, const Rational& x);

// prod_j u^(k_j, k_{j+1})(R_j) with k_{n+1} = 0. Gap profiles give 0.
Rational profile_amplitude(const LayeredMedium& medium, const Profile& k);

// <L, k>.
Rational arrival_time(const std::vector<Rational>& travel_times, const Profile& k);

struct EnumerationGuard {
    double max_profiles = 1e8;
};

// Admissible profiles with <L, k> <= horizon in lexicographic order.
// Throws GuardExceeded when the prod_j (horizon/L_j + 1) estimate is too large.
std::vector<Profile> enumerate_profiles(const std::vector<Rational>& travel_times, const Rational& horizon,
                                        const EnumerationGuard& guard = {});

struct Spike {
    Rational time;
    Rational amplitude;
};

// G(t) = sum_i amplitude_i delta(t - time_i); times strictly increasing,
// amplitudes nonzero.
class SpikeTrain {
public:
    SpikeTrain() = default;
    // Merges equal times and drops zero sums.
    static SpikeTrain from_map(const std::map<Rational, Rational>& merged);

    const std::vector<Spike>& spikes() const { return spikes_; }
    bool empty() const { return spikes_.empty(); }
    std::size_t size() const { return spikes_.size(); }
    // Amplitude at an exact time, 0 when no spike is present.
    Rational amplitude_at(const Rational& time) const;

private:
    std::vector<Spike> spikes_;
};

// Boundary Green's function truncated to arrival times <= horizon.
SpikeTrain greens_function(const LayeredMedium& medium, const Rational& horizon, const EnumerationGuard& guard = {});

}  // namespace diskspec
