#include "diskspec/scattering.hpp"

#include <algorithm>
#include <cmath>

#include "diskspec/eigenfunctions.hpp"
#include "diskspec/errors.hpp"

namespace diskspec {

LayeredMedium::LayeredMedium(std::vector<Rational> travel_times, std::vector<Rational> reflections)
    : travel_times_(std::move(travel_times)), reflections_(std::move(reflections)) {
    if (travel_times_.empty()) throw InputError("medium needs at least one interface");
    if (travel_times_.size() != reflections_.size()) {
        throw InputError("medium needs as many travel times as reflection coefficients");
    }
    for (const auto& l : travel_times_) {
        if (l <= 0) throw InputError("travel times must be positive, got " + to_string(l));
    }
    for (const auto& r : reflections_) {
        if (abs(r) >= 1) throw InputError("reflection coefficients must lie in (-1, 1), got " + to_string(r));
    }
}

bool LayeredMedium::equal_travel_times() const {
    return std::all_of(travel_times_.begin(), travel_times_.end(),
                       [&](const Rational& l) { return l == travel_times_.front(); });
}

bool is_admissible(const Profile& k) {
    if (k.empty() || k.front() != 1) return false;
    bool seen_zero = false;
    for (auto v : k) {
        if (v == 0) seen_zero = true;
        else if (seen_zero) return false;
    }
    return true;
}

Rational eigenfunction_at_real(std::uint32_t p, std::uint32_t q, const Rational& x) {
    if (q == 0) return pow(x, p);
    if (p == 0) return Rational(0);
    // On the real axis e^{i(p-q)theta} = (+-1)^{p-q}, which matches the parity
    // of the radial polynomial, so it can be evaluated directly at x.
    return polar_form(p, q).radial_at(x);
}

namespace {

std::uint32_t next_entry(const Profile& k, std::size_t j) { return j + 1 < k.size() ? k[j + 1] : 0; }

class AmplitudeCache {
public:
    explicit AmplitudeCache(const LayeredMedium& medium) : medium_(medium) {}

    Rational factor(std::size_t layer, std::uint32_t p, std::uint32_t q) {
        if (q == 0) return pow(medium_.reflections()[layer], p);
        if (p == 0) return Rational(0);
        auto [it, inserted] = polar_.try_emplace({p, q});
        if (inserted) it->second = polar_form(p, q);
        return it->second.radial_at(medium_.reflections()[layer]);
    }

    Rational amplitude(const Profile& k) {
        Rational product(1);
        for (std::size_t j = 0; j < k.size(); ++j) {
            product *= factor(j, k[j], next_entry(k, j));
            if (product == 0) break;
        }
        return product;
    }

private:
    const LayeredMedium& medium_;
    std::map<std::pair<std::uint32_t, std::uint32_t>, PolarForm> polar_;
};

}  // namespace

Rational profile_amplitude(const LayeredMedium& medium, const Profile& k) {
    if (k.size() != medium.layers()) throw InputError("profile length must match the layer count");
    if (k.front() != 1) throw InputError("profiles start with k_1 = 1");
    Rational product(1);
    for (std::size_t j = 0; j < k.size(); ++j) {
        product *= eigenfunction_at_real(k[j], next_entry(k, j), medium.reflections()[j]);
    }
    return product;
}

Rational arrival_time(const std::vector<Rational>& travel_times, const Profile& k) {
    if (k.size() != travel_times.size()) throw InputError("profile length must match the layer count");
    Rational t(0);
    for (std::size_t j = 0; j < k.size(); ++j) t += travel_times[j] * k[j];
    return t;
}

std::vector<Profile> enumerate_profiles(const std::vector<Rational>& travel_times, const Rational& horizon,
                                        const EnumerationGuard& guard) {
    if (travel_times.empty()) throw InputError("medium needs at least one interface");
    if (horizon < 0) throw InputError("horizon must be nonnegative");
    std::vector<Profile> out;
    if (horizon < travel_times.front()) return out;

    double estimate = 1.0;
    for (std::size_t j = 1; j < travel_times.size(); ++j) {
        estimate *= std::floor(to_double(horizon / travel_times[j])) + 1.0;
        if (estimate > guard.max_profiles) {
            throw GuardExceeded("profile enumeration would exceed " + std::to_string(guard.max_profiles) + " profiles");
        }
    }

    const std::size_t n = travel_times.size();
    Profile k(n, 0);
    k[0] = 1;
    // depth-first over j = 1..n-1 with the remaining time budget
    auto extend = [&](auto& self, std::size_t j, const Rational& elapsed) -> void {
        if (j == n) {
            out.push_back(k);
            return;
        }
        // k_j = 0 forces the rest to zero
        k[j] = 0;
        out.push_back(k);
        Rational t = elapsed;
        for (std::uint32_t v = 1;; ++v) {
            t += travel_times[j];
            if (t > horizon) break;
            k[j] = v;
            self(self, j + 1, t);
        }
        k[j] = 0;
    };
    if (n == 1) {
        out.push_back(k);
    } else {
        extend(extend, 1, travel_times.front());
    }
    return out;
}

SpikeTrain SpikeTrain::from_map(const std::map<Rational, Rational>& merged) {
    SpikeTrain train;
    for (const auto& [t, a] : merged) {
        if (a != 0) train.spikes_.push_back({t, a});
    }
    return train;
}

Rational SpikeTrain::amplitude_at(const Rational& time) const {
    auto it = std::lower_bound(spikes_.begin(), spikes_.end(), time,
                               [](const Spike& s, const Rational& t) { return s.time < t; });
    if (it != spikes_.end() && it->time == time) return it->amplitude;
    return Rational(0);
}

SpikeTrain greens_function(const LayeredMedium& medium, const Rational& horizon, const EnumerationGuard& guard) {
    AmplitudeCache cache(medium);
    std::map<Rational, Rational> merged;
    for (const auto& k : enumerate_profiles(medium.travel_times(), horizon, guard)) {
        Rational a = cache.amplitude(k);
        if (a == 0) continue;
        merged[arrival_time(medium.travel_times(), k)] += a;
    }
    return SpikeTrain::from_map(merged);
}

}  // namespace diskspec
