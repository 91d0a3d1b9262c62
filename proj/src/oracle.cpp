#include "diskspec/oracle.hpp"

#include <map>
#include <numeric>
#include <sstream>

#include "diskspec/errors.hpp"

namespace diskspec::oracle {

std::vector<std::uint32_t> ScatteringPath::levels() const {
    std::vector<std::uint32_t> out;
    out.reserve(moves.size());
    std::uint32_t level = 0;
    for (Step s : moves) {
        level = (s == Step::Down) ? level + 1 : level - 1;
        out.push_back(level);
    }
    return out;
}

std::vector<std::pair<NodeEvent, std::uint32_t>> ScatteringPath::node_events() const {
    std::vector<std::pair<NodeEvent, std::uint32_t>> out;
    const auto lv = levels();
    for (std::size_t i = 0; i + 1 < moves.size(); ++i) {
        const Step in = moves[i];
        const Step next = moves[i + 1];
        NodeEvent ev;
        if (in == Step::Down) ev = next == Step::Up ? NodeEvent::Reflection : NodeEvent::DownTransmission;
        else ev = next == Step::Down ? NodeEvent::InvertedReflection : NodeEvent::UpTransmission;
        out.emplace_back(ev, lv[i]);
    }
    return out;
}

std::vector<std::uint32_t> ScatteringPath::edge_counts(std::size_t max_height) const {
    std::vector<std::uint32_t> counts(max_height, 0);
    std::uint32_t level = 0;
    for (Step s : moves) {
        const std::uint32_t height = (s == Step::Down) ? level + 1 : level;
        if (height >= 1 && height <= max_height) ++counts[height - 1];
        level = (s == Step::Down) ? level + 1 : level - 1;
    }
    return counts;
}

std::string ScatteringPath::to_string() const {
    std::string s;
    for (Step m : moves) s += (m == Step::Down) ? 'D' : 'U';
    return s;
}

std::vector<ScatteringPath> enumerate_paths(const Profile& k, const PathGuard& guard) {
    const std::uint64_t visits = std::accumulate(k.begin(), k.end(), std::uint64_t{0});
    if (visits > guard.max_total_visits) {
        throw GuardExceeded("path enumeration limited to sum k_j <= " + std::to_string(guard.max_total_visits));
    }
    std::vector<ScatteringPath> out;
    if (k.empty() || k.front() == 0) return out;

    const std::size_t n = k.size();
    // remaining[h] = edges still to be used at height h (1-based, slot 0 unused)
    std::vector<std::uint32_t> remaining(n + 2, 0);
    for (std::size_t j = 0; j < n; ++j) remaining[j + 1] = 2 * k[j];
    std::uint64_t total = 2 * visits;

    ScatteringPath current;
    auto descend = [&](auto& self, std::uint32_t level) -> void {
        if (total == 0) {
            if (level == 0) out.push_back(current);
            return;
        }
        if (level == 0) return;  // surfaced early
        // the way back up needs one edge at every height <= level
        for (std::uint32_t h = 1; h <= level; ++h) {
            if (remaining[h] == 0) return;
        }
        if (level < n && remaining[level + 1] > 0) {
            --remaining[level + 1];
            --total;
            current.moves.push_back(Step::Down);
            self(self, level + 1);
            current.moves.pop_back();
            ++total;
            ++remaining[level + 1];
        }
        if (remaining[level] > 0) {
            --remaining[level];
            --total;
            current.moves.push_back(Step::Up);
            self(self, level - 1);
            current.moves.pop_back();
            ++total;
            ++remaining[level];
        }
    };
    --remaining[1];
    --total;
    current.moves.push_back(Step::Down);
    descend(descend, 1);
    return out;
}

namespace {

Rational node_weight(NodeEvent ev, const Rational& r) {
    switch (ev) {
        case NodeEvent::Reflection: return r;
        case NodeEvent::InvertedReflection: return -r;
        case NodeEvent::DownTransmission: return 1 - r;
        case NodeEvent::UpTransmission: return 1 + r;
    }
    return Rational(0);
}

}  // namespace

Rational path_weight(const ScatteringPath& path, const std::vector<Rational>& reflections) {
    Rational w(1);
    for (const auto& [ev, level] : path.node_events()) {
        if (level == 0 || level > reflections.size()) throw InputError("path leaves the layered stack");
        w *= node_weight(ev, reflections[level - 1]);
    }
    return w;
}

Rational oracle_profile_amplitude(const Profile& k, const std::vector<Rational>& reflections, const PathGuard& guard) {
    Rational sum(0);
    for (const auto& path : enumerate_paths(k, guard)) sum += path_weight(path, reflections);
    return sum;
}

SpikeTrain path_sum_green(const LayeredMedium& medium, const Rational& horizon) {
    const auto& L = medium.travel_times();
    const auto& R = medium.reflections();
    const std::size_t n = medium.layers();
    // one-way traversal times and the cost of surfacing from each level
    std::vector<Rational> half(n + 1, Rational(0)), surface(n + 1, Rational(0));
    for (std::size_t h = 1; h <= n; ++h) {
        half[h] = L[h - 1] / 2;
        surface[h] = surface[h - 1] + half[h];
    }

    std::map<Rational, Rational> bins;
    // level, direction of the last move, elapsed time, accumulated weight
    auto walk = [&](auto& self, std::uint32_t level, Step last, const Rational& elapsed, const Rational& weight) -> void {
        if (level == 0) {
            bins[elapsed] += weight;
            return;
        }
        if (elapsed + surface[level] > horizon) return;
        const Rational& r = R[level - 1];
        if (level < n) {
            Rational w = weight * (last == Step::Down ? node_weight(NodeEvent::DownTransmission, r)
                                                      : node_weight(NodeEvent::InvertedReflection, r));
            if (w != 0) self(self, level + 1, Step::Down, elapsed + half[level + 1], w);
        }
        Rational w = weight * (last == Step::Down ? node_weight(NodeEvent::Reflection, r)
                                                  : node_weight(NodeEvent::UpTransmission, r));
        if (w != 0) self(self, level - 1, Step::Up, elapsed + half[level], w);
    };
    walk(walk, 1, Step::Down, half[1], Rational(1));
    return SpikeTrain::from_map(bins);
}

std::vector<SimulationSample> goupillaud_simulate(const std::vector<Rational>& reflections, std::uint64_t steps) {
    const std::size_t n = reflections.size();
    if (n == 0) throw InputError("simulation needs at least one interface");
    for (const auto& r : reflections) {
        if (abs(r) >= 1) throw InputError("reflection coefficients must lie in (-1, 1)");
    }
    // down[j]: wave in layer j travelling towards interface j
    // up[j]:   wave in layer j travelling towards interface j-1
    // Each half-step every wave crosses its layer and scatters.
    std::vector<Rational> down(n + 2, Rational(0)), up(n + 2, Rational(0));
    down[1] = 1;
    std::vector<SimulationSample> out;
    out.reserve(steps);
    for (std::uint64_t half_step = 1; half_step <= 2 * steps; ++half_step) {
        std::vector<Rational> next_down(n + 2, Rational(0)), next_up(n + 2, Rational(0));
        const Rational recorded = up[1];  // reaches the reference plane and is absorbed
        for (std::size_t j = 1; j <= n; ++j) {
            const Rational& r = reflections[j - 1];
            const Rational& d = down[j];
            const Rational& u = up[j + 1];  // zero below the last interface
            if (d == 0 && u == 0) continue;
            next_up[j] = r * d + (1 + r) * u;
            if (j < n) next_down[j + 1] = (1 - r) * d - r * u;
        }
        down.swap(next_down);
        up.swap(next_up);
        if (half_step % 2 == 0) out.push_back({half_step / 2, recorded});
    }
    return out;
}

namespace {

std::string profile_string(const Profile& k) {
    std::string s;
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (i) s += ';';
        s += std::to_string(k[i]);
    }
    return s;
}

}  // namespace

ComparisonReport compare_green_vs_oracles(const LayeredMedium& medium, const Rational& horizon, const PathGuard& guard) {
    ComparisonReport report;
    const auto& L = medium.travel_times();
    const auto& R = medium.reflections();

    std::map<Rational, std::size_t> profiles_per_time;
    for (const auto& k : enumerate_profiles(L, horizon)) {
        const Rational t = arrival_time(L, k);
        const Rational closed = profile_amplitude(medium, k);
        const Rational paths = oracle_profile_amplitude(k, R, guard);
        ++report.profiles_checked;
        ++profiles_per_time[t];
        if (closed != paths) report.mismatches.push_back({profile_string(k), t, closed, paths, "dyck_profile"});
    }
    for (const auto& [t, count] : profiles_per_time) {
        if (count > 1) ++report.merged_times;
    }

    const SpikeTrain green = greens_function(medium, horizon);
    const SpikeTrain walked = path_sum_green(medium, horizon);
    std::map<Rational, int> times;
    for (const auto& s : green.spikes()) times[s.time];
    for (const auto& s : walked.spikes()) times[s.time];
    for (const auto& [t, unused] : profiles_per_time) times[t];

    if (medium.equal_travel_times()) {
        report.simulation_applied = true;
        const Rational& unit = L.front();
        const Rational ratio = horizon / unit;
        const Integer last = ratio.get_num() / ratio.get_den();  // floor, horizon >= 0
        const auto samples = goupillaud_simulate(R, last.get_ui());
        for (const auto& s : samples) {
            const Rational t = unit * Rational(Integer(static_cast<unsigned long>(s.time_index)));
            times[t];
            const Rational closed = green.amplitude_at(t);
            if (closed != s.amplitude) report.mismatches.push_back({"*", t, closed, s.amplitude, "goupillaud"});
        }
    }
    for (const auto& [t, unused] : times) {
        ++report.times_checked;
        const Rational closed = green.amplitude_at(t);
        const Rational walked_amp = walked.amplitude_at(t);
        if (closed != walked_amp) report.mismatches.push_back({"*", t, closed, walked_amp, "path_sum"});
    }
    return report;
}

std::string mismatch_csv(const std::vector<Mismatch>& mismatches) {
    std::ostringstream out;
    out << "k,time,closed_form,oracle\n";
    for (const auto& m : mismatches) {
        out << m.profile << ',' << to_string(m.time) << ',' << to_string(m.closed_form) << ',' << to_string(m.oracle)
            << '\n';
    }
    return out.str();
}

}  // namespace diskspec::oracle
