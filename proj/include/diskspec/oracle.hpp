#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "diskspec/rational.hpp"
#include "diskspec/scattering.hpp"

// Ground truth for the layered-medium Green's function that does not touch
// the eigenfunction machinery: explicit scattering-path enumeration and a
// discrete-time wave recursion.
namespace diskspec::oracle {

enum class Step : std::uint8_t { Down, Up };

enum class NodeEvent : std::uint8_t {
    Reflection,          // down then up, weight R
    InvertedReflection,  // up then down, weight -R
    DownTransmission,    // weight 1 - R
    UpTransmission,      // weight 1 + R
};

// A scattering sequence as a lattice path: each step traverses one layer.
// A Down step from level h-1 to h and an Up step from h to h-1 are both edges
// at height h. Paths start and end at level 0 and touch it nowhere else.
struct ScatteringPath {
    std::vector<Step> moves;

    // Level reached after each move.
    std::vector<std::uint32_t> levels() const;
    // Event and interface index (1-based) at each interior node.
    std::vector<std::pair<NodeEvent, std::uint32_t>> node_events() const;
    // Number of edges at each height 1..max_height (index 0 is height 1).
    std::vector<std::uint32_t> edge_counts(std::size_t max_height) const;
    std::string to_string() const;
};

struct PathGuard {
    std::uint32_t max_total_visits = 12;
};

// Every path with exactly 2 k_j edges at height j. Empty for gap profiles.
// Throws GuardExceeded when sum k_j exceeds the guard.
std::vector<ScatteringPath> enumerate_paths(const Profile& k, const PathGuard& guard = {});

// Product of node weights. Throws InputError if the path goes deeper than R.
Rational path_weight(const ScatteringPath& path, const std::vector<Rational>& reflections);

Rational oracle_profile_amplitude(const Profile& k, const std::vector<Rational>& reflections,
                                  const PathGuard& guard = {});

// All paths with arrival time <= horizon, enumerated move by move and binned
// by exact arrival time. No profile bookkeeping is involved.
SpikeTrain path_sum_green(const LayeredMedium& medium, const Rational& horizon);

struct SimulationSample {
    std::uint64_t time_index;
    Rational amplitude;
};

// Exact discrete-time recursion for a stack whose layers share one two-way
// travel time. A unit downgoing impulse leaves the reference plane at time 0
// and the upgoing amplitude reaching it is recorded at times 1..steps (in
// units of the common travel time).
std::vector<SimulationSample> goupillaud_simulate(const std::vector<Rational>& reflections, std::uint64_t steps);

struct Mismatch {
    std::string profile;  // "1;2;1", or "*" for per-time comparisons
    Rational time;
    Rational closed_form;
    Rational oracle;
    std::string source;   // which oracle disagreed
};

struct ComparisonReport {
    std::size_t profiles_checked = 0;
    std::size_t times_checked = 0;
    std::size_t merged_times = 0;  // arrival times shared by two or more profiles
    bool simulation_applied = false;
    std::vector<Mismatch> mismatches;

    bool ok() const { return mismatches.empty(); }
};

// Closed form versus per-profile path sums, the move-by-move path sum and,
// for equal travel times, the recursion.
ComparisonReport compare_green_vs_oracles(const LayeredMedium& medium, const Rational& horizon,
                                          const PathGuard& guard = {});

std::string mismatch_csv(const std::vector<Mismatch>& mismatches);

}  // namespace diskspec::oracle
