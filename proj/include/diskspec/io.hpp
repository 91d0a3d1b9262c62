#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "diskspec/eigenfunctions.hpp"
#include "diskspec/geodesics.hpp"
#include "diskspec/scattering.hpp"

namespace diskspec::io {

// Shortest round-trip decimal for a binary64 value.
std::string format_double(double v);

// {"L": ["1", "1/2"], "R": ["0.5", "-1/3"]}. Numbers are accepted as well
// as strings, but only strings convert exactly. Throws InputError.
LayeredMedium medium_from_json(const nlohmann::json& j);
LayeredMedium read_medium(const std::string& path);

void write_spikes_csv(std::ostream& out, const SpikeTrain& train, bool exact_columns);
void write_spectrum_csv(std::ostream& out, const std::vector<SpectrumEntry>& rows);
void write_closed_geodesics_csv(std::ostream& out, std::uint64_t n, const std::vector<ClosedGeodesic>& rows);
void write_polyline_csv(std::ostream& out, const HypocycloidGeodesic& curve, double t_end, std::uint64_t samples);

}  // namespace diskspec::io
