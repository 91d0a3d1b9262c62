#include "diskspec/io.hpp"

#include <charconv>
#include <fstream>
#include <ostream>

#include "diskspec/errors.hpp"

namespace diskspec::io {

std::string format_double(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc()) return "nan";
    return std::string(buf, end);
}

namespace {

std::vector<Rational> rational_list(const nlohmann::json& j, const char* key) {
    if (!j.contains(key)) throw InputError(std::string("medium is missing \"") + key + "\"");
    const auto& arr = j.at(key);
    if (!arr.is_array()) throw InputError(std::string("medium field \"") + key + "\" must be an array");
    std::vector<Rational> out;
    for (const auto& v : arr) {
        if (v.is_string()) out.push_back(parse_rational(v.get<std::string>()));
        else if (v.is_number_integer()) out.push_back(parse_rational(v.dump()));
        else if (v.is_number()) out.push_back(parse_rational(format_double(v.get<double>())));
        else throw InputError(std::string("medium field \"") + key + "\" holds a non-numeric entry");
    }
    return out;
}

}  // namespace

LayeredMedium medium_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw InputError("medium JSON must be an object");
    return LayeredMedium(rational_list(j, "L"), rational_list(j, "R"));
}

LayeredMedium read_medium(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open medium file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& ex) {
        throw InputError("medium file '" + path + "' is not valid JSON: " + ex.what());
    }
    return medium_from_json(j);
}

void write_spikes_csv(std::ostream& out, const SpikeTrain& train, bool exact_columns) {
    out << "time,amplitude";
    if (exact_columns) out << ",time_exact,amp_exact";
    out << '\n';
    for (const auto& s : train.spikes()) {
        out << format_double(to_double(s.time)) << ',' << format_double(to_double(s.amplitude));
        if (exact_columns) out << ',' << to_string(s.time) << ',' << to_string(s.amplitude);
        out << '\n';
    }
}

void write_spectrum_csv(std::ostream& out, const std::vector<SpectrumEntry>& rows) {
    out << "lambda,multiplicity\n";
    for (const auto& r : rows) out << r.lambda << ',' << r.multiplicity << '\n';
}

void write_closed_geodesics_csv(std::ostream& out, std::uint64_t n, const std::vector<ClosedGeodesic>& rows) {
    out << "n,p,q,a,length,boundary_visits\n";
    for (const auto& g : rows) {
        out << n << ',' << g.p << ',' << g.q << ',' << to_string(g.a()) << ',' << format_double(g.length()) << ','
            << g.boundary_visits() << '\n';
    }
}

void write_polyline_csv(std::ostream& out, const HypocycloidGeodesic& curve, double t_end, std::uint64_t samples) {
    out << "t,x,y\n";
    const std::uint64_t count = std::max<std::uint64_t>(samples, 2);
    for (std::uint64_t i = 0; i < count; ++i) {
        const double t = t_end * static_cast<double>(i) / static_cast<double>(count - 1);
        const auto z = curve.state(t).position;
        out << format_double(t) << ',' << format_double(z.real()) << ',' << format_double(z.imag()) << '\n';
    }
}

}  // namespace diskspec::io
