// JSON/CSV serialization for experiment reports. All output is deterministic:
// ordered keys, no timestamps, doubles printed with shortest round-trip
// formatting (JSON) or %.17g (CSV).

#pragma once

#include <string>

#include <json.hpp>

#include "stsign/angles.hpp"
#include "stsign/equidist.hpp"
#include "stsign/halfint.hpp"

namespace stsign {

inline constexpr const char* kVersionString = "stsign 1.0.0";

nlohmann::ordered_json to_json(const SignDensityReport& r);
nlohmann::ordered_json to_json(const PairHistogram& h);
nlohmann::ordered_json to_json(const WeylOrbitStats& w);
nlohmann::ordered_json to_json(const RelationReport& r);
nlohmann::ordered_json to_json(const EpsilonContainment& c);

// "i,j,observed,expected" rows, row-major.
std::string histogram_csv(const PairHistogram& h);

// Header line plus one row of counts and densities.
std::string sign_density_csv(const SignDensityReport& r);

std::string format_double(double v);  // %.17g

// Write a string to a file (binary mode, no transformations), creating
// parent directories.
void write_file(const std::string& path, const std::string& contents);

}  // namespace stsign
