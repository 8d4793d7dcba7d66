#pragma once

// JSON serialization of the library's result types and parsing of the
// comma-list formats used on the command line.

#include <string>

#include <json.hpp>

#include "nilcover/covering.hpp"
#include "nilcover/geodesic.hpp"
#include "nilcover/lattice.hpp"

namespace nilcover {

using Json = nlohmann::ordered_json;

/// "x,y,z" -> NilPoint. Throws std::invalid_argument on malformed input.
NilPoint parse_point(const std::string& text);

/// "t11,t12,t13,t21,t22,t23[,k]" -> LatticeBasis.
LatticeBasis parse_lattice(const std::string& text);

/// Reads {"t1":[...],"t2":[...],"k":1} from a file. Throws std::runtime_error
/// if the file cannot be read, std::invalid_argument if it is malformed.
LatticeBasis read_lattice_file(const std::string& path);

Json to_json(const NilPoint& p);
Json to_json(const GeodesicParams& g);
Json to_json(const LatticeBasis& b);
Json to_json(const FundamentalDomain& d);
Json to_json(const CircumballResult& c);
Json to_json(const CoverageCheck& c);
Json to_json(const TilingReport& t);
Json to_json(const DensityReport& r);
Json to_json(const LowerBoundConfig& c);
Json to_json(const HexOptimum& h);

NilPoint point_from_json(const Json& j);
LatticeBasis lattice_from_json(const Json& j);
DensityReport density_report_from_json(const Json& j);
LowerBoundConfig lower_bound_config_from_json(const Json& j);

/// Invariant checks used after a JSON round trip. Return an empty string when
/// the object is valid, otherwise a description of the first violation.
std::string validate(const DensityReport& r);
std::string validate(const LowerBoundConfig& c, double tol = 1e-9);

}  // namespace nilcover
