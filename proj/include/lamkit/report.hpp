#pragma once

// JSON documents for every report type. Fractions are strings ("3/26") so
// nothing is rounded; key order is fixed.

#include <string>

#include <json.hpp>

#include "lamkit/census.hpp"
#include "lamkit/polygon.hpp"
#include "lamkit/portrait.hpp"
#include "lamkit/strip.hpp"

namespace lamkit {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json to_json(const Rational& r);
Json to_json(const Angle& a);
Json to_json(const Chord& c);

Json portrait_json(const SiblingPortrait& p);
Json tree_json(const PlaneBicoloredTree& t);
Json census_json(const CensusReport& r);
std::string census_text(const std::vector<CensusReport>& rows);

Json tau_json(int d, const std::vector<Rational>& xs);

Json csl_json(const CSLReport& r);
Json unicritical_json(const UnicriticalReport& r);
Json sweep_json(const SweepConfig& cfg, const SweepResult& r);

Json orbit_json(const PolygonOrbit& o);
// orbit_json plus the side-length analysis.
Json orbit_json(const PolygonOrbit& o, const Sigma3Analysis& a);
Json search_json(const SearchLimits& limits, const SearchResult& r);
Json quadrilateral_json(const QuadrilateralCheck& q);

// Two-space indent and a trailing newline.
std::string dump(const Json& j);

}  // namespace lamkit
