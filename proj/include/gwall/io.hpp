#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gwall/extremal.hpp"

namespace gwall {

using Json = nlohmann::ordered_json;

/// Surface description: rationals may be JSON integers or "p/q" strings.
/// Keys: name, picard_rank, intersection_matrix, H, K, chi_O,
/// min_effective_slope_d, effective_generators (optional), e (optional).
/// The result is validated.
SurfaceData surface_from_json(const Json& j);
SurfaceData load_surface_file(const std::string& path);
Json surface_to_json(const SurfaceData& S);

/// "r; c1_1,c1_2,...; ch2", e.g. "2; 1,0; -6".
ChernCharacter parse_character(std::string_view text);
std::string format_character(const ChernCharacter& v);

Json to_json(const Rational& q);
Json to_json(const QVec& v);
Json to_json(const ChernCharacter& v);
Json to_json(const Wall& w);
Json to_json(const ExtremalResult& r);
Json to_json(const RegimeCertificate& c);

Rational rational_from_json(const Json& j);
ChernCharacter character_from_json(const Json& j);
Wall wall_from_json(const Json& j);

/// "s=-5/2 rho2=4", "vertical beta=5/4" or "empty s=.. rho2=..".
std::string format_wall(const Wall& w);

}  // namespace gwall
