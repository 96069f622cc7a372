#pragma once

#include <json.hpp>

#include "ueda/atlas.hpp"
#include "ueda/resolve.hpp"

namespace ueda {

using Json = nlohmann::ordered_json;

// Integers are serialized as decimal strings so arbitrary-precision values
// round-trip bit-exactly; a Scalar is the quadruple
// [re_num, re_den, im_num, im_den].
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j, const std::string& field);

Json to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j, const std::string& field);

Json to_json(const PSeries& s);
PSeries pseries_from_json(const Json& j, const std::string& field);

Json to_json(const LSeries& s);
LSeries lseries_from_json(const Json& j, const std::string& field);

Json to_json(const MSeries& s);
MSeries mseries_from_json(const Json& j, const std::string& field);

Json to_json(const BSeries& s);
BSeries bseries_from_json(const Json& j, const std::string& field);

Json to_json(const Atlas& a);
Atlas atlas_from_json(const Json& j);
Atlas load_atlas(const std::string& path);
void save_atlas(const Atlas& a, const std::string& path);

Json to_json(const CoverConfig& cfg);
CoverConfig cover_config_from_json(const Json& j);

}  // namespace ueda
