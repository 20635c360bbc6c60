#pragma once

/**
 * @file serialize.hpp
 * @brief Canonical JSON encoding of RatFuncQ values.
 *
 * Schema: {"num": [...], "den": [...]} where each array lists decimal-string
 * integer coefficients in ascending degree. The zero polynomial is the
 * empty array, so zero encodes as {"num":[],"den":["1"]}.
 */

#include "qhankel/ratfunc.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace qhankel {

using Json = nlohmann::ordered_json;

Json to_json(const QPoly& p);
Json to_json(const RatFuncQ& f);
Json to_json(const std::vector<RatFuncQ>& values);

/// `path` prefixes error locations (e.g. "value.num[2]").
QPoly qpoly_from_json(const Json& j, const std::string& path = "$");
RatFuncQ ratfunc_from_json(const Json& j, const std::string& path = "$");

/// Compact canonical text; identical values give byte-identical text.
std::string serialize(const RatFuncQ& f);
/// Throws ParseError carrying the byte offset (syntax) or element path (schema).
RatFuncQ deserialize(std::string_view text);

}  // namespace qhankel
