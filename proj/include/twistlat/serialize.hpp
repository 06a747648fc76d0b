#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "twistlat/double_plane.hpp"
#include "twistlat/obstruction.hpp"
#include "twistlat/twisted_lattice.hpp"

namespace twistlat {

// Insertion-ordered so emitted documents have a fixed key order.
using Json = nlohmann::ordered_json;

// Malformed Gram file or document. what() names the line or field at fault.
class SchemaError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j, const std::string& field);

Json to_json(const SurfaceClass& x);

Json to_json(const BaseClass& x);
BaseClass base_class_from_json(const Json& j, const std::string& field);

Json to_json(const HodgeDiamond& hodge);
HodgeDiamond hodge_from_json(const Json& j, const std::string& field);

// {"basis": [...], "m": int, "n": int, "entries": [[int]]}; m and n are omitted when unset.
Json to_json(const GramMatrix& gram);
GramMatrix gram_from_json(const Json& j);

Json to_json(const GrrLedger& ledger);
GrrLedger grr_from_json(const Json& j, const std::string& field);

// {"verdict": ..., "pair": {...}?, "certificate": {...}?, "bounds": {...}}
Json to_json(const ObstructionVerdict& verdict);
ObstructionVerdict verdict_from_json(const Json& j, const std::string& field);

GramMatrix parse_gram(std::string_view text);
GramMatrix load_gram(const std::filesystem::path& path);

}  // namespace twistlat
