#include "twistlat/serialize.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace twistlat {

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& message) {
  throw SchemaError(field + ": " + message);
}

const Json& member(const Json& j, const std::string& field, const char* key) {
  if (!j.is_object()) fail(field, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) fail(field, std::string("missing field '") + key + "'");
  return *it;
}

std::int64_t integer_from_json(const Json& j, const std::string& field) {
  if (!j.is_number_integer()) fail(field, "expected an integer");
  return j.get<std::int64_t>();
}

void reject_unknown_fields(const Json& j, const std::string& field, const std::set<std::string>& allowed) {
  for (const auto& [key, value] : j.items()) {
    if (!allowed.contains(key)) fail(field, "unknown field '" + key + "'");
  }
}

Json to_json(const Vector3& v) { return Json::array({v[0], v[1], v[2]}); }

Vector3 vector_from_json(const Json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 3) fail(field, "expected an array of 3 integers");
  Vector3 v{};
  for (std::size_t i = 0; i < 3; ++i) v[i] = integer_from_json(j[i], field + "[" + std::to_string(i) + "]");
  return v;
}

}  // namespace

Json to_json(const Rational& q) { return q.to_string(); }

Rational rational_from_json(const Json& j, const std::string& field) {
  if (!j.is_string()) fail(field, "expected a rational string \"p/q\"");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::exception& e) {
    fail(field, e.what());
  }
}

Json to_json(const SurfaceClass& x) {
  Json j = Json::object();
  j["r"] = to_json(x.r);
  j["h"] = to_json(x.a_h);
  j["B"] = to_json(x.a_B);
  j["pt"] = to_json(x.s);
  return j;
}

Json to_json(const BaseClass& x) {
  Json j = Json::object();
  j["r"] = to_json(x.r);
  j["H"] = to_json(x.a_H);
  j["pt"] = to_json(x.s);
  return j;
}

BaseClass base_class_from_json(const Json& j, const std::string& field) {
  if (!j.is_object()) fail(field, "expected an object");
  reject_unknown_fields(j, field, {"r", "H", "pt"});
  return {rational_from_json(member(j, field, "r"), field + ".r"), rational_from_json(member(j, field, "H"), field + ".H"),
          rational_from_json(member(j, field, "pt"), field + ".pt")};
}

Json to_json(const HodgeDiamond& hodge) {
  Json j = Json::object();
  j["h00"] = hodge.h00;
  j["h01"] = hodge.h01;
  j["h02"] = hodge.h02;
  j["h11"] = hodge.h11;
  j["flattened"] = hodge.flattened();
  return j;
}

HodgeDiamond hodge_from_json(const Json& j, const std::string& field) {
  if (!j.is_object()) fail(field, "expected an object");
  reject_unknown_fields(j, field, {"h00", "h01", "h02", "h11", "flattened"});
  HodgeDiamond hodge{integer_from_json(member(j, field, "h00"), field + ".h00"),
                     integer_from_json(member(j, field, "h01"), field + ".h01"),
                     integer_from_json(member(j, field, "h02"), field + ".h02"),
                     integer_from_json(member(j, field, "h11"), field + ".h11")};
  return hodge;
}

Json to_json(const GramMatrix& gram) {
  Json j = Json::object();
  j["basis"] = gram.basis;
  if (gram.m) j["m"] = *gram.m;
  if (gram.n) j["n"] = *gram.n;
  Json rows = Json::array();
  for (const auto& row : gram.entries) rows.push_back(to_json(row));
  j["entries"] = rows;
  return j;
}

GramMatrix gram_from_json(const Json& j) {
  if (!j.is_object()) fail("<root>", "expected a JSON object");
  reject_unknown_fields(j, "<root>", {"basis", "m", "n", "entries"});

  GramMatrix gram;
  const Json& basis = member(j, "<root>", "basis");
  if (!basis.is_array() || basis.size() != 3) fail("basis", "expected an array of 3 labels (rank 3)");
  for (std::size_t i = 0; i < 3; ++i) {
    if (!basis[i].is_string()) fail("basis[" + std::to_string(i) + "]", "expected a string");
    gram.basis[i] = basis[i].get<std::string>();
  }
  if (j.contains("m")) gram.m = integer_from_json(j["m"], "m");
  if (j.contains("n")) gram.n = integer_from_json(j["n"], "n");

  const Json& entries = member(j, "<root>", "entries");
  if (!entries.is_array()) fail("entries", "expected an array of rows");
  if (entries.size() != 3) {
    fail("entries", "expected 3 rows for a rank-3 lattice, got " + std::to_string(entries.size()));
  }
  for (std::size_t i = 0; i < 3; ++i) {
    const std::string row_field = "entries[" + std::to_string(i) + "]";
    const Json& row = entries[i];
    if (!row.is_array()) fail(row_field, "expected an array");
    if (row.size() != 3) {
      fail(row_field, "expected 3 columns for a rank-3 lattice, got " + std::to_string(row.size()));
    }
    for (std::size_t k = 0; k < 3; ++k) {
      gram.entries[i][k] = integer_from_json(row[k], row_field + "[" + std::to_string(k) + "]");
    }
  }
  return gram;
}

Json to_json(const GrrLedger& ledger) {
  Json j = Json::object();
  j["ch_E"] = to_json(ledger.ch_E);
  j["ch_wedge2E"] = to_json(ledger.ch_wedge2E);
  j["ch_wedge2E_twist"] = to_json(ledger.ch_wedge2E_twist);
  j["ch_B0"] = to_json(ledger.ch_B0);
  j["lhs"] = to_json(ledger.lhs);
  j["rhs"] = to_json(ledger.rhs);
  j["a_solved"] = ledger.a_solved;
  j["cross_term_divisible"] = ledger.cross_term_divisible;
  j["b_squared_fraction"] = to_json(ledger.b_squared_fraction);
  return j;
}

GrrLedger grr_from_json(const Json& j, const std::string& field) {
  if (!j.is_object()) fail(field, "expected an object");
  reject_unknown_fields(j, field,
                        {"ch_E", "ch_wedge2E", "ch_wedge2E_twist", "ch_B0", "lhs", "rhs", "a_solved",
                         "cross_term_divisible", "b_squared_fraction"});
  GrrLedger ledger;
  ledger.ch_E = base_class_from_json(member(j, field, "ch_E"), field + ".ch_E");
  ledger.ch_wedge2E = base_class_from_json(member(j, field, "ch_wedge2E"), field + ".ch_wedge2E");
  ledger.ch_wedge2E_twist = base_class_from_json(member(j, field, "ch_wedge2E_twist"), field + ".ch_wedge2E_twist");
  ledger.ch_B0 = base_class_from_json(member(j, field, "ch_B0"), field + ".ch_B0");
  ledger.lhs = base_class_from_json(member(j, field, "lhs"), field + ".lhs");
  ledger.rhs = base_class_from_json(member(j, field, "rhs"), field + ".rhs");
  ledger.a_solved = integer_from_json(member(j, field, "a_solved"), field + ".a_solved");
  const Json& divisible = member(j, field, "cross_term_divisible");
  if (!divisible.is_boolean()) fail(field + ".cross_term_divisible", "expected a boolean");
  ledger.cross_term_divisible = divisible.get<bool>();
  ledger.b_squared_fraction =
      rational_from_json(member(j, field, "b_squared_fraction"), field + ".b_squared_fraction");
  return ledger;
}

Json to_json(const ObstructionVerdict& verdict) {
  Json j = Json::object();
  j["verdict"] = to_string(verdict.kind);
  if (verdict.pair) {
    Json pair = Json::object();
    pair["v1"] = to_json(verdict.pair->v1);
    pair["v2"] = to_json(verdict.pair->v2);
    j["pair"] = pair;
  }
  if (verdict.certificate) {
    Json certificate = Json::object();
    certificate["modulus"] = verdict.certificate->modulus;
    certificate["divisor"] = verdict.certificate->divisor;
    j["certificate"] = certificate;
  }
  Json bounds = Json::object();
  bounds["search_bound"] = verdict.search_bound;
  bounds["max_modulus"] = verdict.max_modulus;
  bounds["moduli_tried"] = verdict.moduli_tried;
  j["bounds"] = bounds;
  return j;
}

ObstructionVerdict verdict_from_json(const Json& j, const std::string& field) {
  if (!j.is_object()) fail(field, "expected an object");
  reject_unknown_fields(j, field, {"verdict", "pair", "certificate", "bounds"});
  ObstructionVerdict verdict;
  const Json& kind = member(j, field, "verdict");
  if (kind == "admits") {
    verdict.kind = VerdictKind::admits;
  } else if (kind == "obstructed") {
    verdict.kind = VerdictKind::obstructed;
  } else if (kind == "unknown") {
    verdict.kind = VerdictKind::unknown;
  } else {
    fail(field + ".verdict", "expected one of admits, obstructed, unknown");
  }
  if (j.contains("pair")) {
    const Json& pair = j["pair"];
    reject_unknown_fields(pair, field + ".pair", {"v1", "v2"});
    verdict.pair = PointPair{vector_from_json(member(pair, field + ".pair", "v1"), field + ".pair.v1"),
                             vector_from_json(member(pair, field + ".pair", "v2"), field + ".pair.v2")};
  }
  if (j.contains("certificate")) {
    const Json& certificate = j["certificate"];
    const std::string sub = field + ".certificate";
    reject_unknown_fields(certificate, sub, {"modulus", "divisor"});
    verdict.certificate = ModularCertificate{integer_from_json(member(certificate, sub, "modulus"), sub + ".modulus"),
                                             integer_from_json(member(certificate, sub, "divisor"), sub + ".divisor")};
  }
  const Json& bounds = member(j, field, "bounds");
  const std::string sub = field + ".bounds";
  reject_unknown_fields(bounds, sub, {"search_bound", "max_modulus", "moduli_tried"});
  verdict.search_bound = integer_from_json(member(bounds, sub, "search_bound"), sub + ".search_bound");
  verdict.max_modulus = integer_from_json(member(bounds, sub, "max_modulus"), sub + ".max_modulus");
  const Json& tried = member(bounds, sub, "moduli_tried");
  if (!tried.is_array()) fail(sub + ".moduli_tried", "expected an array");
  for (std::size_t i = 0; i < tried.size(); ++i) {
    verdict.moduli_tried.push_back(integer_from_json(tried[i], sub + ".moduli_tried[" + std::to_string(i) + "]"));
  }
  return verdict;
}

GramMatrix parse_gram(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
  return gram_from_json(j);
}

GramMatrix load_gram(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError(path.string() + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_gram(buffer.str());
  } catch (const SchemaError& e) {
    throw SchemaError(path.string() + ": " + e.what());
  }
}

}  // namespace twistlat
