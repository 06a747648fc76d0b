#include "twistlat/report.hpp"

#include <chrono>
#include <sstream>

#include "twistlat/quadric_net.hpp"

namespace twistlat {

namespace {

constexpr long kPaperD = 4;

std::string format_vector(const Vector3& v) {
  return "(" + std::to_string(v[0]) + "," + std::to_string(v[1]) + "," + std::to_string(v[2]) + ")";
}

std::string format_matrix(const Matrix3& g) {
  std::string out = "[";
  for (std::size_t i = 0; i < 3; ++i) {
    if (i > 0) out += ",";
    out += "[" + std::to_string(g[i][0]) + "," + std::to_string(g[i][1]) + "," + std::to_string(g[i][2]) + "]";
  }
  return out + "]";
}

std::string format_diamond(const HodgeDiamond& hodge) {
  std::string out = "(";
  const auto flat = hodge.flattened();
  for (std::size_t i = 0; i < flat.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(flat[i]);
  }
  return out + ")";
}

std::string format_verdict(const ObstructionVerdict& verdict) {
  std::string out = to_string(verdict.kind);
  if (verdict.certificate) {
    out += " (M=" + std::to_string(verdict.certificate->modulus) +
           ", delta=" + std::to_string(verdict.certificate->divisor) + ")";
  }
  if (verdict.pair) out += " v1=" + format_vector(verdict.pair->v1) + " v2=" + format_vector(verdict.pair->v2);
  return out;
}

std::string format_splitting_types(const std::vector<SplittingType>& types) {
  std::string out = "[";
  for (std::size_t i = 0; i < types.size(); ++i) {
    if (i > 0) out += ",";
    out += "(";
    for (std::size_t k = 0; k < types[i].size(); ++k) {
      if (k > 0) out += ",";
      out += std::to_string(types[i][k]);
    }
    out += ")";
  }
  return out + "]";
}

class CheckList {
public:
  void add(std::string name, std::string expected, std::string actual) {
    const bool pass = expected == actual;
    checks_.push_back({std::move(name), std::move(expected), std::move(actual), pass});
  }
  std::vector<PaperCheck> take() { return std::move(checks_); }

private:
  std::vector<PaperCheck> checks_;
};

// Symbolic entries [[16-n, -2-m, 2], [2-m, -2, 0], [2, 0, 0]].
Matrix3 symbolic_gram(long m, long n) { return {{{16 - n, -2 - m, 2}, {2 - m, -2, 0}, {2, 0, 0}}}; }

}  // namespace

bool Report::all_pass() const {
  for (const auto& check : checks) {
    if (!check.pass) return false;
  }
  return !checks.empty();
}

Report build_paper_report(const RunConfig& config) {
  const auto start = std::chrono::steady_clock::now();

  Report report;
  report.d = kPaperD;
  report.m = 1;
  report.n = 3;
  report.search_bound = config.search_bound;
  report.max_modulus = config.max_modulus;
  const TwistParams twist{report.m, report.n};

  CheckList checks;

  // Double-plane invariants.
  const SurfaceGeometry geometry = surface_geometry(kPaperD);
  report.hodge = hodge_diamond(kPaperD);
  checks.add("c1(S) coefficient of h", "-1", std::to_string(geometry.c1_coeff));
  checks.add("c2(S)", "46", std::to_string(geometry.c2));
  checks.add("chi(O_S)", "4", geometry.chi_O.to_string());
  checks.add("ch(T_S)", "2 - h - 45*pt", chern_character_tangent(kPaperD).to_string());
  checks.add("Hodge diamond", "(1,0,3,38,3,0,1)", format_diamond(report.hodge));
  const auto twists = pushforward_structure_sheaf(kPaperD);
  checks.add("pi_* O_S twists", "[0,-4]", "[" + std::to_string(twists[0]) + "," + std::to_string(twists[1]) + "]");
  const CanonicalData canonical = canonical_data(kPaperD);
  checks.add("canonical bundle", "pi^*O(1), canonical map is pi",
             "pi^*O(" + std::to_string(canonical.twist) + "), canonical map is " +
                 (canonical.canonical_map_is_cover ? "pi" : "not pi"));

  // Todd class and the normalised basis.
  const auto [td, sqrt_td] = todd_and_sqrt(kPaperD);
  checks.add("td(S)", "1 - 1/2*h + 4*pt", td.to_string());
  checks.add("sqrt(td(S))", "1 - 1/4*h + 31/16*pt", sqrt_td.to_string());
  const auto basis = lattice_basis(twist);
  checks.add("sqrt(td(S)) (2+2B)", "2 - 1/2*h + 2*B + 29/8*pt", basis[0].to_string());
  checks.add("sqrt(td(S)) h", "h - 1/2*pt", basis[1].to_string());
  checks.add("sqrt(td(S)) pt", "pt", basis[2].to_string());
  checks.add("<sqrt(td), sqrt(td)> = chi(O_S)", "4",
             mukai_pairing(sqrt_td, sqrt_td, Rational(geometry.c1_coeff), IntersectionData{}).to_string());

  // Gram matrix.
  report.gram = gram_matrix(twist);
  checks.add("Gram matrix (m,n)=(1,3)", "[[13,-3,2],[1,-2,0],[2,0,0]]", format_matrix(report.gram.entries));
  long agreeing = 0;
  long total = 0;
  for (long m = -20; m <= 20; ++m) {
    for (long n = -20; n <= 20; ++n) {
      ++total;
      if (gram_matrix({m, n}).entries == symbolic_gram(m, n)) ++agreeing;
    }
  }
  checks.add("Gram matrix symbolic form, |m|,|n| <= 20", std::to_string(total) + "/" + std::to_string(total),
             std::to_string(agreeing) + "/" + std::to_string(total));

  // B-field fractional parts.
  checks.add("{Bh}", "1/2", twist.fractional_Bh().to_string());
  checks.add("{B^2}", "3/4", twist.fractional_Bsq().to_string());
  long invariant = 0;
  long shifts = 0;
  for (long c = -5; c <= 5; ++c) {
    for (bool half : {false, true}) {
      const TwistParams shifted = shift_B(twist, c, half);
      ++shifts;
      if (shifted.fractional_Bh() == twist.fractional_Bh() && shifted.fractional_Bsq() == twist.fractional_Bsq()) {
        ++invariant;
      }
    }
  }
  checks.add("({Bh},{B^2}) under B -> B + ch (+ h/2)", std::to_string(shifts) + "/" + std::to_string(shifts),
             std::to_string(invariant) + "/" + std::to_string(shifts));

  // Net of quadrics.
  checks.add("discriminant degree, net in P^7", "8", std::to_string(discriminant_degree(kNetOfQuadrics)));
  checks.add("discriminant degree, quadric surfaces", "8",
             std::to_string(discriminant_degree(kQuadricSurfaceFibration)));
  checks.add("discriminant degree, conics on a line", "5", std::to_string(discriminant_degree(kConicFibrationOnLine)));
  checks.add("special points on a line", "13",
             std::to_string(special_point_census(kQuadricSurfaceFibration, kConicFibrationOnLine)));
  checks.add("splitting type of E on a line", "[(0,0,-1,-1)]",
             format_splitting_types(splitting_types(4, -2, true, 2)));
  bool odd_degree = true;
  for (long w = -10; w <= 10; ++w) {
    if (hecke_degree_parity(w, 5).half_fractional != Rational(1, 2)) odd_degree = false;
  }
  checks.add("{Bh} after 5 Hecke transforms, deg W = 2w + 5", "1/2", odd_degree ? "1/2" : "mismatch");

  // Grothendieck-Riemann-Roch ledger.
  report.grr = grr_ledger();
  checks.add("ch(E)", "4 - 2*H - pt", report.grr.ch_E.to_string());
  checks.add("ch(wedge^2 E)", "6 - 6*H", report.grr.ch_wedge2E.to_string());
  checks.add("ch(wedge^2 E (x) O(-1))", "6 - 12*H + 9*pt", report.grr.ch_wedge2E_twist.to_string());
  checks.add("ch(B0)", "8 - 16*H + 17*pt", report.grr.ch_B0.to_string());
  checks.add("ch(B0) td(P^2)", "8 - 4*H + pt", report.grr.rhs.to_string());
  checks.add("pi_*(ch(A) td(S)) at a = 0", "8 - 4*H + 16*pt", report.grr.lhs.to_string());
  checks.add("a", "-15", std::to_string(report.grr.a_solved));
  checks.add("{B^2} from GRR", "3/4", report.grr.b_squared_fraction.to_string());

  // Obstruction.
  report.verdict = decide(report.gram.entries, config.search_bound, config.max_modulus, config.workers);
  checks.add("verdict (m,n)=(1,3)", "obstructed (M=4, delta=2)", format_verdict(report.verdict));
  for (const auto& [m, n] : {std::pair{3L, 7L}}) {
    RepresentativeRun run{m, n, gram_matrix({m, n}), {}};
    run.verdict = decide(run.gram.entries, config.search_bound, config.max_modulus, config.workers);
    checks.add("verdict (m,n)=(" + std::to_string(m) + "," + std::to_string(n) + ")", "obstructed (M=4, delta=2)",
               format_verdict(run.verdict));
    report.representatives.push_back(std::move(run));
  }
  const ObstructionVerdict control = decide(control_lattice(kPaperD).entries, config.search_bound,
                                            config.max_modulus, config.workers);
  checks.add("untwisted control lattice", "admits v1=(1,0,0) v2=(0,0,1)", format_verdict(control));

  report.checks = checks.take();
  if (config.timing) {
    report.wall_clock_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  }
  return report;
}

Json to_json(const Report& report) {
  Json j = Json::object();
  j["version"] = report.version;
  Json inputs = Json::object();
  inputs["d"] = report.d;
  inputs["m"] = report.m;
  inputs["n"] = report.n;
  inputs["search_bound"] = report.search_bound;
  inputs["max_modulus"] = report.max_modulus;
  j["inputs"] = inputs;
  j["hodge"] = to_json(report.hodge);
  j["gram"] = to_json(report.gram);
  j["grr"] = to_json(report.grr);
  j["verdict"] = to_json(report.verdict);
  Json representatives = Json::array();
  for (const auto& run : report.representatives) {
    Json r = Json::object();
    r["m"] = run.m;
    r["n"] = run.n;
    r["gram"] = to_json(run.gram);
    r["verdict"] = to_json(run.verdict);
    representatives.push_back(r);
  }
  j["representatives"] = representatives;
  Json checks = Json::array();
  for (const auto& check : report.checks) {
    Json c = Json::object();
    c["name"] = check.name;
    c["expected"] = check.expected;
    c["actual"] = check.actual;
    c["pass"] = check.pass;
    checks.push_back(c);
  }
  j["checks"] = checks;
  j["all_pass"] = report.all_pass();
  if (report.wall_clock_ms) j["wall_clock_ms"] = *report.wall_clock_ms;
  return j;
}

Report report_from_json(const Json& j) {
  if (!j.is_object()) throw SchemaError("<root>: expected an object");
  auto need = [&](const Json& object, const char* key, const std::string& field) -> const Json& {
    if (!object.is_object() || !object.contains(key)) {
      throw SchemaError(field + ": missing field '" + key + "'");
    }
    return object[key];
  };
  auto integer = [](const Json& value, const std::string& field) {
    if (!value.is_number_integer()) throw SchemaError(field + ": expected an integer");
    return value.get<long>();
  };
  auto text = [](const Json& value, const std::string& field) {
    if (!value.is_string()) throw SchemaError(field + ": expected a string");
    return value.get<std::string>();
  };

  Report report;
  report.version = text(need(j, "version", "<root>"), "version");
  const Json& inputs = need(j, "inputs", "<root>");
  report.d = integer(need(inputs, "d", "inputs"), "inputs.d");
  report.m = integer(need(inputs, "m", "inputs"), "inputs.m");
  report.n = integer(need(inputs, "n", "inputs"), "inputs.n");
  report.search_bound = integer(need(inputs, "search_bound", "inputs"), "inputs.search_bound");
  report.max_modulus = integer(need(inputs, "max_modulus", "inputs"), "inputs.max_modulus");
  report.hodge = hodge_from_json(need(j, "hodge", "<root>"), "hodge");
  report.gram = gram_from_json(need(j, "gram", "<root>"));
  report.grr = grr_from_json(need(j, "grr", "<root>"), "grr");
  report.verdict = verdict_from_json(need(j, "verdict", "<root>"), "verdict");
  for (const auto& r : need(j, "representatives", "<root>")) {
    RepresentativeRun run;
    run.m = integer(need(r, "m", "representatives"), "representatives.m");
    run.n = integer(need(r, "n", "representatives"), "representatives.n");
    run.gram = gram_from_json(need(r, "gram", "representatives"));
    run.verdict = verdict_from_json(need(r, "verdict", "representatives"), "representatives.verdict");
    report.representatives.push_back(std::move(run));
  }
  for (const auto& c : need(j, "checks", "<root>")) {
    PaperCheck check;
    check.name = text(need(c, "name", "checks"), "checks.name");
    check.expected = text(need(c, "expected", "checks"), "checks.expected");
    check.actual = text(need(c, "actual", "checks"), "checks.actual");
    const Json& pass = need(c, "pass", "checks");
    if (!pass.is_boolean()) throw SchemaError("checks.pass: expected a boolean");
    check.pass = pass.get<bool>();
    report.checks.push_back(std::move(check));
  }
  if (j.contains("wall_clock_ms")) report.wall_clock_ms = integer(j["wall_clock_ms"], "wall_clock_ms");
  return report;
}

std::string emit_report(const Report& report, OutputFormat format) {
  if (format == OutputFormat::json) return to_json(report).dump(2) + "\n";

  std::ostringstream os;
  os << "twistlat " << report.version << "\n";
  os << "inputs: d=" << report.d << " m=" << report.m << " n=" << report.n << " search_bound=" << report.search_bound
     << " max_modulus=" << report.max_modulus << "\n";
  os << "Hodge diamond: " << format_diamond(report.hodge) << "\n";
  os << "Gram matrix in basis (" << report.gram.basis[0] << ", " << report.gram.basis[1] << ", "
     << report.gram.basis[2] << "): " << format_matrix(report.gram.entries) << "\n";
  os << "GRR ledger: ch(B0) = " << report.grr.ch_B0 << ", ch(B0) td = " << report.grr.rhs
     << ", a = " << report.grr.a_solved << ", {B^2} = " << report.grr.b_squared_fraction << "\n";
  os << "verdict: " << format_verdict(report.verdict) << "\n";
  for (const auto& run : report.representatives) {
    os << "verdict for (m,n)=(" << run.m << "," << run.n << "): " << format_verdict(run.verdict) << "\n";
  }
  os << "results depend on (m, n) only through ({Bh}, {B^2})\n";
  os << "checks:\n";
  std::size_t passed = 0;
  for (const auto& check : report.checks) {
    os << "  " << (check.pass ? "PASS" : "FAIL") << "  " << check.name << ": expected " << check.expected
       << ", got " << check.actual << "\n";
    if (check.pass) ++passed;
  }
  os << passed << "/" << report.checks.size() << " checks passed\n";
  if (report.wall_clock_ms) os << "wall clock: " << *report.wall_clock_ms << " ms\n";
  return os.str();
}

}  // namespace twistlat
