#include "twistlat/cli.hpp"

#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "twistlat/quadric_net.hpp"
#include "twistlat/report.hpp"

namespace twistlat {

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitMalformed = 2;

void add_format_option(CLI::App* command, RunConfig& config) {
  command
      ->add_option_function<std::string>(
          "--format",
          [&config](const std::string& name) {
            config.format = name == "json" ? OutputFormat::json : OutputFormat::text;
          },
          "Output format")
      ->transform(CLI::IsMember({"text", "json"}, CLI::ignore_case).description(""))
      ->option_text("text|json");
}

std::string row_string(const Vector3& row) {
  std::ostringstream os;
  os << "[" << row[0] << ", " << row[1] << ", " << row[2] << "]";
  return os.str();
}

void print_invariants(const RunConfig& config, std::ostream& out) {
  const SurfaceGeometry geometry = surface_geometry(config.d);
  const HodgeDiamond hodge = hodge_diamond(config.d);
  const auto [td, sqrt_td] = todd_and_sqrt(config.d);
  const auto twists = pushforward_structure_sheaf(config.d);
  const CanonicalData canonical = canonical_data(config.d);
  const SurfaceClass ch_tangent = chern_character_tangent(config.d);

  if (config.format == OutputFormat::json) {
    Json j = Json::object();
    j["d"] = config.d;
    j["c1_coeff"] = geometry.c1_coeff;
    j["c2"] = geometry.c2;
    j["chi_O"] = to_json(geometry.chi_O);
    j["ch_tangent"] = to_json(ch_tangent);
    j["hodge"] = to_json(hodge);
    j["td"] = to_json(td);
    j["sqrt_td"] = to_json(sqrt_td);
    j["pushforward_twists"] = twists;
    j["canonical_twist"] = canonical.twist;
    j["canonical_map_is_cover"] = canonical.canonical_map_is_cover;
    out << j.dump(2) << "\n";
    return;
  }
  out << "d = " << config.d << " (branch curve of degree " << 2 * config.d << ")\n";
  out << "c1(T_S) = " << geometry.c1_coeff << " h\n";
  out << "c2(T_S) = " << geometry.c2 << " pt\n";
  out << "chi(O_S) = " << geometry.chi_O << "\n";
  out << "ch(T_S) = " << ch_tangent << "\n";
  const auto flat = hodge.flattened();
  out << "Hodge diamond = (";
  for (std::size_t i = 0; i < flat.size(); ++i) out << (i ? "," : "") << flat[i];
  out << ")\n";
  out << "td(S) = " << td << "\n";
  out << "sqrt(td(S)) = " << sqrt_td << "\n";
  out << "pi_* O_S = O(" << twists[0] << ") + O(" << twists[1] << ")\n";
  out << "omega_S = pi^*O(" << canonical.twist << "), canonical map is pi: "
      << (canonical.canonical_map_is_cover ? "yes" : "no") << "\n";
}

void print_gram(const GramMatrix& gram, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::json) {
    out << to_json(gram).dump(2) << "\n";
    return;
  }
  out << "basis: " << gram.basis[0] << ", " << gram.basis[1] << ", " << gram.basis[2] << "\n";
  if (gram.m && gram.n) out << "m = 2B.h = " << *gram.m << ", n = 4B^2 = " << *gram.n << "\n";
  for (const auto& row : gram.entries) out << row_string(row) << "\n";
}

void print_grr(const GrrLedger& ledger, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::json) {
    out << to_json(ledger).dump(2) << "\n";
    return;
  }
  out << "ch(E) = " << ledger.ch_E << "\n";
  out << "ch(wedge^2 E) = " << ledger.ch_wedge2E << "\n";
  out << "ch(wedge^2 E (x) O(-1)) = " << ledger.ch_wedge2E_twist << "\n";
  out << "ch(B0) = " << ledger.ch_B0 << "\n";
  out << "ch(B0) td(P^2) = " << ledger.rhs << "\n";
  out << "pi_*(ch(A) td(S)) = " << ledger.lhs << " + a pt\n";
  out << "a = " << ledger.a_solved << "\n";
  out << "2k(k+m) = 0 mod 4 for odd m: " << (ledger.cross_term_divisible ? "yes" : "no") << "\n";
  out << "{B^2} = " << ledger.b_squared_fraction << "\n";
}

void print_verdict(const ObstructionVerdict& verdict, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::json) {
    out << to_json(verdict).dump(2) << "\n";
    return;
  }
  out << "verdict: " << to_string(verdict.kind) << "\n";
  if (verdict.pair) {
    out << "v1 = " << row_string(verdict.pair->v1) << "\n";
    out << "v2 = " << row_string(verdict.pair->v2) << "\n";
  }
  if (verdict.certificate) {
    out << "certificate: modulus " << verdict.certificate->modulus << ", divisor " << verdict.certificate->divisor
        << "\n";
  }
  out << "search bound " << verdict.search_bound << ", max modulus " << verdict.max_modulus << "\n";
}

struct NetOptions {
  long base_degree = 0;
  long modifications = 5;
};

void print_net(const NetOptions& options, OutputFormat format, std::ostream& out) {
  const long net = discriminant_degree(kNetOfQuadrics);
  const long surfaces = discriminant_degree(kQuadricSurfaceFibration);
  const long conics = discriminant_degree(kConicFibrationOnLine);
  const long census = special_point_census(kQuadricSurfaceFibration, kConicFibrationOnLine);
  const auto candidates = splitting_types(4, -2, true);
  const auto generic = splitting_types(4, -2, true, 2);
  const HeckeParity parity = hecke_degree_parity(options.base_degree, options.modifications);

  if (format == OutputFormat::json) {
    Json j = Json::object();
    Json degrees = Json::object();
    degrees["net"] = net;
    degrees["quadric_surfaces"] = surfaces;
    degrees["conics"] = conics;
    j["discriminant_degrees"] = degrees;
    j["special_points"] = census;
    j["splitting_types"] = candidates;
    j["splitting_types_h0_2"] = generic;
    Json hecke = Json::object();
    hecke["base_degree"] = options.base_degree;
    hecke["modifications"] = options.modifications;
    hecke["degree"] = parity.degree;
    hecke["fractional_Bh"] = to_json(parity.half_fractional);
    j["hecke"] = hecke;
    out << j.dump(2) << "\n";
    return;
  }
  auto type_string = [](const SplittingType& type) {
    std::string s = "(";
    for (std::size_t i = 0; i < type.size(); ++i) s += (i ? "," : "") + std::to_string(type[i]);
    return s + ")";
  };
  out << "discriminant degree of the net in P^7: " << net << "\n";
  out << "discriminant degree of the quadric surface fibration: " << surfaces << "\n";
  out << "discriminant degree of the conic fibration on a line: " << conics << "\n";
  out << "special points on a general line: " << census << " = " << surfaces << " + " << conics << "\n";
  out << "splitting types of E on a line (a_i <= 0, degree -2):";
  for (const auto& type : candidates) out << " " << type_string(type);
  out << "\n";
  out << "with h0 = 2:";
  for (const auto& type : generic) out << " " << type_string(type);
  out << "\n";
  out << "deg W = 2*" << options.base_degree << " + " << options.modifications << " = " << parity.degree
      << ", {Bh} = " << parity.half_fractional << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  NetOptions net_options;
  std::string gram_file;

  CLI::App app{"Exact K-lattice and point-like pair obstruction toolkit", "twistlat"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolkitVersion);

  auto* invariants = app.add_subcommand("invariants", "Numerical invariants of a double plane");
  invariants->add_option("--d", config.d, "Half the degree of the branch curve")->capture_default_str();
  add_format_option(invariants, config);

  auto* gram = app.add_subcommand("gram", "Gram matrix of the twisted Euler pairing");
  gram->add_option("--m", config.m, "2 B.h")->capture_default_str();
  gram->add_option("--n", config.n, "4 B^2")->capture_default_str();
  add_format_option(gram, config);

  auto* grr = app.add_subcommand("grr", "Grothendieck-Riemann-Roch ledger for {B^2}");
  add_format_option(grr, config);

  auto* decide_cmd = app.add_subcommand("decide", "Search for a point-like pair or an obstruction certificate");
  auto* m_opt = decide_cmd->add_option("--m", config.m, "2 B.h")->capture_default_str();
  auto* n_opt = decide_cmd->add_option("--n", config.n, "4 B^2")->capture_default_str();
  auto* file_opt = decide_cmd->add_option("--gram-file", gram_file, "Gram matrix JSON file");
  file_opt->excludes(m_opt)->excludes(n_opt);
  decide_cmd->add_option("--bound", config.search_bound, "Box half-width for the pair search")
      ->capture_default_str();
  decide_cmd->add_option("--modulus", config.max_modulus, "Largest certificate modulus")->capture_default_str();
  decide_cmd->add_option("--workers", config.workers, "Threads for the pair search")->capture_default_str();
  add_format_option(decide_cmd, config);

  auto* net = app.add_subcommand("net", "Discriminant and splitting-type bookkeeping for the net of quadrics");
  net->add_option("--w", net_options.base_degree, "Degree of the rank-2 bundle on the line")->capture_default_str();
  net->add_option("--modifications", net_options.modifications, "Number of simple Hecke transforms")
      ->capture_default_str();
  add_format_option(net, config);

  auto* paper = app.add_subcommand("paper", "Full reproduction report for d=4, (m,n)=(1,3)");
  paper->add_option("--bound", config.search_bound, "Box half-width for the pair search")->capture_default_str();
  paper->add_option("--modulus", config.max_modulus, "Largest certificate modulus")->capture_default_str();
  paper->add_option("--workers", config.workers, "Threads for the pair search")->capture_default_str();
  paper->add_flag("--timing", config.timing, "Include wall-clock time in the report");
  add_format_option(paper, config);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& arg : args) argv.push_back(arg.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitMalformed;
  }

  try {
    if (invariants->parsed()) {
      print_invariants(config, out);
    } else if (gram->parsed()) {
      print_gram(gram_matrix({config.m, config.n}), config.format, out);
    } else if (grr->parsed()) {
      print_grr(grr_ledger(), config.format, out);
    } else if (decide_cmd->parsed()) {
      const GramMatrix matrix = gram_file.empty() ? gram_matrix({config.m, config.n}) : load_gram(gram_file);
      print_verdict(decide(matrix.entries, config.search_bound, config.max_modulus, config.workers), config.format,
                    out);
    } else if (net->parsed()) {
      print_net(net_options, config.format, out);
    } else if (paper->parsed()) {
      const Report report = build_paper_report(config);
      out << emit_report(report, config.format);
      return report.all_pass() ? 0 : kExitMismatch;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const SchemaError& e) {
    err << "error: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitMismatch;
  }
  return 0;
}

}  // namespace twistlat
