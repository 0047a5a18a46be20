// toriclci — equations of toric local complete intersection singularities
// from Nakajima free-parameter data.
//
// Exit codes: 0 success / all checks pass, 1 domain failure (invalid or
// inadmissible input, failed checks), 2 parse or usage error.

#include "toriclci/corpus.hpp"
#include "toriclci/dual_cone.hpp"
#include "toriclci/errors.hpp"
#include "toriclci/ideal_builder.hpp"
#include "toriclci/json_io.hpp"
#include "toriclci/nakajima.hpp"
#include "toriclci/oracle.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace toriclci;

constexpr int kOk = 0;
constexpr int kDomainFailure = 1;
constexpr int kUsage = 2;

FreeParamMatrix load(const std::string& path) {
  if (path == "-") return read_input_document(std::cin);
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_input_document(in);
}

std::string epsilon_str(const Epsilon& eps) {
  std::string s = "(";
  for (std::size_t i = 0; i < eps.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(eps[i]);
  }
  return s + ")";
}

// Shared gate: structure + admissibility.  `validate` reports to stdout;
// the other commands keep stdout clean and send diagnostics to stderr.
int check_input(const FreeParamMatrix& m, bool print_verdict) {
  std::ostream& out = print_verdict ? std::cout : std::cerr;
  try {
    validate_structure(m);
  } catch (const Error& e) {
    out << "invalid structure: " << e.what() << "\n";
    return kDomainFailure;
  }
  if (print_verdict) std::cout << "structure: ok\n";
  AdmissibilityResult adm = is_admissible(m);
  if (!adm.admissible) {
    const auto& w = *adm.witness;
    out << "inadmissible at level " << w.level << ": epsilon=" << epsilon_str(w.epsilon)
        << " pairing=" << w.pairing.get_str() << "\n";
    return kDomainFailure;
  }
  if (print_verdict) std::cout << "admissible\n";
  return kOk;
}

int cmd_validate(const std::string& file) {
  FreeParamMatrix m = load(file);
  return check_input(m, true);
}

int cmd_equations(const std::string& file, bool minimal, const std::string& format) {
  FreeParamMatrix m = load(file);
  if (int rc = check_input(m, false)) return rc;

  if (format == "json") {
    IdealPresentation pres = minimal_presentation(m, elimination_plan(m));
    std::cout << render(pres, RenderFormat::json) << "\n";
    return kOk;
  }

  if (!minimal) {
    std::cout << render(binomial_generators(m), RenderFormat::text);
    return kOk;
  }

  IdealPresentation pres = minimal_presentation(m, elimination_plan(m));
  if (pres.minimal_generators.empty()) {
    std::cout << "smooth: 0 relations, ambient = C^" << pres.surviving_variables.size() << "\n";
    return kOk;
  }
  for (const auto& [pos, repl] : pres.variable_map)
    std::cout << "eliminated " << variable_name(pos) << " -> " << variable_name(repl.first)
              << "*" << variable_name(repl.second) << "\n";
  std::cout << render(pres, RenderFormat::text);
  return kOk;
}

int cmd_hilbert(const std::string& file, const std::string& format) {
  FreeParamMatrix m = load(file);
  if (int rc = check_input(m, false)) return rc;

  DualGenerators l = dual_generators(m);
  EliminationPlan plan = elimination_plan(m);

  if (format == "json") {
    nlohmann::json gens = nlohmann::json::array();
    for (int pos = 1; pos <= l.count(); ++pos) {
      nlohmann::json cov = nlohmann::json::array();
      for (Eigen::Index i = 0; i < l.at(pos).size(); ++i) cov.push_back(int_json(l.at(pos)(i)));
      gens.push_back({{"position", pos}, {"variable", variable_name(pos)}, {"covector", cov}});
    }
    nlohmann::json q = nlohmann::json::object(), r = nlohmann::json::object();
    for (const auto& [k, gamma] : plan.q_set) q[std::to_string(k)] = gamma;
    for (const auto& [lidx, delta] : plan.r_set) r[std::to_string(lidx)] = delta;
    nlohmann::json out{{"d", m.d},
                       {"L", std::move(gens)},
                       {"Q", std::move(q)},
                       {"R", std::move(r)},
                       {"hilbert_positions", plan.hilbert_positions},
                       {"embedding_dimension", plan.hilbert.size()}};
    std::cout << out.dump(2) << "\n";
    return kOk;
  }

  std::cout << "L (" << l.count() << " generators):\n";
  for (int pos = 1; pos <= l.count(); ++pos)
    std::cout << "  " << variable_name(pos) << " = " << covector_str(l.at(pos)) << "\n";
  if (plan.q_set.empty())
    std::cout << "Q: (empty)\n";
  else {
    std::cout << "Q:";
    for (const auto& [k, gamma] : plan.q_set)
      std::cout << " " << k << " (gamma=" << gamma << ")";
    std::cout << "\n";
  }
  if (plan.r_set.empty())
    std::cout << "R: (empty)\n";
  else {
    std::cout << "R:";
    for (const auto& [lidx, delta] : plan.r_set)
      std::cout << " " << lidx << " (delta=" << delta << ")";
    std::cout << "\n";
  }
  std::cout << "Hilbert basis (" << plan.hilbert.size() << " elements):\n";
  for (std::size_t i = 0; i < plan.hilbert.size(); ++i)
    std::cout << "  " << variable_name(plan.hilbert_positions[i]) << " = "
              << covector_str(plan.hilbert[i]) << "\n";
  std::cout << "embedding dimension: " << plan.hilbert.size() << "\n";
  return kOk;
}

int cmd_vertices(const std::string& file, const std::string& format) {
  FreeParamMatrix m = load(file);
  if (int rc = check_input(m, false)) return rc;

  VertexFamily fam = vertex_family(m, m.d);
  std::vector<ZVector> verts = extreme_points(fam);
  std::vector<FacetPair> facets = h_description(m);

  if (format == "json") {
    nlohmann::json points = nlohmann::json::array();
    for (std::uint32_t mask = 0; mask < fam.points.size(); ++mask) {
      nlohmann::json coords = nlohmann::json::array();
      for (Eigen::Index i = 0; i < fam.points[mask].size(); ++i)
        coords.push_back(int_json(fam.points[mask](i)));
      points.push_back({{"epsilon", epsilon_from_mask(mask, m.d - 1)}, {"point", coords}});
    }
    nlohmann::json vjson = nlohmann::json::array();
    for (const ZVector& v : verts) {
      nlohmann::json coords = nlohmann::json::array();
      for (Eigen::Index i = 0; i < v.size(); ++i) coords.push_back(int_json(v(i)));
      vjson.push_back(std::move(coords));
    }
    nlohmann::json fjson = nlohmann::json::array();
    for (const FacetPair& f : facets) {
      nlohmann::json lower = nlohmann::json::array(), upper = nlohmann::json::array();
      for (Eigen::Index i = 0; i < f.lower.size(); ++i) lower.push_back(int_json(f.lower(i)));
      for (Eigen::Index i = 0; i < f.upper.size(); ++i) upper.push_back(int_json(f.upper(i)));
      fjson.push_back({{"level", f.level}, {"lower", std::move(lower)}, {"upper", std::move(upper)}});
    }
    nlohmann::json out{{"d", m.d},
                       {"points", std::move(points)},
                       {"vertices", std::move(vjson)},
                       {"vertex_count", verts.size()},
                       {"facets", std::move(fjson)},
                       {"basic_simplex", is_basic_simplex(m)}};
    std::cout << out.dump(2) << "\n";
    return kOk;
  }

  std::cout << "S (" << fam.points.size() << " points):\n";
  for (std::uint32_t mask = 0; mask < fam.points.size(); ++mask)
    std::cout << "  epsilon=" << epsilon_str(epsilon_from_mask(mask, m.d - 1)) << " -> "
              << point_str(fam.points[mask]) << "\n";
  std::cout << "vertices (" << verts.size() << "):";
  for (const ZVector& v : verts) std::cout << " " << point_str(v);
  std::cout << "\n";
  std::cout << "facets (on x1 = 1):\n";
  for (const FacetPair& f : facets)
    std::cout << "  0 <= x" << f.level << ",  " << covector_str(f.upper) << " . x >= 0\n";
  std::cout << "basic simplex: " << (is_basic_simplex(m) ? "yes" : "no") << "\n";
  return kOk;
}

int cmd_verify(const std::string& file, const std::string& level, std::uint64_t seed) {
  FreeParamMatrix m = load(file);
  VerificationReport report = full_report(
      m, level == "exhaustive" ? VerifyLevel::exhaustive : VerifyLevel::quick, seed);
  std::cout << report_json(report).dump(2) << "\n";
  return report.all_executed_pass() ? kOk : kDomainFailure;
}

int cmd_example(const std::string& name) {
  std::optional<FreeParamMatrix> m = example_by_name(name);
  if (!m) {
    std::cerr << "unknown example \"" << name << "\"; available:\n" << example_catalog();
    return kDomainFailure;
  }
  std::cout << input_document_json(*m).dump() << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nakajima polytopes, dual-cone Hilbert bases and the binomial equations of "
               "toric local complete intersection singularities, in exact arithmetic"};
  app.require_subcommand(1);

  std::string file;
  std::string format = "text";
  std::string level = "quick";
  std::string name;
  std::uint64_t seed = 0;
  bool minimal = false;

  auto* validate = app.add_subcommand("validate", "check structure and admissibility");
  validate->add_option("file", file, "input document (\"-\" for stdin)")->required();

  auto* equations = app.add_subcommand("equations", "print the defining binomials");
  equations->add_option("file", file)->required();
  equations->add_flag("--minimal", minimal, "eliminate redundant variables first");
  equations->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* hilbert = app.add_subcommand("hilbert", "dual-cone generators and Hilbert basis");
  hilbert->add_option("file", file)->required();
  hilbert->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* vertices = app.add_subcommand("vertices", "the point family and polytope vertices");
  vertices->add_option("file", file)->required();
  vertices->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* verify = app.add_subcommand("verify", "run the brute-force verification suite");
  verify->add_option("file", file)->required();
  verify->add_option("--level", level)->check(CLI::IsMember({"quick", "exhaustive"}));
  verify->add_option("--seed", seed);

  auto* example = app.add_subcommand("example", "emit a built-in input document");
  example->add_option("name", name, "fig2 | fig3 | triangle(k) | simplex(d,k) | box(k1,..) | smooth3")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);  // prints help / error text
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(file);
    if (equations->parsed()) return cmd_equations(file, minimal, format);
    if (hilbert->parsed()) return cmd_hilbert(file, format);
    if (vertices->parsed()) return cmd_vertices(file, format);
    if (verify->parsed()) return cmd_verify(file, level, seed);
    if (example->parsed()) return cmd_example(name);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomainFailure;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kDomainFailure;
  }
  return kUsage;
}
