#include "flagstar_cli/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "flagstar/groebner.hpp"
#include "flagstar/periodic.hpp"
#include "flagstar/representatives.hpp"
#include "flagstar/toda.hpp"

namespace flagstar::cli {

namespace {

using json = nlohmann::json;

struct Options {
  int n = 0;
  int chart = 0;
  std::string format = "json";
  std::string out;
  std::string checks = "all";
  std::string presentation = "X";
  bool allow_slow = false;
  bool timings = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class Coeff>
json table_json(const SchubertBasis& basis, const ProductTable<Coeff>& table) {
  json constants = json::object();
  for (std::size_t u = 0; u < basis.size(); ++u) {
    for (std::size_t v = 0; v < basis.size(); ++v) {
      json entry = json::object();
      for (std::size_t w = 0; w < basis.size(); ++w) {
        const Polynomial& c = CoeffTraits<Coeff>::to_poly(table[u][v][w]);
        if (!c.is_zero()) entry[basis.at(w).to_string()] = c.to_string();
      }
      constants[basis.at(u).to_string() + "," + basis.at(v).to_string()] = std::move(entry);
    }
  }
  return constants;
}

json basis_json(const SchubertBasis& basis) {
  json out = json::array();
  for (const auto& w : basis.order()) out.push_back(w.to_string());
  return out;
}

json check_json(const CheckResult& c, bool timings) {
  json j;
  j["name"] = c.name;
  if (!c.axiom.empty()) j["axiom"] = c.axiom;
  j["status"] = c.passed ? "pass" : "fail";
  j["cases"] = c.cases;
  if (!c.passed) {
    json ce = json::object();
    for (const auto& [k, v] : c.counterexample) ce[k] = v;
    j["counterexample"] = std::move(ce);
  }
  if (!c.note.empty()) j["note"] = c.note;
  if (timings) j["elapsed_seconds"] = c.elapsed_seconds;
  return j;
}

std::string relations_json(const Options& o) {
  const Presentation p = o.presentation == "Y" ? Presentation::Y : Presentation::X;
  const RelationSet rel = o.chart ? chart_relations(o.n, o.chart, p) : periodic_relations(o.n, p);
  json j;
  j["n"] = o.n;
  j["presentation"] = to_string(p);
  if (o.chart) j["chart"] = o.chart;
  json list = json::array();
  for (int k = -1; k <= rel.top(); ++k) list.push_back("R" + std::to_string(k) + " = " + rel.R(k).to_string());
  j["relations"] = std::move(list);
  return j.dump(2);
}

std::string quantum_table_json(const Options& o) {
  auto basis = std::make_shared<const SchubertBasis>(o.n);
  const auto ring = make_quantum_ring(basis);
  const auto table = quantum_table(*ring);
  json j;
  j["n"] = o.n;
  j["basis"] = basis_json(*basis);
  if (o.chart) {
    const ChartTable chart = specialized_table(*basis, table, chart_transport(*basis, o.chart));
    j["chart"] = o.chart;
    j["constants"] = table_json(*basis, chart.constants);
  } else {
    j["constants"] = table_json(*basis, table);
  }
  return j.dump(2);
}

std::string star_table_json(const Options& o) {
  const PeriodicModel m = build_periodic_model(o.n);
  json j;
  j["n"] = o.n;
  j["basis"] = basis_json(*m.basis);
  j["constants"] = table_json(*m.basis, m.star.constants);
  return j.dump(2);
}

std::string repr_output(const Options& o) {
  const PeriodicModel m = build_periodic_model(o.n);
  const auto reps = representative_table(m);
  if (o.format == "latex") return representatives_latex(reps);
  json j;
  j["n"] = o.n;
  j["basis"] = basis_json(*m.basis);
  json table = json::object();
  for (const auto& r : reps) table[r.w.to_string()] = r.poly.to_string();
  j["representatives"] = std::move(table);
  return j.dump(2);
}

bool selected(const std::string& checks, const char* group) { return checks == "all" || checks == group; }

Report run_checks(const Options& o) {
  Report report;
  report.n = o.n;
  const PeriodicModel m = build_periodic_model(o.n);
  const auto& checks = o.checks;

  if (selected(checks, "axioms")) {
    report.append(verify_quantum_axioms(*m.quantum, m.quantum_table, m.classical));
    report.checks.push_back(certify_classical_constants(*m.basis, m.classical));
    report.append(verify_star_axioms(*m.ring, m.star, m.classical));
  }
  if (selected(checks, "gluing")) {
    report.checks.push_back(verify_gluing(*m.basis, m.charts));
    report.checks.push_back(verify_round_trip(m.star, m.charts));
  }
  if (selected(checks, "frobenius")) report.checks.push_back(verify_frobenius(m.star));

  const bool need_reps = selected(checks, "orthogonality") || selected(checks, "presentation");
  std::vector<Representative> reps;
  std::optional<GroebnerBasis> ideal;
  if (need_reps) {
    reps = representative_table(m);
    ideal = periodic_ideal_basis(o.n, Presentation::X);
  }
  if (selected(checks, "orthogonality")) {
    report.checks.push_back(orthogonality_check(m.star));
    if (o.n <= 3) report.checks.push_back(orthogonality_groebner(*ideal, *m.basis, reps));
  }
  if (selected(checks, "presentation")) {
    report.checks.push_back(verify_relation_identities(o.n));
    report.checks.push_back(verify_classical_ideal(o.n));
    report.checks.push_back(verify_rank(o.n));
    report.checks.push_back(verify_representatives(*m.ring, reps));
    if (o.n == 3) report.checks.push_back(verify_reference_table(*m.ring));
    report.checks.push_back(verify_double_route(*m.ring, *ideal, reps));
    std::vector<Polynomial> polys;
    for (const auto& r : reps) polys.push_back(r.poly);
    report.checks.push_back(verify_presentation(*ideal, *m.basis, polys, m.star.constants));
  }
  return report;
}

std::string report_json(const Report& report, bool timings) {
  json j;
  j["n"] = report.n;
  j["tool_version"] = kToolVersion;
  j["status"] = report.passed() ? "pass" : "fail";
  json list = json::array();
  for (const auto& c : report.checks) list.push_back(check_json(c, timings));
  j["checks"] = std::move(list);
  return j.dump(2);
}

void validate(const std::string& command, const Options& o) {
  if (o.format == "latex" && command != "repr") throw UsageError("--format latex is only available for repr");
  if (o.chart != 0) {
    if (command != "relations" && command != "quantum-table") {
      throw UsageError("--chart applies to relations and quantum-table only");
    }
    if (o.chart < 1 || o.chart > o.n) throw UsageError("--chart must lie in 1..n");
  }
  if (o.n == 5) {
    if (command == "repr" || command == "verify") throw UsageError(command + " supports n <= 4");
    if (command == "star-table" && !o.allow_slow) throw UsageError("star-table at n = 5 requires --allow-slow");
  }
}

void emit(const Options& o, std::string text, std::ostream& out) {
  if (text.empty() || text.back() != '\n') text += '\n';
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + o.out);
  file << text;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Periodic Toda deformation of the cohomology of the flag manifold"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  app.add_option("--n", o.n, "Size of the flag manifold (2..5)")->required()->check(CLI::Range(2, 5));
  app.add_option("--chart", o.chart, "Chart index k (q_k = 0)");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "latex"}));
  app.add_option("--out", o.out, "Write the artifact to this file");
  app.add_option("--checks", o.checks, "Check groups for verify")
      ->check(CLI::IsMember({"all", "axioms", "frobenius", "orthogonality", "presentation", "gluing"}));
  app.add_option("--presentation", o.presentation, "Generators for relations")->check(CLI::IsMember({"X", "Y"}));
  app.add_flag("--allow-slow", o.allow_slow, "Permit star-table at n = 5");
  app.add_flag("--timings", o.timings, "Include elapsed seconds in the verify report");

  app.add_subcommand("relations", "Periodic Toda relations R_{-1}..R_n");
  app.add_subcommand("quantum-table", "Quantum structure constants");
  app.add_subcommand("star-table", "Periodic structure constants over K");
  app.add_subcommand("repr", "Polynomial representatives of Schubert classes");
  app.add_subcommand("verify", "Run verification suites; exit 0 iff all pass");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    validate(command, o);
    if (command == "relations") {
      emit(o, relations_json(o), out);
    } else if (command == "quantum-table") {
      emit(o, quantum_table_json(o), out);
    } else if (command == "star-table") {
      emit(o, star_table_json(o), out);
    } else if (command == "repr") {
      emit(o, repr_output(o), out);
    } else {
      const Report report = run_checks(o);
      emit(o, report_json(report, o.timings), out);
      return report.passed() ? 0 : 1;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace flagstar::cli
