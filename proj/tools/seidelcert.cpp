#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include <seidelcert/seidelcert.hpp>
#include <seidelcert/factor.hpp>

using namespace seidelcert;

namespace {

constexpr int kExitRefuted = 1;
constexpr int kExitError = 2;

std::string relation_symbol(Relation r) {
  switch (r) {
    case Relation::Below: return "<";
    case Relation::Equal: return "=";
    case Relation::Above: return ">";
  }
  return "?";
}

int cmd_eig(const std::string& expr, const std::string& threshold) {
  Graph g = parse_graph_expr(expr);
  Rational q = parse_rational(threshold);
  SpectralVerdict v = seidel_lambda_min_cmp(g, q);
  std::cout << "lambda_min " << relation_symbol(v.relation) << " " << to_string(q) << "\n";
  std::cout << "order " << g.order() << "\n";
  if (g.order() <= kCharPolyOrderLimit) {
    Polynomial p = characteristic_polynomial(seidel_integer_matrix(g));
    std::cout << "charpoly " << to_string(factor_over_integers(p)) << "\n";
  } else {
    std::cout << "charpoly not expanded above order " << kCharPolyOrderLimit << "\n";
  }
  return 0;
}

int cmd_rank(const std::string& expr, const std::string& shift) {
  Graph g = parse_graph_expr(expr);
  std::cout << rank_shifted(seidel_of(g), parse_rational(shift)) << "\n";
  return 0;
}

int cmd_classify(const std::string& expr) {
  Graph g = parse_graph_expr(expr);
  if (g.order() > 0 && is_connected(g)) {
    std::cout << to_string(smith_classify(g)) << "\n";
    return 0;
  }
  // One line per component, in vertex order.
  auto comps = connected_components(g);
  for (std::size_t i = 0; i < comps.size(); ++i)
    std::cout << "component " << i + 1 << " (" << comps[i].size() << " vertices): "
              << to_string(smith_classify(induced_subgraph(g, comps[i]))) << "\n";
  return 0;
}

int cmd_alpha_omega(const std::string& expr, std::size_t max_n) {
  AlphaOmega ao = class_alpha_omega(parse_graph_expr(expr), max_n);
  std::cout << "alpha " << ao.alpha << "\n" << "omega " << ao.omega << "\n";
  return 0;
}

int cmd_verify(const std::string& suite_name, const std::string& report_path, const std::string& catalog_path,
               bool timing) {
  auto suite = parse_suite(suite_name);
  if (!suite) throw ParameterError("unknown suite '" + suite_name + "'");
  auto catalog = catalog_path.empty() ? builtin_catalog() : load_catalog(catalog_path);
  auto reports = run_suite(*suite, catalog);

  std::ofstream file;
  if (!report_path.empty()) {
    file.open(report_path);
    if (!file) throw std::runtime_error("cannot open report file '" + report_path + "'");
  }
  std::ostream& out = report_path.empty() ? std::cout : file;
  std::size_t counts[3] = {0, 0, 0};
  for (const auto& r : reports) {
    out << to_json_line(r, timing) << "\n";
    ++counts[static_cast<int>(r.status)];
  }
  out.flush();
  if (!out) throw std::runtime_error("failed writing the report");
  std::cerr << reports.size() << " claims: " << counts[0] << " verified, " << counts[1] << " refuted, " << counts[2]
            << " error\n";
  return all_verified(reports) ? 0 : kExitRefuted;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Seidel-matrix certificates for equiangular-line bounds"};
  app.require_subcommand(1);

  std::string expr, threshold = "-5", shift, suite, report, catalog;
  std::size_t max_n = kDefaultSearchLimit;
  bool no_timing = false;

  auto* eig = app.add_subcommand("eig", "Compare lambda_min of S(G) with a threshold and factor the characteristic polynomial");
  eig->add_option("expr", expr, "Graph expression")->required();
  eig->add_option("--threshold", threshold, "Rational threshold P/Q")->capture_default_str();

  auto* rank = app.add_subcommand("rank", "Exact rank of S(G) + shift * I");
  rank->add_option("expr", expr, "Graph expression")->required();
  rank->add_option("--shift", shift, "Rational shift P/Q")->required();

  auto* classify = app.add_subcommand("classify", "Spectral radius against 2 (Smith's list)");
  classify->add_option("expr", expr, "Graph expression")->required();

  auto* alpha_omega = app.add_subcommand("alpha-omega", "Independence and clique number of the switching class");
  alpha_omega->add_option("expr", expr, "Graph expression")->required();
  alpha_omega->add_option("--max-n", max_n, "Largest switching-graph order searched")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Run a verification suite and emit one JSON report per claim");
  std::string suite_help = "Suite:";
  for (auto [name, s] : kSuiteNames) suite_help += " " + std::string(name);
  verify->add_option("suite", suite, suite_help)->required();
  verify->add_option("--report", report, "Write report lines to this file instead of stdout");
  verify->add_option("--catalog", catalog, "Alternate catalog file (TSV: id, expression, claim)");
  verify->add_flag("--no-timing", no_timing, "Write ms = 0 so reruns are byte-identical");

  CLI11_PARSE(app, argc, argv);

  try {
    if (eig->parsed()) return cmd_eig(expr, threshold);
    if (rank->parsed()) return cmd_rank(expr, shift);
    if (classify->parsed()) return cmd_classify(expr);
    if (alpha_omega->parsed()) return cmd_alpha_omega(expr, max_n);
    if (verify->parsed()) return cmd_verify(suite, report, catalog, !no_timing);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
