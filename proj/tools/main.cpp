// Command-line front end: node-set export, cubature rule generation with
// self-checks, Lebesgue-constant tables, and interpolant evaluation.
//
// Exit codes: 0 success, 2 validation error, 3 budget/size error, 4 I/O
// error.
#include <CLI11.hpp>

#include <cmath>
#include <iostream>

#include "adf/io.hpp"
#include "adf/oracle.hpp"

namespace {

using namespace adf;

void emit(const std::string& payload, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << payload;
    if (payload.empty() || payload.back() != '\n') std::cout << '\n';
  } else {
    write_file(output_path, payload);
  }
}

void check_budget_cells(double cells) {
  if (cells > static_cast<double>(scan_budget()))
    throw budget_error("requested enumeration exceeds the cell budget (set "
                       "ADF_MAX_CELLS to raise it)");
}

double set_size(NodeDomain domain, int d, int n) {
  switch (domain) {
    case NodeDomain::Omega:
      return std::pow(n + 1.0, d + 1) - std::pow(static_cast<double>(n), d + 1);
    case NodeDomain::Simplex:
      return to_double(Rat(binomial(n + d, d)));
    case NodeDomain::SimplexInterior:
      return to_double(Rat(binomial(n - 1, d)));
  }
  return 0;
}

int cmd_nodes(const std::string& domain_str, int d, int n,
              const std::string& format, const std::string& output) {
  const NodeDomain domain = node_domain_from_string(domain_str);
  check_budget_cells(set_size(domain, d, n));
  if (format == "json") {
    emit(nodes_to_json(domain, d, n).dump(2), output);
  } else {
    emit(nodes_to_csv(domain, d, n), output);
  }
  return 0;
}

SelfCheck trig_rule_self_check(const CubatureRule& rule) {
  // Exactness sweep over the basis of the declared degree, capped so large
  // rules stay exportable; the residual of the checked prefix is recorded.
  SelfCheck check;
  const int sweep_degree = rule.exactness_degree;
  std::vector<HomogIndex> basis;
  if (rule.domain == CubatureRule::Domain::OmegaH) {
    basis = enum_hn_star(rule.d, sweep_degree);
    check.description = "max |rule(phi_k) - delta_{k,0}|, k in H*_" +
                        std::to_string(sweep_degree);
  } else {
    basis = enum_lambda(rule.d, sweep_degree);
    check.description = "max |rule(TC_k) - delta_{k,0}|, k in Lambda_" +
                        std::to_string(sweep_degree);
  }
  constexpr size_t kMaxChecks = 2000;
  if (basis.size() > kMaxChecks)
    basis.erase(basis.begin() + kMaxChecks, basis.end());
  for (const HomogIndex& k : basis) {
    const bool zero = k == zero_index(rule.d);
    const Complex got = integrate(rule, [&](const RatPoint& t) {
      return rule.domain == CubatureRule::Domain::OmegaH ? phi(k, t) : tc(k, t);
    });
    check.max_residual =
        std::max(check.max_residual, std::abs(got - (zero ? 1.0 : 0.0)));
    ++check.cases;
  }
  return check;
}

SelfCheck gauss_rule_self_check(const GaussRule& rule, bool gauss, int degree_cap) {
  SelfCheck check;
  double sum = 0;
  for (double w : rule.weights) sum += w;
  check.max_residual = std::abs(sum - 1.0);
  check.cases = 1;
  check.description = "|rule(1) - 1|";
  if (gauss) {
    // Every second-kind polynomial of degree n must vanish on the nodes.
    // Evaluation goes through the engine so nodes close to the branch locus
    // fall back to the symbolic expansion, bounded by the degree cap.
    ChebEngine engine(rule.d, std::max(degree_cap, rule.n));
    double worst = 0;
    long cases = 0;
    std::function<void(std::vector<int>&, int, int)> rec = [&](std::vector<int>& a,
                                                               int pos, int left) {
      if (pos == rule.d - 1) {
        a[static_cast<size_t>(pos)] = left;
        const ChebIndex alpha(a);
        for (const RatPoint& t : rule.t_preimages) {
          worst = std::max(worst, std::abs(engine.u_eval(alpha, to_point(t))));
          ++cases;
        }
        return;
      }
      for (int v = left; v >= 0; --v) {
        a[static_cast<size_t>(pos)] = v;
        rec(a, pos + 1, left - v);
      }
    };
    std::vector<int> a(static_cast<size_t>(rule.d), 0);
    rec(a, 0, rule.n);
    check.max_residual = std::max(check.max_residual, worst);
    check.cases += cases;
    check.description = "max(|rule(1) - 1|, |U_alpha(node)| for |alpha| = n)";
  }
  return check;
}

int cmd_cubature(const std::string& kind, int d, int n, const std::string& format,
                 const std::string& output, int degree_cap) {
  if (kind == "omega-trig" || kind == "simplex-trig") {
    check_budget_cells(kind == "omega-trig"
                           ? set_size(NodeDomain::Omega, d, n)
                           : set_size(NodeDomain::Simplex, d, n));
    const CubatureRule rule = kind == "omega-trig" ? cubature_omega(d, n)
                                                   : cubature_simplex(d, n);
    if (format == "json") {
      emit(trig_rule_to_json(rule, trig_rule_self_check(rule)).dump(2), output);
    } else {
      emit(trig_rule_to_csv(rule), output);
    }
    return 0;
  }
  if (kind == "gauss" || kind == "lobatto") {
    const bool gauss = kind == "gauss";
    const GaussRule rule = gauss ? gauss_rule(d, n) : lobatto_rule(d, n);
    if (format == "json") {
      emit(gauss_rule_to_json(rule, kind,
                              gauss_rule_self_check(rule, gauss, degree_cap))
               .dump(2),
           output);
    } else {
      emit(gauss_rule_to_csv(rule), output);
    }
    return 0;
  }
  throw std::invalid_argument("unknown cubature kind: " + kind);
}

int cmd_lebesgue(const std::string& kind_str, int d, std::vector<int> orders,
                 int grid_factor, const std::string& format,
                 const std::string& output) {
  const InterpKind kind = interp_kind_from_string(kind_str);
  std::vector<LebesgueRow> rows;
  int grid_used = 0;
  for (int n : orders) {
    check_order(n);
    const int grid = std::max(4 * n, grid_factor * n);
    grid_used = grid_factor;
    const double cells = to_double(Rat(binomial(grid + d, d)));
    check_budget_cells(cells);
    LebesgueRow row;
    row.n = n;
    row.estimate = lebesgue_estimate(kind, d, n, grid);
    row.ratio = n > 1 ? row.estimate / std::pow(std::log(n), d) : 0;
    rows.push_back(row);
  }
  if (format == "json") {
    emit(lebesgue_to_json(kind, d, grid_used, rows).dump(2), output);
  } else {
    emit(lebesgue_to_csv(rows), output);
  }
  return 0;
}

int cmd_eval(const std::string& samples_path, const std::string& points_path,
             const std::string& format, const std::string& output) {
  const Json samples = Json::parse(read_file(samples_path));
  const Interpolant f = interpolant_from_json(samples);
  const Json pts = Json::parse(read_file(points_path));
  const std::vector<Point> points = points_from_json(pts, f.d);
  if (format == "json") {
    emit(eval_output_to_json(f, points).dump(2), output);
  } else {
    std::string csv = "re,im\n";
    for (const Point& t : points) {
      const Complex v = eval(f, t);
      csv += decimal17(v.real()) + "," + decimal17(v.imag()) + "\n";
    }
    emit(csv, output);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrete Fourier analysis on the A_d lattice fundamental "
               "domain and the simplex: nodes, cubature, interpolation"};
  app.require_subcommand(1);

  int d = 2;
  int n = 1;
  std::vector<int> orders;
  std::string domain = "simplex";
  std::string kind;
  std::string format = "json";
  std::string output;
  std::string samples_path, points_path;
  int grid_factor = 8;
  int degree_cap = 12;

  auto add_common = [&](CLI::App* cmd, bool with_n) {
    cmd->add_option("-d,--dimension", d, "dimension d")->check(CLI::Range(1, 8));
    if (with_n)
      cmd->add_option("-n,--order", n, "rule parameter n")->check(CLI::PositiveNumber);
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("-o,--output", output, "output path (stdout if omitted)");
  };

  CLI::App* nodes = app.add_subcommand("nodes", "export a node set");
  add_common(nodes, true);
  nodes->add_option("--domain", domain, "omega | simplex | simplex-interior")
      ->check(CLI::IsMember({"omega", "simplex", "simplex-interior"}));

  CLI::App* cubature = app.add_subcommand("cubature", "export a cubature rule");
  add_common(cubature, true);
  cubature->add_option("--kind", kind, "omega-trig | simplex-trig | gauss | lobatto")
      ->required()
      ->check(CLI::IsMember({"omega-trig", "simplex-trig", "gauss", "lobatto"}));
  cubature->add_option("--degree-cap", degree_cap,
                       "symbolic degree cap for the self-check")
      ->check(CLI::Range(1, 64));

  CLI::App* lebesgue = app.add_subcommand("lebesgue", "Lebesgue constant table");
  add_common(lebesgue, false);
  lebesgue->add_option("-n,--order", orders, "orders n (repeat or comma-separate)")
      ->required()
      ->delimiter(',');
  lebesgue->add_option("--kind", kind, "in | in-star | ln | ln-star")->required();
  lebesgue->add_option("--grid", grid_factor, "grid resolution factor (grid = factor*n)")
      ->check(CLI::Range(4, 1024));

  CLI::App* evalc = app.add_subcommand("eval", "evaluate an interpolant");
  evalc->add_option("--samples", samples_path, "samples JSON file")->required();
  evalc->add_option("--points", points_path, "points JSON file")->required();
  evalc->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  evalc->add_option("-o,--output", output, "output path (stdout if omitted)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (nodes->parsed()) return cmd_nodes(domain, d, n, format, output);
    if (cubature->parsed()) return cmd_cubature(kind, d, n, format, output, degree_cap);
    if (lebesgue->parsed())
      return cmd_lebesgue(kind, d, orders, grid_factor, format, output);
    if (evalc->parsed()) return cmd_eval(samples_path, points_path, format, output);
  } catch (const budget_error& e) {
    std::cerr << "error (budget): " << e.what() << "\n";
    return 3;
  } catch (const io_error& e) {
    std::cerr << "error (io): " << e.what() << "\n";
    return 4;
  } catch (const Json::parse_error& e) {
    std::cerr << "error (io): " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
