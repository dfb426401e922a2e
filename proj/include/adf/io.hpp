// Serialization of node sets, cubature rules, Lebesgue tables, and sample
// files. JSON carries exact rationals as "p/q" strings; CSV carries
// 17-significant-digit decimals plus the rationals in trailing columns.
// All output is deterministic for a given input; no timestamps.
#pragma once

#include <json.hpp>

#include "adf/chebyshev.hpp"
#include "adf/interpolation.hpp"
#include "adf/quadrature.hpp"

namespace adf {

using Json = nlohmann::ordered_json;

class io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class NodeDomain { Omega, Simplex, SimplexInterior };
NodeDomain node_domain_from_string(std::string_view s);

Json nodes_to_json(NodeDomain domain, int d, int n);
std::string nodes_to_csv(NodeDomain domain, int d, int n);

struct SelfCheck {
  long cases = 0;
  double max_residual = 0;
  std::string description;
};

Json trig_rule_to_json(const CubatureRule& rule, const SelfCheck& check);
std::string trig_rule_to_csv(const CubatureRule& rule);
CubatureRule trig_rule_from_json(const Json& j);

Json gauss_rule_to_json(const GaussRule& rule, const std::string& kind,
                        const SelfCheck& check);
std::string gauss_rule_to_csv(const GaussRule& rule);
GaussRule gauss_rule_from_json(const Json& j);

struct LebesgueRow {
  int n = 0;
  double estimate = 0;
  double ratio = 0;  // estimate / (log n)^d; meaningless for n = 1
};
Json lebesgue_to_json(InterpKind kind, int d, int grid,
                      const std::vector<LebesgueRow>& rows);
std::string lebesgue_to_csv(const std::vector<LebesgueRow>& rows);

InterpKind interp_kind_from_string(std::string_view s);
std::string to_string(InterpKind kind);

// Samples file: {"dimension": d, "n": n, "kind": "...", "samples":
// {"2,-1,-1": [re, im] | re, ...}}. Key-set errors name the offending key.
Interpolant interpolant_from_json(const Json& j);
Json interpolant_to_json(const Interpolant& f);

// Points file: {"points": [[t_1..t_{d+1}] | [t_1..t_d], ...]}; d-coordinate
// rows are projected onto the hyperplane.
std::vector<Point> points_from_json(const Json& j, int d);

Json eval_output_to_json(const Interpolant& f, const std::vector<Point>& pts);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace adf
