#include "adf/quadrature.hpp"

namespace adf {

namespace {

Rat cell_count(int d, int n) {
  Rat r(d + 1);
  for (int i = 0; i < d; ++i) r *= n;
  return r;
}

}  // namespace

Complex inner_product_n(const NodeFn& f, const NodeFn& g, int d, int n) {
  check_dimension(d);
  check_order(n);
  Complex sum = 0;
  for (const HomogIndex& j : enum_hn(d, n)) {
    const RatPoint node = node_point(j, n);
    sum += f(node) * std::conj(g(node));
  }
  return sum / to_double(cell_count(d, n));
}

Complex inner_product_sym(const NodeFn& f, const NodeFn& g, int d, int n) {
  check_dimension(d);
  check_order(n);
  Complex sum = 0;
  for (const HomogIndex& j : enum_hn_star(d, n)) {
    const RatPoint node = node_point(j, n);
    sum += to_double(c_weight(j, n)) * f(node) * std::conj(g(node));
  }
  return sum / to_double(cell_count(d, n));
}

Complex inner_product_simplex(const NodeFn& f, const NodeFn& g, int d, int n) {
  check_dimension(d);
  check_order(n);
  Complex sum = 0;
  for (const HomogIndex& j : enum_lambda(d, n)) {
    const RatPoint node = node_point(j, n);
    sum += to_double(lambda_weight(j, n)) * f(node) * std::conj(g(node));
  }
  return sum / to_double(cell_count(d, n));
}

Complex inner_product_simplex_interior(const NodeFn& f, const NodeFn& g, int d, int n) {
  check_dimension(d);
  check_order(n);
  Complex sum = 0;
  for (const HomogIndex& j : enum_lambda_interior(d, n)) {
    const RatPoint node = node_point(j, n);
    sum += f(node) * std::conj(g(node));
  }
  Rat scale = Rat(factorial(d));
  for (int i = 0; i < d; ++i) scale /= n;
  return sum * to_double(scale);
}

CubatureRule cubature_omega(int d, int n) {
  check_dimension(d);
  check_order(n);
  CubatureRule rule;
  rule.domain = CubatureRule::Domain::OmegaH;
  rule.d = d;
  rule.n = n;
  rule.exactness_degree = 2 * n - 1;
  rule.indices = enum_hn_star(d, n);
  const Rat cells = cell_count(d, n);
  for (const HomogIndex& j : rule.indices) {
    rule.nodes.push_back(node_point(j, n));
    rule.weights.push_back(c_weight(j, n) / cells);
  }
  return rule;
}

CubatureRule cubature_simplex(int d, int n) {
  check_dimension(d);
  check_order(n);
  CubatureRule rule;
  rule.domain = CubatureRule::Domain::SimplexH;
  rule.d = d;
  rule.n = n;
  rule.exactness_degree = 2 * n - 1;
  rule.indices = enum_lambda(d, n);
  const Rat cells = cell_count(d, n);
  for (const HomogIndex& j : rule.indices) {
    rule.nodes.push_back(node_point(j, n));
    rule.weights.push_back(lambda_weight(j, n) / cells);
  }
  return rule;
}

Complex integrate(const CubatureRule& rule, const NodeFn& f) {
  Complex sum = 0;
  for (size_t i = 0; i < rule.nodes.size(); ++i)
    sum += to_double(rule.weights[i]) * f(rule.nodes[i]);
  return sum;
}

}  // namespace adf
