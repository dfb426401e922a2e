// Discrete inner products over the node families and the two trigonometric
// cubature rules: the symmetric rule on the fundamental domain (exact on
// T_{2n-1}) and the simplex rule on Lambda_n (exact on TC_{2n-1}).
// Rules carry exact rational nodes and weights; floats appear only when a
// rule is applied.
#pragma once

#include <functional>

#include "adf/index_sets.hpp"
#include "adf/trig_basis.hpp"

namespace adf {

using NodeFn = std::function<Complex(const RatPoint&)>;

struct CubatureRule {
  enum class Domain { OmegaH, SimplexH };
  Domain domain = Domain::OmegaH;
  int d = 1;
  int n = 1;
  int exactness_degree = 1;  // trigonometric-degree scale
  std::vector<HomogIndex> indices;
  std::vector<RatPoint> nodes;
  std::vector<Rat> weights;  // sum to 1 exactly
};

// (1/((d+1) n^d)) sum_{j in H_n} f(j') conj(g(j')), j' = j/((d+1)n).
Complex inner_product_n(const NodeFn& f, const NodeFn& g, int d, int n);

// Same sum over H*_n with the c weights.
Complex inner_product_sym(const NodeFn& f, const NodeFn& g, int d, int n);

// (1/((d+1) n^d)) sum_{j in Lambda_n} lambda_j f(j') conj(g(j')).
Complex inner_product_simplex(const NodeFn& f, const NodeFn& g, int d, int n);

// (d!/n^d) sum over the strictly interior simplex nodes Lambda_n°.
Complex inner_product_simplex_interior(const NodeFn& f, const NodeFn& g, int d, int n);

// Nodes j/((d+1)n) for j in H*_n, weights c_j/((d+1)n^d); exact on T_{2n-1}.
CubatureRule cubature_omega(int d, int n);

// Nodes j/((d+1)n) for j in Lambda_n, weights lambda_j/((d+1)n^d);
// exact on TC_{2n-1}.
CubatureRule cubature_simplex(int d, int n);

Complex integrate(const CubatureRule& rule, const NodeFn& f);

}  // namespace adf
