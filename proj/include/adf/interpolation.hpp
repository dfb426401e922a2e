// Lagrange interpolation operators on the fundamental domain (I_n on the
// half-open node set, I*_n on the symmetric one) and on the simplex (L_n on
// interior nodes in the sine space, L*_n on all nodes in the cosine space),
// plus empirical Lebesgue-constant measurement by grid maximization.
//
// Fundamental functions are evaluated through the compact kernels; the
// basis-sum forms live in the test oracles.
#pragma once

#include "adf/quadrature.hpp"

namespace adf {

enum class InterpKind { In, InStar, Ln, LnStar };

// Node set carrying the samples for each operator:
// In -> H_n, InStar -> H*_n, Ln -> Lambda_n interior, LnStar -> Lambda_n.
std::vector<HomogIndex> interpolation_nodes(InterpKind kind, int d, int n);

struct Interpolant {
  InterpKind kind = InterpKind::LnStar;
  int d = 1;
  int n = 1;
  std::map<HomogIndex, Complex> samples;  // keys are exactly the node set
};

// Validates the sample keys against the node set; reports the first
// missing or unexpected key.
Interpolant make_interpolant(InterpKind kind, int d, int n,
                             std::map<HomogIndex, Complex> samples);

Interpolant sample_function(InterpKind kind, int d, int n, const NodeFn& f);

Complex eval(const Interpolant& f, const Point& t);

// The fundamental function of the node j: complex for In, real-valued for
// the symmetric kinds (returned as Complex for uniformity).
Complex fundamental(InterpKind kind, int d, int n, const HomogIndex& j,
                    const Point& t);

// Deterministic barycentric grid over the fundamental simplex,
// binom(resolution + d, d) points.
std::vector<Point> simplex_grid(int d, int resolution);

// Node sum of |fundamental| at a single point (the Lebesgue function).
double lebesgue_function(InterpKind kind, int d, int n, const Point& t);

// Max over the grid (plus midpoints of adjacent nodes) of the node sum of
// |fundamental|; a lower bound for the operator norm. Requires
// grid_resolution >= 4n.
double lebesgue_estimate(InterpKind kind, int d, int n, int grid_resolution);

}  // namespace adf
