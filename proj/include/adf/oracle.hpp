// Independent brute-force references: raw integer-box enumeration of the
// index sets, literal kernel summation, finite verification of the DFT /
// inverse-DFT identities for the lattice pair (A, nA), and high-order rules
// used as integral oracles. Deliberately slow and single-threaded; budgets
// are hard caps with explicit failure.
#pragma once

#include "adf/chebyshev.hpp"
#include "adf/quadrature.hpp"

namespace adf {

struct OracleReport {
  std::string name;
  double max_abs_error = 0;
  long cases_checked = 0;
  std::string worst_case;
};

// Enumeration budget in candidate cells; ADF_MAX_CELLS overrides 10^7.
long scan_budget();
inline constexpr long kernel_term_budget = 100000;

std::vector<HomogIndex> brute_enum_hn(int d, int n);
std::vector<HomogIndex> brute_enum_hn_star(int d, int n);
std::vector<HomogIndex> brute_enum_lambda(int d, int n);
std::vector<HomogIndex> brute_enum_lambda_interior(int d, int n);

enum class KernelKind { Dirichlet, PhiStar, PhiN };

// Literal summation over the index set (weighted for PhiStar).
Complex direct_kernel_sum(KernelKind kind, int d, int n, const Point& t);

// Verifies both finite Fourier identities for the pair (A, nA): the node
// sum over H_n of exp(2 pi i k.j / ((d+1)^2 n)) equals the indicator of
// k = 0 mod (d+1)n Z_H, and the dual statement. Scans k over H*_{3n}.
OracleReport dft_identity_check(int d, int n);

enum class Measure { OmegaTrig, SimplexTrig, WHalf, WMinusHalf };

// Integral of a trigonometric polynomial of degree <= degree_bound over the
// fundamental domain or simplex (normalized), via a rule of sufficient order.
Complex reference_integral(Measure m, int d, const NodeFn& f, int degree_bound);

// Integral of an algebraic polynomial against w^{+-1/2} (c-normalized).
double reference_integral_weighted(Measure m, int d,
                                   const std::function<double(std::span<const double>)>& f,
                                   int degree_bound);

// Every registered fast/brute pair at the CI budgets; one report per pair.
std::vector<OracleReport> run_all_pairs(int d, int n_max);

}  // namespace adf
