// The exponential basis phi_k, the generalized cosine TC_k and sine TS_k,
// the product kernel Theta_n, the Dirichlet kernel D_n = Theta_{n+1} -
// Theta_n, the symmetric interpolation kernel Phi*_n in compact form, and
// Fourier partial sums.
//
// Arguments of every sine and cosine here are rational multiples of pi at
// lattice nodes, so evaluation goes through sinpi/cospi, which reduce the
// argument to [-1/2, 1/2] before touching libm. The compact kernels have
// removable singularities wherever some t_j is an integer; factors with
// |sin(pi t_j)| below eps_singular are replaced by their limits.
#pragma once

#include <complex>
#include <map>

#include "adf/homogeneous.hpp"

namespace adf {

inline constexpr double eps_singular = 1e-9;

double sinpi(double x);  // sin(pi x)
double cospi(double x);  // cos(pi x)

using Complex = std::complex<double>;

// phi_k(t) = exp(2 pi i k.t / (d+1)). The RatPoint overload reduces the
// phase modulo 1 in exact arithmetic first, so node values carry no
// argument-reduction error.
Complex phi(const HomogIndex& k, const Point& t);
Complex phi(const HomogIndex& k, const RatPoint& t);

// Orbit average (1/|kG|) sum_{j in kG} phi_j(t); invariant in k and t.
Complex tc(const HomogIndex& k, const Point& t);
Complex tc(const HomogIndex& k, const RatPoint& t);

// Signed average (1/(d+1)!) [sum_even - sum_odd] phi_k(t sigma).
Complex ts(const HomogIndex& k, const Point& t);
Complex ts(const HomogIndex& k, const RatPoint& t);

// Theta_n(t) = prod_j sin(pi n t_j) / sin(pi t_j).
double theta_kernel(int n, const Point& t);
double theta_kernel(int n, std::span<const double> t);

// D_n(t) = Theta_{n+1}(t) - Theta_n(t) = sum_{k in H*_n} phi_k(t).
double dirichlet_kernel(int n, const Point& t);
double dirichlet_kernel(int n, std::span<const double> t);

// Phi*_n(t) = (1/((d+1) n^d)) sum_{k in H*_n} c_k phi_k(t), compact form.
// The span overload trusts the zero-sum constraint.
double phi_star_kernel(int n, const Point& t);
double phi_star_kernel(int n, std::span<const double> t);

// Phi_n(t) = (1/((d+1) n^d)) sum_{k in H_n} phi_k(t), compact form
// (complex: the half-open index set is not symmetric).
Complex phi_n_kernel(int n, const Point& t);
Complex phi_n_kernel(int n, std::span<const double> t);

enum class Basis { Exp, GenCosine, GenSine };

// A finite expansion in one of the three bases. Exp keys must lie in H,
// GenCosine keys in Lambda (sorted), GenSine keys strictly decreasing.
struct TrigPoly {
  Basis basis = Basis::Exp;
  int d = 1;
  std::map<HomogIndex, Complex> coeffs;

  // max over keys of (k_1 - k_{d+1})/(d+1) after sorting
  int degree() const;
  Complex eval(const Point& t) const;
};

TrigPoly make_trig_poly(Basis basis, int d, std::map<HomogIndex, Complex> coeffs);

// Evaluates an Exp-basis expansion whose keys must lie in H*_n.
Complex partial_sum(const TrigPoly& f, int n, const Point& t);

}  // namespace adf
