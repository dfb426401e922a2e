// Change of variables to C^d / R^d, generalized Chebyshev polynomials of
// the first and second kind (trigonometric evaluation and exact symbolic
// expansion), the weight w = prod sin^2 pi(t_mu - t_nu), Gaussian cubature
// for w^{1/2} on the deltoid-like region Delta*, the Gauss-Lobatto rule for
// w^{-1/2}, and the quasi-orthogonal ideal generators whose variety is the
// Lobatto node set.
//
// Symbolic coefficients are exact Gaussian rationals. Each degree layer of
// the recurrence is resolved simultaneously by solving the full linear
// system the product relations impose, which stays well defined for d >= 3
// where a single-step recursion does not.
#pragma once

#include "adf/index_sets.hpp"
#include "adf/trig_basis.hpp"

namespace adf {

// Multi-index in N_0^d; bijective with sorted indices via the difference map.
struct ChebIndex {
  std::vector<int> a;

  explicit ChebIndex(std::vector<int> v);
  int dim() const { return static_cast<int>(a.size()); }
  int degree() const;
  friend bool operator==(const ChebIndex&, const ChebIndex&) = default;
  friend auto operator<=>(const ChebIndex& x, const ChebIndex& y) { return x.a <=> y.a; }
  std::string str() const;
};

ChebIndex unit_cheb(int d, int k);  // epsilon_k, 1-based k

ChebIndex alpha_of(const HomogIndex& k);   // requires k sorted descending
HomogIndex k_of(const ChebIndex& alpha);

// v-degree vector: k_of((1,...,1)); TS at this index factors into sines.
HomogIndex v_circ(int d);
// The shift (d+1, 0, ..., 0, -(d+1)) generating the quasi-orthogonal ideal.
HomogIndex v_star(int d);

// z_k(t) = binom(d+1,k)^{-1} sum_{|J|=k} exp(2 pi i sum_{j in J} t_j):
// normalized elementary symmetric functions of the unit exponentials.
std::vector<Complex> z_map(const Point& t);
std::vector<Complex> z_map(const RatPoint& t);

// Real coordinates: x_k = (z_k + z_{d+1-k})/2, x_{d+1-k} = (z_k -
// z_{d+1-k})/(2i), middle coordinate z/sqrt(2) for odd d. Throws if the
// conjugation symmetry conj(z_k) = z_{d+1-k} is violated beyond 1e-9.
std::vector<double> x_map(std::span<const Complex> z);

// First kind T_alpha(z(t)) = TC_k(t).
Complex t_eval(const ChebIndex& alpha, const Point& t);
// Second kind U_alpha(z(t)) = TS_{k+v°}(t) / TS_{v°}(t); throws
// std::domain_error within eps of a zero of the denominator (use
// ChebEngine::u_eval for the polynomial fallback).
Complex u_eval(const ChebIndex& alpha, const Point& t);

// Exact complex-rational coefficient.
struct CRat {
  Rat re = 0, im = 0;
  bool is_zero() const { return re == 0 && im == 0; }
  Complex to_complex() const { return {to_double(re), to_double(im)}; }
  bool operator==(const CRat& o) const { return re == o.re && im == o.im; }
};

// Sparse polynomial in z_1..z_d with CRat coefficients, graded-lex ordered
// monomials, no stored zeros.
class ZPoly {
 public:
  struct GradedLex {
    bool operator()(const std::vector<int>& x, const std::vector<int>& y) const;
  };
  using Terms = std::map<std::vector<int>, CRat, GradedLex>;

  explicit ZPoly(int d) : d_(d) {}
  static ZPoly constant(int d, Rat v);

  int dim() const { return d_; }
  int degree() const;  // -1 for the zero polynomial
  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }

  void add_term(std::vector<int> expo, const CRat& c);
  ZPoly& operator+=(const ZPoly& o);
  ZPoly& operator-=(const ZPoly& o);
  ZPoly& scale(const Rat& f);
  void add_scaled(const ZPoly& o, const Rat& f);
  ZPoly shifted(int var) const;  // multiply by z_var, 1-based var

  Complex eval(std::span<const Complex> z) const;
  bool operator==(const ZPoly& o) const { return d_ == o.d_ && terms_ == o.terms_; }

 private:
  int d_;
  Terms terms_;
};

// Caches the symbolic expansions layer by layer; lower layers are read-only
// once built. Not safe for concurrent use of one instance.
class ChebEngine {
 public:
  explicit ChebEngine(int d, int degree_cap = 12);

  int dim() const { return d_; }
  int degree_cap() const { return cap_; }

  const ZPoly& t_poly(const ChebIndex& alpha);
  const ZPoly& u_poly(const ChebIndex& alpha);

  // Ratio evaluation with the polynomial fallback near zeros of TS_{v°}.
  Complex u_eval(const ChebIndex& alpha, const Point& t);

 private:
  enum Family { kT = 0, kU = 1 };
  const ZPoly& poly(Family f, const ChebIndex& alpha);
  void extend(Family f, int target_degree);

  int d_, cap_;
  std::map<std::vector<int>, ZPoly> store_[2];
  int done_[2] = {1, 1};
};

// w(x(t)) = prod_{mu<nu} sin^2 pi (t_mu - t_nu).
double weight_w(const Point& t);
double weight_w(const RatPoint& t);

// w as a polynomial of total degree 2d in z, from the signed TC expansion.
ZPoly weight_poly(ChebEngine& engine);

// Normalization constants c_a = 1 / integral of w^a over Delta*.
double c_half(int d);
double c_minus_half(int d);

struct GaussRule {
  int d = 1;
  int n = 1;
  int degree = 1;  // algebraic exactness 2n-1
  std::vector<std::vector<double>> nodes;
  std::vector<double> weights;
  std::vector<RatPoint> t_preimages;
  std::vector<Rat> exact_weights;  // Lobatto rules only
};

// Gaussian rule for w^{1/2}: nodes x(z(j')), j in Lambda°_{n+d}; node count
// is exactly dim Pi_{n-1}^d; weights (2^{d(d+1)}/((d+1)(n+d)^d)) w(y).
GaussRule gauss_rule(int d, int n);

// Gauss-Lobatto-type rule for w^{-1/2} on the Lambda_n nodes with the exact
// rational weights lambda_j/((d+1)n^d).
GaussRule lobatto_rule(int d, int n);

double apply_rule(const GaussRule& rule,
                  const std::function<double(std::span<const double>)>& f);

// The companion index of a degree-(n+1) generator T_alpha - T_{alpha*}.
std::pair<ChebIndex, ChebIndex> ideal_generator(const ChebIndex& alpha);

}  // namespace adf
