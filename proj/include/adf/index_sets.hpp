// Enumeration and exact classification of the node index sets
//   H_n   (half-open), H*_n (closed/symmetric), H_n° (interior),
//   Lambda_n = H*_n ∩ {sorted}, Lambda_n° (strictly decreasing interior),
// together with the boundary strata and the exact cubature coefficients
// c_j^(n) and lambda_j^(n).
//
// All sets are returned sorted lexicographically descending on entries, so
// exported node ids are stable across runs.
#pragma once

#include <vector>

#include "adf/homogeneous.hpp"

namespace adf {

// Run-length pattern of a sorted index; parts sum to d+1.
struct Composition {
  std::vector<int> parts;
  int length() const { return static_cast<int>(parts.size()); }
};

// Interior point of the fundamental domain, or a boundary stratum with
// a maximal entries and b minimal entries (entry spread exactly (d+1)n).
struct BoundaryClass {
  bool interior = true;
  int a = 0;
  int b = 0;
};

bool in_hn(const HomogIndex& k, int n);        // -n <  (k_i-k_j)/(d+1) <= n
bool in_hn_star(const HomogIndex& k, int n);   // -n <= (k_i-k_j)/(d+1) <= n
bool in_hn_interior(const HomogIndex& k, int n);
bool in_lambda_n(const HomogIndex& k, int n);

std::vector<HomogIndex> enum_hn(int d, int n);           // |.| = (d+1) n^d
std::vector<HomogIndex> enum_hn_star(int d, int n);      // (n+1)^{d+1} - n^{d+1}
std::vector<HomogIndex> enum_hn_interior(int d, int n);  // equals H*_{n-1}
std::vector<HomogIndex> enum_lambda(int d, int n);       // binom(n+d, d)
std::vector<HomogIndex> enum_lambda_interior(int d, int n);  // binom(n-1, d)

BoundaryClass classify(const HomogIndex& k, int n);  // requires k in H*_n

// 1 for interior points, 1/binom(a+b, a) on the stratum (a, b).
Rat c_weight(const HomogIndex& k, int n);

// Run lengths of equal consecutive entries; requires non-increasing input.
Composition composition_of(const HomogIndex& k);

// (d+1)!/(p_1!...p_l!) strictly inside, (d+1)!/((p_l+p_1)! p_2!...p_{l-1}!)
// when the spread k_1 - k_{d+1} equals (d+1)n. Requires k in Lambda_n.
Rat lambda_weight(const HomogIndex& k, int n);

// All k in H*_n congruent to j modulo (d+1)n Z_H^{d+1} (the class S_j).
std::vector<HomogIndex> congruence_class(const HomogIndex& j, int n);

}  // namespace adf
