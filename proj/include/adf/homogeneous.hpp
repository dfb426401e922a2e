// Homogeneous coordinates for the hyperplane t_1 + ... + t_{d+1} = 0, the
// permutation action of S_{d+1}, the half-open fundamental domain
//   Omega_H = { -1 < t_i - t_j <= 1 },
// the closed fundamental simplex
//   Delta_H = { 0 <= t_i - t_j <= 1 },
// and congruence modulo the integer lattice Z_H^{d+1}.
//
// Lattice geometry is exact: nodes and folding use rational coordinates, so
// the half-open boundary tests are decided by exact comparisons. Floating
// points exist only as an evaluation-time representation.
#pragma once

#include <compare>
#include <span>
#include <vector>

#include "adf/rational.hpp"

namespace adf {

// Integer frequency vector: entries sum to zero and are pairwise congruent
// modulo d+1 (membership in the dual-lattice index set H).
class HomogIndex {
 public:
  explicit HomogIndex(std::vector<int> entries);

  int dim() const { return static_cast<int>(e_.size()) - 1; }
  int size() const { return static_cast<int>(e_.size()); }
  int operator[](int i) const { return e_[static_cast<size_t>(i)]; }
  const std::vector<int>& entries() const { return e_; }

  bool sorted_descending() const;
  int max_entry() const;
  int min_entry() const;

  friend bool operator==(const HomogIndex&, const HomogIndex&) = default;
  friend auto operator<=>(const HomogIndex& a, const HomogIndex& b) {
    return a.e_ <=> b.e_;
  }

  std::string str() const;                        // "2,-1,-1"
  static HomogIndex parse(std::string_view, int d);

 private:
  std::vector<int> e_;
};

HomogIndex zero_index(int d);
HomogIndex add(const HomogIndex& a, const HomogIndex& b);
HomogIndex sub(const HomogIndex& a, const HomogIndex& b);
HomogIndex sorted_descending(const HomogIndex& k);

// The unique zero-sum index with consecutive differences
// k_i - k_{i+1} = (d+1) a_i, for a in Z^d.
HomogIndex index_from_differences(std::span<const int> a);

// Exact point on the hyperplane: rational coordinates summing to zero.
class RatPoint {
 public:
  explicit RatPoint(std::vector<Rat> coords);

  int dim() const { return static_cast<int>(c_.size()) - 1; }
  int size() const { return static_cast<int>(c_.size()); }
  const Rat& operator[](int i) const { return c_[static_cast<size_t>(i)]; }
  const std::vector<Rat>& coords() const { return c_; }

  friend bool operator==(const RatPoint&, const RatPoint&) = default;

 private:
  std::vector<Rat> c_;
};

// Floating-point point on the hyperplane; |sum| <= 1e-12 * (d+1).
class Point {
 public:
  explicit Point(std::vector<double> coords);

  int dim() const { return static_cast<int>(c_.size()) - 1; }
  int size() const { return static_cast<int>(c_.size()); }
  double operator[](int i) const { return c_[static_cast<size_t>(i)]; }
  const std::vector<double>& coords() const { return c_; }

 private:
  std::vector<double> c_;
};

Point to_point(const RatPoint& t);

// The node j/((d+1)n) as an exact point.
RatPoint node_point(const HomogIndex& j, int n);

// Permutation of {0,...,m-1}; parity = (-1)^{#inversions}.
class Permutation {
 public:
  explicit Permutation(std::vector<int> mapping);
  static Permutation identity(int m);
  static Permutation transposition(int m, int i, int j);

  int size() const { return static_cast<int>(map_.size()); }
  int operator()(int i) const { return map_[static_cast<size_t>(i)]; }
  int parity() const { return parity_; }

  // (this o other)(i) = this(other(i)); acting on points this composes
  // apply_perm(apply_perm(p, this), other) = apply_perm(p, compose).
  Permutation compose(const Permutation& other) const;

 private:
  std::vector<int> map_;
  int parity_;
};

// All m! permutations in lexicographic order of their mapping.
std::vector<Permutation> all_permutations(int m);

// (t sigma)_i = t_{sigma(i)}.
Point apply_perm(const Point& t, const Permutation& s);
RatPoint apply_perm(const RatPoint& t, const Permutation& s);
HomogIndex apply_perm(const HomogIndex& k, const Permutation& s);

// Embeds d coordinates into the hyperplane by appending -(t_1 + ... + t_d).
Point project_to_homogeneous(std::span<const double> t);
RatPoint project_to_homogeneous(std::span<const Rat> t);

bool in_fundamental_domain(const RatPoint& t);  // -1 < t_i - t_j <= 1, exact
bool in_simplex(const RatPoint& t);             //  0 <= t_i - t_j <= 1, exact
bool in_simplex(const Point& t);                // same, plain double compares

// The unique 1-based j with t in the half-open parallelepiped piece
// Omega_H^{j}; equals the smallest index attaining the minimum coordinate.
int partition_index(const RatPoint& t);

bool congruent_mod_lattice(const RatPoint& s, const RatPoint& t);

// The unique representative of t modulo Z_H^{d+1} inside Omega_H.
RatPoint fold_into_domain(const RatPoint& t);

// Orbit {k sigma : sigma in S_{d+1}}, deduplicated, ascending lex order.
std::vector<HomogIndex> orbit(const HomogIndex& k);

Int orbit_size(const HomogIndex& k);       // (d+1)! / prod(multiplicities!)
Int stabilizer_size(const HomogIndex& k);  // prod(multiplicities!)

}  // namespace adf
