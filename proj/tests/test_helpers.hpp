#pragma once

#include <doctest.h>

#include <random>

#include "adf/homogeneous.hpp"

namespace adf_test {

using namespace adf;

inline RatPoint rat_point(std::vector<long> nums, long den) {
  std::vector<Rat> c;
  for (long v : nums) c.emplace_back(v, den);
  for (Rat& q : c) q.canonicalize();
  return RatPoint(std::move(c));
}

// Random exact point with denominator <= max_den and numerators in a box.
inline RatPoint random_rat_point(int d, std::mt19937_64& rng, int max_den = 24,
                                 int max_num = 60) {
  std::uniform_int_distribution<int> den_dist(1, max_den);
  const int den = den_dist(rng);
  std::uniform_int_distribution<int> num_dist(-max_num, max_num);
  std::vector<Rat> c;
  long sum = 0;
  for (int i = 0; i < d; ++i) {
    const int num = num_dist(rng);
    sum += num;
    c.emplace_back(num, den);
  }
  c.emplace_back(-sum, den);
  for (Rat& q : c) q.canonicalize();
  return RatPoint(std::move(c));
}

inline Point random_point(int d, std::mt19937_64& rng, double box = 1.0) {
  std::uniform_real_distribution<double> u(-box, box);
  std::vector<double> c(static_cast<size_t>(d));
  for (double& v : c) v = u(rng);
  return project_to_homogeneous(std::span<const double>(c));
}

inline HomogIndex idx(std::vector<int> e) { return HomogIndex(std::move(e)); }

}  // namespace adf_test
