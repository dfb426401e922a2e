// Exact rational scalars and small combinatorial helpers shared by the
// lattice and cubature code. Backed by GMP; values are always canonical.
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace adf {

using Int = mpz_class;
using Rat = mpq_class;

inline constexpr int max_dimension = 8;

// Thrown when an enumeration or scan would exceed the configured cell budget.
class budget_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Int factorial(int n);
Int binomial(int n, int k);  // 0 outside 0 <= k <= n

// Multinomial (d+1)! / (p_1! ... p_l!) for a composition p.
Int multinomial(int n, const std::vector<int>& parts);

Int floor_int(const Rat& q);
Int ceil_int(const Rat& q);

double to_double(const Rat& q);

// "p" or "p/q", canonical sign on the numerator.
std::string rat_string(const Rat& q);
Rat rat_from_string(std::string_view s);

// Shortest decimal that round-trips a double (17 significant digits).
std::string decimal17(double x);

void check_dimension(int d);
void check_order(int n);  // n >= 1

}  // namespace adf
