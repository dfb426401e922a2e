#include "adf/rational.hpp"

#include <cstdio>
#include <vector>

namespace adf {

Int factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  Int r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

Int multinomial(int n, const std::vector<int>& parts) {
  Int r = factorial(n);
  int sum = 0;
  for (int p : parts) {
    if (p <= 0) throw std::invalid_argument("multinomial: parts must be positive");
    r /= factorial(p);
    sum += p;
  }
  if (sum != n) throw std::invalid_argument("multinomial: parts do not sum to n");
  return r;
}

Int floor_int(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

Int ceil_int(const Rat& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

double to_double(const Rat& q) { return q.get_d(); }

std::string rat_string(const Rat& q) {
  Rat c(q);
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rat rat_from_string(std::string_view s) {
  Rat q;
  if (mpq_set_str(q.get_mpq_t(), std::string(s).c_str(), 10) != 0)
    throw std::invalid_argument("bad rational literal: " + std::string(s));
  if (q.get_den() <= 0)
    throw std::invalid_argument("bad rational literal (zero or negative denominator): "
                                + std::string(s));
  q.canonicalize();
  return q;
}

std::string decimal17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void check_dimension(int d) {
  if (d < 1 || d > max_dimension)
    throw std::invalid_argument("dimension d must be in [1, " +
                                std::to_string(max_dimension) + "]");
}

void check_order(int n) {
  if (n < 1) throw std::invalid_argument("order n must be >= 1");
}

}  // namespace adf
