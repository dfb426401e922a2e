#include "adf/trig_basis.hpp"

#include <cmath>

namespace adf {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

bool odd_double(double m) { return std::fmod(m, 2.0) != 0.0; }

// Ratio sin(pi n x) / sin(pi x) with the removable singularity resolved:
// near integer x = m the limit is n * (-1)^{m(n-1)}.
double sin_ratio(int n, double x) {
  const double s = sinpi(x);
  if (std::abs(s) < eps_singular) {
    const double m = std::nearbyint(x);
    double v = static_cast<double>(n);
    if (n > 1 && odd_double(m * static_cast<double>(n - 1))) v = -v;
    return v;
  }
  return sinpi(static_cast<double>(n) * x) / s;
}

Complex unit_phase(double phase) {  // exp(2 pi i phase)
  return {cospi(2.0 * phase), sinpi(2.0 * phase)};
}

}  // namespace

double sinpi(double x) {
  const double m = std::nearbyint(x);
  const double r = x - m;
  double s = std::sin(kPi * r);
  if (odd_double(m)) s = -s;
  return s;
}

double cospi(double x) {
  const double m = std::nearbyint(x);
  const double r = x - m;
  double c = std::cos(kPi * r);
  if (odd_double(m)) c = -c;
  return c;
}

Complex phi(const HomogIndex& k, const Point& t) {
  if (k.size() != t.size()) throw std::invalid_argument("phi: size mismatch");
  double dot = 0;
  for (int i = 0; i < k.size(); ++i) dot += static_cast<double>(k[i]) * t[i];
  return unit_phase(dot / static_cast<double>(k.size()));
}

Complex phi(const HomogIndex& k, const RatPoint& t) {
  if (k.size() != t.size()) throw std::invalid_argument("phi: size mismatch");
  Rat dot = 0;
  for (int i = 0; i < k.size(); ++i) dot += Rat(k[i]) * t[i];
  Rat phase = dot / k.size();
  phase -= Rat(floor_int(phase));  // exact reduction to [0, 1)
  return unit_phase(to_double(phase));
}

namespace {

template <typename P>
Complex tc_impl(const HomogIndex& k, const P& t) {
  const std::vector<HomogIndex> orb = orbit(k);
  Complex sum = 0;
  for (const HomogIndex& j : orb) sum += phi(j, t);
  return sum / static_cast<double>(orb.size());
}

template <typename P>
Complex ts_impl(const HomogIndex& k, const P& t) {
  if (k.size() != t.size()) throw std::invalid_argument("ts: size mismatch");
  Complex sum = 0;
  for (const Permutation& s : all_permutations(k.size())) {
    const Complex v = phi(k, apply_perm(t, s));
    sum += static_cast<double>(s.parity()) * v;
  }
  return sum / to_double(Rat(factorial(k.size())));
}

}  // namespace

Complex tc(const HomogIndex& k, const Point& t) { return tc_impl(k, t); }
Complex tc(const HomogIndex& k, const RatPoint& t) { return tc_impl(k, t); }
Complex ts(const HomogIndex& k, const Point& t) { return ts_impl(k, t); }
Complex ts(const HomogIndex& k, const RatPoint& t) { return ts_impl(k, t); }

double theta_kernel(int n, std::span<const double> t) {
  if (n < 0) throw std::invalid_argument("theta_kernel: n must be >= 0");
  double prod = 1;
  for (double tj : t) prod *= sin_ratio(n, tj);
  return prod;
}

double theta_kernel(int n, const Point& t) {
  return theta_kernel(n, std::span<const double>(t.coords()));
}

double dirichlet_kernel(int n, std::span<const double> t) {
  return theta_kernel(n + 1, t) - theta_kernel(n, t);
}

double dirichlet_kernel(int n, const Point& t) {
  return dirichlet_kernel(n, std::span<const double>(t.coords()));
}

double phi_star_kernel(int n, std::span<const double> t) {
  check_order(n);
  const int m = static_cast<int>(t.size());
  const int d = m - 1;

  std::vector<double> ratio(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) ratio[static_cast<size_t>(i)] = sin_ratio(n, t[i]);

  // coef[s] = s! (d-s)! / (d+1)! for subset size s
  std::vector<double> coef(static_cast<size_t>(d) + 1);
  for (int s = 0; s <= d; ++s)
    coef[static_cast<size_t>(s)] =
        to_double(Rat(factorial(s) * factorial(d - s)) / Rat(factorial(d + 1)));

  double total = 0;
  std::vector<int> others(static_cast<size_t>(d));
  for (int j = 0; j < m; ++j) {
    double prod = 1;
    {
      int idx = 0;
      for (int i = 0; i < m; ++i) {
        if (i == j) continue;
        others[static_cast<size_t>(idx++)] = i;
        prod *= ratio[static_cast<size_t>(i)];
      }
    }
    if (prod == 0) continue;
    double inner = 0;
    const unsigned subsets = 1u << d;
    for (unsigned mask = 0; mask < subsets; ++mask) {
      double arg = t[j];
      int size = 0;
      for (int b = 0; b < d; ++b)
        if (mask & (1u << b)) {
          arg += 2.0 * t[others[static_cast<size_t>(b)]];
          ++size;
        }
      inner += coef[static_cast<size_t>(size)] * cospi(arg);
    }
    total += prod * cospi(static_cast<double>(n) * t[j]) * inner;
  }

  double scale = static_cast<double>(m);
  for (int i = 0; i < d; ++i) scale *= static_cast<double>(n);
  return total / scale;
}

double phi_star_kernel(int n, const Point& t) {
  return phi_star_kernel(n, std::span<const double>(t.coords()));
}

Complex phi_n_kernel(int n, std::span<const double> t) {
  check_order(n);
  const int m = static_cast<int>(t.size());
  // sum_{k in H_n} phi_k(t) = sum_j prod_{i<j} g+(t_i) prod_{l>j} g0(t_l)
  // with g+(t) = e^{i pi (n+1) t} sin(pi n t)/sin(pi t) (geometric sum
  // nu = 1..n) and g0(t) = e^{i pi (n-1) t} (...) (nu = 0..n-1); both
  // degenerate to n at integer t.
  std::vector<Complex> gplus(static_cast<size_t>(m)), gzero(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) {
    const double s = sinpi(t[i]);
    if (std::abs(s) < eps_singular) {
      gplus[static_cast<size_t>(i)] = static_cast<double>(n);
      gzero[static_cast<size_t>(i)] = static_cast<double>(n);
    } else {
      const double r = sinpi(static_cast<double>(n) * t[i]) / s;
      gplus[static_cast<size_t>(i)] =
          r * Complex(cospi((n + 1) * t[i]), sinpi((n + 1) * t[i]));
      gzero[static_cast<size_t>(i)] =
          r * Complex(cospi((n - 1) * t[i]), sinpi((n - 1) * t[i]));
    }
  }
  Complex total = 0;
  for (int j = 0; j < m; ++j) {
    Complex prod = 1;
    for (int i = 0; i < j; ++i) prod *= gplus[static_cast<size_t>(i)];
    for (int l = j + 1; l < m; ++l) prod *= gzero[static_cast<size_t>(l)];
    total += prod;
  }
  double scale = static_cast<double>(m);
  for (int i = 0; i < m - 1; ++i) scale *= static_cast<double>(n);
  return total / scale;
}

Complex phi_n_kernel(int n, const Point& t) {
  return phi_n_kernel(n, std::span<const double>(t.coords()));
}

int TrigPoly::degree() const {
  int deg = 0;
  for (const auto& [k, c] : coeffs) {
    const HomogIndex s = sorted_descending(k);
    deg = std::max(deg, (s[0] - s[s.size() - 1]) / s.size());
  }
  return deg;
}

Complex TrigPoly::eval(const Point& t) const {
  Complex sum = 0;
  for (const auto& [k, c] : coeffs) {
    switch (basis) {
      case Basis::Exp: sum += c * phi(k, t); break;
      case Basis::GenCosine: sum += c * tc(k, t); break;
      case Basis::GenSine: sum += c * ts(k, t); break;
    }
  }
  return sum;
}

TrigPoly make_trig_poly(Basis basis, int d, std::map<HomogIndex, Complex> coeffs) {
  check_dimension(d);
  for (const auto& [k, c] : coeffs) {
    if (k.dim() != d) throw std::invalid_argument("TrigPoly: key dimension mismatch");
    if (basis == Basis::GenCosine && !k.sorted_descending())
      throw std::invalid_argument("TrigPoly: GenCosine keys must be sorted");
    if (basis == Basis::GenSine) {
      for (int i = 0; i + 1 < k.size(); ++i)
        if (k[i] <= k[i + 1])
          throw std::invalid_argument("TrigPoly: GenSine keys must be strictly decreasing");
    }
  }
  return TrigPoly{basis, d, std::move(coeffs)};
}

Complex partial_sum(const TrigPoly& f, int n, const Point& t) {
  if (f.basis != Basis::Exp)
    throw std::invalid_argument("partial_sum: expects the Exp basis");
  for (const auto& [k, c] : f.coeffs)
    if (k.max_entry() - k.min_entry() > k.size() * n)
      throw std::domain_error("partial_sum: key outside H*_n: " + k.str());
  return f.eval(t);
}

}  // namespace adf
