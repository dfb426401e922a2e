#include "adf/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>

namespace adf {

namespace {

bool all_congruent(const std::vector<int>& k) {
  const int m = static_cast<int>(k.size());
  auto mod = [m](int v) { int r = v % m; return r < 0 ? r + m : r; };
  for (int v : k)
    if (mod(v) != mod(k[0])) return false;
  return true;
}

enum class SetKind { Hn, HnStar, Lambda, LambdaInterior };

std::vector<HomogIndex> box_scan(int d, int n, SetKind kind) {
  check_dimension(d);
  if (n < 0) throw std::invalid_argument("box_scan: n must be >= 0");
  const int m = d + 1;
  const int bound = m * n;
  double cells = 1;
  for (int i = 0; i < d; ++i) cells *= 2.0 * bound + 1.0;
  if (cells > static_cast<double>(scan_budget()))
    throw budget_error("brute enumeration budget exceeded");

  std::vector<HomogIndex> out;
  std::vector<int> k(static_cast<size_t>(m), 0);
  std::function<void(int, long)> rec = [&](int pos, long sum) {
    if (pos == d) {
      const long last = -sum;
      if (last < -bound || last > bound) return;
      k[static_cast<size_t>(d)] = static_cast<int>(last);
      if (!all_congruent(k)) return;
      bool ok = true;
      switch (kind) {
        case SetKind::Hn:
          for (int i = 0; ok && i < m; ++i)
            for (int j = i + 1; ok && j < m; ++j) {
              const int diff = k[static_cast<size_t>(i)] - k[static_cast<size_t>(j)];
              if (diff <= -bound || diff > bound) ok = false;
            }
          break;
        case SetKind::HnStar:
          for (int i = 0; ok && i < m; ++i)
            for (int j = i + 1; ok && j < m; ++j)
              if (std::abs(k[static_cast<size_t>(i)] - k[static_cast<size_t>(j)]) > bound)
                ok = false;
          break;
        case SetKind::Lambda:
          for (int i = 0; ok && i + 1 < m; ++i)
            if (k[static_cast<size_t>(i)] < k[static_cast<size_t>(i) + 1]) ok = false;
          if (ok && k[0] - k[static_cast<size_t>(d)] > bound) ok = false;
          break;
        case SetKind::LambdaInterior:
          for (int i = 0; ok && i + 1 < m; ++i)
            if (k[static_cast<size_t>(i)] <= k[static_cast<size_t>(i) + 1]) ok = false;
          if (ok && k[0] - k[static_cast<size_t>(d)] >= bound) ok = false;
          break;
      }
      if (ok) out.emplace_back(k);
      return;
    }
    for (int v = -bound; v <= bound; ++v) {
      k[static_cast<size_t>(pos)] = v;
      rec(pos + 1, sum + v);
    }
  };
  rec(0, 0);
  std::sort(out.begin(), out.end(),
            [](const HomogIndex& a, const HomogIndex& b) { return b < a; });
  return out;
}

std::string describe_point(const Point& t) {
  std::string s = "t=(";
  for (int i = 0; i < t.size(); ++i) {
    if (i) s += ',';
    s += decimal17(t[i]);
  }
  return s + ")";
}

Point random_point(int d, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> c(static_cast<size_t>(d));
  for (double& v : c) v = u(rng);
  return project_to_homogeneous(std::span<const double>(c));
}

}  // namespace

long scan_budget() {
  if (const char* env = std::getenv("ADF_MAX_CELLS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    throw std::invalid_argument("ADF_MAX_CELLS must be a positive integer");
  }
  return 10000000L;
}

std::vector<HomogIndex> brute_enum_hn(int d, int n) {
  check_order(n);
  return box_scan(d, n, SetKind::Hn);
}

std::vector<HomogIndex> brute_enum_hn_star(int d, int n) {
  return box_scan(d, n, SetKind::HnStar);
}

std::vector<HomogIndex> brute_enum_lambda(int d, int n) {
  return box_scan(d, n, SetKind::Lambda);
}

std::vector<HomogIndex> brute_enum_lambda_interior(int d, int n) {
  return box_scan(d, n, SetKind::LambdaInterior);
}

Complex direct_kernel_sum(KernelKind kind, int d, int n, const Point& t) {
  check_dimension(d);
  Complex sum = 0;
  double cells = d + 1;
  for (int i = 0; i < d; ++i) cells *= n;
  switch (kind) {
    case KernelKind::Dirichlet: {
      const auto set = enum_hn_star(d, n);
      if (static_cast<long>(set.size()) > kernel_term_budget)
        throw budget_error("kernel term budget exceeded");
      for (const HomogIndex& k : set) sum += phi(k, t);
      return sum;
    }
    case KernelKind::PhiStar: {
      const auto set = enum_hn_star(d, n);
      if (static_cast<long>(set.size()) > kernel_term_budget)
        throw budget_error("kernel term budget exceeded");
      for (const HomogIndex& k : set) sum += to_double(c_weight(k, n)) * phi(k, t);
      return sum / cells;
    }
    case KernelKind::PhiN: {
      const auto set = enum_hn(d, n);
      if (static_cast<long>(set.size()) > kernel_term_budget)
        throw budget_error("kernel term budget exceeded");
      for (const HomogIndex& k : set) sum += phi(k, t);
      return sum / cells;
    }
  }
  throw std::invalid_argument("unknown kernel kind");
}

OracleReport dft_identity_check(int d, int n) {
  check_dimension(d);
  check_order(n);
  if (d > 3 || n > 4)
    throw budget_error("dft_identity_check: supported for d <= 3, n <= 4");
  OracleReport rep{"dft-identity d=" + std::to_string(d) + " n=" + std::to_string(n),
                   0, 0, ""};
  const auto hn = enum_hn(d, n);
  const auto neighborhood = enum_hn_star(d, 3 * n);
  const double cells = static_cast<double>(hn.size());
  const int m = d + 1;
  for (const HomogIndex& k : neighborhood) {
    bool is_zero_mod = true;
    for (int i = 0; i < m; ++i)
      if (k[i] % (m * n) != 0) is_zero_mod = false;
    const double expected = is_zero_mod ? 1.0 : 0.0;

    Complex fwd = 0, inv = 0;
    for (const HomogIndex& j : hn) {
      const Complex v = phi(k, node_point(j, n));  // exact rational phase
      fwd += v;
      inv += std::conj(v);
    }
    fwd /= cells;
    inv /= cells;
    for (const Complex& got : {fwd, inv}) {
      const double err = std::abs(got - expected);
      ++rep.cases_checked;
      if (err > rep.max_abs_error) {
        rep.max_abs_error = err;
        rep.worst_case = "k=" + k.str();
      }
    }
  }
  return rep;
}

Complex reference_integral(Measure m, int d, const NodeFn& f, int degree_bound) {
  if (degree_bound < 0 || degree_bound > 64)
    throw budget_error("reference_integral: degree bound out of range");
  const int n = degree_bound / 2 + 1;  // 2n-1 >= degree_bound
  switch (m) {
    case Measure::OmegaTrig: return integrate(cubature_omega(d, n), f);
    case Measure::SimplexTrig: return integrate(cubature_simplex(d, n), f);
    default:
      throw std::invalid_argument("reference_integral: use the weighted overload");
  }
}

double reference_integral_weighted(Measure m, int d,
                                   const std::function<double(std::span<const double>)>& f,
                                   int degree_bound) {
  if (degree_bound < 0 || degree_bound > 64)
    throw budget_error("reference_integral: degree bound out of range");
  const int n = degree_bound / 2 + 1;
  switch (m) {
    case Measure::WHalf: return apply_rule(gauss_rule(d, n), f);
    case Measure::WMinusHalf: return apply_rule(lobatto_rule(d, n), f);
    default:
      throw std::invalid_argument("reference_integral_weighted: trig measure");
  }
}

std::vector<OracleReport> run_all_pairs(int d, int n_max) {
  check_dimension(d);
  check_order(n_max);
  std::vector<OracleReport> reports;

  auto set_pair = [&](const std::string& name, auto&& fast, auto&& brute) {
    OracleReport rep{name + " d=" + std::to_string(d), 0, 0, ""};
    for (int n = 1; n <= n_max; ++n) {
      const auto a = fast(d, n);
      const auto b = brute(d, n);
      ++rep.cases_checked;  // one set comparison per n
      if (a != b) {
        rep.max_abs_error = 1;
        rep.worst_case = "set mismatch at n=" + std::to_string(n);
      }
    }
    reports.push_back(std::move(rep));
  };
  set_pair("enum-hn", enum_hn, brute_enum_hn);
  set_pair("enum-hn-star", enum_hn_star, brute_enum_hn_star);
  set_pair("enum-lambda", enum_lambda, brute_enum_lambda);
  set_pair("enum-lambda-interior", enum_lambda_interior, brute_enum_lambda_interior);

  std::mt19937_64 rng(20240901);
  auto kernel_pair = [&](const std::string& name, KernelKind kind, auto&& compact) {
    OracleReport rep{name + " d=" + std::to_string(d), 0, 0, ""};
    for (int n = 1; n <= n_max; ++n) {
      for (int c = 0; c < 25; ++c) {
        const Point t = random_point(d, rng);
        const Complex direct = direct_kernel_sum(kind, d, n, t);
        const Complex fast = compact(n, t);
        const double err = std::abs(direct - fast);
        ++rep.cases_checked;
        if (err > rep.max_abs_error) {
          rep.max_abs_error = err;
          rep.worst_case = "n=" + std::to_string(n) + " " + describe_point(t);
        }
      }
    }
    reports.push_back(std::move(rep));
  };
  kernel_pair("kernel-dirichlet", KernelKind::Dirichlet,
              [](int n, const Point& t) { return Complex(dirichlet_kernel(n, t)); });
  kernel_pair("kernel-phi-star", KernelKind::PhiStar,
              [](int n, const Point& t) { return Complex(phi_star_kernel(n, t)); });
  kernel_pair("kernel-phi-n", KernelKind::PhiN,
              [](int n, const Point& t) { return phi_n_kernel(n, t); });

  if (d <= 3) {
    for (int n = 1; n <= std::min(n_max, 4); ++n)
      reports.push_back(dft_identity_check(d, n));
  }
  return reports;
}

}  // namespace adf
