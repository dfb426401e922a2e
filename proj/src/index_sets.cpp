#include "adf/index_sets.hpp"

#include <algorithm>
#include <functional>

namespace adf {

namespace {

void sort_descending_lex(std::vector<HomogIndex>& v) {
  std::sort(v.begin(), v.end(),
            [](const HomogIndex& a, const HomogIndex& b) { return b < a; });
}

void for_each_alpha_below(int d, int budget,
                          const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> alpha(static_cast<size_t>(d), 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == d) {
      fn(alpha);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      alpha[static_cast<size_t>(pos)] = v;
      rec(pos + 1, left - v);
    }
    alpha[static_cast<size_t>(pos)] = 0;
  };
  if (budget >= 0) rec(0, budget);
}

}  // namespace

bool in_hn(const HomogIndex& k, int n) {
  const int m = k.size();
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const int diff = k[i] - k[j];
      if (diff <= -m * n || diff > m * n) return false;
    }
  return true;
}

bool in_hn_star(const HomogIndex& k, int n) {
  return k.max_entry() - k.min_entry() <= k.size() * n;
}

bool in_hn_interior(const HomogIndex& k, int n) {
  return k.max_entry() - k.min_entry() < k.size() * n;
}

bool in_lambda_n(const HomogIndex& k, int n) {
  return k.sorted_descending() && in_hn_star(k, n);
}

std::vector<HomogIndex> enum_hn(int d, int n) {
  check_dimension(d);
  check_order(n);
  const int m = d + 1;
  // H_n is the disjoint union of d+1 parallelepiped pieces: for the piece
  // with minimal coordinate at position j, the differences
  // a_i = (k_i - k_j)/(d+1) range over [1, n] for i < j and [0, n-1] for
  // i > j, and determine k via k_j = -sum(a).
  std::vector<HomogIndex> out;
  size_t cells = static_cast<size_t>(m);
  for (int i = 0; i < d; ++i) cells *= static_cast<size_t>(n);
  out.reserve(cells);
  std::vector<int> a(static_cast<size_t>(m), 0);
  for (int j = 0; j < m; ++j) {
    std::function<void(int)> rec = [&](int pos) {
      if (pos == m) {
        long sum = 0;
        for (int v : a) sum += v;
        std::vector<int> k(static_cast<size_t>(m));
        for (int i = 0; i < m; ++i)
          k[static_cast<size_t>(i)] = static_cast<int>(m * a[static_cast<size_t>(i)] - sum);
        out.emplace_back(std::move(k));
        return;
      }
      if (pos == j) {
        a[static_cast<size_t>(pos)] = 0;
        rec(pos + 1);
        return;
      }
      const int lo = pos < j ? 1 : 0;
      const int hi = pos < j ? n : n - 1;
      for (int v = lo; v <= hi; ++v) {
        a[static_cast<size_t>(pos)] = v;
        rec(pos + 1);
      }
    };
    rec(0);
  }
  sort_descending_lex(out);
  return out;
}

std::vector<HomogIndex> enum_hn_star(int d, int n) {
  check_dimension(d);
  if (n < 0) throw std::invalid_argument("enum_hn_star: n must be >= 0");
  if (n == 0) return {zero_index(d)};
  // H*_n is the disjoint union of the S_{d+1} orbits of Lambda_n.
  std::vector<HomogIndex> out;
  for (const HomogIndex& k : enum_lambda(d, n))
    for (HomogIndex& j : orbit(k)) out.push_back(std::move(j));
  sort_descending_lex(out);
  return out;
}

std::vector<HomogIndex> enum_hn_interior(int d, int n) {
  check_dimension(d);
  check_order(n);
  // Entry spreads in H are multiples of d+1, so spread < (d+1)n is the same
  // as spread <= (d+1)(n-1): the interior of H_n is exactly H*_{n-1}.
  return enum_hn_star(d, n - 1);
}

std::vector<HomogIndex> enum_lambda(int d, int n) {
  check_dimension(d);
  if (n < 0) throw std::invalid_argument("enum_lambda: n must be >= 0");
  std::vector<HomogIndex> out;
  for_each_alpha_below(d, n, [&](const std::vector<int>& alpha) {
    out.push_back(index_from_differences(alpha));
  });
  sort_descending_lex(out);
  return out;
}

std::vector<HomogIndex> enum_lambda_interior(int d, int n) {
  check_dimension(d);
  if (n < 0) throw std::invalid_argument("enum_lambda_interior: n must be >= 0");
  std::vector<HomogIndex> out;
  // Strictly decreasing entries with spread < (d+1)n: alpha_i >= 1 and
  // |alpha| <= n-1.
  if (n - 1 - d >= 0) {
    for_each_alpha_below(d, n - 1 - d, [&](const std::vector<int>& beta) {
      std::vector<int> alpha(beta);
      for (int& v : alpha) ++v;
      out.push_back(index_from_differences(alpha));
    });
  }
  sort_descending_lex(out);
  return out;
}

BoundaryClass classify(const HomogIndex& k, int n) {
  check_order(n);
  const int maxv = k.max_entry();
  const int minv = k.min_entry();
  if (maxv - minv > k.size() * n)
    throw std::domain_error("classify: index outside H*_n");
  BoundaryClass bc;
  if (maxv - minv < k.size() * n) return bc;
  bc.interior = false;
  for (int v : k.entries()) {
    if (v == maxv) ++bc.a;
    if (v == minv) ++bc.b;
  }
  return bc;
}

Rat c_weight(const HomogIndex& k, int n) {
  const BoundaryClass bc = classify(k, n);
  if (bc.interior) return 1;
  return Rat(Int(1)) / Rat(binomial(bc.a + bc.b, bc.a));
}

Composition composition_of(const HomogIndex& k) {
  if (!k.sorted_descending())
    throw std::invalid_argument("composition_of: entries must be non-increasing");
  Composition p;
  int run = 1;
  for (int i = 1; i < k.size(); ++i) {
    if (k[i] == k[i - 1]) {
      ++run;
    } else {
      p.parts.push_back(run);
      run = 1;
    }
  }
  p.parts.push_back(run);
  return p;
}

Rat lambda_weight(const HomogIndex& k, int n) {
  check_order(n);
  if (!in_lambda_n(k, n))
    throw std::domain_error("lambda_weight: index outside Lambda_n");
  const Composition p = composition_of(k);
  const int m = k.size();
  if (k[0] - k[m - 1] < m * n) return Rat(multinomial(m, p.parts));
  std::vector<int> merged;
  merged.push_back(p.parts.front() + p.parts.back());
  for (size_t i = 1; i + 1 < p.parts.size(); ++i) merged.push_back(p.parts[i]);
  Int denom = 1;
  for (int q : merged) denom *= factorial(q);
  return Rat(factorial(m)) / Rat(denom);
}

std::vector<HomogIndex> congruence_class(const HomogIndex& j, int n) {
  check_order(n);
  if (!in_hn_star(j, n))
    throw std::domain_error("congruence_class: index outside H*_n");
  const int m = j.size();
  // Candidate shifts l have entries in {-1, 0, 1}: both endpoints lie in the
  // closed domain, so pairwise differences of l are at most 2 in magnitude,
  // and a zero-sum vector with an entry of |2| would violate that.
  std::vector<HomogIndex> out;
  std::vector<int> l(static_cast<size_t>(m), 0);
  std::function<void(int, int)> rec = [&](int pos, int sum) {
    if (pos == m) {
      if (sum != 0) return;
      std::vector<int> k(j.entries());
      for (int i = 0; i < m; ++i) k[static_cast<size_t>(i)] += m * n * l[static_cast<size_t>(i)];
      HomogIndex cand{std::move(k)};
      if (in_hn_star(cand, n)) out.push_back(std::move(cand));
      return;
    }
    for (int v = -1; v <= 1; ++v) {
      l[static_cast<size_t>(pos)] = v;
      rec(pos + 1, sum + v);
    }
  };
  rec(0, 0);
  sort_descending_lex(out);
  return out;
}

}  // namespace adf
