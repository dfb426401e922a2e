#include "adf/chebyshev.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace adf {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kUEvalEps = 1e-8;

Complex unit_phase_rat(Rat phase) {
  phase -= Rat(floor_int(phase));
  const double p = to_double(phase);
  return {cospi(2.0 * p), sinpi(2.0 * p)};
}

template <typename GetExp>
std::vector<Complex> elementary_symmetric(int m, const GetExp& x) {
  // e[k] after processing i factors of prod (1 + x_i y)
  std::vector<Complex> e(static_cast<size_t>(m) + 1, 0.0);
  e[0] = 1.0;
  for (int i = 0; i < m; ++i) {
    const Complex xi = x(i);
    for (int k = std::min(i + 1, m); k >= 1; --k)
      e[static_cast<size_t>(k)] += xi * e[static_cast<size_t>(k) - 1];
  }
  return e;
}

std::vector<Complex> z_from_elementary(int d, const std::vector<Complex>& e) {
  std::vector<Complex> z(static_cast<size_t>(d));
  for (int k = 1; k <= d; ++k)
    z[static_cast<size_t>(k) - 1] =
        e[static_cast<size_t>(k)] / to_double(Rat(binomial(d + 1, k)));
  return z;
}

}  // namespace

ChebIndex::ChebIndex(std::vector<int> v) : a(std::move(v)) {
  if (a.empty()) throw std::invalid_argument("ChebIndex: empty");
  for (int x : a)
    if (x < 0) throw std::invalid_argument("ChebIndex: negative component");
}

int ChebIndex::degree() const { return std::accumulate(a.begin(), a.end(), 0); }

std::string ChebIndex::str() const {
  std::string s = "(";
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(a[i]);
  }
  return s + ")";
}

ChebIndex unit_cheb(int d, int k) {
  if (k < 1 || k > d) throw std::invalid_argument("unit_cheb: k out of range");
  std::vector<int> v(static_cast<size_t>(d), 0);
  v[static_cast<size_t>(k) - 1] = 1;
  return ChebIndex(std::move(v));
}

ChebIndex alpha_of(const HomogIndex& k) {
  if (!k.sorted_descending())
    throw std::invalid_argument("alpha_of: index must be sorted descending");
  const int d = k.dim();
  std::vector<int> a(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) a[static_cast<size_t>(i)] = (k[i] - k[i + 1]) / (d + 1);
  return ChebIndex(std::move(a));
}

HomogIndex k_of(const ChebIndex& alpha) {
  return index_from_differences(std::span<const int>(alpha.a));
}

HomogIndex v_circ(int d) {
  check_dimension(d);
  return index_from_differences(std::vector<int>(static_cast<size_t>(d), 1));
}

HomogIndex v_star(int d) {
  check_dimension(d);
  std::vector<int> e(static_cast<size_t>(d) + 1, 0);
  e.front() = d + 1;
  e.back() = -(d + 1);
  return HomogIndex(std::move(e));
}

std::vector<Complex> z_map(const Point& t) {
  const int m = t.size();
  const auto e = elementary_symmetric(
      m, [&](int i) { return Complex{cospi(2.0 * t[i]), sinpi(2.0 * t[i])}; });
  return z_from_elementary(m - 1, e);
}

std::vector<Complex> z_map(const RatPoint& t) {
  const int m = t.size();
  const auto e = elementary_symmetric(m, [&](int i) { return unit_phase_rat(t[i]); });
  return z_from_elementary(m - 1, e);
}

std::vector<double> x_map(std::span<const Complex> z) {
  const int d = static_cast<int>(z.size());
  for (int k = 1; k <= d; ++k) {
    const Complex resid = z[static_cast<size_t>(k) - 1] -
                          std::conj(z[static_cast<size_t>(d - k)]);
    if (std::abs(resid) > 1e-9)
      throw std::invalid_argument("x_map: conjugation symmetry violated");
  }
  std::vector<double> x(static_cast<size_t>(d));
  for (int k = 1; 2 * k <= d; ++k) {
    const Complex zk = z[static_cast<size_t>(k) - 1];
    const Complex zc = z[static_cast<size_t>(d - k)];
    x[static_cast<size_t>(k) - 1] = real((zk + zc) / 2.0);
    x[static_cast<size_t>(d - k)] = real((zk - zc) / Complex(0.0, 2.0));
  }
  if (d % 2 == 1) {
    const int mid = (d + 1) / 2;
    x[static_cast<size_t>(mid) - 1] = real(z[static_cast<size_t>(mid) - 1]) / std::sqrt(2.0);
  }
  return x;
}

Complex t_eval(const ChebIndex& alpha, const Point& t) {
  return tc(k_of(alpha), t);
}

Complex u_eval(const ChebIndex& alpha, const Point& t) {
  const int d = alpha.dim();
  const HomogIndex v0 = v_circ(d);
  const Complex den = ts(v0, t);
  if (std::abs(den) < kUEvalEps)
    throw std::domain_error("u_eval: at a zero of TS_{v°}; no fallback here");
  return ts(add(k_of(alpha), v0), t) / den;
}

bool ZPoly::GradedLex::operator()(const std::vector<int>& x,
                                  const std::vector<int>& y) const {
  const int dx = std::accumulate(x.begin(), x.end(), 0);
  const int dy = std::accumulate(y.begin(), y.end(), 0);
  if (dx != dy) return dx < dy;
  return x < y;
}

ZPoly ZPoly::constant(int d, Rat v) {
  ZPoly p(d);
  p.add_term(std::vector<int>(static_cast<size_t>(d), 0), CRat{std::move(v), 0});
  return p;
}

int ZPoly::degree() const {
  if (terms_.empty()) return -1;
  const auto& expo = terms_.rbegin()->first;
  return std::accumulate(expo.begin(), expo.end(), 0);
}

void ZPoly::add_term(std::vector<int> expo, const CRat& c) {
  if (static_cast<int>(expo.size()) != d_)
    throw std::invalid_argument("ZPoly: exponent arity mismatch");
  auto [it, inserted] = terms_.emplace(std::move(expo), c);
  if (!inserted) {
    it->second.re += c.re;
    it->second.im += c.im;
    if (it->second.is_zero()) terms_.erase(it);
  } else if (it->second.is_zero()) {
    terms_.erase(it);
  }
}

ZPoly& ZPoly::operator+=(const ZPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

ZPoly& ZPoly::operator-=(const ZPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, CRat{-c.re, -c.im});
  return *this;
}

ZPoly& ZPoly::scale(const Rat& f) {
  if (f == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) {
    c.re *= f;
    c.im *= f;
  }
  return *this;
}

void ZPoly::add_scaled(const ZPoly& o, const Rat& f) {
  if (f == 0) return;
  for (const auto& [e, c] : o.terms_) add_term(e, CRat{c.re * f, c.im * f});
}

ZPoly ZPoly::shifted(int var) const {
  if (var < 1 || var > d_) throw std::invalid_argument("ZPoly::shifted: bad variable");
  ZPoly out(d_);
  for (const auto& [e, c] : terms_) {
    std::vector<int> expo(e);
    ++expo[static_cast<size_t>(var) - 1];
    out.terms_.emplace(std::move(expo), c);
  }
  return out;
}

Complex ZPoly::eval(std::span<const Complex> z) const {
  if (static_cast<int>(z.size()) != d_)
    throw std::invalid_argument("ZPoly::eval: arity mismatch");
  Complex sum = 0;
  for (const auto& [e, c] : terms_) {
    Complex term = c.to_complex();
    for (int v = 0; v < d_; ++v) {
      const Complex zv = z[static_cast<size_t>(v)];
      for (int p = 0; p < e[static_cast<size_t>(v)]; ++p) term *= zv;
    }
    sum += term;
  }
  return sum;
}

ChebEngine::ChebEngine(int d, int degree_cap) : d_(d), cap_(degree_cap) {
  check_dimension(d);
  if (cap_ < 1) throw std::invalid_argument("ChebEngine: degree cap must be >= 1");
  const std::vector<int> zero(static_cast<size_t>(d_), 0);
  for (Family f : {kT, kU}) {
    store_[f].emplace(zero, ZPoly::constant(d_, 1));
    for (int k = 1; k <= d_; ++k) {
      ZPoly p(d_);
      std::vector<int> expo(zero);
      expo[static_cast<size_t>(k) - 1] = 1;
      const Rat coeff = f == kT ? Rat(1) : Rat(binomial(d_ + 1, k));
      p.add_term(std::move(expo), CRat{coeff, 0});
      store_[f].emplace(unit_cheb(d_, k).a, std::move(p));
    }
  }
}

const ZPoly& ChebEngine::t_poly(const ChebIndex& alpha) { return poly(kT, alpha); }
const ZPoly& ChebEngine::u_poly(const ChebIndex& alpha) { return poly(kU, alpha); }

const ZPoly& ChebEngine::poly(Family f, const ChebIndex& alpha) {
  if (alpha.dim() != d_) throw std::invalid_argument("ChebEngine: arity mismatch");
  if (alpha.degree() > cap_)
    throw std::invalid_argument("ChebEngine: degree cap exceeded for " + alpha.str());
  if (alpha.degree() > done_[f]) extend(f, alpha.degree());
  return store_[f].at(alpha.a);
}

Complex ChebEngine::u_eval(const ChebIndex& alpha, const Point& t) {
  const HomogIndex v0 = v_circ(d_);
  const Complex den = ts(v0, t);
  if (std::abs(den) >= kUEvalEps)
    return ts(add(k_of(alpha), v0), t) / den;
  const auto z = z_map(t);
  return u_poly(alpha).eval(std::span<const Complex>(z));
}

void ChebEngine::extend(Family f, int target_degree) {
  // Advance one degree layer at a time. The relations
  //   binom(d+1,i) z_i P_alpha = sum_{j in orbit(v^i)} P_{alpha + alpha(j)}
  // over all |alpha| = L-1 and i = 1..d are assembled into a linear system
  // for the unknown layer {P_beta : |beta| = L} and solved exactly.
  while (done_[f] < target_degree) {
    const int layer = done_[f] + 1;

    std::vector<std::vector<int>> unknowns;
    {
      std::vector<int> a(static_cast<size_t>(d_), 0);
      std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == d_ - 1) {
          a[static_cast<size_t>(pos)] = left;
          unknowns.push_back(a);
          return;
        }
        for (int v = left; v >= 0; --v) {
          a[static_cast<size_t>(pos)] = v;
          rec(pos + 1, left - v);
        }
      };
      rec(0, layer);
    }
    std::map<std::vector<int>, size_t> unknown_index;
    for (size_t i = 0; i < unknowns.size(); ++i) unknown_index.emplace(unknowns[i], i);

    // Difference tuples alpha(j) for j in orbit(v^i), per i.
    std::vector<std::vector<std::vector<int>>> shifts(static_cast<size_t>(d_));
    for (int i = 1; i <= d_; ++i) {
      std::vector<int> ei(static_cast<size_t>(d_), 0);
      ei[static_cast<size_t>(i) - 1] = 1;
      for (const HomogIndex& j : orbit(index_from_differences(ei))) {
        std::vector<int> aj(static_cast<size_t>(d_));
        for (int l = 0; l < d_; ++l)
          aj[static_cast<size_t>(l)] = (j[l] - j[l + 1]) / (d_ + 1);
        shifts[static_cast<size_t>(i) - 1].push_back(std::move(aj));
      }
    }

    std::vector<std::vector<Rat>> rows;
    std::vector<ZPoly> rhs;
    std::vector<std::vector<int>> lower;
    {
      std::vector<int> a(static_cast<size_t>(d_), 0);
      std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == d_ - 1) {
          a[static_cast<size_t>(pos)] = left;
          lower.push_back(a);
          return;
        }
        for (int v = left; v >= 0; --v) {
          a[static_cast<size_t>(pos)] = v;
          rec(pos + 1, left - v);
        }
      };
      rec(0, layer - 1);
    }

    for (const std::vector<int>& a : lower) {
      const ZPoly& pa = store_[f].at(a);
      for (int i = 1; i <= d_; ++i) {
        ZPoly b = pa.shifted(i);
        b.scale(Rat(binomial(d_ + 1, i)));
        std::vector<Rat> row(unknowns.size(), Rat(0));
        bool nontrivial = false;
        for (const std::vector<int>& sh : shifts[static_cast<size_t>(i) - 1]) {
          std::vector<int> beta(a);
          for (int l = 0; l < d_; ++l) beta[static_cast<size_t>(l)] += sh[static_cast<size_t>(l)];
          const bool has_negative =
              std::any_of(beta.begin(), beta.end(), [](int v) { return v < 0; });
          if (has_negative) {
            if (f == kU) continue;  // U vanishes on indices with a -1 component
            const HomogIndex ks = sorted_descending(index_from_differences(beta));
            beta = alpha_of(ks).a;
          }
          const int deg = std::accumulate(beta.begin(), beta.end(), 0);
          if (deg < layer) {
            b -= store_[f].at(beta);
          } else {
            row[unknown_index.at(beta)] += 1;
            nontrivial = true;
          }
        }
        if (nontrivial || !b.is_zero()) {
          rows.push_back(std::move(row));
          rhs.push_back(std::move(b));
        }
      }
    }

    // Exact Gauss-Jordan elimination with polynomial right-hand sides.
    size_t rank = 0;
    std::vector<size_t> pivot_row(unknowns.size());
    for (size_t col = 0; col < unknowns.size(); ++col) {
      size_t r = rank;
      while (r < rows.size() && rows[r][col] == 0) ++r;
      if (r == rows.size())
        throw std::logic_error("recurrence layer is under-determined");
      std::swap(rows[r], rows[rank]);
      std::swap(rhs[r], rhs[rank]);
      const Rat piv = rows[rank][col];
      for (size_t c = col; c < unknowns.size(); ++c) rows[rank][c] /= piv;
      rhs[rank].scale(Rat(1) / piv);
      for (size_t rr = 0; rr < rows.size(); ++rr) {
        if (rr == rank || rows[rr][col] == 0) continue;
        const Rat factor = rows[rr][col];
        for (size_t c = col; c < unknowns.size(); ++c)
          rows[rr][c] -= factor * rows[rank][c];
        rhs[rr].add_scaled(rhs[rank], -factor);
      }
      pivot_row[col] = rank;
      ++rank;
    }
    for (size_t r = rank; r < rows.size(); ++r) {
      const bool zero_row =
          std::all_of(rows[r].begin(), rows[r].end(), [](const Rat& q) { return q == 0; });
      if (!zero_row || !rhs[r].is_zero())
        throw std::logic_error("recurrence layer is inconsistent");
    }
    for (size_t col = 0; col < unknowns.size(); ++col)
      store_[f].emplace(unknowns[col], std::move(rhs[pivot_row[col]]));

    done_[f] = layer;
  }
}

double weight_w(const Point& t) {
  double prod = 1;
  for (int i = 0; i < t.size(); ++i)
    for (int j = i + 1; j < t.size(); ++j) {
      const double s = sinpi(t[i] - t[j]);
      prod *= s * s;
    }
  return prod;
}

double weight_w(const RatPoint& t) {
  double prod = 1;
  for (int i = 0; i < t.size(); ++i)
    for (int j = i + 1; j < t.size(); ++j) {
      // exact rational difference first, then one accurate sinpi
      const double s = sinpi(to_double(Rat(t[i] - t[j])));
      prod *= s * s;
    }
  return prod;
}

ZPoly weight_poly(ChebEngine& engine) {
  const int d = engine.dim();
  const int m = d * (d + 1) / 2;
  const HomogIndex v0 = v_circ(d);
  ZPoly w(d);
  for (const Permutation& s : all_permutations(d + 1)) {
    const HomogIndex k = sorted_descending(add(v0, apply_perm(v0, s)));
    w.add_scaled(engine.t_poly(alpha_of(k)), Rat(s.parity()));
  }
  Rat factor(factorial(d + 1));
  Rat quarter(-1, 4);
  for (int i = 0; i < m; ++i) factor *= quarter;
  w.scale(factor);
  return w;
}

double c_half(int d) {
  check_dimension(d);
  // 2^{d^2/2} prod_k binom(d+1,k) / pi^d  (= 1 / integral of w^{1/2}).
  double v = std::pow(2.0, d * d / 2.0);
  for (int k = 1; k <= d; ++k) v *= to_double(Rat(binomial(d + 1, k))) / kPi;
  return v;
}

double c_minus_half(int d) {
  check_dimension(d);
  // 2^{-d(d+2)/2} (d+1)! prod_k binom(d+1,k) / pi^d.
  double v = std::pow(2.0, -d * (d + 2) / 2.0) * to_double(Rat(factorial(d + 1)));
  for (int k = 1; k <= d; ++k) v *= to_double(Rat(binomial(d + 1, k))) / kPi;
  return v;
}

namespace {

GaussRule rule_from_nodes(int d, int n, int scale_n,
                          const std::vector<HomogIndex>& idx, bool gauss) {
  GaussRule rule;
  rule.d = d;
  rule.n = n;
  rule.degree = 2 * n - 1;
  Rat cells(d + 1);
  for (int i = 0; i < d; ++i) cells *= scale_n;
  double pre = 1;
  if (gauss) {
    pre = std::pow(2.0, d * (d + 1)) / to_double(cells);
  }
  for (const HomogIndex& j : idx) {
    const RatPoint pre_image = node_point(j, scale_n);
    const auto z = z_map(pre_image);
    rule.nodes.push_back(x_map(std::span<const Complex>(z)));
    if (gauss) {
      rule.weights.push_back(pre * weight_w(pre_image));
    } else {
      const Rat w = lambda_weight(j, scale_n) / cells;
      rule.exact_weights.push_back(w);
      rule.weights.push_back(to_double(w));
    }
    rule.t_preimages.push_back(pre_image);
  }
  return rule;
}

}  // namespace

GaussRule gauss_rule(int d, int n) {
  check_dimension(d);
  check_order(n);
  return rule_from_nodes(d, n, n + d, enum_lambda_interior(d, n + d), true);
}

GaussRule lobatto_rule(int d, int n) {
  check_dimension(d);
  check_order(n);
  return rule_from_nodes(d, n, n, enum_lambda(d, n), false);
}

double apply_rule(const GaussRule& rule,
                  const std::function<double(std::span<const double>)>& f) {
  double sum = 0;
  for (size_t i = 0; i < rule.nodes.size(); ++i)
    sum += rule.weights[i] * f(std::span<const double>(rule.nodes[i]));
  return sum;
}

std::pair<ChebIndex, ChebIndex> ideal_generator(const ChebIndex& alpha) {
  const HomogIndex k = k_of(alpha);
  const HomogIndex shifted = sorted_descending(sub(k, v_star(alpha.dim())));
  return {alpha, alpha_of(shifted)};
}

}  // namespace adf
