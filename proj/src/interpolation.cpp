#include "adf/interpolation.hpp"

#include <algorithm>
#include <cmath>

namespace adf {

namespace {

// Per-node evaluation data: the fundamental function of node j is
//   In:     Phi_n(t - j')                       (complex)
//   InStar: Phi*_n(t - j')
//   Ln:     (d!/n^d) (1/(d+1)!) sum_sigma rho(sigma) DTheta(t - (j sigma)')
//   LnStar: c_j sum_{k in orbit(j)} Phi*_n(t - k')
// where DTheta = Theta_n - Theta_{n-1} and the sigma sums use invariance of
// the kernels to shift the group action onto the node.
struct NodeData {
  double factor = 1;                 // c_j, or the Ln prefactor
  std::vector<double> shift_coords;  // orbit points, stride d+1
  std::vector<double> signs;         // parity per orbit point (Ln only)
  std::vector<int> int_entries;      // raw integer indices, stride d+1
};

struct Scan {
  InterpKind kind;
  int d, n, m;
  std::vector<HomogIndex> ids;
  std::vector<NodeData> nodes;
};

std::vector<double> node_doubles(const HomogIndex& j, int n) {
  return to_point(node_point(j, n)).coords();
}

Scan build_scan(InterpKind kind, int d, int n) {
  Scan sc{kind, d, n, d + 1, interpolation_nodes(kind, d, n), {}};
  sc.nodes.reserve(sc.ids.size());
  const double dfact = to_double(Rat(factorial(d)));
  const double dp1fact = to_double(Rat(factorial(d + 1)));
  double nd = 1;
  for (int i = 0; i < d; ++i) nd *= n;
  for (const HomogIndex& j : sc.ids) {
    NodeData nd_entry;
    switch (kind) {
      case InterpKind::In:
      case InterpKind::InStar: {
        auto c = node_doubles(j, n);
        nd_entry.shift_coords = std::move(c);
        nd_entry.int_entries = j.entries();
        break;
      }
      case InterpKind::LnStar: {
        nd_entry.factor = to_double(c_weight(j, n));
        for (const HomogIndex& k : orbit(j)) {
          auto c = node_doubles(k, n);
          nd_entry.shift_coords.insert(nd_entry.shift_coords.end(), c.begin(), c.end());
          nd_entry.int_entries.insert(nd_entry.int_entries.end(),
                                      k.entries().begin(), k.entries().end());
        }
        break;
      }
      case InterpKind::Ln: {
        nd_entry.factor = dfact / (nd * dp1fact);
        for (const Permutation& s : all_permutations(d + 1)) {
          auto c = node_doubles(apply_perm(j, s), n);
          nd_entry.shift_coords.insert(nd_entry.shift_coords.end(), c.begin(), c.end());
          nd_entry.signs.push_back(static_cast<double>(s.parity()));
        }
        break;
      }
    }
    sc.nodes.push_back(std::move(nd_entry));
  }
  return sc;
}

Complex eval_node(const Scan& sc, const NodeData& nd, std::span<const double> t,
                  std::vector<double>& buf) {
  const int m = sc.m;
  buf.resize(static_cast<size_t>(m));
  switch (sc.kind) {
    case InterpKind::In: {
      for (int i = 0; i < m; ++i) buf[static_cast<size_t>(i)] = t[i] - nd.shift_coords[static_cast<size_t>(i)];
      return phi_n_kernel(sc.n, std::span<const double>(buf));
    }
    case InterpKind::InStar: {
      for (int i = 0; i < m; ++i) buf[static_cast<size_t>(i)] = t[i] - nd.shift_coords[static_cast<size_t>(i)];
      return phi_star_kernel(sc.n, std::span<const double>(buf));
    }
    case InterpKind::LnStar: {
      double sum = 0;
      const size_t count = nd.shift_coords.size() / static_cast<size_t>(m);
      for (size_t o = 0; o < count; ++o) {
        const double* base = nd.shift_coords.data() + o * static_cast<size_t>(m);
        for (int i = 0; i < m; ++i) buf[static_cast<size_t>(i)] = t[i] - base[i];
        sum += phi_star_kernel(sc.n, std::span<const double>(buf));
      }
      return nd.factor * sum;
    }
    case InterpKind::Ln: {
      double sum = 0;
      const size_t count = nd.signs.size();
      for (size_t o = 0; o < count; ++o) {
        const double* base = nd.shift_coords.data() + o * static_cast<size_t>(m);
        for (int i = 0; i < m; ++i) buf[static_cast<size_t>(i)] = t[i] - base[i];
        const std::span<const double> s(buf);
        sum += nd.signs[o] * (theta_kernel(sc.n, s) - theta_kernel(sc.n - 1, s));
      }
      return nd.factor * sum;
    }
  }
  return 0;
}

// Per-point lookup tables for Phi*_n(t - k/(3n)) at d = 2. The three
// coordinate values and the three pairwise differences of k range over small
// integer windows, so all trigonometric work per grid point collapses into
// O(n) table entries; each kernel evaluation is then a handful of products.
struct PhiStarTablesD2 {
  int n;
  int voff, woff;
  // [coord][k-value + voff]
  std::vector<double> ratio[3], cn[3], c1[3];
  // [j][k_a - k_b + woff], (a, b) the other two coordinates in cyclic order
  std::vector<double> cd[3];

  PhiStarTablesD2(int n_, std::span<const double> t) : n(n_) {
    voff = 2 * n;
    woff = 3 * n;
    const double inv = 1.0 / (3.0 * n);
    for (int i = 0; i < 3; ++i) {
      ratio[i].resize(static_cast<size_t>(4 * n + 1));
      cn[i].resize(static_cast<size_t>(4 * n + 1));
      c1[i].resize(static_cast<size_t>(4 * n + 1));
      for (int v = -2 * n; v <= 2 * n; ++v) {
        const double x = t[i] - v * inv;
        const double s = sinpi(x);
        double r;
        if (std::abs(s) < eps_singular) {
          const double m = std::nearbyint(x);
          r = static_cast<double>(n);
          if (n > 1 && std::fmod(m * (n - 1), 2.0) != 0.0) r = -r;
        } else {
          r = sinpi(n * x) / s;
        }
        ratio[i][static_cast<size_t>(v + voff)] = r;
        cn[i][static_cast<size_t>(v + voff)] = cospi(n * x);
        c1[i][static_cast<size_t>(v + voff)] = cospi(x);
      }
    }
    static constexpr int pair_a[3] = {1, 2, 0};
    static constexpr int pair_b[3] = {2, 0, 1};
    for (int j = 0; j < 3; ++j) {
      cd[j].resize(static_cast<size_t>(6 * n + 1));
      const double diff = t[pair_a[j]] - t[pair_b[j]];
      for (int w = -3 * n; w <= 3 * n; ++w)
        cd[j][static_cast<size_t>(w + woff)] = cospi(diff - w * inv);
    }
  }

  double eval(const int* k) const {
    static constexpr int pair_a[3] = {1, 2, 0};
    static constexpr int pair_b[3] = {2, 0, 1};
    double total = 0;
    for (int j = 0; j < 3; ++j) {
      const int a = pair_a[j], b = pair_b[j];
      const double prod = ratio[a][static_cast<size_t>(k[a] + voff)] *
                          ratio[b][static_cast<size_t>(k[b] + voff)];
      if (prod == 0) continue;
      const double inner =
          (2.0 / 3.0) * c1[j][static_cast<size_t>(k[j] + voff)] +
          (1.0 / 3.0) * cd[j][static_cast<size_t>(k[a] - k[b] + woff)];
      total += prod * cn[j][static_cast<size_t>(k[j] + voff)] * inner;
    }
    return total / (3.0 * n * n);
  }
};

double lebesgue_sum(const Scan& sc, std::span<const double> t,
                    std::vector<double>& buf) {
  double s = 0;
  for (const NodeData& nd : sc.nodes)
    s += std::abs(eval_node(sc, nd, t, buf));
  return s;
}

double lebesgue_sum_fast_d2(const Scan& sc, std::span<const double> t) {
  const PhiStarTablesD2 tables(sc.n, t);
  double s = 0;
  for (const NodeData& nd : sc.nodes) {
    double v = 0;
    const size_t groups = nd.int_entries.size() / 3;
    for (size_t o = 0; o < groups; ++o) v += tables.eval(nd.int_entries.data() + 3 * o);
    s += std::abs(nd.factor * v);
  }
  return s;
}

}  // namespace

// Node sum of |fundamental| at one point; takes the same table fast path
// as the grid maximizer where one exists.
double lebesgue_function(InterpKind kind, int d, int n, const Point& t) {
  const Scan sc = build_scan(kind, d, n);
  const std::span<const double> ts(t.coords());
  if (d == 2 && (kind == InterpKind::InStar || kind == InterpKind::LnStar))
    return lebesgue_sum_fast_d2(sc, ts);
  std::vector<double> buf;
  return lebesgue_sum(sc, ts, buf);
}

std::vector<HomogIndex> interpolation_nodes(InterpKind kind, int d, int n) {
  check_dimension(d);
  check_order(n);
  switch (kind) {
    case InterpKind::In: return enum_hn(d, n);
    case InterpKind::InStar: return enum_hn_star(d, n);
    case InterpKind::LnStar: return enum_lambda(d, n);
    case InterpKind::Ln: {
      auto nodes = enum_lambda_interior(d, n);
      if (nodes.empty())
        throw std::invalid_argument(
            "Ln interpolation: empty node set (requires n >= d+1)");
      return nodes;
    }
  }
  throw std::invalid_argument("unknown interpolation kind");
}

Interpolant make_interpolant(InterpKind kind, int d, int n,
                             std::map<HomogIndex, Complex> samples) {
  const std::vector<HomogIndex> nodes = interpolation_nodes(kind, d, n);
  for (const HomogIndex& j : nodes)
    if (!samples.count(j))
      throw std::invalid_argument("interpolant: missing sample for node " + j.str());
  if (samples.size() != nodes.size()) {
    for (const auto& [k, v] : samples)
      if (std::find(nodes.begin(), nodes.end(), k) == nodes.end())
        throw std::invalid_argument("interpolant: unexpected sample key " + k.str());
  }
  return Interpolant{kind, d, n, std::move(samples)};
}

Interpolant sample_function(InterpKind kind, int d, int n, const NodeFn& f) {
  std::map<HomogIndex, Complex> samples;
  for (const HomogIndex& j : interpolation_nodes(kind, d, n))
    samples.emplace(j, f(node_point(j, n)));
  return Interpolant{kind, d, n, std::move(samples)};
}

Complex eval(const Interpolant& f, const Point& t) {
  const Scan sc = build_scan(f.kind, f.d, f.n);
  std::vector<double> buf;
  Complex sum = 0;
  for (size_t i = 0; i < sc.ids.size(); ++i)
    sum += f.samples.at(sc.ids[i]) *
           eval_node(sc, sc.nodes[i], std::span<const double>(t.coords()), buf);
  return sum;
}

Complex fundamental(InterpKind kind, int d, int n, const HomogIndex& j,
                    const Point& t) {
  const Scan sc = build_scan(kind, d, n);
  const auto it = std::find(sc.ids.begin(), sc.ids.end(), j);
  if (it == sc.ids.end())
    throw std::invalid_argument("fundamental: not a node of this operator: " + j.str());
  std::vector<double> buf;
  return eval_node(sc, sc.nodes[static_cast<size_t>(it - sc.ids.begin())],
                   std::span<const double>(t.coords()), buf);
}

std::vector<Point> simplex_grid(int d, int resolution) {
  check_dimension(d);
  if (resolution < 1) throw std::invalid_argument("grid resolution must be >= 1");
  const int m = d + 1;
  // Vertices of the simplex are 0 and v^k/(d+1); a barycentric combination
  // with weights m_k/G has coordinates (integer vector)/(G(d+1)), which keeps
  // the zero-sum exact before the float division.
  std::vector<std::vector<long>> verts;
  for (int k = 1; k <= d; ++k) {
    std::vector<long> v(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) v[static_cast<size_t>(i)] = (i < k) ? (m - k) : -k;
    verts.push_back(std::move(v));
  }
  std::vector<Point> out;
  std::vector<int> w(static_cast<size_t>(d), 0);  // weights on v^1..v^d
  const double scale = 1.0 / (static_cast<double>(resolution) * m);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == d) {
      std::vector<double> c(static_cast<size_t>(m), 0.0);
      long acc = 0;
      for (int i = 0; i < m; ++i) {
        long num = 0;
        for (int k = 0; k < d; ++k)
          num += static_cast<long>(w[static_cast<size_t>(k)]) * verts[static_cast<size_t>(k)][static_cast<size_t>(i)];
        c[static_cast<size_t>(i)] = static_cast<double>(num) * scale;
        acc += num;
      }
      (void)acc;  // zero by construction
      out.emplace_back(std::move(c));
      return;
    }
    for (int v = 0; v <= left; ++v) {
      w[static_cast<size_t>(pos)] = v;
      rec(pos + 1, left - v);
    }
    w[static_cast<size_t>(pos)] = 0;
  };
  rec(0, resolution);
  return out;
}

double lebesgue_estimate(InterpKind kind, int d, int n, int grid_resolution) {
  check_dimension(d);
  check_order(n);
  if (grid_resolution < 4 * n)
    throw std::invalid_argument("lebesgue_estimate: grid resolution must be >= 4n");

  const Scan sc = build_scan(kind, d, n);

  std::vector<Point> points = simplex_grid(d, grid_resolution);

  // Midpoints of adjacent nodes (pairs at the minimal node spacing); the
  // maximum of the node sum typically sits between nodes.
  {
    std::vector<RatPoint> nodes;
    for (const HomogIndex& j : sc.ids) nodes.push_back(node_point(j, n));
    std::vector<std::vector<double>> dnodes;
    for (const RatPoint& p : nodes) dnodes.push_back(to_point(p).coords());
    double min_d2 = 0;
    bool have = false;
    for (size_t a = 0; a < dnodes.size(); ++a)
      for (size_t b = a + 1; b < dnodes.size(); ++b) {
        double d2 = 0;
        for (size_t i = 0; i < dnodes[a].size(); ++i) {
          const double diff = dnodes[a][i] - dnodes[b][i];
          d2 += diff * diff;
        }
        if (!have || d2 < min_d2) { min_d2 = d2; have = true; }
      }
    if (have) {
      const double tol = min_d2 * (1 + 1e-9);
      for (size_t a = 0; a < dnodes.size(); ++a)
        for (size_t b = a + 1; b < dnodes.size(); ++b) {
          double d2 = 0;
          for (size_t i = 0; i < dnodes[a].size(); ++i) {
            const double diff = dnodes[a][i] - dnodes[b][i];
            d2 += diff * diff;
          }
          if (d2 <= tol) {
            std::vector<Rat> mid;
            for (int i = 0; i < d + 1; ++i)
              mid.push_back((nodes[a][i] + nodes[b][i]) / 2);
            points.push_back(to_point(RatPoint(std::move(mid))));
          }
        }
    }
  }

  // The node sums for the symmetric kinds are invariant under the group, so
  // the simplex covers the whole domain; I_n is not symmetric and needs the
  // group images of each grid point.
  std::vector<Permutation> sigmas;
  if (kind == InterpKind::In) sigmas = all_permutations(d + 1);

  const bool fast = d == 2 && (kind == InterpKind::InStar || kind == InterpKind::LnStar);
  double best = 0;
  std::vector<double> buf;
  std::vector<double> tperm(static_cast<size_t>(d) + 1);
  for (const Point& t : points) {
    if (sigmas.empty()) {
      const std::span<const double> ts(t.coords());
      const double s = fast ? lebesgue_sum_fast_d2(sc, ts) : lebesgue_sum(sc, ts, buf);
      best = std::max(best, s);
    } else {
      for (const Permutation& sg : sigmas) {
        for (int i = 0; i <= d; ++i) tperm[static_cast<size_t>(i)] = t[sg(i)];
        best = std::max(best, lebesgue_sum(sc, std::span<const double>(tperm), buf));
      }
    }
  }
  return best;
}

}  // namespace adf
