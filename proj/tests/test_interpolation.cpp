#include <algorithm>

#include "adf/interpolation.hpp"
#include "test_helpers.hpp"

using namespace adf;
using adf_test::idx;
using adf_test::random_point;

namespace {

const NodeFn one = [](const RatPoint&) { return Complex(1.0); };

// basis-sum oracle for the simplex fundamental function:
// (lambda_j/((d+1)n^d)) sum_{k in Lambda_n} lambda_k TC_k(t) conj(TC_k(j'))
Complex ln_star_fundamental_by_sum(int d, int n, const HomogIndex& j, const Point& t) {
  const RatPoint jn = node_point(j, n);
  Complex sum = 0;
  for (const HomogIndex& k : enum_lambda(d, n))
    sum += to_double(lambda_weight(k, n)) * tc(k, t) * std::conj(tc(k, jn));
  double cells = d + 1;
  for (int i = 0; i < d; ++i) cells *= n;
  return to_double(lambda_weight(j, n)) / cells * sum;
}

// (d!(d+1)!/n^d) sum_{k in Lambda_n interior} TS_k(t) conj(TS_k(j'))
Complex ln_fundamental_by_sum(int d, int n, const HomogIndex& j, const Point& t) {
  const RatPoint jn = node_point(j, n);
  Complex sum = 0;
  for (const HomogIndex& k : enum_lambda_interior(d, n))
    sum += ts(k, t) * std::conj(ts(k, jn));
  double scale = to_double(Rat(factorial(d) * factorial(d + 1)));
  for (int i = 0; i < d; ++i) scale /= n;
  return scale * sum;
}

}  // namespace

TEST_CASE("interpolant construction validates the key set") {
  auto samples = sample_function(InterpKind::LnStar, 2, 2, one).samples;
  CHECK_NOTHROW(make_interpolant(InterpKind::LnStar, 2, 2, samples));

  auto missing = samples;
  missing.erase(missing.begin());
  CHECK_THROWS_WITH_AS(make_interpolant(InterpKind::LnStar, 2, 2, missing),
                       doctest::Contains("missing sample"), std::invalid_argument);

  auto extra = samples;
  extra.emplace(idx({9, 0, -9}), 1.0);
  CHECK_THROWS_WITH_AS(make_interpolant(InterpKind::LnStar, 2, 2, extra),
                       doctest::Contains("unexpected sample key"),
                       std::invalid_argument);

  CHECK_THROWS_AS(interpolation_nodes(InterpKind::Ln, 2, 2), std::invalid_argument);
}

TEST_CASE("symmetric interpolation: constants hit the class sizes") {
  const int d = 2, n = 2;
  const Interpolant f = sample_function(InterpKind::InStar, d, n, one);
  for (const HomogIndex& j : interpolation_nodes(InterpKind::InStar, d, n)) {
    const Complex got = eval(f, to_point(node_point(j, n)));
    const double expect = static_cast<double>(congruence_class(j, n).size());
    CHECK(std::abs(got - expect) < 1e-11);
  }
}

TEST_CASE("symmetric interpolation reproduces interior frequencies") {
  const int d = 2, n = 3;
  const HomogIndex m = idx({3, 0, -3});  // in the interior set of H_3
  const Interpolant f = sample_function(InterpKind::InStar, d, n,
                                        [&](const RatPoint& t) { return phi(m, t); });
  for (const HomogIndex& j : enum_hn_interior(d, n)) {
    const RatPoint node = node_point(j, n);
    CHECK(std::abs(eval(f, to_point(node)) - phi(m, node)) < 1e-10);
  }
}

TEST_CASE("symmetric interpolation: indicator sample reproduces the kernel delta") {
  const int d = 2, n = 2;
  const HomogIndex j0 = enum_hn_interior(d, n)[0];
  std::map<HomogIndex, Complex> samples;
  for (const HomogIndex& j : interpolation_nodes(InterpKind::InStar, d, n))
    samples.emplace(j, j == j0 ? 1.0 : 0.0);
  const Interpolant f = make_interpolant(InterpKind::InStar, d, n, std::move(samples));
  CHECK(std::abs(eval(f, to_point(node_point(j0, n))) - 1.0) < 1e-11);
}

TEST_CASE("half-open interpolation interpolates on its node set") {
  const int d = 2, n = 2;
  const Interpolant f = sample_function(InterpKind::In, d, n, [&](const RatPoint& t) {
    return Complex(to_double(t[0]), to_double(t[1]));
  });
  for (const HomogIndex& j : interpolation_nodes(InterpKind::In, d, n)) {
    const RatPoint node = node_point(j, n);
    CHECK(std::abs(eval(f, to_point(node)) - f.samples.at(j)) < 1e-10);
  }
}

TEST_CASE("sine-space interpolation: node deltas") {
  // n = 3, d = 2: single interior node, fundamental value 1 there
  CHECK(std::abs(fundamental(InterpKind::Ln, 2, 3, idx({3, 0, -3}),
                             to_point(node_point(idx({3, 0, -3}), 3))) -
                 1.0) < 1e-10);
  // n = 5: all six interior nodes
  const auto nodes = interpolation_nodes(InterpKind::Ln, 2, 5);
  CHECK(nodes.size() == 6);
  for (const HomogIndex& j : nodes)
    for (const HomogIndex& m : nodes) {
      const Complex got =
          fundamental(InterpKind::Ln, 2, 5, j, to_point(node_point(m, 5)));
      CHECK(std::abs(got - (j == m ? 1.0 : 0.0)) < 1e-10);
    }
}

TEST_CASE("sine-space interpolation reproduces sine functions") {
  std::mt19937_64 rng(79);
  for (int d : {2, 3}) {
    const int n = d + 2;
    const auto interior = enum_lambda_interior(d, n);
    const HomogIndex k = interior[interior.size() / 2];
    const Interpolant f = sample_function(InterpKind::Ln, d, n,
                                          [&](const RatPoint& t) { return ts(k, t); });
    for (int trial = 0; trial < 50; ++trial) {
      const Point t = random_point(d, rng);
      CHECK(std::abs(eval(f, t) - ts(k, t)) < 1e-9);
    }
  }
}

TEST_CASE("sine-space fundamental matches its basis sum") {
  std::mt19937_64 rng(83);
  const int d = 2, n = 5;
  for (const HomogIndex& j : interpolation_nodes(InterpKind::Ln, d, n))
    for (int trial = 0; trial < 5; ++trial) {
      const Point t = random_point(d, rng);
      CHECK(std::abs(fundamental(InterpKind::Ln, d, n, j, t) -
                     ln_fundamental_by_sum(d, n, j, t)) < 1e-10);
    }
}

TEST_CASE("cosine-space interpolation: delta property on all 15 nodes") {
  const int d = 2, n = 4;
  const auto nodes = interpolation_nodes(InterpKind::LnStar, d, n);
  CHECK(nodes.size() == 15);
  for (const HomogIndex& j : nodes)
    for (const HomogIndex& m : nodes) {
      const Complex got =
          fundamental(InterpKind::LnStar, d, n, j, to_point(node_point(m, n)));
      CHECK(std::abs(got - (j == m ? 1.0 : 0.0)) < 1e-10);
    }
}

TEST_CASE("cosine-space interpolation: constants reproduced everywhere") {
  std::mt19937_64 rng(89);
  for (int d : {2, 3}) {
    const Interpolant f = sample_function(InterpKind::LnStar, d, 3, one);
    for (int trial = 0; trial < 30; ++trial) {
      const Point t = random_point(d, rng);
      CHECK(std::abs(eval(f, t) - 1.0) < 1e-10);
    }
  }
}

TEST_CASE("cosine-space fundamental: compact form equals the TC sum") {
  std::mt19937_64 rng(97);
  for (int d : {2, 3}) {
    const int n = 3;
    const auto nodes = interpolation_nodes(InterpKind::LnStar, d, n);
    for (size_t ji = 0; ji < nodes.size(); ji += 2)
      for (int trial = 0; trial < 5; ++trial) {
        const Point t = random_point(d, rng);
        CHECK(std::abs(fundamental(InterpKind::LnStar, d, n, nodes[ji], t) -
                       ln_star_fundamental_by_sum(d, n, nodes[ji], t)) < 1e-10);
      }
  }
}

TEST_CASE("fundamental functions of the symmetric kinds are real") {
  std::mt19937_64 rng(101);
  for (int d : {2, 3}) {
    const int n = d == 2 ? 4 : 2;
    for (InterpKind kind : {InterpKind::InStar, InterpKind::LnStar}) {
      const auto nodes = interpolation_nodes(kind, d, n);
      for (int trial = 0; trial < 10; ++trial) {
        const Point t = random_point(d, rng);
        const Complex v =
            fundamental(kind, d, n, nodes[static_cast<size_t>(trial) % nodes.size()], t);
        CHECK(std::abs(v.imag()) < 1e-12);
      }
    }
  }
}

TEST_CASE("cosine interpolation is the symmetrized interpolant") {
  // L*_n f = P+ (I*_n f^) where f^ is the discrete invariant extension of f
  // from the simplex: the value at a boundary node is split evenly over its
  // congruence class (the c weight), so that the class sums of the
  // symmetric operator reassemble the simplex samples.
  std::mt19937_64 rng(103);
  const int d = 2, n = 2;
  const auto f = [](const RatPoint& t) {
    const double x = to_double(t[0]), y = to_double(t[1]);
    return Complex(std::cos(x + 2 * y) + 0.5 * x, 0.0);
  };
  const auto f_tilde = [&](const RatPoint& t) {
    std::vector<Rat> c(t.coords());
    std::sort(c.begin(), c.end(), std::greater<Rat>());
    return f(RatPoint(std::move(c)));
  };
  const Interpolant simplex_f = sample_function(InterpKind::LnStar, d, n, f);
  std::map<HomogIndex, Complex> split;
  for (const HomogIndex& j : interpolation_nodes(InterpKind::InStar, d, n))
    split.emplace(j, to_double(c_weight(j, n)) * f_tilde(node_point(j, n)));
  const Interpolant omega_f = make_interpolant(InterpKind::InStar, d, n, split);
  const auto perms = all_permutations(d + 1);
  for (int trial = 0; trial < 25; ++trial) {
    const Point t = random_point(d, rng);
    Complex sym = 0;
    for (const Permutation& s : perms) sym += eval(omega_f, apply_perm(t, s));
    sym /= static_cast<double>(perms.size());
    CHECK(std::abs(eval(simplex_f, t) - sym) < 1e-10);
  }
}

TEST_CASE("cosine-space interpolation projects onto its span at n=5") {
  std::mt19937_64 rng(227);
  const int d = 2, n = 5;
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  std::map<HomogIndex, Complex> combo;
  for (const HomogIndex& k : enum_lambda(d, n))
    combo.emplace(k, Complex(coeff(rng), coeff(rng)));
  const auto g = [&](const Point& t) {
    Complex sum = 0;
    for (const auto& [k, ck] : combo) sum += ck * tc(k, t);
    return sum;
  };
  const Interpolant f = sample_function(
      InterpKind::LnStar, d, n, [&](const RatPoint& t) { return g(to_point(t)); });
  for (int trial = 0; trial < 100; ++trial) {
    const Point t = adf_test::random_point(d, rng);
    CHECK(std::abs(eval(f, t) - g(t)) < 1e-9);
  }
}

TEST_CASE("simplex grid size and determinism") {
  const auto g1 = simplex_grid(2, 8);
  CHECK(g1.size() == 45);  // binom(10, 2)
  const auto g2 = simplex_grid(2, 8);
  for (size_t i = 0; i < g1.size(); ++i)
    for (int c = 0; c < 3; ++c) CHECK(g1[i][c] == g2[i][c]);
  for (const Point& t : g1) CHECK(in_simplex(t));
}

TEST_CASE("lebesgue fast path agrees with the per-node fundamentals") {
  std::mt19937_64 rng(223);
  for (InterpKind kind : {InterpKind::InStar, InterpKind::LnStar}) {
    for (int n : {1, 3}) {
      const auto nodes = interpolation_nodes(kind, 2, n);
      for (int trial = 0; trial < 15; ++trial) {
        const Point t = adf_test::random_point(2, rng);
        double by_nodes = 0;
        for (const HomogIndex& j : nodes)
          by_nodes += std::abs(fundamental(kind, 2, n, j, t));
        CHECK(lebesgue_function(kind, 2, n, t) ==
              doctest::Approx(by_nodes).epsilon(1e-11));
      }
    }
    // the maximizer dominates the plain grid maximum of the node sums
    const int n = 3;
    double gmax = 0;
    for (const Point& t : simplex_grid(2, 4 * n))
      gmax = std::max(gmax, lebesgue_function(kind, 2, n, t));
    CHECK(lebesgue_estimate(kind, 2, n, 4 * n) >= gmax - 1e-9);
  }
}

TEST_CASE("lebesgue estimates: bounds and grid stability") {
  CHECK_THROWS_AS(lebesgue_estimate(InterpKind::LnStar, 2, 2, 4),
                  std::invalid_argument);
  const double l1 = lebesgue_estimate(InterpKind::LnStar, 2, 1, 8);
  CHECK(l1 >= 1.0 - 1e-12);  // constants are reproduced

  const double a = lebesgue_estimate(InterpKind::LnStar, 2, 2, 16);
  const double b = lebesgue_estimate(InterpKind::LnStar, 2, 2, 32);
  CHECK(std::abs(a - b) / b < 0.02);

  const double in_est = lebesgue_estimate(InterpKind::In, 2, 1, 8);
  CHECK(in_est > 0.9);
  const double ln_est = lebesgue_estimate(InterpKind::Ln, 2, 3, 12);
  CHECK(ln_est >= 1.0 - 1e-12);
}
