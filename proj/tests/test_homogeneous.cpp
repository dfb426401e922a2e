#include "test_helpers.hpp"

using namespace adf;
using adf_test::idx;
using adf_test::random_rat_point;
using adf_test::rat_point;

namespace {

// Membership in the parallelepiped piece with minimal coordinate at the
// 1-based position j: 0 < t_i - t_j <= 1 for i < j, 0 <= t_l - t_j < 1 for
// l > j. Independent of partition_index.
bool in_piece(const RatPoint& t, int j1) {
  const int j = j1 - 1;
  for (int i = 0; i < t.size(); ++i) {
    if (i == j) continue;
    const Rat diff = t[i] - t[j];
    if (i < j) {
      if (diff <= 0 || diff > 1) return false;
    } else {
      if (diff < 0 || diff >= 1) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("project_to_homogeneous appends the balancing coordinate") {
  const std::vector<double> zero{0.0, 0.0};
  const Point p0 = project_to_homogeneous(std::span<const double>(zero));
  CHECK(p0.size() == 3);
  CHECK(p0[0] == 0.0);
  CHECK(p0[2] == 0.0);

  const std::vector<Rat> a{Rat(1, 3), Rat(0)};
  const RatPoint p1 = project_to_homogeneous(std::span<const Rat>(a));
  CHECK(p1[2] == Rat(-1, 3));

  const std::vector<double> b{0.5, -0.5, 0.25};
  const Point p2 = project_to_homogeneous(std::span<const double>(b));
  CHECK(p2[3] == doctest::Approx(-0.25).epsilon(1e-15));

  const std::vector<double> bad{1.0, std::numeric_limits<double>::infinity()};
  CHECK_THROWS_AS(project_to_homogeneous(std::span<const double>(bad)),
                  std::invalid_argument);
}

TEST_CASE("permutation action on indices and points") {
  const HomogIndex k = idx({2, -1, -1});
  CHECK(apply_perm(k, Permutation::transposition(3, 0, 1)) == idx({-1, 2, -1}));
  CHECK(apply_perm(k, Permutation::identity(3)) == k);
  CHECK(apply_perm(idx({1, 1, -2}), Permutation::transposition(3, 1, 2)) ==
        idx({1, -2, 1}));
}

TEST_CASE("group action composes and parity is multiplicative") {
  std::mt19937_64 rng(7);
  const auto perms = all_permutations(4);
  std::uniform_int_distribution<size_t> pick(0, perms.size() - 1);
  for (int trial = 0; trial < 50; ++trial) {
    const Permutation& s = perms[pick(rng)];
    const Permutation& u = perms[pick(rng)];
    const Permutation su = s.compose(u);
    CHECK(su.parity() == s.parity() * u.parity());
    const RatPoint p = random_rat_point(3, rng);
    CHECK(apply_perm(apply_perm(p, s), u) == apply_perm(p, su));
  }
}

TEST_CASE("fundamental domain membership is half-open") {
  CHECK(in_fundamental_domain(rat_point({0, 0, 0}, 1)));
  CHECK(in_fundamental_domain(rat_point({2, -1, -1}, 3)));
  CHECK_FALSE(in_fundamental_domain(rat_point({-2, 1, 1}, 3)));
  CHECK_FALSE(in_fundamental_domain(rat_point({1, 0, -1}, 1)));
}

TEST_CASE("simplex membership is closed") {
  CHECK(in_simplex(rat_point({0, 0, 0}, 1)));
  CHECK(in_simplex(rat_point({2, -1, -1}, 3)));
  CHECK(in_simplex(rat_point({1, 1, -2}, 3)));
  CHECK_FALSE(in_simplex(rat_point({-1, 2, -1}, 3)));
}

TEST_CASE("partition_index matches the piece membership oracle") {
  CHECK(partition_index(rat_point({0, 0, 0}, 1)) == 1);
  CHECK(partition_index(rat_point({2, -1, -1}, 3)) == 2);
  CHECK(partition_index(rat_point({1, 1, -2}, 3)) == 3);
  CHECK_THROWS_AS(partition_index(rat_point({1, 0, -1}, 1)), std::domain_error);

  std::mt19937_64 rng(11);
  for (int d : {2, 3, 4}) {
    for (int trial = 0; trial < 100; ++trial) {
      const RatPoint t = fold_into_domain(random_rat_point(d, rng));
      const int j = partition_index(t);
      int matches = 0;
      for (int cand = 1; cand <= d + 1; ++cand)
        if (in_piece(t, cand)) {
          ++matches;
          CHECK(cand == j);
        }
      CHECK(matches == 1);  // the pieces are disjoint and cover
    }
  }
}

TEST_CASE("congruence modulo the lattice") {
  const RatPoint a = rat_point({2, -1, -1}, 3);
  CHECK(congruent_mod_lattice(a, a));
  CHECK(congruent_mod_lattice(a, rat_point({-1, 2, -1}, 3)));
  CHECK_FALSE(congruent_mod_lattice(rat_point({1, 0, -1}, 3), rat_point({0, 0, 0}, 1)));
}

TEST_CASE("fold_into_domain: frozen example via shift search") {
  const RatPoint t = rat_point({4, -2, -2}, 3);
  const RatPoint folded = fold_into_domain(t);
  CHECK(folded == rat_point({1, 1, -2}, 3));

  // independent oracle: scan all small integer shifts; exactly one lands in
  // the domain
  int hits = 0;
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b) {
      RatPoint cand(std::vector<Rat>{t[0] + a, t[1] + b, t[2] - a - b});
      if (in_fundamental_domain(cand)) {
        ++hits;
        CHECK(cand == folded);
      }
    }
  CHECK(hits == 1);
}

TEST_CASE("tiling: fold lands in the domain, congruent, idempotent") {
  std::mt19937_64 rng(13);
  for (int d : {1, 2, 3, 4}) {
    const int trials = d <= 2 ? 350 : 150;
    for (int trial = 0; trial < trials; ++trial) {
      const RatPoint t = random_rat_point(d, rng);
      const RatPoint folded = fold_into_domain(t);
      CHECK(in_fundamental_domain(folded));
      CHECK(congruent_mod_lattice(folded, t));
      CHECK(fold_into_domain(folded) == folded);
    }
  }
}

TEST_CASE("uniqueness: congruent points fold to the same representative") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const RatPoint s = fold_into_domain(random_rat_point(3, rng));
    std::uniform_int_distribution<int> shift(-2, 2);
    const int a = shift(rng), b = shift(rng), c = shift(rng);
    const RatPoint moved(
        std::vector<Rat>{s[0] + a, s[1] + b, s[2] + c, s[3] - a - b - c});
    CHECK(fold_into_domain(moved) == s);
  }
}

TEST_CASE("orbit sizes and orbit-stabilizer") {
  CHECK(orbit(idx({0, 0, 0})).size() == 1);
  CHECK(orbit(idx({2, -1, -1})).size() == 3);
  CHECK(orbit(idx({3, 0, -3})).size() == 6);

  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 40; ++trial) {
    const int d = 1 + static_cast<int>(rng() % 4);
    std::vector<int> diffs(static_cast<size_t>(d));
    for (int& x : diffs) x = static_cast<int>(rng() % 3);
    const HomogIndex k = index_from_differences(diffs);
    CHECK(Int(orbit(k).size()) * stabilizer_size(k) == factorial(d + 1));
    CHECK(orbit_size(k) == Int(orbit(k).size()));
  }
}

TEST_CASE("index and point validation") {
  CHECK_THROWS_AS(idx({1, 0, -1, 1}), std::invalid_argument);  // sum != 0
  CHECK_THROWS_AS(idx({1, -1, 0}), std::invalid_argument);     // not congruent
  CHECK_NOTHROW(idx({4, 1, -5}));
  CHECK_THROWS_AS(RatPoint(std::vector<Rat>{Rat(1), Rat(1)}), std::invalid_argument);
}
