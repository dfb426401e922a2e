#include <cstdlib>

#include "adf/oracle.hpp"
#include "test_helpers.hpp"

using namespace adf;
using adf_test::idx;

TEST_CASE("brute enumerations: frozen small sets") {
  const auto h = brute_enum_hn_star(2, 1);
  CHECK(h.size() == 7);
  CHECK(h == enum_hn_star(2, 1));

  const auto d1 = brute_enum_hn_star(1, 2);
  CHECK(d1.size() == 5);  // 3^2 - 2^2
  CHECK(d1 == std::vector<HomogIndex>{idx({2, -2}), idx({1, -1}), idx({0, 0}),
                                      idx({-1, 1}), idx({-2, 2})});
}

TEST_CASE("fast and brute enumerations agree") {
  for (int d : {1, 2, 3})
    for (int n = 1; n <= (d == 3 ? 3 : 4); ++n) {
      CHECK(brute_enum_hn(d, n) == enum_hn(d, n));
      CHECK(brute_enum_hn_star(d, n) == enum_hn_star(d, n));
      CHECK(brute_enum_lambda(d, n) == enum_lambda(d, n));
      CHECK(brute_enum_lambda_interior(d, n) == enum_lambda_interior(d, n));
    }
}

TEST_CASE("scan budget is enforced and overridable") {
  CHECK(scan_budget() == 10000000L);
  setenv("ADF_MAX_CELLS", "10", 1);
  CHECK(scan_budget() == 10L);
  CHECK_THROWS_AS(brute_enum_hn_star(2, 2), budget_error);
  setenv("ADF_MAX_CELLS", "bogus", 1);
  CHECK_THROWS_AS(scan_budget(), std::invalid_argument);
  unsetenv("ADF_MAX_CELLS");
  CHECK_NOTHROW(brute_enum_hn_star(2, 2));
}

TEST_CASE("dft identities hold to roundoff") {
  for (int d : {2, 3})
    for (int n = 1; n <= (d == 2 ? 4 : 2); ++n) {
      const OracleReport rep = dft_identity_check(d, n);
      CHECK(rep.cases_checked > 0);
      CHECK(rep.max_abs_error < 1e-12);
    }
}

TEST_CASE("reference integrals of basis functions") {
  // trigonometric side
  const Complex i1 = reference_integral(
      Measure::OmegaTrig, 2, [](const RatPoint&) { return Complex(1.0); }, 3);
  CHECK(std::abs(i1 - 1.0) < 1e-13);
  const HomogIndex k = idx({2, -1, -1});
  const Complex ik = reference_integral(
      Measure::OmegaTrig, 2, [&](const RatPoint& t) { return phi(k, t); }, 3);
  CHECK(std::abs(ik) < 1e-13);

  // |TS_k|^2 integrates to 1/(d+1)! on the normalized simplex
  for (int d : {2, 3}) {
    const auto interior = enum_lambda_interior(d, d + 1);
    const HomogIndex m = interior.front();
    const Complex val = reference_integral(
        Measure::SimplexTrig, d,
        [&](const RatPoint& t) { return ts(m, t) * std::conj(ts(m, t)); },
        2 * (d + 1));
    CHECK(std::abs(val - 1.0 / to_double(Rat(factorial(d + 1)))) < 1e-12);
  }

  CHECK_THROWS_AS(reference_integral(
                      Measure::OmegaTrig, 2,
                      [](const RatPoint&) { return Complex(1.0); }, 100),
                  budget_error);
}

TEST_CASE("the full oracle registry is green at CI budgets") {
  for (const auto& [dd, nn] : std::vector<std::pair<int, int>>{{2, 5}, {3, 3}}) {
    for (const OracleReport& rep : run_all_pairs(dd, nn)) {
      INFO(rep.name, " worst: ", rep.worst_case);
      CHECK(rep.cases_checked > 0);
      CHECK(rep.max_abs_error < 1e-10);
    }
  }
}
