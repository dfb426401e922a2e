#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "adf/io.hpp"
#include "adf/oracle.hpp"
#include "test_helpers.hpp"

using namespace adf;
using adf_test::idx;
using adf_test::random_point;

namespace {

#ifndef ADF_CLI_PATH
#define ADF_CLI_PATH "./adf"
#endif

struct CliResult {
  int exit_code = -1;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  const std::string out_path = "/tmp/adf_cli_out.txt";
  const std::string cmd = std::string(ADF_CLI_PATH) + " " + args + " > " + out_path +
                          " 2>&1";
  const int status = std::system(cmd.c_str());
  CliResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out_path);
  result.output.assign(std::istreambuf_iterator<char>(in),
                       std::istreambuf_iterator<char>());
  return result;
}

}  // namespace

TEST_CASE("rational string round trip") {
  CHECK(rat_string(Rat(-2, 6)) == "-1/3");
  CHECK(rat_string(Rat(4)) == "4");
  CHECK(rat_from_string("-2/6") == Rat(-1, 3));
  CHECK_THROWS_AS(rat_from_string("1/x"), std::invalid_argument);
}

TEST_CASE("node export payloads") {
  const Json j = nodes_to_json(NodeDomain::Simplex, 2, 1);
  CHECK(j.at("nodes").size() == 3);
  CHECK(j.at("nodes")[0].at("coords")[0] == "2/3");
  const std::string csv = nodes_to_csv(NodeDomain::Omega, 2, 1);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 8);  // header + 7 rows
}

TEST_CASE("trig rule JSON round trip is bit-exact") {
  const CubatureRule rule = cubature_simplex(2, 3);
  const Json j = trig_rule_to_json(rule, SelfCheck{});
  const CubatureRule back = trig_rule_from_json(Json::parse(j.dump()));
  REQUIRE(back.nodes.size() == rule.nodes.size());
  for (size_t i = 0; i < rule.nodes.size(); ++i) {
    CHECK(back.nodes[i] == rule.nodes[i]);      // exact rational equality
    CHECK(back.weights[i] == rule.weights[i]);
  }
  const NodeFn f = [](const RatPoint& t) { return tc(HomogIndex({2, -1, -1}), t); };
  const Complex a = integrate(rule, f);
  const Complex b = integrate(back, f);
  CHECK(a.real() == b.real());
  CHECK(a.imag() == b.imag());
}

TEST_CASE("gauss rule JSON round trip preserves doubles") {
  const GaussRule rule = lobatto_rule(2, 3);
  const Json j = gauss_rule_to_json(rule, "lobatto", SelfCheck{});
  const GaussRule back = gauss_rule_from_json(Json::parse(j.dump()));
  REQUIRE(back.nodes.size() == rule.nodes.size());
  for (size_t i = 0; i < rule.nodes.size(); ++i) {
    CHECK(back.nodes[i] == rule.nodes[i]);
    CHECK(back.weights[i] == rule.weights[i]);
    CHECK(back.t_preimages[i] == rule.t_preimages[i]);
    CHECK(back.exact_weights[i] == rule.exact_weights[i]);
  }
}

TEST_CASE("sample files round trip and validate") {
  const Interpolant f = sample_function(
      InterpKind::LnStar, 2, 2,
      [](const RatPoint& t) { return tc(HomogIndex({2, -1, -1}), t); });
  const Json j = interpolant_to_json(f);
  const Interpolant back = interpolant_from_json(Json::parse(j.dump()));
  CHECK(back.samples.size() == f.samples.size());

  Json broken = j;
  broken["samples"].erase(broken["samples"].begin().key());
  CHECK_THROWS_WITH_AS(interpolant_from_json(broken),
                       doctest::Contains("missing sample"), std::invalid_argument);

  Json badkey = j;
  badkey["samples"]["1,0,-1,0"] = 0.0;
  CHECK_THROWS_WITH_AS(interpolant_from_json(badkey),
                       doctest::Contains("bad sample key"), std::invalid_argument);
}

TEST_CASE("points parsing accepts d and d+1 coordinates") {
  const Json j = Json::parse(R"({"points": [[0.1, -0.2], [0.1, -0.2, 0.1]]})");
  const auto pts = points_from_json(j, 2);
  REQUIRE(pts.size() == 2);
  CHECK(pts[0].size() == 3);
  CHECK(pts[0][2] == doctest::Approx(0.1));
  CHECK_THROWS_AS(points_from_json(Json::parse(R"([[1.0]])"), 2),
                  std::invalid_argument);
}

TEST_CASE("cli: node counts per the examples") {
  CHECK(run_cli("nodes --domain simplex -d 2 -n 1").exit_code == 0);
  const Json simplex =
      Json::parse(run_cli("nodes --domain simplex -d 2 -n 1").output);
  CHECK(simplex.at("nodes").size() == 3);
  const Json omega = Json::parse(run_cli("nodes --domain omega -d 2 -n 1").output);
  CHECK(omega.at("nodes").size() == 7);
  const Json interior =
      Json::parse(run_cli("nodes --domain simplex-interior -d 2 -n 3").output);
  CHECK(interior.at("nodes").size() == 1);
}

TEST_CASE("cli: cubature examples and self checks") {
  const Json gauss = Json::parse(run_cli("cubature --kind gauss -d 2 -n 1").output);
  CHECK(gauss.at("nodes").size() == 1);
  CHECK(std::abs(gauss.at("weights")[0].get<double>() - 1.0) < 1e-12);
  CHECK(gauss.at("self_check").at("max_residual").get<double>() < 1e-12);

  const Json lob = Json::parse(run_cli("cubature --kind lobatto -d 2 -n 4").output);
  CHECK(lob.at("nodes").size() == 15);
  for (const auto& w : lob.at("weights")) CHECK(w.get<double>() > 0.0);

  const Json tri =
      Json::parse(run_cli("cubature --kind simplex-trig -d 3 -n 2").output);
  CHECK(tri.at("nodes").size() == 10);
  CHECK(tri.at("self_check").at("max_residual").get<double>() < 1e-12);
}

TEST_CASE("cli: deterministic output and lebesgue table") {
  const CliResult a = run_cli("lebesgue --kind ln-star -d 2 -n 1,2 --grid 8");
  const CliResult b = run_cli("lebesgue --kind ln-star -d 2 -n 1,2 --grid 8");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);  // byte-identical
  const Json j = Json::parse(a.output);
  CHECK(j.at("rows")[0].at("n") == 1);
  CHECK(std::stod(j.at("rows")[0].at("estimate").get<std::string>()) >= 1.0 - 1e-12);
  CHECK_FALSE(j.at("rows")[0].contains("ratio"));
  CHECK(j.at("rows")[1].contains("ratio"));
}

TEST_CASE("cli: eval pipeline and error contracts") {
  // constant samples evaluated back at the nodes
  const Interpolant f = sample_function(InterpKind::LnStar, 2, 1,
                                        [](const RatPoint&) { return Complex(1.0); });
  write_file("/tmp/adf_samples.json", interpolant_to_json(f).dump());
  Json pts{{"points", Json::array()}};
  for (const HomogIndex& j : interpolation_nodes(InterpKind::LnStar, 2, 1)) {
    const Point p = to_point(node_point(j, 1));
    pts["points"].push_back(Json::array({p[0], p[1], p[2]}));
  }
  write_file("/tmp/adf_points.json", pts.dump());
  const CliResult res =
      run_cli("eval --samples /tmp/adf_samples.json --points /tmp/adf_points.json");
  CHECK(res.exit_code == 0);
  const Json out = Json::parse(res.output);
  for (const auto& v : out.at("values"))
    CHECK(std::abs(v[0].get<double>() - 1.0) < 1e-10);

  // malformed samples: structured error naming the offending key
  Json bad = interpolant_to_json(f);
  bad["samples"].erase(bad["samples"].begin().key());
  bad["samples"]["7,-7,0"] = 1.0;
  write_file("/tmp/adf_bad.json", bad.dump());
  const CliResult err =
      run_cli("eval --samples /tmp/adf_bad.json --points /tmp/adf_points.json");
  CHECK(err.exit_code == 2);
  CHECK(err.output.find("7,-7,0") != std::string::npos);

  const CliResult missing =
      run_cli("eval --samples /tmp/nope.json --points /tmp/adf_points.json");
  CHECK(missing.exit_code == 4);
}

TEST_CASE("cli: validation and budget exit codes") {
  CHECK(run_cli("nodes --domain simplex -d 9 -n 1").exit_code != 0);
  const CliResult bad_kind = run_cli("cubature --kind nope -d 2 -n 1");
  CHECK(bad_kind.exit_code != 0);

  setenv("ADF_MAX_CELLS", "5", 1);
  const CliResult budget = run_cli("nodes --domain omega -d 2 -n 3");
  unsetenv("ADF_MAX_CELLS");
  CHECK(budget.exit_code == 3);
}

TEST_CASE("eval matches the direct cosine evaluation") {
  std::mt19937_64 rng(211);
  const HomogIndex k = idx({4, -2, -2});  // degree 2, inside the order-2 space
  const Interpolant f = sample_function(InterpKind::LnStar, 2, 2,
                                        [&](const RatPoint& t) { return tc(k, t); });
  write_file("/tmp/adf_tc_samples.json", interpolant_to_json(f).dump());
  Json pts{{"points", Json::array()}};
  std::vector<Point> raw;
  for (int i = 0; i < 10; ++i) {
    const Point p = random_point(2, rng);
    raw.push_back(p);
    pts["points"].push_back(Json::array({p[0], p[1], p[2]}));
  }
  write_file("/tmp/adf_tc_points.json", pts.dump());
  const CliResult res = run_cli(
      "eval --samples /tmp/adf_tc_samples.json --points /tmp/adf_tc_points.json");
  REQUIRE(res.exit_code == 0);
  const Json out = Json::parse(res.output);
  for (size_t i = 0; i < raw.size(); ++i) {
    const Complex got(out.at("values")[i][0].get<double>(),
                      out.at("values")[i][1].get<double>());
    CHECK(std::abs(got - tc(k, raw[i])) < 1e-9);
  }
}
