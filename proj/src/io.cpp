#include "adf/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace adf {

namespace {

Json rat_point_json(const RatPoint& t) {
  Json arr = Json::array();
  for (const Rat& v : t.coords()) arr.push_back(rat_string(v));
  return arr;
}

RatPoint rat_point_from_json(const Json& arr) {
  std::vector<Rat> c;
  for (const auto& v : arr) c.push_back(rat_from_string(v.get<std::string>()));
  return RatPoint(std::move(c));
}

Json index_json(const HomogIndex& k) {
  Json arr = Json::array();
  for (int v : k.entries()) arr.push_back(v);
  return arr;
}

std::string stratum_string(const BoundaryClass& bc) {
  if (bc.interior) return "interior";
  return "boundary(" + std::to_string(bc.a) + "," + std::to_string(bc.b) + ")";
}

Json self_check_json(const SelfCheck& check) {
  return Json{{"cases", check.cases},
              {"max_residual", check.max_residual},
              {"description", check.description}};
}

}  // namespace

NodeDomain node_domain_from_string(std::string_view s) {
  if (s == "omega") return NodeDomain::Omega;
  if (s == "simplex") return NodeDomain::Simplex;
  if (s == "simplex-interior") return NodeDomain::SimplexInterior;
  throw std::invalid_argument("unknown node domain: " + std::string(s));
}

namespace {

struct NodeRow {
  HomogIndex index;
  RatPoint point;
  std::string stratum;
  Rat c;
  bool has_lambda = false;
  Rat lambda;
};

std::vector<NodeRow> node_rows(NodeDomain domain, int d, int n) {
  std::vector<HomogIndex> set;
  switch (domain) {
    case NodeDomain::Omega: set = enum_hn_star(d, n); break;
    case NodeDomain::Simplex: set = enum_lambda(d, n); break;
    case NodeDomain::SimplexInterior: set = enum_lambda_interior(d, n); break;
  }
  std::vector<NodeRow> rows;
  for (HomogIndex& k : set) {
    NodeRow row{k, node_point(k, n), stratum_string(classify(k, n)), c_weight(k, n),
                false, Rat(0)};
    if (domain != NodeDomain::Omega) {
      row.has_lambda = true;
      row.lambda = lambda_weight(k, n);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string domain_name(NodeDomain domain) {
  switch (domain) {
    case NodeDomain::Omega: return "omega";
    case NodeDomain::Simplex: return "simplex";
    case NodeDomain::SimplexInterior: return "simplex-interior";
  }
  return "";
}

}  // namespace

Json nodes_to_json(NodeDomain domain, int d, int n) {
  Json out{{"dimension", d}, {"n", n}, {"domain", domain_name(domain)}};
  Json arr = Json::array();
  for (const NodeRow& row : node_rows(domain, d, n)) {
    Json entry{{"index", index_json(row.index)},
               {"coords", rat_point_json(row.point)},
               {"stratum", row.stratum},
               {"c", rat_string(row.c)}};
    if (row.has_lambda) entry["lambda"] = rat_string(row.lambda);
    arr.push_back(std::move(entry));
  }
  out["nodes"] = std::move(arr);
  return out;
}

std::string nodes_to_csv(NodeDomain domain, int d, int n) {
  std::ostringstream os;
  const int m = d + 1;
  for (int i = 1; i <= m; ++i) os << "k_" << i << ",";
  for (int i = 1; i <= m; ++i) os << "t_" << i << ",";
  os << "stratum,c,lambda";
  for (int i = 1; i <= m; ++i) os << ",t_" << i << "_exact";
  os << ",c_exact,lambda_exact\n";
  for (const NodeRow& row : node_rows(domain, d, n)) {
    for (int i = 0; i < m; ++i) os << row.index[i] << ",";
    for (int i = 0; i < m; ++i) os << decimal17(to_double(row.point[i])) << ",";
    os << row.stratum << "," << decimal17(to_double(row.c)) << ",";
    if (row.has_lambda) os << decimal17(to_double(row.lambda));
    for (int i = 0; i < m; ++i) os << "," << rat_string(row.point[i]);
    os << "," << rat_string(row.c) << ",";
    if (row.has_lambda) os << rat_string(row.lambda);
    os << "\n";
  }
  return os.str();
}

Json trig_rule_to_json(const CubatureRule& rule, const SelfCheck& check) {
  Json out{{"dimension", rule.d},
           {"n", rule.n},
           {"kind", rule.domain == CubatureRule::Domain::OmegaH ? "omega-trig"
                                                                : "simplex-trig"},
           {"degree", rule.exactness_degree}};
  Json idx = Json::array(), nodes = Json::array(), weights = Json::array();
  for (size_t i = 0; i < rule.nodes.size(); ++i) {
    idx.push_back(index_json(rule.indices[i]));
    nodes.push_back(rat_point_json(rule.nodes[i]));
    weights.push_back(rat_string(rule.weights[i]));
  }
  out["indices"] = std::move(idx);
  out["nodes"] = std::move(nodes);
  out["weights"] = std::move(weights);
  out["self_check"] = self_check_json(check);
  return out;
}

std::string trig_rule_to_csv(const CubatureRule& rule) {
  std::ostringstream os;
  const int m = rule.d + 1;
  for (int i = 1; i <= m; ++i) os << "t_" << i << ",";
  os << "weight";
  for (int i = 1; i <= m; ++i) os << ",t_" << i << "_exact";
  os << ",weight_exact\n";
  for (size_t r = 0; r < rule.nodes.size(); ++r) {
    for (int i = 0; i < m; ++i) os << decimal17(to_double(rule.nodes[r][i])) << ",";
    os << decimal17(to_double(rule.weights[r]));
    for (int i = 0; i < m; ++i) os << "," << rat_string(rule.nodes[r][i]);
    os << "," << rat_string(rule.weights[r]) << "\n";
  }
  return os.str();
}

CubatureRule trig_rule_from_json(const Json& j) {
  CubatureRule rule;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "omega-trig") {
    rule.domain = CubatureRule::Domain::OmegaH;
  } else if (kind == "simplex-trig") {
    rule.domain = CubatureRule::Domain::SimplexH;
  } else {
    throw io_error("not a trigonometric rule: " + kind);
  }
  rule.d = j.at("dimension").get<int>();
  rule.n = j.at("n").get<int>();
  rule.exactness_degree = j.at("degree").get<int>();
  for (const auto& arr : j.at("indices")) {
    std::vector<int> e;
    for (const auto& v : arr) e.push_back(v.get<int>());
    rule.indices.emplace_back(std::move(e));
  }
  for (const auto& arr : j.at("nodes")) rule.nodes.push_back(rat_point_from_json(arr));
  for (const auto& v : j.at("weights"))
    rule.weights.push_back(rat_from_string(v.get<std::string>()));
  if (rule.nodes.size() != rule.weights.size() ||
      rule.nodes.size() != rule.indices.size())
    throw io_error("rule arrays have mismatched lengths");
  return rule;
}

Json gauss_rule_to_json(const GaussRule& rule, const std::string& kind,
                        const SelfCheck& check) {
  Json out{{"dimension", rule.d}, {"n", rule.n}, {"kind", kind},
           {"degree", rule.degree}};
  Json nodes = Json::array(), weights = Json::array(), pre = Json::array();
  for (size_t i = 0; i < rule.nodes.size(); ++i) {
    Json x = Json::array();
    for (double v : rule.nodes[i]) x.push_back(v);
    nodes.push_back(std::move(x));
    weights.push_back(rule.weights[i]);
    pre.push_back(rat_point_json(rule.t_preimages[i]));
  }
  out["nodes"] = std::move(nodes);
  out["weights"] = std::move(weights);
  out["t_preimages"] = std::move(pre);
  if (!rule.exact_weights.empty()) {
    Json ew = Json::array();
    for (const Rat& w : rule.exact_weights) ew.push_back(rat_string(w));
    out["exact_weights"] = std::move(ew);
  }
  out["self_check"] = self_check_json(check);
  return out;
}

std::string gauss_rule_to_csv(const GaussRule& rule) {
  std::ostringstream os;
  for (int i = 1; i <= rule.d; ++i) os << "x_" << i << ",";
  os << "weight";
  for (int i = 1; i <= rule.d + 1; ++i) os << ",t_" << i << "_exact";
  os << "\n";
  for (size_t r = 0; r < rule.nodes.size(); ++r) {
    for (double v : rule.nodes[r]) os << decimal17(v) << ",";
    os << decimal17(rule.weights[r]);
    for (int i = 0; i <= rule.d; ++i) os << "," << rat_string(rule.t_preimages[r][i]);
    os << "\n";
  }
  return os.str();
}

GaussRule gauss_rule_from_json(const Json& j) {
  GaussRule rule;
  rule.d = j.at("dimension").get<int>();
  rule.n = j.at("n").get<int>();
  rule.degree = j.at("degree").get<int>();
  for (const auto& arr : j.at("nodes")) {
    std::vector<double> x;
    for (const auto& v : arr) x.push_back(v.get<double>());
    rule.nodes.push_back(std::move(x));
  }
  for (const auto& v : j.at("weights")) rule.weights.push_back(v.get<double>());
  for (const auto& arr : j.at("t_preimages"))
    rule.t_preimages.push_back(rat_point_from_json(arr));
  if (j.contains("exact_weights"))
    for (const auto& v : j.at("exact_weights"))
      rule.exact_weights.push_back(rat_from_string(v.get<std::string>()));
  return rule;
}

Json lebesgue_to_json(InterpKind kind, int d, int grid,
                      const std::vector<LebesgueRow>& rows) {
  Json out{{"dimension", d}, {"kind", to_string(kind)}, {"grid", grid}};
  Json arr = Json::array();
  for (const LebesgueRow& row : rows) {
    Json entry{{"n", row.n}, {"estimate", decimal17(row.estimate)}};
    if (row.n > 1) entry["ratio"] = decimal17(row.ratio);
    arr.push_back(std::move(entry));
  }
  out["rows"] = std::move(arr);
  return out;
}

std::string lebesgue_to_csv(const std::vector<LebesgueRow>& rows) {
  std::ostringstream os;
  os << "n,estimate,ratio\n";
  for (const LebesgueRow& row : rows) {
    os << row.n << "," << decimal17(row.estimate) << ",";
    if (row.n > 1) os << decimal17(row.ratio);
    os << "\n";
  }
  return os.str();
}

InterpKind interp_kind_from_string(std::string_view s) {
  if (s == "in") return InterpKind::In;
  if (s == "in-star") return InterpKind::InStar;
  if (s == "ln") return InterpKind::Ln;
  if (s == "ln-star") return InterpKind::LnStar;
  throw std::invalid_argument("unknown interpolation kind: " + std::string(s));
}

std::string to_string(InterpKind kind) {
  switch (kind) {
    case InterpKind::In: return "in";
    case InterpKind::InStar: return "in-star";
    case InterpKind::Ln: return "ln";
    case InterpKind::LnStar: return "ln-star";
  }
  return "";
}

Interpolant interpolant_from_json(const Json& j) {
  const int d = j.at("dimension").get<int>();
  const int n = j.at("n").get<int>();
  const InterpKind kind = interp_kind_from_string(j.at("kind").get<std::string>());
  std::map<HomogIndex, Complex> samples;
  for (const auto& [key, value] : j.at("samples").items()) {
    HomogIndex k = [&] {
      try {
        return HomogIndex::parse(key, d);
      } catch (const std::exception& e) {
        throw std::invalid_argument("bad sample key \"" + key + "\": " + e.what());
      }
    }();
    Complex v;
    if (value.is_array()) {
      if (value.size() != 2)
        throw std::invalid_argument("sample value for key \"" + key +
                                    "\" must be a number or [re, im]");
      v = Complex(value[0].get<double>(), value[1].get<double>());
    } else {
      v = Complex(value.get<double>(), 0.0);
    }
    samples.emplace(std::move(k), v);
  }
  return make_interpolant(kind, d, n, std::move(samples));
}

Json interpolant_to_json(const Interpolant& f) {
  Json samples = Json::object();
  for (const auto& [k, v] : f.samples)
    samples[k.str()] = Json::array({v.real(), v.imag()});
  return Json{{"dimension", f.d}, {"n", f.n}, {"kind", to_string(f.kind)},
              {"samples", std::move(samples)}};
}

std::vector<Point> points_from_json(const Json& j, int d) {
  const Json& arr = j.is_array() ? j : j.at("points");
  std::vector<Point> out;
  for (const auto& row : arr) {
    std::vector<double> c;
    for (const auto& v : row) c.push_back(v.get<double>());
    if (static_cast<int>(c.size()) == d) {
      out.push_back(project_to_homogeneous(std::span<const double>(c)));
    } else if (static_cast<int>(c.size()) == d + 1) {
      out.emplace_back(std::move(c));
    } else {
      throw std::invalid_argument("point row must have d or d+1 coordinates");
    }
  }
  return out;
}

Json eval_output_to_json(const Interpolant& f, const std::vector<Point>& pts) {
  Json values = Json::array();
  for (const Point& t : pts) {
    const Complex v = eval(f, t);
    values.push_back(Json::array({v.real(), v.imag()}));
  }
  return Json{{"dimension", f.d}, {"n", f.n}, {"kind", to_string(f.kind)},
              {"values", std::move(values)}};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open " + path + " for reading");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot open " + path + " for writing");
  out << content;
  if (!out) throw io_error("write failed: " + path);
}

}  // namespace adf
