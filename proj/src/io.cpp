#include "dynsamp/io.hpp"

#include <fstream>

namespace dynsamp {

namespace {

Json complex_split(const CVector& v) {
  Json re = Json::array(), im = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    re.push_back(v(i).real());
    im.push_back(v(i).imag());
  }
  return Json{{"re", std::move(re)}, {"im", std::move(im)}};
}

std::vector<int> parse_factors(const Json& j) {
  if (!j.contains("factors") || !j["factors"].is_array() || j["factors"].empty())
    throw std::invalid_argument("json: missing or empty 'factors'");
  return j["factors"].get<std::vector<int>>();
}

Json omega_to_json(const FiniteGroup& g, const std::vector<int>& omega) {
  Json arr = Json::array();
  for (int i : omega) {
    const GroupIndex idx = g.unflat(i);
    arr.push_back(idx.residues);
  }
  return arr;
}

std::vector<int> omega_from_json(const FiniteGroup& g, const Json& arr) {
  if (!arr.is_array() || arr.empty())
    throw std::invalid_argument("json: 'omega' must be a nonempty array");
  std::vector<int> omega;
  for (const auto& e : arr) {
    if (e.is_number_integer()) {
      omega.push_back(e.get<int>());
    } else if (e.is_array()) {
      omega.push_back(g.flat(GroupIndex(e.get<std::vector<int>>())));
    } else {
      throw std::invalid_argument("json: omega entries must be integers or index arrays");
    }
  }
  return omega;
}

}  // namespace

Json kernel_to_json(const Kernel& k) {
  Json j;
  j["schema"] = kSchema;
  j["type"] = "kernel";
  j["factors"] = k.group.factors();
  Json sym = complex_split(k.symbol);
  j["symbol_re"] = std::move(sym["re"]);
  j["symbol_im"] = std::move(sym["im"]);
  return j;
}

Kernel kernel_from_json(const Json& j) {
  const FiniteGroup g = make_group(parse_factors(j));
  if (!j.contains("symbol_re"))
    throw std::invalid_argument("json: kernel needs 'symbol_re' (and optional 'symbol_im')");
  const auto re = j["symbol_re"].get<std::vector<double>>();
  std::vector<double> im(re.size(), 0.0);
  if (j.contains("symbol_im")) im = j["symbol_im"].get<std::vector<double>>();
  if (re.size() != im.size() || static_cast<int>(re.size()) != g.order())
    throw std::invalid_argument("json: symbol length must equal the group order");
  CVector symbol(g.order());
  for (int i = 0; i < g.order(); ++i) symbol(i) = Complex(re[i], im[i]);
  return kernel_from_frequency(g, std::move(symbol));
}

Json plan_to_json(const SamplingPlan& plan) {
  Json j;
  j["schema"] = kSchema;
  j["type"] = "plan";
  j["factors"] = plan.group.factors();
  j["omega"] = omega_to_json(plan.group, plan.omega);
  j["depths"] = plan.depths;
  return j;
}

SamplingPlan plan_from_json(const Json& j) {
  const FiniteGroup g = make_group(parse_factors(j));
  if (!j.contains("omega")) throw std::invalid_argument("json: plan needs 'omega'");
  const std::vector<int> omega = omega_from_json(g, j["omega"]);
  std::vector<int> depths;
  if (j.contains("depths")) {
    if (j["depths"].is_number_integer()) {
      depths.assign(omega.size(), j["depths"].get<int>());
    } else {
      depths = j["depths"].get<std::vector<int>>();
    }
  } else if (j.contains("depth")) {
    depths.assign(omega.size(), j["depth"].get<int>());
  } else {
    throw std::invalid_argument("json: plan needs 'depths' or a uniform 'depth'");
  }
  return SamplingPlan::make(g, omega, depths);
}

Json periodic_plan_to_json(const PeriodicPlan& plan) {
  Json j;
  j["schema"] = kSchema;
  j["type"] = "periodic_plan";
  j["d"] = plan.d;
  j["m"] = plan.m;
  j["W"] = plan.W;
  j["depth"] = plan.depth;
  j["induced"] = plan_to_json(plan.induced());
  return j;
}

Json periodic_plan2d_to_json(const PeriodicPlan2D& plan) {
  Json j;
  j["schema"] = kSchema;
  j["type"] = "periodic_plan2d";
  j["d"] = plan.d;
  j["m"] = plan.m;
  Json w = Json::array();
  for (const auto& r : plan.W) w.push_back({r[0], r[1]});
  j["W"] = std::move(w);
  j["depth"] = plan.depth;
  j["induced"] = plan_to_json(plan.induced());
  return j;
}

ParsedPlan any_plan_from_json(const Json& j) {
  const std::string type = j.value("type", "plan");
  if (type == "periodic_plan") {
    PeriodicPlan p = make_periodic_plan(j.at("d").get<int>(), j.at("m").get<int>(),
                                        j.at("W").get<std::vector<int>>(),
                                        j.contains("depth")
                                            ? std::optional<int>(j["depth"].get<int>())
                                            : std::nullopt);
    return ParsedPlan{p.induced(), p};
  }
  if (type == "periodic_plan2d") {
    PeriodicPlan2D p;
    p.d = j.at("d").get<int>();
    p.m = j.at("m").get<int>();
    for (const auto& e : j.at("W")) {
      const auto pair = e.get<std::vector<int>>();
      if (pair.size() != 2) throw std::invalid_argument("json: 2D W entries must be pairs");
      p.W.push_back({pair[0], pair[1]});
    }
    p.depth = j.value("depth", p.m * p.m - 1);
    return ParsedPlan{p.induced(), std::nullopt};
  }
  return ParsedPlan{plan_from_json(j), std::nullopt};
}

Json frame_report_to_json(const FrameReport& report) {
  Json j;
  j["schema"] = kSchema;
  j["type"] = "frame_report";
  j["verdict"] = to_string(report.verdict);
  j["rank"] = report.rank;
  j["required_rank"] = report.required_rank;
  j["lower_frame_bound"] =
      report.lower_frame_bound ? Json(*report.lower_frame_bound) : Json(nullptr);
  j["upper_frame_bound"] =
      report.upper_frame_bound ? Json(*report.upper_frame_bound) : Json(nullptr);
  j["failing_class"] = report.failing_class ? Json(*report.failing_class) : Json(nullptr);
  j["min_cardinality_bound"] = report.min_cardinality_bound;
  j["ambiguity"] = report.ambiguity;
  j["depth_insufficient"] = report.depth_insufficient;
  if (!report.note.empty()) j["note"] = report.note;
  return j;
}

Json reconstruction_to_json(const ReconstructionResult& result) {
  Json j;
  j["schema"] = kSchema;
  j["type"] = "reconstruction";
  Json est = complex_split(result.estimate);
  j["estimate_re"] = std::move(est["re"]);
  j["estimate_im"] = std::move(est["im"]);
  j["residual_norm"] = result.residual_norm;
  j["condition_number"] = result.condition_number;
  j["exact"] = result.exact;
  j["rank"] = result.rank;
  j["required_rank"] = result.required_rank;
  return j;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  Json j;
  in >> j;
  return j;
}

}  // namespace dynsamp
