#include "arexit/json_io.hpp"

#include "arexit/errors.hpp"
#include "overloaded.hpp"

namespace arexit {

using nlohmann::json;

namespace {

double number(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || !it->is_number())
    throw DomainError(std::string("missing or non-numeric key '") + key + "' in " + j.dump());
  return it->get<double>();
}

std::string family_of(const json& j) {
  if (!j.is_object() || !j.contains("family") || !j["family"].is_string())
    throw DomainError("expected an object with a string 'family': " + j.dump());
  return j["family"].get<std::string>();
}

}  // namespace

json to_json(const MapSpec& map) {
  json j = std::visit(overloaded{
                          [](const maps::Linear& m) { return json{{"a", m.a}}; },
                          [](const maps::DeadZone& m) { return json{{"a", m.a}, {"b", m.b}}; },
                          [](const maps::Saturated& m) { return json{{"a", m.a}, {"c", m.c}}; },
                          [](const maps::HalfLine& m) { return json{{"a", m.a}}; },
                          [](const maps::TwoSlope& m) { return json{{"a", m.a}, {"b", m.b}}; },
                          [](const maps::AbsValue& m) { return json{{"a", m.a}}; },
                          [](const maps::Quadratic& m) { return json{{"a", m.a}}; },
                          [](const maps::Ricker& m) { return json{{"r", m.r}}; },
                          [](const maps::Tabulated& t) {
                            json knots = json::array();
                            for (std::size_t i = 0; i < t.x.size(); ++i) knots.push_back({t.x[i], t.y[i]});
                            return json{{"knots", knots}};
                          },
                      },
                      map.family());
  j["family"] = std::string(map.name());
  return j;
}

MapSpec map_from_json(const json& j) {
  const std::string fam = family_of(j);
  if (fam == "linear") return MapSpec::linear(number(j, "a"));
  if (fam == "dead_zone") return MapSpec::dead_zone(number(j, "a"), number(j, "b"));
  if (fam == "saturated") return MapSpec::saturated(number(j, "a"), number(j, "c"));
  if (fam == "half_line") return MapSpec::half_line(number(j, "a"));
  if (fam == "two_slope") return MapSpec::two_slope(number(j, "a"), number(j, "b"));
  if (fam == "abs_value") return MapSpec::abs_value(number(j, "a"));
  if (fam == "quadratic") return MapSpec::quadratic(number(j, "a"));
  if (fam == "ricker") return MapSpec::ricker(number(j, "r"));
  if (fam == "tabulated") {
    if (!j.contains("knots") || !j["knots"].is_array()) throw DomainError("tabulated map needs 'knots'");
    std::vector<double> xs, ys;
    for (const auto& k : j["knots"]) {
      if (!k.is_array() || k.size() != 2 || !k[0].is_number() || !k[1].is_number())
        throw DomainError("each knot must be [x, y]");
      xs.push_back(k[0].get<double>());
      ys.push_back(k[1].get<double>());
    }
    return MapSpec::tabulated(std::move(xs), std::move(ys));
  }
  throw DomainError("unknown map family '" + fam + "'");
}

json to_json(const NoiseSpec& noise) {
  json j = std::visit(overloaded{
                          [](const noise::Laplace& n) { return json{{"b", n.b}}; },
                          [](const noise::PoissonDiff& n) { return json{{"lambda", n.lambda}}; },
                          [](const auto&) { return json::object(); },
                      },
                      noise.family());
  j["family"] = std::string(noise.name());
  return j;
}

NoiseSpec noise_from_json(const json& j) {
  const std::string fam = family_of(j);
  if (fam == "gaussian") return NoiseSpec::gaussian();
  if (fam == "laplace") return NoiseSpec::laplace(number(j, "b"));
  if (fam == "cauchy") return NoiseSpec::cauchy();
  if (fam == "poisson_diff") return NoiseSpec::poisson_diff(number(j, "lambda"));
  throw DomainError("unknown noise family '" + fam + "'");
}

json to_json(const ProcessConfig& cfg) {
  return json{{"map", to_json(cfg.map)},
              {"noise", to_json(cfg.noise)},
              {"epsilon", cfg.epsilon},
              {"half_width", cfg.half_width},
              {"start", cfg.start}};
}

ProcessConfig process_from_json(const json& j) {
  if (!j.is_object() || !j.contains("map")) throw DomainError("config needs a 'map' object");
  ProcessConfig cfg{
      map_from_json(j["map"]),
      j.contains("noise") ? noise_from_json(j["noise"]) : NoiseSpec::gaussian(),
      j.contains("epsilon") ? number(j, "epsilon") : 0.1,
      j.contains("half_width") ? number(j, "half_width") : 1.0,
      j.contains("start") ? number(j, "start") : 0.0,
  };
  cfg.validate();
  return cfg;
}

json to_json(const MinimizerConfig& cfg) {
  return json{{"M", cfg.max_length},
              {"grid", cfg.grid_points},
              {"refine_tol", cfg.refine_tol},
              {"max_sweeps", cfg.max_sweeps},
              {"cost", cfg.cost == CostKind::quadratic ? "quadratic" : "l1"},
              {"lambda", cfg.l1_weight},
              {"start", cfg.start}};
}

json to_json(const McConfig& cfg) {
  return json{{"trials", cfg.trials}, {"max_steps", cfg.max_steps}, {"seed", cfg.seed}, {"workers", cfg.workers}};
}

}  // namespace arexit
