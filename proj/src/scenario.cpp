#include "battopf/scenario.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "battopf/errors.hpp"

namespace battopf {

namespace {

using nlohmann::json;

std::vector<double> num_list(const json& j, const std::string& key) {
  if (!j.is_array()) throw ParseError("scenario: " + key + " must be an array");
  std::vector<double> out;
  for (const auto& v : j) {
    if (!v.is_number()) throw ParseError("scenario: " + key + " entries must be numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

std::vector<std::vector<double>> num_matrix(const json& j, const std::string& key) {
  if (!j.is_array()) throw ParseError("scenario: " + key + " must be an array of arrays");
  std::vector<std::vector<double>> out;
  for (const auto& row : j) out.push_back(num_list(row, key));
  return out;
}

PwlCurve parse_curve(const json& j, const std::string& what) {
  if (!j.contains("x") || !j.contains("y"))
    throw ParseError("scenario: " + what + " needs x and y lists");
  return PwlCurve(num_list(j.at("x"), what + ".x"), num_list(j.at("y"), what + ".y"),
                  /*require_unit_slopes=*/true, what);
}

}  // namespace

GridCase parse_scenario_spec(std::istream& text, const GridCase& base) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("scenario JSON: ") + e.what());
  }

  GridCase c = base;
  c.horizon.T = j.value("T", 1);
  c.horizon.delta_hours = j.value("delta_hours", 1.0);
  if (c.horizon.T < 1) throw ValidationError("scenario: T must be >= 1");

  if (j.contains("load_scale"))
    c.load_scale = num_list(j.at("load_scale"), "load_scale");
  else
    c.load_scale.assign(c.horizon.T, 1.0);

  // Base-case generator limits replicate across periods unless overridden.
  for (auto& g : c.generators) {
    double base_limit = g.p_max_mw.empty() ? 0.0 : g.p_max_mw.front();
    g.p_max_mw.assign(c.horizon.T, base_limit);
  }
  if (j.contains("gen_pmax_mw")) {
    auto m = num_matrix(j.at("gen_pmax_mw"), "gen_pmax_mw");
    if (m.size() != c.generators.size())
      throw ValidationError("scenario: gen_pmax_mw needs one row per generator");
    for (std::size_t g = 0; g < m.size(); ++g) {
      if (static_cast<int>(m[g].size()) != c.horizon.T)
        throw ValidationError("scenario: gen_pmax_mw rows need T entries");
      c.generators[g].p_max_mw = m[g];
    }
  }

  c.renewables.clear();
  if (j.contains("renewables")) {
    for (const auto& r : j.at("renewables")) {
      RenewableSpec spec;
      spec.bus = r.at("bus").get<int>();
      spec.forecast_mw = num_list(r.at("forecast_mw"), "forecast_mw");
      c.renewables.push_back(std::move(spec));
    }
  }

  c.batteries.clear();
  if (j.contains("batteries")) {
    for (const auto& b : j.at("batteries")) {
      BatterySpec spec;
      spec.bus = b.at("bus").get<int>();
      spec.e_min_mwh = b.at("e_min_mwh").get<double>();
      spec.e_max_mwh = b.at("e_max_mwh").get<double>();
      spec.initial_mwh = b.at("initial_mwh").get<double>();
      spec.charge_curve = parse_curve(b.at("charge_curve"), "charge_curve");
      spec.discharge_curve = parse_curve(b.at("discharge_curve"), "discharge_curve");
      spec.speed_mwh = num_list(b.at("speed_mwh"), "speed_mwh");
      spec.max_power_mw = b.at("max_power_mw").get<double>();
      const auto& resp = b.at("responds_to");
      if (resp.is_string()) {
        if (resp.get<std::string>() != "all")
          throw ParseError("scenario: responds_to must be a bus list or \"all\"");
        spec.responds_to_buses = std::nullopt;
      } else {
        std::vector<int> buses;
        for (const auto& v : resp) buses.push_back(v.get<int>());
        spec.responds_to_buses = std::move(buses);
      }
      c.batteries.push_back(std::move(spec));
    }
  }

  c.uncertainty = std::monostate{};
  if (j.contains("uncertainty")) {
    const auto& u = j.at("uncertainty");
    std::string type = u.at("type").get<std::string>();
    if (type == "budgets") {
      BudgetSpec budgets;
      budgets.gamma = num_matrix(u.at("gamma"), "gamma");
      budgets.big_gamma = num_list(u.at("Gamma"), "Gamma");
      c.uncertainty = std::move(budgets);
    } else if (type == "concentration") {
      ConcentrationSpec conc;
      conc.k_plus = num_matrix(u.at("K_plus"), "K_plus");
      conc.k_minus = num_matrix(u.at("K_minus"), "K_minus");
      conc.b = num_list(u.at("b"), "b");
      c.uncertainty = std::move(conc);
    } else {
      throw ParseError("scenario: unknown uncertainty type '" + type + "'");
    }
  }

  c.cost_pwl_segments = j.value("cost_pwl_segments", 10);

  validate_case(c, true);
  return c;
}

GridCase parse_scenario_spec(const std::string& text, const GridCase& base) {
  std::istringstream in(text);
  return parse_scenario_spec(in, base);
}

GridCase parse_scenario_file(const std::string& path, const GridCase& base) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open scenario file: " + path);
  return parse_scenario_spec(in, base);
}

}  // namespace battopf
