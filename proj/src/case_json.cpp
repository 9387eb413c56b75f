#include "battopf/case_json.hpp"

#include <json.hpp>

#include "battopf/errors.hpp"

namespace battopf {

namespace {
using nlohmann::json;

json curve_to_json(const PwlCurve& c) { return json{{"x", c.xs()}, {"y", c.ys()}}; }

PwlCurve curve_from_json(const json& j, const std::string& what) {
  return PwlCurve(j.at("x").get<std::vector<double>>(), j.at("y").get<std::vector<double>>(),
                  true, what);
}
}  // namespace

std::string case_to_json(const GridCase& c) {
  json j;
  j["base_mva"] = c.base_mva;
  j["buses"] = json::array();
  for (const auto& b : c.buses)
    j["buses"].push_back({{"id", b.id}, {"type", static_cast<int>(b.type)}});
  j["branches"] = json::array();
  for (const auto& br : c.branches)
    j["branches"].push_back({{"from", br.from_bus},
                             {"to", br.to_bus},
                             {"susceptance_pu", br.susceptance_pu},
                             {"limit_mw", br.limit_mw},
                             {"unlimited", br.unlimited}});
  j["generators"] = json::array();
  for (const auto& g : c.generators) {
    json cost{{"quad", g.cost.quad},
              {"lin", g.cost.lin},
              {"constant", g.cost.constant},
              {"is_pwl", g.cost.is_pwl},
              {"pwl_x", g.cost.pwl_x},
              {"pwl_y", g.cost.pwl_y}};
    j["generators"].push_back({{"bus", g.bus}, {"p_max_mw", g.p_max_mw}, {"cost", cost}});
  }
  j["base_load_mw"] = c.base_load_mw;
  j["T"] = c.horizon.T;
  j["delta_hours"] = c.horizon.delta_hours;
  j["load_scale"] = c.load_scale;
  j["renewables"] = json::array();
  for (const auto& r : c.renewables)
    j["renewables"].push_back({{"bus", r.bus}, {"forecast_mw", r.forecast_mw}});
  j["batteries"] = json::array();
  for (const auto& b : c.batteries) {
    json jb{{"bus", b.bus},
            {"e_min_mwh", b.e_min_mwh},
            {"e_max_mwh", b.e_max_mwh},
            {"initial_mwh", b.initial_mwh},
            {"charge_curve", curve_to_json(b.charge_curve)},
            {"discharge_curve", curve_to_json(b.discharge_curve)},
            {"speed_mwh", b.speed_mwh},
            {"max_power_mw", b.max_power_mw}};
    if (b.responds_to_buses)
      jb["responds_to"] = *b.responds_to_buses;
    else
      jb["responds_to"] = "all";
    j["batteries"].push_back(jb);
  }
  if (const auto* budgets = std::get_if<BudgetSpec>(&c.uncertainty)) {
    j["uncertainty"] = {{"type", "budgets"}, {"gamma", budgets->gamma}, {"Gamma", budgets->big_gamma}};
  } else if (const auto* conc = std::get_if<ConcentrationSpec>(&c.uncertainty)) {
    j["uncertainty"] = {{"type", "concentration"},
                        {"K_plus", conc->k_plus},
                        {"K_minus", conc->k_minus},
                        {"b", conc->b}};
  }
  j["cost_pwl_segments"] = c.cost_pwl_segments;
  return j.dump(2);
}

GridCase case_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("case JSON: ") + e.what());
  }
  GridCase c;
  c.base_mva = j.at("base_mva").get<double>();
  for (const auto& b : j.at("buses"))
    c.buses.push_back(Bus{b.at("id").get<int>(), static_cast<BusType>(b.at("type").get<int>())});
  for (const auto& br : j.at("branches")) {
    BranchSpec spec;
    spec.from_bus = br.at("from").get<int>();
    spec.to_bus = br.at("to").get<int>();
    spec.susceptance_pu = br.at("susceptance_pu").get<double>();
    spec.limit_mw = br.at("limit_mw").get<double>();
    spec.unlimited = br.at("unlimited").get<bool>();
    c.branches.push_back(spec);
  }
  for (const auto& g : j.at("generators")) {
    GeneratorSpec spec;
    spec.bus = g.at("bus").get<int>();
    spec.p_max_mw = g.at("p_max_mw").get<std::vector<double>>();
    const auto& cost = g.at("cost");
    spec.cost.quad = cost.at("quad").get<double>();
    spec.cost.lin = cost.at("lin").get<double>();
    spec.cost.constant = cost.at("constant").get<double>();
    spec.cost.is_pwl = cost.at("is_pwl").get<bool>();
    spec.cost.pwl_x = cost.at("pwl_x").get<std::vector<double>>();
    spec.cost.pwl_y = cost.at("pwl_y").get<std::vector<double>>();
    c.generators.push_back(std::move(spec));
  }
  c.base_load_mw = j.at("base_load_mw").get<std::vector<double>>();
  c.horizon.T = j.at("T").get<int>();
  c.horizon.delta_hours = j.at("delta_hours").get<double>();
  c.load_scale = j.at("load_scale").get<std::vector<double>>();
  for (const auto& r : j.at("renewables"))
    c.renewables.push_back(
        RenewableSpec{r.at("bus").get<int>(), r.at("forecast_mw").get<std::vector<double>>()});
  for (const auto& b : j.at("batteries")) {
    BatterySpec spec;
    spec.bus = b.at("bus").get<int>();
    spec.e_min_mwh = b.at("e_min_mwh").get<double>();
    spec.e_max_mwh = b.at("e_max_mwh").get<double>();
    spec.initial_mwh = b.at("initial_mwh").get<double>();
    spec.charge_curve = curve_from_json(b.at("charge_curve"), "charge_curve");
    spec.discharge_curve = curve_from_json(b.at("discharge_curve"), "discharge_curve");
    spec.speed_mwh = b.at("speed_mwh").get<std::vector<double>>();
    spec.max_power_mw = b.at("max_power_mw").get<double>();
    const auto& resp = b.at("responds_to");
    if (resp.is_string())
      spec.responds_to_buses = std::nullopt;
    else
      spec.responds_to_buses = resp.get<std::vector<int>>();
    c.batteries.push_back(std::move(spec));
  }
  if (j.contains("uncertainty")) {
    const auto& u = j.at("uncertainty");
    if (u.at("type") == "budgets") {
      c.uncertainty = BudgetSpec{u.at("gamma").get<std::vector<std::vector<double>>>(),
                                 u.at("Gamma").get<std::vector<double>>()};
    } else {
      c.uncertainty = ConcentrationSpec{u.at("K_plus").get<std::vector<std::vector<double>>>(),
                                        u.at("K_minus").get<std::vector<std::vector<double>>>(),
                                        u.at("b").get<std::vector<double>>()};
    }
  }
  c.cost_pwl_segments = j.at("cost_pwl_segments").get<int>();
  validate_case(c, true);
  return c;
}

}  // namespace battopf
