#include "battopf/grid_case.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "battopf/errors.hpp"

namespace battopf {

int GridCase::bus_index(int bus_id) const {
  for (std::size_t i = 0; i < buses.size(); ++i)
    if (buses[i].id == bus_id) return static_cast<int>(i);
  return -1;
}

int GridCase::slack_index() const {
  for (std::size_t i = 0; i < buses.size(); ++i)
    if (buses[i].type == BusType::Slack) return static_cast<int>(i);
  return -1;
}

double GridCase::total_base_load_mw() const {
  double s = 0.0;
  for (double v : base_load_mw) s += v;
  return s;
}

std::vector<int> GridCase::response_set(int battery_idx) const {
  const auto& bat = batteries.at(battery_idx);
  std::vector<int> out;
  if (!bat.responds_to_buses) {
    out.resize(renewables.size());
    for (std::size_t j = 0; j < renewables.size(); ++j) out[j] = static_cast<int>(j);
    return out;
  }
  for (int bus : *bat.responds_to_buses) {
    for (std::size_t j = 0; j < renewables.size(); ++j)
      if (renewables[j].bus == bus) out.push_back(static_cast<int>(j));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool GridCase::equivalent(const GridCase& o) const {
  return base_mva == o.base_mva && buses == o.buses && branches == o.branches &&
         generators == o.generators && base_load_mw == o.base_load_mw &&
         horizon == o.horizon && load_scale == o.load_scale && renewables == o.renewables &&
         batteries == o.batteries && uncertainty == o.uncertainty &&
         cost_pwl_segments == o.cost_pwl_segments;
}

double mw_to_pu(double mw, double base_mva) { return mw / base_mva; }
double pu_to_mw(double pu, double base_mva) { return pu * base_mva; }

namespace {

void validate_battery(const GridCase& c, const BatterySpec& b, std::size_t idx) {
  std::string tag = "battery " + std::to_string(idx) + " (bus " + std::to_string(b.bus) + ")";
  if (c.bus_index(b.bus) < 0) throw ValidationError(tag + ": bus does not exist");
  if (!(b.e_min_mwh <= b.initial_mwh && b.initial_mwh <= b.e_max_mwh))
    throw ValidationError(tag + ": initial charge outside [E^min, E^max]");
  if (!(b.e_min_mwh < b.e_max_mwh)) throw ValidationError(tag + ": empty charge range");
  const double tol = 1e-9 * std::max(1.0, std::abs(b.e_max_mwh));
  if (std::abs(b.charge_curve.y_front() - b.e_min_mwh) > tol ||
      std::abs(b.charge_curve.y_back() - b.e_max_mwh) > tol)
    throw ValidationError(tag + ": charge curve must span [E^min, E^max]");
  if (std::abs(b.discharge_curve.x_front() - b.e_min_mwh) > tol ||
      std::abs(b.discharge_curve.x_back() - b.e_max_mwh) > tol)
    throw ValidationError(tag + ": discharge curve domain must be [E^min, E^max]");
  if (std::abs(b.discharge_curve.y_front()) > tol)
    throw ValidationError(tag + ": discharge curve must have D(E^min) = 0");
  if (static_cast<int>(b.speed_mwh.size()) != b.charge_curve.num_segments())
    throw ValidationError(tag + ": need one speed limit per charging segment");
  for (double v : b.speed_mwh)
    if (!(v > 0.0)) throw ValidationError(tag + ": speed limits must be positive");
  if (!(b.max_power_mw > 0.0)) throw ValidationError(tag + ": max power must be positive");
  if (b.responds_to_buses) {
    for (int bus : *b.responds_to_buses) {
      bool found = false;
      for (const auto& r : c.renewables) found |= (r.bus == bus);
      if (!found)
        throw ValidationError(tag + ": responds_to bus " + std::to_string(bus) +
                              " has no renewable");
    }
  }
}

void validate_uncertainty(const GridCase& c) {
  int n = static_cast<int>(c.renewables.size());
  int dim = n * c.horizon.T;
  if (const auto* budgets = std::get_if<BudgetSpec>(&c.uncertainty)) {
    if (static_cast<int>(budgets->gamma.size()) != n)
      throw ValidationError("budgets: gamma needs one row per renewable");
    for (const auto& row : budgets->gamma) {
      if (static_cast<int>(row.size()) != c.horizon.T)
        throw ValidationError("budgets: gamma rows need one entry per period");
      for (double g : row)
        if (!(g > 0.0)) throw ValidationError("budgets: gamma must be positive");
    }
    if (static_cast<int>(budgets->big_gamma.size()) != c.horizon.T)
      throw ValidationError("budgets: Gamma needs one entry per period");
    for (double g : budgets->big_gamma)
      if (!(g > 0.0)) throw ValidationError("budgets: Gamma must be positive");
  } else if (const auto* conc = std::get_if<ConcentrationSpec>(&c.uncertainty)) {
    if (conc->k_plus.size() != conc->k_minus.size() || conc->k_plus.size() != conc->b.size())
      throw ValidationError("concentration model: K+, K- and b need matching row counts");
    for (std::size_t r = 0; r < conc->b.size(); ++r) {
      if (static_cast<int>(conc->k_plus[r].size()) != dim ||
          static_cast<int>(conc->k_minus[r].size()) != dim)
        throw ValidationError("concentration model: rows must have n*T = " +
                              std::to_string(dim) + " columns");
      for (double v : conc->k_plus[r])
        if (v < 0.0) throw ValidationError("concentration model requires nonnegative matrices");
      for (double v : conc->k_minus[r])
        if (v < 0.0) throw ValidationError("concentration model requires nonnegative matrices");
      if (conc->b[r] < 0.0)
        throw ValidationError("concentration model: b must be nonnegative so that 0 is feasible");
    }
  } else if (n > 0) {
    throw ValidationError("scenario with renewables needs an uncertainty model");
  }
}

}  // namespace

void validate_case(const GridCase& c, bool complete) {
  if (!(c.base_mva > 0.0)) throw ValidationError("baseMVA must be positive");
  if (c.buses.empty()) throw ValidationError("case has no buses");

  std::set<int> ids;
  int slack_count = 0;
  for (const auto& b : c.buses) {
    if (!ids.insert(b.id).second)
      throw ValidationError("duplicate bus id " + std::to_string(b.id));
    if (b.type == BusType::Slack) ++slack_count;
  }
  if (slack_count != 1)
    throw ValidationError("case must have exactly one slack bus, found " +
                          std::to_string(slack_count));

  for (std::size_t i = 0; i < c.branches.size(); ++i) {
    const auto& br = c.branches[i];
    if (c.bus_index(br.from_bus) < 0 || c.bus_index(br.to_bus) < 0)
      throw ValidationError("branch " + std::to_string(i) + " (" + std::to_string(br.from_bus) +
                            "-" + std::to_string(br.to_bus) + ") references a missing bus");
    if (br.from_bus == br.to_bus)
      throw ValidationError("branch " + std::to_string(i) + " is a self-loop");
    if (!(br.susceptance_pu > 0.0))
      throw ValidationError("branch " + std::to_string(i) + " needs positive susceptance");
    if (!br.unlimited && !(br.limit_mw > 0.0))
      throw ValidationError("branch " + std::to_string(i) + " has nonpositive limit");
  }

  if (c.base_load_mw.size() != c.buses.size())
    throw ValidationError("load vector length must equal bus count");

  for (std::size_t g = 0; g < c.generators.size(); ++g) {
    const auto& gen = c.generators[g];
    if (c.bus_index(gen.bus) < 0)
      throw ValidationError("generator " + std::to_string(g) + " at missing bus " +
                            std::to_string(gen.bus));
    for (double p : gen.p_max_mw)
      if (p < 0.0) throw ValidationError("generator " + std::to_string(g) + " has negative Pmax");
    if (gen.cost.quad < 0.0)
      throw ValidationError("generator " + std::to_string(g) + " has concave quadratic cost");
    if (gen.cost.is_pwl) {
      if (gen.cost.pwl_x.size() != gen.cost.pwl_y.size() || gen.cost.pwl_x.size() < 2)
        throw ValidationError("generator " + std::to_string(g) + " has malformed pwl cost");
      double prev_slope = -1e300;
      for (std::size_t i = 0; i + 1 < gen.cost.pwl_x.size(); ++i) {
        if (!(gen.cost.pwl_x[i + 1] > gen.cost.pwl_x[i]))
          throw ValidationError("generator " + std::to_string(g) +
                                " pwl cost breakpoints must increase");
        double s = (gen.cost.pwl_y[i + 1] - gen.cost.pwl_y[i]) /
                   (gen.cost.pwl_x[i + 1] - gen.cost.pwl_x[i]);
        if (s < prev_slope - 1e-9)
          throw ValidationError("generator " + std::to_string(g) + " pwl cost is not convex");
        prev_slope = s;
      }
    }
  }

  if (!complete) return;

  if (c.horizon.T < 1) throw ValidationError("horizon must have T >= 1");
  if (!(c.horizon.delta_hours > 0.0)) throw ValidationError("period length must be positive");
  if (static_cast<int>(c.load_scale.size()) != c.horizon.T)
    throw ValidationError("load_scale needs exactly T entries");
  for (const auto& g : c.generators)
    if (static_cast<int>(g.p_max_mw.size()) != c.horizon.T)
      throw ValidationError("generator limits need exactly T entries");
  for (const auto& r : c.renewables) {
    if (c.bus_index(r.bus) < 0)
      throw ValidationError("renewable at missing bus " + std::to_string(r.bus));
    if (static_cast<int>(r.forecast_mw.size()) != c.horizon.T)
      throw ValidationError("renewable forecast needs exactly T entries");
  }
  for (std::size_t i = 0; i < c.batteries.size(); ++i) validate_battery(c, c.batteries[i], i);
  validate_uncertainty(c);
  if (c.cost_pwl_segments < 1)
    throw ValidationError("cost_pwl_segments must be at least 1");
}

}  // namespace battopf
