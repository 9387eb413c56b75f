#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "battopf/pwl_curve.hpp"

namespace battopf {

enum class BusType { Slack, PV, PQ };

struct Bus {
  int id = 0;  // external (MATPOWER) bus number
  BusType type = BusType::PQ;
  bool operator==(const Bus&) const = default;
};

struct BranchSpec {
  int from_bus = 0;  // external bus ids
  int to_bus = 0;
  double susceptance_pu = 0.0;  // 1/x, sign-normalized positive
  double limit_mw = 0.0;        // 0 when unlimited
  bool unlimited = false;
  bool operator==(const BranchSpec&) const = default;
};

// Convex generation cost. Either polynomial (quad >= 0) or explicit
// piecewise-linear points with nondecreasing slopes.
struct GenCost {
  double quad = 0.0;
  double lin = 0.0;
  double constant = 0.0;
  bool is_pwl = false;
  std::vector<double> pwl_x;  // MW
  std::vector<double> pwl_y;  // $/h
  bool operator==(const GenCost&) const = default;
};

struct GeneratorSpec {
  int bus = 0;
  std::vector<double> p_max_mw;  // one entry per period
  GenCost cost;
  bool operator==(const GeneratorSpec&) const = default;
};

struct RenewableSpec {
  int bus = 0;
  std::vector<double> forecast_mw;  // one entry per period
  bool operator==(const RenewableSpec&) const = default;
};

struct BatterySpec {
  int bus = 0;
  // Charging function C: x = cumulative electrical energy coordinate (MWh),
  // y = chemical charge (MWh). C(x_front) = e_min, C(x_back) = e_max.
  PwlCurve charge_curve;
  // Discharge function D: x = chemical charge (MWh), y = extractable
  // electrical energy (MWh). D(e_min) = 0.
  PwlCurve discharge_curve;
  double e_min_mwh = 0.0;
  double e_max_mwh = 0.0;
  double initial_mwh = 0.0;
  std::vector<double> speed_mwh;  // charging energy per period, per C-segment
  double max_power_mw = 0.0;      // instantaneous |power| box, both directions
  // Renewable buses this battery responds to; nullopt = all (aggregated).
  std::optional<std::vector<int>> responds_to_buses;
  bool operator==(const BatterySpec&) const = default;
};

struct Horizon {
  int T = 1;
  double delta_hours = 1.0;
  bool operator==(const Horizon&) const = default;
};

// Uncertainty description as parsed. Budgets expand to a concentration model
// in the uncertainty module.
struct BudgetSpec {
  std::vector<std::vector<double>> gamma;  // [renewable][period], MW
  std::vector<double> big_gamma;           // [period]
  bool operator==(const BudgetSpec&) const = default;
};

struct ConcentrationSpec {
  std::vector<std::vector<double>> k_plus;   // rows x (n*T)
  std::vector<std::vector<double>> k_minus;  // rows x (n*T)
  std::vector<double> b;
  bool operator==(const ConcentrationSpec&) const = default;
};

using UncertaintySpec = std::variant<std::monostate, BudgetSpec, ConcentrationSpec>;

// A parsed and validated planning case. Powers are MW, energies MWh; the DC
// module converts to per-unit internally.
struct GridCase {
  double base_mva = 100.0;
  std::vector<Bus> buses;
  std::vector<BranchSpec> branches;
  std::vector<GeneratorSpec> generators;
  std::vector<double> base_load_mw;  // per bus, before per-period scaling
  Horizon horizon;
  std::vector<double> load_scale;  // one multiplier per period
  std::vector<RenewableSpec> renewables;
  std::vector<BatterySpec> batteries;
  UncertaintySpec uncertainty;
  int cost_pwl_segments = 10;
  std::vector<std::string> warnings;  // tolerated-field notes, not part of equality

  int num_buses() const { return static_cast<int>(buses.size()); }
  int bus_index(int bus_id) const;  // -1 when absent
  int slack_index() const;
  double load_mw(int bus_idx, int period) const {
    return base_load_mw[bus_idx] * load_scale[period];
  }
  double total_base_load_mw() const;

  // Renewable ordinals battery i responds to (resolved from bus ids).
  std::vector<int> response_set(int battery_idx) const;

  bool equivalent(const GridCase& o) const;  // field equality ignoring warnings
};

// Deviation coordinate layout: period-major, index = t * n_renewables + j.
inline int deviation_index(int renewable, int period, int n_renewables) {
  return period * n_renewables + renewable;
}

// Checks every GridCase invariant; throws ValidationError. `complete` adds the
// scenario-level checks (horizon lengths, battery/renewable placement).
void validate_case(const GridCase& c, bool complete);

double mw_to_pu(double mw, double base_mva);
double pu_to_mw(double pu, double base_mva);

}  // namespace battopf
