#include "battopf/matpower.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "battopf/errors.hpp"

namespace battopf {

namespace {

struct TableRow {
  std::vector<double> values;
  int line = 0;
};

struct CaseText {
  std::map<std::string, std::vector<TableRow>> tables;
  std::map<std::string, double> scalars;
  std::vector<std::string> other_fields;
};

std::string strip_comment(const std::string& line) {
  auto pos = line.find('%');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

bool parse_row(const std::string& text, int line_no, std::vector<TableRow>& out) {
  TableRow row;
  row.line = line_no;
  const char* p = text.c_str();
  const char* end = p + text.size();
  while (p < end) {
    while (p < end && (std::isspace(static_cast<unsigned char>(*p)) || *p == ',')) ++p;
    if (p >= end) break;
    char* next = nullptr;
    double v = std::strtod(p, &next);
    if (next == p)
      throw ParseError(std::string("malformed table entry near '") + p + "'", line_no);
    row.values.push_back(v);
    p = next;
  }
  if (row.values.empty()) return false;
  out.push_back(std::move(row));
  return true;
}

// Splits "mpc.<field> = ..." statements; matrices may span lines until "];".
CaseText scan(std::istream& in) {
  CaseText out;
  std::string line;
  int line_no = 0;
  std::string pending_field;
  bool in_matrix = false;
  bool in_cell = false;  // { ... } blocks are skipped wholesale

  while (std::getline(in, line)) {
    ++line_no;
    std::string s = strip_comment(line);

    if (in_cell) {
      if (s.find('}') != std::string::npos) in_cell = false;
      continue;
    }
    if (in_matrix) {
      auto close = s.find(']');
      std::string body = close == std::string::npos ? s : s.substr(0, close);
      std::stringstream rows(body);
      std::string piece;
      while (std::getline(rows, piece, ';')) parse_row(piece, line_no, out.tables[pending_field]);
      if (close != std::string::npos) in_matrix = false;
      continue;
    }

    auto mpc = s.find("mpc.");
    if (mpc == std::string::npos) continue;
    auto eq = s.find('=', mpc);
    if (eq == std::string::npos) continue;
    std::string field = s.substr(mpc + 4, eq - mpc - 4);
    while (!field.empty() && std::isspace(static_cast<unsigned char>(field.back())))
      field.pop_back();
    std::string rhs = s.substr(eq + 1);

    auto bracket = rhs.find('[');
    auto brace = rhs.find('{');
    if (brace != std::string::npos && (bracket == std::string::npos || brace < bracket)) {
      out.other_fields.push_back(field);
      if (rhs.find('}', brace) == std::string::npos) in_cell = true;
      continue;
    }
    if (bracket != std::string::npos) {
      pending_field = field;
      auto close = rhs.find(']', bracket);
      std::string body =
          close == std::string::npos ? rhs.substr(bracket + 1) : rhs.substr(bracket + 1, close - bracket - 1);
      std::stringstream rows(body);
      std::string piece;
      while (std::getline(rows, piece, ';')) parse_row(piece, line_no, out.tables[field]);
      in_matrix = (close == std::string::npos);
      continue;
    }
    // Scalar or string assignment.
    char* next = nullptr;
    const char* p = rhs.c_str();
    while (*p && std::isspace(static_cast<unsigned char>(*p))) ++p;
    double v = std::strtod(p, &next);
    if (next != p)
      out.scalars[field] = v;
    else
      out.other_fields.push_back(field);  // e.g. version string
  }
  if (in_matrix) throw ParseError("unterminated matrix for mpc." + pending_field, line_no);
  return out;
}

double col(const TableRow& row, std::size_t idx, const char* table) {
  if (idx >= row.values.size())
    throw ParseError(std::string("malformed ") + table + " row: expected at least " +
                         std::to_string(idx + 1) + " columns, got " +
                         std::to_string(row.values.size()),
                     row.line);
  return row.values[idx];
}

void note(GridCase& c, std::map<std::string, int>& counts, const std::string& what) {
  ++counts[what];
  (void)c;
}

}  // namespace

GridCase parse_matpower_case(std::istream& text) {
  CaseText raw = scan(text);
  GridCase c;
  std::map<std::string, int> tolerated;

  auto base = raw.scalars.find("baseMVA");
  if (base == raw.scalars.end()) throw ParseError("missing mpc.baseMVA");
  c.base_mva = base->second;

  auto bus_it = raw.tables.find("bus");
  if (bus_it == raw.tables.end() || bus_it->second.empty())
    throw ParseError("missing mpc.bus table");
  for (const auto& row : bus_it->second) {
    Bus b;
    b.id = static_cast<int>(col(row, 0, "bus"));
    int type = static_cast<int>(col(row, 1, "bus"));
    switch (type) {
      case 3: b.type = BusType::Slack; break;
      case 2: b.type = BusType::PV; break;
      case 1: b.type = BusType::PQ; break;
      case 4: throw ValidationError("isolated bus " + std::to_string(b.id) + " (type 4)");
      default:
        throw ParseError("unknown bus type " + std::to_string(type) + " at bus " +
                             std::to_string(b.id),
                         row.line);
    }
    c.buses.push_back(b);
    c.base_load_mw.push_back(col(row, 2, "bus"));
    if (col(row, 4, "bus") != 0.0 || col(row, 5, "bus") != 0.0)
      note(c, tolerated, "bus shunt (Gs/Bs) ignored");
    if (col(row, 3, "bus") != 0.0) note(c, tolerated, "reactive load (Qd) ignored");
  }

  auto br_it = raw.tables.find("branch");
  if (br_it == raw.tables.end() || br_it->second.empty())
    throw ParseError("missing mpc.branch table");
  for (const auto& row : br_it->second) {
    int status = row.values.size() > 10 ? static_cast<int>(col(row, 10, "branch")) : 1;
    if (status == 0) {
      note(c, tolerated, "out-of-service branch skipped");
      continue;
    }
    BranchSpec br;
    br.from_bus = static_cast<int>(col(row, 0, "branch"));
    br.to_bus = static_cast<int>(col(row, 1, "branch"));
    double x = col(row, 3, "branch");
    if (x <= 0.0)
      throw ValidationError("branch " + std::to_string(br.from_bus) + "-" +
                            std::to_string(br.to_bus) +
                            " has nonpositive reactance; DC model unsupported");
    br.susceptance_pu = 1.0 / x;
    double rate_a = col(row, 5, "branch");
    if (rate_a > 0.0) {
      br.limit_mw = rate_a;
    } else {
      br.unlimited = true;
    }
    if (col(row, 2, "branch") != 0.0) note(c, tolerated, "branch resistance ignored");
    if (col(row, 4, "branch") != 0.0) note(c, tolerated, "branch line charging ignored");
    if (row.values.size() > 8) {
      double ratio = col(row, 8, "branch");
      if (ratio != 0.0 && ratio != 1.0) note(c, tolerated, "off-nominal tap ratio ignored");
    }
    if (row.values.size() > 9 && col(row, 9, "branch") != 0.0)
      note(c, tolerated, "phase shift angle ignored");
    c.branches.push_back(br);
  }

  auto gen_it = raw.tables.find("gen");
  if (gen_it == raw.tables.end() || gen_it->second.empty())
    throw ParseError("missing mpc.gen table");
  std::vector<std::size_t> active_gen_rows;
  for (std::size_t g = 0; g < gen_it->second.size(); ++g) {
    const auto& row = gen_it->second[g];
    int status = static_cast<int>(col(row, 7, "gen"));
    if (status <= 0) {
      note(c, tolerated, "out-of-service generator skipped");
      continue;
    }
    GeneratorSpec gen;
    gen.bus = static_cast<int>(col(row, 0, "gen"));
    gen.p_max_mw = {col(row, 8, "gen")};
    if (col(row, 9, "gen") > 0.0) note(c, tolerated, "generator Pmin ignored (dispatch floor is 0)");
    c.generators.push_back(gen);
    active_gen_rows.push_back(g);
  }

  auto cost_it = raw.tables.find("gencost");
  if (cost_it != raw.tables.end()) {
    if (cost_it->second.size() < gen_it->second.size())
      throw ParseError("gencost has fewer rows than gen", cost_it->second.back().line);
    for (std::size_t k = 0; k < active_gen_rows.size(); ++k) {
      const auto& row = cost_it->second[active_gen_rows[k]];
      GenCost& cost = c.generators[k].cost;
      int model = static_cast<int>(col(row, 0, "gencost"));
      int n = static_cast<int>(col(row, 3, "gencost"));
      if (col(row, 1, "gencost") != 0.0 || col(row, 2, "gencost") != 0.0)
        note(c, tolerated, "startup/shutdown cost ignored");
      if (model == 2) {
        if (n == 3) {
          cost.quad = col(row, 4, "gencost");
          cost.lin = col(row, 5, "gencost");
          cost.constant = col(row, 6, "gencost");
        } else if (n == 2) {
          cost.lin = col(row, 4, "gencost");
          cost.constant = col(row, 5, "gencost");
        } else if (n == 1) {
          cost.constant = col(row, 4, "gencost");
        } else {
          throw ParseError("polynomial gencost of degree > 2 unsupported", row.line);
        }
      } else if (model == 1) {
        cost.is_pwl = true;
        for (int i = 0; i < n; ++i) {
          cost.pwl_x.push_back(col(row, 4 + 2 * i, "gencost"));
          cost.pwl_y.push_back(col(row, 5 + 2 * i, "gencost"));
        }
      } else {
        throw ParseError("unknown gencost model " + std::to_string(model), row.line);
      }
    }
  } else {
    note(c, tolerated, "missing gencost; zero cost assumed");
  }

  for (const auto& f : raw.other_fields)
    if (f != "version") note(c, tolerated, "field mpc." + f + " ignored");

  for (const auto& [what, count] : tolerated)
    c.warnings.push_back(what + (count > 1 ? " (x" + std::to_string(count) + ")" : ""));

  c.horizon = Horizon{1, 1.0};
  c.load_scale = {1.0};
  validate_case(c, false);
  return c;
}

GridCase parse_matpower_case(const std::string& text) {
  std::istringstream in(text);
  return parse_matpower_case(in);
}

GridCase parse_matpower_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open case file: " + path);
  return parse_matpower_case(in);
}

}  // namespace battopf
