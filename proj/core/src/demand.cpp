#include "dfrac/demand.hpp"

#include <array>
#include <cmath>
#include <charconv>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>

namespace dfrac {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = line.find(',', pos);
    if (comma == std::string_view::npos) {
      out.push_back(trim(line.substr(pos)));
      break;
    }
    out.push_back(trim(line.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return out;
}

double parse_number(std::string_view field, int line_no, const char* what) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size())
    throw parse_error("line " + std::to_string(line_no) + ": bad " + what +
                      " value '" + std::string(field) + "'");
  return value;
}

bool is_header(const std::vector<std::string_view>& fields) {
  return !fields.empty() && fields[0] == "hour";
}

}  // namespace

std::vector<DemandRecord> parse_demand_csv(std::istream& in) {
  std::vector<DemandRecord> records;
  std::set<int> seen_hours;
  std::string line;
  int line_no = 0;
  bool saw_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view sv = trim(line);
    if (sv.empty() || sv.front() == '#') continue;
    auto fields = split_fields(sv);
    if (!saw_header && is_header(fields)) {
      saw_header = true;
      continue;
    }
    if (fields.size() != 3 && fields.size() != 4)
      throw parse_error("line " + std::to_string(line_no) +
                        ": expected 3 or 4 fields, got " +
                        std::to_string(fields.size()));
    DemandRecord rec;
    double hour = parse_number(fields[0], line_no, "hour");
    rec.hour = static_cast<int>(hour);
    if (rec.hour != hour || rec.hour < 0 || rec.hour > 23)
      throw validation_error("line " + std::to_string(line_no) +
                             ": hour must be an integer in [0,23]");
    rec.p_mw = parse_number(fields[1], line_no, "p_mw");
    rec.q_mvar = parse_number(fields[2], line_no, "q_mvar");
    if (rec.p_mw < 0.0)
      throw validation_error("line " + std::to_string(line_no) +
                             ": negative real power");
    if (fields.size() == 4) {
      rec.s_mva = parse_number(fields[3], line_no, "s_mva");
      if (rec.s_mva < 0.0)
        throw validation_error("line " + std::to_string(line_no) +
                               ": negative apparent power");
    } else {
      rec.s_mva = std::hypot(rec.p_mw, rec.q_mvar);
    }
    if (!seen_hours.insert(rec.hour).second)
      throw validation_error("line " + std::to_string(line_no) +
                             ": duplicate hour " + std::to_string(rec.hour));
    records.push_back(rec);
  }
  return records;
}

std::vector<DemandRecord> parse_demand_csv(const std::string& text) {
  std::istringstream in(text);
  return parse_demand_csv(in);
}

bool validate_apparent_power(const DemandRecord& rec, double tol_mva) {
  return std::abs(rec.s_mva - std::hypot(rec.p_mw, rec.q_mvar)) <= tol_mva;
}

DemandPoint to_per_unit(const DemandRecord& rec, const BasePower& base) {
  return {rec.hour, rec.p_mw / base.value(), rec.q_mvar / base.value()};
}

std::vector<DemandPoint> to_per_unit(const std::vector<DemandRecord>& recs,
                                     const BasePower& base) {
  std::vector<DemandPoint> points;
  points.reserve(recs.size());
  for (const auto& rec : recs) points.push_back(to_per_unit(rec, base));
  return points;
}

const std::vector<DemandRecord>& builtin_table1() {
  static const std::vector<DemandRecord> table = {
      {0, 889, 371, 963},    {1, 834, 405, 927},    {2, 792, 337, 861},
      {3, 790, 324, 854},    {4, 804, 323, 867},    {5, 925, 355, 991},
      {6, 1041, 482, 1147},  {7, 1105, 556, 1237},  {8, 1191, 610, 1338},
      {9, 1256, 704, 1439},  {10, 1309, 744, 1506}, {11, 1366, 775, 1571},
      {12, 1385, 793, 1595}, {13, 1356, 774, 1561}, {14, 1337, 759, 1537},
      {15, 1350, 774, 1556}, {16, 1336, 773, 1543}, {17, 1312, 749, 1511},
      {18, 1287, 687, 1459}, {19, 1420, 683, 1575}, {20, 1389, 660, 1538},
      {21, 1311, 605, 1444}, {22, 1175, 544, 1295}, {23, 1030, 489, 1140},
  };
  return table;
}

void write_demand_csv(const std::vector<DemandRecord>& recs, std::ostream& out) {
  out << "hour,p_mw,q_mvar,s_mva\n";
  for (const auto& rec : recs) {
    std::array<char, 128> buf;
    int n = std::snprintf(buf.data(), buf.size(), "%d,%.17g,%.17g,%.17g\n",
                          rec.hour, rec.p_mw, rec.q_mvar, rec.s_mva);
    out.write(buf.data(), n);
  }
}

}  // namespace dfrac
