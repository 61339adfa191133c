#pragma once

#include <complex>
#include <iosfwd>
#include <vector>

#include "dfrac/errors.hpp"

namespace dfrac {

// One hourly row of the daily demand table, in physical units.
struct DemandRecord {
  int hour = 0;        // 0..23
  double p_mw = 0.0;   // real power, >= 0
  double q_mvar = 0.0; // reactive power, signed
  double s_mva = 0.0;  // apparent power, >= 0

  bool operator==(const DemandRecord&) const = default;
};

// Per-unit complex parameter for one hour: c = P_pu + i*Q_pu.
struct DemandPoint {
  int hour = 0;
  double c_re = 0.0;
  double c_im = 0.0;

  std::complex<double> c() const { return {c_re, c_im}; }
  bool operator==(const DemandPoint&) const = default;
};

// Normalization base in MVA. Must be strictly positive.
class BasePower {
 public:
  explicit BasePower(double mva = 4000.0) : value_(mva) {
    if (!(mva > 0.0)) throw validation_error("base power must be > 0 MVA");
  }
  double value() const { return value_; }

 private:
  double value_;
};

// Parses CSV with header `hour,p_mw,q_mvar[,s_mva]`. Lines starting with
// `#` are ignored. When s_mva is absent it is computed as sqrt(p^2+q^2).
// Throws parse_error (naming the line) on malformed rows, validation_error
// on duplicate hours or negative real power.
std::vector<DemandRecord> parse_demand_csv(std::istream& in);
std::vector<DemandRecord> parse_demand_csv(const std::string& text);

// True iff |s - sqrt(p^2+q^2)| <= tol.
bool validate_apparent_power(const DemandRecord& rec, double tol_mva);

// Full-precision per-unit conversion; c depends only on P and Q.
DemandPoint to_per_unit(const DemandRecord& rec, const BasePower& base);

std::vector<DemandPoint> to_per_unit(const std::vector<DemandRecord>& recs,
                                     const BasePower& base);

// The embedded 24-hour demand dataset (integer MW/MVAr/MVA columns).
const std::vector<DemandRecord>& builtin_table1();

// Serializes records in the same CSV dialect parse_demand_csv accepts.
void write_demand_csv(const std::vector<DemandRecord>& recs, std::ostream& out);

}  // namespace dfrac
