#include "signhom/bounds.hpp"

#include <cmath>
#include <cstdio>

#include "signhom/signed_graph.hpp"

namespace signhom {

namespace {

std::string format_value(double v) {
  if (v == std::floor(v) && std::abs(v) < 1e15) {
    return std::to_string(static_cast<long long>(v));
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

Bound constant(long long v) { return {static_cast<double>(v), std::to_string(v)}; }

Bound formula(double v, std::string expr) { return {v, std::move(expr)}; }

BoundCell cell(std::string quantity, Bound lower, Bound upper) {
  return {std::move(quantity), std::move(lower), std::move(upper)};
}

std::string quantity(const char* chi, int k, bool connected) {
  return std::string(chi) + "(D_" + std::to_string(k) + (connected ? "^c)" : ")");
}

double pow2(double e) { return std::pow(2.0, e); }

// k^2 * 2^(k+1)
Bound upper_general(int k) {
  return formula(static_cast<double>(k) * k * pow2(k + 1), "k^2*2^(k+1)");
}

// (k-1)^2 * 2^k + 2
Bound upper_connected(int k) {
  return formula(static_cast<double>(k - 1) * (k - 1) * pow2(k) + 2,
                 "(k-1)^2*2^k+2");
}

}  // namespace

std::string BoundCell::to_string() const {
  if (exact()) return quantity + " = " + format_value(lower.value);
  return format_value(lower.value) + " <= " + quantity +
         " <= " + format_value(upper.value);
}

BoundsRow bounds_table(int k) {
  if (k < 1) throw Error("bounds_table needs k >= 1");
  BoundsRow row;
  row.k = k;
  const auto c2 = quantity("chi_2", k, false);
  const auto c2c = quantity("chi_2", k, true);
  const auto cs = quantity("chi_s", k, false);
  const auto csc = quantity("chi_s", k, true);

  switch (k) {
    case 1:
      row.chi2 = cell(c2, constant(3), constant(3));
      row.chi2_connected = cell(c2c, constant(2), constant(2));
      break;
    case 2:
      row.chi2 = cell(c2, constant(6), constant(6));
      row.chi2_connected = cell(c2c, constant(5), constant(5));
      break;
    case 3:
      row.chi2 = cell(c2, constant(8), constant(11));
      row.chi2_connected = cell(c2c, constant(8), constant(10));
      break;
    case 4:
      row.chi2 = cell(c2, constant(12), constant(30));
      row.chi2_connected = cell(c2c, constant(12), constant(30));
      break;
    case 5:
      row.chi2 = cell(c2, constant(16), constant(110));
      row.chi2_connected = cell(c2c, constant(16), constant(110));
      break;
    default: {
      const Bound lower = k <= 10 ? formula(4.0 * (k - 1), "4(k-1)")
                                  : formula(pow2(k / 2.0), "2^(k/2)");
      row.chi2 = cell(c2, lower, upper_general(k));
      row.chi2_connected = cell(c2c, lower, upper_connected(k));
    }
  }

  switch (k) {
    case 1:
      row.chis = cell(cs, constant(2), constant(2));
      row.chis_connected = cell(csc, constant(2), constant(2));
      break;
    case 2:
      row.chis = cell(cs, constant(4), constant(4));
      row.chis_connected = cell(csc, constant(4), constant(4));
      break;
    case 3:
      row.chis = cell(cs, constant(6), constant(7));
      row.chis_connected = cell(csc, constant(6), constant(6));
      break;
    case 4:
      row.chis = cell(cs, constant(10), constant(16));
      row.chis_connected = cell(csc, constant(10), constant(16));
      break;
    case 5:
      row.chis = cell(cs, constant(12), constant(56));
      row.chis_connected = cell(csc, constant(12), constant(56));
      break;
    default: {
      const Bound lower = k <= 8 ? formula(2.0 * (k + 1), "2(k+1)")
                                 : formula(pow2(k / 2.0 - 1), "2^(k/2-1)");
      row.chis = cell(cs, lower, upper_general(k));
      row.chis_connected = cell(csc, lower, upper_connected(k));
    }
  }
  return row;
}

}  // namespace signhom
