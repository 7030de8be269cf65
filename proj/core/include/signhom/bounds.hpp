#pragma once

#include <string>

namespace signhom {

/// One side of a bound. `value` is the numeric evaluation (2^(k/2) is not an
/// integer for odd k); `expr` is the closed form that produced it.
struct Bound {
  double value = 0;
  std::string expr;
};

struct BoundCell {
  /// e.g. "chi_2(D_4)" or "chi_s(D_3^c)".
  std::string quantity;
  Bound lower;
  Bound upper;

  bool exact() const { return lower.value == upper.value; }
  /// "6 <= chi_s(D_3) <= 7", or "chi_2(D_2) = 6" for exact cells.
  std::string to_string() const;
};

/// Known bounds on the chromatic numbers of graphs with maximum degree k.
struct BoundsRow {
  int k = 0;
  BoundCell chi2;
  BoundCell chi2_connected;
  BoundCell chis;
  BoundCell chis_connected;
};

/// Requires k >= 1.
BoundsRow bounds_table(int k);

}  // namespace signhom
