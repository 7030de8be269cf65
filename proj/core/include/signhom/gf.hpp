#pragma once

#include <string>
#include <utility>
#include <vector>

#include "signhom/signed_graph.hpp"

namespace signhom {

/// Returns (p, d) with q = p^d, or throws Error when q is not a prime power.
std::pair<int, int> prime_power(int q);

/// Trial division by every monic polynomial of degree 1..deg/2 over GF(p).
/// Coefficients are listed constant term first.
bool is_irreducible(const std::vector<int>& poly, int p);

class Field;

/// Polynomial over GF(p) of degree < d, constant term first.
class FieldElement {
 public:
  const std::vector<int>& coeffs() const { return coeffs_; }

  friend bool operator==(const FieldElement&, const FieldElement&) = default;

 private:
  friend class Field;
  explicit FieldElement(std::vector<int> coeffs) : coeffs_(std::move(coeffs)) {}

  std::vector<int> coeffs_;
};

/// GF(p^d). The modulus is the first monic irreducible polynomial in
/// increasing base-p code of its lower coefficients (constant term least
/// significant): x^2+1 for GF(9), x^3+x+1 for GF(8).
///
/// Elements are numbered by index = sum c_i p^i, so for GF(9) the order is
/// 0, 1, 2, x, x+1, x+2, 2x, 2x+1, 2x+2.
class Field {
 public:
  explicit Field(int q);

  int characteristic() const { return p_; }
  int degree() const { return d_; }
  int order() const { return q_; }
  /// Monic, constant term first, length degree()+1.
  const std::vector<int>& modulus() const { return modulus_; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement element(int index) const;
  int index(const FieldElement& a) const;
  /// Reduces every coefficient mod p; throws when the length is not d.
  FieldElement from_coeffs(std::vector<int> coeffs) const;

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  FieldElement pow(const FieldElement& a, long long e) const;

  bool is_square(const FieldElement& a) const;
  /// Index-level helpers used by the graph builders.
  bool is_square_index(int index) const { return squares_[index]; }
  int sub_index(int a, int b) const;

  /// Human-readable form such as "2x+1" or "x^2+2".
  std::string to_string(const FieldElement& a) const;
  std::string to_string(int index) const { return to_string(element(index)); }

 private:
  void check(const FieldElement& a) const;

  int p_ = 0;
  int d_ = 0;
  int q_ = 0;
  std::vector<int> modulus_;
  std::vector<bool> squares_;
};

}  // namespace signhom
