#include "signhom/gf.hpp"

#include <tuple>

namespace signhom {

namespace {

int mod(long long a, int p) {
  const long long r = a % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

int inverse_mod(int a, int p) {
  for (int b = 1; b < p; ++b) {
    if ((a * b) % p == 1) return b;
  }
  throw Error("no inverse");  // unreachable for prime p and a != 0
}

void trim(std::vector<int>& poly) {
  while (!poly.empty() && poly.back() == 0) poly.pop_back();
}

// Remainder of a / b over GF(p); b must have a nonzero leading coefficient.
std::vector<int> poly_rem(std::vector<int> a, const std::vector<int>& b,
                          int p) {
  trim(a);
  const int db = static_cast<int>(b.size()) - 1;
  const int lead_inv = inverse_mod(b.back(), p);
  while (static_cast<int>(a.size()) - 1 >= db) {
    const int shift = static_cast<int>(a.size()) - 1 - db;
    const int factor = mod(static_cast<long long>(a.back()) * lead_inv, p);
    for (int i = 0; i <= db; ++i) {
      a[shift + i] = mod(a[shift + i] - static_cast<long long>(factor) * b[i], p);
    }
    trim(a);
  }
  return a;
}

// Monic polynomial of the given degree whose lower coefficients are the
// base-p digits of `code`.
std::vector<int> monic_from_code(long long code, int degree, int p) {
  std::vector<int> poly(degree + 1, 0);
  for (int i = 0; i < degree; ++i) {
    poly[i] = static_cast<int>(code % p);
    code /= p;
  }
  poly[degree] = 1;
  return poly;
}

long long ipow(long long base, int e) {
  long long r = 1;
  while (e-- > 0) r *= base;
  return r;
}

}  // namespace

std::pair<int, int> prime_power(int q) {
  if (q < 2) throw Error("field order must be at least 2, got " + std::to_string(q));
  int p = 0;
  for (int f = 2; static_cast<long long>(f) * f <= q; ++f) {
    if (q % f == 0) {
      p = f;
      break;
    }
  }
  if (p == 0) return {q, 1};
  int d = 0;
  int rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++d;
  }
  if (rest != 1) throw Error(std::to_string(q) + " is not a prime power");
  return {p, d};
}

bool is_irreducible(const std::vector<int>& poly, int p) {
  std::vector<int> f = poly;
  trim(f);
  const int deg = static_cast<int>(f.size()) - 1;
  if (deg < 1) return false;
  for (int dd = 1; dd <= deg / 2; ++dd) {
    const long long count = ipow(p, dd);
    for (long long code = 0; code < count; ++code) {
      if (poly_rem(f, monic_from_code(code, dd, p), p).empty()) return false;
    }
  }
  return true;
}

Field::Field(int q) {
  std::tie(p_, d_) = prime_power(q);
  q_ = q;
  // Candidates in increasing base-p code of the non-leading coefficients,
  // constant term least significant.
  const long long count = ipow(p_, d_);
  for (long long code = 0; code < count; ++code) {
    auto candidate = monic_from_code(code, d_, p_);
    if (is_irreducible(candidate, p_)) {
      modulus_ = std::move(candidate);
      break;
    }
  }
  if (modulus_.empty()) throw Error("no irreducible polynomial found");

  squares_.assign(q_, false);
  for (int i = 0; i < q_; ++i) {
    const FieldElement a = element(i);
    squares_[index(mul(a, a))] = true;
  }
}

void Field::check(const FieldElement& a) const {
  if (static_cast<int>(a.coeffs_.size()) != d_) {
    throw Error("element does not belong to GF(" + std::to_string(q_) + ")");
  }
  for (int c : a.coeffs_) {
    if (c < 0 || c >= p_) {
      throw Error("element does not belong to GF(" + std::to_string(q_) + ")");
    }
  }
}

FieldElement Field::zero() const { return FieldElement(std::vector<int>(d_, 0)); }

FieldElement Field::one() const {
  std::vector<int> c(d_, 0);
  c[0] = 1;
  return FieldElement(std::move(c));
}

FieldElement Field::element(int index) const {
  if (index < 0 || index >= q_) {
    throw Error("element index " + std::to_string(index) +
                " out of range for GF(" + std::to_string(q_) + ")");
  }
  std::vector<int> c(d_, 0);
  for (int i = 0; i < d_; ++i) {
    c[i] = index % p_;
    index /= p_;
  }
  return FieldElement(std::move(c));
}

int Field::index(const FieldElement& a) const {
  check(a);
  int idx = 0;
  for (int i = d_ - 1; i >= 0; --i) idx = idx * p_ + a.coeffs_[i];
  return idx;
}

FieldElement Field::from_coeffs(std::vector<int> coeffs) const {
  if (static_cast<int>(coeffs.size()) != d_) {
    throw Error("expected " + std::to_string(d_) + " coefficients");
  }
  for (int& c : coeffs) c = mod(c, p_);
  return FieldElement(std::move(coeffs));
}

FieldElement Field::add(const FieldElement& a, const FieldElement& b) const {
  check(a);
  check(b);
  std::vector<int> c(d_);
  for (int i = 0; i < d_; ++i) c[i] = (a.coeffs_[i] + b.coeffs_[i]) % p_;
  return FieldElement(std::move(c));
}

FieldElement Field::neg(const FieldElement& a) const {
  check(a);
  std::vector<int> c(d_);
  for (int i = 0; i < d_; ++i) c[i] = mod(-a.coeffs_[i], p_);
  return FieldElement(std::move(c));
}

FieldElement Field::sub(const FieldElement& a, const FieldElement& b) const {
  return add(a, neg(b));
}

FieldElement Field::mul(const FieldElement& a, const FieldElement& b) const {
  check(a);
  check(b);
  std::vector<int> prod(2 * d_ - 1, 0);
  for (int i = 0; i < d_; ++i) {
    for (int j = 0; j < d_; ++j) {
      prod[i + j] = (prod[i + j] + a.coeffs_[i] * b.coeffs_[j]) % p_;
    }
  }
  std::vector<int> r = poly_rem(std::move(prod), modulus_, p_);
  r.resize(d_, 0);
  return FieldElement(std::move(r));
}

FieldElement Field::pow(const FieldElement& a, long long e) const {
  if (e < 0) throw Error("negative exponent");
  FieldElement result = one();
  FieldElement base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

bool Field::is_square(const FieldElement& a) const { return squares_[index(a)]; }

int Field::sub_index(int a, int b) const {
  return index(sub(element(a), element(b)));
}

std::string Field::to_string(const FieldElement& a) const {
  check(a);
  std::string out;
  for (int i = d_ - 1; i >= 0; --i) {
    const int c = a.coeffs_[i];
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c);
    out += 'x';
    if (i > 1) out += '^' + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace signhom
