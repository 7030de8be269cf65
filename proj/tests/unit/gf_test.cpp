#include "signhom/gf.hpp"

#include <set>

#include <gtest/gtest.h>

namespace signhom {
namespace {

TEST(PrimePower, FactorsOrRejects) {
  EXPECT_EQ(prime_power(9), std::make_pair(3, 2));
  EXPECT_EQ(prime_power(13), std::make_pair(13, 1));
  EXPECT_EQ(prime_power(32), std::make_pair(2, 5));
  EXPECT_THROW(prime_power(12), Error);
  EXPECT_THROW(prime_power(1), Error);
  EXPECT_THROW(prime_power(0), Error);
}

// Oracle: a degree-2 or 3 polynomial is irreducible iff it has no root.
TEST(Irreducible, LowDegreeMatchesRootTest) {
  for (int p : {2, 3, 5}) {
    for (int a = 0; a < p; ++a) {
      for (int b = 0; b < p; ++b) {
        for (int c = 0; c < p; ++c) {
          const std::vector<int> cubic{a, b, c, 1};
          bool root = false;
          for (int x = 0; x < p; ++x) {
            root = root || (a + b * x + c * x * x + x * x * x) % p == 0;
          }
          EXPECT_EQ(is_irreducible(cubic, p), !root);
        }
        const std::vector<int> quad{a, b, 1};
        bool root = false;
        for (int x = 0; x < p; ++x) root = root || (a + b * x + x * x) % p == 0;
        EXPECT_EQ(is_irreducible(quad, p), !root);
      }
    }
  }
}

TEST(Irreducible, QuarticProductOfQuadraticsIsReducible) {
  // (x^2+x+1)^2 = x^4 + 2x^3 + 3x^2 + 2x + 1 has no root over GF(2).
  EXPECT_FALSE(is_irreducible({1, 0, 1, 0, 1}, 2));
  EXPECT_TRUE(is_irreducible({1, 1, 0, 0, 1}, 2));  // x^4 + x + 1
}

class FieldAxioms : public ::testing::TestWithParam<int> {};

TEST_P(FieldAxioms, HoldExhaustively) {
  const Field f(GetParam());
  const int q = f.order();
  for (int a = 0; a < q; ++a) {
    const auto ea = f.element(a);
    EXPECT_EQ(f.index(ea), a);
    EXPECT_EQ(f.add(ea, f.zero()), ea);
    EXPECT_EQ(f.mul(ea, f.one()), ea);
    EXPECT_EQ(f.add(ea, f.neg(ea)), f.zero());
    if (a != 0) EXPECT_EQ(f.pow(ea, q - 1), f.one());  // Lagrange
    for (int b = 0; b < q; ++b) {
      const auto eb = f.element(b);
      EXPECT_EQ(f.add(ea, eb), f.add(eb, ea));
      EXPECT_EQ(f.mul(ea, eb), f.mul(eb, ea));
      EXPECT_EQ(f.sub(f.add(ea, eb), eb), ea);
      EXPECT_EQ(f.index(f.sub(ea, eb)), f.sub_index(a, b));
      if (a != 0 && b != 0) EXPECT_NE(f.mul(ea, eb), f.zero());
      for (int c = 0; c < q; c += 3) {
        const auto ec = f.element(c);
        EXPECT_EQ(f.mul(ea, f.add(eb, ec)), f.add(f.mul(ea, eb), f.mul(ea, ec)));
        EXPECT_EQ(f.mul(f.mul(ea, eb), ec), f.mul(ea, f.mul(eb, ec)));
      }
    }
  }
}

// Squares computed by enumerating x*x must match the field's predicate.
TEST_P(FieldAxioms, SquaresMatchEnumeration) {
  const Field f(GetParam());
  std::set<int> squares;
  for (int a = 1; a < f.order(); ++a) squares.insert(f.index(f.mul(f.element(a), f.element(a))));
  for (int a = 1; a < f.order(); ++a) {
    EXPECT_EQ(f.is_square(f.element(a)), squares.count(a) == 1) << a;
    EXPECT_EQ(f.is_square_index(a), squares.count(a) == 1) << a;
  }
  if (f.characteristic() != 2) {
    EXPECT_EQ(squares.size(), static_cast<std::size_t>((f.order() - 1) / 2));
  }
}

INSTANTIATE_TEST_SUITE_P(SmallFields, FieldAxioms,
                         ::testing::Values(2, 3, 4, 5, 8, 9, 13, 25, 27, 49));

TEST(Field, Gf9Conventions) {
  const Field f(9);
  EXPECT_EQ(f.modulus(), (std::vector<int>{1, 0, 1}));  // x^2 + 1
  const std::vector<std::string> names{"0", "1", "2", "x", "x+1", "x+2", "2x", "2x+1", "2x+2"};
  for (int i = 0; i < 9; ++i) EXPECT_EQ(f.to_string(i), names[i]);
  std::set<std::string> squares;
  for (int i = 1; i < 9; ++i) {
    if (f.is_square_index(i)) squares.insert(names[i]);
  }
  EXPECT_EQ(squares, (std::set<std::string>{"1", "2", "x", "2x"}));
}

TEST(Field, ModulusIsSmallestIrreducible) {
  // Over GF(2), x^3 + x + 1 precedes x^3 + x^2 + 1 in constant-first order.
  EXPECT_EQ(Field(8).modulus(), (std::vector<int>{1, 1, 0, 1}));
  EXPECT_EQ(Field(25).modulus(), (std::vector<int>{2, 0, 1}));  // x^2 + 2
  EXPECT_EQ(Field(4).to_string(3), "x+1");
  EXPECT_EQ(Field(27).to_string(9), "x^2");
}

TEST(Field, RejectsForeignElements) {
  const Field f9(9);
  const Field f3(3);
  EXPECT_THROW(f9.add(f9.one(), f3.one()), Error);
  EXPECT_THROW(f9.element(9), Error);
  EXPECT_THROW(f9.from_coeffs({1}), Error);
  EXPECT_EQ(f9.index(f9.from_coeffs({4, -1})), f9.index(f9.from_coeffs({1, 2})));
}

}  // namespace
}  // namespace signhom
