#include <gtest/gtest.h>

#include <random>

#include "nsd/error.hpp"
#include "nsd/quasi_poly.hpp"
#include "oracles.hpp"

using nsd::Polynomial;
using nsd::QuasiPoly;
using nsd::Rational;
using nsd::Relation;

namespace {

QuasiPoly random_quasi_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> period(1, 4), len(0, 5), coeff(-6, 6), deg(0, 2);
  std::vector<std::int64_t> prefix(len(rng));
  for (auto& v : prefix) v = coeff(rng);
  std::vector<Polynomial> tail;
  const int p = period(rng);
  for (int r = 0; r < p; ++r) {
    std::vector<Rational> c;
    for (int d = 0, k = deg(rng); d <= k; ++d) c.emplace_back(coeff(rng));
    tail.emplace_back(c);
  }
  return QuasiPoly::make(prefix, tail);
}

}  // namespace

TEST(QuasiPoly, FloorDivMatchesDirectComputation) {
  const auto h = QuasiPoly::floor_div(2);
  EXPECT_EQ(h.period(), 2u);
  for (std::uint64_t n = 0; n <= 100; ++n) EXPECT_EQ(h.at(n), static_cast<std::int64_t>(n / 2));
  const auto m = QuasiPoly::mod(3);
  for (std::uint64_t n = 0; n <= 100; ++n) EXPECT_EQ(m.at(n), static_cast<std::int64_t>(n % 3));
}

TEST(QuasiPoly, RejectsNonIntegralTail) {
  try {
    QuasiPoly::make({}, {Polynomial{Rational(0), Rational(1, 2)}});
    FAIL();
  } catch (const nsd::Error& e) {
    EXPECT_EQ(e.code(), nsd::ErrorCode::NonIntegralTail);
  }
  // n/2 is integral on the even class.
  EXPECT_NO_THROW(QuasiPoly::make({}, {Polynomial{Rational(0), Rational(1, 2)}, Polynomial{Rational(0), Rational(1, 2)} +
                                                                                    Polynomial::constant(Rational(-1, 2))}));
}

TEST(QuasiPoly, EqualityIsCanonical) {
  const auto n = QuasiPoly::identity();
  const auto wobble = n + QuasiPoly::mod(2) - QuasiPoly::mod(2);
  EXPECT_EQ(wobble, n);
  EXPECT_EQ(QuasiPoly::floor_div(2) + QuasiPoly::floor_div(2) + QuasiPoly::mod(2), n);
}

TEST(QuasiPoly, CompareExamples) {
  const auto n = QuasiPoly::identity();
  EXPECT_EQ(compare(Relation::Le, n, QuasiPoly::constant(5)), nsd::IndexSet::finite({0, 1, 2, 3, 4, 5}));
  EXPECT_EQ(compare(Relation::Eq, n, n), nsd::IndexSet::all());
  EXPECT_EQ(compare(Relation::Eq, n, QuasiPoly::affine(2, 0)), nsd::IndexSet::finite({0}));
}

TEST(QuasiPoly, SelectMinMaxMonus) {
  const auto n = QuasiPoly::identity();
  const auto five = QuasiPoly::constant(5);
  const auto lo = min(n, five), hi = max(n, five), m = monus(five, n), d = abs_diff(n, five);
  for (std::uint64_t k = 0; k < 30; ++k) {
    const auto i = static_cast<std::int64_t>(k);
    EXPECT_EQ(lo.at(k), std::min<std::int64_t>(i, 5));
    EXPECT_EQ(hi.at(k), std::max<std::int64_t>(i, 5));
    EXPECT_EQ(m.at(k), std::max<std::int64_t>(5 - i, 0));
    EXPECT_EQ(d.at(k), std::abs(i - 5));
  }
}

TEST(QuasiPoly, WithPrefixOverridesOnlyThePrefix) {
  const auto s = with_prefix(QuasiPoly::identity(), 3, {7, 7, 7});
  EXPECT_EQ(s.at(0), 7);
  EXPECT_EQ(s.at(2), 7);
  EXPECT_EQ(s.at(3), 3);
  EXPECT_EQ(s.at(50), 50);
}

TEST(QuasiPolyProperty, ArithmeticIsPointwise) {
  std::mt19937 rng(1234);
  for (int i = 0; i < 300; ++i) {
    const auto a = random_quasi_poly(rng), b = random_quasi_poly(rng);
    const auto sum = a + b, diff = a - b, prod = a * b;
    for (std::uint64_t n = 0; n <= 200; ++n) {
      ASSERT_EQ(sum.at(n), a.at(n) + b.at(n));
      ASSERT_EQ(diff.at(n), a.at(n) - b.at(n));
      ASSERT_EQ(prod.at(n), a.at(n) * b.at(n));
    }
  }
}

TEST(QuasiPolyProperty, CompareIsExact) {
  std::mt19937 rng(4321);
  const Relation rels[] = {Relation::Le, Relation::Lt, Relation::Eq, Relation::Ne, Relation::Ge, Relation::Gt};
  for (int i = 0; i < 300; ++i) {
    const auto a = random_quasi_poly(rng), b = random_quasi_poly(rng);
    for (Relation rel : rels) {
      const auto s = compare(rel, a, b);
      // Beyond the set's own threshold the periodic rule must keep holding.
      const std::uint64_t limit = s.threshold() + 12 * s.period() + 300;
      ASSERT_TRUE(nsd::oracle::agrees(
          s,
          [&](std::uint64_t n) {
            const auto x = a.at(n), y = b.at(n);
            switch (rel) {
              case Relation::Le: return x <= y;
              case Relation::Lt: return x < y;
              case Relation::Eq: return x == y;
              case Relation::Ne: return x != y;
              case Relation::Ge: return x >= y;
              case Relation::Gt: return x > y;
            }
            return false;
          },
          limit))
          << a.to_string() << " vs " << b.to_string();
    }
  }
}
