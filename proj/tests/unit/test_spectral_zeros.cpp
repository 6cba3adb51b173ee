#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "corpus.hpp"
#include "matching.hpp"
#include "hrl/spectral_zeros.hpp"

using namespace hrl;

using testing::matches_within;

TEST_CASE("level sets") {
  const auto l1 = levels(1);
  REQUIRE(l1.levels.size() == 1);
  CHECK(l1.levels[0].self_paired);
  CHECK(l1.levels[0].exact == Rational(0));

  const auto l2 = levels(2);
  REQUIRE(l2.levels.size() == 1);
  CHECK_FALSE(l2.levels[0].self_paired);
  CHECK(l2.levels[0].exact == Rational(1));

  const auto l3 = levels(3);
  REQUIRE(l3.levels.size() == 2);
  CHECK(l3.levels[0].exact == Rational(2));
  CHECK(l3.levels[1].exact == Rational(0));
  CHECK(l3.levels[1].self_paired);

  for (int n = 1; n <= 40; ++n) {
    const auto ls = levels(n);
    CHECK(static_cast<int>(ls.levels.size()) == (n + 1) / 2);
    for (const auto& lv : ls.levels) {
      const double c = 4.0 * std::pow(std::cos(std::numbers::pi * lv.k / (n + 1)), 2);
      CHECK(lv.value == doctest::Approx(c).epsilon(1e-14).scale(1.0));
      if (lv.exact) CHECK(to_double(*lv.exact) == doctest::Approx(c).scale(1.0));
    }
  }
}

TEST_CASE("level factorization is exact where all levels are rational") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 10; ++i) {
    const RecurrencePair pair = testing::random_pair(rng);
    const auto seq = generate_sequence(pair.spec(), 5);
    for (int n : {1, 2, 3, 5}) {
      RatPoly prod = RatPoly{n % 2 == 0 ? 1 : -1};
      for (const auto& lv : levels(n).levels) {
        prod *= lv.self_paired ? pair.q1() : pair.fiber(*lv.exact);
      }
      CHECK(prod == seq[static_cast<std::size_t>(n)]);
    }
  }
}

TEST_CASE("example zeros") {
  const RecurrencePair ex4(RatPoly{-5, -2, 1}, RatPoly{0, 0, 1});
  const auto z1 = zeros_via_levels(ex4, 1);
  REQUIRE(z1.roots.size() == 2);
  CHECK(z1.roots[0].real() == doctest::Approx(1 - std::sqrt(6.0)).epsilon(1e-14));
  CHECK(z1.roots[1].real() == doctest::Approx(1 + std::sqrt(6.0)).epsilon(1e-14));

  const auto z2 = zeros_via_levels(ex4, 2);
  const double expect2[] = {-1.79129, -1.19258, 2.79129, 4.19258};
  REQUIRE(z2.roots.size() == 4);
  for (int i = 0; i < 4; ++i) CHECK(std::fabs(z2.roots[static_cast<std::size_t>(i)].real() - expect2[i]) < 1e-5);

  const auto f1 = testing::even_pair();
  const auto zf = zeros_via_levels(RecurrencePair(f1.q1, f1.q2), 2);
  REQUIRE(zf.roots.size() == 4);
  // x^4 + x^2 - 5 = 0 with u = x^2: u = (-1 +- sqrt 21) / 2.
  const double re = std::sqrt((-1 + std::sqrt(21.0)) / 2), im = std::sqrt((1 + std::sqrt(21.0)) / 2);
  int real = 0, imaginary = 0;
  for (const auto& z : zf.roots) {
    if (z.imag() == 0.0) {
      ++real;
      CHECK(std::fabs(std::fabs(z.real()) - re) < 1e-12);
    } else {
      ++imaginary;
      CHECK(std::fabs(z.real()) < 1e-12);
      CHECK(std::fabs(std::fabs(z.imag()) - im) < 1e-12);
    }
  }
  CHECK(real == 2);
  CHECK(imaginary == 2);
}

TEST_CASE("levels agree with the expanded polynomial") {
  std::mt19937_64 rng(47);
  for (int i = 0; i < 20; ++i) {
    const RecurrencePair pair = testing::random_pair(rng);
    for (int n = 1; n <= 8; ++n) {
      const auto lv = zeros_via_levels(pair, n);
      const auto ex = zeros_via_expansion(pair, n);
      CHECK(lv.converged);
      INFO("q1 = " << to_string(pair.q1()) << ", q2 = " << to_string(pair.q2()) << ", n = " << n);
      CHECK(matches_within(lv.roots, ex.roots, 1e-7));
    }
  }
}

TEST_CASE("zeros of P_n never meet zeros of Q2") {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 20; ++i) {
    const RecurrencePair pair = testing::random_pair(rng);
    const auto seq = generate_sequence(pair.spec(), 12);
    for (const auto& p : seq) {
      if (pair.q2().degree() >= 1) CHECK(gcd(p, pair.q2()).degree() == 0);
    }
  }
}

TEST_CASE("degree bookkeeping with roots at infinity") {
  // deg Q1^2 = deg Q2 and Q1^2 - c Q2 loses its top term at c = 1.
  const RecurrencePair pair(RatPoly{1, 1}, RatPoly{2, 0, 1});
  const auto z = zeros_via_levels(pair, 2);
  CHECK(z.roots_at_infinity >= 1);
  const auto seq = generate_sequence(pair.spec(), 2);
  CHECK(static_cast<int>(z.roots.size()) == seq[2].degree());
}
