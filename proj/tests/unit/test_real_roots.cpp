#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "corpus.hpp"
#include "hrl/error.hpp"
#include "hrl/numeric_roots.hpp"
#include "hrl/real_roots.hpp"

using namespace hrl;

namespace {

// Interval Horner enclosure of p over [lo, hi]; an independent sign oracle.
std::pair<Rational, Rational> enclose(const RatPoly& p, const Rational& lo, const Rational& hi) {
  Rational a(0), b(0);
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    const Rational c[4] = {a * lo, a * hi, b * lo, b * hi};
    a = *std::min_element(c, c + 4) + *it;
    b = *std::max_element(c, c + 4) + *it;
  }
  return {a, b};
}

int count_real_numeric(const RatPoly& p) {
  int n = 0;
  for (const auto& z : all_complex_roots(p).roots) n += z.imag() == 0.0;
  return n;
}

}  // namespace

TEST_CASE("Sturm counts") {
  CHECK(SturmSequence(RatPoly{1, 0, 1}).count_all() == 0);
  CHECK(SturmSequence(RatPoly{4, 0, -16, -4, 1}).count_all() == 4);
  CHECK(SturmSequence(RatPoly{-5, 0, 1, 0, 1}).count_all() == 2);
  CHECK(count_real_numeric(RatPoly{-5, 0, 1, 0, 1}) == 2);
  const SturmSequence s(RatPoly{-5, 0, 1});
  CHECK(s.count(Rational(0), Rational(3)) == 1);
  CHECK(s.count(Rational(-3), Rational(3)) == 2);
  // Half-open (lo, hi]: a root at hi counts, a root at lo does not.
  const SturmSequence t(RatPoly{-1, 0, 1});
  CHECK(t.count(Rational(-1), Rational(1)) == 1);
  CHECK_THROWS_AS(SturmSequence(RatPoly{1, -2, 1}), ContractViolation);
}

TEST_CASE("Sturm counts agree with numeric roots on random squarefree input") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 80; ++i) {
    const RatPoly p = squarefree_part(testing::random_poly(rng, 1 + i % 8, 9));
    CHECK(SturmSequence(p).count_all() == count_real_numeric(p));
  }
}

TEST_CASE("isolation") {
  const auto r = isolate_real_roots(RatPoly{-5, 0, 1});
  REQUIRE(r.size() == 2);
  CHECK(r[0].hi() <= r[1].lo());
  CHECK(std::fabs(r[0].to_double() + std::sqrt(5.0)) < 1e-15);
  CHECK(std::fabs(r[1].to_double() - std::sqrt(5.0)) < 1e-15);
  for (const auto& a : r) CHECK(sgn(RatPoly{-5, 0, 1}(a.lo())) != sgn(RatPoly{-5, 0, 1}(a.hi())));

  const auto q1 = isolate_real_roots(RatPoly{0, 2, -1});
  REQUIRE(q1.size() == 2);
  CHECK(compare(q1[0], Rational(0)) == 0);
  CHECK(compare(q1[1], Rational(2)) == 0);
  CHECK(isolate_real_roots(RatPoly{1, 0, 1}).empty());
  // Repeated roots are reported once.
  CHECK(isolate_real_roots(RatPoly{100, -40, 4}).size() == 1);
}

TEST_CASE("to_double is correctly rounded") {
  const auto r = isolate_real_roots(RatPoly{-5, 0, 1});
  CHECK(r[1].to_double() == std::sqrt(5.0));
  const auto c = isolate_real_roots(RatPoly{-2, 0, 0, 1});
  CHECK(c[0].to_double() == std::cbrt(2.0));
}

TEST_CASE("exact sign at algebraic numbers") {
  const AlgebraicNumber zero = isolate_real_roots(RatPoly{0, 2, -1})[0];
  CHECK(sign_at(RatPoly{-1, 0, 5}, zero) == -1);
  const AlgebraicNumber one = isolate_real_roots(RatPoly{6, -8, 2})[0];
  CHECK(sign_at(RatPoly{-16, -14, 21, -8, 1}, one) == -1);
  CHECK(RatPoly{-16, -14, 21, -8, 1}(one.lo()) == Rational(-16));
  const AlgebraicNumber root5 = isolate_real_roots(RatPoly{-5, 0, 1})[1];
  CHECK(sign_at(RatPoly{0, 0, 1}, root5) == 1);
  CHECK(sign_at(RatPoly{-5, 0, 1}, root5) == 0);
  // x^4-4x^3-10x^2+20x+25 vanishes at sqrt 5 although the defining poly differs.
  CHECK(sign_at(RatPoly{25, 20, -10, -4, 1}, root5) == 0);
}

TEST_CASE("sign_at agrees with an interval-arithmetic oracle") {
  std::mt19937_64 rng(23);
  const Rational width(Integer(1), Integer(1) << 100);
  for (int i = 0; i < 60; ++i) {
    const RatPoly def = testing::random_poly(rng, 2 + i % 4, 7);
    const RatPoly p = testing::random_poly(rng, 1 + i % 5, 7);
    for (const auto& a : isolate_real_roots(def)) {
      const int s = sign_at(p, a);
      if (s == 0) {
        CHECK(gcd(p, def).degree() >= 1);
        continue;
      }
      const AlgebraicNumber fine = a.refine_to(width);
      const auto [lo, hi] = enclose(p, fine.lo(), fine.hi());
      if (sgn(lo) > 0) CHECK(s == 1);
      if (sgn(hi) < 0) CHECK(s == -1);
    }
  }
}

TEST_CASE("ordering of algebraic numbers") {
  const auto a = isolate_real_roots(RatPoly{-5, 0, 1});
  const auto b = isolate_real_roots(RatPoly{-5, -4, 1});  // -1 and 5
  CHECK(compare(a[0], b[0]) < 0);
  CHECK(compare(b[0], a[1]) < 0);
  CHECK(compare(a[1], b[1]) < 0);
  CHECK(compare(a[1], a[1]) == 0);
  const AlgebraicNumber same(RatPoly{25, 20, -10, -4, 1}, Rational(2), Rational(9, 4));
  CHECK(compare(same, a[1]) == 0);
}

TEST_CASE("reduce_defining finds small rational factors") {
  const RatPoly d{25, 20, -10, -4, 1};  // (x^2-4x-5)(x^2-5)
  const auto roots = isolate_real_roots(d);
  REQUIRE(roots.size() == 4);
  std::vector<AlgebraicNumber> reduced;
  for (const auto& r : roots) reduced.push_back(reduce_defining(r));
  CHECK(reduced[0].defining() == RatPoly{-5, 0, 1});
  CHECK(reduced[1].is_rational());
  CHECK(reduced[1].lo() == Rational(-1));
  CHECK(reduced[2].defining() == RatPoly{-5, 0, 1});
  CHECK(reduced[3].lo() == Rational(5));
  for (std::size_t i = 0; i < 4; ++i) CHECK(compare(reduced[i], roots[i]) == 0);
  // An irreducible defining polynomial stays.
  const auto c = reduce_defining(isolate_real_roots(RatPoly{-2, 0, 0, 1})[0]);
  CHECK(c.defining() == RatPoly{-2, 0, 0, 1});
}

TEST_CASE("invalid algebraic numbers are rejected") {
  CHECK_THROWS(AlgebraicNumber(RatPoly{-5, 0, 1}, Rational(-3), Rational(3)));
  CHECK_THROWS(AlgebraicNumber(RatPoly{-5, 0, 1}, Rational(3), Rational(4)));
}
