#include "hrl/rational.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <utility>

#include "hrl/error.hpp"

namespace hrl {

Rational make_rational(long num, long den) {
  if (den == 0) throw InvalidInput("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational rational_from_double(double v) {
  if (!std::isfinite(v)) throw InvalidInput("non-finite double has no rational value");
  Rational q;
  mpq_set_d(q.get_mpq_t(), v);
  return q;
}

Rational rational_from_long_double(long double v) {
  if (!std::isfinite(v)) throw InvalidInput("non-finite long double has no rational value");
  if (v == 0.0L) return Rational(0);
  int exp = 0;
  long double frac = std::frexp(std::fabs(v), &exp);
  // 64 mantissa bits fit an unsigned 64-bit integer exactly.
  auto mant = static_cast<std::uint64_t>(std::ldexp(frac, 64));
  Integer m;
  mpz_import(m.get_mpz_t(), 1, 1, sizeof(mant), 0, 0, &mant);
  Rational q(m);
  int shift = exp - 64;
  if (shift > 0) {
    q *= Rational(Integer(1) << static_cast<mp_bitcnt_t>(shift));
  } else if (shift < 0) {
    q /= Rational(Integer(1) << static_cast<mp_bitcnt_t>(-shift));
  }
  return v < 0 ? Rational(-q) : q;
}

namespace {

// |q| rounded to `bits` significant bits, half to even: mantissa * 2^exp.
std::pair<Integer, long> round_to_bits(const Rational& q, long bits) {
  const Integer num = abs(q.get_num());
  const Integer& den = q.get_den();
  // Quotient with bits + 2 or more significant bits; the remainder is sticky.
  const long shift = bits + 2 - (static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2)) -
                                 static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2)));
  Integer n2 = num, d2 = den;
  if (shift >= 0) {
    n2 <<= static_cast<mp_bitcnt_t>(shift);
  } else {
    d2 <<= static_cast<mp_bitcnt_t>(-shift);
  }
  Integer quo, rem;
  mpz_fdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), n2.get_mpz_t(), d2.get_mpz_t());
  const long drop = static_cast<long>(mpz_sizeinbase(quo.get_mpz_t(), 2)) - bits;
  Integer mant = quo >> static_cast<mp_bitcnt_t>(drop);
  const Integer tail = quo - (mant << static_cast<mp_bitcnt_t>(drop));
  const Integer half = Integer(1) << static_cast<mp_bitcnt_t>(drop - 1);
  const int c = cmp(tail, half);
  if (c > 0 || (c == 0 && sgn(rem) != 0) || (c == 0 && mpz_odd_p(mant.get_mpz_t()))) ++mant;
  return {mant, drop - shift};
}

}  // namespace

double to_double(const Rational& q) {
  if (sgn(q) == 0) return 0.0;
  const auto [mant, exp] = round_to_bits(q, 53);
  const double v = std::ldexp(mant.get_d(), static_cast<int>(std::clamp(exp, -100000L, 100000L)));
  return sgn(q) < 0 ? -v : v;
}

long double to_long_double(const Rational& q) {
  if (sgn(q) == 0) return 0.0L;
  const auto [mant, exp] = round_to_bits(q, 64);
  const Integer hi = mant >> 32;
  const Integer lo = mant - (hi << 32);
  const long double m = std::ldexp(static_cast<long double>(mpz_get_ui(hi.get_mpz_t())), 32) +
                        static_cast<long double>(mpz_get_ui(lo.get_mpz_t()));
  const long double v = std::ldexp(m, static_cast<int>(std::clamp(exp, -100000L, 100000L)));
  return sgn(q) < 0 ? -v : v;
}

double log2_abs(const Rational& q) {
  long en = 0, ed = 0;
  double mn = mpz_get_d_2exp(&en, q.get_num_mpz_t());
  double md = mpz_get_d_2exp(&ed, q.get_den_mpz_t());
  return std::log2(std::fabs(mn)) - std::log2(std::fabs(md)) + static_cast<double>(en - ed);
}

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::optional<Rational> parse_rational(const std::string& text) {
  if (text.empty()) return std::nullopt;
  Rational q;
  if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0) return std::nullopt;
  if (sgn(q.get_den()) == 0) return std::nullopt;
  q.canonicalize();
  return q;
}

namespace {

// Simplest rational in the open interval (lo, hi) with 0 <= lo.
Rational simplest_nonneg(const Rational& lo, const std::optional<Rational>& hi) {
  Integer n = floor(lo);
  Rational next(n + 1);
  if (!hi || next < *hi) return next;
  // (lo, hi) lies inside [n, n+1]; recurse on the reciprocal of the
  // fractional parts.
  Rational flo = lo - Rational(n);
  Rational fhi = *hi - Rational(n);
  std::optional<Rational> inv_hi;
  if (sgn(flo) != 0) inv_hi = 1 / flo;
  Rational inner = simplest_nonneg(1 / fhi, inv_hi);
  return Rational(n) + 1 / inner;
}

}  // namespace

Rational simplest_between(const Rational& lo, const std::optional<Rational>& hi) {
  if (hi && !(lo < *hi)) throw InvalidInput("simplest_between needs lo < hi");
  if (sgn(lo) < 0) {
    if (!hi || sgn(*hi) > 0) return Rational(0);
    std::optional<Rational> neg_hi = Rational(-lo);
    return -simplest_nonneg(-*hi, neg_hi);
  }
  return simplest_nonneg(lo, hi);
}

}  // namespace hrl
