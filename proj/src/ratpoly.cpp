#include "hrl/ratpoly.hpp"

#include <algorithm>

#include "hrl/error.hpp"

namespace hrl {

RatPoly::RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RatPoly::RatPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

RatPoly RatPoly::constant(const Rational& c) { return RatPoly(std::vector<Rational>{c}); }

RatPoly RatPoly::monomial(const Rational& c, int power) {
  if (power < 0) throw InvalidInput("negative monomial power");
  std::vector<Rational> cs(static_cast<std::size_t>(power) + 1);
  cs.back() = c;
  return RatPoly(std::move(cs));
}

void RatPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational RatPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

Rational RatPoly::leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

RatPoly RatPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return RatPoly(std::move(d));
}

RatPoly RatPoly::monic() const {
  if (is_zero()) return {};
  RatPoly r = *this;
  Rational inv = 1 / leading();
  for (auto& c : r.coeffs_) c *= inv;
  return r;
}

Rational RatPoly::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

std::complex<double> RatPoly::operator()(std::complex<double> z) const {
  std::complex<double> acc(0.0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + it->get_d();
  return acc;
}

std::complex<long double> RatPoly::eval(std::complex<long double> z) const {
  std::complex<long double> acc(0.0L);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + to_long_double(*it);
  return acc;
}

RatPoly RatPoly::operator-() const {
  RatPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

RatPoly& RatPoly::operator+=(const RatPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return RatPoly(std::move(out));
}

RatPoly& RatPoly::operator*=(const RatPoly& other) { return *this = *this * other; }

RatPoly& RatPoly::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

std::vector<double> RatPoly::to_doubles() const {
  std::vector<double> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.get_d());
  return out;
}

std::vector<long double> RatPoly::to_long_doubles() const {
  std::vector<long double> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(to_long_double(c));
  return out;
}

RatPoly pow(const RatPoly& p, unsigned n) {
  RatPoly result = RatPoly::constant(Rational(1));
  RatPoly base = p;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw InvalidInput("polynomial division by zero");
  if (a.degree() < b.degree()) return {RatPoly{}, a};
  std::vector<Rational> rem = a.coeffs();
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const auto& bc = b.coeffs();
  const Rational inv_lead = 1 / b.leading();
  const std::size_t db = bc.size() - 1;
  for (std::size_t k = quo.size(); k-- > 0;) {
    Rational q = rem[k + db] * inv_lead;
    if (sgn(q) == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q * bc[j];
    quo[k] = q;
  }
  rem.resize(db);
  return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

RatPoly divide_exact(const RatPoly& a, const RatPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw ContractViolation("divide_exact: divisor does not divide dividend");
  return q;
}

Rational content(const RatPoly& p) {
  if (p.is_zero()) return Rational(0);
  Integer num_gcd(0), den_lcm(1);
  for (const auto& c : p.coeffs()) {
    if (sgn(c) == 0) continue;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational out(num_gcd, den_lcm);
  out.canonicalize();
  return out;
}

RatPoly primitive_part(const RatPoly& p) {
  if (p.is_zero()) return {};
  return p * (1 / content(p));
}

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() && b.is_zero()) throw InvalidInput("gcd of two zero polynomials");
  RatPoly x = primitive_part(a);
  RatPoly y = primitive_part(b);
  while (!y.is_zero()) {
    RatPoly r = divmod(x, y).second;
    x = std::move(y);
    y = primitive_part(r);
  }
  return x.monic();
}

RatPoly squarefree_part(const RatPoly& p) {
  if (p.is_zero()) throw InvalidInput("squarefree_part of the zero polynomial");
  if (p.degree() == 0) return RatPoly::constant(Rational(1));
  return divide_exact(p, gcd(p, p.derivative())).monic();
}

bool is_squarefree(const RatPoly& p) {
  if (p.is_zero()) throw InvalidInput("is_squarefree of the zero polynomial");
  if (p.degree() == 0) return true;
  return gcd(p, p.derivative()).degree() == 0;
}

std::vector<RatPoly> squarefree_factorization(const RatPoly& p) {
  if (p.is_zero()) throw InvalidInput("squarefree_factorization of the zero polynomial");
  std::vector<RatPoly> factors;
  if (p.degree() == 0) return factors;
  const RatPoly dp = p.derivative();
  const RatPoly a0 = gcd(p, dp);
  RatPoly b = divide_exact(p, a0);
  RatPoly d = divide_exact(dp, a0) - b.derivative();
  while (b.degree() > 0) {
    RatPoly a = gcd(b, d);
    factors.push_back(a);
    b = divide_exact(b, a);
    d = divide_exact(d, a) - b.derivative();
  }
  while (!factors.empty() && factors.back().degree() == 0) factors.pop_back();
  return factors;
}

RatPoly wronskian(const RatPoly& p, const RatPoly& q) { return p.derivative() * q - q.derivative() * p; }

RatPoly discriminant_char(const RatPoly& q1, const RatPoly& q2) {
  return q1 * q1 - Rational(4) * q2;
}

std::string to_string(const RatPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    const Rational& c = p.coeffs()[static_cast<std::size_t>(k)];
    if (sgn(c) == 0) continue;
    if (sgn(c) < 0) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    Rational mag = abs(c);
    if (k == 0 || mag != 1) out += to_string(mag);
    if (k >= 1) out += 'x';
    if (k >= 2) out += '^' + std::to_string(k);
  }
  return out;
}

Rational cauchy_bound(const RatPoly& p) {
  if (p.degree() < 1) throw InvalidInput("cauchy_bound needs degree >= 1");
  Rational best(0);
  const Rational lead = abs(p.leading());
  for (int i = 0; i < p.degree(); ++i) {
    Rational r = abs(p.coeff(i)) / lead;
    if (r > best) best = r;
  }
  return best + 1;
}

}  // namespace hrl
