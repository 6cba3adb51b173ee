#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hrl/error.hpp"
#include "hrl/recurrence.hpp"

namespace hrl::testing {

struct NamedPair {
  std::string name;
  RatPoly q1, q2;
};

inline std::vector<NamedPair> example_pairs() {
  return {
      {"example1", RatPoly{0, 2, -1}, RatPoly{-1, 0, 5}},
      {"example2", RatPoly{6, -8, 2}, RatPoly{-21, -43, 37, -5}},
      {"example3", RatPoly{6, -8, 2}, RatPoly{-16, -14, 21, -8, 1}},
      {"example4", RatPoly{-5, -2, 1}, RatPoly{0, 0, 1}},
  };
}

inline NamedPair even_pair() { return {"even", RatPoly{1, 0, 1}, RatPoly{6, 0, 1}}; }
inline NamedPair crossing_pair() { return {"crossing", RatPoly{3, 5, 1}, RatPoly{-1, 0, 5}}; }

/// Random integer polynomial of exact degree `deg` with coefficients in
/// [-bound, bound].
inline RatPoly random_poly(std::mt19937_64& rng, int deg, int bound) {
  std::uniform_int_distribution<int> coef(-bound, bound);
  std::vector<Rational> c(static_cast<std::size_t>(deg + 1));
  for (auto& v : c) v = coef(rng);
  while (sgn(c.back()) == 0) c.back() = coef(rng);
  return RatPoly(std::move(c));
}

/// A pair the criterion accepts: deg Q1 in [1, max_deg], deg Q2 in
/// [0, max_deg], coefficients in [-bound, bound], redrawn until valid.
inline RecurrencePair random_pair(std::mt19937_64& rng, int max_deg = 3, int bound = 6) {
  std::uniform_int_distribution<int> d1(1, max_deg), d2(0, max_deg);
  while (true) {
    try {
      return RecurrencePair(random_poly(rng, d1(rng), bound), random_poly(rng, d2(rng), bound));
    } catch (const ValidationError&) {
    }
  }
}

/// The fixed 100-pair corpus used by the end-to-end reality checks.
inline std::vector<RecurrencePair> reality_corpus(std::size_t count = 100) {
  std::mt19937_64 rng(20240611);
  std::vector<RecurrencePair> out;
  while (out.size() < count) out.push_back(random_pair(rng));
  return out;
}

}  // namespace hrl::testing
