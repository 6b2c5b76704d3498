#pragma once

// Shared generators for the property tests. Every generator is driven by an
// explicitly seeded engine so failures reproduce.

#include <cstdint>
#include <random>
#include <vector>

#include "spq/classify.hpp"

namespace spq::testing {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline std::vector<std::int64_t> random_vector(Rng& rng, int p, std::size_t len, int lo = 0) {
  std::vector<std::int64_t> v(len);
  for (auto& x : v) x = uniform(rng, lo, p - 1);
  return v;
}

inline Mat2 random_invertible(Rng& rng, Prime p) {
  for (;;) {
    Mat2 m(p, uniform(rng, 0, p - 1), uniform(rng, 0, p - 1), uniform(rng, 0, p - 1), uniform(rng, 0, p - 1));
    if (m.invertible()) return m;
  }
}

inline Mat2 random_det_pm1(Rng& rng, Prime p) {
  for (;;) {
    const Mat2 m = random_invertible(rng, p);
    const int d = m.det().value();
    if (d == 1 || d == p - 1) return m;
  }
}

inline HomogeneousForm random_form(Rng& rng, Prime p, int degree) {
  return HomogeneousForm(p, random_vector(rng, p, static_cast<std::size_t>(degree) + 1));
}

/// Uniform over validated free spaces (rejection sampling).
inline RotationData random_free_space(Rng& rng, Prime p, int n) {
  for (;;) {
    RawRotationData raw{p, n, random_vector(rng, p, 2 * static_cast<std::size_t>(n)),
                        random_vector(rng, p, 2 * static_cast<std::size_t>(n))};
    try {
      RotationData data = validate(raw);
      if (is_free(data).free) return data;
    } catch (const InvalidSpan&) {
    }
  }
}

inline RotationData lens_product(Prime p, std::int64_t r1, std::int64_t r2) {
  const std::vector<std::int64_t> first{1, r1}, second{1, r2};
  return product_of_lens_spaces(p, first, second);
}

}  // namespace spq::testing
