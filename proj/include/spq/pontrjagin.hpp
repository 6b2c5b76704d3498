#pragma once

#include <cstdint>
#include <map>
#include <span>

#include "spq/cohomology.hpp"

namespace spq {

/// prod over all 2n coordinates of (1 + (R_k a + Q_k b)^2), truncated at
/// cohomological degree 4n - 2 but not reduced modulo the k-invariant ideal.
TotalClass unreduced_total_pontrjagin(const RotationData& data);

/// Total Pontrjagin class of L(p,p; R, Q) in the quotient model, each graded
/// piece reduced to its canonical representative.
/// Throws DomainError if `model` was not built from k_invariant(data).
TotalClass total_pontrjagin(const RotationData& data, const CohomRingModel& model);

/// Total class of a lens space L(p; r_1..r_n) in GF(p)[a]/(a^n).
struct LensTotalClass {
  int p = 0;
  int n = 0;
  /// Cohomological degree 4k -> coefficient of a^{2k}; only 2k < n is kept.
  std::map<int, int> components;

  bool is_trivial() const;
  friend bool operator==(const LensTotalClass&, const LensTotalClass&) = default;
};

/// prod_i (1 + (r_i a)^2) truncated by a^n = 0. Throws InvalidRotation on a
/// zero rotation number.
LensTotalClass lens_total_pontrjagin(Prime p, std::span<const std::int64_t> rotations);

}  // namespace spq
