#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "spq/fp.hpp"

namespace spq {

/// Unvalidated rotation data as it arrives from input; entries may be
/// unreduced or negative.
struct RawRotationData {
  std::int64_t p = 0;
  std::int64_t n = 0;
  std::vector<std::int64_t> R;
  std::vector<std::int64_t> Q;
};

/// Rotation numbers of a standard linear (Z/p)^2 action on
/// S^{2n-1} x S^{2n-1}:
///   R = (r_1..r_n, r'_1..r'_n),  Q = (q_1..q_n, q'_1..q'_n).
/// Coordinate k < n belongs to the first sphere, k >= n to the second. The
/// generator (1,0) rotates the k-th complex coordinate by 2 pi R_k / p and
/// (0,1) by 2 pi Q_k / p.
///
/// Only obtainable through validate(), so every instance satisfies n >= 2,
/// reduced entries and rank [R; Q] = 2.
class RotationData {
 public:
  Prime prime() const { return p_; }
  int n() const { return n_; }

  const std::vector<int>& R() const { return r_; }
  const std::vector<int>& Q() const { return q_; }
  Fp R_at(std::size_t k) const { return Fp::raw(r_[k], p_); }
  Fp Q_at(std::size_t k) const { return Fp::raw(q_[k], p_); }

  /// The rotation class coefficients (R_k, Q_k) of coordinate k in [0, 2n).
  std::pair<int, int> rotation_pair(std::size_t k) const { return {r_[k], q_[k]}; }

  friend bool operator==(const RotationData& a, const RotationData& b) {
    return a.p_.value() == b.p_.value() && a.n_ == b.n_ && a.r_ == b.r_ && a.q_ == b.q_;
  }
  friend std::strong_ordering operator<=>(const RotationData& a, const RotationData& b) {
    if (auto c = a.p_.value() <=> b.p_.value(); c != 0) return c;
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    if (auto c = a.r_ <=> b.r_; c != 0) return c;
    return a.q_ <=> b.q_;
  }

 private:
  friend RotationData validate(const RawRotationData& raw);
  RotationData(Prime p, int n, std::vector<int> r, std::vector<int> q)
      : p_(p), n_(n), r_(std::move(r)), q_(std::move(q)) {}

  Prime p_;
  int n_;
  std::vector<int> r_;
  std::vector<int> q_;
};

/// Reduces entries mod p and checks the standing assumptions.
/// Throws InvalidPrime, InvalidDimension or InvalidSpan.
RotationData validate(const RawRotationData& raw);

RawRotationData to_raw(const RotationData& data);

/// Witness-carrying answer of the freeness test. When the action is not
/// free, `violating_element` is a nontrivial group element (g1, g2) and
/// `violating_pair` = (i, j), 1-based, with
///   g1 r_i + g2 q_i = 0  and  g1 r'_j + g2 q'_j = 0  (mod p).
struct FreenessReport {
  bool free = true;
  std::optional<std::array<int, 2>> violating_element;
  std::optional<std::pair<int, int>> violating_pair;
};

/// Freeness by scanning group elements.
///
/// Group elements are visited once per line through the origin, in the order
/// (1,0), (1,1), ..., (1,p-1), (0,1); scaling a group element does not change
/// which coordinates it fixes. The first violation found is reported.
FreenessReport is_free(const RotationData& data);

/// Freeness as a statement about the plane <R, Q>: it must meet every
/// coordinate plane B_ij = {x_i = 0, x'_j = 0} only at the origin. Computed
/// from the rank of the restriction of the plane to coordinates (i, n+j).
bool is_free_plane_form(const RotationData& data);

/// L(p; r) x L(p; r'): R = (r, 0), Q = (0, r'). Throws InvalidRotation if any
/// rotation number is zero mod p.
RotationData product_of_lens_spaces(Prime p, std::span<const std::int64_t> r,
                                    std::span<const std::int64_t> r_prime);

/// (R, Q) -> (m11 R + m12 Q, m21 R + m22 Q). The plane <R, Q> is unchanged
/// for invertible m.
RotationData change_basis(const RotationData& data, const Mat2& m);

/// Exchanges the first and second sphere blocks in both R and Q.
RotationData swap_blocks(const RotationData& data);

/// Applies `first` to the coordinates of the first block and `second` to
/// those of the second (new position k takes old position perm[k]).
RotationData permute_within_blocks(const RotationData& data, std::span<const int> first,
                                   std::span<const int> second);

}  // namespace spq
