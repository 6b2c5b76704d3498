#include "spq/rotation.hpp"

#include <string>

namespace spq {

RotationData validate(const RawRotationData& raw) {
  const Prime p(raw.p);
  if (raw.n < 2) throw InvalidDimension("n must be at least 2, got " + std::to_string(raw.n));
  const auto len = static_cast<std::size_t>(2 * raw.n);
  if (raw.R.size() != len || raw.Q.size() != len)
    throw InvalidDimension("R and Q must each have 2n = " + std::to_string(len) + " entries");

  std::vector<int> r(len), q(len);
  for (std::size_t k = 0; k < len; ++k) {
    r[k] = detail::reduce(raw.R[k], p);
    q[k] = detail::reduce(raw.Q[k], p);
  }
  FpMatrix span(p, 0, len);
  span.append_row(r);
  span.append_row(q);
  if (rank(span) != 2) throw InvalidSpan("R and Q do not span a 2-dimensional subspace of (Z/p)^{2n}");
  return RotationData(p, static_cast<int>(raw.n), std::move(r), std::move(q));
}

RawRotationData to_raw(const RotationData& data) {
  RawRotationData raw;
  raw.p = data.prime();
  raw.n = data.n();
  raw.R.assign(data.R().begin(), data.R().end());
  raw.Q.assign(data.Q().begin(), data.Q().end());
  return raw;
}

FreenessReport is_free(const RotationData& data) {
  const int p = data.prime();
  const auto n = static_cast<std::size_t>(data.n());
  auto first_zero = [&](int g1, int g2, std::size_t begin) -> std::optional<std::size_t> {
    for (std::size_t k = begin; k < begin + n; ++k) {
      const auto [r, q] = data.rotation_pair(k);
      if (detail::add(detail::mul(g1, r, p), detail::mul(g2, q, p), p) == 0) return k - begin;
    }
    return std::nullopt;
  };

  for (int line = 0; line <= p; ++line) {
    const int g1 = line < p ? 1 : 0;
    const int g2 = line < p ? line : 1;
    const auto i = first_zero(g1, g2, 0);
    if (!i) continue;
    const auto j = first_zero(g1, g2, n);
    if (!j) continue;
    FreenessReport report;
    report.free = false;
    report.violating_element = std::array{g1, g2};
    report.violating_pair = std::pair{static_cast<int>(*i) + 1, static_cast<int>(*j) + 1};
    return report;
  }
  return {};
}

bool is_free_plane_form(const RotationData& data) {
  const auto n = static_cast<std::size_t>(data.n());
  const Prime p = data.prime();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // x = g1 R + g2 Q has (x_i, x'_j) = M (g1, g2); the plane meets B_ij
      // nontrivially iff M is singular.
      const auto [ri, qi] = data.rotation_pair(i);
      const auto [rj, qj] = data.rotation_pair(n + j);
      const auto restriction = FpMatrix::from_rows(p, {{ri, qi}, {rj, qj}});
      if (rank(restriction) < 2) return false;
    }
  }
  return true;
}

RotationData product_of_lens_spaces(Prime p, std::span<const std::int64_t> r,
                                    std::span<const std::int64_t> r_prime) {
  if (r.size() != r_prime.size()) throw InvalidDimension("lens factors must have the same number of rotation numbers");
  for (auto v : r) {
    if (detail::reduce(v, p) == 0) throw InvalidRotation("rotation number " + std::to_string(v) + " is zero mod p");
  }
  for (auto v : r_prime) {
    if (detail::reduce(v, p) == 0) throw InvalidRotation("rotation number " + std::to_string(v) + " is zero mod p");
  }
  const std::size_t n = r.size();
  RawRotationData raw{p, static_cast<std::int64_t>(n), std::vector<std::int64_t>(2 * n, 0),
                      std::vector<std::int64_t>(2 * n, 0)};
  for (std::size_t k = 0; k < n; ++k) {
    raw.R[k] = r[k];
    raw.Q[n + k] = r_prime[k];
  }
  return validate(raw);
}

RotationData change_basis(const RotationData& data, const Mat2& m) {
  if (m.prime() != data.prime()) throw DomainError("basis change over a different field");
  const int p = data.prime();
  RawRotationData raw = to_raw(data);
  for (std::size_t k = 0; k < raw.R.size(); ++k) {
    const int r = data.R()[k], q = data.Q()[k];
    raw.R[k] = detail::add(detail::mul(m(0, 0), r, p), detail::mul(m(0, 1), q, p), p);
    raw.Q[k] = detail::add(detail::mul(m(1, 0), r, p), detail::mul(m(1, 1), q, p), p);
  }
  return validate(raw);
}

RotationData swap_blocks(const RotationData& data) {
  RawRotationData raw = to_raw(data);
  const auto n = static_cast<std::size_t>(data.n());
  for (std::size_t k = 0; k < n; ++k) {
    std::swap(raw.R[k], raw.R[n + k]);
    std::swap(raw.Q[k], raw.Q[n + k]);
  }
  return validate(raw);
}

RotationData permute_within_blocks(const RotationData& data, std::span<const int> first,
                                   std::span<const int> second) {
  const auto n = static_cast<std::size_t>(data.n());
  if (first.size() != n || second.size() != n) throw InvalidDimension("permutation length must equal n");
  RawRotationData raw = to_raw(data);
  for (std::size_t k = 0; k < n; ++k) {
    const auto a = static_cast<std::size_t>(first[k]);
    const auto b = n + static_cast<std::size_t>(second[k]);
    raw.R[k] = data.R()[a];
    raw.Q[k] = data.Q()[a];
    raw.R[n + k] = data.R()[b];
    raw.Q[n + k] = data.Q()[b];
  }
  return validate(raw);
}

}  // namespace spq
