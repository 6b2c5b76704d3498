#include "spq/pontrjagin.hpp"

#include <algorithm>
#include <string>

namespace spq {

TotalClass unreduced_total_pontrjagin(const RotationData& data) {
  const Prime p = data.prime();
  const int n = data.n();
  // Full product as a list of homogeneous parts indexed by polynomial degree.
  std::vector<HomogeneousForm> parts{HomogeneousForm::one(p)};
  for (std::size_t k = 0; k < 2 * static_cast<std::size_t>(n); ++k) {
    const auto [r, q] = data.rotation_pair(k);
    const auto linear = HomogeneousForm::linear(p, r, q);
    const auto square = linear * linear;
    std::vector<HomogeneousForm> next = parts;
    next.push_back(HomogeneousForm::zero(p, parts.back().degree() + 2));
    for (std::size_t i = 0; i < parts.size(); ++i) next[i + 1] = next[i + 1] + parts[i] * square;
    parts = std::move(next);
  }
  TotalClass out{p, n, {}};
  for (std::size_t i = 1; i < parts.size(); ++i) {
    const int poly_degree = 2 * static_cast<int>(i);
    if (poly_degree > 2 * n - 1) break;
    out.components.emplace(2 * poly_degree, parts[i]);
  }
  return out;
}

TotalClass total_pontrjagin(const RotationData& data, const CohomRingModel& model) {
  if (model.prime() != data.prime().value() || model.n() != data.n())
    throw DomainError("model and rotation data disagree on (p, n)");
  const KInvariant k = k_invariant(data);
  FpMatrix span(data.prime(), 0, static_cast<std::size_t>(data.n()) + 1);
  span.append_row(k.first.coeffs());
  span.append_row(k.second.coeffs());
  FpMatrix reduced = rref(span);
  FpMatrix basis(data.prime(), 0, reduced.cols());
  for (std::size_t r = 0; r < pivot_columns(reduced).size(); ++r) basis.append_row(reduced.row(r));
  if (!(basis == model.ideal_basis(data.n())))
    throw DomainError("model was built from a different k-invariant ideal");
  return reduce(model, unreduced_total_pontrjagin(data));
}

bool LensTotalClass::is_trivial() const {
  return std::all_of(components.begin(), components.end(), [](const auto& kv) { return kv.second == 0; });
}

LensTotalClass lens_total_pontrjagin(Prime p, std::span<const std::int64_t> rotations) {
  const int n = static_cast<int>(rotations.size());
  // coeffs[i] = coefficient of a^{2i}
  std::vector<int> coeffs{1};
  for (auto r : rotations) {
    const int rr = detail::reduce(r, p);
    if (rr == 0) throw InvalidRotation("rotation number " + std::to_string(r) + " is zero mod p");
    const int sq = detail::mul(rr, rr, p);
    coeffs.push_back(0);
    for (std::size_t i = coeffs.size() - 1; i > 0; --i)
      coeffs[i] = detail::add(coeffs[i], detail::mul(coeffs[i - 1], sq, p), p);
  }
  LensTotalClass out{p, n, {}};
  for (std::size_t i = 1; i < coeffs.size() && 2 * static_cast<int>(i) < n; ++i)
    out.components.emplace(4 * static_cast<int>(i), coeffs[i]);
  return out;
}

}  // namespace spq
