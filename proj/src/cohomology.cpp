#include "spq/cohomology.hpp"

#include <algorithm>
#include <string>

namespace spq {

CohomRingModel build_model(const KInvariant& k, Prime p, int n) {
  if (k.prime() != p.value() || k.second.prime() != p.value())
    throw DomainError("k-invariant lives over a different field");
  if (k.first.degree() != n || k.second.degree() != n)
    throw DomainError("k-invariant components must have polynomial degree n = " + std::to_string(n));
  if (k.first.is_zero() || k.second.is_zero())
    throw DomainError("degenerate ideal: a k-invariant component is zero");

  CohomRingModel model(p, n, k);
  for (int d = 0; d <= model.max_degree(); ++d) {
    FpMatrix generators(p, 0, static_cast<std::size_t>(d) + 1);
    if (d >= n) {
      for (int j = 0; j <= d - n; ++j) {
        const auto m = HomogeneousForm::monomial(p, d - n - j, j);
        generators.append_row((m * k.first).coeffs());
        generators.append_row((m * k.second).coeffs());
      }
    }
    const FpMatrix reduced = rref(generators);
    const auto pivots = pivot_columns(reduced);
    FpMatrix basis(p, 0, reduced.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r) basis.append_row(reduced.row(r));
    model.bases_.push_back(std::move(basis));
    model.pivots_.push_back(pivots);
  }
  return model;
}

HomogeneousForm reduce(const CohomRingModel& model, const HomogeneousForm& form) {
  if (form.prime() != model.prime()) throw DomainError("form lives over a different field than the model");
  const int d = form.degree();
  if (d > model.max_degree())
    throw DomainError("degree " + std::to_string(d) + " exceeds the truncation degree " +
                      std::to_string(model.max_degree()));
  const int p = model.prime();
  std::vector<int> v = form.coeffs();
  const auto& basis = model.bases_[static_cast<std::size_t>(d)];
  const auto& pivots = model.pivots_[static_cast<std::size_t>(d)];
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    const int factor = v[pivots[r]];
    if (factor == 0) continue;
    const auto row = basis.row(r);
    for (std::size_t c = 0; c < v.size(); ++c) v[c] = detail::sub(v[c], detail::mul(factor, row[c], p), p);
  }
  return HomogeneousForm::from_residues(p, std::move(v));
}

bool in_ideal(const CohomRingModel& model, const HomogeneousForm& form) { return reduce(model, form).is_zero(); }

bool equal_in_quotient(const CohomRingModel& model, const HomogeneousForm& u, const HomogeneousForm& v) {
  return in_ideal(model, u - v);
}

bool TotalClass::is_trivial() const {
  return std::all_of(components.begin(), components.end(), [](const auto& kv) { return kv.second.is_zero(); });
}

namespace {

void check_truncation(const CohomRingModel& model, const TotalClass& cls) {
  if (cls.p != model.prime() || cls.n != model.n())
    throw DomainError("total class truncation (p = " + std::to_string(cls.p) + ", n = " + std::to_string(cls.n) +
                      ") does not match the model");
}

}  // namespace

TotalClass reduce(const CohomRingModel& model, const TotalClass& cls) {
  check_truncation(model, cls);
  TotalClass out{cls.p, cls.n, {}};
  for (const auto& [degree, form] : cls.components) out.components.emplace(degree, reduce(model, form));
  return out;
}

bool equal_in_quotient(const CohomRingModel& model, const TotalClass& u, const TotalClass& v) {
  check_truncation(model, u);
  check_truncation(model, v);
  for (const auto& [degree, form] : u.components) {
    const auto it = v.components.find(degree);
    const bool same = it == v.components.end() ? in_ideal(model, form) : equal_in_quotient(model, form, it->second);
    if (!same) return false;
  }
  for (const auto& [degree, form] : v.components) {
    if (!u.components.contains(degree) && !in_ideal(model, form)) return false;
  }
  return true;
}

TotalClass substitute(const TotalClass& cls, const Mat2& A) {
  TotalClass out{cls.p, cls.n, {}};
  for (const auto& [degree, form] : cls.components) out.components.emplace(degree, substitute(form, A));
  return out;
}

}  // namespace spq
