#pragma once

#include <compare>
#include <map>
#include <utility>
#include <vector>

#include "spq/forms.hpp"

namespace spq {

/// GF(p)[a, b] / (f, g) in polynomial degrees 0 .. 2n-1 (cohomological
/// degrees up to 4n-2, the dimension of the quotient manifold), where (f, g)
/// is the k-invariant. This is the model of the even-degree mod-p cohomology
/// of L(p,p; R, Q) in which characteristic classes are compared.
///
/// For each degree d the ideal's degree-d part
///   span{ m f, m g : m a monomial of degree d - n }
/// is kept as a matrix in reduced row echelon form.
class CohomRingModel {
 public:
  int prime() const { return p_; }
  int n() const { return n_; }
  const KInvariant& k() const { return k_; }
  /// Highest polynomial degree retained (2n - 1).
  int max_degree() const { return 2 * n_ - 1; }

  /// Nonzero rows of the reduced echelon basis of the ideal in degree d.
  const FpMatrix& ideal_basis(int d) const { return bases_.at(static_cast<std::size_t>(d)); }
  std::size_t ideal_rank(int d) const { return ideal_basis(d).rows(); }

 private:
  friend CohomRingModel build_model(const KInvariant& k, Prime p, int n);
  CohomRingModel(int p, int n, KInvariant k) : p_(p), n_(n), k_(std::move(k)) {}

  int p_;
  int n_;
  KInvariant k_;
  std::vector<FpMatrix> bases_;
  std::vector<std::vector<std::size_t>> pivots_;

  friend HomogeneousForm reduce(const CohomRingModel& model, const HomogeneousForm& form);
};

/// Throws DomainError for a zero component, a component of degree != n, or
/// a field mismatch.
CohomRingModel build_model(const KInvariant& k, Prime p, int n);

/// Canonical coset representative: the unique element of form + ideal that
/// vanishes on every pivot coordinate of the degree's ideal basis.
/// Throws DomainError above the truncation degree or over another field.
HomogeneousForm reduce(const CohomRingModel& model, const HomogeneousForm& form);

bool in_ideal(const CohomRingModel& model, const HomogeneousForm& form);

bool equal_in_quotient(const CohomRingModel& model, const HomogeneousForm& u, const HomogeneousForm& v);

/// Graded class 1 + x_4 + x_8 + ..., truncated at cohomological degree
/// 4n - 2. `components` maps cohomological degree 4k (k >= 1) to a form of
/// polynomial degree 2k; the degree-0 part is the implicit 1.
struct TotalClass {
  int p = 0;
  int n = 0;
  std::map<int, HomogeneousForm> components;

  bool is_trivial() const;

  friend bool operator==(const TotalClass&, const TotalClass&) = default;
  friend std::strong_ordering operator<=>(const TotalClass& x, const TotalClass& y) {
    if (auto c = x.p <=> y.p; c != 0) return c;
    if (auto c = x.n <=> y.n; c != 0) return c;
    auto xi = x.components.begin();
    auto yi = y.components.begin();
    for (; xi != x.components.end() && yi != y.components.end(); ++xi, ++yi) {
      if (auto c = xi->first <=> yi->first; c != 0) return c;
      if (auto c = xi->second <=> yi->second; c != 0) return c;
    }
    return x.components.size() <=> y.components.size();
  }
};

/// Componentwise reduction. Throws DomainError if (p, n) disagree.
TotalClass reduce(const CohomRingModel& model, const TotalClass& cls);

/// Componentwise reduce(u - v) == 0.
bool equal_in_quotient(const CohomRingModel& model, const TotalClass& u, const TotalClass& v);

/// Componentwise substitution.
TotalClass substitute(const TotalClass& cls, const Mat2& A);

}  // namespace spq
