#pragma once

// Homogeneous polynomials in the degree-2 generators a, b of
// H*(K(Z/p x Z/p, 1); Z), reduced mod p. The degree-3 generator c is not
// modelled; nothing computed here involves it.

#include <compare>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "spq/fp.hpp"
#include "spq/rotation.hpp"

namespace spq {

/// sum_k c_k a^{d-k} b^k over GF(p). Polynomial degree d, cohomological
/// degree 2d. Dense coefficient vector, index k = power of b.
class HomogeneousForm {
 public:
  HomogeneousForm(Prime p, const std::vector<std::int64_t>& coeffs);

  static HomogeneousForm zero(Prime p, int degree);
  static HomogeneousForm one(Prime p) { return HomogeneousForm(p, {1}); }
  /// r a + q b.
  static HomogeneousForm linear(Prime p, std::int64_t r, std::int64_t q) { return HomogeneousForm(p, {r, q}); }
  /// a^i b^j.
  static HomogeneousForm monomial(Prime p, int a_power, int b_power);
  /// Unchecked; entries must already lie in [0, p).
  static HomogeneousForm from_residues(int p, std::vector<int> coeffs);

  int prime() const { return p_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<int>& coeffs() const { return c_; }
  Fp coeff(int k) const { return Fp::raw(c_[static_cast<std::size_t>(k)], p_); }
  bool is_zero() const;

  HomogeneousForm operator+(const HomogeneousForm& o) const;
  HomogeneousForm operator-(const HomogeneousForm& o) const;
  HomogeneousForm operator*(const HomogeneousForm& o) const;
  HomogeneousForm operator*(Fp s) const;
  HomogeneousForm scaled(int s) const;

  /// Value at (a, b) in GF(p)^2.
  int evaluate(int a, int b) const;

  friend bool operator==(const HomogeneousForm&, const HomogeneousForm&) = default;
  /// Degree first, then coefficients lexicographically.
  friend std::strong_ordering operator<=>(const HomogeneousForm& x, const HomogeneousForm& y) {
    if (auto c = x.p_ <=> y.p_; c != 0) return c;
    if (auto c = x.c_.size() <=> y.c_.size(); c != 0) return c;
    return x.c_ <=> y.c_;
  }

 private:
  HomogeneousForm(int p, std::vector<int> c) : p_(p), c_(std::move(c)) {}
  void check_compatible(const HomogeneousForm& o, bool same_degree) const;

  int p_;
  std::vector<int> c_;
};

/// "2a^2+3ab+b^2 (mod 7)".
std::string to_string(const HomogeneousForm& f);
/// Same without the modulus suffix.
std::string to_expression(const HomogeneousForm& f);

/// prod_i (r_i a + q_i b). The empty product is the constant 1.
/// Throws DomainError if a pair lives over a different field.
HomogeneousForm product_of_linear_forms(Prime p, std::span<const std::pair<Fp, Fp>> pairs);

/// f(a, b) -> f(A11 a + A12 b, A21 a + A22 b): row i of A is the image of the
/// i-th generator. With this convention
///   substitute(substitute(f, A), A2) == substitute(f, A * A2).
/// Throws DomainError for singular A.
HomogeneousForm substitute(const HomogeneousForm& f, const Mat2& A);

/// The pair of components of the first nontrivial k-invariant, mod p.
struct KInvariant {
  HomogeneousForm first;
  HomogeneousForm second;

  int prime() const { return first.prime(); }
  int degree() const { return first.degree(); }

  friend bool operator==(const KInvariant&, const KInvariant&) = default;
  friend std::strong_ordering operator<=>(const KInvariant& x, const KInvariant& y) {
    if (auto c = x.first <=> y.first; c != 0) return c;
    return x.second <=> y.second;
  }
};

/// (prod_i (r_i a + q_i b), prod_i (r'_i a + q'_i b)).
/// Throws HypothesisViolation unless p > n.
KInvariant k_invariant(const RotationData& data);

/// Both components substituted by A.
KInvariant substitute(const KInvariant& k, const Mat2& A);

/// Mixes the components by a coefficient automorphism:
/// (f, g) -> (B11 f + B12 g, B21 f + B22 g).
KInvariant apply_coefficient_map(const Mat2& B, const KInvariant& k);

}  // namespace spq
