#include "spq/forms.hpp"

#include <algorithm>
#include <sstream>

namespace spq {

HomogeneousForm::HomogeneousForm(Prime p, const std::vector<std::int64_t>& coeffs) : p_(p) {
  if (coeffs.empty()) throw InvalidDimension("a form of degree d needs d + 1 coefficients");
  c_.reserve(coeffs.size());
  for (auto v : coeffs) c_.push_back(detail::reduce(v, p_));
}

HomogeneousForm HomogeneousForm::zero(Prime p, int degree) {
  if (degree < 0) throw InvalidDimension("negative degree");
  return HomogeneousForm(p.value(), std::vector<int>(static_cast<std::size_t>(degree) + 1, 0));
}

HomogeneousForm HomogeneousForm::monomial(Prime p, int a_power, int b_power) {
  auto f = zero(p, a_power + b_power);
  f.c_[static_cast<std::size_t>(b_power)] = 1;
  return f;
}

HomogeneousForm HomogeneousForm::from_residues(int p, std::vector<int> coeffs) {
  return HomogeneousForm(p, std::move(coeffs));
}

bool HomogeneousForm::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](int v) { return v == 0; });
}

void HomogeneousForm::check_compatible(const HomogeneousForm& o, bool same_degree) const {
  if (o.p_ != p_) throw DomainError("forms over different fields");
  if (same_degree && o.c_.size() != c_.size()) throw DomainError("forms of different degrees");
}

HomogeneousForm HomogeneousForm::operator+(const HomogeneousForm& o) const {
  check_compatible(o, true);
  auto out = *this;
  for (std::size_t k = 0; k < c_.size(); ++k) out.c_[k] = detail::add(c_[k], o.c_[k], p_);
  return out;
}

HomogeneousForm HomogeneousForm::operator-(const HomogeneousForm& o) const {
  check_compatible(o, true);
  auto out = *this;
  for (std::size_t k = 0; k < c_.size(); ++k) out.c_[k] = detail::sub(c_[k], o.c_[k], p_);
  return out;
}

HomogeneousForm HomogeneousForm::operator*(const HomogeneousForm& o) const {
  check_compatible(o, false);
  std::vector<int> out(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      out[i + j] = detail::add(out[i + j], detail::mul(c_[i], o.c_[j], p_), p_);
  }
  return HomogeneousForm(p_, std::move(out));
}

HomogeneousForm HomogeneousForm::operator*(Fp s) const {
  if (s.modulus() != p_) throw DomainError("scalar over a different field");
  return scaled(s.value());
}

HomogeneousForm HomogeneousForm::scaled(int s) const {
  auto out = *this;
  for (int& v : out.c_) v = detail::mul(v, s, p_);
  return out;
}

int HomogeneousForm::evaluate(int a, int b) const {
  const int d = degree();
  int total = 0;
  for (int k = 0; k <= d; ++k) {
    const int term = detail::mul(detail::pow(a, static_cast<std::uint64_t>(d - k), p_),
                                 detail::pow(b, static_cast<std::uint64_t>(k), p_), p_);
    total = detail::add(total, detail::mul(c_[static_cast<std::size_t>(k)], term, p_), p_);
  }
  return total;
}

std::string to_expression(const HomogeneousForm& f) {
  std::ostringstream os;
  const int d = f.degree();
  bool first = true;
  for (int k = 0; k <= d; ++k) {
    const int c = f.coeffs()[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    if (!first) os << '+';
    first = false;
    const int ea = d - k, eb = k;
    if (c != 1 || d == 0) os << c;
    if (ea > 0) os << 'a' << (ea > 1 ? "^" + std::to_string(ea) : "");
    if (eb > 0) os << 'b' << (eb > 1 ? "^" + std::to_string(eb) : "");
  }
  if (first) os << '0';
  return os.str();
}

std::string to_string(const HomogeneousForm& f) {
  return to_expression(f) + " (mod " + std::to_string(f.prime()) + ")";
}

HomogeneousForm product_of_linear_forms(Prime p, std::span<const std::pair<Fp, Fp>> pairs) {
  auto out = HomogeneousForm::one(p);
  for (const auto& [r, q] : pairs) {
    if (r.modulus() != p.value() || q.modulus() != p.value())
      throw DomainError("linear form coefficients over a different field");
    out = out * HomogeneousForm::from_residues(p, {r.value(), q.value()});
  }
  return out;
}

HomogeneousForm substitute(const HomogeneousForm& f, const Mat2& A) {
  if (A.prime() != f.prime()) throw DomainError("substitution matrix over a different field");
  if (!A.invertible()) throw DomainError("substitution by a singular matrix");
  const int p = f.prime();
  const int d = f.degree();
  const auto width = static_cast<std::size_t>(d) + 1;
  // pa[k] holds the coefficients of (A11 a + A12 b)^k, pb[k] those of
  // (A21 a + A22 b)^k, in rows of a flat width x width table.
  auto powers = [&](int x, int y) {
    std::vector<int> table(width * width, 0);
    table[0] = 1;
    for (std::size_t k = 1; k < width; ++k) {
      const int* prev = &table[(k - 1) * width];
      int* row = &table[k * width];
      for (std::size_t i = 0; i < k; ++i) {
        row[i] = detail::add(row[i], detail::mul(prev[i], x, p), p);
        row[i + 1] = detail::mul(prev[i], y, p);
      }
    }
    return table;
  };
  const std::vector<int> pa = powers(A(0, 0), A(0, 1));
  const std::vector<int> pb = powers(A(1, 0), A(1, 1));

  std::vector<std::int64_t> acc(width, 0);
  for (std::size_t k = 0; k < width; ++k) {
    const int c = f.coeffs()[k];
    if (c == 0) continue;
    const int* ra = &pa[(width - 1 - k) * width];
    const int* rb = &pb[k * width];
    for (std::size_t i = 0; i + k < width; ++i) {
      if (ra[i] == 0) continue;
      const std::int64_t ca = static_cast<std::int64_t>(c) * ra[i] % p;
      for (std::size_t j = 0; j <= k; ++j) acc[i + j] += ca * rb[j] % p;
    }
  }
  std::vector<int> out(width);
  for (std::size_t i = 0; i < width; ++i) out[i] = detail::reduce(acc[i], p);
  return HomogeneousForm::from_residues(p, std::move(out));
}

KInvariant k_invariant(const RotationData& data) {
  const Prime p = data.prime();
  const int n = data.n();
  if (p.value() <= n)
    throw HypothesisViolation("k-invariant formula requires p > n (p = " + std::to_string(p.value()) +
                              ", n = " + std::to_string(n) + ")");
  std::vector<std::pair<Fp, Fp>> first, second;
  for (int k = 0; k < n; ++k) {
    first.emplace_back(data.R_at(static_cast<std::size_t>(k)), data.Q_at(static_cast<std::size_t>(k)));
    second.emplace_back(data.R_at(static_cast<std::size_t>(n + k)), data.Q_at(static_cast<std::size_t>(n + k)));
  }
  return {product_of_linear_forms(p, first), product_of_linear_forms(p, second)};
}

KInvariant substitute(const KInvariant& k, const Mat2& A) {
  return {substitute(k.first, A), substitute(k.second, A)};
}

KInvariant apply_coefficient_map(const Mat2& B, const KInvariant& k) {
  if (B.prime() != k.prime()) throw DomainError("coefficient map over a different field");
  return {k.first.scaled(B(0, 0)) + k.second.scaled(B(0, 1)), k.first.scaled(B(1, 0)) + k.second.scaled(B(1, 1))};
}

}  // namespace spq
