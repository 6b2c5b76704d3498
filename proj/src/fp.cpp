#include "spq/fp.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>
#include <ostream>
#include <string>
#include <tuple>
#include <utility>

namespace spq {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Prime::Prime(std::int64_t p) : value_(0) {
  if (p == 2) throw InvalidPrime("p = 2 is not supported; the modulus must be an odd prime");
  if (p > std::numeric_limits<int>::max() / 2 || !is_prime(p))
    throw InvalidPrime("modulus " + std::to_string(p) + " is not an odd prime");
  value_ = static_cast<int>(p);
}

namespace detail {

int pow(int x, std::uint64_t e, int p) {
  int result = 1 % p;
  int base = reduce(x, p);
  while (e > 0) {
    if (e & 1U) result = mul(result, base, p);
    base = mul(base, base, p);
    e >>= 1U;
  }
  return result;
}

int inv(int x, int p) {
  // Extended Euclid on (x, p).
  std::int64_t a = reduce(x, p), b = p, s = 1, t = 0;
  if (a == 0) throw DomainError("zero has no multiplicative inverse in GF(" + std::to_string(p) + ")");
  while (b != 0) {
    std::int64_t q = a / b;
    std::tie(a, b) = std::pair{b, a - q * b};
    std::tie(s, t) = std::pair{t, s - q * t};
  }
  return reduce(s, p);
}

}  // namespace detail

void Fp::check_same_field(Fp o) const {
  if (o.p_ != p_)
    throw DomainError("mixed moduli: GF(" + std::to_string(p_) + ") and GF(" + std::to_string(o.p_) + ")");
}

Fp Fp::operator+(Fp o) const {
  check_same_field(o);
  return raw(detail::add(value_, o.value_, p_), p_);
}

Fp Fp::operator-(Fp o) const {
  check_same_field(o);
  return raw(detail::sub(value_, o.value_, p_), p_);
}

Fp Fp::operator*(Fp o) const {
  check_same_field(o);
  return raw(detail::mul(value_, o.value_, p_), p_);
}

std::ostream& operator<<(std::ostream& os, Fp x) { return os << x.value(); }

Fp inv(Fp x) { return Fp::raw(detail::inv(x.value(), x.modulus()), x.modulus()); }

bool is_quadratic_residue(Fp x) {
  if (x.is_zero()) throw DomainError("quadratic residuosity of 0 is undefined here");
  auto p = static_cast<std::uint64_t>(x.modulus());
  return x.pow((p - 1) / 2).value() == 1;
}

bool is_quadratic_residue_by_scan(Fp x) {
  if (x.is_zero()) throw DomainError("quadratic residuosity of 0 is undefined here");
  const int p = x.modulus();
  for (int t = 1; t < p; ++t) {
    if (detail::mul(t, t, p) == x.value()) return true;
  }
  return false;
}

// --- Mat2 -----------------------------------------------------------------

Mat2::Mat2(Prime p, std::int64_t a11, std::int64_t a12, std::int64_t a21, std::int64_t a22)
    : p_(p),
      e_{detail::reduce(a11, p), detail::reduce(a12, p), detail::reduce(a21, p), detail::reduce(a22, p)} {}

Fp Mat2::det() const {
  return Fp::raw(detail::sub(detail::mul(e_[0], e_[3], p_), detail::mul(e_[1], e_[2], p_), p_), p_);
}

Mat2 Mat2::inverse() const {
  const Fp d = det();
  if (d.is_zero()) throw DomainError("singular 2x2 matrix has no inverse");
  const int di = detail::inv(d.value(), p_);
  auto m = [&](int v) { return detail::mul(v, di, p_); };
  return raw(p_, {m(e_[3]), m(detail::sub(0, e_[1], p_)), m(detail::sub(0, e_[2], p_)), m(e_[0])});
}

Mat2 Mat2::operator*(const Mat2& o) const {
  if (o.p_ != p_) throw DomainError("mixed moduli in matrix product");
  auto dot = [&](int a, int b, int c, int d) {
    return detail::add(detail::mul(a, b, p_), detail::mul(c, d, p_), p_);
  };
  return raw(p_, {dot(e_[0], o.e_[0], e_[1], o.e_[2]), dot(e_[0], o.e_[1], e_[1], o.e_[3]),
                  dot(e_[2], o.e_[0], e_[3], o.e_[2]), dot(e_[2], o.e_[1], e_[3], o.e_[3])});
}

std::ostream& operator<<(std::ostream& os, const Mat2& m) {
  return os << "[[" << m(0, 0) << "," << m(0, 1) << "],[" << m(1, 0) << "," << m(1, 1) << "]]";
}

// --- GL_2 enumeration -------------------------------------------------------

std::uint64_t gl2_order(int p) {
  const auto q = static_cast<std::uint64_t>(p);
  return (q * q - 1) * (q * q - q);
}

Gl2Elements::Gl2Elements(Prime p, Gl2Filter filter) : p_(p), filter_(filter) {
  if (p.value() > kMaxGl2Prime)
    throw CapacityError("GL_2(F_p) enumeration is limited to p <= " + std::to_string(kMaxGl2Prime));
}

Gl2Elements::iterator::iterator(int p, Gl2Filter filter)
    : p_(p), filter_(filter), code_(0), limit_(static_cast<std::uint32_t>(p * p * p * p)) {
  settle();
}

Gl2Elements::iterator& Gl2Elements::iterator::operator++() {
  ++code_;
  settle();
  return *this;
}

void Gl2Elements::iterator::settle() {
  for (; code_ < limit_; ++code_) {
    std::array<int, 4> e{};
    std::uint32_t c = code_;
    for (int k = 3; k >= 0; --k) {
      e[static_cast<std::size_t>(k)] = static_cast<int>(c % static_cast<std::uint32_t>(p_));
      c /= static_cast<std::uint32_t>(p_);
    }
    // Offsets from the identity.
    e[0] = detail::add(e[0], 1, p_);
    e[3] = detail::add(e[3], 1, p_);
    const int d = detail::sub(detail::mul(e[0], e[3], p_), detail::mul(e[1], e[2], p_), p_);
    if (d == 0) continue;
    if (filter_ == Gl2Filter::det_pm1 && d != 1 && d != p_ - 1) continue;
    current_ = Mat2::raw(p_, e);
    return;
  }
}

const std::vector<Mat2>& gl2_list(Prime p, Gl2Filter filter) {
  static std::mutex mutex;
  static std::map<std::pair<int, Gl2Filter>, std::vector<Mat2>> cache;
  std::lock_guard lock(mutex);
  auto key = std::pair{p.value(), filter};
  auto it = cache.find(key);
  if (it == cache.end()) {
    std::vector<Mat2> all;
    for (const Mat2& m : Gl2Elements(p, filter)) all.push_back(m);
    it = cache.emplace(key, std::move(all)).first;
  }
  return it->second;
}

// --- FpMatrix ---------------------------------------------------------------

FpMatrix::FpMatrix(Prime p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

FpMatrix FpMatrix::from_rows(Prime p, const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  FpMatrix m(p, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InvalidDimension("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

FpMatrix FpMatrix::identity(Prime p, std::size_t size) {
  FpMatrix m(p, size, size);
  for (std::size_t i = 0; i < size; ++i) m.set(i, i, 1);
  return m;
}

void FpMatrix::append_row(std::span<const int> values) {
  if (values.size() != cols_) throw InvalidDimension("row length does not match column count");
  for (int v : values) data_.push_back(detail::reduce(v, p_));
  ++rows_;
}

FpMatrix rref(const FpMatrix& m) {
  FpMatrix out = m;
  const int p = m.prime();
  std::size_t lead = 0;
  for (std::size_t c = 0; c < out.cols() && lead < out.rows(); ++c) {
    std::size_t pivot = lead;
    while (pivot < out.rows() && out(pivot, c) == 0) ++pivot;
    if (pivot == out.rows()) continue;
    if (pivot != lead) {
      auto a = out.row(pivot);
      auto b = out.row(lead);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    auto lead_row = out.row(lead);
    const int scale = detail::inv(lead_row[c], p);
    for (int& v : lead_row) v = detail::mul(v, scale, p);
    for (std::size_t r = 0; r < out.rows(); ++r) {
      if (r == lead || out(r, c) == 0) continue;
      const int factor = out(r, c);
      auto row = out.row(r);
      for (std::size_t k = 0; k < out.cols(); ++k) row[k] = detail::sub(row[k], detail::mul(factor, lead_row[k], p), p);
    }
    ++lead;
  }
  return out;
}

std::vector<std::size_t> pivot_columns(const FpMatrix& reduced) {
  std::vector<std::size_t> pivots;
  for (std::size_t r = 0; r < reduced.rows(); ++r) {
    for (std::size_t c = 0; c < reduced.cols(); ++c) {
      if (reduced(r, c) != 0) {
        pivots.push_back(c);
        break;
      }
    }
  }
  return pivots;
}

std::size_t rank(const FpMatrix& m) { return pivot_columns(rref(m)).size(); }

bool in_row_space(const FpMatrix& m, std::span<const int> v) {
  if (v.size() != m.cols()) throw InvalidDimension("vector length does not match column count");
  FpMatrix extended = m;
  extended.append_row(v);
  return rank(extended) == rank(m);
}

}  // namespace spq
