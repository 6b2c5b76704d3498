#pragma once

// Exact arithmetic over the prime field GF(p), p an odd prime, and the small
// dense linear-algebra kernel used by the rest of the library.

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <iterator>
#include <span>
#include <vector>

#include "spq/errors.hpp"

namespace spq {

bool is_prime(std::int64_t n);

/// An odd prime modulus. Construction rejects 2, composites and values that
/// do not fit the 32-bit residue representation.
class Prime {
 public:
  explicit Prime(std::int64_t p);

  int value() const { return value_; }
  operator int() const { return value_; }

  friend bool operator==(Prime, Prime) = default;

 private:
  int value_;
};

namespace detail {

inline int reduce(std::int64_t v, int p) {
  auto r = static_cast<int>(v % p);
  return r < 0 ? r + p : r;
}
inline int add(int x, int y, int p) { return reduce(static_cast<std::int64_t>(x) + y, p); }
inline int sub(int x, int y, int p) { return reduce(static_cast<std::int64_t>(x) - y, p); }
inline int mul(int x, int y, int p) { return reduce(static_cast<std::int64_t>(x) * y, p); }
int pow(int x, std::uint64_t e, int p);
int inv(int x, int p);

}  // namespace detail

/// Element of GF(p). The value is always reduced into [0, p).
class Fp {
 public:
  Fp(std::int64_t value, Prime p) : value_(detail::reduce(value, p)), p_(p) {}

  int value() const { return value_; }
  int modulus() const { return p_; }
  bool is_zero() const { return value_ == 0; }

  Fp operator+(Fp o) const;
  Fp operator-(Fp o) const;
  Fp operator*(Fp o) const;
  Fp operator-() const { return raw(detail::sub(0, value_, p_), p_); }
  Fp& operator+=(Fp o) { return *this = *this + o; }
  Fp& operator-=(Fp o) { return *this = *this - o; }
  Fp& operator*=(Fp o) { return *this = *this * o; }

  Fp pow(std::uint64_t e) const { return raw(detail::pow(value_, e, p_), p_); }

  friend bool operator==(Fp, Fp) = default;

  // Skips the primality check; callers guarantee 0 <= v < p with p prime.
  static Fp raw(int v, int p) { return Fp(v, p, RawTag{}); }

 private:
  struct RawTag {};
  Fp(int v, int p, RawTag) : value_(v), p_(p) {}
  void check_same_field(Fp o) const;

  int value_;
  int p_;
};

std::ostream& operator<<(std::ostream& os, Fp x);

/// Multiplicative inverse; throws DomainError on zero.
Fp inv(Fp x);

/// Euler's criterion: x^((p-1)/2) == 1. Throws DomainError on zero.
bool is_quadratic_residue(Fp x);

/// Same predicate by exhaustive search for a square root.
bool is_quadratic_residue_by_scan(Fp x);

/// 2x2 matrix over GF(p), stored row-major as reduced residues.
class Mat2 {
 public:
  Mat2(Prime p, std::int64_t a11, std::int64_t a12, std::int64_t a21, std::int64_t a22);

  static Mat2 identity(Prime p) { return Mat2(p, 1, 0, 0, 1); }
  /// The factor swap [[0,1],[1,0]].
  static Mat2 swap(Prime p) { return Mat2(p, 0, 1, 1, 0); }
  static Mat2 diagonal(Prime p, std::int64_t d1, std::int64_t d2) { return Mat2(p, d1, 0, 0, d2); }

  int prime() const { return p_; }
  /// Zero-based (row, col) residue.
  int operator()(int r, int c) const { return e_[static_cast<std::size_t>(2 * r + c)]; }
  Fp at(int r, int c) const { return Fp::raw((*this)(r, c), p_); }
  const std::array<int, 4>& entries() const { return e_; }

  Fp det() const;
  bool invertible() const { return !det().is_zero(); }
  Mat2 inverse() const;

  Mat2 operator*(const Mat2& o) const;
  friend bool operator==(const Mat2&, const Mat2&) = default;

  static Mat2 raw(int p, std::array<int, 4> e) { return Mat2(p, e, RawTag{}); }

 private:
  struct RawTag {};
  Mat2(int p, std::array<int, 4> e, RawTag) : p_(p), e_(e) {}

  int p_;
  std::array<int, 4> e_;
};

std::ostream& operator<<(std::ostream& os, const Mat2& m);

enum class Gl2Filter { all, det_pm1 };

/// Largest prime for which GL_2(F_p) may be enumerated.
inline constexpr int kMaxGl2Prime = 31;

/// |GL_2(F_p)| = (p^2 - 1)(p^2 - p).
std::uint64_t gl2_order(int p);

/// Streams every invertible 2x2 matrix over GF(p) exactly once (optionally
/// only those with det = +-1).
///
/// Order: lexicographic in the row-major entries of A - I, so the identity
/// is always the first element yielded.
class Gl2Elements {
 public:
  explicit Gl2Elements(Prime p, Gl2Filter filter = Gl2Filter::all);

  class iterator {
   public:
    using value_type = Mat2;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    const Mat2& operator*() const { return current_; }
    const Mat2* operator->() const { return &current_; }
    iterator& operator++();
    iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    friend bool operator==(const iterator& it, std::default_sentinel_t) { return it.code_ >= it.limit_; }

   private:
    friend class Gl2Elements;
    iterator(int p, Gl2Filter filter);
    void settle();

    int p_ = 3;
    Gl2Filter filter_ = Gl2Filter::all;
    std::uint32_t code_ = 0;
    std::uint32_t limit_ = 0;
    Mat2 current_ = Mat2::raw(3, {1, 0, 0, 1});
  };

  iterator begin() const { return iterator(p_, filter_); }
  std::default_sentinel_t end() const { return {}; }

 private:
  int p_;
  Gl2Filter filter_;
};

/// Materialized, shared copy of Gl2Elements(p, filter). Thread-safe.
const std::vector<Mat2>& gl2_list(Prime p, Gl2Filter filter);

/// Dense row-major matrix over GF(p).
class FpMatrix {
 public:
  FpMatrix(Prime p, std::size_t rows, std::size_t cols);
  static FpMatrix from_rows(Prime p, const std::vector<std::vector<std::int64_t>>& rows);
  static FpMatrix identity(Prime p, std::size_t size);

  int prime() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  int operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Fp at(std::size_t r, std::size_t c) const { return Fp::raw((*this)(r, c), p_); }
  void set(std::size_t r, std::size_t c, std::int64_t v) { data_[r * cols_ + c] = detail::reduce(v, p_); }

  std::span<const int> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<int> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

  /// Appends a row of residues (already reduced or not).
  void append_row(std::span<const int> values);

  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

 private:
  int p_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<int> data_;
};

/// Reduced row echelon form. Zero rows are kept at the bottom so the shape
/// is preserved.
FpMatrix rref(const FpMatrix& m);

std::size_t rank(const FpMatrix& m);

/// Pivot columns of a matrix already in reduced row echelon form.
std::vector<std::size_t> pivot_columns(const FpMatrix& reduced);

/// True iff v lies in the row space of m.
bool in_row_space(const FpMatrix& m, std::span<const int> v);

}  // namespace spq
