#pragma once

#include <map>
#include <span>
#include <vector>

#include "satake/poly.hpp"
#include "satake/ratlin.hpp"

namespace satake {

template <class R>
struct RingTraits;

template <>
struct RingTraits<Poly> {
  static Poly zero() { return Poly(); }
  static Poly one() { return Poly::constant(1); }
  static bool is_zero(const Poly& p) { return p.is_zero(); }
  static constexpr bool has_exact_div = true;
  static Poly div(const Poly& a, const Poly& b) { return exact_div(a, b); }
  static Poly halve(const Poly& p) { return exact_div(p, Poly::constant(2)); }
};

template <>
struct RingTraits<RatLin> {
  static RatLin zero() { return RatLin(); }
  static RatLin one() { return RatLin(Poly::constant(1)); }
  static bool is_zero(const RatLin& r) { return r.is_zero(); }
  static constexpr bool has_exact_div = false;
  static RatLin div(const RatLin&, const RatLin&) {
    throw Error("exact division is not available for RatLin");
  }
  static RatLin halve(const RatLin& r) {
    return RatLin(exact_div(r.num(), Poly::constant(2)), r.den());
  }
};

// Dense matrix over an exact coefficient ring.  Optional integer row/column
// labels support the label-driven submatrix Pfaffians used by the spin model,
// where rows are indexed n-1,...,0 rather than positionally.
template <class R>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols)
      : rows_(rows), cols_(cols), d_(static_cast<std::size_t>(rows) * cols, RingTraits<R>::zero()) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = RingTraits<R>::one();
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  R& operator()(int r, int c) { return d_[static_cast<std::size_t>(r) * cols_ + c]; }
  const R& operator()(int r, int c) const { return d_[static_cast<std::size_t>(r) * cols_ + c]; }

  void set_row_labels(std::vector<int> labels) { row_labels_ = std::move(labels); }
  const std::vector<int>& row_labels() const { return row_labels_; }
  int row_of_label(int label) const {
    for (int r = 0; r < rows_; ++r)
      if (row_labels_.empty() ? r == label : row_labels_[r] == label) return r;
    throw BadIndex("no row with label " + std::to_string(label));
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape mismatch");
    Matrix out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const R& a = (*this)(i, k);
        if (RingTraits<R>::is_zero(a)) continue;
        for (int j = 0; j < o.cols_; ++j) {
          const R& b = o(k, j);
          if (RingTraits<R>::is_zero(b)) continue;
          out(i, j) += a * b;
        }
      }
    return out;
  }

  Matrix operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shape mismatch");
    Matrix out = *this;
    for (std::size_t i = 0; i < d_.size(); ++i) out.d_[i] += o.d_[i];
    return out;
  }

  Matrix operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw DimensionMismatch("matrix difference shape mismatch");
    Matrix out = *this;
    for (std::size_t i = 0; i < d_.size(); ++i) out.d_[i] -= o.d_[i];
    return out;
  }

  Matrix scaled(const R& c) const {
    Matrix out = *this;
    for (auto& e : out.d_) e *= c;
    return out;
  }

  Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  Matrix pow(int e) const {
    if (rows_ != cols_) throw NotSquare("matrix power of a nonsquare matrix");
    Matrix out = identity(rows_);
    for (int i = 0; i < e; ++i) out = out * *this;
    return out;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && d_ == o.d_;
  }

  bool is_skew() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
      for (int j = i; j < cols_; ++j) {
        R s = (*this)(i, j) + (*this)(j, i);
        if (!RingTraits<R>::is_zero(s)) return false;
      }
    return true;
  }

 private:
  int rows_{0}, cols_{0};
  std::vector<R> d_;
  std::vector<int> row_labels_;
};

// Inverse of a unitriangular matrix through its nilpotent part; needs only
// ring operations.
template <class R>
Matrix<R> unitriangular_inverse(const Matrix<R>& m) {
  const int n = m.rows();
  Matrix<R> nil = m - Matrix<R>::identity(n);
  Matrix<R> out = Matrix<R>::identity(n);
  Matrix<R> power = Matrix<R>::identity(n);
  for (int p = 1; p < n; ++p) {
    power = power * nil;
    out = (p % 2) ? out - power : out + power;
  }
  return out;
}

inline Matrix<RatLin> to_ratlin(const Matrix<Poly>& m) {
  Matrix<RatLin> out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = RatLin(m(i, j));
  return out;
}

// Skew-symmetric matrix; construction validates entries exactly.
template <class R>
struct SkewMatrix {
  Matrix<R> m;

  explicit SkewMatrix(Matrix<R> mat) : m(std::move(mat)) {
    if (m.rows() != m.cols()) throw NotSquare("skew matrix must be square");
    if (!m.is_skew()) throw NotSkew("matrix is not skew-symmetric");
  }
};

namespace detail {

template <class R>
R det_cofactor(const Matrix<R>& m) {
  const int n = m.rows();
  if (n == 0) return RingTraits<R>::one();
  std::map<std::uint32_t, R> memo;
  auto rec = [&](auto&& self, std::uint32_t colmask) -> R {
    if (colmask == 0) return RingTraits<R>::one();
    auto it = memo.find(colmask);
    if (it != memo.end()) return it->second;
    const int row = n - __builtin_popcount(colmask);
    R acc = RingTraits<R>::zero();
    int pos = 0;
    for (int c = 0; c < n; ++c) {
      if (!(colmask & (1u << c))) continue;
      const R& e = m(row, c);
      if (!RingTraits<R>::is_zero(e)) {
        R sub = self(self, colmask & ~(1u << c));
        R term = e * sub;
        if (pos % 2) acc -= term;
        else acc += term;
      }
      ++pos;
    }
    memo.emplace(colmask, acc);
    return acc;
  };
  return rec(rec, (n >= 32) ? ~0u : ((1u << n) - 1));
}

template <class R>
R det_bareiss(Matrix<R> m) {
  const int n = m.rows();
  if (n == 0) return RingTraits<R>::one();
  R sign = RingTraits<R>::one();
  R prev = RingTraits<R>::one();
  for (int k = 0; k + 1 < n; ++k) {
    if (RingTraits<R>::is_zero(m(k, k))) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (!RingTraits<R>::is_zero(m(i, k))) {
          p = i;
          break;
        }
      if (p < 0) return RingTraits<R>::zero();
      for (int j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m(i, j) = RingTraits<R>::div(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

}  // namespace detail

// Exact determinant: memoized cofactor expansion for dimension <= 10 (or rings
// without exact division), fraction-free elimination above.
template <class R>
R determinant(const Matrix<R>& m) {
  if (m.rows() != m.cols()) throw NotSquare("determinant of a nonsquare matrix");
  if constexpr (RingTraits<R>::has_exact_div) {
    if (m.rows() > 10) return detail::det_bareiss(m);
  }
  return detail::det_cofactor(m);
}

// Pfaffian of the principal submatrix on the given positions (kept in matrix
// order), by the Laplace-type expansion along the last active row.  Odd-size
// position sets give 0; the empty set gives 1.
template <class R>
R pfaffian_positions(const Matrix<R>& m, std::uint32_t mask) {
  std::map<std::uint32_t, R> memo;
  auto rec = [&](auto&& self, std::uint32_t s) -> R {
    const int cnt = __builtin_popcount(s);
    if (cnt == 0) return RingTraits<R>::one();
    if (cnt % 2) return RingTraits<R>::zero();
    auto it = memo.find(s);
    if (it != memo.end()) return it->second;
    const int last = 31 - __builtin_clz(s);
    R acc = RingTraits<R>::zero();
    int pos = 0;
    for (int j = 0; j < last; ++j) {
      if (!(s & (1u << j))) continue;
      const R& e = m(j, last);
      if (!RingTraits<R>::is_zero(e)) {
        R sub = self(self, s & ~((1u << j) | (1u << last)));
        R term = e * sub;
        if (pos % 2) acc -= term;
        else acc += term;
      }
      ++pos;
    }
    memo.emplace(s, acc);
    return acc;
  };
  return rec(rec, mask);
}

template <class R>
R pfaffian(const SkewMatrix<R>& sm) {
  const int n = sm.m.rows();
  if (n == 0) return RingTraits<R>::one();
  if (n % 2) return RingTraits<R>::zero();
  return pfaffian_positions(sm.m, (1u << n) - 1);
}

// Pfaffian of the principal submatrix on the rows/columns whose labels lie in
// K (positions keep the matrix's own order).  Throws BadIndex on an unknown
// label.
template <class R>
R pfaffian_sub(const SkewMatrix<R>& sm, std::span<const int> K) {
  std::uint32_t mask = 0;
  for (int label : K) mask |= 1u << sm.m.row_of_label(label);
  return pfaffian_positions(sm.m, mask);
}

}  // namespace satake
