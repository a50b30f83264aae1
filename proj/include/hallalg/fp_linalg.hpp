#pragma once

// Dense linear algebra over a prime field F_p.

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hallalg/errors.hpp"

namespace hallalg {

using FpVector = std::vector<int>;

inline int inv_mod(int a, int p) {
  if (a % p == 0) throw std::domain_error("inv_mod: zero has no inverse");
  long t = 0, new_t = 1, r = p, new_r = ((a % p) + p) % p;
  while (new_r != 0) {
    long quot = r / new_r;
    long tmp = t - quot * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - quot * new_r;
    r = new_r;
    new_r = tmp;
  }
  return static_cast<int>((t % p + p) % p);
}

inline bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// p^e as a count, throwing once the cap is passed.
inline std::int64_t checked_power(int p, int e, std::int64_t cap) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) {
    r *= p;
    if (r > cap)
      throw EnumerationTooLarge("enumeration of " + std::to_string(p) + "^" + std::to_string(e) +
                                " elements exceeds cap " + std::to_string(cap));
  }
  return r;
}

class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(int p, int rows, int cols)
      : p_(p), rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, 0) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("FpMatrix: negative shape");
  }
  FpMatrix(int p, const std::vector<std::vector<int>>& rows) : FpMatrix(p, static_cast<int>(rows.size()),
                                                                        rows.empty() ? 0 : static_cast<int>(rows[0].size())) {
    for (int r = 0; r < rows_; ++r) {
      if (static_cast<int>(rows[r].size()) != cols_) throw DimensionMismatch("FpMatrix: ragged rows");
      for (int c = 0; c < cols_; ++c) set(r, c, rows[r][c]);
    }
  }

  static FpMatrix identity(int p, int n) {
    FpMatrix m(p, n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static FpMatrix column(int p, const FpVector& v) {
    FpMatrix m(p, static_cast<int>(v.size()), 1);
    for (int i = 0; i < m.rows_; ++i) m.set(i, 0, v[i]);
    return m;
  }

  int p() const { return p_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  int operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  int& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  void set(int r, int c, long v) { (*this)(r, c) = static_cast<int>(((v % p_) + p_) % p_); }
  const std::vector<int>& data() const { return a_; }

  bool is_zero() const {
    for (int x : a_)
      if (x != 0) return false;
    return true;
  }

  FpVector col(int c) const {
    FpVector v(rows_);
    for (int r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  FpMatrix transpose() const {
    FpMatrix t(p_, cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  FpMatrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
    FpMatrix s(p_, static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) s(static_cast<int>(i), static_cast<int>(j)) = (*this)(rows[i], cols[j]);
    return s;
  }

  friend FpMatrix operator*(const FpMatrix& a, const FpMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("FpMatrix: product shape mismatch");
    FpMatrix c(a.p_, a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        int x = a(i, k);
        if (x == 0) continue;
        for (int j = 0; j < b.cols_; ++j) c(i, j) = (c(i, j) + x * b(k, j)) % a.p_;
      }
    return c;
  }
  friend FpMatrix operator+(const FpMatrix& a, const FpMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("FpMatrix: sum shape mismatch");
    FpMatrix c = a;
    for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] = (c.a_[i] + b.a_[i]) % a.p_;
    return c;
  }
  friend FpMatrix operator-(const FpMatrix& a, const FpMatrix& b) { return a + b.scaled(a.p_ - 1); }
  FpMatrix scaled(int s) const {
    FpMatrix c = *this;
    s = ((s % p_) + p_) % p_;
    for (int& x : c.a_) x = x * s % p_;
    return c;
  }
  friend bool operator==(const FpMatrix& a, const FpMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  FpVector apply(const FpVector& v) const {
    if (static_cast<int>(v.size()) != cols_) throw DimensionMismatch("FpMatrix: vector length mismatch");
    FpVector out(rows_, 0);
    for (int r = 0; r < rows_; ++r) {
      long s = 0;
      for (int c = 0; c < cols_; ++c) s += static_cast<long>((*this)(r, c)) * v[c];
      out[r] = static_cast<int>(s % p_);
    }
    return out;
  }

  // Block matrices are assembled by copying into a larger zero matrix.
  void paste(const FpMatrix& block, int row0, int col0) {
    for (int r = 0; r < block.rows_; ++r)
      for (int c = 0; c < block.cols_; ++c) (*this)(row0 + r, col0 + c) = block(r, c);
  }

  friend std::ostream& operator<<(std::ostream& os, const FpMatrix& m) {
    os << "[";
    for (int r = 0; r < m.rows_; ++r) {
      os << (r ? "; " : "");
      for (int c = 0; c < m.cols_; ++c) os << (c ? " " : "") << m(r, c);
    }
    return os << "]";
  }

 private:
  int p_ = 2;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<int> a_;
};

struct RrefResult {
  FpMatrix reduced;
  int rank = 0;
  std::vector<int> pivots;
};

inline RrefResult rref(const FpMatrix& a) {
  RrefResult out{a, 0, {}};
  FpMatrix& m = out.reduced;
  const int p = m.p();
  int row = 0;
  for (int c = 0; c < m.cols() && row < m.rows(); ++c) {
    int piv = -1;
    for (int r = row; r < m.rows(); ++r)
      if (m(r, c) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int k = 0; k < m.cols(); ++k) std::swap(m(piv, k), m(row, k));
    int inv = inv_mod(m(row, c), p);
    for (int k = c; k < m.cols(); ++k) m(row, k) = m(row, k) * inv % p;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, c) == 0) continue;
      int f = m(r, c);
      for (int k = c; k < m.cols(); ++k) m(r, k) = ((m(r, k) - f * m(row, k)) % p + p) % p;
    }
    out.pivots.push_back(c);
    ++row;
  }
  out.rank = row;
  return out;
}

inline int rank(const FpMatrix& a) { return rref(a).rank; }

inline std::vector<FpVector> kernel_basis(const FpMatrix& a) {
  RrefResult r = rref(a);
  const int p = a.p();
  std::vector<char> is_pivot(a.cols(), 0);
  for (int c : r.pivots) is_pivot[c] = 1;
  std::vector<FpVector> basis;
  for (int free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    FpVector v(a.cols(), 0);
    v[free] = 1;
    for (int i = 0; i < r.rank; ++i) v[r.pivots[i]] = (p - r.reduced(i, free)) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

struct AffineSpace {
  int p = 2;
  FpVector offset;
  std::vector<FpVector> basis;

  int dim() const { return static_cast<int>(basis.size()); }
};

inline std::optional<AffineSpace> solve(const FpMatrix& a, const FpVector& b) {
  if (static_cast<int>(b.size()) != a.rows()) throw DimensionMismatch("solve: right-hand side length mismatch");
  FpMatrix aug(a.p(), a.rows(), a.cols() + 1);
  aug.paste(a, 0, 0);
  for (int r = 0; r < a.rows(); ++r) aug.set(r, a.cols(), b[r]);
  RrefResult r = rref(aug);
  if (!r.pivots.empty() && r.pivots.back() == a.cols()) return std::nullopt;
  AffineSpace s;
  s.p = a.p();
  s.offset.assign(a.cols(), 0);
  for (int i = 0; i < r.rank; ++i) s.offset[r.pivots[i]] = r.reduced(i, a.cols());
  s.basis = kernel_basis(a);
  return s;
}

// Visits every point of the affine space exactly once (odometer order on coordinates).
class AffineEnumerator {
 public:
  AffineEnumerator(const AffineSpace& s, std::int64_t cap) : s_(s), coords_(s.basis.size(), 0) {
    total_ = checked_power(s.p, s.dim(), cap);
  }

  std::int64_t size() const { return total_; }

  bool next(FpVector& out) {
    if (emitted_ == total_) return false;
    if (emitted_ == 0) {
      current_ = s_.offset;
    } else {
      std::size_t i = 0;
      while (true) {
        add_basis(i, 1);
        if (++coords_[i] < s_.p) break;
        coords_[i] = 0;  // wrapped: the p additions returned this coordinate to zero
        ++i;
      }
    }
    ++emitted_;
    out = current_;
    return true;
  }

  const FpVector& coords() const { return coords_; }

 private:
  void add_basis(std::size_t i, int times) {
    for (std::size_t k = 0; k < current_.size(); ++k) current_[k] = (current_[k] + times * s_.basis[i][k]) % s_.p;
  }

  const AffineSpace& s_;
  FpVector coords_;
  FpVector current_;
  std::int64_t total_ = 1;
  std::int64_t emitted_ = 0;
};

inline void for_each_affine(const AffineSpace& s, std::int64_t cap, const std::function<void(const FpVector&)>& fn) {
  AffineEnumerator e(s, cap);
  FpVector v;
  while (e.next(v)) fn(v);
}

// Calls fn on every coordinate vector in F_p^dim.
inline void for_each_coords(int p, int dim, std::int64_t cap, const std::function<void(const FpVector&)>& fn) {
  std::int64_t total = checked_power(p, dim, cap);
  FpVector c(dim, 0);
  for (std::int64_t n = 0; n < total; ++n) {
    fn(c);
    for (int i = 0; i < dim; ++i) {
      if (++c[i] < p) break;
      c[i] = 0;
    }
  }
}

// A subspace of F_p^n kept in reduced echelon form; supports membership,
// coordinates in its echelon basis, and coordinates of the quotient.
class Subspace {
 public:
  Subspace(int p, int n) : p_(p), n_(n) {}
  Subspace(int p, int n, const std::vector<FpVector>& span) : Subspace(p, n) {
    for (const auto& v : span) add(v);
  }

  int p() const { return p_; }
  int ambient() const { return n_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<FpVector>& basis() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  // Residual of v after clearing all pivot coordinates.
  FpVector reduce(FpVector v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      int f = v[pivots_[i]];
      if (f == 0) continue;
      for (int k = 0; k < n_; ++k) v[k] = ((v[k] - f * rows_[i][k]) % p_ + p_) % p_;
    }
    return v;
  }

  bool contains(const FpVector& v) const {
    for (int x : reduce(v))
      if (x != 0) return false;
    return true;
  }

  // Returns true if v enlarged the subspace.
  bool add(const FpVector& v) {
    FpVector r = reduce(v);
    int piv = -1;
    for (int k = 0; k < n_; ++k)
      if (r[k] != 0) {
        piv = k;
        break;
      }
    if (piv < 0) return false;
    int inv = inv_mod(r[piv], p_);
    for (int& x : r) x = x * inv % p_;
    for (auto& row : rows_) {
      int f = row[piv];
      if (f == 0) continue;
      for (int k = 0; k < n_; ++k) row[k] = ((row[k] - f * r[k]) % p_ + p_) % p_;
    }
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
    rows_.insert(rows_.begin() + static_cast<long>(pos), std::move(r));
    pivots_.insert(pivots_.begin() + static_cast<long>(pos), piv);
    return true;
  }

  // Coefficients of v in the echelon basis; v must lie in the subspace.
  FpVector coords(const FpVector& v) const {
    FpVector c(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) c[i] = v[pivots_[i]];
    return c;
  }

  std::vector<int> non_pivots() const {
    std::vector<int> out;
    std::size_t j = 0;
    for (int k = 0; k < n_; ++k) {
      if (j < pivots_.size() && pivots_[j] == k) {
        ++j;
        continue;
      }
      out.push_back(k);
    }
    return out;
  }

  // Coordinates of v modulo the subspace, w.r.t. the standard vectors at non-pivot positions.
  FpVector quotient_coords(const FpVector& v) const {
    FpVector r = reduce(v);
    FpVector out;
    for (int k : non_pivots()) out.push_back(r[k]);
    return out;
  }

 private:
  int p_;
  int n_;
  std::vector<FpVector> rows_;
  std::vector<int> pivots_;
};

// Expresses vectors in the span of a fixed independent family, via an
// invertible square minor chosen once.
class SpanSolver {
 public:
  SpanSolver() = default;
  SpanSolver(int p, int n, const std::vector<FpVector>& family) : p_(p), n_(n), k_(static_cast<int>(family.size())) {
    if (k_ == 0) return;
    FpMatrix g(p, n, k_);
    for (int j = 0; j < k_; ++j)
      for (int i = 0; i < n; ++i) g(i, j) = family[j][i];
    // pivot rows of g are the pivot columns of g^T
    RrefResult rt = rref(g.transpose());
    if (rt.rank != k_) throw std::invalid_argument("SpanSolver: family is not independent");
    rows_ = rt.pivots;
    FpMatrix minor = g.submatrix(rows_, [&] {
      std::vector<int> all(k_);
      for (int j = 0; j < k_; ++j) all[j] = j;
      return all;
    }());
    FpMatrix aug(p, k_, 2 * k_);
    aug.paste(minor, 0, 0);
    aug.paste(FpMatrix::identity(p, k_), 0, k_);
    RrefResult ri = rref(aug);
    inverse_ = FpMatrix(p, k_, k_);
    for (int r = 0; r < k_; ++r)
      for (int c = 0; c < k_; ++c) inverse_(r, c) = ri.reduced(r, k_ + c);
  }

  int size() const { return k_; }

  FpVector coords(const FpVector& v) const {
    FpVector sel(k_);
    for (int i = 0; i < k_; ++i) sel[i] = v[rows_[i]];
    if (k_ == 0) return sel;
    return inverse_.apply(sel);
  }

 private:
  int p_ = 2;
  int n_ = 0;
  int k_ = 0;
  std::vector<int> rows_;
  FpMatrix inverse_;
};

}  // namespace hallalg
