#pragma once

#include <cassert>
#include <cstddef>
#include <optional>
#include <vector>

#include "lieq/rational.hpp"

namespace lieq {

using Vec = std::vector<Rat>;

inline Vec zero_vec(std::size_t n) { return Vec(n, Rat(0)); }

inline bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

inline Vec add(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vec sub(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vec scale(const Rat& c, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline void axpy(const Rat& c, const Vec& x, Vec& y) {
  assert(x.size() == y.size());
  if (c == 0) return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) y[i] += c * x[i];
}

inline Rat dot(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Rat s(0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

// Dense rational matrix, row-major.
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(std::size_t r, std::size_t c) : rows_(r), cols_(c), data_(r * c, Rat(0)) {}

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static Mat from_rows(const std::vector<Vec>& rows) {
    if (rows.empty()) return Mat();
    Mat m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      assert(rows[i].size() == m.cols_);
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec row(std::size_t i) const {
    return Vec(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }
  void append_row(const Vec& v) {
    assert(rows_ == 0 || v.size() == cols_);
    if (rows_ == 0) cols_ = v.size();
    data_.insert(data_.end(), v.begin(), v.end());
    ++rows_;
  }

  Mat transpose() const {
    Mat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Vec apply(const Vec& v) const {
    assert(v.size() == cols_);
    Vec r(rows_, Rat(0));
    for (std::size_t i = 0; i < rows_; ++i) {
      Rat s(0);
      for (std::size_t j = 0; j < cols_; ++j) {
        const Rat& a = (*this)(i, j);
        if (a != 0 && v[j] != 0) s += a * v[j];
      }
      r[i] = s;
    }
    return r;
  }

  Mat mul(const Mat& o) const {
    assert(cols_ == o.rows_);
    Mat r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Rat& a = (*this)(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j)
          if (o(k, j) != 0) r(i, j) += a * o(k, j);
      }
    return r;
  }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Rat> data_;
};

// In-place reduced row echelon form; returns pivot column indices.
inline std::vector<std::size_t> rref(Mat& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = c; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Rat inv = Rat(1) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j)
      if (m(r, j) != 0) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rat f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (m(r, j) != 0) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline std::size_t rank(Mat m) { return rref(m).size(); }

// Basis of the right null space {x : m x = 0}.
inline std::vector<Vec> kernel(Mat m) {
  auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    Vec x = zero_vec(m.cols());
    x[c] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -m(i, c);
    basis.push_back(std::move(x));
  }
  return basis;
}

// One solution of A x = b, if any.
inline std::optional<Vec> solve(const Mat& a, const Vec& b) {
  assert(b.size() == a.rows());
  Mat aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  Vec x = zero_vec(a.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, a.cols());
  return x;
}

inline std::optional<Mat> inverse(const Mat& a) {
  assert(a.rows() == a.cols());
  std::size_t n = a.rows();
  Mat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  auto pivots = rref(aug);
  if (pivots.size() != n || pivots[n - 1] != n - 1) return std::nullopt;
  Mat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

// Is v in the row span of basis?
inline bool in_span(const std::vector<Vec>& basis, const Vec& v) {
  if (is_zero(v)) return true;
  Mat m = Mat::from_rows(basis);
  std::size_t r0 = rank(m);
  m.append_row(v);
  return rank(m) == r0;
}

// Row-reduced basis of the span (canonical form, duplicates removed).
inline std::vector<Vec> reduced_basis(const std::vector<Vec>& vs) {
  if (vs.empty()) return {};
  Mat m = Mat::from_rows(vs);
  auto pivots = rref(m);
  std::vector<Vec> out;
  for (std::size_t i = 0; i < pivots.size(); ++i) out.push_back(m.row(i));
  return out;
}

// Basis of {x : <x, b>_gram = 0 for all b in basis} inside the full space.
inline std::vector<Vec> orth_complement(const std::vector<Vec>& basis, const Mat& gram) {
  if (basis.empty()) {
    std::vector<Vec> all;
    for (std::size_t i = 0; i < gram.rows(); ++i) {
      Vec e = zero_vec(gram.rows());
      e[i] = 1;
      all.push_back(std::move(e));
    }
    return all;
  }
  Mat constraints(basis.size(), gram.cols());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    Vec gb = gram.apply(basis[i]);
    for (std::size_t j = 0; j < gram.cols(); ++j) constraints(i, j) = gb[j];
  }
  return kernel(constraints);
}

// Basis of span(a) ∩ span(b).
inline std::vector<Vec> subspace_intersection(const std::vector<Vec>& a,
                                              const std::vector<Vec>& b) {
  if (a.empty() || b.empty()) return {};
  // Zassenhaus: row-reduce [A|A; B|0], intersection read off the lower block.
  std::size_t n = a[0].size();
  Mat m(a.size() + b.size(), 2 * n);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = m(i, n + j) = a[i][j];
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) m(a.size() + i, j) = b[i][j];
  auto pivots = rref(m);
  std::vector<Vec> out;
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] < n) continue;
    Vec r = m.row(i);
    Vec v(r.begin() + n, r.end());
    if (!is_zero(v)) out.push_back(std::move(v));
  }
  return out;
}

}  // namespace lieq
