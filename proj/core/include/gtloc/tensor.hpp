#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace gtloc {

/// Dense row-major matrix. Training runs on Mat<float> (the Tensor2 alias);
/// Mat<double> is the shadow precision used by gradient checks and the
/// acceptance oracles.
template <class S>
struct Mat {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<S> data;  // rows * cols, row-major

  Mat() = default;
  Mat(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, S(0)) {}

  S* row(std::size_t r) { return data.data() + r * cols; }
  const S* row(std::size_t r) const { return data.data() + r * cols; }
  std::span<S> row_span(std::size_t r) { return {row(r), cols}; }
  std::span<const S> row_span(std::size_t r) const { return {row(r), cols}; }

  S& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const S& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

  std::size_t size() const { return data.size(); }
  bool empty() const { return data.empty(); }
  void fill(S v) { data.assign(data.size(), v); }

  bool same_shape(const Mat& o) const { return rows == o.rows && cols == o.cols; }
};

using Tensor2 = Mat<float>;

/// out = a * b, shapes (m,k)*(k,n).
template <class S>
void matmul(const Mat<S>& a, const Mat<S>& b, Mat<S>& out);

/// out = a * b^T, shapes (m,k)*(n,k).
template <class S>
void matmul_nt(const Mat<S>& a, const Mat<S>& b, Mat<S>& out);

/// out = a^T * b, shapes (k,m)*(k,n).
template <class S>
void matmul_tn(const Mat<S>& a, const Mat<S>& b, Mat<S>& out);

template <class S>
bool all_finite(const Mat<S>& m);

template <class To, class From>
Mat<To> cast_mat(const Mat<From>& m) {
  Mat<To> out(m.rows, m.cols);
  for (std::size_t i = 0; i < m.data.size(); ++i) out.data[i] = static_cast<To>(m.data[i]);
  return out;
}

/// Plain fixed-order dot product; shared by retrieval and its scan oracle so
/// that ranks and similarities compare bit-exactly.
template <class S>
inline S dot(std::span<const S> a, std::span<const S> b) {
  S acc = S(0);
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

}  // namespace gtloc
