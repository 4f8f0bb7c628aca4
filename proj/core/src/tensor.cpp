#include "gtloc/tensor.hpp"

#include <stdexcept>

#include <Eigen/Core>

namespace gtloc {

namespace {

template <class S>
using EMat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

template <class S>
Eigen::Map<const EMat<S>> emap(const Mat<S>& m) {
  return {m.data.data(), static_cast<Eigen::Index>(m.rows), static_cast<Eigen::Index>(m.cols)};
}

template <class S>
Eigen::Map<EMat<S>> emap(Mat<S>& m) {
  return {m.data.data(), static_cast<Eigen::Index>(m.rows), static_cast<Eigen::Index>(m.cols)};
}

void check(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

template <class S>
void matmul(const Mat<S>& a, const Mat<S>& b, Mat<S>& out) {
  check(a.cols == b.rows, "matmul: inner dimensions differ");
  out = Mat<S>(a.rows, b.cols);
  emap(out).noalias() = emap(a) * emap(b);
}

template <class S>
void matmul_nt(const Mat<S>& a, const Mat<S>& b, Mat<S>& out) {
  check(a.cols == b.cols, "matmul_nt: inner dimensions differ");
  out = Mat<S>(a.rows, b.rows);
  emap(out).noalias() = emap(a) * emap(b).transpose();
}

template <class S>
void matmul_tn(const Mat<S>& a, const Mat<S>& b, Mat<S>& out) {
  check(a.rows == b.rows, "matmul_tn: inner dimensions differ");
  out = Mat<S>(a.cols, b.cols);
  emap(out).noalias() = emap(a).transpose() * emap(b);
}

template <class S>
bool all_finite(const Mat<S>& m) {
  return emap(m).allFinite();
}

template void matmul<float>(const Mat<float>&, const Mat<float>&, Mat<float>&);
template void matmul<double>(const Mat<double>&, const Mat<double>&, Mat<double>&);
template void matmul_nt<float>(const Mat<float>&, const Mat<float>&, Mat<float>&);
template void matmul_nt<double>(const Mat<double>&, const Mat<double>&, Mat<double>&);
template void matmul_tn<float>(const Mat<float>&, const Mat<float>&, Mat<float>&);
template void matmul_tn<double>(const Mat<double>&, const Mat<double>&, Mat<double>&);
template bool all_finite<float>(const Mat<float>&);
template bool all_finite<double>(const Mat<double>&);

}  // namespace gtloc
