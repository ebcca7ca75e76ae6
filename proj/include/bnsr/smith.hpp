#pragma once

#include "bnsr/integer.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace bnsr {

/// U * M * V == D with U, V unimodular and D diagonal, d_i | d_{i+1}, d_i >= 0.
template <typename Scalar>
struct SmithForm {
  Matrix<Scalar> U;
  Matrix<Scalar> D;
  Matrix<Scalar> V;

  std::vector<Scalar> diagonal() const {
    std::vector<Scalar> out;
    for (Eigen::Index i = 0; i < std::min(D.rows(), D.cols()); ++i) out.push_back(D(i, i));
    return out;
  }
};

namespace detail {

template <typename Scalar>
void swap_rows(Matrix<Scalar>& D, Matrix<Scalar>& U, Eigen::Index a, Eigen::Index b) {
  if (a == b) return;
  D.row(a).swap(D.row(b));
  U.row(a).swap(U.row(b));
}

template <typename Scalar>
void swap_cols(Matrix<Scalar>& D, Matrix<Scalar>& V, Eigen::Index a, Eigen::Index b) {
  if (a == b) return;
  D.col(a).swap(D.col(b));
  V.col(a).swap(V.col(b));
}

// row_dst += f * row_src on both D and U
template <typename Scalar>
void add_row(Matrix<Scalar>& D, Matrix<Scalar>& U, Eigen::Index dst, Eigen::Index src,
             const Scalar& f) {
  for (Eigen::Index j = 0; j < D.cols(); ++j) D(dst, j) += f * D(src, j);
  for (Eigen::Index j = 0; j < U.cols(); ++j) U(dst, j) += f * U(src, j);
}

template <typename Scalar>
void add_col(Matrix<Scalar>& D, Matrix<Scalar>& V, Eigen::Index dst, Eigen::Index src,
             const Scalar& f) {
  for (Eigen::Index i = 0; i < D.rows(); ++i) D(i, dst) += f * D(i, src);
  for (Eigen::Index i = 0; i < V.rows(); ++i) V(i, dst) += f * V(i, src);
}

}  // namespace detail

/// Smith normal form by repeated minimal-|entry| pivoting.
template <typename Scalar>
SmithForm<Scalar> smith_normal_form(const Matrix<Scalar>& M) {
  using detail::add_col;
  using detail::add_row;
  const Eigen::Index rows = M.rows(), cols = M.cols();
  SmithForm<Scalar> f{Matrix<Scalar>::Identity(rows, rows), M,
                      Matrix<Scalar>::Identity(cols, cols)};
  Matrix<Scalar>& D = f.D;
  const Eigen::Index n = std::min(rows, cols);

  for (Eigen::Index t = 0; t < n; ++t) {
    while (true) {
      // minimal nonzero pivot of the trailing block
      Eigen::Index pi = -1, pj = -1;
      Scalar best(0);
      for (Eigen::Index i = t; i < rows; ++i)
        for (Eigen::Index j = t; j < cols; ++j) {
          if (D(i, j) == Scalar(0)) continue;
          Scalar a = abs_value(D(i, j));
          if (pi < 0 || a < best) {
            best = a;
            pi = i;
            pj = j;
          }
        }
      if (pi < 0) return f;  // trailing block is zero
      detail::swap_rows(D, f.U, t, pi);
      detail::swap_cols(D, f.V, t, pj);

      bool dirty = false;
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        if (D(i, t) == Scalar(0)) continue;
        Scalar q = D(i, t) / D(t, t);
        if (q != Scalar(0)) add_row(D, f.U, i, t, Scalar(-q));
        if (D(i, t) != Scalar(0)) dirty = true;
      }
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        if (D(t, j) == Scalar(0)) continue;
        Scalar q = D(t, j) / D(t, t);
        if (q != Scalar(0)) add_col(D, f.V, j, t, Scalar(-q));
        if (D(t, j) != Scalar(0)) dirty = true;
      }
      if (dirty) continue;

      // divisibility: fold an offending row into row t and go again
      Eigen::Index bad = -1;
      for (Eigen::Index i = t + 1; i < rows && bad < 0; ++i)
        for (Eigen::Index j = t + 1; j < cols; ++j)
          if (D(i, j) % D(t, t) != Scalar(0)) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      add_row(D, f.U, t, bad, Scalar(1));
    }
    if (D(t, t) < Scalar(0)) {
      D.row(t) = -D.row(t);
      f.U.row(t) = -f.U.row(t);
    }
  }
  return f;
}

/// Structure of Z^rows / (column span of M).
struct AbelianInvariants {
  std::size_t rank = 0;
  std::vector<BigInt> torsion;  // invariant factors > 1, divisibility chain

  /// Group order; empty when infinite.
  std::optional<BigInt> order() const {
    if (rank > 0) return std::nullopt;
    BigInt o(1);
    for (const auto& d : torsion) o *= d;
    return o;
  }
  bool operator==(const AbelianInvariants&) const = default;
};

AbelianInvariants cokernel(const IntMatrix& M);

/// Number of nonzero invariant factors (= rank over Q).
std::size_t smith_rank(const IntMatrix& M);

}  // namespace bnsr
