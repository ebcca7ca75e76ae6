#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <cstdint>
#include <numeric>
#include <string>

namespace bnsr {

/// Arbitrary-precision integer used wherever coefficient growth is possible.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<BigInt>;
using IntVector = Vector<BigInt>;
using SmallMatrix = Matrix<std::int64_t>;
using SmallVector = Vector<std::int64_t>;

template <typename Scalar>
Scalar abs_value(const Scalar& x) {
  return x < Scalar(0) ? Scalar(-x) : x;
}

template <typename Scalar>
Scalar gcd_value(Scalar a, Scalar b) {
  a = abs_value(a);
  b = abs_value(b);
  while (b != Scalar(0)) {
    Scalar r = a % b;
    a = b;
    b = r;
  }
  return a;
}

/// gcd of all entries; zero for the zero vector.
template <typename Derived>
typename Derived::Scalar content(const Eigen::MatrixBase<Derived>& v) {
  using Scalar = typename Derived::Scalar;
  Scalar g(0);
  for (Eigen::Index i = 0; i < v.size(); ++i) g = gcd_value(g, Scalar(v(i)));
  return g;
}

/// Divides out the content. The zero vector is returned unchanged.
template <typename Derived>
Vector<typename Derived::Scalar> primitive_part(const Eigen::MatrixBase<Derived>& v) {
  using Scalar = typename Derived::Scalar;
  Vector<Scalar> out = v;
  Scalar g = content(v);
  if (g > Scalar(1))
    for (Eigen::Index i = 0; i < out.size(); ++i) out(i) /= g;
  return out;
}

template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar dot(const Eigen::MatrixBase<DerivedA>& a,
                              const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  Scalar acc(0);
  for (Eigen::Index i = 0; i < a.size(); ++i) acc += Scalar(a(i)) * Scalar(b(i));
  return acc;
}

/// Fraction-free (Bareiss) determinant; exact for integer scalars.
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("determinant: matrix is not square");
  if (n == 0) return Scalar(1);
  Matrix<Scalar> a = m;
  Scalar sign(1), prev(1);
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == Scalar(0)) {
      Eigen::Index swap = k + 1;
      while (swap < n && a(swap, k) == Scalar(0)) ++swap;
      if (swap == n) return Scalar(0);
      a.row(k).swap(a.row(swap));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

/// Rank over the rationals by fraction-free elimination.
template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  Matrix<Scalar> a = m;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < a.cols() && r < a.rows(); ++c) {
    Eigen::Index p = r;
    while (p < a.rows() && a(p, c) == Scalar(0)) ++p;
    if (p == a.rows()) continue;
    a.row(r).swap(a.row(p));
    for (Eigen::Index i = r + 1; i < a.rows(); ++i) {
      if (a(i, c) == Scalar(0)) continue;
      Scalar f = a(i, c), piv = a(r, c);
      for (Eigen::Index j = c; j < a.cols(); ++j) a(i, j) = a(i, j) * piv - a(r, j) * f;
      Scalar g = content(a.row(i).transpose());
      if (g > Scalar(1)) a.row(i) /= g;
    }
    ++r;
  }
  return r;
}

template <typename To, typename From>
Matrix<To> cast_matrix(const Matrix<From>& m) {
  Matrix<To> out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = static_cast<To>(m(i, j));
  return out;
}

inline std::string to_string(const BigInt& x) { return x.str(); }

}  // namespace bnsr
