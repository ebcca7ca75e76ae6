#include "bnsr/smith.hpp"

#include <doctest.h>

#include <random>

using namespace bnsr;

namespace {

IntMatrix product(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      BigInt acc(0);
      for (Eigen::Index k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
      out(i, j) = acc;
    }
  return out;
}

bool same(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

// U M V = D, unimodular U and V, diagonal D with a divisibility chain.
void check_snf(const IntMatrix& m) {
  const auto f = smith_normal_form(m);
  REQUIRE(same(product(product(f.U, m), f.V), f.D));
  CHECK(abs_value(determinant(f.U)) == 1);
  CHECK(abs_value(determinant(f.V)) == 1);
  for (Eigen::Index i = 0; i < f.D.rows(); ++i)
    for (Eigen::Index j = 0; j < f.D.cols(); ++j)
      if (i != j) CHECK(f.D(i, j) == 0);
  const auto d = f.diagonal();
  for (std::size_t i = 0; i + 1 < d.size(); ++i) {
    CHECK(d[i] >= 0);
    if (d[i] == 0) CHECK(d[i + 1] == 0);
    else CHECK(d[i + 1] % d[i] == 0);
  }
}

}  // namespace

TEST_SUITE("smith") {
  TEST_CASE("diag(2,3) has invariant factors 1 and 6") {
    IntMatrix m(2, 2);
    m << 2, 0, 0, 3;
    CHECK(smith_normal_form(m).diagonal() == std::vector<BigInt>{1, 6});
    check_snf(m);
  }

  TEST_CASE("identity and zero") {
    IntMatrix id(3, 3);
    id.setIdentity();
    CHECK(same(smith_normal_form(id).D, id));
    IntMatrix z(1, 1);
    z(0, 0) = 0;
    CHECK(smith_normal_form(z).D(0, 0) == 0);
  }

  TEST_CASE("postconditions on random rectangular matrices") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> entry(-6, 6), dim(1, 5);
    for (int t = 0; t < 300; ++t) {
      IntMatrix m(dim(rng), dim(rng));
      for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = entry(rng);
      check_snf(m);
    }
  }

  TEST_CASE("big entries stay exact") {
    IntMatrix m(2, 2);
    m << BigInt("123456789012345678901234567890"), 7, 3, BigInt("98765432109876543210");
    check_snf(m);
  }

  TEST_CASE("cokernel and rank") {
    IntMatrix m(3, 2);
    m << 2, 0, 0, 4, 0, 0;
    const auto inv = cokernel(m);
    CHECK(inv.rank == 1);
    CHECK(inv.torsion == std::vector<BigInt>{2, 4});
    CHECK_FALSE(inv.order().has_value());
    CHECK(smith_rank(m) == 2);
    IntMatrix sq(2, 2);
    sq << 2, 1, 1, 1;
    CHECK(cokernel(sq).order() == BigInt(1));
  }
}
