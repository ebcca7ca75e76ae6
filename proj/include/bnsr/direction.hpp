#pragma once

#include "bnsr/integer.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace bnsr {

/// A rational point of the character sphere, stored as a primitive integer
/// vector. Positive rescalings collapse to the same Direction.
class Direction {
 public:
  explicit Direction(const SmallVector& v);
  Direction(std::initializer_list<std::int64_t> v);
  explicit Direction(const std::vector<std::int64_t>& v);

  /// +e_i or -e_i in R^m.
  static Direction unit(Eigen::Index m, Eigen::Index i, int sign = 1);

  const SmallVector& coords() const { return coords_; }
  Eigen::Index dim() const { return coords_.size(); }
  std::int64_t operator[](Eigen::Index i) const { return coords_(i); }
  std::int64_t squared_norm() const { return coords_.squaredNorm(); }
  std::vector<std::int64_t> to_vector() const;

  Direction operator-() const;

  friend bool operator==(const Direction& a, const Direction& b);
  friend bool operator<(const Direction& a, const Direction& b);
  friend bool operator!=(const Direction& a, const Direction& b) { return !(a == b); }

  std::string str() const;

 private:
  SmallVector coords_;
};

inline Direction antipode(const Direction& d) { return -d; }

/// Sorts and removes duplicates.
std::vector<Direction> canonical_points(std::vector<Direction> pts);

}  // namespace bnsr
