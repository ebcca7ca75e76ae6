#include "bnsr/direction.hpp"

#include <algorithm>
#include <stdexcept>

namespace bnsr {

Direction::Direction(const SmallVector& v) : coords_(primitive_part(v)) {
  if (content(v) == 0) throw std::invalid_argument("Direction: zero vector");
}

Direction::Direction(std::initializer_list<std::int64_t> v)
    : Direction(std::vector<std::int64_t>(v)) {}

Direction::Direction(const std::vector<std::int64_t>& v)
    : Direction(SmallVector(Eigen::Map<const SmallVector>(v.data(),
                                                          static_cast<Eigen::Index>(v.size())))) {}

Direction Direction::unit(Eigen::Index m, Eigen::Index i, int sign) {
  if (i < 0 || i >= m) throw std::out_of_range("Direction::unit: index out of range");
  SmallVector v = SmallVector::Zero(m);
  v(i) = sign < 0 ? -1 : 1;
  return Direction(v);
}

std::vector<std::int64_t> Direction::to_vector() const {
  return {coords_.data(), coords_.data() + coords_.size()};
}

Direction Direction::operator-() const { return Direction(SmallVector(-coords_)); }

bool operator==(const Direction& a, const Direction& b) {
  return a.dim() == b.dim() && a.coords_ == b.coords_;
}

bool operator<(const Direction& a, const Direction& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  return std::lexicographical_compare(a.coords_.data(), a.coords_.data() + a.dim(),
                                      b.coords_.data(), b.coords_.data() + b.dim());
}

std::string Direction::str() const {
  std::string s = "(";
  for (Eigen::Index i = 0; i < dim(); ++i) {
    if (i) s += ",";
    s += std::to_string(coords_(i));
  }
  return s + ")";
}

std::vector<Direction> canonical_points(std::vector<Direction> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

}  // namespace bnsr
