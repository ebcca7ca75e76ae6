#pragma once

#include "bnsr/direction.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace bnsr {

/// C = { x in R^m : <x, f> <= 0 for every normal f }.
struct RationalCone {
  Eigen::Index ambient_dim = 0;
  std::vector<Direction> normals;  // primitive, sorted, deduplicated

  RationalCone(Eigen::Index m, std::vector<Direction> fs);
  bool contains(const SmallVector& x) const;
};

/// Lineality basis plus extreme rays modulo the lineality space.
struct ConeGenerators {
  std::vector<IntVector> lines;
  std::vector<IntVector> rays;
  Eigen::Index dimension = 0;
};

struct ConeShape {
  enum class Kind { Trivial, SingleRay, Line, HigherDimensional };
  Kind kind = Kind::Trivial;
  std::optional<Direction> direction;  // SingleRay / Line only
  Eigen::Index dimension = 0;

  bool operator==(const ConeShape&) const = default;
};

inline constexpr Eigen::Index kMaxConeDimension = 8;

class DimensionCapExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Double description with exact integers. Throws DimensionCapExceeded for m > 8.
ConeGenerators cone_generators(const RationalCone& c);

ConeShape cone_rays(const RationalCone& c);

/// Every point of `inner` satisfies every inequality of `outer`.
bool cone_subset(const RationalCone& inner, const RationalCone& outer);

const char* to_string(ConeShape::Kind k);

}  // namespace bnsr
