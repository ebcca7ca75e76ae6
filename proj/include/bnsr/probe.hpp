#pragma once

#include "bnsr/direction.hpp"
#include "bnsr/group.hpp"

#include <boost/rational.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bnsr {

using Rational = boost::rational<std::int64_t>;

std::string to_string(const Rational& q);

class UnsupportedAtom : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Finite window onto the Cayley graph of an atom with a solvable normal form.
/// Vertex keys:
///   Z^k     exponent vector
///   F(n)    reduced word, letters +-(i+1)
///   BS(1,n) (X, k) for the element a^x t^k with x = X / n^radius in Z[1/n];
///           presentation t^-1 a t = a^n, so a at level k moves x by n^-k
///   Klein   (p, q) for a^p b^q, presentation a b a b^-1
struct BallGraph {
  GroupAtom atom;
  int radius = 0;
  int rank = 0;  // dimension of the height space
  std::vector<std::vector<std::int64_t>> keys;
  std::vector<std::vector<std::int64_t>> heights;
  std::vector<int> dist;
  std::vector<std::pair<int, int>> edges;  // one entry per (vertex, positive generator) inside the ball
  std::vector<std::vector<std::int64_t>> edge_steps;  // pi(generator) for each edge

  std::size_t size() const { return keys.size(); }
  bool on_shell(int v) const { return dist[v] == radius; }
};

constexpr std::size_t kMaxBallVertices = 2'000'000;
constexpr int kMaxBallRadius = 16;

BallGraph enumerate_ball(const GroupAtom& atom, int radius, std::size_t vertex_cap = kMaxBallVertices);

/// Edges where h(head) - h(tail) != pi(generator); empty when heights are additive.
std::vector<std::size_t> height_defects(const BallGraph& ball);

/// <h, gamma> >= s |gamma|, exact.
bool in_halfspace(const std::vector<std::int64_t>& h, const Direction& gamma, const Rational& s);
/// Truncated cone of half-angle arctan(1/s) about gamma intersected with the half-space;
/// for s <= 0 the angle is pi/2 (the half-space through the origin).
bool in_cone(const std::vector<std::int64_t>& h, const Direction& gamma, const Rational& s);

enum class ProbeMode { HalfSpace, TruncatedCone };
const char* to_string(ProbeMode m);

/// Sorted vertex indices of the sublevel set.
std::vector<int> halfspace_subgraph(const BallGraph& ball, const Direction& gamma, const Rational& s);
std::vector<int> cone_subgraph(const BallGraph& ball, const Direction& gamma, const Rational& s);
std::vector<int> sublevel(const BallGraph& ball, const Direction& gamma, const Rational& s, ProbeMode mode);

struct ProbeConfig {
  int radius = 6;
  std::vector<Rational> grid{0, 1, 2, 3};
  Rational lambda_max{2};
  Rational lambda_step{1, 2};
  ProbeMode mode = ProbeMode::HalfSpace;
};

struct ProbeRow {
  Rational s;
  std::size_t vertices = 0;    // |sublevel(s)|
  std::size_t components = 0;  // groups of sublevel(s) after retreat, shell-only groups excluded
  std::optional<Rational> lambda;
  bool shell_touched = false;
  bool reliable = true;  // false when every sublevel vertex sits on the shell
};

enum class Evidence { SupportsMembership, SupportsNonMembership, Inconclusive };
const char* to_string(Evidence e);

struct ProbeReport {
  Direction gamma;
  ProbeMode mode = ProbeMode::HalfSpace;
  int radius = 0;
  std::vector<ProbeRow> rows;
  Evidence evidence = Evidence::Inconclusive;
  std::vector<std::string> notes;
};

ProbeReport connectivity_probe(const BallGraph& ball, const Direction& gamma, const ProbeConfig& cfg);

struct ScanRow {
  ProbeReport report;
  std::optional<bool> catalog_member;  // Sigma^1 (HalfSpace) or Omega^1 (TruncatedCone)
  bool warn = false;
};

std::vector<ScanRow> probe_direction_scan(const GroupAtom& atom, const std::vector<Direction>& dirs,
                                          const ProbeConfig& cfg);

/// +-e_i for each coordinate, plus the diagonals (+-1, +-1) when rank == 2.
std::vector<Direction> default_probe_directions(int rank);

}  // namespace bnsr
