#include "bnsr/probe.hpp"

#include "bnsr/catalog.hpp"
#include "bnsr/union_find.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <set>

namespace bnsr {

std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

const char* to_string(ProbeMode m) {
  return m == ProbeMode::HalfSpace ? "HalfSpace" : "TruncatedCone";
}

const char* to_string(Evidence e) {
  switch (e) {
    case Evidence::SupportsMembership: return "SupportsMembership";
    case Evidence::SupportsNonMembership: return "SupportsNonMembership";
    case Evidence::Inconclusive: return "Inconclusive";
  }
  return "?";
}

namespace {

using Key = std::vector<std::int64_t>;
using K = GroupAtom::Kind;

struct Model {
  int rank = 0;
  int gens = 0;
  Key identity;
  std::function<Key(const Key&, int gen, int sign)> step;
  std::function<Key(const Key&)> height;
  std::vector<Key> pi;  // image of each generator
};

std::int64_t checked_pow(std::int64_t base, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > std::numeric_limits<std::int64_t>::max() / base)
      throw std::overflow_error("ball coordinates overflow 64-bit integers; lower the radius");
    r *= base;
  }
  return r;
}

Key unit(int m, int i) {
  Key v(m, 0);
  v[i] = 1;
  return v;
}

Model model_for(const GroupAtom& atom, int radius) {
  Model md;
  switch (atom.kind) {
    case K::FreeAbelian: {
      const int k = atom.param;
      md.rank = md.gens = k;
      md.identity = Key(k, 0);
      md.step = [](const Key& x, int g, int sign) {
        Key y = x;
        y[g] += sign;
        return y;
      };
      md.height = [](const Key& x) { return x; };
      for (int i = 0; i < k; ++i) md.pi.push_back(unit(k, i));
      return md;
    }
    case K::Free: {
      const int n = atom.param;
      md.rank = md.gens = n;
      md.step = [](const Key& w, int g, int sign) {
        const std::int64_t letter = sign * (g + 1);
        Key y = w;
        if (!y.empty() && y.back() == -letter)
          y.pop_back();
        else
          y.push_back(letter);
        return y;
      };
      md.height = [n](const Key& w) {
        Key h(n, 0);
        for (auto l : w) h[std::abs(l) - 1] += l > 0 ? 1 : -1;
        return h;
      };
      for (int i = 0; i < n; ++i) md.pi.push_back(unit(n, i));
      return md;
    }
    case K::BaumslagSolitar: {
      const std::int64_t n = atom.param;
      // a-steps are n^(radius - k) in units of n^-radius, k in [-radius, radius]
      std::vector<std::int64_t> steps(2 * radius + 1);
      for (int e = 0; e <= 2 * radius; ++e) steps[e] = checked_pow(n, e);
      if (steps.back() > std::numeric_limits<std::int64_t>::max() / (radius + 1))
        throw std::overflow_error("ball coordinates overflow 64-bit integers; lower the radius");
      md.rank = 1;
      md.gens = 2;  // a, t
      md.identity = {0, 0};
      md.step = [steps, radius](const Key& x, int g, int sign) {
        Key y = x;
        if (g == 1) {
          y[1] += sign;
        } else {
          y[0] += sign * steps[radius - x[1]];
        }
        return y;
      };
      md.height = [](const Key& x) { return Key{x[1]}; };
      md.pi = {{0}, {1}};
      return md;
    }
    case K::KleinBottle:
      md.rank = 1;
      md.gens = 2;  // a, b
      md.identity = {0, 0};
      md.step = [](const Key& x, int g, int sign) {
        Key y = x;
        if (g == 1)
          y[1] += sign;
        else
          y[0] += sign * ((x[1] % 2 == 0) ? 1 : -1);
        return y;
      };
      md.height = [](const Key& x) { return Key{x[1]}; };
      md.pi = {{0}, {1}};
      return md;
    default:
      throw UnsupportedAtom("probe: no normal form implemented for " + atom.name());
  }
}

// Signed comparison of d against c*sqrt(n2) with c rational: returns d >= c*sqrt(n2).
bool at_least(__int128 d, const Rational& c, std::int64_t n2) {
  const __int128 p = c.numerator(), q = c.denominator();
  // d >= (p/q) sqrt(n2)  <=>  q d >= p sqrt(n2)
  const __int128 lhs = q * d;
  if (p <= 0) {
    if (lhs >= 0) return true;
    return lhs * lhs <= p * p * n2;
  }
  if (lhs <= 0) return false;
  return lhs * lhs >= p * p * n2;
}

__int128 dot(const std::vector<std::int64_t>& h, const Direction& g) {
  if (static_cast<Eigen::Index>(h.size()) != g.dim())
    throw std::invalid_argument("probe: direction has dimension " + std::to_string(g.dim()) +
                                ", heights have " + std::to_string(h.size()));
  __int128 d = 0;
  for (std::size_t i = 0; i < h.size(); ++i) d += static_cast<__int128>(h[i]) * g[i];
  return d;
}

}  // namespace

BallGraph enumerate_ball(const GroupAtom& atom, int radius, std::size_t vertex_cap) {
  if (radius < 2 || radius > kMaxBallRadius)
    throw std::invalid_argument("probe: radius must be in [2, " + std::to_string(kMaxBallRadius) + "]");
  const Model md = model_for(atom, radius);

  BallGraph b;
  b.atom = atom;
  b.radius = radius;
  b.rank = md.rank;
  std::map<Key, int> index;
  auto add = [&](Key k, int d) {
    if (b.keys.size() >= vertex_cap)
      throw std::length_error("probe: ball exceeds " + std::to_string(vertex_cap) + " vertices");
    index.emplace(k, static_cast<int>(b.keys.size()));
    b.heights.push_back(md.height(k));
    b.keys.push_back(std::move(k));
    b.dist.push_back(d);
  };
  add(md.identity, 0);
  for (std::size_t i = 0; i < b.keys.size(); ++i) {
    if (b.dist[i] == radius) continue;
    for (int g = 0; g < md.gens; ++g)
      for (int sign : {1, -1}) {
        Key y = md.step(b.keys[i], g, sign);
        if (!index.count(y)) add(std::move(y), b.dist[i] + 1);
      }
  }
  for (std::size_t i = 0; i < b.keys.size(); ++i)
    for (int g = 0; g < md.gens; ++g) {
      auto it = index.find(md.step(b.keys[i], g, 1));
      if (it == index.end()) continue;
      b.edges.emplace_back(static_cast<int>(i), it->second);
      b.edge_steps.push_back(md.pi[g]);
    }
  return b;
}

std::vector<std::size_t> height_defects(const BallGraph& ball) {
  std::vector<std::size_t> bad;
  for (std::size_t e = 0; e < ball.edges.size(); ++e) {
    const auto& [u, v] = ball.edges[e];
    for (int i = 0; i < ball.rank; ++i)
      if (ball.heights[v][i] - ball.heights[u][i] != ball.edge_steps[e][i]) {
        bad.push_back(e);
        break;
      }
  }
  return bad;
}

bool in_halfspace(const std::vector<std::int64_t>& h, const Direction& gamma, const Rational& s) {
  return at_least(dot(h, gamma), s, gamma.squared_norm());
}

bool in_cone(const std::vector<std::int64_t>& h, const Direction& gamma, const Rational& s) {
  const __int128 d = dot(h, gamma);
  if (s <= 0) return d >= 0;
  if (!at_least(d, s, gamma.squared_norm())) return false;
  __int128 hh = 0;
  for (auto x : h) hh += static_cast<__int128>(x) * x;
  const __int128 p = s.numerator(), q = s.denominator();
  // tan^2(angle) <= 1/s^2
  return p * p * (hh * gamma.squared_norm() - d * d) <= q * q * d * d;
}

std::vector<int> sublevel(const BallGraph& ball, const Direction& gamma, const Rational& s,
                          ProbeMode mode) {
  std::vector<int> out;
  for (std::size_t v = 0; v < ball.size(); ++v) {
    const bool in = mode == ProbeMode::HalfSpace ? in_halfspace(ball.heights[v], gamma, s)
                                                 : in_cone(ball.heights[v], gamma, s);
    if (in) out.push_back(static_cast<int>(v));
  }
  return out;
}

std::vector<int> halfspace_subgraph(const BallGraph& ball, const Direction& gamma, const Rational& s) {
  return sublevel(ball, gamma, s, ProbeMode::HalfSpace);
}

std::vector<int> cone_subgraph(const BallGraph& ball, const Direction& gamma, const Rational& s) {
  return sublevel(ball, gamma, s, ProbeMode::TruncatedCone);
}

namespace {

// Groups of `core` by connected component of the subgraph induced on `within`,
// dropping groups made only of shell vertices.
std::size_t relevant_groups(const BallGraph& ball, const std::vector<int>& core,
                            const std::vector<int>& within) {
  std::vector<bool> mask(ball.size(), false);
  for (int v : within) mask[v] = true;
  UnionFind uf(ball.size());
  for (const auto& [u, v] : ball.edges)
    if (mask[u] && mask[v]) uf.unite(u, v);
  std::map<std::size_t, bool> groups;  // root -> has an interior vertex
  for (int v : core) groups[uf.find(v)] |= !ball.on_shell(v);
  return std::count_if(groups.begin(), groups.end(), [](const auto& g) { return g.second; });
}

}  // namespace

ProbeReport connectivity_probe(const BallGraph& ball, const Direction& gamma, const ProbeConfig& cfg) {
  if (gamma.dim() != ball.rank)
    throw std::invalid_argument("probe: direction " + gamma.str() + " does not match rank " +
                                std::to_string(ball.rank));
  if (cfg.lambda_step <= 0 || cfg.lambda_max < 0)
    throw std::invalid_argument("probe: lambda step must be positive and lambda_max non-negative");
  if (!std::is_sorted(cfg.grid.begin(), cfg.grid.end()))
    throw std::invalid_argument("probe: scale grid must be non-decreasing");

  ProbeReport rep{gamma, cfg.mode, ball.radius, {}, Evidence::Inconclusive, {}};
  for (const Rational& s : cfg.grid) {
    ProbeRow row;
    row.s = s;
    const std::vector<int> core = sublevel(ball, gamma, s, cfg.mode);
    row.vertices = core.size();
    row.shell_touched = std::any_of(core.begin(), core.end(), [&](int v) { return ball.on_shell(v); });
    row.reliable = std::any_of(core.begin(), core.end(), [&](int v) { return !ball.on_shell(v); });
    if (!row.reliable) {
      rep.notes.push_back("s=" + to_string(s) + ": sublevel set " +
                          (core.empty() ? "empty" : "lies on the boundary shell") + ", skipped");
      rep.rows.push_back(row);
      continue;
    }
    for (Rational lam = 0; lam <= cfg.lambda_max; lam += cfg.lambda_step) {
      row.components = relevant_groups(ball, core, sublevel(ball, gamma, s - lam, cfg.mode));
      if (row.components <= 1) {
        row.lambda = lam;
        break;
      }
    }
    rep.rows.push_back(row);
  }

  std::vector<const ProbeRow*> live;
  for (const auto& r : rep.rows)
    if (r.reliable) live.push_back(&r);
  if (live.empty()) {
    rep.notes.push_back("no grid point inside the reliable window");
    return rep;
  }
  if (std::any_of(live.begin(), live.end(), [](const ProbeRow* r) { return !r->lambda; })) {
    rep.evidence = Evidence::SupportsNonMembership;
    return rep;
  }
  bool monotone = true;
  for (std::size_t i = 1; i < live.size(); ++i)
    monotone = monotone && live[i]->s - *live[i]->lambda >= live[i - 1]->s - *live[i - 1]->lambda;
  const Rational first = live.front()->s - *live.front()->lambda;
  const Rational last = live.back()->s - *live.back()->lambda;
  if (monotone && last > first)
    rep.evidence = Evidence::SupportsMembership;
  else
    rep.notes.push_back("s - lambda(s) does not increase over the reliable window");
  return rep;
}

std::vector<Direction> default_probe_directions(int rank) {
  std::vector<Direction> out;
  for (int i = 0; i < rank; ++i) {
    out.push_back(Direction::unit(rank, i, 1));
    out.push_back(Direction::unit(rank, i, -1));
  }
  if (rank == 2)
    for (std::int64_t a : {1, -1})
      for (std::int64_t b : {1, -1}) out.push_back(Direction{a, b});
  return out;
}

std::vector<ScanRow> probe_direction_scan(const GroupAtom& atom, const std::vector<Direction>& dirs,
                                          const ProbeConfig& cfg) {
  const BallGraph ball = enumerate_ball(atom, cfg.radius);
  const KnownInvariants inv = lookup_invariants(GroupExpr(atom), 1);
  std::vector<ScanRow> out;
  for (const Direction& d : dirs) {
    ScanRow row{connectivity_probe(ball, d, cfg), std::nullopt, false};
    if (cfg.mode == ProbeMode::HalfSpace) {
      if (inv.sigma1_complement) row.catalog_member = !member(d, *inv.sigma1_complement);
    } else if (const auto& om = inv.omega_at(1).set) {
      row.catalog_member = member(d, *om);
    }
    if (row.catalog_member) {
      const Evidence want =
          *row.catalog_member ? Evidence::SupportsMembership : Evidence::SupportsNonMembership;
      row.warn = row.report.evidence != want;
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace bnsr
