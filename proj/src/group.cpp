#include "bnsr/group.hpp"

#include <algorithm>

namespace bnsr {

// ---------------------------------------------------------------- atoms

namespace {

GroupAtom make(GroupAtom::Kind k, int p) {
  GroupAtom a;
  a.kind = k;
  a.param = p;
  return a;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::out_of_range(what);
}

}  // namespace

GroupAtom GroupAtom::free_abelian(int k) {
  require(k >= 0, "Z^k needs k >= 0");
  return make(Kind::FreeAbelian, k);
}

GroupAtom GroupAtom::free_group(int n) {
  require(n >= 1, "F(n) needs n >= 1");
  return n == 1 ? free_abelian(1) : make(Kind::Free, n);
}

GroupAtom GroupAtom::baumslag_solitar(int n) {
  require(n >= 2, "BS(1,n) needs n >= 2");
  return make(Kind::BaumslagSolitar, n);
}

GroupAtom GroupAtom::klein() { return make(Kind::KleinBottle, 0); }

GroupAtom GroupAtom::braid(int n) {
  require(n >= 2, "B(n) needs n >= 2");
  return n == 2 ? free_abelian(1) : make(Kind::Braid, n);
}

GroupAtom GroupAtom::thompson() { return make(Kind::ThompsonF, 0); }

GroupAtom GroupAtom::generalized_thompson(int n) {
  require(n >= 2, "T(n) needs n >= 2");
  return make(Kind::GeneralizedThompson, n);
}

GroupAtom GroupAtom::lamplighter(int n) {
  require(n >= 2, "L(n) needs n >= 2");
  return make(Kind::Lamplighter, n);
}

GroupAtom GroupAtom::cyclic(int k) {
  require(k >= 1, "Zmod(k) needs k >= 1");
  return make(Kind::FiniteCyclic, k);
}

GroupAtom GroupAtom::finite_table(FiniteGroupTable t) {
  GroupAtom a = make(Kind::FiniteTable, t.order());
  a.table = std::make_shared<const FiniteGroupTable>(std::move(t));
  return a;
}

bool GroupAtom::finite() const {
  return kind == Kind::FiniteCyclic || kind == Kind::FiniteTable ||
         (kind == Kind::FreeAbelian && param == 0);
}

bool GroupAtom::abelian() const {
  switch (kind) {
    case Kind::FreeAbelian:
    case Kind::FiniteCyclic: return true;
    case Kind::FiniteTable: return table->is_abelian();
    default: return false;
  }
}

bool GroupAtom::trivial() const {
  return (kind == Kind::FreeAbelian && param == 0) ||
         ((kind == Kind::FiniteCyclic || kind == Kind::FiniteTable) && param == 1);
}

bool GroupAtom::freely_indecomposable() const { return !trivial() && kind != Kind::Free; }

int GroupAtom::finiteness_type() const { return kind == Kind::Lamplighter ? 1 : INT_MAX; }

std::string GroupAtom::name() const {
  const std::string p = std::to_string(param);
  switch (kind) {
    case Kind::FreeAbelian: return param == 1 ? "Z" : "Z^" + p;
    case Kind::Free: return "F(" + p + ")";
    case Kind::BaumslagSolitar: return "BS(1," + p + ")";
    case Kind::KleinBottle: return "Klein";
    case Kind::Braid: return "B(" + p + ")";
    case Kind::ThompsonF: return "Thompson";
    case Kind::GeneralizedThompson: return "T(" + p + ")";
    case Kind::Lamplighter: return "L(" + p + ")";
    case Kind::FiniteCyclic: return "Zmod(" + p + ")";
    case Kind::FiniteTable: return "Table(" + p + ")";
  }
  return "?";
}

bool GroupAtom::operator==(const GroupAtom& o) const {
  if (kind != o.kind || param != o.param) return false;
  if (kind != Kind::FiniteTable) return true;
  return table == o.table || *table == *o.table;
}

// ---------------------------------------------------------------- expressions

GroupExpr::GroupExpr(GroupAtom a) : node_(Node::Atom), atom_(std::move(a)) {}

GroupExpr::GroupExpr(Node n, std::vector<GroupExpr> factors) : node_(n) {
  if (factors.size() < 2) throw std::invalid_argument("product needs at least two factors");
  for (auto& f : factors) {
    if (f.node_ == n) {
      for (auto& g : f.factors_) factors_.push_back(std::move(g));
    } else {
      factors_.push_back(std::move(f));
    }
  }
}

GroupExpr GroupExpr::direct(std::vector<GroupExpr> factors) {
  return GroupExpr(Node::DirectProduct, std::move(factors));
}

GroupExpr GroupExpr::free(std::vector<GroupExpr> factors) {
  for (const auto& f : factors)
    if (f.trivial())
      throw std::invalid_argument("free product factor " + f.str() + " is the trivial group");
  return GroupExpr(Node::FreeProduct, std::move(factors));
}

const GroupAtom& GroupExpr::atom() const {
  if (node_ != Node::Atom) throw std::logic_error("GroupExpr::atom on a product node");
  return atom_;
}

bool GroupExpr::finite() const {
  switch (node_) {
    case Node::Atom: return atom_.finite();
    case Node::DirectProduct:
      return std::all_of(factors_.begin(), factors_.end(), [](const GroupExpr& f) { return f.finite(); });
    case Node::FreeProduct: return false;
  }
  return false;
}

bool GroupExpr::abelian() const {
  switch (node_) {
    case Node::Atom: return atom_.abelian();
    case Node::DirectProduct:
      return std::all_of(factors_.begin(), factors_.end(), [](const GroupExpr& f) { return f.abelian(); });
    case Node::FreeProduct: return false;
  }
  return false;
}

bool GroupExpr::trivial() const {
  switch (node_) {
    case Node::Atom: return atom_.trivial();
    case Node::DirectProduct:
      return std::all_of(factors_.begin(), factors_.end(), [](const GroupExpr& f) { return f.trivial(); });
    case Node::FreeProduct: return false;
  }
  return false;
}

bool GroupExpr::freely_indecomposable() const {
  switch (node_) {
    case Node::Atom: return atom_.freely_indecomposable();
    case Node::DirectProduct: {
      std::vector<const GroupExpr*> live;
      for (const auto& f : factors_)
        if (!f.trivial()) live.push_back(&f);
      if (live.empty()) return false;
      return live.size() >= 2 || live.front()->freely_indecomposable();
    }
    case Node::FreeProduct: return false;
  }
  return false;
}

int GroupExpr::finiteness_type() const {
  if (node_ == Node::Atom) return atom_.finiteness_type();
  int t = INT_MAX;
  for (const auto& f : factors_) t = std::min(t, f.finiteness_type());
  return t;
}

std::string GroupExpr::str() const {
  if (node_ == Node::Atom) return atom_.name();
  std::string out;
  const char* op = node_ == Node::DirectProduct ? " x " : " * ";
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += op;
    const bool paren = node_ == Node::DirectProduct && factors_[i].node_ == Node::FreeProduct;
    out += paren ? "(" + factors_[i].str() + ")" : factors_[i].str();
  }
  return out;
}

bool GroupExpr::operator==(const GroupExpr& o) const {
  if (node_ != o.node_) return false;
  if (node_ == Node::Atom) return atom_ == o.atom_;
  return factors_ == o.factors_;
}

int hom_rank(const GroupExpr& g) {
  if (!g.is_atom()) {
    int m = 0;
    for (const auto& f : g.factors()) m += hom_rank(f);
    return m;
  }
  const GroupAtom& a = g.atom();
  using K = GroupAtom::Kind;
  switch (a.kind) {
    case K::FreeAbelian:
    case K::Free:
    case K::GeneralizedThompson: return a.param;
    case K::BaumslagSolitar:
    case K::KleinBottle:
    case K::Braid:
    case K::Lamplighter: return 1;
    case K::ThompsonF: return 2;
    case K::FiniteCyclic:
    case K::FiniteTable: return 0;
  }
  return 0;
}

// ---------------------------------------------------------------- presentations

Word reduce(Word w) {
  Word out;
  for (int x : w) {
    if (x == 0) throw std::invalid_argument("word letter 0 is not a generator");
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

AbelianInvariants abelianization_of_presentation(const FinitePresentation& p) {
  const auto gens = static_cast<Eigen::Index>(p.generators.size());
  IntMatrix m = IntMatrix::Zero(gens, static_cast<Eigen::Index>(p.relators.size()));
  for (std::size_t r = 0; r < p.relators.size(); ++r)
    for (int x : p.relators[r]) {
      const int g = std::abs(x) - 1;
      if (g < 0 || g >= gens) throw std::invalid_argument("relator uses an unknown generator");
      m(g, static_cast<Eigen::Index>(r)) += x > 0 ? 1 : -1;
    }
  return cokernel(m);
}

namespace {

Word power(int g, int e) { return Word(static_cast<std::size_t>(std::abs(e)), e > 0 ? g : -g); }

Word cat(std::initializer_list<Word> parts) {
  Word out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

Word inverse(const Word& w) {
  Word out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

Word commutator(const Word& u, const Word& v) { return reduce(cat({u, v, inverse(u), inverse(v)})); }

std::vector<std::string> numbered(const std::string& stem, int n, int first = 1) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(stem + std::to_string(first + i));
  return out;
}

}  // namespace

std::optional<FinitePresentation> presentation_of(const GroupAtom& a) {
  using K = GroupAtom::Kind;
  FinitePresentation p;
  switch (a.kind) {
    case K::FreeAbelian:
      p.generators = numbered("x", a.param);
      for (int i = 1; i <= a.param; ++i)
        for (int j = i + 1; j <= a.param; ++j) p.relators.push_back(commutator({i}, {j}));
      return p;
    case K::Free:
      p.generators = numbered("x", a.param);
      return p;
    case K::BaumslagSolitar:
      // t^-1 a t = a^n
      p.generators = {"a", "t"};
      p.relators.push_back(cat({{-2, 1, 2}, power(1, -a.param)}));
      return p;
    case K::KleinBottle:
      p.generators = {"a", "b"};
      p.relators.push_back({1, 2, 1, -2});
      return p;
    case K::Braid: {
      const int k = a.param - 1;
      p.generators = numbered("s", k);
      for (int i = 1; i < k; ++i)
        p.relators.push_back(cat({{i, i + 1, i}, inverse({i + 1, i, i + 1})}));
      for (int i = 1; i <= k; ++i)
        for (int j = i + 2; j <= k; ++j) p.relators.push_back(commutator({i}, {j}));
      return p;
    }
    case K::ThompsonF: {
      p.generators = {"x0", "x1"};
      const Word u = {1, -2};
      p.relators.push_back(commutator(u, {-1, 2, 1}));
      p.relators.push_back(commutator(u, {-1, -1, 2, 1, 1}));
      return p;
    }
    case K::FiniteCyclic:
      p.generators = {"x"};
      p.relators.push_back(power(1, a.param));
      return p;
    case K::FiniteTable: {
      const FiniteGroupTable& t = *a.table;
      p.generators = numbered("g", t.order(), 0);
      for (int x = 0; x < t.order(); ++x)
        for (int y = 0; y < t.order(); ++y)
          p.relators.push_back(reduce({x + 1, y + 1, -(t.mul(x, y) + 1)}));
      return p;
    }
    case K::GeneralizedThompson:
    case K::Lamplighter: return std::nullopt;
  }
  return std::nullopt;
}

std::optional<FinitePresentation> presentation_of(const GroupExpr& g) {
  if (g.is_atom()) return presentation_of(g.atom());
  std::vector<FinitePresentation> parts;
  for (const auto& f : g.factors()) {
    auto p = presentation_of(f);
    if (!p) return std::nullopt;
    parts.push_back(std::move(*p));
  }
  FinitePresentation out;
  std::vector<std::pair<int, int>> ranges;  // generator index range per factor
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const int shift = static_cast<int>(out.generators.size());
    for (const auto& name : parts[k].generators)
      out.generators.push_back(name + "_" + std::to_string(k + 1));
    for (const auto& r : parts[k].relators) {
      Word w;
      for (int x : r) w.push_back(x > 0 ? x + shift : x - shift);
      out.relators.push_back(std::move(w));
    }
    ranges.emplace_back(shift + 1, static_cast<int>(out.generators.size()));
  }
  if (g.node() == GroupExpr::Node::DirectProduct)
    for (std::size_t k = 0; k < ranges.size(); ++k)
      for (std::size_t l = k + 1; l < ranges.size(); ++l)
        for (int i = ranges[k].first; i <= ranges[k].second; ++i)
          for (int j = ranges[l].first; j <= ranges[l].second; ++j)
            out.relators.push_back(commutator({i}, {j}));
  return out;
}

}  // namespace bnsr
