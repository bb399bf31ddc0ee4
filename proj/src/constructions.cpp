#include "icat/constructions.hpp"

#include <map>
#include <numeric>

#include "icat/homs.hpp"

namespace icat {
namespace {

void require_same_kind(const StructRef& x, const StructRef& b, const char* what) {
  if (x->kind() != b->kind())
    throw Error(ErrorCode::kKindMismatch, std::string(what) + ": operands of different kinds");
}

std::string join_name(const StructRef& x, const StructRef& b, const char* sep) {
  if (x->name().empty() || b->name().empty()) return {};
  return x->name() + sep + b->name();
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a < b) std::swap(a, b);
    parent[a] = b;
    return true;
  }
};

}  // namespace

Product product(const StructRef& x, const StructRef& b) {
  require_same_kind(x, b, "product");
  const int nx = x->order(), nb = b->order(), n = nx * nb;
  std::vector<int> table;
  if (x->tabled()) {
    table.resize(static_cast<size_t>(n) * n);
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q)
        table[static_cast<size_t>(p) * n + q] =
            x->op(p / nb, q / nb) * nb + b->op(p % nb, q % nb);
  }
  auto obj = make_trusted(x->kind(), n, std::move(table), join_name(x, b, "x"));
  std::vector<int> m1(n), m2(n);
  for (int p = 0; p < n; ++p) {
    m1[p] = p / nb;
    m2[p] = p % nb;
  }
  return Product{obj, Morphism(Morphism::Trusted{}, obj, x, std::move(m1)),
                 Morphism(Morphism::Trusted{}, obj, b, std::move(m2))};
}

Morphism pairing(const Product& prod, const Morphism& f, const Morphism& g) {
  if (!(*f.source() == *g.source()) || !(*f.target() == *prod.p1.target()) ||
      !(*g.target() == *prod.p2.target()))
    throw Error(ErrorCode::kInvalidMorphism, "pairing: mismatched legs");
  std::vector<int> m(f.map().size());
  for (size_t i = 0; i < m.size(); ++i)
    m[i] = prod.encode(f(static_cast<int>(i)), g(static_cast<int>(i)));
  return Morphism(Morphism::Trusted{}, f.source(), prod.object, std::move(m));
}

bool coproduct_supported(Kind kind) {
  return kind == Kind::kPointedSet || kind == Kind::kAbelianGroup;
}

Coproduct coproduct(const StructRef& x, const StructRef& b) {
  require_same_kind(x, b, "coproduct");
  if (!coproduct_supported(x->kind()))
    throw Error(ErrorCode::kUnsupportedCoproduct,
                "coproducts of " + std::string(kind_name(x->kind())) +
                    " objects are free products and are not computed");
  if (x->kind() == Kind::kAbelianGroup) {
    Product prod = product(x, b);
    auto obj = make_trusted(Kind::kAbelianGroup, prod.object->order(), prod.object->table(),
                            join_name(x, b, "+"));
    std::vector<int> m1(x->order()), m2(b->order());
    for (int i = 0; i < x->order(); ++i) m1[i] = prod.encode(i, 0);
    for (int i = 0; i < b->order(); ++i) m2[i] = prod.encode(0, i);
    return Coproduct{obj, Morphism(Morphism::Trusted{}, x, obj, std::move(m1)),
                     Morphism(Morphism::Trusted{}, b, obj, std::move(m2))};
  }
  const int nx = x->order(), nb = b->order();
  auto obj = make_trusted(Kind::kPointedSet, nx + nb - 1, {}, join_name(x, b, "v"));
  std::vector<int> m1(nx), m2(nb);
  for (int i = 0; i < nx; ++i) m1[i] = i;
  for (int i = 0; i < nb; ++i) m2[i] = i == 0 ? 0 : nx - 1 + i;
  return Coproduct{obj, Morphism(Morphism::Trusted{}, x, obj, std::move(m1)),
                   Morphism(Morphism::Trusted{}, b, obj, std::move(m2))};
}

Morphism copairing(const Coproduct& cop, const Morphism& f, const Morphism& g) {
  if (!(*f.source() == *cop.i1.source()) || !(*g.source() == *cop.i2.source()) ||
      !(*f.target() == *g.target()))
    throw Error(ErrorCode::kInvalidMorphism, "copairing: mismatched legs");
  const auto& x = cop.i1.source();
  const auto& b = cop.i2.source();
  const auto& t = f.target();
  std::vector<int> m(cop.object->order(), 0);
  if (cop.object->kind() == Kind::kAbelianGroup) {
    for (int i = 0; i < x->order(); ++i)
      for (int j = 0; j < b->order(); ++j) m[i * b->order() + j] = t->op(f(i), g(j));
  } else {
    for (int i = 0; i < x->order(); ++i) m[cop.i1(i)] = f(i);
    for (int j = 0; j < b->order(); ++j) m[cop.i2(j)] = g(j);
  }
  return Morphism(cop.object, t, std::move(m));
}

Morphism coproduct_map(const Coproduct& from, const Coproduct& to, const Morphism& f,
                       const Morphism& g) {
  return copairing(from, compose(to.i1, f), compose(to.i2, g));
}

Kernel kernel(const Morphism& alpha) {
  const auto& a = alpha.source();
  std::vector<int> elems, index(a->order(), -1);
  for (int i = 0; i < a->order(); ++i)
    if (alpha(i) == 0) {
      index[i] = static_cast<int>(elems.size());
      elems.push_back(i);
    }
  const int m = static_cast<int>(elems.size());
  std::vector<int> table;
  if (a->tabled()) {
    table.resize(static_cast<size_t>(m) * m);
    for (int p = 0; p < m; ++p)
      for (int q = 0; q < m; ++q) table[static_cast<size_t>(p) * m + q] = index[a->op(elems[p], elems[q])];
  }
  auto obj = make_trusted(a->kind(), m, std::move(table));
  return Kernel{obj, Morphism(Morphism::Trusted{}, obj, a, std::move(elems))};
}

Kernel kernel_of_split_epi(const Morphism& alpha, const Morphism& beta) {
  if (!(*alpha.source() == *beta.target()) || !(*alpha.target() == *beta.source()) ||
      compose(alpha, beta) != identity(alpha.target()))
    throw Error(ErrorCode::kNotSplit, "alpha * beta is not the identity");
  return kernel(alpha);
}

void validate_reflexive_pair(const ReflexivePair& p) {
  auto one = identity(p.d.target());
  if (compose(p.d, p.e) != one || compose(p.c, p.e) != one)
    throw Error(ErrorCode::kInvalidDiagram, "reflexive pair: de = 1 = ce fails");
}

Quotient quotient_by_pairs(const StructRef& x, const std::vector<std::pair<int, int>>& pairs) {
  const int n = x->order();
  UnionFind uf(n);
  for (auto [a, b] : pairs) uf.unite(a, b);
  if (x->tabled()) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int a = 0; a < n; ++a) {
        int r = uf.find(a);
        if (r == a) continue;
        for (int y = 0; y < n; ++y) {
          changed |= uf.unite(x->op(a, y), x->op(r, y));
          changed |= uf.unite(x->op(y, a), x->op(y, r));
        }
      }
    }
  }
  // Union by smaller index keeps each root at its class minimum, so class
  // order by root matches order by smallest representative.
  std::vector<int> cls(n, -1), sigma(n);
  int m = 0;
  for (int a = 0; a < n; ++a) {
    int r = uf.find(a);
    if (cls[r] < 0) cls[r] = m++;
    sigma[a] = cls[r];
  }
  std::vector<int> table;
  if (x->tabled()) {
    std::vector<int> rep(m);
    for (int a = n - 1; a >= 0; --a) rep[sigma[a]] = a;
    table.resize(static_cast<size_t>(m) * m);
    for (int p = 0; p < m; ++p)
      for (int q = 0; q < m; ++q) table[static_cast<size_t>(p) * m + q] = sigma[x->op(rep[p], rep[q])];
    if (auto err = check_structure_laws(x->kind(), m, table))
      throw Error(ErrorCode::kUnsupportedConstruction, "quotient leaves the ambient category: " + *err);
  }
  auto obj = make_trusted(x->kind(), m, std::move(table));
  return Quotient{obj, Morphism(Morphism::Trusted{}, x, obj, std::move(sigma))};
}

Quotient coequalizer(const ReflexivePair& p) {
  validate_reflexive_pair(p);
  std::vector<std::pair<int, int>> pairs;
  for (int y = 0; y < p.d.source()->order(); ++y) pairs.emplace_back(p.d(y), p.c(y));
  return quotient_by_pairs(p.d.target(), pairs);
}

std::optional<Morphism> factor_through(const Quotient& q, const Morphism& m) {
  std::vector<int> out(q.object->order(), -1);
  for (int a = 0; a < m.source()->order(); ++a) {
    int c = q.sigma(a);
    if (out[c] >= 0 && out[c] != m(a)) return std::nullopt;
    out[c] = m(a);
  }
  return Morphism(q.object, m.target(), std::move(out));
}

namespace {

std::vector<int> joint_image(const Morphism& f, const Morphism& g) {
  std::vector<int> seeds(f.map());
  seeds.insert(seeds.end(), g.map().begin(), g.map().end());
  return seeds;
}

}  // namespace

std::vector<StructRef> default_probes(const StructRef& a) {
  std::vector<StructRef> probes{a};
  if (!a->tabled()) {
    for (int n = 1; n < a->order(); ++n) probes.push_back(pointed_set(n));
    return probes;
  }
  std::vector<StructRef> seen;
  for (int x = 0; x < a->order(); ++x)
    for (int y = x; y < a->order(); ++y) {
      auto sub = generated(*a, {x, y});
      std::vector<std::pair<int, int>> pairs;
      for (int z = 0; z < a->order(); ++z)
        if (sub[z]) pairs.emplace_back(0, z);
      StructRef q;
      try {
        q = quotient_by_pairs(a, pairs).object;
      } catch (const Error&) {
        continue;
      }
      bool dup = false;
      for (const auto& s : probes) dup = dup || find_isomorphism(s, q).has_value();
      if (!dup) probes.push_back(q);
    }
  return probes;
}

bool jointly_epic_by_probe(const Morphism& f, const Morphism& g,
                           const std::vector<StructRef>& probes) {
  if (!(*f.target() == *g.target()))
    throw Error(ErrorCode::kInvalidMorphism, "jointly_epic: legs have different targets");
  const auto& a = f.target();
  std::vector<char> in_image(a->order(), 0);
  for (int v : joint_image(f, g)) in_image[v] = 1;
  for (const auto& c : probes) {
    std::map<std::vector<int>, std::vector<int>> by_restriction;
    bool distinguishes = true;
    for_each_morphism(a, c, {}, [&](const std::vector<int>& u) {
      std::vector<int> key;
      for (int i = 0; i < a->order(); ++i)
        if (in_image[i]) key.push_back(u[i]);
      auto [it, inserted] = by_restriction.emplace(std::move(key), u);
      if (!inserted && it->second != u) {
        distinguishes = false;
        return false;
      }
      return true;
    });
    if (!distinguishes) return false;
  }
  return true;
}

bool jointly_epic(const Morphism& f, const Morphism& g) {
  if (!(*f.target() == *g.target()))
    throw Error(ErrorCode::kInvalidMorphism, "jointly_epic: legs have different targets");
  const auto& a = f.target();
  if (!a->tabled()) return jointly_epic_by_probe(f, g, default_probes(a));
  auto in = generated(*a, joint_image(f, g));
  for (char c : in)
    if (!c) return false;
  return true;
}

}  // namespace icat
