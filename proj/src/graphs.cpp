#include "icat/graphs.hpp"

#include "icat/homs.hpp"

namespace icat {
namespace {

bool same(const StructRef& a, const StructRef& b) { return *a == *b; }

bool shaped(const Morphism& f, const StructRef& src, const StructRef& dst) {
  return same(f.source(), src) && same(f.target(), dst);
}

// First x with lhs(x) != rhs(x), as a witness string.
std::optional<std::string> differ(const Morphism& lhs, const Morphism& rhs) {
  for (size_t x = 0; x < lhs.map().size(); ++x)
    if (lhs.map()[x] != rhs.map()[x])
      return "x=" + std::to_string(x) + ": " + std::to_string(lhs.map()[x]) +
             " vs " + std::to_string(rhs.map()[x]);
  return std::nullopt;
}

Verdict check_laws(const std::vector<std::tuple<const char*, Morphism, Morphism>>& laws) {
  for (const auto& [name, lhs, rhs] : laws)
    if (auto w = differ(lhs, rhs)) return {false, name, *w};
  return {};
}

}  // namespace

Verdict validate_reflexive_graph(const ReflexiveGraph& g) {
  if (!shaped(g.c, g.c1(), g.c0()) || !shaped(g.e, g.c0(), g.c1()))
    return {false, "shape", "d, c : C1 -> C0 and e : C0 -> C1 required"};
  auto one = identity(g.c0());
  return check_laws({{"de = 1", compose(g.d, g.e), one}, {"ce = 1", compose(g.c, g.e), one}});
}

Verdict validate_precategory(const Precategory& p) {
  if (auto v = validate_reflexive_graph(p.graph); !v.ok) return v;
  const auto& c1 = p.graph.c1();
  const auto& c2 = p.c2();
  if (!shaped(p.p1, c2, c1) || !shaped(p.p2, c2, c1) || !shaped(p.e1, c1, c2) ||
      !shaped(p.e2, c1, c2) || !shaped(p.m, c2, c1))
    return {false, "shape", "p1, p2, m : C2 -> C1 and e1, e2 : C1 -> C2 required"};
  const auto& g = p.graph;
  auto one = identity(c1);
  return check_laws({
      {"p2 e2 = 1", compose(p.p2, p.e2), one},
      {"p1 e1 = 1", compose(p.p1, p.e1), one},
      {"d p1 = c p2", compose(g.d, p.p1), compose(g.c, p.p2)},
      {"p1 e2 = e c", compose(p.p1, p.e2), compose(g.e, g.c)},
      {"p2 e1 = e d", compose(p.p2, p.e1), compose(g.e, g.d)},
      {"e1 e = e2 e", compose(p.e1, g.e), compose(p.e2, g.e)},
      {"d m = d p2", compose(g.d, p.m), compose(g.d, p.p2)},
      {"c m = c p1", compose(g.c, p.m), compose(g.c, p.p1)},
      {"m e1 = 1", compose(p.m, p.e1), one},
      {"m e2 = 1", compose(p.m, p.e2), one},
  });
}

std::optional<std::vector<int>> pullback_inverse(const Precategory& p) {
  const int n1 = p.graph.c1()->order();
  std::vector<int> inv(static_cast<size_t>(n1) * n1, -1);
  for (int z = 0; z < p.c2()->order(); ++z) {
    int x1 = p.p1(z), x2 = p.p2(z);
    if (p.graph.d(x1) != p.graph.c(x2)) return std::nullopt;
    int& slot = inv[static_cast<size_t>(x1) * n1 + x2];
    if (slot >= 0) return std::nullopt;
    slot = z;
  }
  for (int x1 = 0; x1 < n1; ++x1)
    for (int x2 = 0; x2 < n1; ++x2)
      if (p.graph.d(x1) == p.graph.c(x2) && inv[static_cast<size_t>(x1) * n1 + x2] < 0)
        return std::nullopt;
  return inv;
}

InternalCategoryVerdict is_internal_category(const Precategory& p) {
  InternalCategoryVerdict v;
  auto inv = pullback_inverse(p);
  const int n1 = p.graph.c1()->order();
  if (!inv) {
    // Report the first fiber that is hit twice or missed.
    std::vector<int> hits(static_cast<size_t>(n1) * n1, 0);
    for (int z = 0; z < p.c2()->order(); ++z) ++hits[static_cast<size_t>(p.p1(z)) * n1 + p.p2(z)];
    for (int x1 = 0; x1 < n1 && v.witness.empty(); ++x1)
      for (int x2 = 0; x2 < n1 && v.witness.empty(); ++x2) {
        int hit = hits[static_cast<size_t>(x1) * n1 + x2];
        bool composable = p.graph.d(x1) == p.graph.c(x2);
        if ((composable && hit != 1) || (!composable && hit != 0))
          v.witness = "pair (" + std::to_string(x1) + "," + std::to_string(x2) + ") has " +
                      std::to_string(hit) + " preimages";
      }
    return v;
  }
  v.is_pullback = true;
  const auto& g = p.graph;
  auto mul = [&](int x1, int x2) { return p.m((*inv)[static_cast<size_t>(x1) * n1 + x2]); };
  bool unital = true;
  for (int x = 0; x < n1 && unital; ++x) {
    if (mul(x, g.e(g.d(x))) != x || mul(g.e(g.c(x)), x) != x) {
      unital = false;
      v.witness = "identity law fails at " + std::to_string(x);
    }
  }
  v.is_unital = unital;
  bool assoc = true;
  for (int f = 0; f < n1 && assoc; ++f)
    for (int s = 0; s < n1 && assoc; ++s) {
      if (g.d(f) != g.c(s)) continue;
      for (int t = 0; t < n1 && assoc; ++t) {
        if (g.d(s) != g.c(t)) continue;
        if (mul(mul(f, s), t) != mul(f, mul(s, t))) {
          assoc = false;
          if (v.witness.empty())
            v.witness = "(" + std::to_string(f) + "," + std::to_string(s) + "," + std::to_string(t) +
                        ") is not associative";
        }
      }
    }
  v.is_associative = assoc;
  return v;
}

void validate_presentation(const PrecatPresentation& p) {
  if (!same(p.u.source(), p.y()) || !same(p.u.target(), p.x()) || !shaped(p.b, p.x(), p.y()) ||
      !same(p.h.source(), p.x()))
    throw Error(ErrorCode::kInvalidDiagram, "presentation maps do not fit Y => X -> B");
  auto one = identity(p.x());
  if (compose(p.a, p.b) != one) throw Error(ErrorCode::kInvalidDiagram, "ab = 1 fails");
  if (compose(p.u, p.b) != one) throw Error(ErrorCode::kInvalidDiagram, "ub = 1 fails");
  if (compose(p.h, p.a) != compose(p.h, p.u))
    throw Error(ErrorCode::kFactorizationFailure, "ha = hu fails");
}

ReflexiveGraph graph_from_h(const Morphism& h) {
  const auto& x = h.source();
  const auto& b = h.target();
  auto cop = coproduct(x, b);
  return {copairing(cop, zero_morphism(x, b), identity(b)), copairing(cop, h, identity(b)), cop.i2};
}

Precategory precategory_from_presentation(const PrecatPresentation& p) {
  validate_presentation(p);
  auto g = graph_from_h(p.h);
  auto inner = coproduct(p.x(), p.base());
  auto outer = coproduct(p.y(), inner.object);
  const auto& c1 = inner.object;
  auto one = identity(c1);
  auto p2 = copairing(outer, zero_morphism(p.y(), c1), one);
  auto p1 = copairing(outer, compose(inner.i1, p.a), compose(inner.i2, g.c));
  auto e1 = copairing(inner, compose(outer.i1, p.b), compose(outer.i2, inner.i2));
  auto m = copairing(outer, compose(inner.i1, p.u), one);
  return {g, p1, p2, e1, outer.i2, m};
}

PrecatPresentation include_V(const Morphism& h) {
  auto one = identity(h.source());
  return {one, one, one, h};
}

Reflection reflect_U(const PrecatPresentation& p) {
  validate_presentation(p);
  auto q = coequalizer({p.u, p.a, p.b});
  auto h_prime = factor_through(q, p.h);
  if (!h_prime) throw Error(ErrorCode::kFactorizationFailure, "h does not factor through the coequalizer");
  auto unit_y = compose(q.sigma, p.a);
  return {q, *h_prime, unit_y};
}

Verdict check_graph_morphism(const ReflexiveGraph& g, const ReflexiveGraph& g2, const Morphism& f0,
                             const Morphism& f1) {
  if (!shaped(f0, g.c0(), g2.c0()) || !shaped(f1, g.c1(), g2.c1()))
    return {false, "shape", "components do not match the graphs"};
  return check_laws({{"d' f1 = f0 d", compose(g2.d, f1), compose(f0, g.d)},
                     {"c' f1 = f0 c", compose(g2.c, f1), compose(f0, g.c)},
                     {"e' f0 = f1 e", compose(g2.e, f0), compose(f1, g.e)}});
}

Verdict check_precategory_morphism(const Precategory& p, const Precategory& p2, const Morphism& f0,
                                   const Morphism& f1, const Morphism& f2) {
  if (auto v = check_graph_morphism(p.graph, p2.graph, f0, f1); !v.ok) return v;
  if (!shaped(f2, p.c2(), p2.c2())) return {false, "shape", "f2 does not match C2"};
  return check_laws({{"p1' f2 = f1 p1", compose(p2.p1, f2), compose(f1, p.p1)},
                     {"p2' f2 = f1 p2", compose(p2.p2, f2), compose(f1, p.p2)},
                     {"e1' f1 = f2 e1", compose(p2.e1, f1), compose(f2, p.e1)},
                     {"e2' f1 = f2 e2", compose(p2.e2, f1), compose(f2, p.e2)},
                     {"m' f2 = f1 m", compose(p2.m, f2), compose(f1, p.m)}});
}

Verdict verify_precategory_iso(const Precategory& p, const Precategory& p2, const Morphism& f0,
                               const Morphism& f1, const Morphism& f2) {
  if (auto v = check_precategory_morphism(p, p2, f0, f1, f2); !v.ok) return v;
  if (!f0.bijective()) return {false, "f0 bijective", "C0 component"};
  if (!f1.bijective()) return {false, "f1 bijective", "C1 component"};
  if (!f2.bijective()) return {false, "f2 bijective", "C2 component"};
  return {};
}

ClassVerdict point_in_class(const Morphism& alpha, const Morphism& beta, SplitEpiClass cls) {
  const auto& a = alpha.source();
  const auto& b = alpha.target();
  auto ker = kernel(alpha);
  switch (cls) {
    case SplitEpiClass::kAll:
      return {true, "every split epi"};
    case SplitEpiClass::kCoproduct: {
      if (!coproduct_supported(a->kind())) return {false, "coproduct not computed for this kind"};
      auto cop = coproduct(ker.object, b);
      auto cmp = copairing(cop, ker.k, beta);
      if (cmp.bijective()) return {true, "[k beta] is an isomorphism"};
      return {false, "[k beta] : " + std::to_string(cop.object->order()) + " -> " +
                         std::to_string(a->order()) + " is not bijective"};
    }
    case SplitEpiClass::kProduct: {
      // A retraction q of k with q beta = 0 making <q, alpha> bijective.
      if (ker.object->order() * b->order() != a->order())
        return {false, "|K| * |B| = " + std::to_string(ker.object->order() * b->order()) +
                           " differs from |A| = " + std::to_string(a->order())};
      HomSearch opts;
      opts.fixed.assign(a->order(), -1);
      for (int i = 0; i < ker.object->order(); ++i) opts.fixed[ker.k(i)] = i;
      for (int i = 1; i < b->order(); ++i) opts.fixed[beta(i)] = 0;
      auto prod = product(ker.object, b);
      ClassVerdict out{false, "no retraction q of k with q beta = 0 gives an isomorphism"};
      for_each_morphism(a, ker.object, opts, [&](const std::vector<int>& q) {
        std::vector<char> seen(a->order(), 0);
        for (int x = 0; x < a->order(); ++x) {
          int v = prod.encode(q[x], alpha(x));
          if (seen[v]) return true;
          seen[v] = 1;
        }
        out = {true, "<q, alpha> is an isomorphism"};
        return false;
      });
      return out;
    }
    case SplitEpiClass::kSemidirect: {
      if (a->kind() != Kind::kGroup && a->kind() != Kind::kAbelianGroup)
        return {false, "semidirect products need a group kind"};
      std::vector<char> seen(a->order(), 0);
      for (int x = 0; x < ker.object->order(); ++x)
        for (int y = 0; y < b->order(); ++y) {
          int v = a->op(ker.k(x), beta(y));
          if (seen[v]) return {false, "k(x) beta(b) is not injective"};
          seen[v] = 1;
        }
      if (ker.object->order() * b->order() != a->order()) return {false, "K x B does not cover A"};
      return {true, "(x, b) -> k(x) beta(b) is a bijection"};
    }
  }
  return {};
}

ClassVerdict restrict_to_class(const ReflexiveGraph& g, SplitEpiClass cls) {
  return point_in_class(g.d, g.e, cls);
}

ClassVerdict restrict_to_class(const Precategory& p, SplitEpiClass cls) {
  auto v = restrict_to_class(p.graph, cls);
  if (!v.member) return {false, "(d, e): " + v.witness};
  auto w = point_in_class(p.p2, p.e2, cls);
  if (!w.member) return {false, "(p2, e2): " + w.witness};
  return {true, v.witness};
}

}  // namespace icat
