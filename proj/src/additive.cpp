#include "icat/additive.hpp"

#include "icat/homs.hpp"

namespace icat {
namespace {

void require_abelian(const StructRef& s, const char* what) {
  if (s->kind() != Kind::kAbelianGroup)
    throw Error(ErrorCode::kKindMismatch, std::string(what) + " needs abelian groups");
}

// The unique map into K[alpha] through which f factors.
Morphism into_kernel(const Kernel& k, const Morphism& f) {
  std::vector<int> index(k.k.target()->order(), -1);
  for (int i = 0; i < k.object->order(); ++i) index[k.k(i)] = i;
  std::vector<int> m(f.source()->order());
  for (int x = 0; x < f.source()->order(); ++x) {
    m[x] = index[f(x)];
    if (m[x] < 0) throw Error(ErrorCode::kFactorizationFailure, "map does not land in the kernel");
  }
  return Morphism(f.source(), k.object, std::move(m));
}

Morphism comparison(const Kernel& k, const Morphism& section) {
  auto cop = coproduct(k.object, section.source());
  auto iso = copairing(cop, k.k, section);
  if (!iso.bijective())
    throw Error(ErrorCode::kComparisonNotIso,
                "[k beta] is not invertible; the ambient kind violates the additive classification");
  return iso;
}

}  // namespace

void validate_chain(const TwoChain& ch) {
  for (const auto& s : {ch.z(), ch.x(), ch.base()}) require_abelian(s, "2-chain");
  if (!(*ch.h.source() == *ch.x())) throw Error(ErrorCode::kInvalidDiagram, "t and h are not composable");
  if (!compose(ch.h, ch.t).is_zero()) throw Error(ErrorCode::kChainConditionViolated, "ht != 0");
}

ReflexiveGraph rg_from_morphism(const Morphism& h) {
  require_abelian(h.source(), "rg_from_morphism");
  require_abelian(h.target(), "rg_from_morphism");
  return graph_from_h(h);
}

GraphClassification morphism_from_rg(const ReflexiveGraph& g) {
  require_abelian(g.c1(), "morphism_from_rg");
  if (auto v = validate_reflexive_graph(g); !v.ok)
    throw Error(ErrorCode::kInvalidDiagram, "not a reflexive graph: " + v.law + " " + v.witness);
  auto k = kernel(g.d);
  auto iso = comparison(k, g.e);
  return {compose(g.c, k.k), iso};
}

Verdict verify_graph_certificate(const ReflexiveGraph& g, const GraphClassification& cls) {
  if (!cls.iso.bijective()) return {false, "certificate bijective", "iso"};
  return check_graph_morphism(rg_from_morphism(cls.h), g, identity(g.c0()), cls.iso);
}

PrecatPresentation presentation_from_chain(const TwoChain& ch) {
  validate_chain(ch);
  auto y = coproduct(ch.z(), ch.x());
  auto one = identity(ch.x());
  return {copairing(y, zero_morphism(ch.z(), ch.x()), one), copairing(y, ch.t, one), y.i2, ch.h};
}

Precategory precat_from_2chain(const TwoChain& ch) {
  return precategory_from_presentation(presentation_from_chain(ch));
}

ChainClassification chain_from_precat(const Precategory& p) {
  require_abelian(p.c2(), "chain_from_precat");
  if (auto v = validate_precategory(p); !v.ok)
    throw Error(ErrorCode::kInvalidDiagram, "not a precategory: " + v.law + " " + v.witness);
  const auto& g = p.graph;
  auto kd = kernel(g.d);     // X
  auto kp = kernel(p.p2);    // Y
  auto iso1 = comparison(kd, g.e);
  auto iso2 = comparison(kp, p.e2);
  PrecatPresentation pres{into_kernel(kd, compose(p.p1, kp.k)), into_kernel(kd, compose(p.m, kp.k)),
                          into_kernel(kp, compose(p.e1, kd.k)), compose(g.c, kd.k)};
  validate_presentation(pres);
  auto kz = kernel(pres.a);
  TwoChain chain{compose(pres.u, kz.k), pres.h};
  validate_chain(chain);
  // Y is Z + X via [kz b]; C2 is Y + C1 via iso2.
  auto iso_y = comparison(kz, pres.b);
  auto canon_c1 = coproduct(chain.x(), chain.base());
  auto canon_y = coproduct(chain.z(), chain.x());
  auto canon_c2 = coproduct(canon_y.object, canon_c1.object);
  auto split_c2 = coproduct(kp.object, g.c1());
  auto phi2 = compose(iso2, coproduct_map(canon_c2, split_c2, iso_y, iso1));
  return {chain, pres, iso1, phi2};
}

Verdict verify_chain_certificate(const Precategory& p, const ChainClassification& cls) {
  return verify_precategory_iso(precat_from_2chain(cls.chain), p, identity(p.graph.c0()), cls.phi1,
                                cls.phi2);
}

std::pair<Morphism, Morphism> rg_map(const Morphism& h, const Morphism& h2, const ArrowMorphism& m) {
  if (compose(h2, m.f) != compose(m.g, h))
    throw Error(ErrorCode::kInvalidDiagram, "h' f != g h");
  auto from = coproduct(h.source(), h.target());
  auto to = coproduct(h2.source(), h2.target());
  return {m.g, coproduct_map(from, to, m.f, m.g)};
}

ArrowMorphism morphism_map(const ReflexiveGraph& g, const ReflexiveGraph& g2, const Morphism& f0,
                           const Morphism& f1) {
  if (auto v = check_graph_morphism(g, g2, f0, f1); !v.ok)
    throw Error(ErrorCode::kInvalidDiagram, "not a graph morphism: " + v.law);
  auto k = kernel(g.d);
  auto k2 = kernel(g2.d);
  return {into_kernel(k2, compose(f1, k.k)), f0};
}

Verdict check_chain_morphism(const TwoChain& c, const TwoChain& c2, const ChainMorphism& m) {
  if (compose(c2.t, m.fz) != compose(m.fx, c.t)) return {false, "t' fz = fx t", ""};
  if (compose(c2.h, m.fx) != compose(m.fb, c.h)) return {false, "h' fx = fb h", ""};
  return {};
}

std::tuple<Morphism, Morphism, Morphism> precat_map(const TwoChain& c, const TwoChain& c2,
                                                    const ChainMorphism& m) {
  if (auto v = check_chain_morphism(c, c2, m); !v.ok)
    throw Error(ErrorCode::kInvalidDiagram, "not a chain morphism: " + v.law);
  auto c1 = coproduct(c.x(), c.base()), d1 = coproduct(c2.x(), c2.base());
  auto y = coproduct(c.z(), c.x()), y2 = coproduct(c2.z(), c2.x());
  auto f1 = coproduct_map(c1, d1, m.fx, m.fb);
  auto fy = coproduct_map(y, y2, m.fz, m.fx);
  auto f2 = coproduct_map(coproduct(y.object, c1.object), coproduct(y2.object, d1.object), fy, f1);
  return {m.fb, f1, f2};
}

std::vector<TwoChain> enumerate_chains(const StructRef& z, const StructRef& x, const StructRef& b) {
  std::vector<TwoChain> out;
  auto hs = all_morphisms(x, b);
  for (const auto& t : all_morphisms(z, x))
    for (const auto& h : hs)
      if (compose(h, t).is_zero()) out.push_back({t, h});
  return out;
}

}  // namespace icat
