#pragma once

#include "icat/graphs.hpp"

namespace icat {

/// Z --t--> X --h--> B with ht = 0, over abelian groups.
struct TwoChain {
  Morphism t;
  Morphism h;

  const StructRef& z() const { return t.source(); }
  const StructRef& x() const { return t.target(); }
  const StructRef& base() const { return h.target(); }
};

/// Throws kKindMismatch outside abelian groups and kChainConditionViolated
/// unless ht = 0.
void validate_chain(const TwoChain& ch);

/// (X + B, p2, [h 1], i2).
ReflexiveGraph rg_from_morphism(const Morphism& h);

struct GraphClassification {
  Morphism h;    // c k : K[d] -> C0
  Morphism iso;  // [k e] : K + C0 -> C1
};

/// Recovers h from a graph together with the comparison certificate.
/// Throws kInvalidDiagram for a malformed graph, kComparisonNotIso if
/// [k e] is not invertible.
GraphClassification morphism_from_rg(const ReflexiveGraph& g);
/// (1, iso) is a graph isomorphism rg_from_morphism(h) -> g.
Verdict verify_graph_certificate(const ReflexiveGraph& g, const GraphClassification& cls);

/// Y = Z + X, a = [0 1], u = [t 1], b = i2, then the coproduct
/// presentation of the precategory.
PrecatPresentation presentation_from_chain(const TwoChain& ch);
Precategory precat_from_2chain(const TwoChain& ch);

struct ChainClassification {
  TwoChain chain;
  PrecatPresentation presentation;
  /// Components of the isomorphism precat_from_2chain(chain) -> p; the C0
  /// component is the identity.
  Morphism phi1;
  Morphism phi2;
};

ChainClassification chain_from_precat(const Precategory& p);
Verdict verify_chain_certificate(const Precategory& p, const ChainClassification& cls);

/// Morphism of h's or of the graphs they present: h' f = g h.
struct ArrowMorphism {
  Morphism f;  // X -> X'
  Morphism g;  // B -> B'
};

/// Graph morphism (g, f + g) between the presented graphs.
std::pair<Morphism, Morphism> rg_map(const Morphism& h, const Morphism& h2, const ArrowMorphism& m);
/// Restriction of (f0, f1) to kernels of d.
ArrowMorphism morphism_map(const ReflexiveGraph& g, const ReflexiveGraph& g2, const Morphism& f0,
                           const Morphism& f1);

struct ChainMorphism {
  Morphism fz;
  Morphism fx;
  Morphism fb;
};

Verdict check_chain_morphism(const TwoChain& c, const TwoChain& c2, const ChainMorphism& m);
/// Components (fb, fx + fb, (fz + fx) + (fx + fb)).
std::tuple<Morphism, Morphism, Morphism> precat_map(const TwoChain& c, const TwoChain& c2,
                                                    const ChainMorphism& m);

/// All chains Z -> X -> B over the given objects.
std::vector<TwoChain> enumerate_chains(const StructRef& z, const StructRef& x, const StructRef& b);

}  // namespace icat
