#pragma once

#include <optional>
#include <string>
#include <vector>

#include "icat/constructions.hpp"
#include "icat/structure.hpp"

namespace icat {

/// d, c : C1 -> C0 with common section e.
struct ReflexiveGraph {
  Morphism d;
  Morphism c;
  Morphism e;

  const StructRef& c1() const { return d.source(); }
  const StructRef& c0() const { return d.target(); }
};

/// Truncated simplicial object: the graph plus C2 with projections p1, p2,
/// sections e1, e2, and the multiplication m. Composable pairs are
/// (p1 z, p2 z) with d p1 = c p2.
struct Precategory {
  ReflexiveGraph graph;
  Morphism p1;
  Morphism p2;
  Morphism e1;
  Morphism e2;
  Morphism m;

  const StructRef& c2() const { return p1.source(); }
};

struct Verdict {
  bool ok = true;
  std::string law;      // name of the first violated law
  std::string witness;  // element at which it fails
};

Verdict validate_reflexive_graph(const ReflexiveGraph& g);
/// Checks shapes, the split square, dm = d p2, cm = c p1 and
/// m e1 = 1 = m e2, elementwise.
Verdict validate_precategory(const Precategory& p);

struct InternalCategoryVerdict {
  bool is_pullback = false;
  /// Set only when the pullback holds.
  std::optional<bool> is_associative;
  std::optional<bool> is_unital;
  std::string witness;
};

/// Index x1 * |C1| + x2 of each composable pair mapped to the unique z with
/// (p1 z, p2 z) = (x1, x2); nullopt when C2 is not the fiber product.
std::optional<std::vector<int>> pullback_inverse(const Precategory& p);
InternalCategoryVerdict is_internal_category(const Precategory& p);

/// Data (Y, X, B, a, u, b, h) with ab = 1 = ub and ha = hu.
struct PrecatPresentation {
  Morphism a;  // Y -> X
  Morphism u;  // Y -> X
  Morphism b;  // X -> Y
  Morphism h;  // X -> B

  const StructRef& y() const { return a.source(); }
  const StructRef& x() const { return a.target(); }
  const StructRef& base() const { return h.target(); }
};

/// Throws kInvalidDiagram on shape errors or when ab = 1 = ub fails;
/// kFactorizationFailure when ha != hu.
void validate_presentation(const PrecatPresentation& p);

/// X + B with d = [0 1], c = [h 1], e = i2.
ReflexiveGraph graph_from_h(const Morphism& h);
/// C2 = Y + (X + B), p2 = [0 1], p1 = a + [h 1], e2 = i2, e1 = b + i2,
/// m = [i1 u, 1]. Coproduct kinds only.
Precategory precategory_from_presentation(const PrecatPresentation& p);

/// V(h): Y = X with a = u = b = 1.
PrecatPresentation include_V(const Morphism& h);

struct Reflection {
  Quotient sigma;   // coequalizer of u and a
  Morphism h_prime; // X' -> B with h' sigma = h
  Morphism unit_y;  // sigma u = sigma a : Y -> X'
};

/// U(p): coequalize a and u, then factor h.
Reflection reflect_U(const PrecatPresentation& p);

/// (f0, f1) : g -> g' commutes with d, c and e.
Verdict check_graph_morphism(const ReflexiveGraph& g, const ReflexiveGraph& g2, const Morphism& f0,
                             const Morphism& f1);
/// (f0, f1, f2) : p -> p' commutes with all eleven structure maps.
Verdict check_precategory_morphism(const Precategory& p, const Precategory& p2, const Morphism& f0,
                                   const Morphism& f1, const Morphism& f2);
/// Morphism whose components are all bijective.
Verdict verify_precategory_iso(const Precategory& p, const Precategory& p2, const Morphism& f0,
                               const Morphism& f1, const Morphism& f2);

enum class SplitEpiClass { kAll, kCoproduct, kProduct, kSemidirect };

struct ClassVerdict {
  bool member = false;
  std::string witness;
};

/// Membership of a point (A, alpha, beta, B) up to isomorphism in Pt.
ClassVerdict point_in_class(const Morphism& alpha, const Morphism& beta, SplitEpiClass cls);
/// (d, e) in the class.
ClassVerdict restrict_to_class(const ReflexiveGraph& g, SplitEpiClass cls);
/// (d, e) and (p2, e2) in the class.
ClassVerdict restrict_to_class(const Precategory& p, SplitEpiClass cls);

}  // namespace icat
