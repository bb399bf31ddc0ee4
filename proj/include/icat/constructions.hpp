#pragma once

#include <optional>
#include <vector>

#include "icat/structure.hpp"

namespace icat {

/// Binary product with projections. Element (x, b) is stored at index
/// x * |B| + b, so (0, 0) is the distinguished element.
struct Product {
  StructRef object;
  Morphism p1;
  Morphism p2;
  int encode(int x, int b) const { return x * p2.target()->order() + b; }
};

Product product(const StructRef& x, const StructRef& b);
/// <f, g> : W -> X x B.
Morphism pairing(const Product& prod, const Morphism& f, const Morphism& g);

/// Binary coproduct with injections. Pointed sets: the wedge, with X's
/// non-base elements first (1..|X|-1) and B's after them. Abelian groups:
/// the biproduct on the product carrier.
struct Coproduct {
  StructRef object;
  Morphism i1;
  Morphism i2;
};

bool coproduct_supported(Kind kind);
/// Throws kUnsupportedCoproduct for groups and magmas.
Coproduct coproduct(const StructRef& x, const StructRef& b);
/// [f g] : X + B -> T; throws kInvalidMorphism if the pair does not
/// induce a morphism (e.g. non-commuting images in an abelian target).
Morphism copairing(const Coproduct& cop, const Morphism& f, const Morphism& g);
/// f + g : X + B -> X' + B'.
Morphism coproduct_map(const Coproduct& from, const Coproduct& to, const Morphism& f,
                       const Morphism& g);

struct Kernel {
  StructRef object;
  Morphism k;
};

/// Kernel of an arbitrary morphism: the preimage of 0, renumbered in
/// ascending order, with the inclusion.
Kernel kernel(const Morphism& alpha);
/// Throws kNotSplit unless alpha * beta = 1.
Kernel kernel_of_split_epi(const Morphism& alpha, const Morphism& beta);

struct ReflexivePair {
  Morphism d;
  Morphism c;
  Morphism e;
};

void validate_reflexive_pair(const ReflexivePair& p);

struct Quotient {
  StructRef object;
  Morphism sigma;
};

/// Quotient by the congruence generated by the pairs (classes of 0 first,
/// then by smallest representative). For pointed sets this is the plain
/// equivalence closure.
Quotient quotient_by_pairs(const StructRef& x, const std::vector<std::pair<int, int>>& pairs);
Quotient coequalizer(const ReflexivePair& p);
/// The unique q' with q' * sigma = q, or nullopt if q does not coequalize.
std::optional<Morphism> factor_through(const Quotient& q, const Morphism& m);

/// Tabled kinds: the images of f and g generate the target. Pointed sets:
/// decided by the probe family below.
bool jointly_epic(const Morphism& f, const Morphism& g);
/// Probe-family definition: for every probe C and u, v : A -> C, agreement
/// along f and g forces u = v.
bool jointly_epic_by_probe(const Morphism& f, const Morphism& g,
                           const std::vector<StructRef>& probes);
/// Default probes: A itself plus its quotients up to isomorphism. Pointed
/// sets: every smaller pointed set. Tabled kinds: quotients collapsing a
/// submagma generated by at most two elements.
std::vector<StructRef> default_probes(const StructRef& a);

}  // namespace icat
