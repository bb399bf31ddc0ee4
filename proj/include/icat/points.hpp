#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "icat/constructions.hpp"
#include "icat/structure.hpp"

namespace icat {

/// A point (A, alpha, beta, B) with alpha * beta = 1 and its cached kernel.
class SplitEpi {
 public:
  SplitEpi(Morphism alpha, Morphism beta);

  const StructRef& top() const { return alpha_.source(); }
  const StructRef& base() const { return alpha_.target(); }
  const Morphism& alpha() const { return alpha_; }
  const Morphism& beta() const { return beta_; }
  const StructRef& kernel_object() const { return kernel_.object; }
  const Morphism& k() const { return kernel_.k; }

 private:
  Morphism alpha_;
  Morphism beta_;
  Kernel kernel_;
};

/// Morphism of points: top h : A -> A', bottom g : B -> B', and the
/// derived restriction f : K -> K' with h k = k' f.
class PointMorphism {
 public:
  /// Throws kInvalidDiagram unless both squares commute.
  PointMorphism(SplitEpi from, SplitEpi to, Morphism top, Morphism bottom);

  const SplitEpi& from() const { return from_; }
  const SplitEpi& to() const { return to_; }
  const Morphism& top() const { return top_; }
  const Morphism& bottom() const { return bottom_; }
  const Morphism& restricted() const { return restricted_; }

 private:
  SplitEpi from_;
  SplitEpi to_;
  Morphism top_;
  Morphism bottom_;
  Morphism restricted_;
};

PointMorphism compose(const PointMorphism& second, const PointMorphism& first);

/// T(X, B) = (X + B, [0 1], i2, B).
SplitEpi functor_T(const StructRef& x, const StructRef& b);

struct KernelPair {
  StructRef kernel;
  StructRef base;
};
/// S(A, alpha, beta, B) = (K[alpha], B).
KernelPair functor_S(const SplitEpi& p);

/// Exhaustive kernel universal property of `k` for `alpha`, quantified
/// over morphisms out of every structure in `sources`. Returns the first
/// failure.
std::optional<std::string> verify_kernel(const Morphism& k, const Morphism& alpha,
                                         const std::vector<StructRef>& sources);

struct AxiomVerdict {
  bool holds = true;
  std::string witness;
};

/// i1 is the kernel of [0 1] : X + B -> B, checked against all morphisms
/// out of the `kind` corpus up to `source_bound`.
AxiomVerdict check_A1(const StructRef& x, const StructRef& b, int source_bound = 6);

/// True iff the top of `m` is an isomorphism. Throws kInvalidDiagram
/// unless f and g are bijective.
bool check_split_five_lemma(const PointMorphism& m);

struct ComparisonResult {
  Morphism comparison;  // [k beta] : K + B -> A
  bool iso = false;
};
ComparisonResult comparison_iso(const SplitEpi& p);

/// All split epis with top `a` and base in `bases` (|B| <= |A|).
std::vector<SplitEpi> split_epis_over(const StructRef& a, const std::vector<StructRef>& bases);
/// Split epis with |A| <= max_size over the kind's corpus. With
/// `representatives`, one per isomorphism class in Pt.
std::vector<SplitEpi> enumerate_split_epis(Kind kind, int max_size, bool representatives);

struct A2Witness {
  SplitEpi from;
  SplitEpi to;
  Morphism f;
  Morphism g;
  Morphism h;
};

struct A2SearchStats {
  size_t split_epis = 0;
  size_t point_morphisms = 0;
};

/// Visits every point morphism between enumerated split epis whose
/// restriction and bottom are isomorphisms.
void for_each_iso_flanked_morphism(const std::vector<SplitEpi>& points,
                                   const std::function<bool(const A2Witness&)>& visit);

struct A2SearchOptions {
  /// Enumerate one split epi per isomorphism class in Pt.
  bool representatives = false;
  /// Skip points whose kernel or base has fewer elements.
  int min_factor = 1;
};

/// Smallest diagram (by |A|+|A'|, then |A|, then the serialized maps)
/// with f and g iso and h not iso; nullopt if none exists up to the bound.
std::optional<A2Witness> search_A2_counterexample(Kind kind, int max_size,
                                                  const A2SearchOptions& opts = {},
                                                  A2SearchStats* stats = nullptr);

/// Isomorphism in Pt: a point morphism whose top and bottom are iso.
bool points_isomorphic(const SplitEpi& p, const SplitEpi& q);

}  // namespace icat
