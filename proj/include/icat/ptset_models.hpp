#pragma once

#include <optional>
#include <string>
#include <vector>

#include "icat/graphs.hpp"

namespace icat {

/// A finite category with explicit arrows. comp[g * |arrows| + f] is g.f,
/// or -1 when cod f != dom g.
struct ConcreteCategory {
  int objects = 0;
  std::vector<std::string> labels;
  std::vector<int> dom;
  std::vector<int> cod;
  std::vector<int> id;  // identity arrow per object
  std::vector<int> comp;
  /// Set by constructions that know their associativity independently.
  std::optional<bool> associative;

  int arrows() const { return static_cast<int>(dom.size()); }
  int compose(int g, int f) const { return comp[static_cast<size_t>(g) * arrows() + f]; }
};

struct CategoryVerdict {
  bool ok = true;           // everything except associativity
  bool associative = true;
  std::string law;
  std::string witness;
};

/// Composition defined exactly on matching pairs, dom/cod of composites,
/// identities, and (separately) associativity.
CategoryVerdict check_category_laws(const ConcreteCategory& c);

/// Objects C0, arrows C1, composition from m through the pullback.
/// Throws kLawViolation if the precategory is not a pullback.
ConcreteCategory category_from_internal(const Precategory& p);

/// V(h) over the wedge split epi.
Precategory star_precategory(const Morphism& h);
/// Objects B; arrows 1_b then x in X \ {0} with dom 0 and cod h(x).
/// Throws kKernelNotTrivial naming the first x != 0 with h(x) = 0.
ConcreteCategory star_category(const Morphism& h);

/// xi : X x B -> B at xi[x * |B| + b]; optional mu data with
/// mu[(y * |B| + b) * |X| + x] = y +_b x.
struct FiberedAction {
  StructRef x;
  StructRef b;
  std::vector<int> xi;
  std::optional<StructRef> y;
  std::optional<Morphism> alpha;  // Y -> X
  std::optional<Morphism> beta;   // X -> Y
  std::vector<int> mu;

  bool has_mu() const { return y.has_value(); }
  int act(int x, int base) const { return xi[static_cast<size_t>(x) * b->order() + base]; }
  int plus(int yy, int base, int xx) const {
    return mu[(static_cast<size_t>(yy) * b->order() + base) * x->order() + xx];
  }
};

struct LawFailure {
  std::string law;
  std::string witness;
};

struct FiberedVerdict {
  bool ok = true;
  std::vector<LawFailure> failures;  // one entry per violated law
};

FiberedVerdict validate_fibered_action(const FiberedAction& f);
/// The extra condition (x'' +_{x.b} x') +_b x = x'' +_b (x' +_b x);
/// requires X = Y and alpha = beta = 1.
std::optional<LawFailure> check_model_associativity(const FiberedAction& f);

/// The precategory Y x (X x B) => X x B => B with p2 = pi2, p1 = alpha x xi,
/// e2 = <0, 1>, e1 = beta x <0, 1>, m = mu. Throws kLawViolation.
Precategory product_model_precategory(const FiberedAction& f);
/// Objects B, arrows (x, b) : b -> x.b, (x', x.b)(x, b) = (x' +_b x, b).
/// Throws kLawViolation unless X = Y, alpha = beta = 1 and the laws hold.
ConcreteCategory product_model_category(const FiberedAction& f);

/// x.b = x xor b and y +_b x = y xor x on two-element carriers.
FiberedAction xor_model();

/// First model (ordered by |X| + |B|, then tables) satisfying the
/// displayed laws with X = Y, alpha = beta = 1 but not the associativity
/// condition; nullopt if none exists up to the bounds.
std::optional<FiberedAction> search_nonassociative_model(int max_x, int max_b);

}  // namespace icat
