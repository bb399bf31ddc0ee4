#pragma once

#include <optional>
#include <string>
#include <vector>

#include "icat/graphs.hpp"
#include "icat/points.hpp"

namespace icat {

/// B acting on X by automorphisms; act[b * |X| + x] (rows = b).
struct GroupAction {
  StructRef x;
  StructRef b;
  std::vector<int> act;

  int operator()(int bb, int xx) const { return act[static_cast<size_t>(bb) * x->order() + xx]; }
};

/// Throws kKindMismatch for non-group objects and kInvalidAction when the
/// table is not an action by automorphisms.
void validate_action(const GroupAction& a);
std::optional<std::string> action_failure(const GroupAction& a);

GroupAction trivial_action(const StructRef& x, const StructRef& b);
/// B acting on itself by b x b^-1.
GroupAction conjugation_G(const StructRef& b);
/// Every action of B on X, one per homomorphism B -> Aut(X).
std::vector<GroupAction> enumerate_actions(const StructRef& x, const StructRef& b);

struct Semidirect {
  SplitEpi point;    // X x| B -> B with section b -> (0, b)
  Morphism sigma1;   // x -> (x, 0)
  Morphism sigma2;   // b -> (0, b)
};

/// (x, b)(x', b') = (x act(b, x'), b b') with (x, b) at x * |B| + b.
Semidirect semidirect_product(const GroupAction& a);
SplitEpi functor_T_act(const GroupAction& a);
/// act(b, x) = k^-1(beta(b) k(x) beta(b)^-1).
GroupAction functor_S_act(const SplitEpi& p);
/// (x, b) -> k(x) beta(b) : T(S(p)) -> p; throws kComparisonNotIso when
/// not bijective.
Morphism comparison_act(const SplitEpi& p);

struct AxiomCheck {
  bool holds = false;
  std::string witness;
};

struct SemidirectAxioms {
  AxiomCheck jointly_epic;  // (k, beta)
  AxiomCheck central;       // a unique [0 1] with [0 1] beta = 1, [0 1] k = 0
  AxiomCheck kernel;        // k is the kernel of [0 1]
  std::optional<Morphism> zero_one;
  bool all() const { return jointly_epic.holds && central.holds && kernel.holds; }
};

SemidirectAxioms check_semidirect_axioms(const SplitEpi& p);

struct PreCrossedModule {
  GroupAction action;
  Morphism h;  // X -> B
};

/// Throws kInvalidAction unless h(act(b, x)) = b h(x) b^-1.
void validate_pxm(const PreCrossedModule& p);

struct PeifferVerdict {
  bool holds = true;
  int x = -1;
  int x2 = -1;
};

/// act(h(x), x') = x x' x^-1 for all x, x'; the first failing pair in
/// index order otherwise.
PeifferVerdict check_peiffer(const PreCrossedModule& p);
/// Every failing pair (x, x').
std::vector<std::pair<int, int>> peiffer_failures(const PreCrossedModule& p);

/// Graph on X x| B: d = projection, e = (0, -), c(x, b) = h(x) b.
ReflexiveGraph rg_from_pxm(const PreCrossedModule& p);

struct PxmClassification {
  PreCrossedModule pxm;
  Morphism iso;  // (x, b) -> k(x) e(b)
};
PxmClassification pxm_from_rg(const ReflexiveGraph& g);
Verdict verify_pxm_certificate(const ReflexiveGraph& g, const PxmClassification& cls);

/// Every precrossed module X -> B; with `crossed`, only those satisfying
/// the Peiffer identity.
std::vector<PreCrossedModule> enumerate_pxms(const StructRef& x, const StructRef& b, bool crossed);

/// Z --t--> X --h--> B with B acting on X, X acting on Z, and
/// F(X, B) = X x| B acting on F(Z, X) = Z x| X.
struct ChainCompData {
  Morphism t;
  Morphism h;
  GroupAction xi_x;
  GroupAction xi_z;
  GroupAction xi_f;
};

struct ConditionResult {
  std::string name;
  bool holds = true;
  std::string witness;
};

struct ChainCompVerdict {
  bool ok = true;
  /// Action validity of xi_x, xi_z, xi_f, then the five conditions.
  std::vector<ConditionResult> conditions;
};

/// Throws kChainConditionViolated unless ht = 0.
ChainCompVerdict validate_chaincomp(const ChainCompData& d);

/// Z = ker h with t the inclusion, xi_z conjugation in X, and
/// xi_f((x, b), (z, x')) = (act(h(x) b, z), act(h(x) b, x')).
ChainCompData chaincomp_from_crossed_module(const PreCrossedModule& p);

}  // namespace icat
