#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "icat/actions.hpp"
#include "icat/graphs.hpp"
#include "icat/points.hpp"

namespace icat {

/// Object of a registered category A: component structures, structure
/// maps and an optional table. parts[1] is always the base I(A).
struct AObject {
  std::vector<StructRef> parts;
  std::vector<Morphism> maps;
  std::vector<int> table;

  bool operator==(const AObject& o) const;
};

/// Morphism of A, one component per part.
struct AArrow {
  AObject dom;
  AObject cod;
  std::vector<Morphism> comps;

  bool operator==(const AArrow& o) const { return comps == o.comps && dom == o.dom && cod == o.cod; }
};

AArrow compose(const AArrow& g, const AArrow& f);
AArrow identity(const AObject& a);

/// (I, G, pi) with functors given as closures over finite objects.
struct HalfReflection {
  std::string name;
  Kind kind = Kind::kPointedSet;
  std::function<StructRef(const AObject&)> i_obj;
  std::function<Morphism(const AArrow&)> i_arr;
  std::function<AObject(const StructRef&)> g_obj;
  std::function<AArrow(const Morphism&)> g_arr;
  std::function<AArrow(const AObject&)> pi;  // A -> G I A
  std::function<std::optional<std::string>(const AObject&)> object_failure;
  std::function<std::optional<std::string>(const AArrow&)> arrow_failure;
  /// Every arrow A -> A'.
  std::function<std::vector<AArrow>(const AObject&, const AObject&)> hom;
};

/// Left adjoint F of G with unit eta_A : A -> G F A and counit
/// epsilon_B : F G B -> B.
struct AdjointData {
  std::function<StructRef(const AObject&)> f_obj;
  std::function<Morphism(const AArrow&)> f_arr;
  std::function<AArrow(const AObject&)> eta;
  std::function<Morphism(const StructRef&)> epsilon;
};

/// J : A -> B with J G = 1.
struct JData {
  std::function<StructRef(const AObject&)> j_obj;
  std::function<Morphism(const AArrow&)> j_arr;
};

struct Model {
  HalfReflection hr;
  std::optional<AdjointData> adj;
  std::optional<JData> j;
};

/// Pairs (X, B) with I = second component, G(B) = (B, B), pi = (0, 1),
/// F = coproduct when the kind has one.
Model pairs_model(Kind kind);
/// Points (A, alpha, beta, B) with G(B) = (B x B, pi2, <1,1>, B),
/// pi = (<alpha, alpha>, 1), F = top object, J = kernel object.
Model points_model(Kind kind);
/// Group actions with G(B) = conjugation, pi = (0, 1), F = semidirect
/// product, J = acted-on object.
Model actions_model();

AObject pair_object(const StructRef& x, const StructRef& b);
AObject point_object(const SplitEpi& p);
AObject action_object(const GroupAction& a);
SplitEpi as_split_epi(const AObject& a);
GroupAction as_action(const AObject& a);

/// Finite corpus for a model: objects, all arrows between them, base
/// objects and base morphisms.
struct ModelCorpus {
  std::vector<AObject> objects;
  std::vector<AArrow> arrows;
  std::vector<StructRef> bases;
  std::vector<Morphism> base_arrows;
};

ModelCorpus model_corpus(const Model& m, std::vector<AObject> objects, std::vector<StructRef> bases);

/// IG = 1, I pi = 1, naturality of pi and pi_{GIA} pi_A = pi_A on the
/// corpus; the first failure is witnessed.
Verdict check_halfreflection(const HalfReflection& hr, const ModelCorpus& corpus);
/// Unit and counit well-typed and natural, and both triangle identities.
Verdict check_adjunction(const Model& m, const ModelCorpus& corpus);
/// Number of natural families pi with I pi = 1 on the corpus, capped at
/// `limit`.
size_t count_natural_pis(const HalfReflection& hr, const ModelCorpus& corpus, size_t limit = 1000);

/// (F A, epsilon_{IA} F(pi_A), I(eta_A), I A); throws kTriangleLawViolated
/// if the composite is not the identity.
SplitEpi canonical_to_points(const Model& m, const AObject& a);
/// epsilon_{IA} F(pi_A).
Morphism pi_prime(const Model& m, const AObject& a);

struct Theorem1Data {
  Product g1;      // B x B
  Morphism pi;     // second projection
  Morphism delta;  // <1, 1>
  Morphism eps;    // first projection
};

Theorem1Data theorem1_data(const StructRef& b);
/// <f, f beta alpha>.
Morphism theorem1_lift(const Theorem1Data& d, const SplitEpi& p, const Morphism& f);
/// Every f' : A -> B x B with eps f' = f and delta pi f' = f' beta alpha.
std::vector<Morphism> theorem1_lifts(const Theorem1Data& d, const SplitEpi& p, const Morphism& f);
/// <1, 0> : B -> B x B.
Morphism theorem1_kernel_embedding(const Theorem1Data& d);

struct A1Object {
  AObject a;
  AArrow u;  // A -> G I A with I(u) = 1
};

struct A2Object {
  A1Object e;
  A1Object base;
  AArrow a;  // A_1 morphism E -> A
  AArrow b;  // A -> E with a b = 1
};

struct A1A2 {
  std::vector<A1Object> a1;
  std::vector<A2Object> a2;
  std::vector<A2Object> a2_star;
};

/// Objects over A with I(u) = 1.
std::vector<A1Object> a1_objects(const Model& m, const AObject& a);
/// IE = FA, I(a) = eps F(u), v b = eta_A, G(pi'_A) pi_E = G(pi'_A) v.
std::vector<ConditionResult> a2_star_conditions(const Model& m, const A2Object& o);
A1A2 build_A1_A2(const Model& m, const std::vector<AObject>& objects);

/// The diagram F E => I E = F A => I A with its structure maps.
struct RestrictedDiagram {
  Morphism pi_e;     // F E -> I E
  Morphism f_a;      // F E -> F A
  Morphism f_b;      // F A -> F E
  Morphism i_eta_e;  // I E -> F E
  Morphism m;        // F E -> I E
  Morphism pi_a;     // F A -> I A
  Morphism c;        // F A -> I A
  Morphism i_eta_a;  // I A -> F A
  Morphism i_a;      // I E -> I A
  Morphism i_b;      // I A -> I E
};

struct C17Verdict {
  std::vector<ConditionResult> conditions;  // c1 .. c7
  bool all = true;
  bool multiplicative = true;  // c1 .. c5
  bool c1_implied = true;      // (c2, c3, I(a) I(b) = 1) => c1
};

C17Verdict check_c1_c7(const RestrictedDiagram& d);
/// Structure maps from (E, A, a, b) with the given c and m.
RestrictedDiagram restricted_diagram(const Model& m, const AObject& e, const AObject& a, const AArrow& arr_a,
                                     const AArrow& arr_b, const Morphism& c, const Morphism& mult);
/// c = eps F(u), m = eps F(v).
RestrictedDiagram diagram_from_A2(const Model& m, const A2Object& o);
/// C2 = FE, C1 = FA, C0 = IA with p1 = F(a), p2 = pi'_E.
Precategory precategory_from_diagram(const RestrictedDiagram& d);

struct TranslationRow {
  std::string name;
  bool b_side = false;
  bool a_side = false;
};

/// Each condition evaluated on the B side (c, m) and on the A side with
/// u = G(c) eta_A, v = G(m) eta_E.
std::vector<TranslationRow> translation_table(const Model& m, const AObject& e, const AObject& a,
                                              const AArrow& arr_a, const AArrow& arr_b, const Morphism& c,
                                              const Morphism& mult);

enum class BracketStatus { kUnique, kNotAdmissible, kNotUnique };

struct BracketResult {
  BracketStatus status = BracketStatus::kNotAdmissible;
  std::optional<Morphism> bracket;
  std::optional<Morphism> second;  // a distinct solution when not unique
};

/// Every alpha with alpha j = f and alpha i = g, by exhaustive search.
BracketResult bracket_search(const Morphism& j, const Morphism& i, const Morphism& f, const Morphism& g);
/// [f g] out of FA along J(eta_A) and I(eta_A).
BracketResult cooperative_bracket(const Model& m, const AObject& a, const Morphism& f, const Morphism& g);
/// (F A, pi'_A, [h 1], I(eta_A)); throws kFactorizationFailure when (h, 1)
/// is not cooperative.
ReflexiveGraph rg_from_cooperative(const Model& m, const AObject& a, const Morphism& h);

struct JVerdict {
  std::vector<ConditionResult> conditions;  // JG = 1, jointly epic, factorization
  bool ok = true;
  int bound = 0;  // largest |F A| among the objects checked
};

JVerdict check_J_conditions(const Model& m, const std::vector<AObject>& objects,
                            const std::vector<StructRef>& bases);

/// Full subcategory of points over unital magmas with (ker alpha, beta)
/// jointly epic, registered over the given right-cancellative magmas.
struct MagmaRegistration {
  Model model;
  std::vector<AObject> objects;
  std::vector<SplitEpi> excluded;
  int bound = 0;
  JVerdict j;
};

/// Throws kRightCancellationViolated for a base without right cancellation.
MagmaRegistration magma_subcategory_A(const std::vector<StructRef>& magmas);
bool right_cancellative(const Structure& s);

struct JointEpicFailure {
  StructRef magma;
  Morphism u;  // B x B -> C
  Morphism v;
};

/// (<1,0>, <1,1>) into B x B, by generation.
bool square_pair_jointly_epic(const StructRef& b);
/// First unital magma (by size, then table order) where two distinct
/// maps out of B x B agree along <1,0> and <1,1>.
std::optional<JointEpicFailure> search_joint_epic_failure(int min_size, int max_size);

}  // namespace icat
