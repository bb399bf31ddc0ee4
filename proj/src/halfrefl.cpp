#include "icat/halfrefl.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "icat/corpus.hpp"
#include "icat/homs.hpp"

namespace icat {
namespace {

std::string label(const StructRef& s) {
  return s->name().empty() ? "<" + std::to_string(s->order()) + ">" : s->name();
}

std::string describe(const AObject& a) {
  std::string out = "(";
  for (size_t i = 0; i < a.parts.size(); ++i) out += (i ? ", " : "") + label(a.parts[i]);
  return out + ")";
}

std::string describe(const Morphism& f) {
  std::string out = "[";
  for (size_t i = 0; i < f.map().size(); ++i) out += (i ? " " : "") + std::to_string(f.map()[i]);
  return out + "]";
}

// First element where two parallel maps differ, or empty if equal.
std::optional<std::string> differ(const Morphism& f, const Morphism& g) {
  if (!(*f.source() == *g.source()) || !(*f.target() == *g.target())) return "ill-typed";
  for (size_t i = 0; i < f.map().size(); ++i)
    if (f.map()[i] != g.map()[i])
      return "at " + std::to_string(i) + ": " + std::to_string(f.map()[i]) + " vs " + std::to_string(g.map()[i]);
  return std::nullopt;
}

// Equality of two composites that may be ill-typed.
template <class L, class R>
std::optional<std::string> differ_lazy(L lhs, R rhs) {
  try {
    return differ(lhs(), rhs());
  } catch (const Error&) {
    return "ill-typed";
  }
}

bool equal_arrows(const AArrow& f, const AArrow& g) { return f == g; }

std::optional<std::string> component_failure(const AArrow& f) {
  if (f.comps.size() != f.dom.parts.size() || f.comps.size() != f.cod.parts.size()) return "component count";
  for (size_t i = 0; i < f.comps.size(); ++i) {
    if (!(*f.comps[i].source() == *f.dom.parts[i])) return "component " + std::to_string(i) + " source";
    if (!(*f.comps[i].target() == *f.cod.parts[i])) return "component " + std::to_string(i) + " target";
  }
  return std::nullopt;
}

Morphism product_map(const Morphism& f, const Morphism& g) {
  auto from = product(f.source(), g.source());
  auto to = product(f.target(), g.target());
  return pairing(to, compose(f, from.p1), compose(g, from.p2));
}

AObject point_object_raw(const Morphism& alpha, const Morphism& beta) {
  return {{alpha.source(), alpha.target()}, {alpha, beta}, {}};
}

AObject g_points(const StructRef& b) {
  auto prod = product(b, b);
  return point_object_raw(prod.p2, pairing(prod, identity(b), identity(b)));
}

// The unique map into ker(alpha) through which f factors.
Morphism into_kernel(const Kernel& k, const Morphism& f) {
  std::vector<int> index(k.k.target()->order(), -1);
  for (int i = 0; i < k.object->order(); ++i) index[k.k(i)] = i;
  std::vector<int> m(f.source()->order());
  for (int x = 0; x < f.source()->order(); ++x) {
    m[x] = index[f(x)];
    if (m[x] < 0) throw Error(ErrorCode::kFactorizationFailure, "map does not land in the kernel");
  }
  return Morphism(Morphism::Trusted{}, f.source(), k.object, std::move(m));
}

Morphism retarget(const Morphism& f, const StructRef& target) {
  return Morphism(Morphism::Trusted{}, f.source(), target, f.map());
}

const AdjointData& adjoint(const Model& m) {
  if (!m.adj) throw Error(ErrorCode::kUnsupportedConstruction, m.hr.name + ": G has no registered left adjoint");
  return *m.adj;
}

const JData& jdata(const Model& m) {
  if (!m.j) throw Error(ErrorCode::kUnsupportedConstruction, m.hr.name + ": no J functor registered");
  return *m.j;
}

std::optional<std::string> points_arrow_failure(const AArrow& f) {
  if (auto c = component_failure(f)) return c;
  const auto &a = f.dom.maps, &a2 = f.cod.maps;
  if (compose(f.comps[1], a[0]) != compose(a2[0], f.comps[0])) return "f0 alpha = alpha' f1";
  if (compose(f.comps[0], a[1]) != compose(a2[1], f.comps[1])) return "f1 beta = beta' f0";
  return std::nullopt;
}

}  // namespace

bool AObject::operator==(const AObject& o) const {
  if (parts.size() != o.parts.size() || maps != o.maps || table != o.table) return false;
  for (size_t i = 0; i < parts.size(); ++i)
    if (!(*parts[i] == *o.parts[i])) return false;
  return true;
}

AArrow compose(const AArrow& g, const AArrow& f) {
  if (!(f.cod == g.dom)) throw Error(ErrorCode::kInvalidMorphism, "compose: arrows are not composable");
  AArrow out{f.dom, g.cod, {}};
  for (size_t i = 0; i < f.comps.size(); ++i) out.comps.push_back(compose(g.comps[i], f.comps[i]));
  return out;
}

AArrow identity(const AObject& a) {
  AArrow out{a, a, {}};
  for (const auto& p : a.parts) out.comps.push_back(identity(p));
  return out;
}

AObject pair_object(const StructRef& x, const StructRef& b) { return {{x, b}, {}, {}}; }

AObject point_object(const SplitEpi& p) { return point_object_raw(p.alpha(), p.beta()); }

AObject action_object(const GroupAction& a) { return {{a.x, a.b}, {}, a.act}; }

SplitEpi as_split_epi(const AObject& a) {
  if (a.maps.size() != 2) throw Error(ErrorCode::kBadInput, "object is not a point");
  return SplitEpi(a.maps[0], a.maps[1]);
}

GroupAction as_action(const AObject& a) {
  if (a.parts.size() != 2 || a.table.empty()) throw Error(ErrorCode::kBadInput, "object is not an action");
  return {a.parts[0], a.parts[1], a.table};
}

Model pairs_model(Kind kind) {
  Model m;
  auto& hr = m.hr;
  hr.name = "pairs";
  hr.kind = kind;
  hr.i_obj = [](const AObject& a) { return a.parts[1]; };
  hr.i_arr = [](const AArrow& f) { return f.comps[1]; };
  hr.g_obj = [](const StructRef& b) { return pair_object(b, b); };
  hr.g_arr = [](const Morphism& f) {
    return AArrow{pair_object(f.source(), f.source()), pair_object(f.target(), f.target()), {f, f}};
  };
  hr.pi = [](const AObject& a) {
    const auto &x = a.parts[0], &b = a.parts[1];
    return AArrow{a, pair_object(b, b), {zero_morphism(x, b), identity(b)}};
  };
  hr.object_failure = [kind](const AObject& a) -> std::optional<std::string> {
    if (a.parts.size() != 2 || !a.maps.empty() || !a.table.empty()) return "not a pair";
    if (a.parts[0]->kind() != kind || a.parts[1]->kind() != kind) return "kind";
    return std::nullopt;
  };
  hr.arrow_failure = component_failure;
  hr.hom = [](const AObject& a, const AObject& a2) {
    std::vector<AArrow> out;
    auto gs = all_morphisms(a.parts[1], a2.parts[1]);
    for (const auto& f : all_morphisms(a.parts[0], a2.parts[0]))
      for (const auto& g : gs) out.push_back({a, a2, {f, g}});
    return out;
  };
  if (coproduct_supported(kind)) {
    AdjointData adj;
    adj.f_obj = [](const AObject& a) { return coproduct(a.parts[0], a.parts[1]).object; };
    adj.f_arr = [](const AArrow& f) {
      return coproduct_map(coproduct(f.dom.parts[0], f.dom.parts[1]), coproduct(f.cod.parts[0], f.cod.parts[1]),
                           f.comps[0], f.comps[1]);
    };
    adj.eta = [](const AObject& a) {
      auto cop = coproduct(a.parts[0], a.parts[1]);
      return AArrow{a, pair_object(cop.object, cop.object), {cop.i1, cop.i2}};
    };
    adj.epsilon = [](const StructRef& b) { return copairing(coproduct(b, b), identity(b), identity(b)); };
    m.adj = adj;
  }
  m.j = JData{[](const AObject& a) { return a.parts[0]; }, [](const AArrow& f) { return f.comps[0]; }};
  return m;
}

Model points_model(Kind kind) {
  Model m;
  auto& hr = m.hr;
  hr.name = "points";
  hr.kind = kind;
  hr.i_obj = [](const AObject& a) { return a.parts[1]; };
  hr.i_arr = [](const AArrow& f) { return f.comps[1]; };
  hr.g_obj = g_points;
  hr.g_arr = [](const Morphism& f) {
    return AArrow{g_points(f.source()), g_points(f.target()), {product_map(f, f), f}};
  };
  hr.pi = [](const AObject& a) {
    const auto& b = a.parts[1];
    auto prod = product(b, b);
    return AArrow{a, g_points(b), {pairing(prod, a.maps[0], a.maps[0]), identity(b)}};
  };
  hr.object_failure = [kind](const AObject& a) -> std::optional<std::string> {
    if (a.parts.size() != 2 || a.maps.size() != 2 || !a.table.empty()) return "not a point";
    if (a.parts[0]->kind() != kind || a.parts[1]->kind() != kind) return "kind";
    if (!(*a.maps[0].source() == *a.parts[0]) || !(*a.maps[0].target() == *a.parts[1])) return "alpha typed";
    if (!(*a.maps[1].source() == *a.parts[1]) || !(*a.maps[1].target() == *a.parts[0])) return "beta typed";
    if (compose(a.maps[0], a.maps[1]) != identity(a.parts[1])) return "alpha beta = 1";
    return std::nullopt;
  };
  hr.arrow_failure = points_arrow_failure;
  hr.hom = [](const AObject& a, const AObject& a2) {
    std::vector<AArrow> out;
    for (const auto& f1 : all_morphisms(a.parts[0], a2.parts[0])) {
      AArrow f{a, a2, {f1, compose(a2.maps[0], compose(f1, a.maps[1]))}};
      if (!points_arrow_failure(f)) out.push_back(std::move(f));
    }
    return out;
  };
  AdjointData adj;
  adj.f_obj = [](const AObject& a) { return a.parts[0]; };
  adj.f_arr = [](const AArrow& f) { return f.comps[0]; };
  adj.eta = [](const AObject& a) {
    const auto& top = a.parts[0];
    auto prod = product(top, top);
    auto ba = compose(a.maps[1], a.maps[0]);
    return AArrow{a, g_points(top), {pairing(prod, identity(top), ba), a.maps[1]}};
  };
  adj.epsilon = [](const StructRef& b) { return product(b, b).p1; };
  m.adj = adj;
  m.j = JData{[](const AObject& a) { return kernel(a.maps[0]).object; },
              [](const AArrow& f) {
                auto k = kernel(f.dom.maps[0]);
                return into_kernel(kernel(f.cod.maps[0]), compose(f.comps[0], k.k));
              }};
  return m;
}

Model actions_model() {
  Model m;
  auto& hr = m.hr;
  hr.name = "actions";
  hr.kind = Kind::kGroup;
  hr.i_obj = [](const AObject& a) { return a.parts[1]; };
  hr.i_arr = [](const AArrow& f) { return f.comps[1]; };
  hr.g_obj = [](const StructRef& b) { return action_object(conjugation_G(b)); };
  hr.g_arr = [](const Morphism& f) {
    return AArrow{action_object(conjugation_G(f.source())), action_object(conjugation_G(f.target())), {f, f}};
  };
  hr.pi = [](const AObject& a) {
    const auto& b = a.parts[1];
    return AArrow{a, action_object(conjugation_G(b)), {zero_morphism(a.parts[0], b), identity(b)}};
  };
  hr.object_failure = [](const AObject& a) -> std::optional<std::string> {
    if (a.parts.size() != 2 || !a.maps.empty()) return "not an action";
    return action_failure(as_action(a));
  };
  auto equivariance = [](const AArrow& f) -> std::optional<std::string> {
    if (auto c = component_failure(f)) return c;
    auto a = as_action(f.dom), a2 = as_action(f.cod);
    const auto &fx = f.comps[0], &fb = f.comps[1];
    for (int b = 0; b < a.b->order(); ++b)
      for (int x = 0; x < a.x->order(); ++x)
        if (fx(a(b, x)) != a2(fb(b), fx(x)))
          return "equivariance at (" + std::to_string(b) + ", " + std::to_string(x) + ")";
    return std::nullopt;
  };
  hr.arrow_failure = equivariance;
  hr.hom = [equivariance](const AObject& a, const AObject& a2) {
    std::vector<AArrow> out;
    auto fbs = all_morphisms(a.parts[1], a2.parts[1]);
    for (const auto& fx : all_morphisms(a.parts[0], a2.parts[0]))
      for (const auto& fb : fbs) {
        AArrow f{a, a2, {fx, fb}};
        if (!equivariance(f)) out.push_back(std::move(f));
      }
    return out;
  };
  AdjointData adj;
  adj.f_obj = [](const AObject& a) { return semidirect_product(as_action(a)).point.top(); };
  adj.f_arr = [](const AArrow& f) {
    auto from = semidirect_product(as_action(f.dom)).point.top();
    auto to = semidirect_product(as_action(f.cod)).point.top();
    const int nb = f.dom.parts[1]->order(), nb2 = f.cod.parts[1]->order();
    std::vector<int> map(from->order());
    for (int i = 0; i < from->order(); ++i) map[i] = f.comps[0](i / nb) * nb2 + f.comps[1](i % nb);
    return Morphism(from, to, std::move(map));
  };
  adj.eta = [](const AObject& a) {
    auto s = semidirect_product(as_action(a));
    return AArrow{a, action_object(conjugation_G(s.point.top())), {s.sigma1, s.sigma2}};
  };
  adj.epsilon = [](const StructRef& b) {
    auto top = semidirect_product(conjugation_G(b)).point.top();
    const int n = b->order();
    std::vector<int> map(top->order());
    for (int i = 0; i < top->order(); ++i) map[i] = b->op(i / n, i % n);
    return Morphism(top, b, std::move(map));
  };
  m.adj = adj;
  m.j = JData{[](const AObject& a) { return a.parts[0]; }, [](const AArrow& f) { return f.comps[0]; }};
  return m;
}

ModelCorpus model_corpus(const Model& m, std::vector<AObject> objects, std::vector<StructRef> bases) {
  ModelCorpus c;
  for (const auto& a : objects)
    if (auto f = m.hr.object_failure(a))
      throw Error(ErrorCode::kBadInput, m.hr.name + ": invalid object " + describe(a) + ": " + *f);
  for (const auto& a : objects)
    for (const auto& a2 : objects)
      for (auto& f : m.hr.hom(a, a2)) c.arrows.push_back(std::move(f));
  for (const auto& b : bases)
    for (const auto& b2 : bases)
      for (auto& f : all_morphisms(b, b2)) c.base_arrows.push_back(std::move(f));
  c.objects = std::move(objects);
  c.bases = std::move(bases);
  return c;
}

Verdict check_halfreflection(const HalfReflection& hr, const ModelCorpus& corpus) {
  for (const auto& b : corpus.bases) {
    auto g = hr.g_obj(b);
    if (auto f = hr.object_failure(g)) return {false, "G(B) is an object", label(b) + ": " + *f};
    if (!(*hr.i_obj(g) == *b)) return {false, "IG = 1", label(b)};
  }
  for (const auto& f : corpus.base_arrows) {
    auto gf = hr.g_arr(f);
    if (auto e = hr.arrow_failure(gf)) return {false, "G(f) is an arrow", describe(f) + ": " + *e};
    if (hr.i_arr(gf) != f) return {false, "IG = 1", describe(f)};
  }
  for (const auto& a : corpus.objects) {
    auto p = hr.pi(a);
    auto gia = hr.g_obj(hr.i_obj(a));
    if (!(p.dom == a) || !(p.cod == gia)) return {false, "pi_A : A -> GIA", describe(a)};
    if (auto e = hr.arrow_failure(p)) return {false, "pi_A is an arrow", describe(a) + ": " + *e};
    if (hr.i_arr(p) != identity(hr.i_obj(a))) return {false, "I pi = 1", describe(a)};
    if (!equal_arrows(compose(hr.pi(gia), p), p)) return {false, "pi_GIA pi_A = pi_A", describe(a)};
  }
  for (const auto& f : corpus.arrows) {
    auto lhs = compose(hr.g_arr(hr.i_arr(f)), hr.pi(f.dom));
    auto rhs = compose(hr.pi(f.cod), f);
    if (!equal_arrows(lhs, rhs))
      return {false, "naturality of pi", describe(f.dom) + " -> " + describe(f.cod)};
  }
  return {};
}

Verdict check_adjunction(const Model& m, const ModelCorpus& corpus) {
  if (!m.adj) return {false, "left adjoint", "absent"};
  const auto& hr = m.hr;
  const auto& adj = *m.adj;
  for (const auto& a : corpus.objects) {
    auto fa = adj.f_obj(a);
    auto eta = adj.eta(a);
    if (!(eta.dom == a) || !(eta.cod == hr.g_obj(fa))) return {false, "eta_A : A -> GFA", describe(a)};
    if (auto e = hr.arrow_failure(eta)) return {false, "eta_A is an arrow", describe(a) + ": " + *e};
    if (auto d = differ_lazy([&] { return compose(adj.epsilon(fa), adj.f_arr(eta)); }, [&] { return identity(fa); }))
      return {false, "eps_FA F(eta_A) = 1", describe(a) + " " + *d};
  }
  for (const auto& b : corpus.bases) {
    auto gb = hr.g_obj(b);
    auto eps = adj.epsilon(b);
    if (!(*eps.source() == *adj.f_obj(gb)) || !(*eps.target() == *b)) return {false, "eps_B : FGB -> B", label(b)};
    if (!equal_arrows(compose(hr.g_arr(eps), adj.eta(gb)), identity(gb))) return {false, "G(eps_B) eta_GB = 1", label(b)};
  }
  for (const auto& f : corpus.arrows) {
    auto lhs = compose(hr.g_arr(adj.f_arr(f)), adj.eta(f.dom));
    auto rhs = compose(adj.eta(f.cod), f);
    if (!equal_arrows(lhs, rhs)) return {false, "naturality of eta", describe(f.dom) + " -> " + describe(f.cod)};
  }
  for (const auto& f : corpus.base_arrows) {
    if (auto d = differ_lazy([&] { return compose(f, adj.epsilon(f.source())); },
                             [&] { return compose(adj.epsilon(f.target()), adj.f_arr(hr.g_arr(f))); }))
      return {false, "naturality of eps", describe(f) + " " + *d};
  }
  return {};
}

size_t count_natural_pis(const HalfReflection& hr, const ModelCorpus& corpus, size_t limit) {
  const size_t n = corpus.objects.size();
  auto index_of = [&](const AObject& a) {
    for (size_t i = 0; i < n; ++i)
      if (corpus.objects[i] == a) return i;
    throw Error(ErrorCode::kBadInput, "arrow endpoint outside the corpus");
  };
  std::vector<std::vector<AArrow>> candidates(n);
  for (size_t i = 0; i < n; ++i) {
    const auto& a = corpus.objects[i];
    auto id = identity(hr.i_obj(a));
    for (auto& u : hr.hom(a, hr.g_obj(hr.i_obj(a))))
      if (hr.i_arr(u) == id) candidates[i].push_back(std::move(u));
  }
  // Arrows grouped by the later of their two endpoints.
  std::vector<std::vector<std::tuple<size_t, size_t, const AArrow*>>> checks(n);
  for (const auto& f : corpus.arrows) {
    size_t s = index_of(f.dom), t = index_of(f.cod);
    checks[std::max(s, t)].emplace_back(s, t, &f);
  }
  std::vector<const AArrow*> chosen(n, nullptr);
  size_t count = 0;
  std::function<void(size_t)> rec = [&](size_t i) {
    if (count >= limit) return;
    if (i == n) {
      ++count;
      return;
    }
    for (const auto& u : candidates[i]) {
      chosen[i] = &u;
      bool ok = true;
      for (const auto& [s, t, f] : checks[i])
        if (!equal_arrows(compose(hr.g_arr(hr.i_arr(*f)), *chosen[s]), compose(*chosen[t], *f))) {
          ok = false;
          break;
        }
      if (ok) rec(i + 1);
    }
  };
  rec(0);
  return count;
}

Morphism pi_prime(const Model& m, const AObject& a) {
  const auto& adj = adjoint(m);
  return compose(adj.epsilon(m.hr.i_obj(a)), adj.f_arr(m.hr.pi(a)));
}

SplitEpi canonical_to_points(const Model& m, const AObject& a) {
  const auto& adj = adjoint(m);
  auto alpha = pi_prime(m, a);
  auto beta = m.hr.i_arr(adj.eta(a));
  beta = retarget(beta, alpha.source());
  if (compose(alpha, beta) != identity(m.hr.i_obj(a)))
    throw Error(ErrorCode::kTriangleLawViolated, "eps F(pi) I(eta) != 1 at " + describe(a));
  return SplitEpi(alpha, beta);
}

Theorem1Data theorem1_data(const StructRef& b) {
  auto prod = product(b, b);
  return {prod, prod.p2, pairing(prod, identity(b), identity(b)), prod.p1};
}

Morphism theorem1_lift(const Theorem1Data& d, const SplitEpi& p, const Morphism& f) {
  return pairing(d.g1, f, compose(f, compose(p.beta(), p.alpha())));
}

std::vector<Morphism> theorem1_lifts(const Theorem1Data& d, const SplitEpi& p, const Morphism& f) {
  std::vector<Morphism> out;
  auto ba = compose(p.beta(), p.alpha());
  auto dp = compose(d.delta, d.pi);
  // Candidates are pruned by the first coordinate, then both conditions checked.
  const int nb = d.eps.target()->order();
  HomSearch opts;
  opts.allow = [&](int x, int y) { return y / nb == f(x); };
  for (const auto& cand : all_morphisms(p.top(), d.g1.object, opts))
    if (compose(d.eps, cand) == f && compose(dp, cand) == compose(cand, ba)) out.push_back(cand);
  return out;
}

Morphism theorem1_kernel_embedding(const Theorem1Data& d) {
  const auto& b = d.eps.target();
  return pairing(d.g1, identity(b), zero_morphism(b, b));
}

std::vector<A1Object> a1_objects(const Model& m, const AObject& a) {
  std::vector<A1Object> out;
  auto id = identity(m.hr.i_obj(a));
  for (auto& u : m.hr.hom(a, m.hr.g_obj(m.hr.i_obj(a))))
    if (m.hr.i_arr(u) == id) out.push_back({a, std::move(u)});
  return out;
}

std::vector<ConditionResult> a2_star_conditions(const Model& m, const A2Object& o) {
  const auto& hr = m.hr;
  const auto& adj = adjoint(m);
  const auto &e = o.e.a, &a = o.base.a;
  std::vector<ConditionResult> out;
  auto fa = adj.f_obj(a);
  bool typed = *hr.i_obj(e) == *fa;
  out.push_back({"IE = FA", typed, typed ? "" : label(hr.i_obj(e)) + " vs " + label(fa)});
  if (!typed) {
    for (const char* n : {"I(a) = eps F(u)", "v b = eta_A", "G(pi'_A) pi_E = G(pi'_A) v"})
      out.push_back({n, false, "IE != FA"});
    return out;
  }
  auto d = differ_lazy([&] { return hr.i_arr(o.a); },
                       [&] { return compose(adj.epsilon(hr.i_obj(a)), adj.f_arr(o.base.u)); });
  out.push_back({"I(a) = eps F(u)", !d, d.value_or("")});
  bool vb = false;
  try {
    vb = compose(o.e.u, o.b) == adj.eta(a);
  } catch (const Error&) {
  }
  out.push_back({"v b = eta_A", vb, vb ? "" : describe(a)});
  bool c7 = false;
  try {
    auto gp = hr.g_arr(pi_prime(m, a));
    c7 = compose(gp, hr.pi(e)) == compose(gp, o.e.u);
  } catch (const Error&) {
  }
  out.push_back({"G(pi'_A) pi_E = G(pi'_A) v", c7, c7 ? "" : describe(e)});
  return out;
}

A1A2 build_A1_A2(const Model& m, const std::vector<AObject>& objects) {
  const auto& hr = m.hr;
  A1A2 out;
  std::vector<std::vector<A1Object>> over;
  for (const auto& a : objects) {
    over.push_back(a1_objects(m, a));
    out.a1.insert(out.a1.end(), over.back().begin(), over.back().end());
  }
  for (size_t ie = 0; ie < objects.size(); ++ie)
    for (size_t ia = 0; ia < objects.size(); ++ia) {
      const auto &e = objects[ie], &a = objects[ia];
      auto ea = hr.hom(e, a);
      auto ae = hr.hom(a, e);
      auto id_a = identity(a);
      for (const auto& arr_a : ea) {
        std::vector<const AArrow*> sections;
        for (const auto& arr_b : ae)
          if (compose(arr_a, arr_b) == id_a) sections.push_back(&arr_b);
        if (sections.empty()) continue;
        auto gia = hr.g_arr(hr.i_arr(arr_a));
        for (const auto& v : over[ie])
          for (const auto& u : over[ia]) {
            if (!(compose(u.u, arr_a) == compose(gia, v.u))) continue;
            for (const auto* arr_b : sections) {
              A2Object o{v, u, arr_a, *arr_b};
              out.a2.push_back(o);
              if (!m.adj) continue;
              auto conds = a2_star_conditions(m, o);
              if (std::all_of(conds.begin(), conds.end(), [](const auto& c) { return c.holds; }))
                out.a2_star.push_back(o);
            }
          }
      }
    }
  return out;
}

C17Verdict check_c1_c7(const RestrictedDiagram& d) {
  C17Verdict v;
  auto add = [&](const char* name, std::optional<std::string> diff) {
    v.conditions.push_back({name, !diff, diff.value_or("")});
  };
  add("c1: c I(eta_A) = 1", differ_lazy([&] { return compose(d.c, d.i_eta_a); },
                                        [&] { return identity(d.c.target()); }));
  add("c2: I(a) = c", differ(d.i_a, d.c));
  add("c3: I(b) = I(eta_A)", differ(d.i_b, d.i_eta_a));
  add("c4: m I(eta_E) = 1", differ_lazy([&] { return compose(d.m, d.i_eta_e); },
                                        [&] { return identity(d.m.target()); }));
  add("c5: m F(b) = 1", differ_lazy([&] { return compose(d.m, d.f_b); }, [&] { return identity(d.m.target()); }));
  add("c6: c m = c F(a)", differ_lazy([&] { return compose(d.c, retarget(d.m, d.c.source())); },
                                      [&] { return compose(d.c, d.f_a); }));
  add("c7: pi'_A m = pi'_A pi'_E",
      differ_lazy([&] { return compose(d.pi_a, retarget(d.m, d.pi_a.source())); },
                  [&] { return compose(d.pi_a, retarget(d.pi_e, d.pi_a.source())); }));
  for (size_t i = 0; i < v.conditions.size(); ++i) {
    v.all = v.all && v.conditions[i].holds;
    if (i < 5) v.multiplicative = v.multiplicative && v.conditions[i].holds;
  }
  bool ab = !differ_lazy([&] { return compose(d.i_a, d.i_b); }, [&] { return identity(d.i_a.target()); });
  v.c1_implied = !(v.conditions[1].holds && v.conditions[2].holds && ab) || v.conditions[0].holds;
  return v;
}

RestrictedDiagram restricted_diagram(const Model& m, const AObject& e, const AObject& a, const AArrow& arr_a,
                                     const AArrow& arr_b, const Morphism& c, const Morphism& mult) {
  const auto& hr = m.hr;
  const auto& adj = adjoint(m);
  return {pi_prime(m, e),
          adj.f_arr(arr_a),
          adj.f_arr(arr_b),
          hr.i_arr(adj.eta(e)),
          mult,
          pi_prime(m, a),
          c,
          hr.i_arr(adj.eta(a)),
          hr.i_arr(arr_a),
          hr.i_arr(arr_b)};
}

RestrictedDiagram diagram_from_A2(const Model& m, const A2Object& o) {
  const auto& adj = adjoint(m);
  const auto& hr = m.hr;
  auto c = compose(adj.epsilon(hr.i_obj(o.base.a)), adj.f_arr(o.base.u));
  auto mult = compose(adj.epsilon(hr.i_obj(o.e.a)), adj.f_arr(o.e.u));
  return restricted_diagram(m, o.e.a, o.base.a, o.a, o.b, c, mult);
}

Precategory precategory_from_diagram(const RestrictedDiagram& d) {
  const auto& c1 = d.pi_a.source();
  return {{d.pi_a, d.c, d.i_eta_a},
          d.f_a,
          retarget(d.pi_e, c1),
          d.f_b,
          Morphism(Morphism::Trusted{}, c1, d.i_eta_e.target(), d.i_eta_e.map()),
          retarget(d.m, c1)};
}

std::vector<TranslationRow> translation_table(const Model& m, const AObject& e, const AObject& a,
                                              const AArrow& arr_a, const AArrow& arr_b, const Morphism& c,
                                              const Morphism& mult) {
  const auto& hr = m.hr;
  const auto& adj = adjoint(m);
  auto v = check_c1_c7(restricted_diagram(m, e, a, arr_a, arr_b, c, mult));
  auto b = [&](int i) { return v.conditions[i].holds; };
  auto u_arr = compose(hr.g_arr(c), adj.eta(a));
  auto v_arr = compose(hr.g_arr(mult), adj.eta(e));
  auto safe = [](auto fn) {
    try {
      return static_cast<bool>(fn());
    } catch (const Error&) {
      return false;
    }
  };
  std::vector<TranslationRow> rows;
  rows.push_back({"c1", b(0), hr.i_arr(u_arr) == identity(hr.i_obj(a))});
  rows.push_back({"c4", b(3), hr.i_arr(v_arr) == identity(hr.i_obj(e))});
  rows.push_back({"c6", b(5), safe([&] { return compose(u_arr, arr_a) == compose(hr.g_arr(hr.i_arr(arr_a)), v_arr); })});
  rows.push_back({"c2", b(1), safe([&] {
                    return !differ(hr.i_arr(arr_a), compose(adj.epsilon(hr.i_obj(a)), adj.f_arr(u_arr)));
                  })});
  rows.push_back({"c3 c5", b(2) && b(4), safe([&] { return compose(v_arr, arr_b) == adj.eta(a); })});
  rows.push_back({"c7", b(6), safe([&] {
                    auto gp = hr.g_arr(pi_prime(m, a));
                    return compose(gp, hr.pi(e)) == compose(gp, v_arr);
                  })});
  return rows;
}

BracketResult bracket_search(const Morphism& j, const Morphism& i, const Morphism& f, const Morphism& g) {
  const auto& s = i.target();
  const auto& t = f.target();
  BracketResult out;
  HomSearch opts;
  opts.fixed.assign(s->order(), -1);
  auto pin = [&](const Morphism& leg, const Morphism& val) {
    for (int x = 0; x < leg.source()->order(); ++x) {
      int& slot = opts.fixed[leg(x)];
      if (slot != -1 && slot != val(x)) return false;
      slot = val(x);
    }
    return true;
  };
  if (!pin(j, f) || !pin(i, g)) return out;
  std::vector<Morphism> found;
  for_each_morphism(s, t, opts, [&](const std::vector<int>& map) {
    found.emplace_back(Morphism::Trusted{}, s, t, map);
    return found.size() < 2;
  });
  if (found.empty()) return out;
  out.status = found.size() == 1 ? BracketStatus::kUnique : BracketStatus::kNotUnique;
  out.bracket = found[0];
  if (found.size() > 1) out.second = found[1];
  return out;
}

BracketResult cooperative_bracket(const Model& m, const AObject& a, const Morphism& f, const Morphism& g) {
  const auto& adj = adjoint(m);
  const auto& jd = jdata(m);
  auto fa = adj.f_obj(a);
  auto eta = adj.eta(a);
  auto j = retarget(jd.j_arr(eta), fa);
  auto i = retarget(m.hr.i_arr(eta), fa);
  return bracket_search(j, i, f, g);
}

ReflexiveGraph rg_from_cooperative(const Model& m, const AObject& a, const Morphism& h) {
  auto r = cooperative_bracket(m, a, h, identity(m.hr.i_obj(a)));
  if (r.status == BracketStatus::kNotAdmissible)
    throw Error(ErrorCode::kFactorizationFailure, "(h, 1) is not cooperative at " + describe(a));
  if (r.status == BracketStatus::kNotUnique)
    throw Error(ErrorCode::kFactorizationFailure, "bracket not unique at " + describe(a));
  auto alpha = pi_prime(m, a);
  auto beta = retarget(m.hr.i_arr(adjoint(m).eta(a)), alpha.source());
  return {alpha, *r.bracket, beta};
}

JVerdict check_J_conditions(const Model& m, const std::vector<AObject>& objects,
                            const std::vector<StructRef>& bases) {
  const auto& hr = m.hr;
  const auto& adj = adjoint(m);
  const auto& jd = jdata(m);
  JVerdict v;
  ConditionResult c1{"JG = 1", true, ""};
  for (const auto& b : bases) {
    if (!(*jd.j_obj(hr.g_obj(b)) == *b)) {
      c1 = {"JG = 1", false, label(b)};
      break;
    }
    bool arrows_ok = true;
    for (const auto& f : all_morphisms(b, b))
      if (jd.j_arr(hr.g_arr(f)).map() != f.map()) {
        c1 = {"JG = 1", false, label(b) + " " + describe(f)};
        arrows_ok = false;
        break;
      }
    if (!arrows_ok) break;
  }
  ConditionResult c2{"(J(eta_A), I(eta_A)) jointly epic", true, ""};
  ConditionResult c3{"factorization through J(A)", true, ""};
  for (const auto& a : objects) {
    auto fa = adj.f_obj(a);
    v.bound = std::max(v.bound, fa->order());
    auto eta = adj.eta(a);
    if (c2.holds && !jointly_epic(retarget(jd.j_arr(eta), fa), retarget(hr.i_arr(eta), fa)))
      c2 = {c2.name, false, describe(a)};
  }
  for (const auto& e : objects)
    for (const auto& a : objects) {
      if (!c3.holds) break;
      auto ie = hr.i_obj(e);
      if (!(*ie == *adj.f_obj(a))) continue;
      auto je = jd.j_obj(e);
      auto ja = jd.j_obj(a);
      auto fa = adj.f_obj(a);
      auto j_eta_a = retarget(jd.j_arr(adj.eta(a)), fa);
      auto pa = pi_prime(m, a);
      auto pe = pi_prime(m, e);
      for (const auto& u : all_morphisms(je, ie)) {
        auto r = cooperative_bracket(m, e, u, identity(ie));
        if (r.status != BracketStatus::kUnique) continue;
        if (compose(pa, retarget(*r.bracket, pa.source())).map() != compose(pa, retarget(pe, pa.source())).map())
          continue;
        size_t lifts = 0;
        for_each_morphism(je, ja, {}, [&](const std::vector<int>& w) {
          bool ok = true;
          for (size_t x = 0; x < w.size() && ok; ++x) ok = j_eta_a(w[x]) == u(static_cast<int>(x));
          lifts += ok;
          return lifts < 2;
        });
        if (lifts != 1) {
          c3 = {c3.name, false, describe(e) + " over " + describe(a) + " u = " + describe(u)};
          break;
        }
      }
    }
  v.conditions = {c1, c2, c3};
  v.ok = c1.holds && c2.holds && c3.holds;
  return v;
}

bool right_cancellative(const Structure& s) {
  const int n = s.order();
  for (int b = 0; b < n; ++b) {
    std::vector<char> seen(n, 0);
    for (int x = 0; x < n; ++x) {
      int y = s.op(x, b);
      if (seen[y]) return false;
      seen[y] = 1;
    }
  }
  return true;
}

MagmaRegistration magma_subcategory_A(const std::vector<StructRef>& magmas) {
  for (const auto& b : magmas) {
    if (b->kind() != Kind::kUnitalMagma)
      throw Error(ErrorCode::kKindMismatch, "magma_subcategory_A: " + label(b) + " is not a unital magma");
    if (!right_cancellative(*b))
      throw Error(ErrorCode::kRightCancellationViolated, label(b) + " lacks right cancellation");
  }
  MagmaRegistration reg;
  reg.model = points_model(Kind::kUnitalMagma);
  reg.model.hr.name = "magma-A";
  auto base_failure = reg.model.hr.object_failure;
  reg.model.hr.object_failure = [base_failure](const AObject& a) -> std::optional<std::string> {
    if (auto f = base_failure(a)) return f;
    if (!right_cancellative(*a.parts[0])) return "top lacks right cancellation";
    auto p = as_split_epi(a);
    if (!jointly_epic(p.k(), p.beta())) return "(ker alpha, beta) not jointly epic";
    return std::nullopt;
  };
  for (const auto& a : magmas) {
    reg.bound = std::max(reg.bound, a->order());
    for (auto& p : split_epis_over(a, magmas)) {
      if (jointly_epic(p.k(), p.beta()))
        reg.objects.push_back(point_object(p));
      else
        reg.excluded.push_back(std::move(p));
    }
  }
  reg.j = check_J_conditions(reg.model, reg.objects, magmas);
  return reg;
}

bool square_pair_jointly_epic(const StructRef& b) {
  auto prod = product(b, b);
  return jointly_epic(pairing(prod, identity(b), zero_morphism(b, b)), pairing(prod, identity(b), identity(b)));
}

std::optional<JointEpicFailure> search_joint_epic_failure(int min_size, int max_size) {
  for (int n = min_size; n <= max_size; ++n)
    for (const auto& b : unital_magmas(n, false)) {
      if (square_pair_jointly_epic(b)) continue;
      auto prod = product(b, b);
      std::vector<char> in_image(prod.object->order(), 0);
      for (int x = 0; x < n; ++x) in_image[prod.encode(x, 0)] = in_image[prod.encode(x, x)] = 1;
      auto probes = default_probes(prod.object);
      probes.insert(probes.begin(), b);
      for (const auto& c : probes) {
        std::map<std::vector<int>, std::vector<int>> seen;
        std::optional<JointEpicFailure> hit;
        for_each_morphism(prod.object, c, {}, [&](const std::vector<int>& u) {
          std::vector<int> key;
          for (size_t i = 0; i < u.size(); ++i)
            if (in_image[i]) key.push_back(u[i]);
          auto [it, inserted] = seen.emplace(std::move(key), u);
          if (!inserted && it->second != u) {
            hit = JointEpicFailure{b, Morphism(Morphism::Trusted{}, prod.object, c, it->second),
                                   Morphism(Morphism::Trusted{}, prod.object, c, u)};
            return false;
          }
          return true;
        });
        if (hit) return hit;
      }
    }
  return std::nullopt;
}

}  // namespace icat
