#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include "icat/halfrefl.hpp"
#include "icat/harness.hpp"
#include "icat/homs.hpp"

#ifndef ICAT_DATA_DIR
#define ICAT_DATA_DIR "data"
#endif

namespace icat {
namespace {

namespace fs = std::filesystem;

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::kBadInput, what); }

struct FamilyResult {
  std::string verdict = "PASS";  // PASS, FAIL or ERROR
  size_t instances = 0;
  std::string detail;
  Json witness;  // set for FAIL
};

struct Context {
  Json params;
  RunOptions opts;
  mutable Json used = Json::object();

  int bound(const char* key, int fallback) const {
    int v = fallback;
    if (params.contains(key)) {
      if (!params.at(key).is_number_integer()) bad(std::string(key) + " must be an integer");
      v = params.at(key).get<int>();
    }
    if (opts.max_size > 0) v = std::min(v, opts.max_size);
    used[key] = v;
    return v;
  }
  int number(const char* key, int fallback) const {
    if (!params.contains(key)) return fallback;
    if (!params.at(key).is_number_integer()) bad(std::string(key) + " must be an integer");
    return params.at(key).get<int>();
  }
  bool flag(const char* key, bool fallback) const {
    return params.contains(key) && params.at(key).is_boolean() ? params.at(key).get<bool>() : fallback;
  }
  std::string text(const char* key, const std::string& fallback) const {
    return params.contains(key) && params.at(key).is_string() ? params.at(key).get<std::string>() : fallback;
  }
  Kind kind(Kind fallback) const { return params.contains("kind") ? parse_kind(text("kind", "")) : fallback; }
};

using Family = std::function<FamilyResult(const Context&)>;

Json replay_doc(const std::string& family, const Context& ctx) {
  Json params = ctx.params;
  if (ctx.opts.max_size > 0)
    for (auto& [key, value] : params.items())
      if (value.is_number_integer() && (key == "max_size" || key.ends_with("_max")))
        value = std::min(value.get<int>(), ctx.opts.max_size);
  params["seed"] = ctx.opts.seed;
  return Json{{"type", "campaign-check"}, {"family", family}, {"params", params}};
}

FamilyResult fail(std::string detail, Json witness) {
  FamilyResult r;
  r.verdict = "FAIL";
  r.detail = std::move(detail);
  r.witness = std::move(witness);
  r.instances = 1;
  return r;
}

std::vector<StructRef> corpus_items(Kind kind, int max) {
  if (kind == Kind::kUnitalMagma) {
    std::vector<StructRef> out;
    for (int n = 1; n <= max; ++n)
      for (const auto& m : unital_magmas(n, true)) out.push_back(m);
    return out;
  }
  return enumerate(kind, max).items;
}

std::vector<AObject> pair_objects(const std::vector<StructRef>& xs, const std::vector<StructRef>& bs) {
  std::vector<AObject> out;
  for (const auto& x : xs)
    for (const auto& b : bs) out.push_back(pair_object(x, b));
  return out;
}

std::vector<AObject> point_objects(const std::vector<StructRef>& tops, const std::vector<StructRef>& bases) {
  std::vector<AObject> out;
  for (const auto& a : tops)
    for (const auto& p : split_epis_over(a, bases)) out.push_back(point_object(p));
  return out;
}

std::vector<AObject> action_objects(const std::vector<StructRef>& xs, const std::vector<StructRef>& bs) {
  std::vector<AObject> out;
  for (const auto& x : xs)
    for (const auto& b : bs)
      for (const auto& a : enumerate_actions(x, b)) out.push_back(action_object(a));
  return out;
}

/// Random permutation of {0..n-1} fixing 0.
std::vector<int> random_relabel(int n, std::mt19937_64& rng) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  if (n > 2) std::shuffle(p.begin() + 1, p.end(), rng);
  return p;
}

StructRef relabel(const StructRef& s, const std::vector<int>& p) {
  const int n = s->order();
  std::vector<int> t(s->table().size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[static_cast<size_t>(p[a]) * n + p[b]] = p[s->op(a, b)];
  return make_structure(s->kind(), n, std::move(t), s->name());
}

Morphism relabel(const Morphism& f, const StructRef& src, const std::vector<int>& ps, const StructRef& dst,
                 const std::vector<int>& pt) {
  std::vector<int> m(src->order());
  for (int x = 0; x < f.source()->order(); ++x) m[ps[x]] = pt[f(x)];
  return Morphism(src, dst, std::move(m));
}

// Criterion families.

FamilyResult family_a1(const Context& ctx) {
  Kind kind = ctx.kind(Kind::kPointedSet);
  int max = ctx.bound("max_size", 5), sources = ctx.number("source_bound", 5);
  FamilyResult r;
  auto items = corpus_items(kind, max);
  for (const auto& x : items)
    for (const auto& b : items) {
      ++r.instances;
      auto v = check_A1(x, b, sources);
      if (!v.holds)
        return fail("i1 is not the kernel of [0 1]: " + v.witness,
                    Json{{"type", "a1"}, {"X", to_json(*x)}, {"B", to_json(*b)}, {"source_bound", sources}});
    }
  r.detail = "i1 = ker [0 1] for every pair";
  return r;
}

bool wedge_product_shape(const A2Witness& w) {
  auto t = functor_T(pointed_set(2), pointed_set(2));
  auto pr = product(pointed_set(2), pointed_set(2));
  SplitEpi prod_point(pr.p2, Morphism(pointed_set(2), pr.object, {0, 1}));
  return points_isomorphic(w.from, t) && points_isomorphic(w.to, prod_point);
}

FamilyResult family_a2(const Context& ctx) {
  Kind kind = ctx.kind(Kind::kPointedSet);
  A2SearchOptions opts{ctx.flag("representatives", false), ctx.number("min_factor", 1)};
  A2SearchStats stats;
  auto w = search_A2_counterexample(kind, ctx.bound("max_size", 4), opts, &stats);
  FamilyResult r;
  r.instances = stats.point_morphisms;
  if (!w) {
    r.detail = "split five lemma holds on " + std::to_string(stats.split_epis) + " split epis";
    return r;
  }
  PointMorphism m(w->from, w->to, w->h, w->g);
  if (check_split_five_lemma(m) || !(m.restricted() == w->f)) {
    r.verdict = "ERROR";
    r.detail = "reported witness does not replay";
    return r;
  }
  std::string shape = "|A| = " + std::to_string(w->from.top()->order()) +
                      ", |A'| = " + std::to_string(w->to.top()->order());
  if (ctx.flag("wedge_product", false) && !wedge_product_shape(*w)) {
    r.verdict = "ERROR";
    r.detail = "witness is not the wedge/product diagram: " + shape;
    return r;
  }
  auto out = fail("split five lemma fails: " + shape, to_json(*w));
  out.instances = r.instances;
  return out;
}

FamilyResult family_comparison(const Context& ctx) {
  Kind kind = ctx.kind(Kind::kAbelianGroup);
  FamilyResult r;
  for (const auto& p : enumerate_split_epis(kind, ctx.bound("max_size", 8), false)) {
    ++r.instances;
    bool iso = kind == Kind::kGroup ? comparison_act(p).bijective() : comparison_iso(p).iso;
    if (!iso) {
      return fail("comparison is not an isomorphism", replay_doc("comparison", ctx));
    }
  }
  r.detail = "comparison iso for every split epi";
  return r;
}

FamilyResult family_rg_roundtrip(const Context& ctx) {
  int max = ctx.bound("max_size", 8), renumber = ctx.number("renumber", 1);
  std::mt19937_64 rng(ctx.opts.seed);
  FamilyResult r;
  auto items = enumerate(Kind::kAbelianGroup, max).items;
  for (const auto& x : items)
    for (const auto& b : items)
      for (const auto& h : all_morphisms(x, b)) {
        ++r.instances;
        auto g = rg_from_morphism(h);
        auto cls = morphism_from_rg(g);
        if (!(cls.h == h) || !verify_graph_certificate(g, cls).ok)
          return fail("Mor -> RG -> Mor is not the identity", replay_doc("rg-roundtrip", ctx));
        auto back = rg_from_morphism(cls.h);
        if (!(back.d == g.d && back.c == g.c && back.e == g.e))
          return fail("RG -> Mor -> RG is not the identity", replay_doc("rg-roundtrip", ctx));
        for (int t = 0; t < renumber; ++t) {
          auto p1 = random_relabel(g.c1()->order(), rng), p0 = random_relabel(g.c0()->order(), rng);
          auto c1 = relabel(g.c1(), p1), c0 = relabel(g.c0(), p0);
          ReflexiveGraph moved{relabel(g.d, c1, p1, c0, p0), relabel(g.c, c1, p1, c0, p0),
                               relabel(g.e, c0, p0, c1, p1)};
          auto mc = morphism_from_rg(moved);
          if (!verify_graph_certificate(moved, mc).ok)
            return fail("certificate of a renumbered graph fails", replay_doc("rg-roundtrip", ctx));
          HomSearch hs;
          hs.injective = true;
          hs.allow = [&](int xx, int y) { return mc.h(y) == p0[h(xx)]; };
          bool found = false;
          if (mc.h.source()->order() == x->order())
            for_each_morphism(x, mc.h.source(), hs, [&](const std::vector<int>&) {
              found = true;
              return false;
            });
          if (!found) return fail("renumbered graph classifies to a different h", replay_doc("rg-roundtrip", ctx));
        }
      }
  r.detail = "RG <-> Mor identities with verified certificates";
  return r;
}

FamilyResult family_chain_roundtrip(const Context& ctx) {
  int max = ctx.bound("max_size", 8), max_c2 = ctx.number("max_c2", 256);
  FamilyResult r;
  auto items = enumerate(Kind::kAbelianGroup, max).items;
  for (const auto& z : items)
    for (const auto& x : items)
      for (const auto& b : items) {
        if (z->order() * x->order() * x->order() * b->order() > max_c2) continue;
        for (const auto& ch : enumerate_chains(z, x, b)) {
          ++r.instances;
          auto p = precat_from_2chain(ch);
          if (!validate_precategory(p).ok) return fail("chain precategory invalid", replay_doc("chain-roundtrip", ctx));
          auto cls = chain_from_precat(p);
          if (!(cls.chain.t == ch.t) || !(cls.chain.h == ch.h) || !verify_chain_certificate(p, cls).ok)
            return fail("PC <-> 2-Chain round trip failed", replay_doc("chain-roundtrip", ctx));
        }
      }
  r.detail = "PC <-> 2-Chain identities with verified certificates";
  return r;
}

FamilyResult family_star(const Context& ctx) {
  int max = ctx.bound("max_size", 5);
  FamilyResult r;
  for (int nx = 1; nx <= max; ++nx)
    for (int nb = 1; nb <= max; ++nb)
      for (const auto& h : all_morphisms(pointed_set(nx), pointed_set(nb))) {
        ++r.instances;
        bool trivial = true;
        for (int e = 1; e < nx; ++e) trivial = trivial && h(e) != 0;
        auto v = is_internal_category(star_precategory(h));
        if (v.is_pullback != trivial) {
          return fail("pullback verdict differs from trivial kernel", replay_doc("star", ctx));
        }
        if (!trivial) continue;
        auto laws = check_category_laws(star_category(h));
        if (!laws.ok || !laws.associative) {
          Json w = to_json(star_category(h));
          w["type"] = "category";
          return fail("star category breaks " + laws.law, w);
        }
      }
  r.detail = "pullback iff ker h trivial; every star category lawful";
  return r;
}

FamilyResult family_product_model(const Context& ctx) {
  FamilyResult r;
  auto f = xor_model();
  auto v = validate_fibered_action(f);
  auto laws = check_category_laws(product_model_category(f));
  r.instances = 1;
  if (!v.ok || check_model_associativity(f) || !laws.ok || !laws.associative) {
    Json w = to_json(f);
    w["type"] = "fibered";
    return fail("xor model breaks a law", w);
  }
  size_t mutations = 0, detected = 0;
  auto detect = [&](const FiberedAction& g) {
    ++mutations;
    bool caught = !validate_fibered_action(g).ok || check_model_associativity(g).has_value();
    detected += caught;
  };
  for (size_t i = 0; i < f.xi.size(); ++i)
    for (int val = 0; val < f.b->order(); ++val) {
      if (val == f.xi[i]) continue;
      auto g = f;
      g.xi[i] = val;
      detect(g);
    }
  for (size_t i = 0; i < f.mu.size(); ++i)
    for (int val = 0; val < f.x->order(); ++val) {
      if (val == f.mu[i]) continue;
      auto g = f;
      g.mu[i] = val;
      detect(g);
    }
  r.instances += mutations;
  r.detail = std::to_string(detected) + "/" + std::to_string(mutations) + " single-entry mutations detected";
  if (detected != mutations) return fail(r.detail, replay_doc("product-model", ctx));
  return r;
}

FamilyResult family_act_pt(const Context& ctx) {
  int max = ctx.bound("max_size", 12);
  FamilyResult r;
  auto gs = builtin_groups(std::min(max, kGroupCap));
  for (const auto& x : gs)
    for (const auto& b : gs) {
      if (x->order() * b->order() > max) continue;
      for (const auto& a : enumerate_actions(x, b)) {
        ++r.instances;
        auto back = functor_S_act(functor_T_act(a));
        if (back.act != a.act || !(*back.x == *a.x)) {
          return fail("S T is not the identity", replay_doc("act-pt", ctx));
        }
        auto s = semidirect_product(a);
        auto ax = check_semidirect_axioms(s.point);
        if (!ax.all() || !ax.zero_one || !(*ax.zero_one == s.point.alpha())) {
          Json w = to_json(s.point);
          w["type"] = "semidirect-axioms";
          return fail("semidirect axioms fail", w);
        }
      }
    }
  for (const auto& p : enumerate_split_epis(Kind::kGroup, max, false)) {
    ++r.instances;
    auto cmp = comparison_act(p);
    auto ts = functor_T_act(functor_S_act(p));
    if (!cmp.bijective() || !(compose(p.alpha(), cmp) == ts.alpha()) || !(compose(cmp, ts.beta()) == p.beta()))
      return fail("T S comparison is not an isomorphism of points", replay_doc("act-pt", ctx));
  }
  r.detail = "S T = 1, T S = 1 with verified comparisons, semidirect axioms hold";
  return r;
}

PreCrossedModule conjugation_on(const Morphism& k) {
  const auto& b = k.target();
  const auto& n = k.source();
  std::vector<int> inv(b->order(), -1);
  for (int e = 0; e < n->order(); ++e) inv[k(e)] = e;
  GroupAction a{n, b, std::vector<int>(static_cast<size_t>(b->order()) * n->order())};
  for (int g = 0; g < b->order(); ++g)
    for (int e = 0; e < n->order(); ++e) {
      int c = b->op(b->op(g, k(e)), b->inverse(g));
      if (inv[c] < 0) throw Error(ErrorCode::kInvalidAction, "subgroup is not normal");
      a.act[static_cast<size_t>(g) * n->order() + e] = inv[c];
    }
  return {a, k};
}

FamilyResult family_peiffer_normal(const Context& ctx) {
  int max = ctx.bound("max_size", 12);
  FamilyResult r;
  auto gs = builtin_groups(std::min(max, kGroupCap));
  for (const auto& b : gs) {
    std::vector<std::vector<char>> seen;
    for (const auto& c : gs) {
      if (c->order() > b->order()) continue;
      for (const auto& f : all_morphisms(b, c)) {
        auto ker = kernel(f);
        std::vector<char> mask(b->order(), 0);
        for (int e = 0; e < ker.object->order(); ++e) mask[ker.k(e)] = 1;
        if (std::find(seen.begin(), seen.end(), mask) != seen.end()) continue;
        seen.push_back(mask);
        ++r.instances;
        auto p = conjugation_on(ker.k);
        validate_pxm(p);
        auto v = check_peiffer(p);
        if (!v.holds) {
          Json w = to_json(p);
          w["type"] = "peiffer";
          return fail("Peiffer identity fails for a normal subgroup", w);
        }
      }
    }
  }
  r.detail = "every normal subgroup with conjugation is a crossed module";
  return r;
}

FamilyResult family_peiffer(const Context& ctx) {
  if (!ctx.params.contains("pxm")) bad("peiffer needs a \"pxm\" document");
  auto p = pxm_from_json(ctx.params.at("pxm"));
  auto v = check_peiffer(p);
  FamilyResult r;
  r.instances = 1;
  if (v.holds) {
    r.detail = "Peiffer identity holds";
    return r;
  }
  auto failures = peiffer_failures(p);
  if (ctx.params.contains("require_pair_perms")) {
    const auto& req = ctx.params.at("require_pair_perms");
    auto perms = sorted_permutations(static_cast<int>(req.at(0).size()));
    auto index = [&](const Json& q) {
      auto it = std::find(perms.begin(), perms.end(), q.get<std::vector<int>>());
      return it == perms.end() ? -1 : static_cast<int>(it - perms.begin());
    };
    std::pair<int, int> want{index(req.at(0)), index(req.at(1))};
    if (std::find(failures.begin(), failures.end(), want) == failures.end()) {
      r.verdict = "ERROR";
      r.detail = "required failing pair is not a witness";
      return r;
    }
  }
  Json w = to_json(p);
  w["type"] = "peiffer";
  return fail("Peiffer fails at (" + std::to_string(v.x) + ", " + std::to_string(v.x2) + "), " +
                  std::to_string(failures.size()) + " failing pairs",
              w);
}

std::vector<PreCrossedModule> crossed_modules(int max, int max_product) {
  std::vector<PreCrossedModule> out;
  auto gs = builtin_groups(std::min(max, kGroupCap));
  for (const auto& x : gs)
    for (const auto& b : gs) {
      if (x->order() * b->order() > max_product) continue;
      for (auto& p : enumerate_pxms(x, b, true)) out.push_back(std::move(p));
    }
  return out;
}

FamilyResult family_chaincomp(const Context& ctx) {
  FamilyResult r;
  for (const auto& p : crossed_modules(ctx.bound("max_size", 8), ctx.number("max_product", 16))) {
    ++r.instances;
    auto d = chaincomp_from_crossed_module(p);
    auto v = validate_chaincomp(d);
    if (!v.ok) {
      Json w = to_json(d);
      w["type"] = "chaincomp";
      return fail("crossed-module chain breaks a condition", w);
    }
  }
  r.detail = "five conditions hold on every constructed chain";
  return r;
}

FamilyResult family_chaincomp_tamper(const Context& ctx) {
  FamilyResult r;
  size_t caught = 0, chains = 0;
  auto mods = crossed_modules(ctx.bound("max_size", 6), ctx.number("max_product", 18));
  for (const auto& p : mods) {
    auto d = chaincomp_from_crossed_module(p);
    if (d.xi_f.x->order() < 2) continue;
    ++chains;
    const int nw = d.xi_f.x->order();
    for (size_t i = 0; i < d.xi_f.act.size(); ++i)
      for (int val = 0; val < nw; ++val) {
        if (val == d.xi_f.act[i]) continue;
        auto e = d;
        e.xi_f.act[i] = val;
        ++r.instances;
        if (validate_chaincomp(e).ok) {
          Json w = to_json(e);
          w["type"] = "chaincomp";
          return fail("tampered xi_F passes every condition", w);
        }
        ++caught;
      }
  }
  r.detail = std::to_string(caught) + " tamperings caught over " + std::to_string(chains) + " chains";
  return r;
}

FamilyResult family_halfrefl(const Context& ctx) {
  std::string model = ctx.text("model", "pairs");
  Kind kind = ctx.kind(Kind::kPointedSet);
  int max = ctx.bound("max_size", 3);
  int top_max = ctx.bound("top_max", max);
  FamilyResult r;
  Model m = pairs_model(kind);
  std::vector<AObject> objects;
  std::vector<StructRef> bases = corpus_items(kind, max);
  if (model == "pairs") {
    objects = pair_objects(bases, bases);
  } else if (model == "points") {
    m = points_model(kind);
    objects = point_objects(corpus_items(kind, top_max), bases);
  } else if (model == "actions") {
    m = actions_model();
    bases = builtin_groups(max);
    objects = action_objects(builtin_groups(top_max), bases);
  } else if (model == "magma-A") {
    auto reg = magma_subcategory_A(corpus_items(Kind::kUnitalMagma, max));
    if (!reg.excluded.empty()) return fail("points excluded from A", replay_doc("halfrefl", ctx));
    m = reg.model;
    objects = reg.objects;
    bases.resize(std::min<size_t>(bases.size(), static_cast<size_t>(ctx.number("corpus_bases", 5))));
  } else {
    bad("unknown model '" + model + "'");
  }
  auto corpus = model_corpus(m, objects, bases);
  r.instances = corpus.objects.size() + corpus.arrows.size();
  auto v = check_halfreflection(m.hr, corpus);
  if (!v.ok) return fail(v.law + ": " + v.witness, replay_doc("halfrefl", ctx));
  std::string detail = m.hr.name + ": half-reflection laws hold";
  if (m.adj) {
    auto a = check_adjunction(m, corpus);
    if (!a.ok) return fail(a.law + ": " + a.witness, replay_doc("halfrefl", ctx));
    for (const auto& o : corpus.objects) canonical_to_points(m, o);
    detail += ", adjunction holds, canonical points split";
  }
  if (m.j && m.adj && ctx.flag("check_j", true)) {
    auto jv = check_J_conditions(m, objects, bases);
    for (const auto& c : jv.conditions)
      if (!c.holds) return fail("J: " + c.name + ": " + c.witness, replay_doc("halfrefl", ctx));
    detail += ", J conditions hold";
  }
  r.detail = detail;
  return r;
}

FamilyResult family_theorem1(const Context& ctx) {
  Kind kind = ctx.kind(Kind::kPointedSet);
  int max = ctx.bound("max_size", 4), target_max = ctx.bound("target_max", 5);
  FamilyResult r;
  auto targets = corpus_items(kind, target_max);
  for (const auto& p : enumerate_split_epis(kind, max, true))
    for (const auto& b : targets) {
      auto d = theorem1_data(b);
      for (const auto& f : all_morphisms(p.top(), b)) {
        ++r.instances;
        auto lifts = theorem1_lifts(d, p, f);
        if (lifts.size() != 1 || !(lifts[0] == theorem1_lift(d, p, f)))
          return fail(std::to_string(lifts.size()) + " lifts found", replay_doc("theorem1", ctx));
      }
    }
  r.detail = "exactly one f' for every f";
  return r;
}

struct TranslationSetup {
  Model m;
  std::vector<AObject> objects;
};

TranslationSetup translation_setup(const std::string& name) {
  auto pointed = [](int max) {
    std::vector<StructRef> out;
    for (int n = 1; n <= max; ++n) out.push_back(pointed_set(n));
    return out;
  };
  if (name == "pairs-pointed") return {pairs_model(Kind::kPointedSet), pair_objects(pointed(2), pointed(3))};
  if (name == "pairs-abelian")
    return {pairs_model(Kind::kAbelianGroup),
            pair_objects({cyclic(1), cyclic(2)}, {cyclic(1), cyclic(2), abelian_from_factors({2, 2})})};
  if (name == "points-group") return {points_model(Kind::kGroup), point_objects(builtin_groups(4), builtin_groups(2))};
  if (name == "actions") {
    auto act = actions_model();
    std::vector<StructRef> small{cyclic(1, Kind::kGroup), cyclic(2, Kind::kGroup)};
    auto objs = action_objects(small, small);
    std::vector<AObject> extra;
    for (const auto& a : objs)
      for (const auto& y : small)
        for (const auto& e : enumerate_actions(y, act.adj->f_obj(a))) {
          auto obj = action_object(e);
          if (std::find(extra.begin(), extra.end(), obj) == extra.end() &&
              std::find(objs.begin(), objs.end(), obj) == objs.end())
            extra.push_back(obj);
        }
    objs.insert(objs.end(), extra.begin(), extra.end());
    return {act, objs};
  }
  bad("unknown translation setup '" + name + "'");
}

FamilyResult family_translation(const Context& ctx) {
  auto s = translation_setup(ctx.text("setup", "pairs-abelian"));
  auto built = build_A1_A2(s.m, s.objects);
  FamilyResult r;
  size_t rows = 0;
  for (const auto& o : built.a2_star) {
    ++r.instances;
    auto d = diagram_from_A2(s.m, o);
    auto v = check_c1_c7(d);
    if (!v.all || !validate_precategory(precategory_from_diagram(d)).ok)
      return fail("A2* object gives a diagram breaking c1..c7", replay_doc("translation", ctx));
    const auto& e = o.e.a;
    const auto& a = o.base.a;
    for (const auto& row : translation_table(s.m, e, a, o.a, o.b, d.c, d.m)) {
      ++rows;
      if (row.b_side != row.a_side)
        return fail("translation row " + row.name + " disagrees", replay_doc("translation", ctx));
    }
  }
  if (built.a2_star.empty()) {
    r.verdict = "ERROR";
    r.detail = "no A2* objects";
    return r;
  }
  r.detail = std::to_string(rows) + " translation rows agree on " + std::to_string(built.a2_star.size()) +
             " A2* objects";
  return r;
}

FamilyResult family_square_pair(const Context& ctx) {
  FamilyResult r;
  for (const auto& b : corpus_items(Kind::kUnitalMagma, ctx.bound("max_size", 5))) {
    ++r.instances;
    if (!square_pair_jointly_epic(b)) {
      return fail("(<1,0>, <1,1>) not jointly epic over " + b->name(), replay_doc("square-pair", ctx));
    }
  }
  r.detail = "jointly epic for every right-cancellative unital magma";
  return r;
}

FamilyResult family_joint_epic_failure(const Context& ctx) {
  auto hit = search_joint_epic_failure(1, ctx.bound("max_size", 3));
  FamilyResult r;
  r.instances = 1;
  if (!hit) {
    r.detail = "no failure without right cancellation";
    return r;
  }
  return fail("(<1,0>, <1,1>) not jointly epic over a non-right-cancellative magma of size " +
                  std::to_string(hit->magma->order()),
              replay_doc("joint-epic-failure", ctx));
}

const std::map<std::string, Family>& families() {
  static const std::map<std::string, Family> table{
      {"a1", family_a1},
      {"a2-search", family_a2},
      {"comparison", family_comparison},
      {"rg-roundtrip", family_rg_roundtrip},
      {"chain-roundtrip", family_chain_roundtrip},
      {"star", family_star},
      {"product-model", family_product_model},
      {"act-pt", family_act_pt},
      {"peiffer-normal", family_peiffer_normal},
      {"peiffer", family_peiffer},
      {"chaincomp", family_chaincomp},
      {"chaincomp-tamper", family_chaincomp_tamper},
      {"halfrefl", family_halfrefl},
      {"theorem1", family_theorem1},
      {"translation", family_translation},
      {"square-pair", family_square_pair},
      {"joint-epic-failure", family_joint_epic_failure},
  };
  return table;
}

FamilyResult run_family_guarded(const std::string& name, const Context& ctx) {
  auto it = families().find(name);
  if (it == families().end()) bad("unknown check family '" + name + "'");
  try {
    return it->second(ctx);
  } catch (const Error& e) {
    FamilyResult r;
    r.verdict = "ERROR";
    r.detail = std::string(error_name(e.code())) + ": " + e.what();
    return r;
  }
}

std::string file_safe(const std::string& s) {
  std::string out;
  for (char c : s) out += std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' ? c : '_';
  return out;
}

/// Registration manifest -> campaign manifest.
Json from_registration(const Json& reg) {
  std::string kind = reg.contains("kind") ? reg.at("kind").get<std::string>() : "pointed-set";
  Json bounds = reg.contains("bounds") ? reg.at("bounds") : Json::object();
  Json checks = Json::array();
  for (const auto& model : reg.at("models")) {
    Json params = bounds;
    params["model"] = model;
    params["kind"] = model == "actions" ? "group" : kind;
    if (model == "points" && kind == "pointed-set") params["check_j"] = false;
    checks.push_back({{"id", "halfrefl-" + model.get<std::string>()},
                      {"family", "halfrefl"},
                      {"params", params},
                      {"expect", "PASS"}});
  }
  return Json{{"name", reg.value("name", std::string("halfrefl-registration"))}, {"checks", checks}};
}

Json expand(const Json& manifest, int depth) {
  if (depth > 8) bad("campaign includes nest too deeply");
  if (manifest.contains("models")) return from_registration(manifest);
  Json out{{"name", manifest.value("name", std::string("campaign"))}, {"checks", Json::array()}};
  if (manifest.contains("include"))
    for (const auto& inc : manifest.at("include")) {
      auto sub = expand(load_campaign(inc.get<std::string>()), depth + 1);
      for (auto c : sub.at("checks")) {
        c["id"] = sub.at("name").get<std::string>() + "/" + c.at("id").get<std::string>();
        out["checks"].push_back(c);
      }
    }
  if (manifest.contains("checks"))
    for (const auto& c : manifest.at("checks")) out["checks"].push_back(c);
  return out;
}

std::string fixed(double v, int digits) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

}  // namespace

std::string data_dir() {
  if (const char* env = std::getenv("ICAT_DATA_DIR"); env && *env) return env;
  return ICAT_DATA_DIR;
}

std::vector<std::string> family_names() {
  std::vector<std::string> out;
  for (const auto& [name, f] : families()) out.push_back(name);
  return out;
}

std::vector<std::string> campaign_names() {
  std::vector<std::string> out;
  std::error_code ec;
  for (const auto& e : fs::directory_iterator(fs::path(data_dir()) / "campaigns", ec))
    if (e.path().extension() == ".json") out.push_back(e.path().stem().string());
  std::sort(out.begin(), out.end());
  return out;
}

Json load_campaign(const std::string& name) {
  if (fs::exists(name) && fs::is_regular_file(name)) return load_json(name);
  std::string n = name == "act-pt-equivalence" ? "act-pt-grp" : name;
  auto path = fs::path(data_dir()) / "campaigns" / (n + ".json");
  if (!fs::exists(path)) bad("unknown campaign '" + name + "'");
  return load_json(path.string());
}

Outcome run_family(const Json& doc, const RunOptions& opts) {
  if (!doc.is_object() || !doc.contains("family") || !doc.at("family").is_string()) bad("missing \"family\"");
  Context ctx{doc.value("params", Json::object()), opts};
  if (ctx.params.contains("seed") && ctx.params.at("seed").is_number_unsigned())
    ctx.opts.seed = ctx.params.at("seed").get<std::uint64_t>();
  std::string family = doc.at("family").get<std::string>();
  auto r = run_family_guarded(family, ctx);
  Json out{{"check", "campaign-check"}, {"family", family}, {"verdict", r.verdict}, {"instances", r.instances},
           {"detail", r.detail}};
  return {r.verdict == "PASS", out};
}

Json run_campaign(const Json& manifest, const RunOptions& opts) {
  auto start = std::chrono::steady_clock::now();
  Json plan = expand(manifest, 0);
  const auto& checks = plan.at("checks");
  std::vector<Json> results(checks.size());
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (size_t i = next++; i < checks.size(); i = next++) {
      const auto& c = checks[i];
      auto t0 = std::chrono::steady_clock::now();
      Json res{{"id", c.value("id", "check-" + std::to_string(i))},
               {"family", c.value("family", std::string())},
               {"expect", c.value("expect", std::string("PASS"))}};
      FamilyResult r;
      Context ctx{c.value("params", Json::object()), opts};
      try {
        r = run_family_guarded(res["family"].get<std::string>(), ctx);
      } catch (const Error& e) {
        r.verdict = "ERROR";
        r.detail = std::string(error_name(e.code())) + ": " + e.what();
      }
      res["verdict"] = r.verdict;
      res["matched"] = r.verdict == res["expect"].get<std::string>();
      res["instances"] = r.instances;
      res["detail"] = r.detail;
      res["params"] = ctx.params;
      res["bounds"] = ctx.used;
      res["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      if (!r.witness.is_null()) res["witness"] = r.witness;
      results[i] = std::move(res);
    }
  };
  int n = opts.workers > 0 ? opts.workers : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  n = std::min<int>(n, static_cast<int>(std::max<size_t>(checks.size(), 1)));
  std::vector<std::thread> pool;
  for (int i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::sort(results.begin(), results.end(),
            [](const Json& a, const Json& b) { return a.at("id").get<std::string>() < b.at("id").get<std::string>(); });

  std::string name = plan.at("name").get<std::string>();
  size_t matched = 0, fails = 0;
  Json list = Json::array();
  for (auto& r : results) {
    matched += r.at("matched").get<bool>();
    if (r.at("verdict") == "FAIL") {
      ++fails;
      if (!opts.out_dir.empty() && r.contains("witness")) {
        auto dir = fs::path(opts.out_dir) / "witnesses";
        fs::create_directories(dir);
        auto path = dir / (file_safe(name) + "__" + file_safe(r.at("id").get<std::string>()) + ".json");
        std::ofstream(path) << r.at("witness").dump(2) << "\n";
        r["witness_file"] = path.string();
      }
    }
    list.push_back(std::move(r));
  }
  bool ok = matched == results.size();
  return Json{{"campaign", name},
              {"verdict", ok ? "PASS" : "FAIL"},
              {"checks", list},
              {"summary", {{"checks", results.size()}, {"matched", matched}, {"fail_verdicts", fails}}},
              {"bounds", {{"max_size_cap", opts.max_size}, {"seed", opts.seed}}},
              {"wall_clock_seconds",
               std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()}};
}

std::string render_report(const Json& report) {
  std::ostringstream os;
  try {
    const auto& s = report.at("summary");
    os << "campaign " << report.at("campaign").get<std::string>() << ": " << report.at("verdict").get<std::string>()
       << " (" << s.at("matched").get<size_t>() << "/" << s.at("checks").get<size_t>()
       << " checks as expected, " << fixed(report.value("wall_clock_seconds", 0.0), 1) << " s)\n";
    for (const auto& c : report.at("checks")) {
      os << "  " << std::left << std::setw(5) << c.at("verdict").get<std::string>() << " "
         << std::setw(42) << c.at("id").get<std::string>() << " expect " << std::setw(4)
         << c.at("expect").get<std::string>() << (c.at("matched").get<bool>() ? "  ok   " : "  MISS ")
         << std::right << std::setw(9) << c.value("instances", size_t{0}) << " inst " << std::setw(7)
         << fixed(c.value("seconds", 0.0), 2) << " s  " << c.value("detail", std::string()) << "\n";
      if (c.contains("witness_file")) os << "        witness: " << c.at("witness_file").get<std::string>() << "\n";
    }
    const auto& b = report.at("bounds");
    os << "bounds: max-size cap " << b.value("max_size_cap", 0) << ", seed " << b.value("seed", 0ULL) << "\n";
  } catch (const Json::exception& e) {
    bad(std::string("not a report: ") + e.what());
  }
  return os.str();
}

}  // namespace icat
