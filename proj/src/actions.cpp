#include "icat/actions.hpp"

#include <algorithm>
#include <map>

#include "icat/homs.hpp"

namespace icat {
namespace {

void require_group(const StructRef& s, const char* what) {
  if (s->kind() != Kind::kGroup) throw Error(ErrorCode::kKindMismatch, std::string(what) + " needs group objects");
}

std::string pair_str(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

std::vector<int> kernel_index(const Morphism& k) {
  std::vector<int> index(k.target()->order(), -1);
  for (int i = 0; i < k.source()->order(); ++i) index[k(i)] = i;
  return index;
}

int conj(const Structure& g, int a, int x) { return g.op(g.op(a, x), g.inverse(a)); }

std::string semidirect_name(const GroupAction& a) {
  if (a.x->name().empty() || a.b->name().empty()) return {};
  return a.x->name() + "x|" + a.b->name();
}

}  // namespace

std::optional<std::string> action_failure(const GroupAction& a) {
  const int nx = a.x->order(), nb = a.b->order();
  if (a.act.size() != static_cast<size_t>(nx) * nb) return "table has " + std::to_string(a.act.size()) + " entries";
  for (int v : a.act)
    if (v < 0 || v >= nx) return "entry " + std::to_string(v) + " outside X";
  for (int x = 0; x < nx; ++x)
    if (a(0, x) != x) return "act(0, " + std::to_string(x) + ") != " + std::to_string(x);
  for (int b = 0; b < nb; ++b) {
    std::vector<char> seen(nx, 0);
    for (int x = 0; x < nx; ++x) {
      if (seen[a(b, x)]) return "act(" + std::to_string(b) + ", -) is not bijective";
      seen[a(b, x)] = 1;
      for (int y = 0; y < nx; ++y)
        if (a(b, a.x->op(x, y)) != a.x->op(a(b, x), a(b, y)))
          return "act(" + std::to_string(b) + ", -) is not a homomorphism at " + pair_str(x, y);
    }
  }
  for (int b = 0; b < nb; ++b)
    for (int b2 = 0; b2 < nb; ++b2)
      for (int x = 0; x < nx; ++x)
        if (a(b, a(b2, x)) != a(a.b->op(b, b2), x))
          return "act(b, act(b', x)) != act(bb', x) at b=" + std::to_string(b) + " b'=" + std::to_string(b2) +
                 " x=" + std::to_string(x);
  return std::nullopt;
}

void validate_action(const GroupAction& a) {
  require_group(a.x, "action");
  require_group(a.b, "action");
  if (auto err = action_failure(a)) throw Error(ErrorCode::kInvalidAction, *err);
}

GroupAction trivial_action(const StructRef& x, const StructRef& b) {
  GroupAction a{x, b, std::vector<int>(static_cast<size_t>(x->order()) * b->order())};
  for (int bb = 0; bb < b->order(); ++bb)
    for (int xx = 0; xx < x->order(); ++xx) a.act[static_cast<size_t>(bb) * x->order() + xx] = xx;
  return a;
}

GroupAction conjugation_G(const StructRef& b) {
  require_group(b, "conjugation");
  const int n = b->order();
  GroupAction a{b, b, std::vector<int>(static_cast<size_t>(n) * n)};
  for (int g = 0; g < n; ++g)
    for (int x = 0; x < n; ++x) a.act[static_cast<size_t>(g) * n + x] = conj(*b, g, x);
  return a;
}

std::vector<GroupAction> enumerate_actions(const StructRef& x, const StructRef& b) {
  require_group(x, "action");
  require_group(b, "action");
  auto auts = automorphisms(x);
  auto one = identity(x);
  std::stable_partition(auts.begin(), auts.end(), [&](const Morphism& f) { return f == one; });
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < auts.size(); ++i) index[auts[i].map()] = static_cast<int>(i);
  const int n = static_cast<int>(auts.size());
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[static_cast<size_t>(i) * n + j] = index.at(compose(auts[i], auts[j]).map());
  auto aut = make_trusted(Kind::kGroup, n, std::move(table));
  std::vector<GroupAction> out;
  for_each_morphism(b, aut, {}, [&](const std::vector<int>& rho) {
    GroupAction a{x, b, std::vector<int>(static_cast<size_t>(x->order()) * b->order())};
    for (int bb = 0; bb < b->order(); ++bb)
      for (int xx = 0; xx < x->order(); ++xx) a.act[static_cast<size_t>(bb) * x->order() + xx] = auts[rho[bb]](xx);
    out.push_back(std::move(a));
    return true;
  });
  return out;
}

Semidirect semidirect_product(const GroupAction& a) {
  validate_action(a);
  const int nx = a.x->order(), nb = a.b->order(), n = nx * nb;
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      int x = p / nb, b = p % nb, x2 = q / nb, b2 = q % nb;
      table[static_cast<size_t>(p) * n + q] = a.x->op(x, a(b, x2)) * nb + a.b->op(b, b2);
    }
  auto obj = make_trusted(Kind::kGroup, n, std::move(table), semidirect_name(a));
  std::vector<int> alpha(n), beta(nb), s1(nx);
  for (int p = 0; p < n; ++p) alpha[p] = p % nb;
  for (int b = 0; b < nb; ++b) beta[b] = b;
  for (int x = 0; x < nx; ++x) s1[x] = x * nb;
  Morphism beta_m(Morphism::Trusted{}, a.b, obj, beta);
  return {SplitEpi(Morphism(Morphism::Trusted{}, obj, a.b, std::move(alpha)), beta_m),
          Morphism(Morphism::Trusted{}, a.x, obj, std::move(s1)), beta_m};
}

SplitEpi functor_T_act(const GroupAction& a) { return semidirect_product(a).point; }

GroupAction functor_S_act(const SplitEpi& p) {
  require_group(p.top(), "functor_S_act");
  const auto& k = p.k();
  auto index = kernel_index(k);
  const auto& a = *p.top();
  const int nx = p.kernel_object()->order(), nb = p.base()->order();
  GroupAction out{p.kernel_object(), p.base(), std::vector<int>(static_cast<size_t>(nx) * nb)};
  for (int b = 0; b < nb; ++b)
    for (int x = 0; x < nx; ++x) {
      int v = index[conj(a, p.beta()(b), k(x))];
      if (v < 0) throw Error(ErrorCode::kInvalidAction, "conjugation escapes the kernel");
      out.act[static_cast<size_t>(b) * nx + x] = v;
    }
  return out;
}

Morphism comparison_act(const SplitEpi& p) {
  auto s = semidirect_product(functor_S_act(p));
  const int nb = p.base()->order();
  std::vector<int> m(s.point.top()->order());
  for (int q = 0; q < static_cast<int>(m.size()); ++q) m[q] = p.top()->op(p.k()(q / nb), p.beta()(q % nb));
  Morphism cmp(s.point.top(), p.top(), std::move(m));
  if (!cmp.bijective()) throw Error(ErrorCode::kComparisonNotIso, "(x, b) -> k(x) beta(b) is not bijective");
  return cmp;
}

SemidirectAxioms check_semidirect_axioms(const SplitEpi& p) {
  SemidirectAxioms v;
  v.jointly_epic.holds = jointly_epic(p.k(), p.beta());
  v.jointly_epic.witness = v.jointly_epic.holds ? "k and beta jointly epic" : "k and beta are not jointly epic";
  const auto& a = p.top();
  const auto& b = p.base();
  HomSearch opts;
  opts.fixed.assign(a->order(), -1);
  bool clash = false;
  auto pin = [&](int e, int val) {
    if (opts.fixed[e] >= 0 && opts.fixed[e] != val) clash = true;
    opts.fixed[e] = val;
  };
  for (int i = 0; i < p.kernel_object()->order(); ++i) pin(p.k()(i), 0);
  for (int i = 0; i < b->order(); ++i) pin(p.beta()(i), i);
  std::vector<std::vector<int>> found;
  if (!clash)
    for_each_morphism(a, b, opts, [&](const std::vector<int>& m) {
      found.push_back(m);
      return found.size() < 2;
    });
  if (found.empty()) {
    v.central.witness = "no morphism A -> B with [0 1] beta = 1 and [0 1] k = 0";
    v.kernel.witness = "no [0 1] to test";
    return v;
  }
  Morphism zo(Morphism::Trusted{}, a, b, found.front());
  v.zero_one = zo;
  v.central.holds = found.size() == 1;
  v.central.witness = v.central.holds ? (zo == p.alpha() ? "[0 1] is unique and equals alpha" : "[0 1] is unique")
                                      : "at least two morphisms restrict to (0, 1)";
  std::vector<char> in_k(a->order(), 0);
  for (int i = 0; i < p.kernel_object()->order(); ++i) in_k[p.k()(i)] = 1;
  v.kernel.holds = true;
  v.kernel.witness = "k is the kernel of [0 1]";
  for (int e = 0; e < a->order(); ++e)
    if ((zo(e) == 0) != static_cast<bool>(in_k[e])) {
      v.kernel.holds = false;
      v.kernel.witness = "element " + std::to_string(e) + " separates ker [0 1] from the image of k";
      break;
    }
  return v;
}

void validate_pxm(const PreCrossedModule& p) {
  validate_action(p.action);
  if (!(*p.h.source() == *p.action.x) || !(*p.h.target() == *p.action.b))
    throw Error(ErrorCode::kInvalidDiagram, "h must map the acted-on group to the acting group");
  const auto& b = *p.action.b;
  for (int g = 0; g < b.order(); ++g)
    for (int x = 0; x < p.action.x->order(); ++x)
      if (p.h(p.action(g, x)) != conj(b, g, p.h(x)))
        throw Error(ErrorCode::kInvalidAction, "h(act(b, x)) != b h(x) b^-1 at " + pair_str(g, x));
}

PeifferVerdict check_peiffer(const PreCrossedModule& p) {
  const auto& x = *p.action.x;
  for (int a = 0; a < x.order(); ++a)
    for (int a2 = 0; a2 < x.order(); ++a2)
      if (p.action(p.h(a), a2) != conj(x, a, a2)) return {false, a, a2};
  return {};
}

std::vector<std::pair<int, int>> peiffer_failures(const PreCrossedModule& p) {
  const auto& x = *p.action.x;
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < x.order(); ++a)
    for (int a2 = 0; a2 < x.order(); ++a2)
      if (p.action(p.h(a), a2) != conj(x, a, a2)) out.emplace_back(a, a2);
  return out;
}

ReflexiveGraph rg_from_pxm(const PreCrossedModule& p) {
  validate_pxm(p);
  auto s = semidirect_product(p.action);
  const auto& top = s.point.top();
  const int nb = p.action.b->order();
  std::vector<int> c(top->order());
  for (int q = 0; q < top->order(); ++q) c[q] = p.action.b->op(p.h(q / nb), q % nb);
  return {s.point.alpha(), Morphism(top, p.action.b, std::move(c)), s.point.beta()};
}

PxmClassification pxm_from_rg(const ReflexiveGraph& g) {
  if (auto v = validate_reflexive_graph(g); !v.ok)
    throw Error(ErrorCode::kInvalidDiagram, "not a reflexive graph: " + v.law + " " + v.witness);
  SplitEpi point(g.d, g.e);
  PreCrossedModule p{functor_S_act(point), compose(g.c, point.k())};
  validate_pxm(p);
  return {p, comparison_act(point)};
}

Verdict verify_pxm_certificate(const ReflexiveGraph& g, const PxmClassification& cls) {
  if (!cls.iso.bijective()) return {false, "certificate bijective", "iso"};
  return check_graph_morphism(rg_from_pxm(cls.pxm), g, identity(g.c0()), cls.iso);
}

std::vector<PreCrossedModule> enumerate_pxms(const StructRef& x, const StructRef& b, bool crossed) {
  std::vector<PreCrossedModule> out;
  auto hs = all_morphisms(x, b);
  for (const auto& a : enumerate_actions(x, b))
    for (const auto& h : hs) {
      bool ok = true;
      for (int g = 0; g < b->order() && ok; ++g)
        for (int e = 0; e < x->order() && ok; ++e) ok = h(a(g, e)) == conj(*b, g, h(e));
      if (!ok) continue;
      PreCrossedModule p{a, h};
      if (crossed && !check_peiffer(p).holds) continue;
      out.push_back(std::move(p));
    }
  return out;
}

ChainCompVerdict validate_chaincomp(const ChainCompData& d) {
  const auto& z = d.t.source();
  const auto& x = d.t.target();
  const auto& b = d.h.target();
  if (!(*d.h.source() == *x)) throw Error(ErrorCode::kInvalidDiagram, "t and h are not composable");
  if (!compose(d.h, d.t).is_zero()) throw Error(ErrorCode::kChainConditionViolated, "ht != 0");
  if (!(*d.xi_x.x == *x) || !(*d.xi_x.b == *b) || !(*d.xi_z.x == *z) || !(*d.xi_z.b == *x))
    throw Error(ErrorCode::kInvalidAction, "actions do not match the chain");
  const int nz = z->order(), nx = x->order(), nb = b->order();
  const int nf = nx * nb, nw = nz * nx;
  if (d.xi_f.b->order() != nf || d.xi_f.x->order() != nw)
    throw Error(ErrorCode::kInvalidAction, "xi_F must act on Z x| X through X x| B");

  ChainCompVerdict v;
  auto record = [&](ConditionResult r) {
    v.ok = v.ok && r.holds;
    v.conditions.push_back(std::move(r));
  };
  for (auto [name, act] : {std::pair{"xi_X is an action", &d.xi_x}, std::pair{"xi_Z is an action", &d.xi_z},
                           std::pair{"xi_F is an action", &d.xi_f}}) {
    auto err = action_failure(*act);
    record({name, !err.has_value(), err.value_or("")});
  }
  // Semidirect tables built directly so that a broken xi_X or xi_Z still
  // yields the five verdicts.
  auto fx = [&](int p, int q) {
    return x->op(p / nb, d.xi_x(p % nb, q / nb)) * nb + b->op(p % nb, q % nb);
  };
  auto finv = [&](int p) {
    for (int q = 0; q < nf; ++q)
      if (fx(p, q) == 0) return q;
    return 0;
  };

  ConditionResult c1{"h(xi_X(b, x)) = b h(x) b^-1", true, {}};
  for (int g = 0; g < nb && c1.holds; ++g)
    for (int e = 0; e < nx && c1.holds; ++e)
      if (d.h(d.xi_x(g, e)) != conj(*b, g, d.h(e))) c1 = {c1.name, false, pair_str(g, e)};
  record(c1);

  ConditionResult c2{"t(xi_Z(x, z)) = x t(z) x^-1", true, {}};
  for (int e = 0; e < nx && c2.holds; ++e)
    for (int s = 0; s < nz && c2.holds; ++s)
      if (d.t(d.xi_z(e, s)) != conj(*x, e, d.t(s))) c2 = {c2.name, false, pair_str(e, s)};
  record(c2);

  auto tau = [&](int w) { return x->op(d.t(w / nx), w % nx) * nb; };
  ConditionResult c3{"tau(xi_F(p, w)) = p tau(w) p^-1", true, {}};
  for (int p = 0; p < nf && c3.holds; ++p) {
    int pinv = finv(p);
    for (int w = 0; w < nw && c3.holds; ++w)
      if (tau(d.xi_f(p, w)) != fx(fx(p, tau(w)), pinv)) c3 = {c3.name, false, pair_str(p, w)};
  }
  record(c3);

  ConditionResult c4{"proj_X(xi_F((x, b), w)) = xi_X(h(x) b, proj_X(w))", true, {}};
  for (int p = 0; p < nf && c4.holds; ++p)
    for (int w = 0; w < nw && c4.holds; ++w)
      if (d.xi_f(p, w) % nx != d.xi_x(b->op(d.h(p / nb), p % nb), w % nx)) c4 = {c4.name, false, pair_str(p, w)};
  record(c4);

  ConditionResult c5{"xi_F((0, b), (0, x)) = (0, xi_X(b, x))", true, {}};
  for (int g = 0; g < nb && c5.holds; ++g)
    for (int e = 0; e < nx && c5.holds; ++e)
      if (d.xi_f(g, e) != d.xi_x(g, e)) c5 = {c5.name, false, pair_str(g, e)};
  record(c5);
  return v;
}

ChainCompData chaincomp_from_crossed_module(const PreCrossedModule& p) {
  validate_pxm(p);
  const auto& x = p.action.x;
  const auto& b = p.action.b;
  auto kz = kernel(p.h);
  auto index = kernel_index(kz.k);
  const auto& z = kz.object;
  const int nz = z->order(), nx = x->order(), nb = b->order();
  auto zeta = [&](int g, int s) { return index[p.action(g, kz.k(s))]; };
  GroupAction xi_z{z, x, std::vector<int>(static_cast<size_t>(nx) * nz)};
  for (int e = 0; e < nx; ++e)
    for (int s = 0; s < nz; ++s) xi_z.act[static_cast<size_t>(e) * nz + s] = index[conj(*x, e, kz.k(s))];
  auto fxb = semidirect_product(p.action).point.top();
  auto fzx = semidirect_product(xi_z).point.top();
  GroupAction xi_f{fzx, fxb, std::vector<int>(static_cast<size_t>(nx * nb) * nz * nx)};
  for (int q = 0; q < nx * nb; ++q) {
    int g = b->op(p.h(q / nb), q % nb);
    for (int w = 0; w < nz * nx; ++w)
      xi_f.act[static_cast<size_t>(q) * nz * nx + w] = zeta(g, w / nx) * nx + p.action(g, w % nx);
  }
  return {kz.k, p.h, p.action, xi_z, xi_f};
}

}  // namespace icat
