#include "icat/points.hpp"

#include <algorithm>
#include <tuple>

#include "icat/corpus.hpp"
#include "icat/homs.hpp"

namespace icat {
namespace {

std::string show(const std::vector<int>& v) {
  std::string s = "[";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

Morphism restrict_to_kernels(const SplitEpi& from, const SplitEpi& to, const Morphism& h) {
  std::vector<int> index(to.top()->order(), -1);
  for (int i = 0; i < to.kernel_object()->order(); ++i) index[to.k()(i)] = i;
  std::vector<int> f(from.kernel_object()->order());
  for (int i = 0; i < from.kernel_object()->order(); ++i) {
    f[i] = index[h(from.k()(i))];
    if (f[i] < 0) throw Error(ErrorCode::kInvalidDiagram, "top map does not preserve kernels");
  }
  return Morphism(Morphism::Trusted{}, from.kernel_object(), to.kernel_object(), std::move(f));
}

std::vector<Morphism> isomorphisms(const StructRef& x, const StructRef& y) {
  if (x->order() != y->order() || x->kind() != y->kind()) return {};
  if (x->tabled()) {
    auto sx = element_signatures(*x), sy = element_signatures(*y);
    std::sort(sx.begin(), sx.end());
    std::sort(sy.begin(), sy.end());
    if (sx != sy) return {};
  }
  HomSearch opts;
  opts.injective = true;
  return all_morphisms(x, y, opts);
}

using WitnessKey = std::tuple<int, int, int, std::vector<int>, std::vector<int>, std::vector<int>,
                              std::vector<int>, std::vector<int>, std::vector<int>, std::vector<int>>;

WitnessKey key_of(const A2Witness& w) {
  int a = w.from.top()->order(), a2 = w.to.top()->order();
  return {a + a2,
          a,
          a2,
          w.from.alpha().map(),
          w.from.beta().map(),
          w.to.alpha().map(),
          w.to.beta().map(),
          w.h.map(),
          w.f.map(),
          w.g.map()};
}

}  // namespace

SplitEpi::SplitEpi(Morphism alpha, Morphism beta)
    : alpha_(std::move(alpha)), beta_(std::move(beta)), kernel_(kernel_of_split_epi(alpha_, beta_)) {}

PointMorphism::PointMorphism(SplitEpi from, SplitEpi to, Morphism top, Morphism bottom)
    : from_(std::move(from)),
      to_(std::move(to)),
      top_(std::move(top)),
      bottom_(std::move(bottom)),
      restricted_(identity(from_.kernel_object())) {
  if (!(*top_.source() == *from_.top()) || !(*top_.target() == *to_.top()) ||
      !(*bottom_.source() == *from_.base()) || !(*bottom_.target() == *to_.base()))
    throw Error(ErrorCode::kInvalidDiagram, "point morphism: maps do not match the points");
  if (compose(to_.alpha(), top_) != compose(bottom_, from_.alpha()))
    throw Error(ErrorCode::kInvalidDiagram, "point morphism: alpha' h != g alpha");
  if (compose(top_, from_.beta()) != compose(to_.beta(), bottom_))
    throw Error(ErrorCode::kInvalidDiagram, "point morphism: h beta != beta' g");
  restricted_ = restrict_to_kernels(from_, to_, top_);
}

PointMorphism compose(const PointMorphism& second, const PointMorphism& first) {
  return PointMorphism(first.from(), second.to(), compose(second.top(), first.top()),
                       compose(second.bottom(), first.bottom()));
}

SplitEpi functor_T(const StructRef& x, const StructRef& b) {
  auto cop = coproduct(x, b);
  auto alpha = copairing(cop, zero_morphism(x, b), identity(b));
  return SplitEpi(std::move(alpha), cop.i2);
}

KernelPair functor_S(const SplitEpi& p) { return {p.kernel_object(), p.base()}; }

std::optional<std::string> verify_kernel(const Morphism& k, const Morphism& alpha,
                                         const std::vector<StructRef>& sources) {
  if (!(*k.target() == *alpha.source())) return "k and alpha are not composable";
  if (!compose(alpha, k).is_zero()) return "alpha k is not zero";
  if (!k.injective()) return "k is not a monomorphism";
  const auto& a = alpha.source();
  for (const auto& w : sources) {
    if (w->kind() != a->kind()) continue;
    HomSearch into_kernel;
    into_kernel.allow = [&](int, int y) { return alpha(y) == 0; };
    auto killed = all_morphisms(w, a, into_kernel);
    auto through = all_morphisms(w, k.source());
    std::vector<std::vector<int>> lhs, rhs;
    for (const auto& f : killed) lhs.push_back(f.map());
    for (const auto& f : through) rhs.push_back(compose(k, f).map());
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    if (lhs != rhs) {
      for (const auto& f : lhs)
        if (!std::binary_search(rhs.begin(), rhs.end(), f))
          return "morphism " + show(f) + " from " + (w->name().empty() ? "source" : w->name()) +
                 " is killed by alpha but does not factor through k";
      return "factorization through k is not unique";
    }
  }
  return std::nullopt;
}

AxiomVerdict check_A1(const StructRef& x, const StructRef& b, int source_bound) {
  auto p = functor_T(x, b);
  auto cop = coproduct(x, b);
  auto sources = enumerate(x->kind(), source_bound).items;
  sources.push_back(x);
  sources.push_back(b);
  sources.push_back(cop.object);
  if (auto err = verify_kernel(cop.i1, p.alpha(), sources)) return {false, *err};
  return {};
}

bool check_split_five_lemma(const PointMorphism& m) {
  if (!m.restricted().bijective() || !m.bottom().bijective())
    throw Error(ErrorCode::kInvalidDiagram, "split five lemma needs iso restriction and bottom");
  return m.top().bijective();
}

ComparisonResult comparison_iso(const SplitEpi& p) {
  auto cop = coproduct(p.kernel_object(), p.base());
  auto cmp = copairing(cop, p.k(), p.beta());
  bool iso = cmp.bijective();
  return {std::move(cmp), iso};
}

std::vector<SplitEpi> split_epis_over(const StructRef& a, const std::vector<StructRef>& bases) {
  std::vector<SplitEpi> out;
  for (const auto& b : bases) {
    if (b->kind() != a->kind() || b->order() > a->order()) continue;
    HomSearch inj;
    inj.injective = true;
    for (const auto& beta : all_morphisms(b, a, inj)) {
      HomSearch retract;
      retract.fixed.assign(a->order(), -1);
      for (int i = 0; i < b->order(); ++i) retract.fixed[beta(i)] = i;
      for_each_morphism(a, b, retract, [&](const std::vector<int>& m) {
        out.emplace_back(Morphism(Morphism::Trusted{}, a, b, m), beta);
        return true;
      });
    }
  }
  return out;
}

std::vector<SplitEpi> enumerate_split_epis(Kind kind, int max_size, bool representatives) {
  auto corpus = enumerate(kind, max_size).items;
  std::vector<SplitEpi> out;
  for (const auto& a : corpus) {
    auto points = split_epis_over(a, corpus);
    if (!representatives) {
      out.insert(out.end(), points.begin(), points.end());
      continue;
    }
    auto aut_a = automorphisms(a);
    std::vector<std::pair<const StructRef*, std::vector<Morphism>>> aut_b;
    for (const auto& p : points) {
      const auto& b = p.base();
      auto it = std::find_if(aut_b.begin(), aut_b.end(), [&](const auto& e) { return **e.first == *b; });
      if (it == aut_b.end()) {
        aut_b.emplace_back(&b, automorphisms(b));
        it = std::prev(aut_b.end());
      }
      // (alpha, beta) ~ (g alpha phi^-1, phi beta g^-1); keep the least
      // member of each orbit.
      auto own = std::make_pair(p.alpha().map(), p.beta().map());
      bool least = true;
      for (const auto& phi : aut_a) {
        auto phi_inv = inverse(phi);
        for (const auto& g : it->second) {
          auto cand = std::make_pair(compose(g, compose(p.alpha(), phi_inv)).map(),
                                     compose(phi, compose(p.beta(), inverse(g))).map());
          if (cand < own) {
            least = false;
            break;
          }
        }
        if (!least) break;
      }
      if (least) out.push_back(p);
    }
  }
  return out;
}

void for_each_iso_flanked_morphism(const std::vector<SplitEpi>& points,
                                   const std::function<bool(const A2Witness&)>& visit) {
  for (const auto& p : points)
    for (const auto& q : points) {
      if (p.top()->kind() != q.top()->kind()) continue;
      auto fs = isomorphisms(p.kernel_object(), q.kernel_object());
      if (fs.empty()) continue;
      auto gs = isomorphisms(p.base(), q.base());
      for (const auto& f : fs)
        for (const auto& g : gs) {
          HomSearch opts;
          opts.fixed.assign(p.top()->order(), -1);
          bool clash = false;
          auto pin = [&](int a, int v) {
            if (opts.fixed[a] >= 0 && opts.fixed[a] != v) clash = true;
            opts.fixed[a] = v;
          };
          for (int i = 0; i < p.kernel_object()->order(); ++i) pin(p.k()(i), q.k()(f(i)));
          for (int i = 0; i < p.base()->order(); ++i) pin(p.beta()(i), q.beta()(g(i)));
          if (clash) continue;
          opts.allow = [&](int a, int v) { return q.alpha()(v) == g(p.alpha()(a)); };
          bool stop = false;
          for_each_morphism(p.top(), q.top(), opts, [&](const std::vector<int>& h) {
            A2Witness w{p, q, f, g, Morphism(Morphism::Trusted{}, p.top(), q.top(), h)};
            stop = !visit(w);
            return !stop;
          });
          if (stop) return;
        }
    }
}

std::optional<A2Witness> search_A2_counterexample(Kind kind, int max_size,
                                                  const A2SearchOptions& opts, A2SearchStats* stats) {
  auto points = enumerate_split_epis(kind, max_size, opts.representatives);
  std::erase_if(points, [&](const SplitEpi& p) {
    return p.kernel_object()->order() < opts.min_factor || p.base()->order() < opts.min_factor;
  });
  if (stats) stats->split_epis = points.size();
  std::optional<A2Witness> best;
  std::optional<WitnessKey> best_key;
  for_each_iso_flanked_morphism(points, [&](const A2Witness& w) {
    if (stats) ++stats->point_morphisms;
    if (w.h.bijective()) return true;
    auto key = key_of(w);
    if (!best_key || key < *best_key) {
      best_key = std::move(key);
      best = w;
    }
    return true;
  });
  return best;
}

bool points_isomorphic(const SplitEpi& p, const SplitEpi& q) {
  if (p.top()->order() != q.top()->order()) return false;
  for (const auto& g : isomorphisms(p.base(), q.base())) {
    HomSearch opts;
    opts.injective = true;
    opts.fixed.assign(p.top()->order(), -1);
    for (int i = 0; i < p.base()->order(); ++i) opts.fixed[p.beta()(i)] = q.beta()(g(i));
    opts.allow = [&](int a, int v) { return q.alpha()(v) == g(p.alpha()(a)); };
    if (count_morphisms(p.top(), q.top(), opts) > 0) return true;
  }
  return false;
}

}  // namespace icat
