#include "icat/ptset_models.hpp"

#include <functional>

namespace icat {
namespace {

std::string triple(int a, int b, int c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

void add_failure(FiberedVerdict& v, const std::string& law, const std::string& witness) {
  for (const auto& f : v.failures)
    if (f.law == law) return;
  v.ok = false;
  v.failures.push_back({law, witness});
}

bool identity_data(const FiberedAction& f) {
  return f.has_mu() && **f.y == *f.x && f.alpha->map() == identity(f.x).map() &&
         f.beta->map() == identity(f.x).map();
}

void require_valid(const FiberedAction& f) {
  auto v = validate_fibered_action(f);
  if (!v.ok)
    throw Error(ErrorCode::kLawViolation, v.failures.front().law + " fails at " + v.failures.front().witness);
}

}  // namespace

CategoryVerdict check_category_laws(const ConcreteCategory& c) {
  const int n = c.arrows();
  CategoryVerdict v;
  auto fail = [&](const std::string& law, const std::string& w) {
    if (v.ok) v = {false, v.associative, law, w};
  };
  if (static_cast<int>(c.id.size()) != c.objects || c.cod.size() != c.dom.size() ||
      c.comp.size() != static_cast<size_t>(n) * n) {
    fail("shape", "table sizes disagree");
    return v;
  }
  for (int o = 0; o < c.objects; ++o)
    if (c.dom[c.id[o]] != o || c.cod[c.id[o]] != o) fail("identity endpoints", std::to_string(o));
  for (int g = 0; g < n; ++g)
    for (int f = 0; f < n; ++f) {
      int gf = c.compose(g, f);
      bool composable = c.cod[f] == c.dom[g];
      if (composable != (gf >= 0)) {
        fail("composition defined exactly on matching pairs", "(" + std::to_string(g) + "," + std::to_string(f) + ")");
        continue;
      }
      if (gf >= 0 && (c.dom[gf] != c.dom[f] || c.cod[gf] != c.cod[g]))
        fail("endpoints of composite", "(" + std::to_string(g) + "," + std::to_string(f) + ")");
    }
  for (int f = 0; f < n; ++f) {
    if (c.compose(c.id[c.cod[f]], f) != f) fail("left identity", std::to_string(f));
    if (c.compose(f, c.id[c.dom[f]]) != f) fail("right identity", std::to_string(f));
  }
  if (!v.ok) return v;
  for (int f = 0; f < n; ++f)
    for (int g = 0; g < n; ++g) {
      if (c.cod[f] != c.dom[g]) continue;
      for (int h = 0; h < n; ++h) {
        if (c.cod[g] != c.dom[h]) continue;
        if (c.compose(c.compose(h, g), f) != c.compose(h, c.compose(g, f))) {
          v.associative = false;
          v.law = "associativity";
          v.witness = triple(h, g, f);
          return v;
        }
      }
    }
  return v;
}

ConcreteCategory category_from_internal(const Precategory& p) {
  auto inv = pullback_inverse(p);
  if (!inv) throw Error(ErrorCode::kLawViolation, "C2 is not the object of composable pairs");
  const auto& g = p.graph;
  const int n = g.c1()->order();
  ConcreteCategory c;
  c.objects = g.c0()->order();
  for (int a = 0; a < n; ++a) {
    c.labels.push_back(std::to_string(a));
    c.dom.push_back(g.d(a));
    c.cod.push_back(g.c(a));
  }
  for (int o = 0; o < c.objects; ++o) c.id.push_back(g.e(o));
  c.comp.assign(static_cast<size_t>(n) * n, -1);
  // Pair (x1, x2) composes x2 first.
  for (int x1 = 0; x1 < n; ++x1)
    for (int x2 = 0; x2 < n; ++x2) {
      int z = (*inv)[static_cast<size_t>(x1) * n + x2];
      if (z >= 0) c.comp[static_cast<size_t>(x1) * n + x2] = p.m(z);
    }
  return c;
}

Precategory star_precategory(const Morphism& h) { return precategory_from_presentation(include_V(h)); }

ConcreteCategory star_category(const Morphism& h) {
  const auto& x = h.source();
  const auto& b = h.target();
  for (int e = 1; e < x->order(); ++e)
    if (h(e) == 0) throw Error(ErrorCode::kKernelNotTrivial, "h(" + std::to_string(e) + ") = 0");
  ConcreteCategory c;
  c.objects = b->order();
  for (int o = 0; o < c.objects; ++o) {
    c.labels.push_back("1_" + std::to_string(o));
    c.dom.push_back(o);
    c.cod.push_back(o);
    c.id.push_back(o);
  }
  for (int e = 1; e < x->order(); ++e) {
    c.labels.push_back("x" + std::to_string(e));
    c.dom.push_back(0);
    c.cod.push_back(h(e));
  }
  const int n = c.arrows();
  c.comp.assign(static_cast<size_t>(n) * n, -1);
  for (int f = 0; f < n; ++f) {
    c.comp[static_cast<size_t>(c.id[c.cod[f]]) * n + f] = f;
    c.comp[static_cast<size_t>(f) * n + c.id[c.dom[f]]] = f;
  }
  c.associative = true;
  return c;
}

FiberedVerdict validate_fibered_action(const FiberedAction& f) {
  FiberedVerdict v;
  const int nx = f.x->order(), nb = f.b->order();
  if (f.xi.size() != static_cast<size_t>(nx) * nb) {
    add_failure(v, "xi table shape", std::to_string(f.xi.size()) + " entries");
    return v;
  }
  for (int e : f.xi)
    if (e < 0 || e >= nb) {
      add_failure(v, "xi values in B", std::to_string(e));
      return v;
    }
  for (int b = 0; b < nb; ++b)
    if (f.act(0, b) != b) add_failure(v, "0.b = b", "b=" + std::to_string(b));
  if (!f.has_mu()) return v;
  const auto& y = *f.y;
  const int ny = y->order();
  if (!f.alpha || !f.beta || !(*f.alpha->source() == *y) || !(*f.alpha->target() == *f.x) ||
      !(*f.beta->source() == *f.x) || !(*f.beta->target() == *y)) {
    add_failure(v, "alpha : Y -> X and beta : X -> Y", "shape");
    return v;
  }
  if (f.mu.size() != static_cast<size_t>(ny) * nb * nx) {
    add_failure(v, "mu table shape", std::to_string(f.mu.size()) + " entries");
    return v;
  }
  for (int e : f.mu)
    if (e < 0 || e >= nx) {
      add_failure(v, "mu values in X", std::to_string(e));
      return v;
    }
  if (auto d = compose(*f.alpha, *f.beta); d != identity(f.x))
    for (int x = 0; x < nx; ++x)
      if (d(x) != x) add_failure(v, "alpha beta = 1", "x=" + std::to_string(x));
  for (int b = 0; b < nb; ++b)
    for (int x = 0; x < nx; ++x) {
      if (f.plus(0, b, x) != x) add_failure(v, "0 +_b x = x", triple(0, b, x));
      if (f.plus((*f.beta)(x), b, 0) != x) add_failure(v, "beta(x) +_b 0 = x", triple(x, b, 0));
      for (int yy = 0; yy < ny; ++yy)
        if (f.act(f.plus(yy, b, x), b) != f.act((*f.alpha)(yy), f.act(x, b)))
          add_failure(v, "(y +_b x).b = alpha(y).(x.b)", triple(yy, b, x));
    }
  return v;
}

std::optional<LawFailure> check_model_associativity(const FiberedAction& f) {
  if (!identity_data(f)) throw Error(ErrorCode::kLawViolation, "associativity needs X = Y and alpha = beta = 1");
  const int nx = f.x->order(), nb = f.b->order();
  for (int b = 0; b < nb; ++b)
    for (int x = 0; x < nx; ++x)
      for (int x1 = 0; x1 < nx; ++x1)
        for (int x2 = 0; x2 < nx; ++x2) {
          int lhs = f.plus(f.plus(x2, f.act(x, b), x1), b, x);
          int rhs = f.plus(x2, b, f.plus(x1, b, x));
          if (lhs != rhs)
            return LawFailure{"(x'' +_{x.b} x') +_b x = x'' +_b (x' +_b x)",
                              "b=" + std::to_string(b) + " x=" + std::to_string(x) + " x'=" +
                                  std::to_string(x1) + " x''=" + std::to_string(x2)};
        }
  return std::nullopt;
}

Precategory product_model_precategory(const FiberedAction& f) {
  if (!f.has_mu()) throw Error(ErrorCode::kBadInput, "product model needs mu data");
  require_valid(f);
  const auto& y = *f.y;
  const int nx = f.x->order(), nb = f.b->order(), ny = y->order();
  const int n1 = nx * nb, n2 = ny * n1;
  auto c0 = f.b;
  auto c1 = make_trusted(Kind::kPointedSet, n1, {});
  auto c2 = make_trusted(Kind::kPointedSet, n2, {});
  std::vector<int> d(n1), c(n1), e(nb), p1(n2), p2(n2), e1(n1), e2(n1), m(n2);
  for (int x = 0; x < nx; ++x)
    for (int b = 0; b < nb; ++b) {
      int a = x * nb + b;
      d[a] = b;
      c[a] = f.act(x, b);
      e1[a] = (*f.beta)(x) * n1 + b;
      e2[a] = a;
    }
  for (int b = 0; b < nb; ++b) e[b] = b;
  for (int yy = 0; yy < ny; ++yy)
    for (int x = 0; x < nx; ++x)
      for (int b = 0; b < nb; ++b) {
        int z = yy * n1 + x * nb + b;
        p2[z] = x * nb + b;
        p1[z] = (*f.alpha)(yy) * nb + f.act(x, b);
        m[z] = f.plus(yy, b, x) * nb + b;
      }
  auto mk = [](const StructRef& s, const StructRef& t, std::vector<int> v) { return Morphism(s, t, std::move(v)); };
  return {{mk(c1, c0, d), mk(c1, c0, c), mk(c0, c1, e)},
          mk(c2, c1, p1),
          mk(c2, c1, p2),
          mk(c1, c2, e1),
          mk(c1, c2, e2),
          mk(c2, c1, m)};
}

ConcreteCategory product_model_category(const FiberedAction& f) {
  if (!identity_data(f)) throw Error(ErrorCode::kLawViolation, "category model needs X = Y and alpha = beta = 1");
  require_valid(f);
  const int nx = f.x->order(), nb = f.b->order(), n = nx * nb;
  ConcreteCategory c;
  c.objects = nb;
  for (int x = 0; x < nx; ++x)
    for (int b = 0; b < nb; ++b) {
      c.labels.push_back("(" + std::to_string(x) + "," + std::to_string(b) + ")");
      c.dom.push_back(b);
      c.cod.push_back(f.act(x, b));
    }
  for (int b = 0; b < nb; ++b) c.id.push_back(b);
  c.comp.assign(static_cast<size_t>(n) * n, -1);
  for (int x = 0; x < nx; ++x)
    for (int b = 0; b < nb; ++b)
      for (int x1 = 0; x1 < nx; ++x1) {
        int first = x * nb + b;
        int second = x1 * nb + f.act(x, b);
        c.comp[static_cast<size_t>(second) * n + first] = f.plus(x1, b, x) * nb + b;
      }
  c.associative = !check_model_associativity(f).has_value();
  return c;
}

FiberedAction xor_model() {
  auto two = pointed_set(2);
  FiberedAction f{two, two, {0, 1, 1, 0}, two, identity(two), identity(two), {}};
  f.mu.resize(8);
  for (int y = 0; y < 2; ++y)
    for (int b = 0; b < 2; ++b)
      for (int x = 0; x < 2; ++x) f.mu[(y * 2 + b) * 2 + x] = y ^ x;
  return f;
}

std::optional<FiberedAction> search_nonassociative_model(int max_x, int max_b) {
  for (int total = 2; total <= max_x + max_b; ++total)
    for (int nx = 1; nx <= max_x; ++nx) {
      const int nb = total - nx;
      if (nb < 1 || nb > max_b) continue;
      auto xs = pointed_set(nx), bs = pointed_set(nb);
      FiberedAction f{xs, bs, std::vector<int>(static_cast<size_t>(nx) * nb), xs, identity(xs), identity(xs),
                      std::vector<int>(static_cast<size_t>(nx) * nb * nx, 0)};
      for (int b = 0; b < nb; ++b) f.xi[b] = b;
      std::optional<FiberedAction> found;
      // Free xi cells are (x, b) with x != 0; free mu cells are (y, b, x)
      // with y, x != 0.
      std::vector<std::pair<int, int>> xi_cells;
      for (int x = 1; x < nx; ++x)
        for (int b = 0; b < nb; ++b) xi_cells.emplace_back(x, b);
      std::vector<std::tuple<int, int, int>> mu_cells;
      for (int b = 0; b < nb; ++b)
        for (int y = 0; y < nx; ++y)
          for (int x = 0; x < nx; ++x) {
            size_t idx = (static_cast<size_t>(y) * nb + b) * nx + x;
            if (y == 0) f.mu[idx] = x;
            else if (x == 0) f.mu[idx] = y;
            else mu_cells.emplace_back(y, b, x);
          }
      std::function<void(size_t)> fill_mu = [&](size_t i) {
        if (found) return;
        if (i == mu_cells.size()) {
          if (check_model_associativity(f)) found = f;
          return;
        }
        auto [y, b, x] = mu_cells[i];
        size_t idx = (static_cast<size_t>(y) * nb + b) * nx + x;
        for (int v = 0; v < nx && !found; ++v) {
          if (f.act(v, b) != f.act(y, f.act(x, b))) continue;
          f.mu[idx] = v;
          fill_mu(i + 1);
        }
      };
      std::function<void(size_t)> fill_xi = [&](size_t i) {
        if (found) return;
        if (i == xi_cells.size()) {
          // Units force (0 +_b x).b = x.b and (y +_b 0).b = y.b; the
          // remaining law is enforced per mu cell.
          fill_mu(0);
          return;
        }
        auto [x, b] = xi_cells[i];
        for (int v = 0; v < nb && !found; ++v) {
          f.xi[static_cast<size_t>(x) * nb + b] = v;
          fill_xi(i + 1);
        }
      };
      fill_xi(0);
      if (found) return found;
    }
  return std::nullopt;
}

}  // namespace icat
