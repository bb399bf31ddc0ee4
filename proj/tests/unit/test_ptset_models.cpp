#include "doctest.h"

#include "icat/homs.hpp"
#include "icat/ptset_models.hpp"

using namespace icat;

namespace {

// Arrow of the internal star category (an element of X v B) as an arrow of
// star_category.
int star_arrow(int a, int nx, int nb) {
  if (a == 0) return 0;
  if (a < nx) return nb + a - 1;
  return a - nx + 1;
}

}  // namespace

TEST_SUITE("ptset-models") {
  TEST_CASE("star precategory") {
    auto x = pointed_set(3), b = pointed_set(2);
    auto h = Morphism(x, b, {0, 1, 1});
    auto p = star_precategory(h);
    CHECK(validate_precategory(p).ok);
    CHECK(is_internal_category(p).is_pullback);
    auto c = star_category(h);
    CHECK(c.objects == 2);
    CHECK(c.arrows() == 4);
    CHECK(check_category_laws(c).ok);
    auto zero = star_precategory(zero_morphism(x, b));
    CHECK(validate_precategory(zero).ok);
    CHECK_FALSE(is_internal_category(zero).is_pullback);
    auto disc = star_category(zero_morphism(pointed_set(1), pointed_set(4)));
    CHECK(disc.arrows() == 4);
    try {
      star_category(Morphism(x, b, {0, 1, 0}));
      FAIL("expected throw");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kKernelNotTrivial);
      CHECK(std::string(e.what()).find("h(2)") != std::string::npos);
    }
  }

  TEST_CASE("star pullback iff trivial kernel, and the two categories agree") {
    for (int nx = 1; nx <= 5; ++nx)
      for (int nb = 1; nb <= 5; ++nb)
        for (const auto& h : all_morphisms(pointed_set(nx), pointed_set(nb))) {
          bool trivial = true;
          for (int e = 1; e < nx; ++e) trivial = trivial && h(e) != 0;
          auto p = star_precategory(h);
          auto v = is_internal_category(p);
          CHECK(v.is_pullback == trivial);
          if (!trivial) continue;
          auto star = star_category(h);
          CHECK(check_category_laws(star).ok);
          CHECK(check_category_laws(star).associative);
          auto internal = category_from_internal(p);
          CHECK(check_category_laws(internal).ok);
          const int n = internal.arrows();
          REQUIRE(n == star.arrows());
          for (int g = 0; g < n; ++g)
            for (int f = 0; f < n; ++f) {
              int gf = internal.compose(g, f);
              int sgf = star.compose(star_arrow(g, nx, nb), star_arrow(f, nx, nb));
              CHECK(sgf == (gf < 0 ? -1 : star_arrow(gf, nx, nb)));
            }
        }
  }

  TEST_CASE("fibered action laws") {
    auto f = xor_model();
    CHECK(validate_fibered_action(f).ok);
    CHECK_FALSE(check_model_associativity(f).has_value());
    auto cat = product_model_category(f);
    CHECK(cat.objects == 2);
    CHECK(cat.arrows() == 4);
    CHECK(*cat.associative);
    auto verdict = check_category_laws(cat);
    CHECK(verdict.ok);
    CHECK(verdict.associative);
    auto p = product_model_precategory(f);
    CHECK(validate_precategory(p).ok);
    auto iv = is_internal_category(p);
    CHECK(iv.is_pullback);
    CHECK(*iv.is_associative);

    FiberedAction no_mu{f.x, f.b, f.xi, std::nullopt, std::nullopt, std::nullopt, {}};
    CHECK(validate_fibered_action(no_mu).ok);
    no_mu.xi[0] = 1;
    CHECK_FALSE(validate_fibered_action(no_mu).ok);

    // xi(x, b) = b makes both sides of the compatibility law equal to b.
    auto g = f;
    g.xi = {0, 1, 0, 1};
    CHECK(validate_fibered_action(g).ok);
    // xi(1, b) = 1: (1 +_0 1).0 = 0 but 1.(1.0) = 1.
    g.xi = {0, 1, 1, 1};
    auto gv = validate_fibered_action(g);
    REQUIRE_FALSE(gv.ok);
    CHECK(gv.failures.front().law == "(y +_b x).b = alpha(y).(x.b)");
    CHECK(gv.failures.front().witness == "(1,0,1)");

    auto trivial = FiberedAction{pointed_set(1), pointed_set(3), {0, 1, 2}, pointed_set(1),
                                 identity(pointed_set(1)), identity(pointed_set(1)), {0, 0, 0}};
    auto disc = product_model_category(trivial);
    CHECK(disc.arrows() == 3);
    CHECK(check_category_laws(disc).ok);
  }

  TEST_CASE("every single-entry mutation of the xor model is detected") {
    auto f = xor_model();
    int mutations = 0, detected = 0;
    auto detect = [&](const FiberedAction& g) {
      ++mutations;
      bool caught = !validate_fibered_action(g).ok;
      if (!caught && g.alpha->map() == identity(g.x).map() && g.beta->map() == identity(g.x).map())
        caught = check_model_associativity(g).has_value();
      detected += caught;
    };
    for (size_t i = 0; i < f.xi.size(); ++i) {
      auto g = f;
      g.xi[i] ^= 1;
      detect(g);
    }
    for (size_t i = 0; i < f.mu.size(); ++i) {
      auto g = f;
      g.mu[i] ^= 1;
      detect(g);
    }
    CHECK(mutations == 12);
    CHECK(detected == mutations);
  }

  TEST_CASE("associativity flag agrees with the category laws") {
    auto found = search_nonassociative_model(3, 3);
    REQUIRE(found.has_value());
    CHECK(found->x->order() == 3);
    CHECK(validate_fibered_action(*found).ok);
    auto cat = product_model_category(*found);
    CHECK_FALSE(*cat.associative);
    auto v = check_category_laws(cat);
    CHECK(v.ok);
    CHECK_FALSE(v.associative);
    CHECK_FALSE(*is_internal_category(product_model_precategory(*found)).is_associative);
  }
}
