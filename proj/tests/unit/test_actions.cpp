#include "doctest.h"

#include <random>

#include "icat/actions.hpp"
#include "icat/corpus.hpp"
#include "icat/homs.hpp"

using namespace icat;

namespace {

StructRef zg(int n) { return cyclic(n, Kind::kGroup); }

GroupAction inversion(const StructRef& x) {
  auto b = zg(2);
  GroupAction a{x, b, std::vector<int>(2 * x->order())};
  for (int e = 0; e < x->order(); ++e) {
    a.act[e] = e;
    a.act[x->order() + e] = x->inverse(e);
  }
  return a;
}

int perm_index(const std::vector<int>& p) {
  auto perms = sorted_permutations(static_cast<int>(p.size()));
  return static_cast<int>(std::find(perms.begin(), perms.end(), p) - perms.begin());
}

}  // namespace

TEST_SUITE("group-actions") {
  TEST_CASE("semidirect products") {
    auto s = semidirect_product(inversion(zg(3)));
    CHECK(s.point.top()->order() == 6);
    CHECK(find_isomorphism(s.point.top(), symmetric3()).has_value());
    auto d = semidirect_product(inversion(zg(4)));
    CHECK(find_isomorphism(d.point.top(), dihedral(4)).has_value());
    auto t = semidirect_product(trivial_action(zg(2), zg(3)));
    CHECK(*t.point.top() == *product(zg(2), zg(3)).object);
    CHECK(s.point.k() == s.sigma1);
    GroupAction bad = inversion(zg(3));
    bad.act[4] = 0;
    CHECK_THROWS_AS(semidirect_product(bad), Error);
  }

  TEST_CASE("semidirect axioms") {
    auto groups = builtin_groups(6);
    for (const auto& x : groups)
      for (const auto& b : groups) {
        if (x->order() * b->order() > 12) continue;
        for (const auto& a : enumerate_actions(x, b)) {
          auto s = semidirect_product(a);
          auto v = check_semidirect_axioms(s.point);
          CHECK(v.all());
          REQUIRE(v.zero_one.has_value());
          CHECK(*v.zero_one == s.point.alpha());
        }
      }
    auto wedge = functor_T(pointed_set(2), pointed_set(3));
    CHECK(check_semidirect_axioms(wedge).all());
    auto pr = product(pointed_set(2), pointed_set(2));
    SplitEpi prod_point(pr.p2, Morphism(pointed_set(2), pr.object, {0, 1}));
    auto pv = check_semidirect_axioms(prod_point);
    CHECK_FALSE(pv.jointly_epic.holds);
    CHECK_FALSE(pv.central.holds);
  }

  TEST_CASE("S T = 1 and T S = 1") {
    auto groups = builtin_groups(8);
    for (const auto& x : groups)
      for (const auto& b : groups) {
        if (x->order() > 8 || b->order() > 8 || x->order() * b->order() > 32) continue;
        for (const auto& a : enumerate_actions(x, b)) {
          auto back = functor_S_act(functor_T_act(a));
          CHECK(back.act == a.act);
          CHECK(*back.x == *a.x);
        }
      }
    for (const auto& p : enumerate_split_epis(Kind::kGroup, 8, false)) {
      auto cmp = comparison_act(p);
      CHECK(cmp.bijective());
    }
    auto s3 = symmetric3();
    SplitEpi sign(Morphism(s3, zg(2), {0, 0, 0, 1, 1, 1}), Morphism(zg(2), s3, {0, 3}));
    auto act = functor_S_act(sign);
    CHECK(act.act == std::vector<int>{0, 1, 2, 0, 2, 1});
  }

  TEST_CASE("enumerated actions") {
    CHECK(enumerate_actions(zg(3), zg(2)).size() == 2);
    CHECK(enumerate_actions(abelian_from_factors({2, 2}, Kind::kGroup), zg(3)).size() == 3);
    CHECK(enumerate_actions(zg(2), zg(2)).size() == 1);
    for (const auto& a : enumerate_actions(zg(4), abelian_from_factors({2, 2}, Kind::kGroup))) validate_action(a);
  }

  TEST_CASE("conjugation") {
    CHECK(conjugation_G(zg(5)).act == trivial_action(zg(5), zg(5)).act);
    auto c = conjugation_G(symmetric3());
    validate_action(c);
    auto t = functor_T_act(c);
    CHECK(t.top()->order() == 36);
    CHECK(t.k().map()[1] == 6);
  }

  TEST_CASE("Peiffer identity") {
    auto s3 = symmetric3();
    // Normal subgroup A3 of S3 with conjugation.
    auto a3 = zg(3);
    Morphism incl(a3, s3, {0, 1, 2});
    GroupAction conj{a3, s3, std::vector<int>(18)};
    for (int g = 0; g < 6; ++g)
      for (int x = 0; x < 3; ++x) conj.act[g * 3 + x] = s3->op(s3->op(g, x), s3->inverse(g));
    PreCrossedModule normal{conj, incl};
    validate_pxm(normal);
    CHECK(check_peiffer(normal).holds);

    auto sym = symmetric_group(3);
    PreCrossedModule bad{trivial_action(sym, zg(1)), zero_morphism(sym, zg(1))};
    validate_pxm(bad);
    auto v = check_peiffer(bad);
    CHECK_FALSE(v.holds);
    auto fails = peiffer_failures(bad);
    int t12 = perm_index({1, 0, 2}), t13 = perm_index({2, 1, 0});
    CHECK(std::find(fails.begin(), fails.end(), std::pair{t12, t13}) != fails.end());

    PreCrossedModule ab{trivial_action(zg(4), zg(2)), zero_morphism(zg(4), zg(2))};
    CHECK(check_peiffer(ab).holds);
  }

  TEST_CASE("Peiffer verdict is invariant under isomorphism") {
    std::mt19937 rng(3);
    auto d4 = dihedral(4);
    for (const auto& p : enumerate_pxms(d4, zg(2), false)) {
      auto auts = automorphisms(d4);
      auto phi = auts[std::uniform_int_distribution<size_t>(0, auts.size() - 1)(rng)];
      auto inv = inverse(phi);
      GroupAction moved{d4, p.action.b, p.action.act};
      for (int b = 0; b < 2; ++b)
        for (int x = 0; x < 8; ++x) moved.act[b * 8 + x] = phi(p.action(b, inv(x)));
      PreCrossedModule q{moved, compose(p.h, inv)};
      validate_pxm(q);
      CHECK(check_peiffer(p).holds == check_peiffer(q).holds);
    }
  }

  TEST_CASE("precrossed modules and reflexive graphs") {
    auto groups = builtin_groups(6);
    int checked = 0;
    for (const auto& x : groups)
      for (const auto& b : groups)
        for (const auto& p : enumerate_pxms(x, b, false)) {
          auto g = rg_from_pxm(p);
          CHECK(validate_reflexive_graph(g).ok);
          auto cls = pxm_from_rg(g);
          CHECK(cls.pxm.action.act == p.action.act);
          CHECK(cls.pxm.h == p.h);
          CHECK(verify_pxm_certificate(g, cls).ok);
          ++checked;
        }
    CHECK(checked > 100);
    auto g = rg_from_pxm({inversion(zg(3)), zero_morphism(zg(3), zg(2))});
    CHECK(g.c == g.d);
    CHECK(find_isomorphism(g.c1(), symmetric3()).has_value());
  }

  TEST_CASE("2-chain complexes with actions") {
    auto z2 = zg(2);
    ChainCompData trivial{identity(z2), zero_morphism(z2, z2), trivial_action(z2, z2), trivial_action(z2, z2), {}};
    auto f = functor_T_act(trivial.xi_x).top();
    auto w = functor_T_act(trivial.xi_z).top();
    trivial.xi_f = trivial_action(w, f);
    CHECK(validate_chaincomp(trivial).ok);

    int crossed = 0;
    for (const auto& x : builtin_groups(8))
      for (const auto& b : builtin_groups(8)) {
        if (x->order() * b->order() > 16) continue;
        for (const auto& p : enumerate_pxms(x, b, true)) {
          auto d = chaincomp_from_crossed_module(p);
          auto v = validate_chaincomp(d);
          CHECK(v.ok);
          ++crossed;
        }
      }
    CHECK(crossed > 20);

    // Precrossed but not crossed: condition 3 fails.
    auto sym = symmetric_group(3);
    auto d = chaincomp_from_crossed_module({trivial_action(sym, zg(1)), zero_morphism(sym, zg(1))});
    auto v = validate_chaincomp(d);
    CHECK_FALSE(v.ok);
    CHECK_FALSE(v.conditions[5].holds);

    CHECK_THROWS_AS(validate_chaincomp({identity(z2), identity(z2), trivial.xi_x, trivial.xi_z, trivial.xi_f}),
                    Error);
  }

  TEST_CASE("single-entry tampering of xi_F is caught") {
    auto a3 = zg(3);
    auto s3 = symmetric3();
    GroupAction conj{a3, s3, std::vector<int>(18)};
    for (int g = 0; g < 6; ++g)
      for (int x = 0; x < 3; ++x) conj.act[g * 3 + x] = s3->op(s3->op(g, x), s3->inverse(g));
    auto d = chaincomp_from_crossed_module({conj, Morphism(a3, s3, {0, 1, 2})});
    REQUIRE(validate_chaincomp(d).ok);
    const int nw = d.xi_f.x->order();
    int tampered = 0, caught = 0;
    for (size_t i = 0; i < d.xi_f.act.size(); ++i)
      for (int v = 0; v < nw; ++v) {
        if (v == d.xi_f.act[i]) continue;
        auto e = d;
        e.xi_f.act[i] = v;
        ++tampered;
        caught += !validate_chaincomp(e).ok;
      }
    CHECK(tampered > 0);
    CHECK(caught == tampered);
  }
}
