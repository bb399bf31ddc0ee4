#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <random>

#include "icat/harness.hpp"
#include "icat/homs.hpp"

using namespace icat;

namespace {

Json reparse(const Json& j) { return Json::parse(j.dump()); }

std::vector<StructRef> mixed_corpus() {
  std::vector<StructRef> out;
  for (auto kind : {Kind::kPointedSet, Kind::kAbelianGroup, Kind::kGroup, Kind::kUnitalMagma})
    for (const auto& s : enumerate(kind, kind == Kind::kUnitalMagma ? 3 : 6).items) out.push_back(s);
  return out;
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "icat-unit";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_SUITE("cli-harness") {
  TEST_CASE("structure and morphism files round trip") {
    for (const auto& s : mixed_corpus()) {
      auto j = reparse(to_json(*s));
      CHECK(j.at("kind") == std::string(kind_name(s->kind())));
      CHECK(j.contains("table") == s->tabled());
      auto back = structure_from_json(j);
      CHECK(*back == *s);
      CHECK(back->name() == s->name());
      for (const auto& f : all_morphisms(s, s)) {
        auto g = morphism_from_json(reparse(to_json(f)));
        CHECK(g == f);
      }
    }
    Json bad = to_json(*cyclic(3));
    bad["table"][1][1] = 0;
    CHECK_THROWS_AS(structure_from_json(bad), Error);
    Json ragged = to_json(*cyclic(3));
    ragged["table"][0].erase(0);
    try {
      structure_from_json(ragged);
      FAIL("expected throw");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kBadInput);
    }
  }

  TEST_CASE("built-in names and bundle scopes") {
    CHECK(*builtin_structure("group:S3") == *symmetric3());
    CHECK(*builtin_structure("group:Sym3") == *symmetric_group(3));
    CHECK(*builtin_structure("abelian-group:Z2xZ4") == *abelian_from_factors({2, 4}));
    CHECK(*builtin_structure("pointed-set:P4") == *pointed_set(4));
    CHECK(builtin_structure("unital-magma:M3_0")->order() == 3);
    CHECK_THROWS_AS(builtin_structure("group:Q16"), Error);
    CHECK_THROWS_AS(builtin_structure("ring:Z2"), Error);
    Json doc{{"structures", {{"X", "abelian-group:Z4"}, {"Y", to_json(*cyclic(2))}}},
             {"source", "X"},
             {"target", "Y"},
             {"map", {0, 1, 0, 1}}};
    auto f = morphism_from_json(doc, Scope(doc));
    CHECK(f.source()->order() == 4);
    doc["map"] = {0, 1, 1, 1};
    CHECK_THROWS_AS(morphism_from_json(doc, Scope(doc)), Error);
  }

  TEST_CASE("bundle formats round trip") {
    for (const auto& p : enumerate_split_epis(Kind::kGroup, 6, false)) {
      auto q = split_epi_from_json(reparse(to_json(p)));
      CHECK(q.alpha() == p.alpha());
      CHECK(q.beta() == p.beta());
      CHECK(q.k() == p.k());
    }
    auto gs = builtin_groups(4);
    for (const auto& x : gs)
      for (const auto& b : gs) {
        for (const auto& a : enumerate_actions(x, b)) CHECK(action_from_json(reparse(to_json(a))).act == a.act);
        for (const auto& p : enumerate_pxms(x, b, false)) {
          auto q = pxm_from_json(reparse(to_json(p)));
          CHECK(q.h == p.h);
          CHECK(q.action.act == p.action.act);
          auto g = rg_from_pxm(p);
          auto h = graph_from_json(reparse(to_json(g)));
          CHECK(h.d == g.d);
          CHECK(h.c == g.c);
          CHECK(h.e == g.e);
        }
        for (const auto& p : enumerate_pxms(x, b, true)) {
          auto d = chaincomp_from_crossed_module(p);
          auto e = chaincomp_from_json(reparse(to_json(d)));
          CHECK(e.t == d.t);
          CHECK(e.xi_f.act == d.xi_f.act);
          CHECK(validate_chaincomp(e).ok);
        }
      }
    auto ab = std::vector<StructRef>{cyclic(1), cyclic(2), cyclic(4)};
    for (const auto& z : ab)
      for (const auto& x : ab)
        for (const auto& b : ab)
          for (const auto& ch : enumerate_chains(z, x, b)) {
            auto c2 = chain_from_json(reparse(to_json(ch)));
            CHECK(c2.t == ch.t);
            CHECK(c2.h == ch.h);
            auto p = precat_from_2chain(ch);
            auto q = precategory_from_json(reparse(to_json(p)));
            CHECK(q.m == p.m);
            CHECK(q.p1 == p.p1);
            CHECK(q.e2 == p.e2);
          }
    auto f = xor_model();
    auto g = fibered_from_json(reparse(to_json(f)));
    CHECK(g.xi == f.xi);
    CHECK(g.mu == f.mu);
    auto c = product_model_category(f);
    auto c2 = category_from_json(reparse(to_json(c)));
    CHECK(c2.comp == c.comp);
    CHECK(c2.dom == c.dom);
    CHECK(c2.id == c.id);
    CHECK(c2.associative == c.associative);
  }

  TEST_CASE("A2 witness certificates replay") {
    auto w = search_A2_counterexample(Kind::kPointedSet, 4);
    REQUIRE(w.has_value());
    auto j = reparse(to_json(*w));
    CHECK(j.at("structures").size() == 6);
    CHECK(j.at("verdict").get<std::string>().starts_with("FAIL"));
    auto back = a2_witness_from_json(j);
    CHECK(back.h == w->h);
    CHECK(back.f == w->f);
    auto out = run_check("auto", j);
    CHECK_FALSE(out.pass);
    CHECK(out.doc.at("details").at("replays") == true);
    j["morphisms"]["f"] = Json::array({0, 0});
    if (w->f.map() != std::vector<int>{0, 0}) CHECK_FALSE(run_check("a2-witness", j).pass);
  }

  TEST_CASE("check verdicts and exit codes") {
    auto g = rg_from_morphism(Morphism(cyclic(4), cyclic(2), {0, 1, 0, 1}));
    CHECK(run_check("rg", to_json(g)).pass);
    Json broken = to_json(g);
    broken["e"][1] = 0;
    auto out = run_check("rg", broken);
    CHECK_FALSE(out.pass);
    CHECK(out.doc.at("verdict") == "FAIL");
    CHECK_THROWS_AS(run_check("rg", Json{{"C0", 3}}), Error);
    CHECK_THROWS_AS(run_check("bogus", to_json(g)), Error);
    CHECK(exit_code(ErrorCode::kBadInput) == 2);
    CHECK(exit_code(ErrorCode::kBoundTooLarge) == 2);
    CHECK(exit_code(ErrorCode::kUnsupportedCoproduct) == 3);
    CHECK(exit_code(ErrorCode::kUnsupportedConstruction) == 3);
    CHECK(exit_code(ErrorCode::kLawViolation) == 1);
    try {
      run_build("rg-from-h", to_json(identity(cyclic(2, Kind::kGroup))));
      FAIL("expected throw");
    } catch (const Error& e) {
      CHECK(exit_code(e.code()) == 3);
    }
  }

  TEST_CASE("builds match the library constructions") {
    auto s3 = run_build("semidirect", Json{{"X", "group:Z3"}, {"B", "group:Z2"}, {"act", {{0, 1, 2}, {0, 2, 1}}}});
    auto p = split_epi_from_json(s3);
    CHECK(find_isomorphism(p.top(), symmetric3()).has_value());
    CHECK(run_check("semidirect-axioms", s3).pass);
    Json h = to_json(Morphism(pointed_set(3), pointed_set(2), {0, 1, 1}));
    auto star = run_build("star", h);
    CHECK(run_check("auto", star).pass);
    CHECK(star.at("objects") == 2);
    Json zero = to_json(zero_morphism(pointed_set(3), pointed_set(2)));
    try {
      run_build("star", zero);
      FAIL("expected throw");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kKernelNotTrivial);
    }
    auto pc = run_build("precat-from-chain", to_json(TwoChain{zero_morphism(cyclic(1), cyclic(4)),
                                                               Morphism(cyclic(4), cyclic(2), {0, 1, 0, 1})}));
    auto cls = run_classify("additive", pc);
    CHECK(cls.pass);
    CHECK(cls.doc.at("chain").at("h") == Json::array({0, 1, 0, 1}));
    auto mag = run_classify("magma", to_json(*retag(cyclic(3), Kind::kUnitalMagma)));
    CHECK(mag.pass);
    CHECK(mag.doc.at("square_pair_jointly_epic") == true);
  }

  TEST_CASE("renumbered graphs classify to isomorphic morphisms") {
    std::mt19937_64 rng(5);
    auto corpus = enumerate(Kind::kAbelianGroup, 4).items;
    for (const auto& x : corpus)
      for (const auto& b : corpus)
        for (const auto& h : all_morphisms(x, b)) {
          auto g = rg_from_morphism(h);
          const int n = g.c1()->order();
          std::vector<int> p(n);
          for (int i = 0; i < n; ++i) p[i] = i;
          std::shuffle(p.begin() + 1, p.end(), rng);
          std::vector<int> t(static_cast<size_t>(n) * n);
          for (int a = 0; a < n; ++a)
            for (int c = 0; c < n; ++c) t[static_cast<size_t>(p[a]) * n + p[c]] = p[g.c1()->op(a, c)];
          auto c1 = make_structure(Kind::kAbelianGroup, n, t);
          std::vector<int> d(n), cc(n), e(g.c0()->order());
          for (int a = 0; a < n; ++a) {
            d[p[a]] = g.d(a);
            cc[p[a]] = g.c(a);
          }
          for (int y = 0; y < g.c0()->order(); ++y) e[y] = p[g.e(y)];
          ReflexiveGraph moved{Morphism(c1, g.c0(), d), Morphism(c1, g.c0(), cc), Morphism(g.c0(), c1, e)};
          auto out = run_classify("additive", to_json(moved));
          CHECK(out.pass);
          auto h2 = morphism_from_json(out.doc.at("h"));
          // Isomorphic as objects over B: some iso phi : X -> K with h2 phi = h.
          bool found = false;
          for (const auto& phi : all_morphisms(x, h2.source(), HomSearch{{}, true, {}}))
            found = found || compose(h2, phi) == h;
          CHECK(found);
        }
  }

  TEST_CASE("enumerate output is byte-identical across runs") {
    for (auto kind : {"pointed-set", "abelian-group", "group", "unital-magma"}) {
      int max = std::string(kind) == "unital-magma" ? 4 : 8;
      CHECK(run_enumerate(kind, max).dump() == run_enumerate(kind, max).dump());
    }
    auto names = run_enumerate("abelian-group", 8).at("items");
    std::vector<std::string> got;
    for (const auto& s : names) got.push_back(s.at("name"));
    CHECK(got == std::vector<std::string>{"Z1", "Z2", "Z3", "Z4", "Z2xZ2", "Z5", "Z6", "Z7", "Z8", "Z2xZ4",
                                          "Z2xZ2xZ2"});
    CHECK_THROWS_AS(run_enumerate("group", 13), Error);
  }

  TEST_CASE("campaign runner matches verdicts against expectations") {
    Json manifest{{"name", "mini"},
                  {"checks",
                   {{{"id", "b-a2"}, {"family", "a2-search"}, {"params", {{"max_size", 4}}}, {"expect", "FAIL"}},
                    {{"id", "a-star"}, {"family", "star"}, {"params", {{"max_size", 3}}}, {"expect", "PASS"}},
                    {{"id", "c-wrong"}, {"family", "star"}, {"params", {{"max_size", 2}}}, {"expect", "FAIL"}}}}};
    auto out = scratch("mini");
    std::filesystem::remove_all(out);
    RunOptions opts;
    opts.out_dir = out.string();
    opts.workers = 2;
    auto report = run_campaign(manifest, opts);
    CHECK(report.at("verdict") == "FAIL");
    const auto& checks = report.at("checks");
    REQUIRE(checks.size() == 3);
    CHECK(checks[0].at("id") == "a-star");
    CHECK(checks[1].at("id") == "b-a2");
    CHECK(checks[1].at("matched") == true);
    CHECK(checks[2].at("matched") == false);
    REQUIRE(checks[1].contains("witness_file"));
    auto witness = load_json(checks[1].at("witness_file").get<std::string>());
    CHECK_FALSE(run_check("auto", witness).pass);
    auto text = render_report(report);
    CHECK(text.find("campaign mini: FAIL (2/3") == 0);
    CHECK(text.find("MISS") != std::string::npos);

    manifest["checks"].erase(2);
    CHECK(run_campaign(manifest, opts).at("verdict") == "PASS");
    Json unknown{{"name", "u"}, {"checks", {{{"id", "x"}, {"family", "nope"}, {"expect", "PASS"}}}}};
    auto ur = run_campaign(unknown, opts);
    CHECK(ur.at("checks")[0].at("verdict") == "ERROR");
    CHECK(ur.at("verdict") == "FAIL");
  }

  TEST_CASE("registered campaigns load and the size cap applies") {
    auto names = campaign_names();
    for (auto n : {"all", "th2-ab", "ptset-a2-cex", "act-pt-grp", "halfrefl"})
      CHECK(std::find(names.begin(), names.end(), n) != names.end());
    CHECK(load_campaign("act-pt-equivalence").at("name") == "act-pt-grp");
    CHECK_THROWS_AS(load_campaign("no-such-campaign"), Error);
    RunOptions opts;
    opts.max_size = 4;
    auto report = run_campaign(load_campaign("ptset-a2-cex"), opts);
    CHECK(report.at("verdict") == "PASS");
    for (const auto& c : report.at("checks")) {
      REQUIRE(c.at("bounds").contains("max_size"));
      for (const auto& [key, v] : c.at("bounds").items()) CHECK(v.get<int>() <= 4);
    }
    // The wedge-product witness needs a top object of size 4.
    opts.max_size = 3;
    CHECK(run_campaign(load_campaign("ptset-a2-cex"), opts).at("verdict") == "FAIL");
    auto reg = run_campaign(Json{{"kind", "pointed-set"}, {"bounds", {{"max_size", 3}}}, {"models", {"pairs", "points"}}},
                            RunOptions{});
    CHECK(reg.at("verdict") == "PASS");
    CHECK(reg.at("checks").size() == 2);
  }

  TEST_CASE("search entry points") {
    auto a2 = run_search("a2-counterexample", "pointed-set", RunOptions{});
    CHECK(a2.pass);
    CHECK_FALSE(run_check("auto", a2.doc.at("witness")).pass);
    RunOptions small;
    small.max_size = 4;
    auto pf = run_search("peiffer-failure", "", small);
    REQUIRE(pf.pass);
    auto pxm = pxm_from_json(pf.doc.at("witness"));
    CHECK_FALSE(check_peiffer(pxm).holds);
    auto je = run_search("joint-epic-failure", "", small);
    CHECK(je.pass);
    CHECK(je.doc.at("witness").at("right_cancellative") == false);
    CHECK_FALSE(run_search("a2-counterexample", "group", small).pass);
  }
}
