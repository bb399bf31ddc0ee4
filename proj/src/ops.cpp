#include <algorithm>

#include "icat/halfrefl.hpp"
#include "icat/harness.hpp"
#include "icat/homs.hpp"

namespace icat {
namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::kBadInput, what); }

bool passes_through(ErrorCode code) {
  return code == ErrorCode::kBadInput || code == ErrorCode::kBoundTooLarge ||
         code == ErrorCode::kUnsupportedCoproduct || code == ErrorCode::kUnsupportedConstruction;
}

Outcome verdict(const std::string& check, bool pass, const std::string& law = {}, const std::string& witness = {},
                Json details = Json::object()) {
  Json doc{{"check", check}, {"verdict", pass ? "PASS" : "FAIL"}};
  if (!pass) {
    doc["law"] = law;
    doc["witness"] = witness;
  }
  if (!details.empty()) doc["details"] = std::move(details);
  return {pass, doc};
}

Outcome from_verdict(const std::string& check, const Verdict& v, Json details = Json::object()) {
  return verdict(check, v.ok, v.law, v.witness, std::move(details));
}

std::string pair_text(int x, int y) { return "(" + std::to_string(x) + ", " + std::to_string(y) + ")"; }

int int_param(const Json& doc, const char* key, int fallback) {
  if (!doc.is_object() || !doc.contains(key)) return fallback;
  if (!doc.at(key).is_number_integer()) bad(std::string(key) + " must be an integer");
  return doc.at(key).get<int>();
}

Outcome check_splitepi(const Json& doc) {
  SplitEpi p = split_epi_from_json(doc);
  Json d{{"kernel_order", p.kernel_object()->order()}, {"k", p.k().map()}};
  if (coproduct_supported(p.top()->kind())) d["comparison_iso"] = comparison_iso(p).iso;
  if (p.top()->kind() == Kind::kGroup) d["semidirect_comparison_iso"] = comparison_act(p).bijective();
  return verdict("splitepi", true, {}, {}, d);
}

Outcome check_semidirect_axioms_doc(const Json& doc) {
  auto v = check_semidirect_axioms(split_epi_from_json(doc));
  Json d{{"jointly_epic", v.jointly_epic.holds}, {"central", v.central.holds}, {"kernel", v.kernel.holds}};
  if (v.zero_one) d["zero_one"] = v.zero_one->map();
  if (v.all()) return verdict("semidirect-axioms", true, {}, {}, d);
  const AxiomCheck& first = !v.jointly_epic.holds ? v.jointly_epic : !v.central.holds ? v.central : v.kernel;
  std::string law = !v.jointly_epic.holds ? "(k, beta) jointly epic"
                    : !v.central.holds    ? "unique [0 1]"
                                          : "k = ker [0 1]";
  return verdict("semidirect-axioms", false, law, first.witness, d);
}

Outcome check_precat(const Json& doc, bool internal) {
  Precategory p = precategory_from_json(doc);
  auto v = validate_precategory(p);
  if (!v.ok) return from_verdict(internal ? "internal" : "precat", v);
  auto ic = is_internal_category(p);
  Json d{{"pullback", ic.is_pullback}};
  if (ic.is_associative) d["associative"] = *ic.is_associative;
  if (ic.is_unital) d["unital"] = *ic.is_unital;
  if (!internal) return verdict("precat", true, {}, {}, d);
  return verdict("internal", ic.is_pullback, "pullback", ic.witness, d);
}

Outcome check_peiffer_doc(const Json& doc) {
  PreCrossedModule p = pxm_from_json(doc);
  auto v = check_peiffer(p);
  auto failures = peiffer_failures(p);
  Json list = Json::array();
  for (const auto& [x, y] : failures) list.push_back({x, y});
  Json d{{"failures", list}};
  return verdict("peiffer", v.holds, "Peiffer identity", v.holds ? "" : pair_text(v.x, v.x2), d);
}

Outcome check_chaincomp_doc(const Json& doc) {
  auto v = validate_chaincomp(chaincomp_from_json(doc));
  Json conds = Json::array();
  const ConditionResult* first = nullptr;
  for (const auto& c : v.conditions) {
    conds.push_back({{"name", c.name}, {"holds", c.holds}});
    if (!c.holds && !first) first = &c;
  }
  return verdict("chaincomp", v.ok, first ? first->name : "", first ? first->witness : "", {{"conditions", conds}});
}

Outcome check_fibered_doc(const Json& doc) {
  FiberedAction f = fibered_from_json(doc);
  auto v = validate_fibered_action(f);
  Json fails = Json::array();
  for (const auto& l : v.failures) fails.push_back({{"law", l.law}, {"witness", l.witness}});
  Json d{{"failures", fails}};
  bool square = f.has_mu() && **f.y == *f.x && f.alpha->map() == identity(f.x).map() &&
                f.beta->map() == identity(f.x).map();
  std::optional<LawFailure> assoc;
  if (v.ok && square) {
    assoc = check_model_associativity(f);
    d["associativity"] = !assoc.has_value();
  }
  if (!v.ok) return verdict("fibered", false, v.failures[0].law, v.failures[0].witness, d);
  if (assoc) return verdict("fibered", false, assoc->law, assoc->witness, d);
  return verdict("fibered", true, {}, {}, d);
}

Outcome check_category_doc(const Json& doc) {
  auto c = category_from_json(doc);
  auto v = check_category_laws(c);
  Json d{{"laws", v.ok}, {"associative", v.associative}};
  return verdict("category", v.ok && v.associative, v.law, v.witness, d);
}

Outcome check_a2_doc(const Json& doc) {
  A2Witness w = a2_witness_from_json(doc);
  bool f_iso = w.f.bijective(), g_iso = w.g.bijective(), h_iso = w.h.bijective();
  std::string line = to_json(w).at("verdict").get<std::string>();
  Json d{{"f_iso", f_iso}, {"g_iso", g_iso}, {"h_iso", h_iso}, {"verdict_line", line}};
  if (doc.contains("verdict") && doc.at("verdict").is_string()) d["replays"] = doc.at("verdict").get<std::string>() == line;
  bool counterexample = f_iso && g_iso && !h_iso;
  return verdict("a2-witness", !counterexample, "split five lemma", counterexample ? "h is not bijective" : "", d);
}

Outcome check_a1_doc(const Json& doc) {
  Scope scope(doc);
  auto x = scope.resolve(doc.at("X"));
  auto b = scope.resolve(doc.at("B"));
  auto v = check_A1(x, b, int_param(doc, "source_bound", 6));
  return verdict("a1", v.holds, "i1 = ker [0 1]", v.witness);
}

Outcome dispatch_check(const std::string& type, const Json& doc) {
  if (type == "structure") {
    auto s = structure_from_json(doc);
    return verdict(type, true, {}, {}, {{"kind", kind_name(s->kind())}, {"order", s->order()}});
  }
  if (type == "morphism") {
    auto f = morphism_from_json(doc, Scope(doc));
    return verdict(type, true, {}, {}, {{"injective", f.injective()}, {"surjective", f.surjective()}});
  }
  if (type == "splitepi") return check_splitepi(doc);
  if (type == "semidirect-axioms") return check_semidirect_axioms_doc(doc);
  if (type == "rg") return from_verdict(type, validate_reflexive_graph(graph_from_json(doc)));
  if (type == "precat") return check_precat(doc, false);
  if (type == "internal") return check_precat(doc, true);
  if (type == "chain") {
    validate_chain(chain_from_json(doc));
    return verdict(type, true);
  }
  if (type == "action") {
    action_from_json(doc);
    return verdict(type, true);
  }
  if (type == "pxm") {
    auto p = pxm_from_json(doc);
    return verdict(type, true, {}, {}, {{"crossed", check_peiffer(p).holds}});
  }
  if (type == "peiffer") return check_peiffer_doc(doc);
  if (type == "chaincomp") return check_chaincomp_doc(doc);
  if (type == "fibered") return check_fibered_doc(doc);
  if (type == "category") return check_category_doc(doc);
  if (type == "a2-witness") return check_a2_doc(doc);
  if (type == "a1") return check_a1_doc(doc);
  if (type == "campaign-check") return run_family(doc, RunOptions{});
  bad("unknown check type '" + type + "'");
}

Json morphism_doc(const Morphism& f) { return to_json(f); }

}  // namespace

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::kBadInput:
    case ErrorCode::kBoundTooLarge:
      return 2;
    case ErrorCode::kUnsupportedCoproduct:
    case ErrorCode::kUnsupportedConstruction:
      return 3;
    default:
      return 1;
  }
}

std::vector<std::string> check_types() {
  return {"structure", "morphism", "splitepi", "semidirect-axioms", "rg", "precat", "internal", "chain", "action",
          "pxm", "peiffer", "chaincomp", "fibered", "category", "a2-witness", "a1", "campaign-check"};
}

Outcome run_check(const std::string& type, const Json& doc) {
  std::string t = type;
  if (t == "auto" || t.empty()) {
    if (!doc.is_object() || !doc.contains("type") || !doc.at("type").is_string())
      bad("document has no \"type\"; name the check type explicitly");
    t = doc.at("type").get<std::string>();
  }
  if (t == "graph") t = "rg";
  try {
    return dispatch_check(t, doc);
  } catch (const Error& e) {
    if (passes_through(e.code())) throw;
    return verdict(t, false, std::string(error_name(e.code())), e.what());
  } catch (const Json::exception& e) {
    bad(e.what());
  }
}

Json run_build(const std::string& what, const Json& doc) {
  try {
    if (what == "star") {
      Json j = to_json(star_category(morphism_from_json(doc, Scope(doc))));
      j["type"] = "category";
      return j;
    }
    if (what == "product-model") {
      Json j = to_json(product_model_category(fibered_from_json(doc)));
      j["type"] = "category";
      return j;
    }
    if (what == "rg-from-h") {
      Json j;
      if (doc.contains("act")) {
        j = to_json(rg_from_pxm(pxm_from_json(doc)));
      } else {
        auto h = morphism_from_json(doc, Scope(doc));
        j = to_json(h.source()->kind() == Kind::kAbelianGroup ? rg_from_morphism(h) : graph_from_h(h));
      }
      j["type"] = "rg";
      return j;
    }
    if (what == "precat-from-chain") {
      auto ch = chain_from_json(doc);
      validate_chain(ch);
      Json j = to_json(precat_from_2chain(ch));
      j["type"] = "precat";
      return j;
    }
    if (what == "semidirect") {
      auto s = semidirect_product(action_from_json(doc));
      Json j = to_json(s.point);
      j["sigma1"] = s.sigma1.map();
      j["sigma2"] = s.sigma2.map();
      j["type"] = "splitepi";
      return j;
    }
  } catch (const Json::exception& e) {
    bad(e.what());
  }
  bad("unknown build target '" + what + "'");
}

Outcome run_classify(const std::string& what, const Json& doc) {
  try {
    if (what == "additive") {
      if (doc.contains("C2")) {
        auto p = precategory_from_json(doc);
        auto cls = chain_from_precat(p);
        auto v = verify_chain_certificate(p, cls);
        Json chain = to_json(cls.chain);
        chain["type"] = "chain";
        Json out{{"classify", what},
                 {"verdict", v.ok ? "PASS" : "FAIL"},
                 {"chain", chain},
                 {"certificate", {{"phi1", cls.phi1.map()}, {"phi2", cls.phi2.map()}}}};
        return {v.ok, out};
      }
      auto g = graph_from_json(doc);
      auto cls = morphism_from_rg(g);
      auto v = verify_graph_certificate(g, cls);
      Json out{{"classify", what},
               {"verdict", v.ok ? "PASS" : "FAIL"},
               {"h", morphism_doc(cls.h)},
               {"certificate", {{"iso", cls.iso.map()}}}};
      return {v.ok, out};
    }
    if (what == "group") {
      if (doc.contains("C1")) {
        auto g = graph_from_json(doc);
        auto cls = pxm_from_rg(g);
        auto v = verify_pxm_certificate(g, cls);
        Json pxm = to_json(cls.pxm);
        pxm["type"] = "pxm";
        Json out{{"classify", what},
                 {"verdict", v.ok ? "PASS" : "FAIL"},
                 {"pxm", pxm},
                 {"crossed", check_peiffer(cls.pxm).holds},
                 {"certificate", {{"iso", cls.iso.map()}}}};
        return {v.ok, out};
      }
      auto p = split_epi_from_json(doc);
      auto act = functor_S_act(p);
      auto cmp = comparison_act(p);
      Json a = to_json(act);
      a["type"] = "action";
      Json out{{"classify", what}, {"verdict", "PASS"}, {"action", a}, {"certificate", {{"comparison", cmp.map()}}}};
      return {true, out};
    }
    if (what == "magma") {
      auto s = structure_from_json(doc);
      if (s->kind() != Kind::kUnitalMagma) throw Error(ErrorCode::kKindMismatch, "expected a unital magma");
      bool rc = right_cancellative(*s);
      Json out{{"classify", what}, {"verdict", rc ? "PASS" : "FAIL"}, {"right_cancellative", rc}};
      out["canonical_table"] = canonical_table(s->order(), s->table());
      if (s->order() <= kMagmaCap) {
        for (const auto& m : unital_magmas(s->order(), rc))
          if (m->table() == out["canonical_table"].get<std::vector<int>>()) out["corpus_name"] = m->name();
        out["square_pair_jointly_epic"] = square_pair_jointly_epic(s);
      }
      return {rc, out};
    }
  } catch (const Json::exception& e) {
    bad(e.what());
  }
  bad("unknown classification '" + what + "'");
}

Outcome run_search(const std::string& what, const std::string& kind_text, const RunOptions& opts) {
  auto bound = [&](int fallback) { return opts.max_size > 0 ? opts.max_size : fallback; };
  if (what == "a2-counterexample") {
    Kind kind = parse_kind(kind_text.empty() ? "pointed-set" : kind_text);
    int max = bound(4);
    A2SearchStats stats;
    auto w = search_A2_counterexample(kind, max, {kind == Kind::kGroup, 1}, &stats);
    Json out{{"search", what},
             {"kind", kind_name(kind)},
             {"max_size", max},
             {"split_epis", stats.split_epis},
             {"point_morphisms", stats.point_morphisms},
             {"found", w.has_value()}};
    if (w) out["witness"] = to_json(*w);
    return {w.has_value(), out};
  }
  if (what == "peiffer-failure") {
    int max = bound(6);
    auto gs = builtin_groups(std::min(max, kGroupCap));
    std::vector<std::pair<StructRef, StructRef>> pairs;
    for (const auto& x : gs)
      for (const auto& b : gs) pairs.emplace_back(x, b);
    std::stable_sort(pairs.begin(), pairs.end(), [](const auto& p, const auto& q) {
      return p.first->order() + p.second->order() < q.first->order() + q.second->order();
    });
    for (const auto& [x, b] : pairs)
      for (const auto& p : enumerate_pxms(x, b, false)) {
        auto v = check_peiffer(p);
        if (v.holds) continue;
        Json w = to_json(p);
        w["type"] = "peiffer";
        return {true, Json{{"search", what}, {"max_size", max}, {"found", true}, {"witness", w},
                           {"pair", {v.x, v.x2}}}};
      }
    return {false, Json{{"search", what}, {"max_size", max}, {"found", false}}};
  }
  if (what == "joint-epic-failure") {
    int max = bound(3);
    auto f = search_joint_epic_failure(1, max);
    Json out{{"search", what}, {"max_size", max}, {"found", f.has_value()}};
    if (f) {
      out["witness"] = {{"magma", to_json(*f->magma)},
                        {"u", f->u.map()},
                        {"v", f->v.map()},
                        {"right_cancellative", right_cancellative(*f->magma)}};
    }
    return {f.has_value(), out};
  }
  bad("unknown search '" + what + "'");
}

Json run_enumerate(const std::string& kind, int max_size) { return to_json(enumerate(parse_kind(kind), max_size)); }

}  // namespace icat
