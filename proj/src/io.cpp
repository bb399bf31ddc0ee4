#include "icat/io.hpp"

#include <fstream>
#include <sstream>

#include "icat/homs.hpp"

namespace icat {
namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::kBadInput, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::vector<int> int_list(const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  std::vector<int> out;
  out.reserve(j.size());
  for (const auto& v : j) out.push_back(as_int(v, what));
  return out;
}

/// Row-major rows x cols matrix flattened.
std::vector<int> matrix(const Json& j, size_t rows, size_t cols, const char* what) {
  if (!j.is_array() || j.size() != rows)
    bad(std::string(what) + " must have " + std::to_string(rows) + " rows");
  std::vector<int> out;
  out.reserve(rows * cols);
  for (const auto& row : j) {
    auto r = int_list(row, what);
    if (r.size() != cols) bad(std::string(what) + " rows must have " + std::to_string(cols) + " entries");
    out.insert(out.end(), r.begin(), r.end());
  }
  return out;
}

Json rows(const std::vector<int>& flat, size_t cols) {
  Json out = Json::array();
  for (size_t i = 0; i < flat.size(); i += cols)
    out.push_back(std::vector<int>(flat.begin() + static_cast<long>(i), flat.begin() + static_cast<long>(i + cols)));
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, sep)) out.push_back(part);
  return out;
}

int parse_positive(const std::string& s) {
  if (s.empty() || s.size() > 3 || s.find_first_not_of("0123456789") != std::string::npos) return -1;
  return std::stoi(s);
}

Morphism map_field(const Json& j, const char* key, const StructRef& s, const StructRef& t, const Scope& scope) {
  return morphism_from_json(field(j, key), s, t, scope);
}

GroupAction action_table(const Json& j, const StructRef& x, const StructRef& b) {
  GroupAction a{x, b, matrix(j, static_cast<size_t>(b->order()), static_cast<size_t>(x->order()), "act")};
  validate_action(a);
  return a;
}

}  // namespace

StructRef builtin_structure(const std::string& ref) {
  auto colon = ref.find(':');
  if (colon == std::string::npos) bad("unknown structure '" + ref + "'");
  Kind kind = parse_kind(ref.substr(0, colon));
  std::string name = ref.substr(colon + 1);
  switch (kind) {
    case Kind::kPointedSet:
      if (name.size() > 1 && name[0] == 'P') {
        int n = parse_positive(name.substr(1));
        if (n >= 1) return pointed_set(n);
      }
      break;
    case Kind::kAbelianGroup:
    case Kind::kGroup: {
      if (kind == Kind::kGroup) {
        for (const auto& g : builtin_groups(kGroupCap))
          if (g->name() == name) return g;
        if (name.size() == 4 && name.starts_with("Sym")) {
          int n = parse_positive(name.substr(3));
          if (n >= 1 && n <= 5) return symmetric_group(n);
        }
      }
      if (name.size() > 1 && name[0] == 'Z') {
        std::vector<int> factors;
        for (const auto& part : split(name.substr(1), 'x')) {
          std::string digits = part.empty() || part[0] != 'Z' ? part : part.substr(1);
          int d = parse_positive(digits);
          if (d < 1) bad("unknown structure '" + ref + "'");
          factors.push_back(d);
        }
        long n = 1;
        for (int d : factors) n *= d;
        if (n > 1024) throw Error(ErrorCode::kBoundTooLarge, "structure '" + ref + "' is too large");
        return abelian_from_factors(factors, kind);
      }
      break;
    }
    case Kind::kUnitalMagma: {
      auto parts = split(name, '_');
      if (parts.size() == 2 && parts[0].size() > 1 && parts[0][0] == 'M') {
        int n = parse_positive(parts[0].substr(1));
        if (n >= 1 && n <= kMagmaCap)
          for (const auto& m : unital_magmas(n, true))
            if (m->name() == name) return m;
      }
      break;
    }
  }
  bad("unknown structure '" + ref + "'");
}

Scope::Scope(const Json& doc) {
  if (!doc.is_object() || !doc.contains("structures")) return;
  const auto& s = doc.at("structures");
  if (!s.is_object()) bad("'structures' must be an object");
  for (const auto& [name, value] : s.items()) named_[name] = resolve(value);
}

StructRef Scope::resolve(const Json& ref) const {
  if (ref.is_object()) return structure_from_json(ref);
  if (!ref.is_string()) bad("structure reference must be an object or a name");
  auto name = ref.get<std::string>();
  if (auto it = named_.find(name); it != named_.end()) return it->second;
  return builtin_structure(name);
}

Json to_json(const Structure& s) {
  Json j{{"kind", kind_name(s.kind())}, {"order", s.order()}};
  if (s.tabled()) j["table"] = rows(s.table(), static_cast<size_t>(s.order()));
  if (!s.name().empty()) j["name"] = s.name();
  return j;
}

StructRef structure_from_json(const Json& j) {
  if (j.is_string()) return builtin_structure(j.get<std::string>());
  Kind kind = parse_kind(field(j, "kind").is_string() ? j.at("kind").get<std::string>() : "");
  int n = as_int(field(j, "order"), "order");
  if (n < 1) throw Error(ErrorCode::kInvalidStructure, "order must be positive");
  if (n > 4096) throw Error(ErrorCode::kBoundTooLarge, "order exceeds 4096");
  std::string name = j.contains("name") && j.at("name").is_string() ? j.at("name").get<std::string>() : "";
  std::vector<int> table;
  if (has_table(kind)) {
    table = matrix(field(j, "table"), static_cast<size_t>(n), static_cast<size_t>(n), "table");
  } else if (j.contains("table") && !j.at("table").is_null()) {
    throw Error(ErrorCode::kInvalidStructure, "pointed sets carry no table");
  }
  return make_structure(kind, n, std::move(table), std::move(name));
}

Json to_json(const Morphism& f) {
  return Json{{"source", to_json(*f.source())}, {"target", to_json(*f.target())}, {"map", f.map()}};
}

Morphism morphism_from_json(const Json& j, const Scope& scope) {
  if (j.is_array()) bad("bare map without implied source and target");
  return Morphism(scope.resolve(field(j, "source")), scope.resolve(field(j, "target")),
                  int_list(field(j, "map"), "map"));
}

Morphism morphism_from_json(const Json& j, const StructRef& source, const StructRef& target, const Scope& scope) {
  if (j.is_array()) return Morphism(source, target, int_list(j, "map"));
  Morphism f = morphism_from_json(j, scope);
  if (!(*f.source() == *source) || !(*f.target() == *target))
    throw Error(ErrorCode::kInvalidDiagram, "morphism endpoints disagree with the enclosing document");
  return Morphism(source, target, f.map());
}

Json to_json(const SplitEpi& p) {
  return Json{{"A", to_json(*p.top())},
              {"B", to_json(*p.base())},
              {"X", to_json(*p.kernel_object())},
              {"alpha", p.alpha().map()},
              {"beta", p.beta().map()},
              {"k", p.k().map()}};
}

SplitEpi split_epi_from_json(const Json& j) {
  Scope scope(j);
  auto a = scope.resolve(field(j, "A"));
  auto b = scope.resolve(field(j, "B"));
  return SplitEpi(map_field(j, "alpha", a, b, scope), map_field(j, "beta", b, a, scope));
}

Json to_json(const GroupAction& a) {
  return Json{{"X", to_json(*a.x)}, {"B", to_json(*a.b)}, {"act", rows(a.act, static_cast<size_t>(a.x->order()))}};
}

GroupAction action_from_json(const Json& j) {
  Scope scope(j);
  return action_from_json(j, scope.resolve(field(j, "X")), scope.resolve(field(j, "B")));
}

GroupAction action_from_json(const Json& j, const StructRef& x, const StructRef& b) {
  return action_table(field(j, "act"), x, b);
}

Json to_json(const ReflexiveGraph& g) {
  return Json{{"C0", to_json(*g.c0())}, {"C1", to_json(*g.c1())},
              {"d", g.d.map()},         {"c", g.c.map()},
              {"e", g.e.map()}};
}

ReflexiveGraph graph_from_json(const Json& j) {
  Scope scope(j);
  auto c0 = scope.resolve(field(j, "C0"));
  auto c1 = scope.resolve(field(j, "C1"));
  return ReflexiveGraph{map_field(j, "d", c1, c0, scope), map_field(j, "c", c1, c0, scope),
                        map_field(j, "e", c0, c1, scope)};
}

Json to_json(const Precategory& p) {
  Json j = to_json(p.graph);
  j["C2"] = to_json(*p.c2());
  j["p1"] = p.p1.map();
  j["p2"] = p.p2.map();
  j["e1"] = p.e1.map();
  j["e2"] = p.e2.map();
  j["m"] = p.m.map();
  return j;
}

Precategory precategory_from_json(const Json& j) {
  Scope scope(j);
  auto c1 = scope.resolve(field(j, "C1"));
  auto c2 = scope.resolve(field(j, "C2"));
  return Precategory{graph_from_json(j),
                     map_field(j, "p1", c2, c1, scope),
                     map_field(j, "p2", c2, c1, scope),
                     map_field(j, "e1", c1, c2, scope),
                     map_field(j, "e2", c1, c2, scope),
                     map_field(j, "m", c2, c1, scope)};
}

Json to_json(const TwoChain& ch) {
  return Json{{"Z", to_json(*ch.z())}, {"X", to_json(*ch.x())}, {"B", to_json(*ch.base())},
              {"t", ch.t.map()},       {"h", ch.h.map()}};
}

TwoChain chain_from_json(const Json& j) {
  Scope scope(j);
  auto z = scope.resolve(field(j, "Z"));
  auto x = scope.resolve(field(j, "X"));
  auto b = scope.resolve(field(j, "B"));
  return TwoChain{map_field(j, "t", z, x, scope), map_field(j, "h", x, b, scope)};
}

Json to_json(const PreCrossedModule& p) {
  Json j = to_json(p.action);
  j["h"] = p.h.map();
  return j;
}

PreCrossedModule pxm_from_json(const Json& j) {
  Scope scope(j);
  auto x = scope.resolve(field(j, "X"));
  auto b = scope.resolve(field(j, "B"));
  PreCrossedModule p{action_table(field(j, "act"), x, b), map_field(j, "h", x, b, scope)};
  validate_pxm(p);
  return p;
}

Json to_json(const ChainCompData& d) {
  return Json{{"Z", to_json(*d.t.source())},
              {"X", to_json(*d.t.target())},
              {"B", to_json(*d.h.target())},
              {"t", d.t.map()},
              {"h", d.h.map()},
              {"xi_x", rows(d.xi_x.act, static_cast<size_t>(d.xi_x.x->order()))},
              {"xi_z", rows(d.xi_z.act, static_cast<size_t>(d.xi_z.x->order()))},
              {"xi_f", rows(d.xi_f.act, static_cast<size_t>(d.xi_f.x->order()))}};
}

ChainCompData chaincomp_from_json(const Json& j) {
  Scope scope(j);
  auto z = scope.resolve(field(j, "Z"));
  auto x = scope.resolve(field(j, "X"));
  auto b = scope.resolve(field(j, "B"));
  GroupAction xi_x = action_table(field(j, "xi_x"), x, b);
  GroupAction xi_z = action_table(field(j, "xi_z"), z, x);
  auto fxb = semidirect_product(xi_x).point.top();
  auto fzx = semidirect_product(xi_z).point.top();
  // xi_f validity is one of the reported conditions, so it is not validated here.
  GroupAction xi_f{fzx, fxb,
                   matrix(field(j, "xi_f"), static_cast<size_t>(fxb->order()), static_cast<size_t>(fzx->order()),
                          "xi_f")};
  return ChainCompData{map_field(j, "t", z, x, scope), map_field(j, "h", x, b, scope), xi_x, xi_z, xi_f};
}

Json to_json(const FiberedAction& f) {
  Json j{{"X", to_json(*f.x)}, {"B", to_json(*f.b)}, {"xi", rows(f.xi, static_cast<size_t>(f.b->order()))}};
  if (f.has_mu()) {
    j["Y"] = to_json(**f.y);
    j["alpha"] = f.alpha->map();
    j["beta"] = f.beta->map();
    Json mu = Json::array();
    size_t nb = static_cast<size_t>(f.b->order()), nx = static_cast<size_t>(f.x->order());
    for (size_t y = 0; y < static_cast<size_t>((*f.y)->order()); ++y) {
      Json by_b = Json::array();
      for (size_t b = 0; b < nb; ++b)
        by_b.push_back(std::vector<int>(f.mu.begin() + static_cast<long>((y * nb + b) * nx),
                                        f.mu.begin() + static_cast<long>((y * nb + b + 1) * nx)));
      mu.push_back(by_b);
    }
    j["mu"] = mu;
  }
  return j;
}

FiberedAction fibered_from_json(const Json& j) {
  Scope scope(j);
  FiberedAction f;
  f.x = scope.resolve(field(j, "X"));
  f.b = scope.resolve(field(j, "B"));
  size_t nx = static_cast<size_t>(f.x->order()), nb = static_cast<size_t>(f.b->order());
  f.xi = matrix(field(j, "xi"), nx, nb, "xi");
  if (j.contains("mu")) {
    auto y = j.contains("Y") ? scope.resolve(j.at("Y")) : f.x;
    f.y = y;
    f.alpha = j.contains("alpha") ? map_field(j, "alpha", y, f.x, scope) : identity(f.x);
    f.beta = j.contains("beta") ? map_field(j, "beta", f.x, y, scope) : identity(f.x);
    if (!(*f.alpha->source() == *y)) bad("alpha must start at Y");
    const auto& mu = j.at("mu");
    if (!mu.is_array() || mu.size() != static_cast<size_t>(y->order())) bad("mu must have |Y| blocks");
    for (const auto& block : mu) {
      auto m = matrix(block, nb, nx, "mu");
      f.mu.insert(f.mu.end(), m.begin(), m.end());
    }
  }
  return f;
}

Json to_json(const ConcreteCategory& c) {
  Json arrows = Json::array();
  for (int a = 0; a < c.arrows(); ++a)
    arrows.push_back(Json{{"label", a < static_cast<int>(c.labels.size()) ? c.labels[a] : std::to_string(a)},
                          {"dom", c.dom[a]},
                          {"cod", c.cod[a]}});
  Json j{{"objects", c.objects},
         {"arrows", arrows},
         {"identities", c.id},
         {"comp", rows(c.comp, static_cast<size_t>(std::max(c.arrows(), 1)))}};
  if (c.associative) j["associative"] = *c.associative;
  return j;
}

ConcreteCategory category_from_json(const Json& j) {
  ConcreteCategory c;
  c.objects = as_int(field(j, "objects"), "objects");
  if (c.objects < 0) bad("objects must be non-negative");
  const auto& arrows = field(j, "arrows");
  if (!arrows.is_array()) bad("arrows must be an array");
  for (const auto& a : arrows) {
    c.labels.push_back(a.contains("label") && a.at("label").is_string() ? a.at("label").get<std::string>()
                                                                        : std::to_string(c.labels.size()));
    int d = as_int(field(a, "dom"), "dom"), k = as_int(field(a, "cod"), "cod");
    if (d < 0 || d >= c.objects || k < 0 || k >= c.objects) bad("arrow endpoint out of range");
    c.dom.push_back(d);
    c.cod.push_back(k);
  }
  c.id = int_list(field(j, "identities"), "identities");
  if (c.id.size() != static_cast<size_t>(c.objects)) bad("one identity per object required");
  for (int i : c.id)
    if (i < 0 || i >= c.arrows()) bad("identity out of range");
  size_t n = static_cast<size_t>(c.arrows());
  c.comp = n == 0 ? std::vector<int>{} : matrix(field(j, "comp"), n, n, "comp");
  for (int v : c.comp)
    if (v < -1 || v >= c.arrows()) bad("composite out of range");
  if (j.contains("associative") && j.at("associative").is_boolean()) c.associative = j.at("associative").get<bool>();
  return c;
}

Json to_json(const A2Witness& w) {
  bool f_iso = w.f.bijective(), g_iso = w.g.bijective(), h_iso = w.h.bijective();
  std::string verdict = std::string(f_iso && g_iso && !h_iso ? "FAIL" : "PASS") +
                        ": split five lemma; f iso=" + (f_iso ? "yes" : "no") + ", g iso=" + (g_iso ? "yes" : "no") +
                        ", h iso=" + (h_iso ? "yes" : "no");
  return Json{{"type", "a2-witness"},
              {"structures",
               {{"A", to_json(*w.from.top())},
                {"B", to_json(*w.from.base())},
                {"K", to_json(*w.from.kernel_object())},
                {"A'", to_json(*w.to.top())},
                {"B'", to_json(*w.to.base())},
                {"K'", to_json(*w.to.kernel_object())}}},
              {"morphisms",
               {{"alpha", w.from.alpha().map()},
                {"beta", w.from.beta().map()},
                {"alpha'", w.to.alpha().map()},
                {"beta'", w.to.beta().map()},
                {"h", w.h.map()},
                {"f", w.f.map()},
                {"g", w.g.map()}}},
              {"verdict", verdict}};
}

A2Witness a2_witness_from_json(const Json& j) {
  Scope scope(j);
  const auto& s = field(j, "structures");
  const auto& m = field(j, "morphisms");
  auto a = scope.resolve(field(s, "A")), b = scope.resolve(field(s, "B"));
  auto a2 = scope.resolve(field(s, "A'")), b2 = scope.resolve(field(s, "B'"));
  SplitEpi from(map_field(m, "alpha", a, b, scope), map_field(m, "beta", b, a, scope));
  SplitEpi to(map_field(m, "alpha'", a2, b2, scope), map_field(m, "beta'", b2, a2, scope));
  if (s.contains("K") && !(*scope.resolve(s.at("K")) == *from.kernel_object()))
    throw Error(ErrorCode::kInvalidDiagram, "K is not the kernel of alpha");
  if (s.contains("K'") && !(*scope.resolve(s.at("K'")) == *to.kernel_object()))
    throw Error(ErrorCode::kInvalidDiagram, "K' is not the kernel of alpha'");
  Morphism h = map_field(m, "h", a, a2, scope);
  Morphism g = map_field(m, "g", b, b2, scope);
  PointMorphism pm(from, to, h, g);
  if (m.contains("f")) {
    Morphism f = map_field(m, "f", from.kernel_object(), to.kernel_object(), scope);
    if (!(f == pm.restricted())) throw Error(ErrorCode::kInvalidDiagram, "f is not the restriction of h");
  }
  return A2Witness{from, to, pm.restricted(), g, h};
}

Json to_json(const Verdict& v) {
  Json j{{"ok", v.ok}};
  if (!v.ok) {
    j["law"] = v.law;
    j["witness"] = v.witness;
  }
  return j;
}

Json to_json(const Corpus& c) {
  Json items = Json::array();
  for (const auto& s : c.items) items.push_back(to_json(*s));
  return Json{{"kind", kind_name(c.kind)}, {"max_size", c.max_size}, {"provenance", c.provenance}, {"items", items}};
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot read '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    bad("'" + path + "': " + e.what());
  }
}

}  // namespace icat
