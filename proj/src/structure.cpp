#include "icat/structure.hpp"

#include <sstream>

namespace icat {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kBadInput: return "BadInput";
    case ErrorCode::kKindMismatch: return "KindMismatch";
    case ErrorCode::kInvalidStructure: return "InvalidStructure";
    case ErrorCode::kInvalidMorphism: return "InvalidMorphism";
    case ErrorCode::kNotSplit: return "NotSplit";
    case ErrorCode::kUnsupportedCoproduct: return "UnsupportedCoproduct";
    case ErrorCode::kUnsupportedConstruction: return "UnsupportedConstruction";
    case ErrorCode::kFactorizationFailure: return "FactorizationFailure";
    case ErrorCode::kChainConditionViolated: return "ChainConditionViolated";
    case ErrorCode::kKernelNotTrivial: return "KernelNotTrivial";
    case ErrorCode::kLawViolation: return "LawViolation";
    case ErrorCode::kInvalidAction: return "InvalidAction";
    case ErrorCode::kInvalidDiagram: return "InvalidDiagram";
    case ErrorCode::kComparisonNotIso: return "ComparisonNotIso";
    case ErrorCode::kTriangleLawViolated: return "TriangleLawViolated";
    case ErrorCode::kRightCancellationViolated: return "RightCancellationViolated";
    case ErrorCode::kBoundTooLarge: return "BoundTooLarge";
  }
  return "Unknown";
}

std::string_view kind_name(Kind kind) {
  switch (kind) {
    case Kind::kPointedSet: return "pointed-set";
    case Kind::kAbelianGroup: return "abelian-group";
    case Kind::kGroup: return "group";
    case Kind::kUnitalMagma: return "unital-magma";
  }
  return "?";
}

Kind parse_kind(std::string_view name) {
  if (name == "pointed-set") return Kind::kPointedSet;
  if (name == "abelian-group") return Kind::kAbelianGroup;
  if (name == "group") return Kind::kGroup;
  if (name == "unital-magma") return Kind::kUnitalMagma;
  throw Error(ErrorCode::kBadInput, "unknown kind '" + std::string(name) + "'");
}

bool same_family(Kind a, Kind b) { return has_table(a) == has_table(b); }

std::optional<std::string> check_structure_laws(Kind kind, int n, const std::vector<int>& t) {
  if (n < 1) return "order must be positive";
  if (!has_table(kind)) {
    if (!t.empty()) return "pointed sets carry no table";
    return std::nullopt;
  }
  if (t.size() != static_cast<size_t>(n) * n) return "table must be n x n";
  auto at = [&](int a, int b) { return t[static_cast<size_t>(a) * n + b]; };
  for (int v : t)
    if (v < 0 || v >= n) return "table entry out of range";
  for (int x = 0; x < n; ++x)
    if (at(0, x) != x || at(x, 0) != x) {
      std::ostringstream os;
      os << "0 is not a two-sided identity at " << x;
      return os.str();
    }
  if (kind == Kind::kUnitalMagma) {
    for (int col = 0; col < n; ++col) {
      std::vector<char> seen(n, 0);
      for (int row = 0; row < n; ++row) {
        if (seen[at(row, col)]) {
          std::ostringstream os;
          os << "right cancellation fails in column " << col;
          return os.str();
        }
        seen[at(row, col)] = 1;
      }
    }
    return std::nullopt;
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (at(at(a, b), c) != at(a, at(b, c))) {
          std::ostringstream os;
          os << "associativity fails at (" << a << "," << b << "," << c << ")";
          return os.str();
        }
  for (int a = 0; a < n; ++a) {
    bool found = false;
    for (int b = 0; b < n && !found; ++b) found = at(a, b) == 0 && at(b, a) == 0;
    if (!found) return "element " + std::to_string(a) + " has no inverse";
  }
  if (kind == Kind::kAbelianGroup)
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (at(a, b) != at(b, a)) return "table is not commutative";
  return std::nullopt;
}

Structure::Structure(Kind kind, int order, std::vector<int> table, std::string name)
    : kind_(kind), order_(order), table_(std::move(table)), name_(std::move(name)) {
  if (auto err = check_structure_laws(kind_, order_, table_))
    throw Error(ErrorCode::kInvalidStructure,
                std::string(kind_name(kind_)) + ": " + *err);
}

Structure::Structure(Trusted, Kind kind, int order, std::vector<int> table, std::string name)
    : kind_(kind), order_(order), table_(std::move(table)), name_(std::move(name)) {}

int Structure::inverse(int a) const {
  for (int b = 0; b < order_; ++b)
    if (op(a, b) == 0 && op(b, a) == 0) return b;
  throw Error(ErrorCode::kInvalidStructure, "element has no inverse");
}

bool Structure::commutative() const {
  for (int a = 0; a < order_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (op(a, b) != op(b, a)) return false;
  return true;
}

StructRef make_structure(Kind kind, int order, std::vector<int> table, std::string name) {
  return std::make_shared<const Structure>(kind, order, std::move(table), std::move(name));
}

StructRef make_trusted(Kind kind, int order, std::vector<int> table, std::string name) {
  return std::make_shared<const Structure>(Structure::Trusted{}, kind, order, std::move(table),
                                           std::move(name));
}

StructRef pointed_set(int n) {
  if (n < 1) throw Error(ErrorCode::kBadInput, "pointed set needs at least the basepoint");
  return make_trusted(Kind::kPointedSet, n, {}, "P" + std::to_string(n));
}

StructRef cyclic(int n, Kind kind) {
  if (n < 1) throw Error(ErrorCode::kBadInput, "cyclic group order must be positive");
  if (kind == Kind::kPointedSet) throw Error(ErrorCode::kKindMismatch, "cyclic group of pointed-set kind");
  std::vector<int> t(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[static_cast<size_t>(a) * n + b] = (a + b) % n;
  return make_trusted(kind, n, std::move(t), "Z" + std::to_string(n));
}

StructRef retag(const StructRef& s, Kind kind) {
  if (s->kind() == kind) return s;
  if (!same_family(s->kind(), kind))
    throw Error(ErrorCode::kKindMismatch, "cannot retag across pointed/tabled families");
  return make_structure(kind, s->order(), s->table(), s->name());
}

std::optional<std::string> check_morphism_laws(const Structure& s, const Structure& t,
                                               const std::vector<int>& m) {
  if (!same_family(s.kind(), t.kind())) return "kind mismatch between source and target";
  if (m.size() != static_cast<size_t>(s.order())) return "map length differs from source order";
  for (int v : m)
    if (v < 0 || v >= t.order()) return "map value out of range";
  if (m[0] != 0) return "distinguished element not preserved";
  if (s.tabled())
    for (int a = 0; a < s.order(); ++a)
      for (int b = 0; b < s.order(); ++b)
        if (m[s.op(a, b)] != t.op(m[a], m[b])) {
          std::ostringstream os;
          os << "operation not preserved at (" << a << "," << b << ")";
          return os.str();
        }
  return std::nullopt;
}

Morphism::Morphism(StructRef source, StructRef target, std::vector<int> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  if (auto err = check_morphism_laws(*source_, *target_, map_))
    throw Error(ErrorCode::kInvalidMorphism, *err);
}

Morphism::Morphism(Trusted, StructRef source, StructRef target, std::vector<int> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {}

bool Morphism::injective() const {
  std::vector<char> seen(target_->order(), 0);
  for (int v : map_) {
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

bool Morphism::surjective() const {
  std::vector<char> seen(target_->order(), 0);
  int hit = 0;
  for (int v : map_)
    if (!seen[v]) {
      seen[v] = 1;
      ++hit;
    }
  return hit == target_->order();
}

bool Morphism::is_zero() const {
  for (int v : map_)
    if (v != 0) return false;
  return true;
}

Morphism identity(const StructRef& x) {
  std::vector<int> m(x->order());
  for (int i = 0; i < x->order(); ++i) m[i] = i;
  return Morphism(Morphism::Trusted{}, x, x, std::move(m));
}

Morphism zero_morphism(const StructRef& x, const StructRef& y) {
  if (!same_family(x->kind(), y->kind()))
    throw Error(ErrorCode::kKindMismatch, "zero morphism between incompatible kinds");
  return Morphism(Morphism::Trusted{}, x, y, std::vector<int>(x->order(), 0));
}

Morphism compose(const Morphism& g, const Morphism& f) {
  if (!(*f.target() == *g.source()))
    throw Error(ErrorCode::kInvalidMorphism, "compose: codomain/domain mismatch");
  std::vector<int> m(f.map().size());
  for (size_t i = 0; i < m.size(); ++i) m[i] = g(f(static_cast<int>(i)));
  return Morphism(Morphism::Trusted{}, f.source(), g.target(), std::move(m));
}

Morphism inverse(const Morphism& f) {
  if (!f.bijective()) throw Error(ErrorCode::kInvalidMorphism, "inverse of a non-bijective morphism");
  std::vector<int> m(f.map().size());
  for (size_t i = 0; i < m.size(); ++i) m[f(static_cast<int>(i))] = static_cast<int>(i);
  return Morphism(Morphism::Trusted{}, f.target(), f.source(), std::move(m));
}

}  // namespace icat
