#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace icat {

/// Error categories surfaced by every constructor and construction.
/// The C API maps these one-to-one onto its status codes.
enum class ErrorCode {
  kBadInput = 1,
  kKindMismatch,
  kInvalidStructure,
  kInvalidMorphism,
  kNotSplit,
  kUnsupportedCoproduct,
  kUnsupportedConstruction,
  kFactorizationFailure,
  kChainConditionViolated,
  kKernelNotTrivial,
  kLawViolation,
  kInvalidAction,
  kInvalidDiagram,
  kComparisonNotIso,
  kTriangleLawViolated,
  kRightCancellationViolated,
  kBoundTooLarge,
};

std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Ambient category an object lives in. Group-kind objects are always
/// treated as objects of Grp even when commutative, so the coproduct of
/// two such objects is a free product (unsupported), never a biproduct.
enum class Kind { kPointedSet, kAbelianGroup, kGroup, kUnitalMagma };

std::string_view kind_name(Kind kind);
Kind parse_kind(std::string_view name);

inline bool has_table(Kind kind) { return kind != Kind::kPointedSet; }

/// Finite carrier {0..n-1} with distinguished element 0 and, for every
/// kind except pointed sets, a row-major binary operation table.
class Structure {
 public:
  struct Trusted {};

  /// Validates the table against the laws of `kind`.
  Structure(Kind kind, int order, std::vector<int> table, std::string name = {});
  /// Skips validation; for constructions whose output is lawful by design.
  Structure(Trusted, Kind kind, int order, std::vector<int> table, std::string name = {});

  Kind kind() const noexcept { return kind_; }
  int order() const noexcept { return order_; }
  const std::vector<int>& table() const noexcept { return table_; }
  const std::string& name() const noexcept { return name_; }
  bool tabled() const noexcept { return has_table(kind_); }

  int op(int a, int b) const { return table_[static_cast<size_t>(a) * order_ + b]; }
  /// Two-sided inverse; only meaningful for group kinds.
  int inverse(int a) const;
  bool commutative() const;

  bool operator==(const Structure& other) const {
    return kind_ == other.kind_ && order_ == other.order_ && table_ == other.table_;
  }

 private:
  Kind kind_;
  int order_;
  std::vector<int> table_;
  std::string name_;
};

using StructRef = std::shared_ptr<const Structure>;

StructRef make_structure(Kind kind, int order, std::vector<int> table, std::string name = {});
StructRef make_trusted(Kind kind, int order, std::vector<int> table, std::string name = {});

StructRef pointed_set(int n);
/// Z_n, as abelian group or (with kind = kGroup) as an object of Grp.
StructRef cyclic(int n, Kind kind = Kind::kAbelianGroup);
/// Same carrier and table, relabelled into another ambient kind.
StructRef retag(const StructRef& s, Kind kind);

/// Laws of the structure's kind; returns the first violated law, if any.
std::optional<std::string> check_structure_laws(Kind kind, int order, const std::vector<int>& table);

bool same_family(Kind a, Kind b);

/// Total map between two structures preserving 0 and the operation.
class Morphism {
 public:
  struct Trusted {};

  Morphism(StructRef source, StructRef target, std::vector<int> map);
  Morphism(Trusted, StructRef source, StructRef target, std::vector<int> map);

  const StructRef& source() const noexcept { return source_; }
  const StructRef& target() const noexcept { return target_; }
  const std::vector<int>& map() const noexcept { return map_; }
  int operator()(int x) const { return map_[static_cast<size_t>(x)]; }

  bool injective() const;
  bool surjective() const;
  bool bijective() const { return injective() && surjective(); }
  bool is_zero() const;

  bool operator==(const Morphism& other) const {
    return map_ == other.map_ && *source_ == *other.source_ && *target_ == *other.target_;
  }

 private:
  StructRef source_;
  StructRef target_;
  std::vector<int> map_;
};

std::optional<std::string> check_morphism_laws(const Structure& source, const Structure& target,
                                               const std::vector<int>& map);

Morphism identity(const StructRef& x);
Morphism zero_morphism(const StructRef& x, const StructRef& y);
/// g after f.
Morphism compose(const Morphism& g, const Morphism& f);
/// Inverse of a bijective morphism.
Morphism inverse(const Morphism& f);

}  // namespace icat
