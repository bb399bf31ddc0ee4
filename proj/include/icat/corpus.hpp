#pragma once

#include <string>
#include <vector>

#include "icat/structure.hpp"

namespace icat {

/// Hard caps for `enumerate`; larger bounds raise kBoundTooLarge.
inline constexpr int kPointedSetCap = 16;
inline constexpr int kAbelianCap = 64;
inline constexpr int kGroupCap = 12;
inline constexpr int kMagmaCap = 5;

struct Corpus {
  Kind kind;
  int max_size;
  std::vector<StructRef> items;
  std::string provenance;
};

/// Deterministic, isomorphism-free list of structures up to `max_size`.
/// Groups come from the built-in list, magmas from a Latin-square search.
Corpus enumerate(Kind kind, int max_size);

/// Z_{d1} x ... x Z_{dk}; element (a1..ak) stored at mixed-radix index
/// with the first factor most significant.
StructRef abelian_from_factors(const std::vector<int>& factors, Kind kind = Kind::kAbelianGroup);
/// Invariant-factor lists d1 | d2 | ... | dk with product n.
std::vector<std::vector<int>> invariant_factor_lists(int n);

StructRef dihedral(int n);  // order 2n; dihedral(3) is S3
StructRef quaternion8();
StructRef alternating4();
StructRef dicyclic12();
StructRef symmetric3();
/// S_n on {0..n-1}, elements in lexicographic order of their images
/// (identity first); p q acts as p after q.
StructRef symmetric_group(int n);
std::vector<std::vector<int>> sorted_permutations(int n);

/// Every group of order <= 12, one per isomorphism class, in the order
/// Z1, Z2, Z3, Z4, Z2xZ2, Z5, Z6, S3, ...; all of kind kGroup.
std::vector<StructRef> builtin_groups(int max_order);

/// Table-search oracle: all groups of order n up to isomorphism, found by
/// backtracking over Cayley tables. Practical for n <= 7.
std::vector<StructRef> search_groups(int n);

/// Unital magmas of size n up to isomorphism, optionally restricted to
/// those with right cancellation.
std::vector<StructRef> unital_magmas(int n, bool right_cancellative);

/// Lexicographically least relabelled table over permutations fixing 0.
std::vector<int> canonical_table(int n, const std::vector<int>& table);

}  // namespace icat
