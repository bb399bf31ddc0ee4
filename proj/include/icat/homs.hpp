#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "icat/structure.hpp"

namespace icat {

/// Constraints for morphism enumeration. Every assignment x -> y made
/// during the search (chosen or propagated) must satisfy `allow`.
struct HomSearch {
  std::function<bool(int, int)> allow;
  bool injective = false;
  /// Optional partial map; -1 marks a free element.
  std::vector<int> fixed;
};

/// Visits every morphism X -> Y satisfying the constraints, in
/// lexicographic order of generator images. Returning false from
/// `visit` stops the search. Returns the number of morphisms visited.
size_t for_each_morphism(const StructRef& x, const StructRef& y, const HomSearch& opts,
                         const std::function<bool(const std::vector<int>&)>& visit);

std::vector<Morphism> all_morphisms(const StructRef& x, const StructRef& y,
                                    const HomSearch& opts = {});
size_t count_morphisms(const StructRef& x, const StructRef& y, const HomSearch& opts = {});

/// Submagma generated by `seeds` together with 0 (for pointed sets: the
/// seeds and 0). Returned as a membership mask.
std::vector<char> generated(const Structure& s, const std::vector<int>& seeds);
/// Greedy generating sequence in element order.
std::vector<int> generating_set(const Structure& s);

/// Power-orbit signature of an element: length of the sequence
/// x, x*x, (x*x)*x, ... before it repeats, and whether it hits 0.
std::vector<int> element_signatures(const Structure& s);

/// Bijective morphism with structure-preserving inverse, or nullopt.
/// The identity is tried first when X and Y coincide.
std::optional<Morphism> find_isomorphism(const StructRef& x, const StructRef& y);
std::vector<Morphism> automorphisms(const StructRef& x);

}  // namespace icat
