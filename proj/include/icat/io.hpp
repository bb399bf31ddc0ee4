#pragma once

#include <map>
#include <string>

#include "json.hpp"

#include "icat/actions.hpp"
#include "icat/additive.hpp"
#include "icat/corpus.hpp"
#include "icat/points.hpp"
#include "icat/ptset_models.hpp"

namespace icat {

using Json = nlohmann::json;

/// Resolves structure references inside a document. A reference is either
/// an inline structure object, a key of the document's "structures" map,
/// or "<kind>:<name>" naming a built-in corpus member (e.g. "group:S3",
/// "pointed-set:P3", "abelian-group:Z2xZ2"). "group:Sym<n>" is the
/// symmetric group with permutations in lexicographic order.
class Scope {
 public:
  Scope() = default;
  explicit Scope(const Json& doc);
  StructRef resolve(const Json& ref) const;

 private:
  std::map<std::string, StructRef> named_;
};

StructRef builtin_structure(const std::string& ref);

/// {"kind", "order", "table": [[int]] (omitted for pointed sets), "name"}.
Json to_json(const Structure& s);
StructRef structure_from_json(const Json& j);

/// {"source", "target", "map"}. A bare array is accepted where the
/// source and target are implied by the enclosing document.
Json to_json(const Morphism& f);
Morphism morphism_from_json(const Json& j, const Scope& scope = {});
Morphism morphism_from_json(const Json& j, const StructRef& source, const StructRef& target,
                            const Scope& scope = {});

/// {"A", "B", "alpha", "beta"}; output adds "X" and "k".
Json to_json(const SplitEpi& p);
SplitEpi split_epi_from_json(const Json& j);

/// {"X", "B", "act": [[int]]} with rows indexed by b.
Json to_json(const GroupAction& a);
GroupAction action_from_json(const Json& j);
GroupAction action_from_json(const Json& j, const StructRef& x, const StructRef& b);

/// {"C0", "C1", "d", "c", "e"}.
Json to_json(const ReflexiveGraph& g);
ReflexiveGraph graph_from_json(const Json& j);
/// {"C0", "C1", "C2", "d", "c", "e", "p1", "p2", "e1", "e2", "m"}.
Json to_json(const Precategory& p);
Precategory precategory_from_json(const Json& j);

/// {"Z", "X", "B", "t", "h"}.
Json to_json(const TwoChain& ch);
TwoChain chain_from_json(const Json& j);

/// {"X", "B", "act", "h"}.
Json to_json(const PreCrossedModule& p);
PreCrossedModule pxm_from_json(const Json& j);

/// {"Z", "X", "B", "t", "h", "xi_x", "xi_z", "xi_f"}; the three actions are
/// tables only, their objects follow from Z, X, B.
Json to_json(const ChainCompData& d);
ChainCompData chaincomp_from_json(const Json& j);

/// {"X", "B", "xi": [[int]] (rows x)}, optionally "Y", "alpha", "beta",
/// "mu": [[[int]]] indexed [y][b][x].
Json to_json(const FiberedAction& f);
FiberedAction fibered_from_json(const Json& j);

/// {"objects", "arrows": [{"label", "dom", "cod"}], "identities",
/// "comp": [[int]] (rows g, columns f, -1 undefined), "associative"}.
Json to_json(const ConcreteCategory& c);
ConcreteCategory category_from_json(const Json& j);

/// The six structures and seven maps of an (A2) diagram plus a verdict.
Json to_json(const A2Witness& w);
A2Witness a2_witness_from_json(const Json& j);

Json to_json(const Verdict& v);
Json to_json(const Corpus& c);

/// Reads a file into a document; throws kBadInput on I/O or parse errors.
Json load_json(const std::string& path);

}  // namespace icat
