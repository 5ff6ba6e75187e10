#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "covlab/cohomology.hpp"

namespace covlab::extension {

using cohomology::Cochain2;
using cohomology::TwistMap;
using fingroup::Elem;
using fingroup::GroupHom;
using fingroup::GroupTable;

/// The group on A x G with product (a', g')(a, g) = (a' phi(g')(a) xi(g', g), g' g).
/// The pair (a, g) has index a * |G| + g, so (1, 1) is index 0.
struct ExtensionGroup {
  GroupTable E;
  GroupHom inclusion;   // A -> E, a -> (a, 1)
  GroupHom projection;  // E -> G, (a, g) -> g
  Cochain2 cocycle;

  Elem encode(Elem a, Elem g) const { return a * cocycle.G.order() + g; }
  std::pair<Elem, Elem> decode(Elem e) const { return {e / cocycle.G.order(), e % cocycle.G.order()}; }
};

/// Requires a normalized cocycle. Throws InvalidCocycle (with the failing
/// associativity triple as witness when the product law is not associative).
ExtensionGroup build_extension(const Cochain2& c);

enum class ExtensionType { DirectProduct, Semidirect, Central, General };
const char* to_string(ExtensionType t);

struct TypeReport {
  std::vector<ExtensionType> labels;  // in priority order
  ExtensionType preferred = ExtensionType::General;
  std::optional<TwistMap> direct_witness;     // carries the cocycle to (1, id)
  std::optional<Cochain2> neutral_partner;    // a neutral (1, phi') it is cohomologous to
  std::optional<TwistMap> semidirect_witness;
};

TypeReport classify_type(const ExtensionGroup& e, const Limits& limits = {});

/// Searches isomorphisms E1 -> E2 commuting with inclusions and projections,
/// i.e. maps (a, g) -> (a zeta(g), g), in lexicographic order of zeta. Returns
/// the element map of the first one found.
std::optional<std::vector<Elem>> extensions_equivalent(const ExtensionGroup& e1, const ExtensionGroup& e2,
                                                       const Limits& limits = {});

}  // namespace covlab::extension
