#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "covlab/fingroup.hpp"

namespace covlab::cohomology {

using fingroup::Elem;
using fingroup::GroupTable;

/// A coefficient group together with its realized automorphisms. Cochains
/// refer to automorphisms by index into `aut.perms`.
struct Coefficients {
  GroupTable group;
  fingroup::AutGroup aut;
};

std::shared_ptr<const Coefficients> make_coefficients(const GroupTable& a, const Limits& limits = {});

/// A 2-cochain (xi, phi) of G with coefficients in A.
/// xi is stored row-major: xi[g1 * |G| + g] = xi(g1, g).
struct Cochain2 {
  GroupTable G;
  std::shared_ptr<const Coefficients> A;
  std::vector<Elem> xi;
  std::vector<int> phi;

  Elem xi_at(Elem g1, Elem g) const { return xi[static_cast<std::size_t>(g1 * G.order() + g)]; }
  const fingroup::Perm& phi_at(Elem g) const { return A->aut.perms[static_cast<std::size_t>(phi[static_cast<std::size_t>(g)])]; }
  const GroupTable& coeff() const { return A->group; }

  bool is_normalized() const;

  friend bool operator==(const Cochain2& a, const Cochain2& b) {
    return a.G == b.G && a.A->group == b.A->group && a.xi == b.xi && a.phi == b.phi;
  }
};

/// The map zeta: G -> A of a coboundary twist.
struct TwistMap {
  std::vector<Elem> zeta;
  friend bool operator==(const TwistMap&, const TwistMap&) = default;
};

/// (1, id): xi identically 1 and phi identically the identity automorphism.
Cochain2 trivial_cochain(const GroupTable& g, std::shared_ptr<const Coefficients> a);

struct CocycleReport {
  bool valid = true;
  bool normalized = false;
  /// First pair (g1, g) where phi(g1)phi(g)phi(g1 g)^-1 != ad(xi(g1, g)).
  std::optional<std::pair<Elem, Elem>> phi_witness;
  /// First triple (g2, g1, g) violating the xi-condition.
  std::optional<std::array<Elem, 3>> xi_witness;
  std::string detail;
};

/// Checks both cocycle conditions exhaustively. With require_normalized, an
/// unnormalized cochain is reported invalid.
CocycleReport validate_cocycle(const Cochain2& c, bool require_normalized = false);

/// True iff xi == 1. Throws PreconditionFailed when xi == 1 but phi is not a
/// homomorphism (such a cochain cannot be a cocycle).
bool is_neutral(const Cochain2& c);

/// phi~(g) = ad(zeta(g)) o phi(g),
/// xi~(g1, g) = zeta(g1) phi(g1)(zeta(g)) xi(g1, g) zeta(g1 g)^-1.
Cochain2 coboundary_twist(const Cochain2& c, const TwistMap& t);

/// Searches all twist maps in lexicographic order for one carrying c1 to c2.
/// When both cochains are normalized only zeta(1) = 1 is admissible.
/// Throws SearchSpaceTooLarge when |A|^|G| exceeds limits.search_cap.
std::optional<TwistMap> cohomologous(const Cochain2& c1, const Cochain2& c2, const Limits& limits = {});

/// Pointwise product zeta2 * zeta1; twisting by it equals twisting by zeta1
/// then by zeta2.
TwistMap compose_twists(const GroupTable& a, const TwistMap& second, const TwistMap& first);

/// Every normalized cocycle of (G, A), in lexicographic (xi, phi) order.
std::vector<Cochain2> enumerate_normalized_cocycles(const GroupTable& g, std::shared_ptr<const Coefficients> a,
                                                    const Limits& limits = {});

struct H2Class {
  Cochain2 representative;  // lexicographically least (xi, then phi) member
  std::size_t size = 0;
  bool distinguished = false;  // class of (1, id)
};

/// Partition of the normalized cocycles into cohomology classes, ordered by
/// representative. The result is a pointed set; no group law is implied.
std::vector<H2Class> classify_h2(const GroupTable& g, const GroupTable& a, const Limits& limits = {});
std::vector<H2Class> classify_h2(const GroupTable& g, std::shared_ptr<const Coefficients> a,
                                 const Limits& limits = {});

/// Lexicographic order on (xi, phi); the tie-break for class representatives.
bool lex_less(const Cochain2& a, const Cochain2& b);

}  // namespace covlab::cohomology
