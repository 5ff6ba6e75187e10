#pragma once

#include <optional>
#include <string>
#include <vector>

#include "covlab/cohomology.hpp"
#include "covlab/covariance.hpp"
#include "covlab/multiplet.hpp"

namespace covlab::covering {

using cohomology::Cochain2;
using cohomology::Coefficients;
using fingroup::Elem;
using fingroup::GroupTable;

/// A surjection pi: S -> L with central kernel K.
struct CentralCover {
  GroupTable S;
  GroupTable L;
  std::vector<Elem> pi;
  fingroup::Subgroup K;  // kernel as a subgroup of S; K.embedding is sorted
  std::shared_ptr<const Coefficients> K_coefficients;
  std::string name;
};

/// Throws PreconditionFailed (not a homomorphism, witness (x, y); not
/// surjective, witness l) or NotCentral (witness (k, s)).
CentralCover make_cover(const GroupTable& s, const GroupTable& l, const std::vector<Elem>& pi, std::string name = {});

/// lift[l] is an S-element over l, with lift[1] = 1.
struct Section {
  std::vector<Elem> lift;
};

/// Violations: Shape, NotNormalized, NotASection (witness l).
Verdict validate_section(const CentralCover& c, const Section& s);

/// Every normalized section, in lexicographic order of lift.
std::vector<Section> all_sections(const CentralCover& c, const Limits& limits = {});

/// z(l', l) = S_{l'} S_l S_{l' l}^-1 as a cochain over (L, K) with phi trivial,
/// K indexed by position in K.embedding. Throws SectionInvalid; asserts the
/// result is a normalized cocycle.
Cochain2 z_cocycle(const CentralCover& c, const Section& s);

/// Homomorphism law and centrality of zeta: K -> A, zeta indexed like
/// K.embedding. Violations: Shape, NotHomomorphism (witness k1, k2),
/// NotCentral (witness k, a).
Verdict check_centre_hom(const CentralCover& c, const GroupTable& a, const std::vector<Elem>& zeta);

/// (zeta o z, 1) over (L, A). Throws NotCentral or PreconditionFailed when
/// check_centre_hom fails; asserts the result is a cocycle.
Cochain2 induced_gauge_cocycle(const CentralCover& c, const Section& s, std::shared_ptr<const Coefficients> a,
                               const std::vector<Elem>& zeta);

/// zeta(k) = eta(k) for k in K, as gauge-group elements. Requires the model's
/// acting group to be c.S. Throws NotInGaugeGroup when eta(k) is not a
/// natural automorphism.
std::vector<Elem> restrict_to_kernel(const CentralCover& c, const covariance::CovarianceModel& m,
                                     const covariance::Implementation& impl, const covariance::GaugeGroup& gauge);

struct SpinVerdict {
  bool descends = false;
  std::optional<multiplet::MatrixRep> descended;  // l -> rep(lift(l))
  std::optional<Elem> obstruction;                // first k in K (as an S-element) with rep(k) != 1
  bool zeta_trivial = false;
  bool induced_cocycle_trivial = false;  // cohomologous to (1, id)
  /// zeta trivial on K but the rep does not descend.
  bool inconsistent = false;
};

/// Requires a valid rep of c.S and a valid section (PreconditionFailed).
SpinVerdict spin_obstruction(const CentralCover& c, const Section& s, std::shared_ptr<const Coefficients> a,
                             const std::vector<Elem>& zeta, const multiplet::MatrixRep& rep,
                             const Limits& limits = {});

/// (A x S) / <(zeta(k), k) : k in K>, for zeta a central homomorphism K -> A.
struct SpinQuotient {
  GroupTable product;  // (a, s) -> a * |S| + s
  std::vector<Elem> identified;
  fingroup::Quotient quotient;
};
SpinQuotient spin_quotient(const CentralCover& c, const GroupTable& a, const std::vector<Elem>& zeta);

// Shipped covers.
/// Z_m -> Z_n, x -> x mod n; requires n | m.
CentralCover cyclic_cover(int m, int n);
/// Q8 -> Z2xZ2 with kernel {1, -1}: i -> (1,0), j -> (0,1), k -> (1,1).
CentralCover q8_cover();
/// K x L -> L.
CentralCover split_cover(const GroupTable& k, const GroupTable& l);

/// The homomorphic section l -> (1, l) of a split cover.
Section split_section(const CentralCover& c);

/// Two-dimensional irreducible of Q8: i -> diag(i, -i), j -> [[0, 1], [-1, 0]].
multiplet::MatrixRep q8_spinor();
/// One-dimensional rep of Q8 with i -> si, j -> sj.
multiplet::MatrixRep q8_character(int si, int sj);

std::vector<std::string> cover_names();
/// "Q8->Z2xZ2", "Z<m>->Z<n>", "split:<K>x<L>".
std::optional<CentralCover> named_cover(const std::string& name);

}  // namespace covlab::covering
