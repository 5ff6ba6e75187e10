#pragma once

#include <optional>
#include <string>
#include <vector>

#include "covlab/cohomology.hpp"
#include "covlab/extension.hpp"
#include "covlab/linalg.hpp"
#include "covlab/wick.hpp"

namespace covlab::multiplet {

using cohomology::Cochain2;
using fingroup::Elem;
using fingroup::GroupTable;
using linalg::Matrix;
using linalg::Scalar;

/// A representation of a finite group by exact Gaussian-rational matrices,
/// one per group element.
struct MatrixRep {
  GroupTable group;
  int dim = 0;
  std::vector<Matrix> matrices;

  const Matrix& operator()(Elem g) const { return matrices[static_cast<std::size_t>(g)]; }
};

/// Violations: Shape, NotIdentity, NotInvertible (witness g),
/// NotMultiplicative (witness g, h).
Verdict verify_rep(const MatrixRep& r);

/// Extends generator images to the whole group by walking the Cayley graph.
/// Throws PreconditionFailed when the generators do not generate or the
/// images do not define a homomorphism.
MatrixRep rep_from_generators(const GroupTable& g, const std::vector<Elem>& gens, const std::vector<Matrix>& images);

MatrixRep trivial_rep(const GroupTable& g, int dim = 1);
MatrixRep direct_sum(const MatrixRep& a, const MatrixRep& b);
/// g -> s r(g) s^-1. Throws PreconditionFailed when s is singular.
MatrixRep conjugate_by(const MatrixRep& r, const Matrix& s);

/// Field-space data for a covariance with cocycle (xi, phi) over (G, A):
/// dot is a representation of the coefficient group A ("a . Phi") and star(g)
/// is the matrix of "g * Phi".
struct FieldSpaceAction {
  Cochain2 cocycle;
  MatrixRep dot;
  std::vector<Matrix> star;
};

/// Checks, exhaustively and exactly:
///   DotNotRep         dot is a representation of A;
///   StarNotCovariant  star(g) dot(a) = dot(phi(g)(a)) star(g)        witness (g, a);
///   StarProductLaw    star(g1) star(g) = dot(xi(g1, g)) star(g1 g)    witness (g1, g).
/// Other violations: Shape, StarNotInvertible (witness g).
Verdict verify_field_action(const FieldSpaceAction& a);

/// rho(a, g) = dot(a) star(g) as a representation of the extension. Throws
/// PreconditionFailed when the action fails verification or the extension was
/// built from a different cocycle.
MatrixRep build_rho(const FieldSpaceAction& a, const extension::ExtensionGroup& e);

/// Basis of {R : R r1(g) = r2(g) R for all g}; R is dim2 x dim1. The basis is
/// the null-space basis of the stacked system with unknown R(i, k) at index
/// i * dim1 + k.
std::vector<Matrix> intertwiners(const MatrixRep& r1, const MatrixRep& r2);

/// An invertible intertwiner r1 -> r2 if one exists. Random combinations of
/// the intertwiner basis are tried first; otherwise every combination with
/// coefficients in {0..dim} is tried, which decides the question because the
/// determinant is a polynomial of degree dim in the coefficients. Throws
/// SearchSpaceTooLarge when that grid exceeds limits.search_cap.
std::optional<Matrix> equivalence_witness(const MatrixRep& r1, const MatrixRep& r2, const Limits& limits = {});
bool equivalent(const MatrixRep& r1, const MatrixRep& r2, const Limits& limits = {});

/// True iff the commutant is one-dimensional, i.e. r is absolutely
/// irreducible. This implies irreducibility over the rationals as well.
bool certified_irreducible(const MatrixRep& r);

MatrixRep conjugate_rep(const MatrixRep& r);
bool is_self_conjugate(const MatrixRep& r, const Limits& limits = {});

/// A sub-multiplet of a field space of dimension D: iota is D x d, pi is d x D.
struct Submultiplet {
  Matrix iota;
  Matrix pi;
};

/// Block inclusion/projection for coordinates [offset, offset + d) of a
/// D-dimensional space.
Submultiplet coordinate_block(int total, int offset, int d);

struct MixingReport {
  std::optional<Elem> witness;  // first e with pi1 rho(e) iota2 or pi2 rho(e) iota1 nonzero
  MatrixRep sigma1;             // g -> pi1 rho(1, g) iota1
  MatrixRep sigma2;
  bool sigma1_irreducible = false;
  bool sigma2_irreducible = false;
  bool sigmas_equivalent = false;
  bool trivial_cocycle = false;
  /// Trivial cocycle and inequivalent certified irreducibles: no mixing possible.
  bool corollary_applies = false;
  /// corollary_applies and a witness was found anyway.
  bool corollary_violated = false;
};

/// Scans every e of the extension. Throws PreconditionFailed naming the check
/// (Retraction, Disjoint, Invariant, Equivariant, Shape) when the sub-multiplet
/// data is inconsistent with rho restricted to the elements (1, g).
MixingReport detect_mixing(const MatrixRep& rho, const extension::ExtensionGroup& e, const Submultiplet& sub1,
                           const Submultiplet& sub2, const Limits& limits = {});

enum class Coupling { Minimal, Conformal, Generic };
const char* to_string(Coupling c);

enum class MultipletShape { Diagonal, Indecomposable, Decomposable };
const char* to_string(MultipletShape s);

/// Scaling action on the span of R^j Phi^(k-2j), j = 0..floor(k/2).
struct ScalingMultiplet {
  int k = 0;
  int dim = 0;
  Coupling coupling = Coupling::Generic;
  /// entries[i][j]: coefficient of R^i Phi^(k-2i) in lambda * (R^j Phi^(k-2j)),
  /// as a polynomial in lambda, c and L = log lambda^2.
  std::vector<std::vector<wick::WickPoly>> entries;
  mpq_class lambda;
  /// entries at the sample lambda with c and L set to 1 (c = 0 for conformal coupling).
  Matrix sample;
  /// rank of sample - lambda^k I.
  int nilpotent_rank = 0;
  MultipletShape shape = MultipletShape::Diagonal;
};

/// Reads the generator matrix off scale_wick_power. Requires k >= 1 and a
/// positive sample lambda != 1 (PreconditionFailed, NonPositiveLambda).
ScalingMultiplet scaling_multiplet(int k, Coupling coupling, const mpq_class& lambda = 2);

/// The multiplet matrices form a one-parameter group: M(lambda)^m equals the
/// matrix at lambda^m, whose log symbol is m L. Checked at the sample point
/// c = L = 1 (c = 0 for conformal coupling).
Verdict check_scaling_group_law(int k, Coupling coupling, const mpq_class& lambda, int m);

}  // namespace covlab::multiplet
