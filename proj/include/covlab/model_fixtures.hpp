#pragma once

#include <optional>
#include <string>
#include <vector>

#include "covlab/covariance.hpp"

namespace covlab::fixtures {

struct ModelFixture {
  covariance::CovarianceModel model;
  covariance::Implementation impl;
  std::optional<covariance::Implementation> alternative;
  /// Base object and psi family for the active/passive composition, when the
  /// model carries frame data.
  std::optional<int> c0;
  std::vector<int> psi;
};

/// One object, trivial Z2 action, target the group category of Z4,
/// eta(g) = r and alternative eta~(g) = r^3.
ModelFixture z4_rotation();

/// Objects C1, C2 with e: C1 -> C1 (e o e = id), m, me: C1 -> C2, into the
/// group category of S3 with e -> (0 1) and m -> (0 1 2). Trivial Z2 action,
/// eta(g) the nontrivial gauge element.
ModelFixture pair_model();

/// The identity functor on the group category of S3, trivial group acting.
ModelFixture s3_identity();

/// Two objects a, b joined by f: a -> b and its inverse; Z2 swaps them.
ModelFixture swap_model();

/// Action groupoid of S on L through pi: objects l, morphisms (l, s): l -> pi(s) l.
/// S acts by (l, s) -> (pi(S) l, S s S^-1); the theory sends (l, s) to chi(s) in
/// the group category of h, implemented by eta(S)_l = chi(S).
ModelFixture spin_groupoid(const fingroup::GroupTable& s, const fingroup::GroupTable& l, const std::vector<int>& pi,
                           const fingroup::GroupTable& h, const std::vector<int>& chi, const std::string& name);
/// Q8 over Z2xZ2 with the identity theory into Q8.
ModelFixture spin_q8();

/// Frames x in L, morphisms (x, m): x -> x m^-1 composing as (x m^-1, m')(x, m) = (x, m'm).
/// G acts by (x, m) -> (pi(g) x, m); the theory sends (x, m) to tau(m) in the
/// group category of h, implemented by eta(g)_x = chi(g). psi_g = (1, pi(g)).
ModelFixture frame_model(const fingroup::GroupTable& g, const fingroup::GroupTable& l, const std::vector<int>& pi,
                         const fingroup::GroupTable& h, const std::vector<int>& chi, const std::vector<int>& tau,
                         const std::string& name);
/// Z4 rotating four frames cyclically.
ModelFixture frame_rotation();
/// Z4 over Z2 frames; the element 2 covers the identity.
ModelFixture frame_kernel();

std::vector<std::string> model_names();
std::optional<ModelFixture> model_fixture(const std::string& name);

}  // namespace covlab::fixtures
