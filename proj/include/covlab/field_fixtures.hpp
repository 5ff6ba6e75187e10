#pragma once

#include <optional>
#include <string>
#include <vector>

#include "covlab/multiplet.hpp"

namespace covlab::fixtures {

/// A field-space action together with a pair of sub-multiplets to probe for
/// mixing.
struct FieldFixture {
  std::string name;
  multiplet::FieldSpaceAction action;
  std::optional<multiplet::Submultiplet> sub1;
  std::optional<multiplet::Submultiplet> sub2;
  bool expect_mixing = false;
};

/// Z4 rotating a two-component field by g * A = R(g)^-1 A, gauge group Z2
/// acting by sign.
FieldFixture vector_z4();
/// S3 on sign (+) standard, gauge group Z2 acting by sign; trivial cocycle.
FieldFixture direct_s3();
/// Z4 on the characters i and -i; trivial cocycle with Z2 gauge group.
FieldFixture z4_characters();
/// Z2 acting by sign on two copies of the sign rep, gauge element swapping them.
FieldFixture equivalent_blocks();
/// Central extension of Z2 by Z4 (xi(g, g) = 2) mixing two trivial G-reps.
FieldFixture central_z4();
/// Z4 x| Z2 by inversion (the dihedral group of order 8) on the plane.
FieldFixture semidirect_d4();

std::vector<std::string> field_fixture_names();
std::optional<FieldFixture> field_fixture(const std::string& name);

/// Standard two-dimensional representation of S3 on the sum-zero plane.
multiplet::MatrixRep s3_standard();
/// Sign representation of S3.
multiplet::MatrixRep s3_sign();
/// One-dimensional representation of Z_n sending the generator to u.
multiplet::MatrixRep cyclic_character(int n, const linalg::Scalar& u);

}  // namespace covlab::fixtures
