#include "covlab/field_fixtures.hpp"

#include <stdexcept>

namespace covlab::fixtures {

using cohomology::make_coefficients;
using cohomology::trivial_cochain;
using fingroup::cyclic;
using linalg::Matrix;
using linalg::Scalar;
using multiplet::FieldSpaceAction;
using multiplet::MatrixRep;

namespace {

Matrix rotation() { return Matrix::from_rows({{0, -1}, {1, 0}}); }
Matrix swap2() { return Matrix::from_rows({{0, 1}, {1, 0}}); }

MatrixRep sign_rep_z2(int dim) {
  return multiplet::rep_from_generators(cyclic(2), {1}, {Matrix::scalar(dim, -1)});
}

FieldFixture finish(FieldFixture f) {
  auto v = multiplet::verify_field_action(f.action);
  if (!v) throw std::logic_error(f.name + ": " + v.violation);
  return f;
}

}  // namespace

MatrixRep cyclic_character(int n, const Scalar& u) {
  return multiplet::rep_from_generators(cyclic(n), {1}, {Matrix::scalar(1, u)});
}

MatrixRep s3_standard() {
  // Basis e0 - e1, e1 - e2; element 1 swaps 1 and 2, element 3 sends 0 -> 1 -> 2 -> 0.
  return multiplet::rep_from_generators(fingroup::symmetric3(), {1, 3},
                                        {Matrix::from_rows({{1, 0}, {1, -1}}), Matrix::from_rows({{0, -1}, {1, -1}})});
}

MatrixRep s3_sign() {
  return multiplet::rep_from_generators(fingroup::symmetric3(), {1, 3}, {Matrix::scalar(1, -1), Matrix::identity(1)});
}

FieldFixture vector_z4() {
  FieldFixture f;
  f.name = "vector-z4";
  auto a = make_coefficients(cyclic(2));
  f.action.cocycle = trivial_cochain(cyclic(4), a);
  f.action.dot = sign_rep_z2(2);
  const Matrix inv = rotation().pow(3);
  for (int g = 0; g < 4; ++g) f.action.star.push_back(inv.pow(g));
  return finish(f);
}

FieldFixture direct_s3() {
  FieldFixture f;
  f.name = "direct-s3";
  auto g = fingroup::symmetric3();
  f.action.cocycle = trivial_cochain(g, make_coefficients(cyclic(2)));
  f.action.dot = sign_rep_z2(3);
  f.action.star = multiplet::direct_sum(s3_sign(), s3_standard()).matrices;
  f.sub1 = multiplet::coordinate_block(3, 0, 1);
  f.sub2 = multiplet::coordinate_block(3, 1, 2);
  return finish(f);
}

FieldFixture z4_characters() {
  FieldFixture f;
  f.name = "z4-characters";
  f.action.cocycle = trivial_cochain(cyclic(4), make_coefficients(cyclic(2)));
  f.action.dot = multiplet::trivial_rep(cyclic(2), 2);
  f.action.star = multiplet::direct_sum(cyclic_character(4, Scalar::i()), cyclic_character(4, -Scalar::i())).matrices;
  f.sub1 = multiplet::coordinate_block(2, 0, 1);
  f.sub2 = multiplet::coordinate_block(2, 1, 1);
  return finish(f);
}

FieldFixture equivalent_blocks() {
  FieldFixture f;
  f.name = "equivalent-blocks";
  f.action.cocycle = trivial_cochain(cyclic(2), make_coefficients(cyclic(2)));
  f.action.dot = multiplet::rep_from_generators(cyclic(2), {1}, {swap2()});
  f.action.star = sign_rep_z2(2).matrices;
  f.sub1 = multiplet::coordinate_block(2, 0, 1);
  f.sub2 = multiplet::coordinate_block(2, 1, 1);
  f.expect_mixing = true;
  return finish(f);
}

FieldFixture central_z4() {
  FieldFixture f;
  f.name = "central-z4";
  auto c = trivial_cochain(cyclic(2), make_coefficients(cyclic(4)));
  c.xi[3] = 2;
  f.action.cocycle = c;
  f.action.dot = multiplet::rep_from_generators(cyclic(4), {1}, {swap2()});
  f.action.star = {Matrix::identity(2), Matrix::identity(2)};
  f.sub1 = multiplet::coordinate_block(2, 0, 1);
  f.sub2 = multiplet::coordinate_block(2, 1, 1);
  f.expect_mixing = true;
  return finish(f);
}

FieldFixture semidirect_d4() {
  FieldFixture f;
  f.name = "semidirect-d4";
  auto a = make_coefficients(cyclic(4));
  auto c = trivial_cochain(cyclic(2), a);
  c.phi[1] = *a->aut.index_of({0, 3, 2, 1});
  f.action.cocycle = c;
  f.action.dot = multiplet::rep_from_generators(cyclic(4), {1}, {rotation()});
  f.action.star = {Matrix::identity(2), Matrix::from_rows({{1, 0}, {0, -1}})};
  f.sub1 = multiplet::coordinate_block(2, 0, 1);
  f.sub2 = multiplet::coordinate_block(2, 1, 1);
  f.expect_mixing = true;
  return finish(f);
}

std::vector<std::string> field_fixture_names() {
  return {"vector-z4", "direct-s3", "z4-characters", "equivalent-blocks", "central-z4", "semidirect-d4"};
}

std::optional<FieldFixture> field_fixture(const std::string& name) {
  if (name == "vector-z4") return vector_z4();
  if (name == "direct-s3") return direct_s3();
  if (name == "z4-characters") return z4_characters();
  if (name == "equivalent-blocks") return equivalent_blocks();
  if (name == "central-z4") return central_z4();
  if (name == "semidirect-d4") return semidirect_d4();
  return std::nullopt;
}

}  // namespace covlab::fixtures
