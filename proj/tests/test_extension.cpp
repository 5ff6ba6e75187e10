#include "doctest.h"

#include "covlab/extension.hpp"
#include "naive_oracle.hpp"

using namespace covlab;
using namespace covlab::extension;
using cohomology::Cochain2;
using cohomology::make_coefficients;
using cohomology::trivial_cochain;
using fingroup::cyclic;

namespace {

Cochain2 z4_producing() {
  auto c = trivial_cochain(cyclic(2), make_coefficients(cyclic(2)));
  c.xi[3] = 1;
  return c;
}

Cochain2 inversion_over_z3() {
  auto a = make_coefficients(cyclic(3));
  auto c = trivial_cochain(cyclic(2), a);
  c.phi[1] = *a->aut.index_of({0, 2, 1});
  return c;
}

bool has(const TypeReport& r, ExtensionType t) {
  return std::find(r.labels.begin(), r.labels.end(), t) != r.labels.end();
}

}  // namespace

TEST_CASE("build_extension examples") {
  auto triv = build_extension(trivial_cochain(cyclic(2), make_coefficients(cyclic(2))));
  CHECK(triv.E.order() == 4);
  CHECK(fingroup::find_isomorphism(triv.E, fingroup::klein_four()).has_value());

  auto z4 = build_extension(z4_producing());
  CHECK(z4.E.element_order(z4.encode(0, 1)) == 4);
  CHECK(z4.E.mul(z4.encode(0, 1), z4.encode(0, 1)) == z4.encode(1, 0));
  CHECK(fingroup::find_isomorphism(z4.E, cyclic(4)).has_value());

  auto s3 = build_extension(inversion_over_z3());
  CHECK(!s3.E.is_abelian());
  CHECK(fingroup::find_isomorphism(s3.E, fingroup::symmetric3()).has_value());
}

TEST_CASE("build_extension exactness") {
  auto e = build_extension(z4_producing());
  for (int a = 0; a < 2; ++a) CHECK(e.projection.map[static_cast<std::size_t>(e.inclusion.map[static_cast<std::size_t>(a)])] == 0);
  CHECK(fingroup::kernel(e.projection) == fingroup::image(e.inclusion));
}

TEST_CASE("build_extension rejects non-cocycles") {
  auto bad = trivial_cochain(cyclic(3), make_coefficients(cyclic(2)));
  bad.xi[4] = 1;
  try {
    build_extension(bad);
    FAIL("accepted");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::InvalidCocycle);
    CHECK(err.witness().size() == 3);
  }
  auto unnormalized = trivial_cochain(cyclic(2), make_coefficients(cyclic(2)));
  unnormalized.xi = {1, 1, 1, 1};
  CHECK_THROWS_AS(build_extension(unnormalized), Error);
}

TEST_CASE("classify_type examples") {
  auto triv = classify_type(build_extension(trivial_cochain(cyclic(2), make_coefficients(cyclic(2)))));
  CHECK(triv.labels == std::vector<ExtensionType>{ExtensionType::DirectProduct, ExtensionType::Semidirect,
                                                   ExtensionType::Central});
  CHECK(triv.preferred == ExtensionType::DirectProduct);

  auto s3 = classify_type(build_extension(inversion_over_z3()));
  CHECK(s3.labels == std::vector<ExtensionType>{ExtensionType::Semidirect});

  auto z4 = classify_type(build_extension(z4_producing()));
  CHECK(z4.labels == std::vector<ExtensionType>{ExtensionType::Central});
  CHECK(z4.preferred == ExtensionType::Central);

  // Q8 as an extension of Z2 by Z4 with phi = inversion, xi(j, j) = -1: neither split nor central.
  auto a4 = make_coefficients(cyclic(4));
  auto q = trivial_cochain(cyclic(2), a4);
  q.phi[1] = *a4->aut.index_of({0, 3, 2, 1});
  q.xi[3] = 2;
  auto qe = build_extension(q);
  CHECK(fingroup::find_isomorphism(qe.E, fingroup::quaternion8()).has_value());
  auto qr = classify_type(qe);
  CHECK(qr.labels == std::vector<ExtensionType>{ExtensionType::General});
}

TEST_CASE("extensions_equivalent examples") {
  auto e = build_extension(z4_producing());
  auto w = extensions_equivalent(e, e);
  REQUIRE(w.has_value());
  for (int x = 0; x < e.E.order(); ++x) CHECK((*w)[static_cast<std::size_t>(x)] == x);

  auto d = build_extension(trivial_cochain(cyclic(2), make_coefficients(cyclic(2))));
  CHECK(!extensions_equivalent(e, d).has_value());

  auto a4 = make_coefficients(cyclic(4));
  auto base = trivial_cochain(cyclic(2), a4);
  base.xi[3] = 1;
  auto twisted = cohomology::coboundary_twist(base, {{0, 3}});
  auto e1 = build_extension(base), e2 = build_extension(twisted);
  auto m = extensions_equivalent(e1, e2);
  REQUIRE(m.has_value());
  CHECK(fingroup::check_hom({e1.E, e2.E, *m}).ok);
  auto back = extensions_equivalent(e2, e1);
  REQUIRE(back.has_value());
}

TEST_CASE("cohomologous iff extensions equivalent, exhaustively") {
  const std::vector<std::pair<std::string, std::string>> cases = {
      {"Z2", "Z2"}, {"Z2", "Z3"}, {"Z3", "Z2"}, {"Z2", "Z4"}, {"Z3", "Z3"}, {"Z4", "Z2"}, {"Z2", "Z2xZ2"},
      {"Z2xZ2", "Z2"}, {"Z4", "Z4"}, {"Z2", "S3"}};
  for (const auto& [gn, an] : cases) {
    CAPTURE(gn);
    CAPTURE(an);
    auto G = *fingroup::named_group(gn);
    auto A = make_coefficients(*fingroup::named_group(an));
    auto all = cohomology::enumerate_normalized_cocycles(G, A);
    std::vector<ExtensionGroup> exts;
    for (const auto& c : all) exts.push_back(build_extension(c));
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = i; j < all.size(); ++j)
        CHECK(cohomology::cohomologous(all[i], all[j]).has_value() ==
              extensions_equivalent(exts[i], exts[j]).has_value());
    int ext_classes = naive::extension_class_count(G.rows(), A->group.rows());
    CHECK(static_cast<int>(cohomology::classify_h2(G, A).size()) == ext_classes);
  }
}
