#include "doctest.h"

#include <random>

#include "covlab/covariance.hpp"
#include "covlab/model_fixtures.hpp"

using namespace covlab;
using namespace covlab::covariance;
using fixtures::ModelFixture;

namespace {

TwistMap random_twist(std::mt19937& rng, int group_order, int gauge_order) {
  TwistMap t;
  for (int g = 0; g < group_order; ++g) t.zeta.push_back(static_cast<int>(rng() % static_cast<unsigned>(gauge_order)));
  return t;
}

bool is_trivial(const cohomology::Cochain2& c) {
  return std::all_of(c.xi.begin(), c.xi.end(), [](int x) { return x == 0; }) &&
         std::all_of(c.phi.begin(), c.phi.end(), [](int p) { return p == 0; });
}

}  // namespace

TEST_CASE("validate_fincat") {
  auto z4 = group_category(fingroup::cyclic(4));
  CHECK(validate_fincat(z4).ok);
  CHECK(validate_fincat(discrete_category(3)).ok);

  auto broken = make_fincat({"a"}, {{"id", "a", "a"}, {"e", "a", "a"}},
                            {{"id", "id", "id"}, {"e", "id", "e"}, {"id", "e", "e"}}, {"id"});
  auto v = validate_fincat(broken);
  CHECK(!v.ok);
  CHECK(v.violation.rfind("MissingComposite", 0) == 0);
  CHECK(v.witness == std::vector<int>{1, 1});

  auto bad_identity = make_fincat({"a"}, {{"id", "a", "a"}, {"e", "a", "a"}},
                                  {{"id", "id", "id"}, {"e", "id", "id"}, {"id", "e", "e"}, {"e", "e", "id"}}, {"id"});
  CHECK(validate_fincat(bad_identity).violation.rfind("IdentityLaw", 0) == 0);

  Limits small;
  small.hom_set_cap = 3;
  CHECK(validate_fincat(z4, small).violation.rfind("HomSetTooLarge", 0) == 0);
  CHECK_THROWS_AS(make_fincat({"a"}, {{"id", "a", "b"}}, {}, {"id"}), Error);
}

TEST_CASE("shipped models are valid") {
  for (const auto& name : fixtures::model_names()) {
    CAPTURE(name);
    auto f = *fixtures::model_fixture(name);
    CHECK(validate_fincat(*f.model.functor.source).ok);
    CHECK(validate_fincat(*f.model.functor.target).ok);
    CHECK(validate_functor(f.model.functor).ok);
    CHECK(validate_gaction(f.model.action).ok);
    CHECK(validate_implementation(f.model, f.impl).ok);
    if (f.alternative) CHECK(validate_implementation(f.model, *f.alternative).ok);
  }
}

TEST_CASE("swap action and bad actions") {
  auto f = fixtures::swap_model();
  CHECK(validate_gaction(f.model.action).ok);
  auto bad = f.model.action;
  bad.morphisms[1] = {0, 1, 2, 3};  // objects swapped but morphisms kept: not a functor
  CHECK(!validate_gaction(bad).ok);
  auto bad_functor = f.model.functor;
  bad_functor.morphisms[2] = 0;
  CHECK(!validate_functor(bad_functor).ok);
}

TEST_CASE("gauge groups") {
  auto z4 = compute_gauge_group(fixtures::z4_rotation().model.functor);
  CHECK(z4.group.order() == 4);
  CHECK(fingroup::find_isomorphism(z4.group, fingroup::cyclic(4)).has_value());
  CHECK(compute_gauge_group(fixtures::s3_identity().model.functor).group.order() == 1);
  auto pair = compute_gauge_group(fixtures::pair_model().model.functor);
  CHECK(pair.group.order() == 2);
  // alpha_C2 = m alpha_C1 m^-1 and alpha_C1 commutes with the transposition.
  CHECK(pair.families[1] == std::vector<int>{1, 5});
  auto spin = compute_gauge_group(fixtures::spin_q8().model.functor);
  CHECK(spin.group.order() == 8);
  CHECK(fingroup::find_isomorphism(spin.group, fingroup::quaternion8()).has_value());

  Limits tiny;
  tiny.search_cap = 100;
  CHECK_THROWS_AS(compute_gauge_group(fixtures::spin_q8().model.functor, tiny), Error);
}

TEST_CASE("validate_implementation negative cases") {
  auto f = fixtures::swap_model();
  Implementation bad{{{0, 0}, {0, 1}}};
  auto v = validate_implementation(f.model, bad);
  CHECK(!v.ok);
  CHECK(v.witness == std::vector<int>{1, 2});
  Implementation not_unit{{{1, 1}, {0, 0}}};
  CHECK(!validate_implementation(f.model, not_unit).ok);

  auto z = fixtures::z4_rotation();
  Implementation wrong_shape{{{0}}};
  CHECK(!validate_implementation(z.model, wrong_shape).ok);
}

TEST_CASE("extract_cocycle examples") {
  auto s3 = fixtures::s3_identity();
  CHECK(is_trivial(extract_cocycle(s3.model, s3.impl, compute_gauge_group(s3.model.functor))));

  auto z = fixtures::z4_rotation();
  auto gauge = compute_gauge_group(z.model.functor);
  auto c = extract_cocycle(z.model, z.impl, gauge);
  CHECK(c.xi_at(1, 1) == 2);
  CHECK(c.phi[1] == 0);
  auto w = cohomology::cohomologous(c, cohomology::trivial_cochain(c.G, c.A));
  REQUIRE(w.has_value());
  CHECK(w->zeta == std::vector<int>{0, 1});

  for (const char* name : {"spin-q8", "frame-rotation", "frame-kernel", "s3-identity"}) {
    CAPTURE(name);
    auto f = *fixtures::model_fixture(name);
    auto g = compute_gauge_group(f.model.functor);
    CHECK(check_trivial_relations(f.model, f.impl, g).ok);
    CHECK(is_trivial(extract_cocycle(f.model, f.impl, g)));
  }
  CHECK(!check_trivial_relations(z.model, z.impl, gauge).ok);
}

TEST_CASE("compare_implementations") {
  auto z = fixtures::z4_rotation();
  auto gauge = compute_gauge_group(z.model.functor);
  CHECK(compare_implementations(z.model, z.impl, z.impl, gauge).zeta == std::vector<int>{0, 0});
  auto t = compare_implementations(z.model, z.impl, *z.alternative, gauge);
  CHECK(t.zeta == std::vector<int>{0, 2});
  auto c1 = extract_cocycle(z.model, z.impl, gauge);
  auto c2 = extract_cocycle(z.model, *z.alternative, gauge);
  CHECK(cohomology::cohomologous(c1, c2).has_value());
}

TEST_CASE("random twisted implementation pairs") {
  std::mt19937 rng(2024);
  int pairs = 0;
  for (const auto& name : fixtures::model_names()) {
    auto f = *fixtures::model_fixture(name);
    auto gauge = compute_gauge_group(f.model.functor);
    const int n = f.model.action.G.order();
    for (int rep = 0; rep < 4; ++rep) {
      auto t = random_twist(rng, n, gauge.group.order());
      t.zeta[0] = 0;
      auto twisted = twist_implementation(f.model, f.impl, gauge, t);
      REQUIRE(validate_implementation(f.model, twisted).ok);
      auto recovered = compare_implementations(f.model, f.impl, twisted, gauge);
      CHECK(recovered == t);
      auto c1 = extract_cocycle(f.model, f.impl, gauge);
      auto c2 = extract_cocycle(f.model, twisted, gauge);
      CHECK(cohomology::validate_cocycle(c2, true).valid);
      CHECK(cohomology::coboundary_twist(c1, recovered) == c2);
      ++pairs;
    }
  }
  CHECK(pairs >= 20);
}

TEST_CASE("lift_to_extension") {
  auto z = fixtures::z4_rotation();
  auto gauge = compute_gauge_group(z.model.functor);
  auto c = extract_cocycle(z.model, z.impl, gauge);
  auto ext = extension::build_extension(c);
  CHECK(ext.E.order() == 8);
  auto lift = lift_to_extension(z.model, z.impl, gauge, ext);
  CHECK(validate_implementation(lift.model, lift.rho).ok);
  CHECK(lift.cocycle.xi.size() == 64);
  CHECK(std::all_of(lift.cocycle.xi.begin(), lift.cocycle.xi.end(), [](int x) { return x == 0; }));

  auto s = fixtures::spin_q8();
  auto sg = compute_gauge_group(s.model.functor);
  auto sext = extension::build_extension(extract_cocycle(s.model, s.impl, sg));
  auto slift = lift_to_extension(s.model, s.impl, sg, sext);
  CHECK(cohomology::is_neutral(slift.cocycle));
  // Trivial cocycle: rho(alpha, g) = alpha o eta(g).
  for (int e = 0; e < sext.E.order(); ++e) {
    auto [a, g] = sext.decode(e);
    for (int x = 0; x < 4; ++x)
      CHECK(slift.rho.at(e, x) == s.model.functor.target->compose(sg.families[static_cast<std::size_t>(a)][static_cast<std::size_t>(s.model.action.act(g, x))], s.impl.at(g, x)));
  }
  auto other = extension::build_extension(cohomology::trivial_cochain(c.G, c.A));
  CHECK_THROWS_AS(lift_to_extension(z.model, z.impl, gauge, other), Error);
}

TEST_CASE("active_passive_compose") {
  auto s3 = fixtures::s3_identity();
  CHECK(active_passive_compose(s3.model, s3.impl, 0, {0}) == std::vector<int>{0});

  auto r = fixtures::frame_rotation();
  auto xi = active_passive_compose(r.model, r.impl, *r.c0, r.psi);
  CHECK(xi.size() == 4);
  auto h = fingroup::cyclic(4);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) CHECK(h.mul(xi[static_cast<std::size_t>(a)], xi[static_cast<std::size_t>(b)]) == xi[static_cast<std::size_t>(h.mul(a, b))]);

  auto k = fixtures::frame_kernel();
  auto kx = active_passive_compose(k.model, k.impl, *k.c0, k.psi);
  CHECK(kx[2] == k.impl.at(2, 0));
  CHECK(kx == std::vector<int>{0, 3, 2, 1});

  auto s = fixtures::spin_q8();
  auto q8 = fingroup::quaternion8();
  std::vector<int> psi;
  for (int g = 0; g < 8; ++g) psi.push_back(q8.inv(g));  // (l0, g^-1)
  CHECK_NOTHROW(active_passive_compose(s.model, s.impl, 0, psi));
  psi[1] = 0;
  try {
    active_passive_compose(s.model, s.impl, 0, psi);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Eq18Violated);
  }
  auto z = fixtures::z4_rotation();
  CHECK_THROWS_AS(active_passive_compose(z.model, z.impl, 0, {0, 0}), Error);
}
