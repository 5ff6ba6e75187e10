#include "doctest.h"

#include "covlab/fingroup.hpp"
#include "naive_oracle.hpp"

using namespace covlab;
using namespace covlab::fingroup;

namespace {

ErrorKind kind_of(const std::vector<std::vector<int>>& table, std::vector<int>* witness = nullptr) {
  try {
    make_group(table);
  } catch (const Error& e) {
    if (witness) *witness = e.witness();
    return e.kind();
  }
  FAIL("table was accepted");
  return ErrorKind::ParseError;
}

void check_axioms(const GroupTable& g) {
  const int n = g.order();
  for (int x = 0; x < n; ++x) {
    CHECK(g.mul(0, x) == x);
    CHECK(g.mul(x, 0) == x);
    CHECK(g.mul(x, g.inv(x)) == 0);
    CHECK(g.mul(g.inv(x), x) == 0);
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) CHECK(g.mul(g.mul(x, y), z) == g.mul(x, g.mul(y, z)));
  }
}

}  // namespace

TEST_CASE("make_group accepts Z2 and Z4") {
  auto z2 = make_group({{0, 1}, {1, 0}});
  CHECK(z2.order() == 2);
  auto z4 = make_group(naive::cyclic_table(4));
  CHECK(z4.element_order(1) == 4);
  CHECK(z4.element_order(2) == 2);
}

TEST_CASE("make_group rejects with named witnesses") {
  std::vector<int> w;
  CHECK(kind_of({{0, 1}, {1, 1}}, &w) == ErrorKind::NotInvertible);
  CHECK(w == std::vector<int>{1});
  CHECK(kind_of({{0, 2}, {1, 0}}) == ErrorKind::IndexOutOfRange);
  CHECK(kind_of({{1, 0}, {0, 0}}) == ErrorKind::NoIdentity);
  // Latin square with identity 0 that is not associative (order 5 loop).
  std::vector<std::vector<int>> loop = {
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  CHECK(kind_of(loop, &w) == ErrorKind::NotAssociative);
  CHECK(w.size() == 3);
}

TEST_CASE("identity is moved to index 0") {
  // Z2 written with the identity at index 1.
  auto g = make_group({{1, 0}, {0, 1}});
  CHECK(g.mul(0, 1) == 1);
  CHECK(g.mul(1, 1) == 0);
}

TEST_CASE("builtin groups satisfy the axioms") {
  for (const char* name : {"Z1", "Z2", "Z3", "Z4", "Z6", "Z2xZ2", "Z2xZ4", "S3", "Q8", "D4"}) {
    CAPTURE(name);
    auto g = named_group(name);
    REQUIRE(g.has_value());
    check_axioms(*g);
  }
  CHECK(!symmetric3().is_abelian());
  CHECK(quaternion8().element_order(2) == 4);
  CHECK(quaternion8().mul(2, 4) == 6);  // i j = k
  CHECK(quaternion8().mul(4, 2) == 7);  // j i = -k
  CHECK(!named_group("Q7").has_value());
}

TEST_CASE("automorphism groups") {
  CHECK(compute_aut(cyclic(2)).group.order() == 1);
  CHECK(compute_aut(cyclic(3)).group.order() == 2);
  CHECK(compute_aut(klein_four()).group.order() == 6);
  CHECK(compute_aut(cyclic(4)).group.order() == 2);
  CHECK(compute_aut(symmetric3()).group.order() == 6);
  CHECK(compute_aut(quaternion8()).group.order() == 24);
  CHECK(compute_aut(dihedral(4)).group.order() == 8);

  for (const char* name : {"Z4", "Z2xZ2", "S3", "Z6"}) {
    auto g = *named_group(name);
    auto aut = compute_aut(g);
    auto ref = naive::automorphisms(g.rows());
    std::sort(ref.begin(), ref.end());
    CHECK(aut.perms == ref);
    CHECK(aut.perms.front() == identity_perm(g.order()));
    for (std::size_t i = 0; i < aut.perms.size(); ++i)
      for (std::size_t j = 0; j < aut.perms.size(); ++j)
        CHECK(aut.perms[static_cast<std::size_t>(aut.group.mul(static_cast<int>(i), static_cast<int>(j)))] ==
              compose(aut.perms[i], aut.perms[j]));
  }
}

TEST_CASE("automorphism cap") {
  Limits lim;
  lim.aut_cap = 4;
  CHECK_THROWS_AS(compute_aut(cyclic(5), lim), Error);
}

TEST_CASE("centres") {
  CHECK(centre(cyclic(4)) == std::vector<Elem>{0, 1, 2, 3});
  CHECK(centre(symmetric3()) == std::vector<Elem>{0});
  CHECK(centre(quaternion8()) == std::vector<Elem>{0, 1});
  CHECK(centre(dihedral(4)).size() == 2);
  for (const char* name : {"Z4", "S3", "Q8", "D4", "D3", "Z2xZ4"}) {
    auto g = *named_group(name);
    CHECK(is_subgroup(g, centre(g)));
  }
}

TEST_CASE("check_hom") {
  auto z2 = cyclic(2), z4 = cyclic(4);
  CHECK(check_hom({z2, z2, {0, 1}}).ok);
  CHECK(check_hom({z4, z2, {0, 1, 0, 1}}).ok);
  auto v = check_hom({z4, z2, {0, 1, 1, 1}});
  CHECK(!v.ok);
  CHECK(v.witness == std::vector<int>{1, 1});
}

TEST_CASE("subgroups, quotients, homs") {
  auto q8 = quaternion8();
  auto q = quotient(q8, {0, 1});
  CHECK(q.group.order() == 4);
  CHECK(find_isomorphism(q.group, klein_four()).has_value());
  CHECK(!find_isomorphism(cyclic(4), klein_four()).has_value());
  auto sub = subgroup(q8, {0, 1, 2, 3});
  CHECK(find_isomorphism(sub.group, cyclic(4)).has_value());
  int count = 0;
  for_each_hom(cyclic(4), cyclic(2), [&](const std::vector<Elem>& f) {
    CHECK(check_hom({cyclic(4), cyclic(2), f}).ok);
    ++count;
    return true;
  });
  CHECK(count == 2);
  count = 0;
  for_each_hom(symmetric3(), cyclic(6), [&](const std::vector<Elem>&) { return ++count, true; });
  CHECK(count == 2);
}
