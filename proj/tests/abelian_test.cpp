#include <doctest.h>

#include "hstarcat/abelian.hpp"

using namespace hstarcat;

TEST_CASE("group axiom checker accepts cyclic groups") {
  for (std::size_t n = 1; n <= 8; ++n)
    CHECK_FALSE(group_axiom_failure(cyclic_group(n)).has_value());
}

TEST_CASE("group axiom checker names failures") {
  // not total: entry out of range
  GroupTable bad_total{{{0, 1}, {1, 9}}};
  REQUIRE(group_axiom_failure(bad_total).has_value());

  // no identity: constant operation
  GroupTable no_id{{{0, 0}, {0, 0}}};
  REQUIRE(group_axiom_failure(no_id).has_value());

  // monoid without inverses: min on {0,1} with identity 1
  GroupTable no_inv{{{0, 0}, {0, 1}}};
  REQUIRE(group_axiom_failure(no_inv).has_value());

  // non-associative magma on 3 elements
  GroupTable non_assoc{{{0, 1, 2}, {1, 0, 0}, {2, 0, 1}}};
  REQUIRE(group_axiom_failure(non_assoc).has_value());
}

TEST_CASE("canonical forms separate Z4 from Z2xZ2") {
  const auto z4 = abelian_canonical_form(cyclic_group(4));
  REQUIRE(z4.size() == 1);
  CHECK(z4[0] == std::pair<std::size_t, unsigned>{2, 2});
  CHECK(canonical_form_str(z4) == "Z4");

  const auto klein =
      abelian_canonical_form(product_group(cyclic_group(2), cyclic_group(2)));
  REQUIRE(klein.size() == 2);
  CHECK(klein[0] == std::pair<std::size_t, unsigned>{2, 1});
  CHECK(klein[1] == std::pair<std::size_t, unsigned>{2, 1});
  CHECK(canonical_form_str(klein) == "Z2xZ2");

  CHECK_FALSE(groups_isomorphic(
      cyclic_group(4), product_group(cyclic_group(2), cyclic_group(2))));
}

TEST_CASE("Z6 is Z2 x Z3") {
  CHECK(groups_isomorphic(cyclic_group(6),
                          product_group(cyclic_group(2), cyclic_group(3))));
  CHECK(canonical_form_str(abelian_canonical_form(cyclic_group(6))) ==
        "Z2xZ3");
}

TEST_CASE("trivial group canonical form") {
  CHECK(abelian_canonical_form(cyclic_group(1)).empty());
  CHECK(canonical_form_str(abelian_canonical_form(cyclic_group(1))) == "Z1");
}

TEST_CASE("canonical forms over all orders up to 8") {
  CHECK(canonical_form_str(abelian_canonical_form(cyclic_group(8))) == "Z8");
  CHECK(canonical_form_str(abelian_canonical_form(
            product_group(cyclic_group(2), cyclic_group(4)))) == "Z2xZ4");
  CHECK(canonical_form_str(abelian_canonical_form(product_group(
            cyclic_group(2),
            product_group(cyclic_group(2), cyclic_group(2))))) == "Z2xZ2xZ2");
  // relabeling invariance: products in both orders
  CHECK(groups_isomorphic(product_group(cyclic_group(2), cyclic_group(4)),
                          product_group(cyclic_group(4), cyclic_group(2))));
}

TEST_CASE("group spec parsing") {
  CHECK(groups_isomorphic(parse_group_spec("z4"), cyclic_group(4)));
  CHECK(groups_isomorphic(parse_group_spec("Z2xZ2"),
                          product_group(cyclic_group(2), cyclic_group(2))));
  CHECK(parse_group_spec("z2xz3").order() == 6);
  CHECK_THROWS(parse_group_spec("q8"));
  CHECK_THROWS(parse_group_spec(""));
}
