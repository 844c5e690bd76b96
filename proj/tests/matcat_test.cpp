#include <doctest.h>

#include "hstarcat/matcat.hpp"
#include "test_util.hpp"

using namespace hstarcat;
using namespace hstarcat::testutil;

namespace {
const SemiringPtr B = SemiringDef::boolean();
}

TEST_CASE("composition is matrix multiplication") {
  const Mor f = bmor(2, 2, {0, 0, 1, 0});
  const Mor g = bmor(2, 2, {1, 1, 0, 0});
  CHECK(compose(g, f) == bmor(2, 2, {1, 0, 0, 0}));
  CHECK(compose(Mor::identity(B, Obj{2}), f) == f);
  CHECK(compose(f, Mor::identity(B, Obj{2})) == f);
  CHECK(compose(Mor::zero(B, Obj{2}, Obj{2}), f) == Mor::zero(B, Obj{2}, Obj{2}));
}

TEST_CASE("composition rejects shape and semiring mismatches") {
  CHECK_THROWS_AS(compose(bmor(2, 2, {1, 0, 0, 1}), bmor(3, 2, {0, 0, 0, 0, 0, 0})),
                  input_error);
  const Mor nat_id = Mor::identity(SemiringDef::nat(), Obj{2});
  CHECK_THROWS_AS(compose(nat_id, bmor(2, 2, {1, 0, 0, 1})), input_error);
}

TEST_CASE("dagger is the star-transpose involution") {
  const Mor f = bmor(2, 2, {1, 0, 1, 1});
  CHECK(dagger(f) == bmor(2, 2, {1, 1, 0, 1}));
  CHECK(dagger(dagger(f)) == f);
  CHECK(dagger(Mor::identity(B, Obj{3})) == Mor::identity(B, Obj{3}));
  const Mor g = bmor(2, 2, {0, 1, 1, 0});
  CHECK(dagger(compose(g, f)) == compose(dagger(f), dagger(g)));
}

TEST_CASE("tensor is the Kronecker product") {
  CHECK(tensor(Mor::identity(B, Obj{2}), Mor::identity(B, Obj{3})) ==
        Mor::identity(B, Obj{6}));
  const Mor f = bmor(2, 2, {1, 1, 0, 1});
  CHECK(tensor(f, Mor::identity(B, Obj{1})) == f);
  CHECK(tensor(Mor::identity(B, Obj{1}), f) == f);
  const Mor g = bmor(2, 2, {0, 1, 1, 0});
  CHECK(dagger(tensor(f, g)) == tensor(dagger(f), dagger(g)));
  // interchange
  const Mor h = bmor(2, 2, {1, 0, 1, 0});
  CHECK(tensor(compose(f, g), compose(g, h)) ==
        compose(tensor(f, g), tensor(g, h)));
}

TEST_CASE("biproducts: oplus and the projection pairing") {
  CHECK(oplus(Mor::identity(B, Obj{1}), Mor::identity(B, Obj{2})) ==
        Mor::identity(B, Obj{3}));
  const std::vector<std::size_t> dims{2, 3};
  CHECK(compose(projection(B, 0, dims), coprojection(B, 0, dims)) ==
        Mor::identity(B, Obj{2}));
  CHECK(compose(projection(B, 0, dims), coprojection(B, 1, dims)) ==
        Mor::zero(B, Obj{2}, Obj{3}));
  CHECK(projection(B, 1, dims) == dagger(coprojection(B, 1, dims)));
  CHECK_THROWS_AS(coprojection(B, 2, dims), input_error);
}

TEST_CASE("add is entrywise and equals the biproduct convolution") {
  const Mor f = bmor(1, 2, {1, 0});
  const Mor g = bmor(1, 2, {0, 1});
  CHECK(add(f, g) == bmor(1, 2, {1, 1}));
  CHECK(add(f, Mor::zero(B, Obj{1}, Obj{2})) == f);

  // nabla . (f (+) g) . delta against entrywise, over nat to see real sums
  const SemiringPtr N = SemiringDef::nat();
  const Mor a = mor(N, 2, 2, {1, 2, 3, 4});
  const Mor b = mor(N, 2, 2, {5, 6, 7, 8});
  const Mor via_biproduct =
      compose(codiagonal(N, Obj{2}), compose(oplus(a, b), diagonal(N, Obj{2})));
  CHECK(via_biproduct == add(a, b));
  CHECK(add(a, b) == mor(N, 2, 2, {6, 8, 10, 12}));
}

TEST_CASE("scalar multiplication") {
  const Mor f = bmor(2, 2, {1, 0, 1, 1});
  CHECK(scalar_mul(Mor::scalar(B, Scalar(1)), f) == f);
  CHECK(scalar_mul(Mor::scalar(B, Scalar(0)), f) == Mor::zero(B, Obj{2}, Obj{2}));
  const SemiringPtr N = SemiringDef::nat();
  CHECK(scalar_mul(Mor::scalar(N, Scalar(2)), mor(N, 1, 1, {3})) ==
        mor(N, 1, 1, {6}));
  CHECK_THROWS_AS(scalar_mul(f, f), input_error);
}

TEST_CASE("swap is the symmetry permutation") {
  const Mor s = swap_mor(B, Obj{2}, Obj{3});
  CHECK(compose(dagger(s), s) == Mor::identity(B, Obj{6}));
  const Mor f = bmor(2, 2, {1, 1, 0, 1});
  const Mor g = bmor(3, 3, {1, 0, 0, 0, 0, 1, 0, 1, 0});
  CHECK(compose(swap_mor(B, Obj{2}, Obj{3}), tensor(f, g)) ==
        compose(tensor(g, f), swap_mor(B, Obj{2}, Obj{3})));
}

TEST_CASE("point enumeration is basis-first and complete") {
  std::vector<Mor> pts = all_points(B, Obj{2}, 100);
  REQUIRE(pts.size() == 4);
  CHECK(pts[0] == bmor(2, 1, {1, 0}));
  CHECK(pts[1] == bmor(2, 1, {0, 1}));
  // remaining points: zero and the all-ones vector, in odometer order
  CHECK(pts[2] == bmor(2, 1, {0, 0}));
  CHECK(pts[3] == bmor(2, 1, {1, 1}));

  CHECK(all_points(B, Obj{0}, 10).size() == 1);  // the empty point
  CHECK(all_points(three_chain(), Obj{2}, 100).size() == 9);
  CHECK_THROWS_AS(all_points(B, Obj{4}, 3), budget_error);
  CHECK_THROWS_AS(all_points(SemiringDef::nat(), Obj{1}, 10),
                  unsupported_error);
}

TEST_CASE("hom enumeration") {
  CHECK(all_homs(B, Obj{2}, Obj{2}, 1 << 10).size() == 16);
  CHECK_THROWS_AS(all_homs(B, Obj{3}, Obj{3}, 100), budget_error);
}

TEST_CASE("well-pointedness at Boolean dim 2") {
  // if f and g agree on all points x (x) y then f = g
  const std::vector<Mor> pts = all_points(B, Obj{2}, 100);
  const std::vector<Mor> homs = all_homs(B, Obj{2}, Obj{4}, 1 << 10);
  for (const Mor& f : homs)
    for (const Mor& g : homs) {
      if (f == g) continue;
      bool separated = false;
      for (const Mor& x : pts) {
        for (const Mor& y : pts)
          if (compose(f, tensor(x, y)) != compose(g, tensor(x, y))) {
            separated = true;
            break;
          }
        if (separated) break;
      }
      CHECK(separated);
    }
}

TEST_CASE("canonical morphism ordering is a strict weak order") {
  const std::vector<Mor> homs = all_homs(B, Obj{2}, Obj{2}, 100);
  MorLess less;
  for (const Mor& f : homs) {
    CHECK_FALSE(less(f, f));
    for (const Mor& g : homs)
      if (f != g) CHECK(less(f, g) != less(g, f));
  }
}
