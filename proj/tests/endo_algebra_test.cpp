#include <doctest.h>

#include <algorithm>

#include "hstarcat/endo_algebra.hpp"
#include "test_util.hpp"

using namespace hstarcat;
using namespace hstarcat::testutil;

namespace {
const SemiringPtr B = SemiringDef::boolean();

bool holds(const Subsemialgebra& a, const Mor& f) { return a.contains(f); }

std::vector<Mor> diagonal_matrices() {
  return {bdiag({0, 0}), bdiag({1, 0}), bdiag({0, 1}), bdiag({1, 1})};
}
}  // namespace

TEST_CASE("closure of nothing is {0, id} when unital") {
  const Subsemialgebra a = closure({Mor::identity(B, Obj{2})}, true);
  REQUIRE(a.elements.size() == 2);
  CHECK(holds(a, Mor::zero(B, Obj{2}, Obj{2})));
  CHECK(holds(a, Mor::identity(B, Obj{2})));
}

// Oracle fixed point: starting from diag(1,0) with the identity, the only
// new elements are 0 (scalar action) and id (already present); diag(0,1)
// is not derivable without subtraction, so the closure has 3 elements.
TEST_CASE("closure of diag(1,0), unital, Boolean dim 2") {
  const Subsemialgebra a = closure({bdiag({1, 0})}, true);
  REQUIRE(a.elements.size() == 3);
  CHECK(holds(a, Mor::zero(B, Obj{2}, Obj{2})));
  CHECK(holds(a, bdiag({1, 0})));
  CHECK(holds(a, Mor::identity(B, Obj{2})));
  CHECK_FALSE(holds(a, bdiag({0, 1})));
}

TEST_CASE("closure of the zero morphism alone") {
  const Subsemialgebra a = closure({Mor::zero(B, Obj{2}, Obj{2})}, false);
  REQUIRE(a.elements.size() == 1);
  CHECK(holds(a, Mor::zero(B, Obj{2}, Obj{2})));
}

TEST_CASE("closure is idempotent") {
  const Subsemialgebra a = closure({bmor(2, 2, {0, 1, 1, 0})}, true);
  const Subsemialgebra b = closure(a.elements, true);
  CHECK(a.same_elements(b));
}

TEST_CASE("closure respects its cap") {
  // the full Hom(2,2) is generated by these two over Boolean
  CHECK_THROWS_AS(
      closure({bmor(2, 2, {0, 1, 0, 0}), bmor(2, 2, {0, 0, 1, 0})}, true, 5),
      budget_error);
}

TEST_CASE("commutant of the identity is everything") {
  const Subsemialgebra c = commutant({Mor::identity(B, Obj{2})}, Obj{2}, B);
  CHECK(c.elements.size() == 16);
  CHECK(c.unital);
}

TEST_CASE("commutant of the diagonal idempotents is the diagonal algebra") {
  const Subsemialgebra c =
      commutant({bdiag({1, 0}), bdiag({0, 1})}, Obj{2}, B);
  REQUIRE(c.elements.size() == 4);
  for (const Mor& d : diagonal_matrices()) CHECK(holds(c, d));
}

TEST_CASE("commutant of the empty set is the full hom-set") {
  const Subsemialgebra c = commutant({}, Obj{2}, B);
  CHECK(c.elements.size() == 16);
}

TEST_CASE("diagonal algebra is maximal and von Neumann") {
  Subsemialgebra diag = closure({bdiag({1, 0}), bdiag({0, 1})}, true);
  REQUIRE(diag.elements.size() == 4);
  CHECK(is_maximal(diag));
  CHECK(is_von_neumann(diag));
}

TEST_CASE("{0, id} is von Neumann but not maximal") {
  const Subsemialgebra small = closure({Mor::identity(B, Obj{2})}, true);
  CHECK_FALSE(is_maximal(small));  // commutant is all of Hom(X,X)
  // the double commutant is the Boolean center {0, id} again
  CHECK(is_von_neumann(small));
}

TEST_CASE("double commutant laws on samples") {
  const std::vector<std::vector<Mor>> samples = {
      {bdiag({1, 0})},
      {bmor(2, 2, {0, 1, 1, 0})},
      {bmor(2, 2, {1, 1, 0, 1})},
  };
  for (const auto& gens : samples) {
    const Subsemialgebra a1 = commutant(gens, Obj{2}, B);
    const Subsemialgebra a2 = commutant(a1.elements, Obj{2}, B);
    const Subsemialgebra a3 = commutant(a2.elements, Obj{2}, B);
    // A' = A''' and gens are inside A''
    CHECK(a1.same_elements(a3));
    for (const Mor& g : gens) CHECK(a2.contains(g));
  }
}

TEST_CASE("commutant lemma clauses on random sets") {
  const std::vector<Mor> a = {bdiag({1, 0})};
  const std::vector<Mor> b = {bdiag({1, 0}), bdiag({0, 1})};
  const LemmaReport rep = check_commutant_lemma(a, b, Obj{2}, B);
  CHECK(rep.all_pass());

  // all-commuting set is inside its own commutant
  const std::vector<Mor> comm = {bdiag({1, 0}), bdiag({1, 1})};
  CHECK(all_commute(comm));
  const Subsemialgebra cp = commutant(comm, Obj{2}, B);
  for (const Mor& f : comm) CHECK(cp.contains(f));
}

TEST_CASE("commutant respects its budget") {
  CHECK_THROWS_AS(commutant({Mor::identity(B, Obj{3})}, Obj{3}, B, 100),
                  budget_error);
}

TEST_CASE("subunital idempotents in the diagonal algebra") {
  Subsemialgebra diag = closure({bdiag({1, 0}), bdiag({0, 1})}, true);

  const auto at_id = is_subunital_idempotent(Mor::identity(B, Obj{2}), diag);
  REQUIRE(at_id.has_value());
  CHECK(at_id->complement_q == Mor::zero(B, Obj{2}, Obj{2}));
  CHECK_FALSE(is_primitive(Mor::identity(B, Obj{2}), diag));

  const auto at_p = is_subunital_idempotent(bdiag({1, 0}), diag);
  REQUIRE(at_p.has_value());
  CHECK(at_p->complement_q == bdiag({0, 1}));
  CHECK(is_primitive(bdiag({1, 0}), diag));

  const auto at_zero =
      is_subunital_idempotent(Mor::zero(B, Obj{2}, Obj{2}), diag);
  REQUIRE(at_zero.has_value());
  CHECK(at_zero->complement_q == Mor::identity(B, Obj{2}));

  // swap is not an element of the diagonal algebra at all
  CHECK_THROWS_AS(is_subunital_idempotent(bmor(2, 2, {0, 1, 1, 0}), diag),
                  input_error);
  // a non-idempotent element: none exist among the diagonals, so check a
  // larger algebra containing the swap
  const Subsemialgebra full = closure({bmor(2, 2, {0, 1, 1, 0})}, true);
  CHECK_FALSE(
      is_subunital_idempotent(bmor(2, 2, {0, 1, 1, 0}), full).has_value());
}

TEST_CASE("traced closure derives every element from the generators") {
  const std::vector<Mor> gens = {bdiag({1, 0}), bmor(2, 2, {0, 1, 1, 0})};
  const TracedClosure t = closure_traced(B, Obj{2}, gens, true);
  const Subsemialgebra plain = closure(gens, true);
  CHECK(t.elements.size() == plain.elements.size());
  for (const Mor& f : t.elements) CHECK(plain.contains(f));
  // recompute each derived element from its recorded parents
  for (std::size_t i = 0; i < t.elements.size(); ++i) {
    const Derivation& d = t.how[i];
    switch (d.op) {
      case Derivation::Op::add:
        CHECK(t.elements[i] == add(t.elements[d.a], t.elements[d.b]));
        break;
      case Derivation::Op::comp:
        CHECK(t.elements[i] == compose(t.elements[d.a], t.elements[d.b]));
        break;
      case Derivation::Op::dag:
        CHECK(t.elements[i] == dagger(t.elements[d.a]));
        break;
      case Derivation::Op::smul:
        CHECK(t.elements[i] ==
              scalar_mul(Mor::scalar(B, d.s), t.elements[d.a]));
        break;
      default:
        break;
    }
  }
}
