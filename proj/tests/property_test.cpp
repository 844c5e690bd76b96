#include <doctest.h>

#include <random>
#include <vector>

#include "hstarcat/endo_algebra.hpp"
#include "test_util.hpp"

using namespace hstarcat;
using namespace hstarcat::testutil;

namespace {

constexpr int kSamples = 1000;

struct Sampler {
  std::mt19937 rng{20260823};

  Scalar scalar(const SemiringPtr& sr) {
    if (sr->enumerable()) {
      std::uniform_int_distribution<std::size_t> d(0, sr->size() - 1);
      return sr->element(d(rng));
    }
    std::uniform_int_distribution<int> d(0, 20);
    return Scalar(d(rng));
  }

  Mor mor_of(const SemiringPtr& sr, std::size_t cod, std::size_t dom) {
    std::vector<Scalar> e;
    e.reserve(cod * dom);
    for (std::size_t i = 0; i < cod * dom; ++i) e.push_back(scalar(sr));
    return Mor(sr, Obj{cod}, Obj{dom}, std::move(e));
  }
};

std::vector<SemiringPtr> sample_semirings() {
  return {SemiringDef::boolean(), SemiringDef::nat(), three_chain()};
}

}  // namespace

TEST_CASE("semiring axioms hold on sampled triples") {
  Sampler s;
  for (const SemiringPtr& sr : sample_semirings()) {
    for (int i = 0; i < kSamples; ++i) {
      const Scalar a = s.scalar(sr), b = s.scalar(sr), c = s.scalar(sr);
      CHECK(sr->add(sr->add(a, b), c) == sr->add(a, sr->add(b, c)));
      CHECK(sr->add(a, b) == sr->add(b, a));
      CHECK(sr->add(a, sr->zero()) == a);
      CHECK(sr->mul(sr->mul(a, b), c) == sr->mul(a, sr->mul(b, c)));
      CHECK(sr->mul(a, b) == sr->mul(b, a));
      CHECK(sr->mul(a, sr->one()) == a);
      CHECK(sr->mul(a, sr->add(b, c)) == sr->add(sr->mul(a, b), sr->mul(a, c)));
      CHECK(sr->mul(sr->zero(), a) == sr->zero());
      CHECK(sr->star(sr->star(a)) == a);
      CHECK(sr->star(sr->add(a, b)) == sr->add(sr->star(a), sr->star(b)));
      CHECK(sr->star(sr->mul(a, b)) == sr->mul(sr->star(b), sr->star(a)));
      CHECK(sr->star(sr->one()) == sr->one());
    }
  }
}

TEST_CASE("Hom(X,Y) is an S-semimodule on sampled instances") {
  Sampler s;
  for (const SemiringPtr& sr : sample_semirings()) {
    for (int i = 0; i < kSamples; ++i) {
      const Mor f = s.mor_of(sr, 2, 3), g = s.mor_of(sr, 2, 3);
      const Mor sm = Mor::scalar(sr, s.scalar(sr));
      const Mor tm = Mor::scalar(sr, s.scalar(sr));
      // the five semimodule clauses
      CHECK(scalar_mul(sm, add(f, g)) == add(scalar_mul(sm, f), scalar_mul(sm, g)));
      CHECK(scalar_mul(add(sm, tm), f) == add(scalar_mul(sm, f), scalar_mul(tm, f)));
      CHECK(scalar_mul(compose(sm, tm), f) == scalar_mul(sm, scalar_mul(tm, f)));
      CHECK(scalar_mul(Mor::scalar(sr, sr->zero()), f) ==
            Mor::zero(sr, f.cod(), f.dom()));
      CHECK(scalar_mul(Mor::scalar(sr, sr->one()), f) == f);
      // commutative monoid under add
      CHECK(add(f, g) == add(g, f));
      CHECK(add(f, Mor::zero(sr, f.cod(), f.dom())) == f);
    }
  }
}

TEST_CASE("Hom(I,I) is a commutative *-semiring on sampled instances") {
  Sampler s;
  for (const SemiringPtr& sr : sample_semirings()) {
    for (int i = 0; i < kSamples; ++i) {
      const Mor a = s.mor_of(sr, 1, 1), b = s.mor_of(sr, 1, 1),
                c = s.mor_of(sr, 1, 1);
      CHECK(compose(a, b) == compose(b, a));
      CHECK(compose(a, compose(b, c)) == compose(compose(a, b), c));
      CHECK(compose(a, add(b, c)) == add(compose(a, b), compose(a, c)));
      CHECK(compose(a, Mor::scalar(sr, sr->one())) == a);
      CHECK(compose(a, Mor::scalar(sr, sr->zero())) ==
            Mor::scalar(sr, sr->zero()));
      CHECK(dagger(dagger(a)) == a);
      CHECK(dagger(compose(a, b)) == compose(dagger(b), dagger(a)));
      CHECK(dagger(add(a, b)) == add(dagger(a), dagger(b)));
    }
  }
}

TEST_CASE("Hom(X,X) is an S*-semialgebra on sampled instances") {
  Sampler s;
  for (const SemiringPtr& sr : sample_semirings()) {
    for (int i = 0; i < kSamples; ++i) {
      const Mor f = s.mor_of(sr, 2, 2), g = s.mor_of(sr, 2, 2),
                h = s.mor_of(sr, 2, 2);
      const Mor sm = Mor::scalar(sr, s.scalar(sr));
      CHECK(compose(f, compose(g, h)) == compose(compose(f, g), h));
      CHECK(compose(f, add(g, h)) == add(compose(f, g), compose(f, h)));
      CHECK(compose(add(g, h), f) == add(compose(g, f), compose(h, f)));
      CHECK(compose(scalar_mul(sm, f), g) == scalar_mul(sm, compose(f, g)));
      CHECK(compose(f, scalar_mul(sm, g)) == scalar_mul(sm, compose(f, g)));
      CHECK(dagger(compose(f, g)) == compose(dagger(g), dagger(f)));
      CHECK(dagger(scalar_mul(sm, f)) ==
            scalar_mul(Mor::scalar(sr, sr->star(sm.at(0, 0))), dagger(f)));
    }
  }
}

TEST_CASE("commutant laws hold on sampled Boolean subsets") {
  Sampler s;
  const SemiringPtr B = SemiringDef::boolean();
  const std::vector<Mor> homs = all_homs(B, Obj{2}, Obj{2}, 100);
  std::uniform_int_distribution<std::size_t> pick(0, homs.size() - 1);
  for (int i = 0; i < kSamples; ++i) {
    std::vector<Mor> a{homs[pick(s.rng)]};
    std::vector<Mor> b = a;
    b.push_back(homs[pick(s.rng)]);  // A subset of B

    const Subsemialgebra ap = commutant(a, Obj{2}, B);
    const Subsemialgebra bp = commutant(b, Obj{2}, B);
    // antitone
    CHECK(bp.subset_of(ap));
    // unital dagger-closed subsemialgebra when the input is dagger-closed
    CHECK(ap.contains(Mor::identity(B, Obj{2})));
    CHECK(ap.contains(Mor::zero(B, Obj{2}, Obj{2})));
    std::vector<Mor> sym = a;
    sym.push_back(dagger(a[0]));
    const Subsemialgebra sp = commutant(sym, Obj{2}, B);
    for (const Mor& f : sp.elements) CHECK(sp.contains(dagger(f)));
    // closure of the commutant under the operations
    const Mor f = ap.elements[pick(s.rng) % ap.elements.size()];
    const Mor g = ap.elements[pick(s.rng) % ap.elements.size()];
    CHECK(ap.contains(add(f, g)));
    CHECK(ap.contains(compose(f, g)));
    // B commutes with itself iff B is inside B'
    const bool commuting = all_commute(b);
    bool inside = true;
    for (const Mor& x : b)
      if (!bp.contains(x)) inside = false;
    CHECK(commuting == inside);
  }
}
