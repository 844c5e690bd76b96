#ifndef HSTARCAT_HSTAR_HPP
#define HSTARCAT_HSTAR_HPP

#include <optional>
#include <vector>

#include "hstarcat/abelian.hpp"
#include "hstarcat/endo_algebra.hpp"
#include "hstarcat/matcat.hpp"

namespace hstarcat {

/// An algebra-coalgebra pair (X, mu) with comultiplication dagger(mu).
/// mu: X (x) X -> X; basis pair (e_i, e_j) sits at column i*dim + j.
struct DaggerAlgebra {
  SemiringPtr sr;
  Obj x;
  Mor mu;

  DaggerAlgebra(SemiringPtr s, Obj obj, Mor m);
};

struct AxiomResult {
  bool pass = false;
  std::string witness;
};

struct AxiomReport {
  AxiomResult associative;   // (A)
  AxiomResult commutative;   // (C)
  AxiomResult special;       // (S)
  AxiomResult unital;        // (U)
  AxiomResult h;             // (H)
  std::optional<Mor> unit;   // witness for (U)
  // basis point index -> partner point y with R_y = dagger(R_{e_i})
  std::vector<std::optional<Mor>> h_partners;

  bool hstar() const {
    return associative.pass && commutative.pass && special.pass && h.pass;
  }
};

struct SetLikeFamily {
  std::vector<Mor> elements;  // nonzero points with dagger(mu).a = a (x) a
  std::vector<Mor> partners;  // partner of elements[i] under (H)
  bool orthonormal = false;
  // partner equals the entrywise star of the element, the typed reading of
  // "alpha-dagger equals alpha-tilde"
  bool partners_match_star = false;

  std::size_t dimension() const { return elements.size(); }
};

/// R_x = mu . (x (x) id): X -> X for a point x: I -> X.
Mor right_mult(const DaggerAlgebra& alg, const Mor& point);

/// The right multiplications of the basis points; generates the commutant
/// defining the von Neumann semialgebra of the algebra.
std::vector<Mor> basis_right_mults(const DaggerAlgebra& alg);

/// Checks (A), (C), (S) directly and searches points for the (U) unit and
/// the (H) partners of the basis points. Over a non-enumerable semiring
/// the caller must supply the candidate points to search.
AxiomReport check_axioms(const DaggerAlgebra& alg,
                         std::size_t cap = kDefaultBudget,
                         const std::vector<Mor>* candidates = nullptr);

/// All nonzero set-like points, with their (H) partners. Throws
/// check_failure when require_orthonormal is set and the family is not
/// orthonormal.
SetLikeFamily set_like_elements(const DaggerAlgebra& alg,
                                bool require_orthonormal,
                                std::size_t cap = kDefaultBudget);

/// Jointly zero-epi test for a family of points. Closed form over positive
/// semirings (supports cover every coordinate); definitional enumeration
/// over copoints otherwise.
bool is_covering(const std::vector<Mor>& points, Obj x, std::size_t cap);

/// The commutant of the basis right multiplications: by bilinearity this
/// equals the commutant of all of R(mu).
Subsemialgebra generated_vn(const DaggerAlgebra& alg,
                            std::size_t budget = kDefaultBudget);

/// Boolean-semiring algebra whose multiplication is the disjoint union of
/// the given abelian group tables. Throws input_error with the failed
/// axiom when a table is not an abelian group.
DaggerAlgebra make_rel_group_algebra(const std::vector<GroupTable>& groups);

}  // namespace hstarcat

#endif
