#ifndef HSTARCAT_SPECTRUM_HPP
#define HSTARCAT_SPECTRUM_HPP

#include <vector>

#include "hstarcat/endo_algebra.hpp"
#include "hstarcat/hstar.hpp"

namespace hstarcat {

/// A semialgebra homomorphism A -> S, stored as the scalar assigned to
/// each element of A in the algebra's canonical element order.
struct Character {
  const Subsemialgebra* algebra = nullptr;
  std::vector<Scalar> values;  // values[i] = rho(algebra->elements[i])

  Scalar at(const Mor& f) const;
};

/// Checks every homomorphism law of a character assignment: zero, unit
/// (unital algebras only), additivity, multiplicativity, dagger, scalar
/// action. Returns the first violated law name, or empty on success.
std::string character_violation(const Character& rho);

/// All characters of a finite subsemialgebra, by exhaustive assignment to
/// a greedy minimal generating set, propagation through a traced closure,
/// and full re-verification. Deterministic order (lexicographic on the
/// value vectors).
std::vector<Character> characters(const Subsemialgebra& a,
                                  std::size_t cap = kDefaultBudget);

/// Restriction along an inclusion B of A; throws input_error when B is
/// not a subset of A.
Character restrict_character(const Character& rho, const Subsemialgebra& b);

/// The character induced by evaluating at a set-like point: rho(f) = dagger(alpha)
/// . f . alpha. Verified against every character law before returning;
/// violation throws check_failure.
Character rho_from_setlike(const DaggerAlgebra& alg, const Mor& alpha,
                           const Subsemialgebra& a);

/// All compatible families of characters over the given contexts: one
/// character per context such that whenever context i is a subset of
/// context j, the j-character restricts to the i-character. An empty
/// result over a nonempty context family witnesses contextuality.
std::vector<std::vector<Character>> global_sections(
    const std::vector<Subsemialgebra>& contexts,
    std::size_t cap = kDefaultBudget);

}  // namespace hstarcat

#endif
