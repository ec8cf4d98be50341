#ifndef MONOCOMP_DEDEKIND_HPP
#define MONOCOMP_DEDEKIND_HPP

#include "monocomp/arith.hpp"
#include "monocomp/int_poly.hpp"
#include "monocomp/mod_poly.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace monocomp {

enum class Provenance { Oracle, CaseI, CaseII, CaseIII, CaseIV, CaseV, NotDividingDisc };

std::string_view to_string(Provenance p);

/* Whether a prime p divides the index [Z_K : Z[theta]]. A Divides verdict
 * produced by the oracle carries the offending irreducible factor of f mod p.
 */
struct PrimeIndexVerdict {
    Integer p;
    bool divides = false;
    std::optional<ModPoly> witness;
    Provenance provenance = Provenance::Oracle;
};

/* Dedekind's criterion. f must be monic; irreducibility over Q is the
 * caller's assumption. Factors f mod p, lifts every factor with
 * representatives in [0, p), forms M = (f - prod g_i^e_i) / p exactly, and
 * reports the first repeated factor (canonical order) dividing M mod p.
 */
PrimeIndexVerdict dedekind_test(IntPoly const& f, std::uint64_t p, std::uint64_t seed = kDefaultSeed);

/// f in <p, g>^2, decided through the g-adic expansion of f (g monic).
bool in_ideal_square(IntPoly const& f, IntPoly const& g, Integer const& p);

/// Same verdict as dedekind_test, reached through ideal membership of f in
/// <p, g_i>^2 instead of divisibility of M mod p.
PrimeIndexVerdict dedekind_test_ideal_form(IntPoly const& f, std::uint64_t p, std::uint64_t seed = kDefaultSeed);

struct IndexSupport {
    std::vector<Integer> primes;  // ascending primes dividing the index
    bool complete = true;
};

/// Runs dedekind_test at every prime of disc(f) found within budget.
/// Throws ArithmeticError("not separable") for zero discriminant.
IndexSupport index_support(IntPoly const& f, Budget const& budget = {}, std::uint64_t seed = kDefaultSeed);

/// Largest prime the oracle accepts (moduli must be word-sized).
inline constexpr std::uint64_t kMaxOraclePrime = (std::uint64_t{1} << 62);

}  // namespace monocomp

#endif  // MONOCOMP_DEDEKIND_HPP
