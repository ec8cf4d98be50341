#ifndef MONOCOMP_COMPOSITION_HPP
#define MONOCOMP_COMPOSITION_HPP

#include "monocomp/arith.hpp"
#include "monocomp/dedekind.hpp"
#include "monocomp/int_poly.hpp"
#include "monocomp/mod_poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace monocomp {

/* F(x) = (x^m - b)^n - a with m >= 1, n >= 2, the composition f(g(x)) of
 * f = x^n - a and g = x^m - b.
 */
struct CompositionInstance {
    long m = 1;
    long n = 2;
    Integer a = 1;
    Integer b = 0;

    /// Throws ArithmeticError when F would be degenerate (a == 0, or
    /// F(0) == 0 with m >= 2, which makes F inseparable).
    void validate() const;
    /// F(0) = (-b)^n - a.
    Integer value_at_zero() const;
    IntPoly outer() const;  // x^n - a
    IntPoly inner() const;  // x^m - b
    IntPoly composed() const;
    std::string to_string() const;

    friend bool operator==(CompositionInstance const&, CompositionInstance const&) = default;
};

/// Largest degree m*n accepted by validate().
inline constexpr long kMaxCompositionDegree = 1L << 16;

struct DiscFormula {
    Integer magnitude;
    int printed_sign = 1;  // sign of the closed form exactly as printed
};

/// |D_F| = (mn)^(mn) |a|^(m(n-1)) |(-b)^n - a|^(m-1).
DiscFormula disc_formula(CompositionInstance const& inst);

enum class Case { I, II, III, IV, V };

std::string_view to_string(Case c);
Provenance provenance_of(Case c);

/// Case plus the local decomposition m = p^j s, n = p^k s' (p coprime to s s').
struct CaseTag {
    Case kind = Case::I;
    unsigned j = 0;
    unsigned k = 0;
    long s = 1;
    long s_prime = 1;
};

/// Throws ArithmeticError("prime does not divide discriminant") if p does not divide D_F.
CaseTag classify_prime(CompositionInstance const& inst, Integer const& p);

struct TestPolynomials {
    ModPoly t1;
    ModPoly t2;
};

/// (1/p)[a^(p^(j+k)) - a - n b (x^m - b)^(n-1)] and x^(s s') - a, both mod p.
TestPolynomials case2_testpoly(CompositionInstance const& inst, std::uint64_t p);

/* (1/p)[a^(p^j) - a + n sum_{i<p} C(p^j, i p^(j-1)) (x^s - b)^(n p^j - i p^(j-1)) b^i
 *       + n (b^(p^j) - b)] and (x^s - b)^n - a, both mod p.
 * This is the commonly quoted form. It drops the factor (x^s - b)^((n-1) p^j)
 * from the last term, so its gcd with t2 can miss a common factor; see
 * case4_exact_testpoly.
 */
TestPolynomials case4_testpoly(CompositionInstance const& inst, std::uint64_t p);

/* t1 = (F - h^(p^j)) / p mod p up to multiples of h, with h = (x^s - b)^n - a:
 * (1/p)[a^(p^j) - a + n sum_{i<p} C(p^j, i p^(j-1)) (x^s - b)^(n p^j - i p^(j-1)) b^(i p^(j-1))
 *       + n (x^s - b)^((n-1) p^j) (b^(p^j) - b)].
 * prime_index_test decides case IV with this pair.
 */
TestPolynomials case4_exact_testpoly(CompositionInstance const& inst, std::uint64_t p);

/* Fast decision of p | [Z_K : Z[theta]] for a prime p dividing D_F. Only
 * cases II and IV need polynomial arithmetic; those primes divide mn and are
 * therefore small. Witnesses are attached when p fits a machine word.
 */
PrimeIndexVerdict prime_index_test(CompositionInstance const& inst, Integer const& p,
                                   std::uint64_t seed = kDefaultSeed);

struct BinomialIrreducibility {
    bool irreducible = true;
    unsigned long witness_exponent = 0;  // prime q with a a q-th power, or 4
    bool quartic_form = false;           // a == -4 c^4
    std::optional<IntPoly> factor;       // proper factor of x^n - a
};

/// x^n - a is irreducible over Q unless a is a q-th power for a prime q | n,
/// or 4 | n and a = -4c^4.
BinomialIrreducibility binom_irreducible(long n, Integer const& a);

struct BinomMonogenicity {
    enum class Kind { Yes, No, Unknown };
    Kind kind = Kind::Unknown;
    std::string reason;
};

std::string_view to_string(BinomMonogenicity::Kind k);

/// x^n - b monogenic iff irreducible, b square-free, and p^2 does not divide
/// b^p - b for every prime p | n.
BinomMonogenicity binom_monogenic(long n, Integer const& b, Budget const& budget = {});

enum class Irreducibility { Proven, Disproven, Assumed, Unknown };

std::string_view to_string(Irreducibility i);

struct IrreducibilityResult {
    Irreducibility status = Irreducibility::Unknown;
    std::string method;             // how Proven/Disproven was reached
    std::optional<IntPoly> witness; // proper factor of F when Disproven
};

/* Disproven when x^n - a is reducible (a factor h of it gives h(g(x)) | F),
 * or b == 0 and x^(mn) - a is reducible. Proven by: b == 0 or m == 1 with an
 * irreducible binomial, Eisenstein at a prime of a, F irreducible mod a prime
 * q not dividing D_F, or factor-degree patterns mod several such primes
 * admitting no proper subset sum in common. `effort` bounds the primes tried.
 */
IrreducibilityResult comp_irreducible(CompositionInstance const& inst, unsigned effort = 40,
                                      std::uint64_t seed = kDefaultSeed);

struct ReportOptions {
    Budget budget;
    std::uint64_t seed = kDefaultSeed;
    bool assume_irreducible = false;
    /// Recompute the discriminant from F and rerun every prime through the
    /// Dedekind oracle.
    bool verify = false;
    unsigned irreducibility_effort = 40;
};

struct PrimeEntry {
    PrimeIndexVerdict verdict;
    CaseTag tag;
    std::optional<bool> oracle_divides;
};

struct Verdict {
    enum class Kind { Monogenic, NotMonogenic, Unknown };
    Kind kind = Kind::Unknown;
    std::optional<Integer> prime;
    std::optional<Case> case_tag;
    std::string reason;
};

std::string_view to_string(Verdict::Kind k);

struct MonogenicityReport {
    CompositionInstance instance;
    IrreducibilityResult irreducibility;
    Integer disc_magnitude;
    int disc_formula_sign = 1;
    std::optional<int> disc_oracle_sign;
    PrimeFactorization disc_factorization;  // of |D_F|, assembled piecewise
    PrimeFactorization a_factorization;
    PrimeFactorization zero_value_factorization;  // of F(0) = (-b)^n - a
    std::vector<PrimeEntry> per_prime;            // ascending primes
    Verdict verdict;
    /// Square-freeness shortcut when rad(mn) | rad(a); nullopt otherwise.
    std::optional<bool> shortcut_monogenic;
    bool oracle_mismatch = false;

    bool sign_mismatch() const { return disc_oracle_sign && *disc_oracle_sign != disc_formula_sign; }
    bool has_unknown() const;
};

MonogenicityReport monogenic_report(CompositionInstance const& inst, ReportOptions const& opts = {});

struct PairResult {
    enum class Kind { BothMonogenic, FailF, FailComposition, Unknown };
    Kind kind = Kind::Unknown;
    std::string reason;
};

std::string_view to_string(PairResult::Kind k);

/// True when every prime of m divides a*n (precondition of pair_monogenic).
bool pair_criterion_applies(CompositionInstance const& inst);

/* Monogenicity of both x^n - a and F under rad(m) | rad(an). Throws
 * ArithmeticError("corollary inapplicable") otherwise. The result is
 * cross-checked against binom_monogenic and monogenic_report; disagreement
 * throws std::logic_error.
 */
PairResult pair_monogenic(CompositionInstance const& inst, ReportOptions const& opts = {});

}  // namespace monocomp

#endif  // MONOCOMP_COMPOSITION_HPP
