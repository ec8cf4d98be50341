#ifndef MONOCOMP_ARITH_HPP
#define MONOCOMP_ARITH_HPP

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace monocomp {

using Integer = mpz_class;

inline constexpr std::uint64_t kDefaultSeed = 0x6d6f6e6f636f6d70ULL;

/* Effort limits for integer factorization. Every randomized step is driven
 * by `seed`, so results are reproducible for a fixed budget.
 */
struct Budget {
    std::uint64_t trial_bound = 1'000'000;
    std::uint64_t rho_iterations = std::uint64_t{1} << 22;
    unsigned mr_rounds = 24;
    std::uint64_t seed = kDefaultSeed;

    /// "low", "default" or "high"; throws std::invalid_argument otherwise.
    static Budget from_level(std::string_view level);
};

class ArithmeticError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

struct PrimePower {
    Integer prime;
    unsigned exponent = 0;

    friend bool operator==(PrimePower const&, PrimePower const&) = default;
};

/* sign * cofactor * prod(p^e) == input. Factors are distinct primes in
 * increasing order; `cofactor` holds whatever the budget could not split.
 */
struct PrimeFactorization {
    int sign = 1;
    std::vector<PrimePower> factors;
    Integer cofactor = 1;
    bool complete = true;

    Integer value() const;
    /// Product of the distinct primes found so far.
    Integer radical_of_factored() const;
    std::vector<Integer> primes() const;
    std::string to_string() const;
};

/* Thrown by operations that need a complete factorization (radical) when the
 * budget runs out. Carries what was found.
 */
class IncompleteFactorization : public std::runtime_error {
  public:
    explicit IncompleteFactorization(PrimeFactorization partial);
    PrimeFactorization const& partial() const noexcept { return partial_; }

  private:
    PrimeFactorization partial_;
};

struct SquareFreeClass {
    enum class Kind { SquareFree, NotSquareFree, Unknown };

    Kind kind = Kind::SquareFree;
    Integer witness;   // prime with witness^2 | z, when NotSquareFree
    Integer cofactor;  // unresolved part, when Unknown

    static SquareFreeClass square_free() { return {}; }
    static SquareFreeClass not_square_free(Integer p) { return {Kind::NotSquareFree, std::move(p), 0}; }
    static SquareFreeClass unknown(Integer c) { return {Kind::Unknown, 0, std::move(c)}; }

    bool is_square_free() const { return kind == Kind::SquareFree; }
    bool is_unknown() const { return kind == Kind::Unknown; }
    std::string to_string() const;
};

/// Largest k with p^k | z. Throws ArithmeticError for z == 0.
unsigned p_valuation(Integer const& p, Integer const& z);

/// v_p(C(p^j, i)) = j - v_p(i) for 1 <= i < p^j.
unsigned binom_valuation(Integer const& p, unsigned j, Integer const& i);

/// Product of distinct primes of |z|; throws IncompleteFactorization if the
/// budget is exhausted before |z| is fully split.
Integer radical(Integer const& z, Budget const& budget = {});

/* Miller-Rabin. With the first thirteen prime bases the answer is exact for
 * z < 3317044064679887385961981; above that `rounds` extra seeded random
 * bases are tried.
 */
bool is_probable_prime(Integer const& z, unsigned rounds = 24, std::uint64_t seed = kDefaultSeed);

/// Trial division to budget.trial_bound, then perfect-power detection and
/// Brent's variant of Pollard rho on what remains.
PrimeFactorization factor_bounded(Integer const& z, Budget const& budget = {});

SquareFreeClass squarefree_class(Integer const& z, Budget const& budget = {});

/// Square-free classification from an existing factor_bounded result
/// produced with the same trial bound.
SquareFreeClass squarefree_from(PrimeFactorization const& f, Budget const& budget = {});

/// Sieve containing at least every prime below `bound`, shared between
/// callers. Safe to call concurrently.
std::shared_ptr<std::vector<std::uint32_t> const> primes_below(std::uint64_t bound);

/// Integer r with r^k == z if one exists.
bool exact_root(Integer const& z, unsigned long k, Integer& root);

}  // namespace monocomp

#endif  // MONOCOMP_ARITH_HPP
