#ifndef MONOCOMP_INT_POLY_HPP
#define MONOCOMP_INT_POLY_HPP

#include "monocomp/arith.hpp"
#include "monocomp/mod_poly.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace monocomp {

/* Dense univariate polynomial over Z, coefficients in ascending degree.
 * The zero polynomial is the empty sequence and has degree -1.
 */
class IntPoly {
  public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Integer> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly constant(Integer c);
    static IntPoly x();
    static IntPoly monomial(Integer c, std::size_t deg);
    /// x^deg - c
    static IntPoly binomial(std::size_t deg, Integer const& c);

    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    Integer const& leading() const;
    Integer coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Integer(0); }
    std::vector<Integer> const& coeffs() const noexcept { return c_; }

    IntPoly& operator+=(IntPoly const& o);
    IntPoly& operator-=(IntPoly const& o);
    IntPoly& operator*=(IntPoly const& o);
    IntPoly& operator*=(Integer const& s);
    friend IntPoly operator+(IntPoly a, IntPoly const& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, IntPoly const& b) { return a -= b; }
    friend IntPoly operator*(IntPoly const& a, IntPoly const& b);
    friend IntPoly operator*(IntPoly a, Integer const& s) { return a *= s; }
    IntPoly operator-() const;

    IntPoly pow(unsigned long e) const;
    IntPoly derivative() const;
    /// gcd of the coefficients, nonnegative; 0 for the zero polynomial.
    Integer content() const;
    Integer eval(Integer const& x) const;

    friend bool operator==(IntPoly const&, IntPoly const&) = default;

    /// Ascending coefficient list, e.g. "[9, 0, -8, 0, 1]".
    std::string to_string() const;
    /// Inverse of to_string; throws std::invalid_argument on malformed input.
    static IntPoly parse(std::string_view text);

  private:
    void trim();
    std::vector<Integer> c_;
};

/// f(g(x)) by Horner evaluation in Z[x].
IntPoly compose(IntPoly const& f, IntPoly const& g);

/// lc(v)^(deg u - deg v + 1) * u mod v.
IntPoly pseudo_remainder(IntPoly const& u, IntPoly const& v);

/// Division by a monic divisor; throws ArithmeticError if v is not monic.
std::pair<IntPoly, IntPoly> divmod_monic(IntPoly const& u, IntPoly const& v);

/* Resultant by the subresultant pseudo-remainder sequence, which keeps every
 * intermediate exact and the coefficient growth polynomial.
 * Throws ArithmeticError for a zero argument.
 */
Integer resultant(IntPoly const& u, IntPoly const& v);

/// (-1)^(n(n-1)/2) Res(u, u') / lc(u). Throws ArithmeticError for constants.
Integer discriminant(IntPoly const& u);

ModPoly reduce_mod(IntPoly const& u, std::uint64_t p);

/// Representatives in [0, p).
IntPoly lift(ModPoly const& u);

/// Exact quotient by c; throws ArithmeticError("not exactly divisible").
IntPoly div_exact(IntPoly const& u, Integer const& c);

struct ZFactorSearch {
    enum class Outcome { Irreducible, Reducible, GaveUp };
    Outcome outcome = Outcome::GaveUp;
    std::optional<IntPoly> factor;  // proper monic factor when Reducible
    std::uint64_t prime = 0;        // prime whose factorization was lifted
};

/* Irreducibility of a monic f over Z. Factors f modulo a few small primes
 * where it stays square-free, Hensel-lifts the factorization with the fewest
 * factors past the Mignotte bound and tries every recombination of degree at
 * most deg(f)/2. Gives up above `max_factors` modular factors.
 */
ZFactorSearch recombination_search(IntPoly const& f, unsigned max_factors = 16, std::uint64_t seed = kDefaultSeed);

}  // namespace monocomp

#endif  // MONOCOMP_INT_POLY_HPP
