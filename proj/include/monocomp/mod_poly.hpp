#ifndef MONOCOMP_MOD_POLY_HPP
#define MONOCOMP_MOD_POLY_HPP

#include "monocomp/arith.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace monocomp {

/* Dense polynomial over Z/pZ for a word-sized prime p (p < 2^63).
 * Coefficients are ascending and always reduced; the zero polynomial has no
 * coefficients.
 */
class ModPoly {
  public:
    ModPoly() = default;
    explicit ModPoly(std::uint64_t p);
    ModPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs);

    static ModPoly constant(std::uint64_t p, std::uint64_t c);
    static ModPoly x(std::uint64_t p);
    static ModPoly monomial(std::uint64_t p, std::uint64_t c, std::size_t deg);

    std::uint64_t modulus() const noexcept { return p_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
    std::uint64_t leading() const { return c_.empty() ? 0 : c_.back(); }
    std::uint64_t coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
    std::vector<std::uint64_t> const& coeffs() const noexcept { return c_; }

    ModPoly& operator+=(ModPoly const& o);
    ModPoly& operator-=(ModPoly const& o);
    ModPoly& operator*=(ModPoly const& o);
    friend ModPoly operator+(ModPoly a, ModPoly const& b) { return a += b; }
    friend ModPoly operator-(ModPoly a, ModPoly const& b) { return a -= b; }
    friend ModPoly operator*(ModPoly a, ModPoly const& b) { return a *= b; }
    ModPoly operator-() const;
    ModPoly scaled(std::uint64_t s) const;

    /// Quotient and remainder; throws ArithmeticError on division by zero.
    std::pair<ModPoly, ModPoly> divmod(ModPoly const& d) const;
    friend ModPoly operator%(ModPoly const& a, ModPoly const& b) { return a.divmod(b).second; }
    friend ModPoly operator/(ModPoly const& a, ModPoly const& b) { return a.divmod(b).first; }

    ModPoly monic() const;
    ModPoly derivative() const;
    std::uint64_t eval(std::uint64_t x) const;

    friend bool operator==(ModPoly const& a, ModPoly const& b) = default;
    /// Canonical order: degree first, then coefficients ascending.
    friend bool canonical_less(ModPoly const& a, ModPoly const& b);

    std::string to_string() const;

  private:
    void trim();
    void require_same(ModPoly const& o) const;

    std::uint64_t p_ = 0;
    std::vector<std::uint64_t> c_;
};

namespace modp {
std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t inv(std::uint64_t a, std::uint64_t p);
}  // namespace modp

/// Monic gcd; gcd(0, 0) = 0. Throws ArithmeticError on modulus mismatch.
ModPoly gcd(ModPoly const& u, ModPoly const& v);
ModPoly mulmod(ModPoly const& a, ModPoly const& b, ModPoly const& m);
ModPoly powmod(ModPoly const& base, Integer const& e, ModPoly const& m);
/// x^e reduced modulo a monic `modulus` of degree >= 1.
ModPoly pow_x(std::uint64_t p, Integer const& e, ModPoly const& modulus);

/// Rabin's irreducibility test.
bool is_irreducible(ModPoly const& u);

struct ModFactor {
    ModPoly g;
    unsigned e = 0;
};

struct ModFactorization {
    std::uint64_t unit = 0;
    std::vector<ModFactor> factors;  // canonical order, monic irreducible

    ModPoly product(std::uint64_t p) const;
    std::string to_string() const;
};

/* Complete factorization: square-free decomposition, distinct-degree
 * splitting, then Cantor-Zassenhaus equal-degree splitting (trace map for
 * p = 2). Deterministic for a fixed seed.
 */
ModFactorization factor(ModPoly const& u, std::uint64_t seed = kDefaultSeed);

/// Square-free parts s_i with u = lc * prod s_i^i (only nonconstant ones).
std::vector<std::pair<ModPoly, unsigned>> squarefree_decomposition(ModPoly const& u);

/// Pairs (product of all irreducible factors of degree d, d) for square-free monic u.
std::vector<std::pair<ModPoly, unsigned>> distinct_degree(ModPoly const& u);

}  // namespace monocomp

#endif  // MONOCOMP_MOD_POLY_HPP
