#include "monocomp/dedekind.hpp"

namespace monocomp {

std::string_view to_string(Provenance p)
{
    switch (p) {
    case Provenance::Oracle: return "oracle";
    case Provenance::CaseI: return "I";
    case Provenance::CaseII: return "II";
    case Provenance::CaseIII: return "III";
    case Provenance::CaseIV: return "IV";
    case Provenance::CaseV: return "V";
    case Provenance::NotDividingDisc: return "not-dividing-disc";
    }
    return "?";
}

namespace {

void require_monic_prime(IntPoly const& f, std::uint64_t p)
{
    if (!f.is_monic())
        throw ArithmeticError("Dedekind criterion needs a monic polynomial");
    if (f.degree() < 1)
        throw ArithmeticError("Dedekind criterion needs degree at least 1");
    if (p >= kMaxOraclePrime || !is_probable_prime(Integer(static_cast<unsigned long>(p))))
        throw ArithmeticError("modulus " + std::to_string(p) + " is not a supported prime");
}

}  // namespace

PrimeIndexVerdict dedekind_test(IntPoly const& f, std::uint64_t p, std::uint64_t seed)
{
    require_monic_prime(f, p);
    Integer const P(static_cast<unsigned long>(p));
    ModFactorization const fac = factor(reduce_mod(f, p), seed);

    IntPoly prod = IntPoly::constant(1);
    for (auto const& [g, e] : fac.factors)
        prod *= lift(g).pow(e);
    ModPoly const M = reduce_mod(div_exact(f - prod, P), p);

    PrimeIndexVerdict v{P, false, std::nullopt, Provenance::Oracle};
    for (auto const& [g, e] : fac.factors) {
        if (e < 2)
            continue;
        if ((M % g).is_zero()) {
            v.divides = true;
            v.witness = g;
            break;
        }
    }
    return v;
}

bool in_ideal_square(IntPoly const& f, IntPoly const& g, Integer const& p)
{
    // f = c0 + c1*g + g^2*(...) with deg c0, c1 < deg g; membership in
    // <p^2, p g, g^2> holds exactly when p^2 | c0 and p | c1.
    auto [q, c0] = divmod_monic(f, g);
    auto c1 = divmod_monic(q, g).second;
    Integer const p2 = p * p;
    for (auto const& c : c0.coeffs())
        if (!mpz_divisible_p(c.get_mpz_t(), p2.get_mpz_t()))
            return false;
    for (auto const& c : c1.coeffs())
        if (!mpz_divisible_p(c.get_mpz_t(), p.get_mpz_t()))
            return false;
    return true;
}

PrimeIndexVerdict dedekind_test_ideal_form(IntPoly const& f, std::uint64_t p, std::uint64_t seed)
{
    require_monic_prime(f, p);
    Integer const P(static_cast<unsigned long>(p));
    ModFactorization const fac = factor(reduce_mod(f, p), seed);
    PrimeIndexVerdict v{P, false, std::nullopt, Provenance::Oracle};
    for (auto const& [g, e] : fac.factors) {
        if (e < 2)
            continue;
        if (in_ideal_square(f, lift(g), P)) {
            v.divides = true;
            v.witness = g;
            break;
        }
    }
    return v;
}

IndexSupport index_support(IntPoly const& f, Budget const& budget, std::uint64_t seed)
{
    if (f.degree() < 2)
        throw ArithmeticError("index_support needs degree at least 2");
    Integer const d = discriminant(f);
    if (d == 0)
        throw ArithmeticError("not separable");
    PrimeFactorization const fac = factor_bounded(d, budget);
    IndexSupport out;
    out.complete = fac.complete;
    for (auto const& [p, e] : fac.factors) {
        if (!p.fits_ulong_p() || p.get_ui() >= kMaxOraclePrime) {
            out.complete = false;
            continue;
        }
        if (dedekind_test(f, p.get_ui(), seed).divides)
            out.primes.push_back(p);
    }
    return out;
}

}  // namespace monocomp
