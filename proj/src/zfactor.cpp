// Irreducibility over Z by Hensel lifting and exhaustive recombination.

#include "monocomp/int_poly.hpp"

#include <algorithm>
#include <numeric>

namespace monocomp {

namespace {

IntPoly reduce(IntPoly const& u, Integer const& M)
{
    std::vector<Integer> c(u.coeffs());
    for (auto& x : c)
        mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), M.get_mpz_t());
    return IntPoly(std::move(c));
}

IntPoly symmetric(IntPoly const& u, Integer const& M)
{
    Integer const half = M / 2;
    std::vector<Integer> c(u.coeffs());
    for (auto& x : c) {
        mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), M.get_mpz_t());
        if (x > half)
            x -= M;
    }
    return IntPoly(std::move(c));
}

// s, t with s g + t h = 1 for coprime g, h over F_p.
std::pair<ModPoly, ModPoly> bezout(ModPoly const& g, ModPoly const& h)
{
    std::uint64_t const p = g.modulus();
    ModPoly r0 = g, r1 = h;
    ModPoly s0 = ModPoly::constant(p, 1), s1(p);
    ModPoly t0(p), t1 = ModPoly::constant(p, 1);
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        ModPoly s2 = s0 - q * s1;
        ModPoly t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.degree() != 0)
        throw ArithmeticError("bezout: factors not coprime");
    std::uint64_t const inv = modp::inv(r0.coeff(0), p);
    return {s0.scaled(inv), t0.scaled(inv)};
}

struct Lifted {
    IntPoly g, h;
};

// f = g h mod p^(2^steps) from f = g h mod p, with g, h monic and coprime mod p.
Lifted lift_pair(IntPoly const& f, ModPoly const& g0, ModPoly const& h0, unsigned steps)
{
    auto const [s0, t0] = bezout(g0, h0);
    IntPoly g = lift(g0), h = lift(h0), s = lift(s0), t = lift(t0);
    Integer M = g0.modulus();
    IntPoly const one = IntPoly::constant(1);
    for (unsigned i = 0; i < steps; ++i) {
        M *= M;
        IntPoly const e = reduce(f - g * h, M);
        auto const [q, r] = divmod_monic(reduce(s * e, M), h);
        IntPoly const g1 = reduce(g + t * e + q * g, M);
        IntPoly const h1 = reduce(h + r, M);
        IntPoly const b = reduce(s * g1 + t * h1 - one, M);
        auto const [c, d] = divmod_monic(reduce(s * b, M), h1);
        s = reduce(s - d, M);
        t = reduce(t - t * b - c * g1, M);
        g = g1;
        h = h1;
    }
    return {g, h};
}

ModPoly product(std::vector<ModPoly> const& v, std::size_t lo, std::size_t hi, std::uint64_t p)
{
    ModPoly out = ModPoly::constant(p, 1);
    for (std::size_t i = lo; i < hi; ++i)
        out *= v[i];
    return out;
}

void lift_tree(IntPoly const& f, std::vector<ModPoly> const& factors, std::size_t lo, std::size_t hi, unsigned steps,
               std::vector<IntPoly>& out)
{
    if (hi - lo == 1) {
        out[lo] = f;
        return;
    }
    std::size_t const mid = lo + (hi - lo) / 2;
    std::uint64_t const p = factors[lo].modulus();
    Lifted const l = lift_pair(f, product(factors, lo, mid, p), product(factors, mid, hi, p), steps);
    lift_tree(l.g, factors, lo, mid, steps, out);
    lift_tree(l.h, factors, mid, hi, steps, out);
}

Integer norm_bound(IntPoly const& f)
{
    Integer sq = 0;
    for (auto const& c : f.coeffs())
        sq += c * c;
    Integer root = sqrt(sq) + 1;
    Integer bound;
    mpz_mul_2exp(bound.get_mpz_t(), root.get_mpz_t(), static_cast<mp_bitcnt_t>(f.degree()));
    return bound;
}

}  // namespace

ZFactorSearch recombination_search(IntPoly const& f, unsigned max_factors, std::uint64_t seed)
{
    ZFactorSearch out;
    if (!f.is_monic() || f.degree() < 1)
        throw ArithmeticError("recombination_search needs a monic nonconstant polynomial");
    int const N = f.degree();
    if (N == 1) {
        out.outcome = ZFactorSearch::Outcome::Irreducible;
        return out;
    }
    if (f.coeff(0) == 0) {
        out.outcome = ZFactorSearch::Outcome::Reducible;
        out.factor = IntPoly::x();
        return out;
    }

    // Several primes with f square-free mod q: intersect the attainable factor
    // degrees and keep the prime with the fewest factors for lifting.
    std::vector<char> possible(static_cast<std::size_t>(N) + 1, 1);
    std::optional<ModFactorization> best;
    std::uint64_t best_prime = 0;
    unsigned good = 0;
    auto const primes = primes_below(1 << 12);
    for (std::uint32_t q : *primes) {
        if (good >= 6)
            break;
        ModPoly const fq = reduce_mod(f, q);
        if (gcd(fq, fq.derivative()).degree() != 0)
            continue;
        ++good;
        ModFactorization fac = factor(fq, seed);
        std::vector<char> sums(possible.size(), 0);
        sums[0] = 1;
        for (auto const& [g, e] : fac.factors)
            for (std::size_t k = possible.size() - 1; k >= static_cast<std::size_t>(g.degree()); --k)
                if (sums[k - static_cast<std::size_t>(g.degree())])
                    sums[k] = 1;
        for (std::size_t k = 0; k < possible.size(); ++k)
            possible[k] = possible[k] && sums[k];
        if (!best || fac.factors.size() < best->factors.size()) {
            best = std::move(fac);
            best_prime = q;
        }
    }
    bool proper = false;
    for (int k = 1; k < N; ++k)
        proper = proper || possible[static_cast<std::size_t>(k)];
    if (best && !proper) {
        out.outcome = ZFactorSearch::Outcome::Irreducible;
        out.prime = best_prime;
        return out;
    }
    if (!best || best->factors.size() > max_factors)
        return out;

    std::vector<ModPoly> mods;
    for (auto const& [g, e] : best->factors)
        mods.push_back(g);
    std::size_t const r = mods.size();
    out.prime = best_prime;

    Integer const target = 2 * norm_bound(f);
    Integer M = best_prime;
    unsigned steps = 0;
    while (M <= target) {
        M *= M;
        ++steps;
    }
    std::vector<IntPoly> lifted(r);
    lift_tree(f, mods, 0, r, steps, lifted);

    // Any monic factor of degree <= N/2 reduces to a product of a subset of
    // the modular factors, and its coefficients are below M/2.
    Integer const f0 = f.coeff(0);
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << r); ++mask) {
        int deg = 0;
        Integer c0 = 1;
        for (std::size_t i = 0; i < r; ++i)
            if (mask >> i & 1) {
                deg += lifted[i].degree();
                c0 = c0 * lifted[i].coeff(0) % M;
            }
        if (2 * deg > N || !possible[static_cast<std::size_t>(deg)])
            continue;
        mpz_fdiv_r(c0.get_mpz_t(), c0.get_mpz_t(), M.get_mpz_t());
        if (c0 > M / 2)
            c0 -= M;
        if (c0 == 0 || f0 % c0 != 0)
            continue;
        IntPoly cand = IntPoly::constant(1);
        for (std::size_t i = 0; i < r; ++i)
            if (mask >> i & 1)
                cand = reduce(cand * lifted[i], M);
        cand = symmetric(cand, M);
        if (divmod_monic(f, cand).second.is_zero()) {
            out.outcome = ZFactorSearch::Outcome::Reducible;
            out.factor = std::move(cand);
            return out;
        }
    }
    out.outcome = ZFactorSearch::Outcome::Irreducible;
    return out;
}

}  // namespace monocomp
