#include "monocomp/mod_poly.hpp"

#include <doctest.h>

#include <random>

using namespace monocomp;

namespace {

ModPoly random_monic(std::mt19937_64& rng, std::uint64_t p, int deg)
{
    std::vector<std::uint64_t> c(static_cast<std::size_t>(deg) + 1);
    for (auto& x : c)
        x = rng() % p;
    c.back() = 1;
    return ModPoly(p, std::move(c));
}

// Irreducibility by trying every monic divisor of degree <= deg/2.
bool brute_irreducible(ModPoly const& u)
{
    std::uint64_t const p = u.modulus();
    int const n = u.degree();
    for (int d = 1; 2 * d <= n; ++d) {
        std::uint64_t count = 1;
        for (int i = 0; i < d; ++i)
            count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            std::vector<std::uint64_t> c(static_cast<std::size_t>(d) + 1);
            std::uint64_t x = code;
            for (int i = 0; i < d; ++i, x /= p)
                c[static_cast<std::size_t>(i)] = x % p;
            c.back() = 1;
            if ((u % ModPoly(p, c)).is_zero())
                return false;
        }
    }
    return true;
}

}  // namespace

TEST_SUITE("mod_poly")
{
    TEST_CASE("gcd")
    {
        CHECK(gcd(ModPoly(2, {1}), ModPoly(2, {1, 1})).is_one());
        CHECK(gcd(ModPoly(3, {1, 1, 0, 0, 0, 1}), ModPoly(3, {2, 2, 1})).is_one());
        CHECK(gcd(ModPoly(5, {4, 0, 1}), ModPoly(5, {1, 1})) == ModPoly(5, {1, 1}));
        CHECK(gcd(ModPoly(5), ModPoly(5)).is_zero());
        CHECK_THROWS_AS(gcd(ModPoly(3, {1, 1}), ModPoly(5, {1, 1})), ArithmeticError);
    }

    TEST_CASE("modular powers")
    {
        CHECK(powmod(ModPoly::x(3), 5, ModPoly(3, {2, 2, 1})) == ModPoly(3, {0, 2}));
        CHECK(powmod(ModPoly::x(5), 4, ModPoly(5, {1, 0, 1})).is_one());
        CHECK(pow_x(3, 5, ModPoly(3, {2, 2, 1})) == ModPoly(3, {0, 2}));
        Integer const big("1000000000000000000000");
        ModPoly const m(7, {3, 1, 0, 1});
        ModPoly const sq = mulmod(ModPoly::x(7), ModPoly::x(7), m);
        CHECK(powmod(ModPoly::x(7), 2, m) == sq);
        CHECK(pow_x(7, big, m) == powmod(ModPoly::x(7), big, m));
    }

    TEST_CASE("factor examples")
    {
        auto const a = factor(ModPoly(5, {1, 0, 1}));
        REQUIRE(a.factors.size() == 2);
        CHECK(a.factors[0].g == ModPoly(5, {2, 1}));
        CHECK(a.factors[1].g == ModPoly(5, {3, 1}));
        auto const b = factor(ModPoly(3, {2, 0, 0, 2, 0, 0, 1}));
        REQUIRE(b.factors.size() == 1);
        CHECK(b.factors[0].g == ModPoly(3, {2, 2, 1}));
        CHECK(b.factors[0].e == 3);
        CHECK(ModPoly(3, {2, 2, 1}) * ModPoly(3, {2, 2, 1}) * ModPoly(3, {2, 2, 1}) == ModPoly(3, {2, 0, 0, 2, 0, 0, 1}));
        auto const c = factor(ModPoly(2, {1, 0, 1}));  // (x+1)^2
        REQUIRE(c.factors.size() == 1);
        CHECK(c.factors[0].e == 2);
    }

    TEST_CASE("irreducibility against brute force")
    {
        CHECK(is_irreducible(ModPoly(3, {2, 2, 1})));
        std::mt19937_64 rng(3);
        for (std::uint64_t p : {2, 3, 5, 7}) {
            for (int t = 0; t < 60; ++t) {
                int const d = 1 + static_cast<int>(rng() % (p == 2 ? 8 : 5));
                ModPoly const u = random_monic(rng, p, d);
                REQUIRE(is_irreducible(u) == brute_irreducible(u));
            }
        }
    }

    TEST_CASE("factorization recomposes into irreducible factors")
    {
        std::mt19937_64 rng(17);
        for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 13ULL, 101ULL, 65537ULL, 1000000007ULL, 2305843009213693951ULL}) {
            for (int t = 0; t < 25; ++t) {
                ModPoly u = random_monic(rng, p, 1 + static_cast<int>(rng() % 10));
                if (t % 4 == 0)
                    u = u * u * random_monic(rng, p, 2);
                std::uint64_t const lc = 1 + rng() % (p - 1);
                ModPoly const v = u.scaled(lc);
                auto const fac = factor(v, 99);
                REQUIRE(fac.product(p) == v);
                CHECK(fac.unit == lc);
                for (std::size_t i = 0; i < fac.factors.size(); ++i) {
                    CHECK(fac.factors[i].g.leading() == 1);
                    CHECK(is_irreducible(fac.factors[i].g));
                    if (i)
                        CHECK(canonical_less(fac.factors[i - 1].g, fac.factors[i].g));
                }
            }
        }
    }

    TEST_CASE("factorization does not depend on the seed")
    {
        std::mt19937_64 rng(23);
        for (int t = 0; t < 30; ++t) {
            ModPoly const u = random_monic(rng, 1009, 12);
            auto const a = factor(u, 1), b = factor(u, 2);
            REQUIRE(a.factors.size() == b.factors.size());
            for (std::size_t i = 0; i < a.factors.size(); ++i) {
                CHECK(a.factors[i].g == b.factors[i].g);
                CHECK(a.factors[i].e == b.factors[i].e);
            }
        }
    }

    TEST_CASE("square-free and distinct-degree pieces")
    {
        ModPoly const u = ModPoly(5, {1, 1}) * ModPoly(5, {1, 1}) * ModPoly(5, {2, 0, 1});
        auto const sq = squarefree_decomposition(u);
        REQUIRE(sq.size() == 2);
        CHECK(sq[0].second == 1);
        CHECK(sq[1].second == 2);
        auto const dd = distinct_degree(ModPoly(5, {2, 0, 1}) * ModPoly(5, {1, 1}));
        REQUIRE(dd.size() == 2);
        CHECK(dd[0].second == 1);
        CHECK(dd[1].second == 2);
    }
}
