#include "monocomp/arith.hpp"

#include <doctest.h>

#include <random>

using namespace monocomp;

namespace {

unsigned naive_valuation(long p, Integer z)
{
    unsigned k = 0;
    while (z % p == 0) {
        z /= p;
        ++k;
    }
    return k;
}

bool naive_prime(unsigned long z)
{
    if (z < 2)
        return false;
    for (unsigned long d = 2; d * d <= z; ++d)
        if (z % d == 0)
            return false;
    return true;
}

Integer binomial(unsigned long n, unsigned long k)
{
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace

TEST_SUITE("arith")
{
    TEST_CASE("p_valuation")
    {
        CHECK(p_valuation(2, 12) == 2);
        CHECK(p_valuation(3, 27) == 3);
        CHECK(p_valuation(5, 7) == 0);
        CHECK(p_valuation(2, -1024) == 10);
        CHECK_THROWS_AS(p_valuation(3, 0), ArithmeticError);
        CHECK_THROWS_WITH(p_valuation(3, 0), "valuation of zero undefined");
    }

    TEST_CASE("binom_valuation matches direct binomial coefficients")
    {
        CHECK(binom_valuation(3, 1, 1) == 1);
        CHECK(binom_valuation(2, 2, 2) == 1);
        CHECK(binom_valuation(5, 1, 4) == 1);
        CHECK(naive_valuation(2, binomial(4, 2)) == 1);
        for (long p : {2, 3, 5, 7})
            for (unsigned j = 1; j <= 3; ++j) {
                unsigned long pj = 1;
                for (unsigned t = 0; t < j; ++t)
                    pj *= static_cast<unsigned long>(p);
                for (unsigned long i = 1; i < pj; ++i)
                    REQUIRE(binom_valuation(p, j, Integer(i)) == naive_valuation(p, binomial(pj, i)));
                CHECK_THROWS(binom_valuation(p, j, Integer(pj)));
                CHECK_THROWS(binom_valuation(p, j, Integer(0)));
            }
    }

    TEST_CASE("valuation of a^(p^s - 1) - 1 does not depend on s")
    {
        // Powers are taken modulo p^40; every valuation seen here is far below that.
        for (unsigned long p = 2; p <= 50; ++p) {
            if (!naive_prime(p))
                continue;
            Integer const mod = [&] {
                Integer r;
                mpz_ui_pow_ui(r.get_mpz_t(), p, 40);
                return r;
            }();
            for (long a = 2; a <= 50; ++a) {
                if (a % static_cast<long>(p) == 0)
                    continue;
                Integer const base = Integer(a);
                Integer direct;
                mpz_pow_ui(direct.get_mpz_t(), base.get_mpz_t(), p - 1);
                unsigned const v1 = p_valuation(Integer(p), direct - 1);
                Integer ps = p;
                for (unsigned s = 1; s <= 4; ++s, ps *= p) {
                    Integer r;
                    Integer const e = ps - 1;
                    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), mod.get_mpz_t());
                    r -= 1;
                    REQUIRE(r != 0);
                    CHECK(p_valuation(Integer(p), r) == v1);
                }
            }
        }
    }

    TEST_CASE("radical")
    {
        CHECK(radical(12) == 6);
        CHECK(radical(-18) == 6);
        CHECK(radical(1) == 1);
        CHECK(radical(-1) == 1);
        CHECK(radical(Integer("584318301411339")) == Integer(3) * 11 * 59 * 2011 * 49745089);
    }

    TEST_CASE("is_probable_prime against trial division")
    {
        CHECK(is_probable_prime(2));
        CHECK(is_probable_prime(1091));
        CHECK_FALSE(is_probable_prime(Integer("584318301411339")));
        for (unsigned long z = 0; z < 20000; ++z)
            REQUIRE(is_probable_prime(Integer(z)) == naive_prime(z));
        // Strong pseudoprimes to several small bases.
        CHECK_FALSE(is_probable_prime(Integer("3215031751")));
        CHECK_FALSE(is_probable_prime(Integer("3825123056546413051")));
        CHECK_FALSE(is_probable_prime(Integer("318665857834031151167461")));
        CHECK(is_probable_prime(Integer("170141183460469231731687303715884105727")));  // 2^127 - 1
        CHECK_FALSE(is_probable_prime(Integer("170141183460469231731687303715884105729")));
    }

    TEST_CASE("factor_bounded examples")
    {
        auto const f219 = factor_bounded(219);
        CHECK(f219.complete);
        CHECK(f219.factors == std::vector<PrimePower>{{3, 1}, {73, 1}});
        auto const neg = factor_bounded(-1024);
        CHECK(neg.sign == -1);
        CHECK(neg.factors == std::vector<PrimePower>{{2, 10}});
        auto const f5 = factor_bounded(100005);
        CHECK(f5.factors == std::vector<PrimePower>{{3, 1}, {5, 1}, {59, 1}, {113, 1}});
        auto const one = factor_bounded(1);
        CHECK(one.factors.empty());
        CHECK(one.complete);
    }

    TEST_CASE("factor_bounded recomposes and reports primes only")
    {
        std::mt19937_64 rng(7);
        for (int t = 0; t < 400; ++t) {
            Integer z = Integer(std::to_string(rng() % 1000000007ULL + 1));
            z *= Integer(std::to_string(rng() % 100000ULL + 1));
            if (t % 3 == 0)
                z = -z;
            auto const f = factor_bounded(z);
            REQUIRE(f.value() == z);
            CHECK(f.complete);
            for (std::size_t i = 0; i < f.factors.size(); ++i) {
                CHECK(is_probable_prime(f.factors[i].prime));
                CHECK(f.factors[i].exponent >= 1);
                if (i)
                    CHECK(f.factors[i - 1].prime < f.factors[i].prime);
            }
        }
    }

    TEST_CASE("rho splits products of two large primes")
    {
        Integer const p("10000000019"), q("10000000033");
        Budget b;
        b.trial_bound = 1000;
        auto const f = factor_bounded(p * q, b);
        CHECK(f.complete);
        CHECK(f.factors == std::vector<PrimePower>{{p, 1}, {q, 1}});
        auto const sq = factor_bounded(p * p * 12, b);
        CHECK(sq.complete);
        CHECK(sq.factors == std::vector<PrimePower>{{2, 2}, {3, 1}, {p, 2}});
    }

    TEST_CASE("an exhausted budget leaves a cofactor")
    {
        Budget b;
        b.trial_bound = 100;
        b.rho_iterations = 16;
        Integer const p("10000000019"), q("10000000033");
        auto const f = factor_bounded(p * q * 4, b);
        CHECK(f.value() == p * q * 4);
        CHECK_FALSE(f.complete);
        CHECK(f.cofactor == p * q);
        CHECK_THROWS_AS(radical(p * q, b), IncompleteFactorization);
        auto const c = squarefree_class(p * q * 3, b);
        CHECK(c.kind == SquareFreeClass::Kind::Unknown);
        CHECK(c.cofactor == p * q);
        // A composite non-square cofactor below B^3 has no square factor.
        b.trial_bound = 1000;
        CHECK(squarefree_class(Integer(1009) * 1013, b).is_square_free());
    }

    TEST_CASE("squarefree_class")
    {
        CHECK(squarefree_class(12).kind == SquareFreeClass::Kind::NotSquareFree);
        CHECK(squarefree_class(12).witness == 2);
        CHECK(squarefree_class(219).is_square_free());
        CHECK(squarefree_class(1).is_square_free());
        CHECK(squarefree_class(-1).is_square_free());
        auto const c = squarefree_class(Integer("584318301411339"));
        CHECK(c.kind == SquareFreeClass::Kind::NotSquareFree);
        CHECK(c.witness == 3);
        CHECK(Integer("584318301411339") % 9 == 0);
        // 22^11 + 11 digit sum is 72 after dividing by 11.
        CHECK(Integer("584318301411339") / 11 == Integer("53119845582849"));
    }

    TEST_CASE("squarefree_class never misses a small square")
    {
        std::mt19937_64 rng(11);
        for (int t = 0; t < 300; ++t) {
            unsigned long const s = rng() % 2000 + 2;
            Integer const z = Integer(s) * s * Integer(std::to_string(rng() % 1000000 + 1));
            CHECK_FALSE(squarefree_class(z).is_square_free());
        }
    }

    TEST_CASE("exact_root")
    {
        Integer r;
        CHECK(exact_root(Integer(-27), 3, r));
        CHECK(r == -3);
        CHECK_FALSE(exact_root(Integer(-4), 2, r));
        CHECK(exact_root(Integer(1024), 10, r));
        CHECK(r == 2);
        CHECK_FALSE(exact_root(Integer(1000), 2, r));
    }

    TEST_CASE("budget levels")
    {
        CHECK(Budget::from_level("low").trial_bound < Budget::from_level("default").trial_bound);
        CHECK(Budget::from_level("high").trial_bound > Budget::from_level("default").trial_bound);
        CHECK_THROWS_AS(Budget::from_level("extreme"), std::invalid_argument);
    }
}
