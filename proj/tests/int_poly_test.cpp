#include "monocomp/int_poly.hpp"

#include <doctest.h>

#include <random>

using namespace monocomp;

namespace {

// Determinant of the Sylvester matrix by fraction-free Bareiss elimination.
Integer sylvester_resultant(IntPoly const& u, IntPoly const& v)
{
    int const m = u.degree(), n = v.degree();
    int const N = m + n;
    if (N == 0)
        return 1;
    std::vector<std::vector<Integer>> a(N, std::vector<Integer>(N, 0));
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i)
            a[r][r + i] = u.coeff(m - i);
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i)
            a[n + r][r + i] = v.coeff(n - i);
    Integer prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < N; ++k) {
        if (a[k][k] == 0) {
            int swap = -1;
            for (int r = k + 1; r < N; ++r)
                if (a[r][k] != 0) {
                    swap = r;
                    break;
                }
            if (swap < 0)
                return 0;
            std::swap(a[k], a[swap]);
            sign = -sign;
        }
        for (int i = k + 1; i < N; ++i)
            for (int j = k + 1; j < N; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[N - 1][N - 1];
}

IntPoly random_poly(std::mt19937_64& rng, int deg, long bound, bool monic)
{
    std::vector<Integer> c(static_cast<std::size_t>(deg) + 1);
    for (auto& x : c)
        x = static_cast<long>(rng() % static_cast<unsigned long>(2 * bound + 1)) - bound;
    if (monic)
        c.back() = 1;
    else if (c.back() == 0)
        c.back() = 1;
    return IntPoly(std::move(c));
}

}  // namespace

TEST_SUITE("int_poly")
{
    TEST_CASE("composition")
    {
        CHECK(compose(IntPoly{-2, 0, 1}, IntPoly{-1, 0, 1}) == IntPoly{-1, 0, -2, 0, 1});
        CHECK(compose(IntPoly{-3, 0, 0, 1}, IntPoly{-6, 0, 0, 1}) == IntPoly{-219, 0, 0, 108, 0, 0, -18, 0, 0, 1});
        IntPoly const g{-6, 0, 0, 1};
        CHECK(compose(IntPoly{-3, 0, 0, 1}, g) == g.pow(3) - IntPoly::constant(3));
    }

    TEST_CASE("resultant examples and Sylvester oracle")
    {
        IntPoly const F{-1, 0, -2, 0, 1};
        CHECK(resultant(F, F.derivative()) == -1024);
        CHECK(sylvester_resultant(F, F.derivative()) == -1024);
        CHECK(discriminant(IntPoly{-2, 0, 0, 1}) == -108);
        CHECK(discriminant(IntPoly{44, -14, 1}) == 20);
        CHECK(discriminant(IntPoly{-1, 0, -2, 0, 1}) == -1024);
        CHECK(discriminant(IntPoly{1, 0, -4, 0, 1}) == 2304);
        CHECK_THROWS_AS(resultant(IntPoly{}, F), ArithmeticError);
        CHECK_THROWS_AS(discriminant(IntPoly{5}), ArithmeticError);
    }

    TEST_CASE("resultant agrees with the Sylvester determinant on random inputs")
    {
        std::mt19937_64 rng(2024);
        for (int t = 0; t < 300; ++t) {
            int const du = 1 + static_cast<int>(rng() % 7), dv = 1 + static_cast<int>(rng() % 6);
            IntPoly const u = random_poly(rng, du, 9, false), v = random_poly(rng, dv, 9, false);
            REQUIRE(resultant(u, v) == sylvester_resultant(u, v));
        }
    }

    TEST_CASE("discriminant of a product of linear factors")
    {
        // prod (r_i - r_j)^2 over i < j for integer roots.
        std::mt19937_64 rng(5);
        for (int t = 0; t < 100; ++t) {
            int const d = 2 + static_cast<int>(rng() % 5);
            std::vector<long> roots;
            IntPoly f = IntPoly::constant(1);
            for (int i = 0; i < d; ++i) {
                long const r = static_cast<long>(rng() % 21) - 10;
                roots.push_back(r);
                f = f * IntPoly{-r, 1};
            }
            Integer expect = 1;
            for (int i = 0; i < d; ++i)
                for (int j = i + 1; j < d; ++j)
                    expect *= Integer(roots[i] - roots[j]) * (roots[i] - roots[j]);
            REQUIRE(discriminant(f) == expect);
        }
    }

    TEST_CASE("reduce_mod")
    {
        CHECK(reduce_mod(IntPoly{9, 0, -8, 0, 1}, 2) == ModPoly(2, {1, 0, 0, 0, 1}));
        CHECK(reduce_mod(IntPoly{2, 0, 0, -4, 0, 0, 1}, 3) == ModPoly(3, {2, 0, 0, 2, 0, 0, 1}));
        CHECK(reduce_mod(IntPoly{-6, -2}, 2).is_zero());
    }

    TEST_CASE("div_exact")
    {
        CHECK(div_exact(IntPoly{-6, -2}, 2) == IntPoly{-3, -1});
        CHECK_THROWS_WITH_AS(div_exact(IntPoly{-6, -3}, 2), "not exactly divisible", ArithmeticError);
    }

    TEST_CASE("division")
    {
        std::mt19937_64 rng(9);
        for (int t = 0; t < 200; ++t) {
            IntPoly const u = random_poly(rng, 1 + static_cast<int>(rng() % 9), 50, false);
            IntPoly const v = random_poly(rng, 1 + static_cast<int>(rng() % 4), 50, true);
            auto const [q, r] = divmod_monic(u, v);
            REQUIRE(q * v + r == u);
            REQUIRE(r.degree() < v.degree());
            IntPoly const pr = pseudo_remainder(u, v);
            CHECK(pr == r);
        }
        CHECK_THROWS_AS(divmod_monic(IntPoly{1, 2}, IntPoly{1, 2}), ArithmeticError);
    }

    TEST_CASE("literal round trip")
    {
        IntPoly const f{9, 0, -8, 0, 1};
        CHECK(f.to_string() == "[9, 0, -8, 0, 1]");
        CHECK(IntPoly::parse("[9, 0, -8, 0, 1]") == f);
        CHECK(IntPoly::parse("[-5,0,1]") == IntPoly{-5, 0, 1});
        CHECK(IntPoly::parse("[ 123456789012345678901234567890 , 1 ]").coeff(0)
              == Integer("123456789012345678901234567890"));
        CHECK(IntPoly::parse("[]").is_zero());
        for (char const* bad : {"", "[", "1, 2", "[1,,2]", "[x]", "[1 2]", "[1,2]x"})
            CHECK_THROWS_AS(IntPoly::parse(bad), std::invalid_argument);
    }

    TEST_CASE("recombination_search")
    {
        auto const biquad = recombination_search(IntPoly{1, 0, -4, 0, 1});  // sqrt 2 + sqrt 3
        CHECK(biquad.outcome == ZFactorSearch::Outcome::Irreducible);
        auto const split = recombination_search(IntPoly{1, 0, -6, 0, 1});  // (x^2+2x-1)(x^2-2x-1)
        REQUIRE(split.outcome == ZFactorSearch::Outcome::Reducible);
        CHECK(divmod_monic(IntPoly{1, 0, -6, 0, 1}, *split.factor).second.is_zero());
        CHECK(split.factor->degree() == 2);
        CHECK(recombination_search(IntPoly{4, 0, 0, 0, 1}).outcome == ZFactorSearch::Outcome::Reducible);
        CHECK(recombination_search(IntPoly{-2, 0, 0, 1}).outcome == ZFactorSearch::Outcome::Irreducible);
    }

    TEST_CASE("recombination_search finds planted factors")
    {
        std::mt19937_64 rng(31);
        for (int t = 0; t < 60; ++t) {
            IntPoly const u = random_poly(rng, 1 + static_cast<int>(rng() % 4), 20, true);
            IntPoly const v = random_poly(rng, 1 + static_cast<int>(rng() % 4), 20, true);
            IntPoly const f = u * v;
            if (discriminant(f) == 0)
                continue;
            auto const z = recombination_search(f);
            REQUIRE(z.outcome == ZFactorSearch::Outcome::Reducible);
            CHECK(divmod_monic(f, *z.factor).second.is_zero());
            CHECK(z.factor->degree() >= 1);
            CHECK(z.factor->degree() < f.degree());
        }
    }
}
