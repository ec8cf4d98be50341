#include "monocomp/search.hpp"

#include <doctest.h>

using namespace monocomp;

TEST_SUITE("search")
{
    TEST_CASE("grid examples")
    {
        SearchOptions so;
        so.m = {2, 2};
        so.n = {2, 2};
        so.a = {2, 2};
        so.b = {1, 1};
        auto const one = search_grid(so);
        REQUIRE(one.size() == 1);
        REQUIRE(one[0].pair);
        CHECK(one[0].pair->kind == PairResult::Kind::BothMonogenic);

        so.a = {5, 5};
        so.b = {1, 3};
        auto const fail = search_grid(so);
        REQUIRE(fail.size() == 3);
        for (auto const& r : fail)
            CHECK(r.pair->kind == PairResult::Kind::FailF);

        so.a = {7, 7};
        so.b = {4, 4};
        auto const v = search_grid(so);
        REQUIRE(v.size() == 1);
        CHECK(v[0].report.verdict.kind == Verdict::Kind::NotMonogenic);
        CHECK(v[0].report.verdict.prime == Integer(3));
        CHECK(v[0].report.verdict.case_tag == Case::V);
    }

    TEST_CASE("empty ranges are rejected")
    {
        SearchOptions so;
        so.a = {3, 1};
        CHECK_THROWS_AS(search_grid(so), std::invalid_argument);
    }

    TEST_CASE("records come out in lexicographic order for any shard count")
    {
        SearchOptions so;
        so.m = {1, 3};
        so.n = {2, 3};
        so.a = {-5, 5};
        so.b = {-3, 3};
        auto const serial = search_grid(so);
        for (std::size_t i = 1; i < serial.size(); ++i) {
            auto const& x = serial[i - 1].instance;
            auto const& y = serial[i].instance;
            CHECK(std::tie(x.m, x.n, x.a, x.b) < std::tie(y.m, y.n, y.a, y.b));
        }
        for (unsigned shards : {2u, 3u, 7u}) {
            so.shards = shards;
            auto const par = search_grid(so);
            REQUIRE(par.size() == serial.size());
            for (std::size_t i = 0; i < par.size(); ++i) {
                CHECK(par[i].instance == serial[i].instance);
                CHECK(par[i].report.verdict.kind == serial[i].report.verdict.kind);
            }
        }
    }

    TEST_CASE("require_pair keeps only doubly monogenic instances")
    {
        SearchOptions so;
        so.m = {1, 3};
        so.n = {2, 3};
        so.a = {-6, 6};
        so.b = {-4, 4};
        so.require_pair = true;
        auto const recs = search_grid(so);
        CHECK_FALSE(recs.empty());
        for (auto const& r : recs) {
            REQUIRE(r.pair);
            CHECK(r.pair->kind == PairResult::Kind::BothMonogenic);
            CHECK(r.f_verdict.kind == BinomMonogenicity::Kind::Yes);
            CHECK(r.report.verdict.kind == Verdict::Kind::Monogenic);
        }
    }

    TEST_CASE("example family")
    {
        auto const rows = example_family(13);
        REQUIRE(rows.size() == 5);
        std::vector<unsigned long> ps;
        for (auto const& r : rows)
            ps.push_back(r.p);
        CHECK(ps == std::vector<unsigned long>{3, 5, 7, 11, 13});
        for (auto const& r : rows) {
            auto const expect = r.p == 11 ? Verdict::Kind::NotMonogenic : Verdict::Kind::Monogenic;
            CHECK(r.shortcut_verdict == expect);
            CHECK(r.report.verdict.kind == expect);
        }
        CHECK(rows[3].zero_value_class.witness == 3);
        CHECK(rows[0].report.zero_value_factorization.primes() == std::vector<Integer>{3, 73});
        CHECK(rows[1].report.zero_value_factorization.primes() == std::vector<Integer>{3, 5, 59, 113});
        CHECK(rows[2].report.zero_value_factorization.primes() == std::vector<Integer>{3, 7, 43, 107, 1091});
        CHECK(Integer(15059073) * 7 == 3 * 7 * 43 * 107 * 1091);
        CHECK_THROWS_AS(example_family(2), std::invalid_argument);
    }
}
