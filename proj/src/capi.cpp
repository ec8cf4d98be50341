#include "monocomp/monocomp.h"

#include "json_io.hpp"
#include "monocomp/search.hpp"

#include <string>
#include <vector>

using namespace monocomp;
using monocomp::io::json;

struct mc_context {
    ReportOptions opts;
    unsigned shards = 1;
    std::string last_error;
};

struct mc_result {
    std::vector<std::string> records;
    std::string array;
    bool unknown = false;
};

namespace {

Integer parse_integer(char const* text, char const* what)
{
    Integer z;
    std::string s = text;
    if (!s.empty() && s.front() == '+')
        s.erase(0, 1);
    if (s.empty() || z.set_str(s, 10) != 0)
        throw std::invalid_argument(std::string("malformed integer for ") + what + ": '" + text + "'");
    return z;
}

mc_result* make_result(std::vector<json> const& records)
{
    auto* r = new mc_result;
    json arr = json::array();
    for (auto const& rec : records) {
        r->records.push_back(rec.dump());
        r->unknown = r->unknown || rec.value("unknown", false);
        arr.push_back(rec);
    }
    r->array = arr.dump();
    return r;
}

struct NotPrime : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

template <class Fn>
mc_status guarded(mc_context* ctx, mc_result** out, Fn&& fn)
{
    if (!ctx || !out)
        return MC_ERR_NULL;
    *out = nullptr;
    ctx->last_error.clear();
    mc_status status = MC_OK;
    try {
        *out = make_result(fn());
        return MC_OK;
    } catch (NotPrime const& e) {
        ctx->last_error = e.what();
        status = MC_ERR_NOT_PRIME;
    } catch (ParseError const& e) {
        ctx->last_error = e.what();
        status = MC_ERR_PARSE;
    } catch (ArithmeticError const& e) {
        ctx->last_error = e.what();
        status = MC_ERR_DOMAIN;
    } catch (std::invalid_argument const& e) {
        ctx->last_error = e.what();
        status = MC_ERR_ARGUMENT;
    } catch (std::exception const& e) {
        ctx->last_error = e.what();
        status = MC_ERR_INTERNAL;
    } catch (...) {
        ctx->last_error = "unknown failure";
        status = MC_ERR_INTERNAL;
    }
    return status;
}

CompositionInstance instance(long m, long n, char const* a, char const* b)
{
    if (!a || !b)
        throw std::invalid_argument("missing a or b");
    CompositionInstance inst{m, n, parse_integer(a, "a"), parse_integer(b, "b")};
    inst.validate();
    return inst;
}

}  // namespace

extern "C" {

char const* mc_version(void)
{
    return "0.1.0";
}

char const* mc_status_string(mc_status status)
{
    switch (status) {
    case MC_OK: return "ok";
    case MC_ERR_NULL: return "null argument";
    case MC_ERR_ARGUMENT: return "invalid argument";
    case MC_ERR_PARSE: return "malformed polynomial literal";
    case MC_ERR_NOT_PRIME: return "argument is not prime";
    case MC_ERR_DOMAIN: return "outside supported domain";
    case MC_ERR_INTERNAL: return "internal consistency failure";
    }
    return "unrecognized status";
}

mc_status mc_context_create(mc_context** out)
{
    if (!out)
        return MC_ERR_NULL;
    *out = new mc_context;
    return MC_OK;
}

void mc_context_destroy(mc_context* ctx)
{
    delete ctx;
}

char const* mc_context_last_error(mc_context const* ctx)
{
    return ctx ? ctx->last_error.c_str() : "";
}

mc_status mc_context_set_seed(mc_context* ctx, uint64_t seed)
{
    if (!ctx)
        return MC_ERR_NULL;
    ctx->opts.seed = seed;
    ctx->opts.budget.seed = seed;
    return MC_OK;
}

mc_status mc_context_set_budget(mc_context* ctx, char const* level)
{
    if (!ctx || !level)
        return MC_ERR_NULL;
    try {
        Budget b = Budget::from_level(level);
        b.seed = ctx->opts.seed;
        ctx->opts.budget = b;
    } catch (std::invalid_argument const& e) {
        ctx->last_error = e.what();
        return MC_ERR_ARGUMENT;
    }
    return MC_OK;
}

mc_status mc_context_set_verify(mc_context* ctx, int on)
{
    if (!ctx)
        return MC_ERR_NULL;
    ctx->opts.verify = on != 0;
    return MC_OK;
}

mc_status mc_context_set_assume_irreducible(mc_context* ctx, int on)
{
    if (!ctx)
        return MC_ERR_NULL;
    ctx->opts.assume_irreducible = on != 0;
    return MC_OK;
}

mc_status mc_context_set_shards(mc_context* ctx, unsigned shards)
{
    if (!ctx)
        return MC_ERR_NULL;
    if (shards == 0) {
        ctx->last_error = "shards must be positive";
        return MC_ERR_ARGUMENT;
    }
    ctx->shards = shards;
    return MC_OK;
}

mc_status mc_check(mc_context* ctx, long m, long n, char const* a, char const* b, mc_result** out)
{
    return guarded(ctx, out, [&] {
        return std::vector<json>{io::record(evaluate_instance(instance(m, n, a, b), ctx->opts))};
    });
}

mc_status mc_disc(mc_context* ctx, long m, long n, char const* a, char const* b, mc_result** out)
{
    return guarded(ctx, out, [&] {
        CompositionInstance const inst = instance(m, n, a, b);
        std::optional<Integer> oracle;
        if (ctx->opts.verify)
            oracle = discriminant(inst.composed());
        return std::vector<json>{io::disc(inst, disc_formula(inst), oracle)};
    });
}

mc_status mc_dedekind(mc_context* ctx, char const* poly, char const* p, mc_result** out)
{
    return guarded(ctx, out, [&] {
        if (!poly || !p)
            throw std::invalid_argument("missing polynomial or prime");
        IntPoly f;
        try {
            f = IntPoly::parse(poly);
        } catch (std::invalid_argument const& e) {
            throw ParseError(e.what());
        }
        if (!f.is_monic() || f.degree() < 1)
            throw ArithmeticError("polynomial must be monic of positive degree");
        Integer const q = parse_integer(p, "p");
        if (q < 2 || !is_probable_prime(q, ctx->opts.budget.mr_rounds, ctx->opts.seed))
            throw NotPrime(std::string("not a prime: ") + p);
        if (q >= Integer(std::to_string(kMaxOraclePrime)))
            throw ArithmeticError("prime exceeds the word-sized oracle range");
        std::uint64_t const pw = std::stoull(q.get_str());
        PrimeIndexVerdict const v = dedekind_test(f, pw, ctx->opts.seed);
        ModFactorization const fac = factor(reduce_mod(f, pw), ctx->opts.seed);
        return std::vector<json>{io::dedekind(f, v, fac)};
    });
}

mc_status mc_binom(mc_context* ctx, long n, char const* b, mc_result** out)
{
    return guarded(ctx, out, [&] {
        if (!b)
            throw std::invalid_argument("missing b");
        if (n < 2)
            throw ArithmeticError("degree must be at least 2");
        Integer const c = parse_integer(b, "b");
        if (c == 0)
            throw ArithmeticError("constant term must be nonzero");
        return std::vector<json>{io::binom(n, c, binom_monogenic(n, c, ctx->opts.budget), binom_irreducible(n, c))};
    });
}

mc_status mc_search(mc_context* ctx, mc_range m, mc_range n, mc_range a, mc_range b, int require_pair,
                    mc_result** out)
{
    return guarded(ctx, out, [&] {
        SearchOptions so;
        so.m = {m.lo, m.hi};
        so.n = {n.lo, n.hi};
        so.a = {a.lo, a.hi};
        so.b = {b.lo, b.hi};
        so.require_pair = require_pair != 0;
        so.shards = ctx->shards;
        so.report = ctx->opts;
        std::vector<json> records;
        for (auto const& rec : search_grid(so))
            records.push_back(io::record(rec));
        return records;
    });
}

mc_status mc_example(mc_context* ctx, unsigned long p_max, mc_result** out)
{
    return guarded(ctx, out, [&] {
        std::vector<json> records;
        for (auto const& row : example_family(p_max, ctx->opts))
            records.push_back(io::family_row(row));
        return records;
    });
}

size_t mc_result_count(mc_result const* r)
{
    return r ? r->records.size() : 0;
}

char const* mc_result_record(mc_result const* r, size_t i)
{
    if (!r || i >= r->records.size())
        return nullptr;
    return r->records[i].c_str();
}

char const* mc_result_json(mc_result const* r)
{
    return r ? r->array.c_str() : nullptr;
}

int mc_result_has_unknown(mc_result const* r)
{
    return r && r->unknown ? 1 : 0;
}

void mc_result_destroy(mc_result* r)
{
    delete r;
}

}  // extern "C"
