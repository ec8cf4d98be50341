#include "monocomp/search.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace monocomp {

SearchRecord evaluate_instance(CompositionInstance const& inst, ReportOptions const& opts)
{
    SearchRecord rec;
    rec.instance = inst;
    Budget budget = opts.budget;
    budget.seed = opts.seed;
    rec.f_irreducibility = binom_irreducible(inst.n, inst.a);
    rec.f_verdict = binom_monogenic(inst.n, inst.a, budget);
    rec.report = monogenic_report(inst, opts);
    if (pair_criterion_applies(inst))
        rec.pair = pair_monogenic(inst, opts);
    return rec;
}

std::vector<SearchRecord> search_grid(SearchOptions const& opts)
{
    for (Range const* r : {&opts.m, &opts.n, &opts.a, &opts.b})
        if (r->empty())
            throw std::invalid_argument("empty search range");

    std::vector<CompositionInstance> work;
    for (long m = opts.m.lo; m <= opts.m.hi; ++m)
        for (long n = opts.n.lo; n <= opts.n.hi; ++n)
            for (long a = opts.a.lo; a <= opts.a.hi; ++a)
                for (long b = opts.b.lo; b <= opts.b.hi; ++b) {
                    CompositionInstance inst{m, n, a, b};
                    try {
                        inst.validate();
                    } catch (ArithmeticError const&) {
                        continue;
                    }
                    work.push_back(std::move(inst));
                }

    std::vector<std::optional<SearchRecord>> slots(work.size());
    unsigned const shards = std::max(1u, opts.shards);
    auto run_shard = [&](unsigned shard) {
        for (std::size_t i = shard; i < work.size(); i += shards)
            slots[i] = evaluate_instance(work[i], opts.report);
    };
    if (shards == 1) {
        run_shard(0);
    } else {
        std::vector<std::exception_ptr> errors(shards);
        std::vector<std::thread> threads;
        for (unsigned s = 0; s < shards; ++s)
            threads.emplace_back([&, s] {
                try {
                    run_shard(s);
                } catch (...) {
                    errors[s] = std::current_exception();
                }
            });
        for (auto& t : threads)
            t.join();
        for (auto const& e : errors)
            if (e)
                std::rethrow_exception(e);
    }

    std::vector<SearchRecord> out;
    for (auto& slot : slots) {
        if (opts.require_pair && !(slot->pair && slot->pair->kind == PairResult::Kind::BothMonogenic))
            continue;
        out.push_back(std::move(*slot));
    }
    return out;
}

std::vector<FamilyRow> example_family(unsigned long p_max, ReportOptions const& opts)
{
    if (p_max < 3)
        throw std::invalid_argument("example family needs p_max >= 3");
    Budget budget = opts.budget;
    budget.seed = opts.seed;
    std::vector<FamilyRow> rows;
    for (unsigned long p = 3; p <= p_max; p += 2) {
        if (!is_probable_prime(Integer(p)))
            continue;
        long const lp = static_cast<long>(p);
        CompositionInstance const inst{lp, lp, Integer(lp), Integer(2 * lp)};
        FamilyRow row;
        row.p = p;
        row.report = monogenic_report(inst, opts);
        // rad(mn) = p = rad(a) and a = p is square-free, so the verdict is
        // square-freeness of F(0) alone.
        row.zero_value_class = squarefree_from(row.report.zero_value_factorization, budget);
        switch (row.zero_value_class.kind) {
        case SquareFreeClass::Kind::SquareFree:
            row.shortcut_verdict = Verdict::Kind::Monogenic;
            break;
        case SquareFreeClass::Kind::NotSquareFree:
            row.shortcut_verdict = Verdict::Kind::NotMonogenic;
            break;
        case SquareFreeClass::Kind::Unknown:
            row.shortcut_verdict = Verdict::Kind::Unknown;
            break;
        }
        if (row.report.verdict.kind != Verdict::Kind::Unknown && row.shortcut_verdict != Verdict::Kind::Unknown
            && row.report.verdict.kind != row.shortcut_verdict)
            throw std::logic_error("example family: shortcut and report disagree at p = " + std::to_string(p));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace monocomp
