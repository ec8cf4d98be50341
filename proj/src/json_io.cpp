#include "json_io.hpp"

namespace monocomp::io {

json integer(Integer const& z)
{
    if (z.fits_slong_p())
        return z.get_si();
    return z.get_str();
}

json coefficients(ModPoly const& u)
{
    json arr = json::array();
    for (auto c : u.coeffs())
        arr.push_back(c);
    return arr;
}

json coefficients(IntPoly const& u)
{
    json arr = json::array();
    for (auto const& c : u.coeffs())
        arr.push_back(integer(c));
    return arr;
}

namespace {

json instance_fields(CompositionInstance const& inst)
{
    return {{"m", inst.m}, {"n", inst.n}, {"a", integer(inst.a)}, {"b", integer(inst.b)}};
}

char const* index_word(bool divides)
{
    return divides ? "divides" : "not-divides";
}

}  // namespace

json record(SearchRecord const& rec)
{
    MonogenicityReport const& rep = rec.report;
    json out = instance_fields(rec.instance);
    out["verdict"] = std::string(to_string(rep.verdict.kind));
    out["reason"] = rep.verdict.reason;

    json primes = json::array(), cases = json::array(), index = json::array(), oracle = json::array();
    for (auto const& e : rep.per_prime) {
        primes.push_back(integer(e.verdict.p));
        cases.push_back(std::string(to_string(e.tag.kind)));
        index.push_back(index_word(e.verdict.divides));
        if (e.oracle_divides)
            oracle.push_back(index_word(*e.oracle_divides));
        else
            oracle.push_back(nullptr);
    }
    out["primes"] = std::move(primes);
    out["case"] = std::move(cases);
    out["index"] = std::move(index);
    if (rep.disc_oracle_sign)
        out["oracle"] = std::move(oracle);

    json witness = nullptr;
    if (rep.verdict.kind == Verdict::Kind::NotMonogenic) {
        if (rep.verdict.prime) {
            witness = {{"prime", integer(*rep.verdict.prime)}, {"case", std::string(to_string(*rep.verdict.case_tag))}};
            for (auto const& e : rep.per_prime)
                if (e.verdict.p == *rep.verdict.prime && e.verdict.witness)
                    witness["factor"] = coefficients(*e.verdict.witness);
        } else if (rep.irreducibility.witness) {
            witness = {{"factor_of_F", coefficients(*rep.irreducibility.witness)}};
        }
    }
    out["witness"] = std::move(witness);

    out["irreducibility"] = std::string(to_string(rep.irreducibility.status));
    out["irreducibility_method"] = rep.irreducibility.method;
    json disc = {{"magnitude", rep.disc_magnitude.get_str()},
                 {"paper_sign", rep.disc_formula_sign},
                 {"oracle_sign", rep.disc_oracle_sign ? json(*rep.disc_oracle_sign) : json(nullptr)},
                 {"sign_mismatch", rep.sign_mismatch()},
                 {"factorization", rep.disc_factorization.to_string()},
                 {"complete", rep.disc_factorization.complete}};
    out["disc"] = std::move(disc);
    if (rep.shortcut_monogenic)
        out["shortcut_monogenic"] = *rep.shortcut_monogenic;
    if (rep.disc_oracle_sign)
        out["oracle_mismatch"] = rep.oracle_mismatch;

    out["f"] = {{"irreducible", rec.f_irreducibility.irreducible},
                {"monogenic", std::string(to_string(rec.f_verdict.kind))},
                {"reason", rec.f_verdict.reason}};
    if (rec.pair)
        out["pair"] = {{"verdict", std::string(to_string(rec.pair->kind))}, {"reason", rec.pair->reason}};
    else
        out["pair"] = nullptr;

    bool const unknown = rep.has_unknown() || rec.f_verdict.kind == BinomMonogenicity::Kind::Unknown
        || (rec.pair && rec.pair->kind == PairResult::Kind::Unknown);
    out["unknown"] = unknown;
    return out;
}

json disc(CompositionInstance const& inst, DiscFormula const& df, std::optional<Integer> const& oracle)
{
    json out = instance_fields(inst);
    out["magnitude"] = df.magnitude.get_str();
    out["paper_sign"] = df.printed_sign;
    json flags = json::array();
    if (oracle) {
        int const sign = sgn(*oracle) < 0 ? -1 : 1;
        out["oracle_sign"] = sign;
        out["oracle_magnitude_match"] = abs(*oracle) == df.magnitude;
        if (sign != df.printed_sign)
            flags.push_back("sign-mismatch");
        if (abs(*oracle) != df.magnitude)
            flags.push_back("magnitude-mismatch");
    } else {
        out["oracle_sign"] = nullptr;
    }
    out["flags"] = std::move(flags);
    out["unknown"] = false;
    return out;
}

json dedekind(IntPoly const& f, PrimeIndexVerdict const& v, ModFactorization const& fac)
{
    json factors = json::array();
    for (auto const& [g, e] : fac.factors)
        factors.push_back({{"factor", coefficients(g)}, {"multiplicity", e}});
    return {{"poly", coefficients(f)},
            {"p", integer(v.p)},
            {"verdict", index_word(v.divides)},
            {"witness", v.witness ? coefficients(*v.witness) : json(nullptr)},
            {"factorization_mod_p", std::move(factors)},
            {"unknown", false}};
}

json binom(long n, Integer const& b, BinomMonogenicity const& v, BinomialIrreducibility const& irr)
{
    json out = {{"n", n}, {"b", integer(b)}, {"verdict", std::string(to_string(v.kind))}, {"reason", v.reason},
                {"irreducible", irr.irreducible}};
    if (!irr.irreducible)
        out["factor"] = coefficients(*irr.factor);
    out["unknown"] = v.kind == BinomMonogenicity::Kind::Unknown;
    return out;
}

json family_row(FamilyRow const& row)
{
    auto const& sf = row.zero_value_class;
    json out = {{"p", row.p},
                {"zero_value", integer(row.report.instance.value_at_zero())},
                {"square_free", sf.kind == SquareFreeClass::Kind::SquareFree      ? "square-free"
                                : sf.kind == SquareFreeClass::Kind::NotSquareFree ? "not-square-free"
                                                                                  : "unknown"},
                {"square_witness", sf.kind == SquareFreeClass::Kind::NotSquareFree ? integer(sf.witness) : json(nullptr)},
                {"verdict", std::string(to_string(row.shortcut_verdict))},
                {"report_verdict", std::string(to_string(row.report.verdict.kind))},
                {"irreducibility", std::string(to_string(row.report.irreducibility.status))},
                {"zero_value_factorization", row.report.zero_value_factorization.to_string()}};
    out["unknown"] = row.shortcut_verdict == Verdict::Kind::Unknown;
    return out;
}

}  // namespace monocomp::io
