#include "monocomp/composition.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace monocomp {

namespace {

Integer ipow(Integer const& b, unsigned long e)
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

Integer ipow_ui(unsigned long b, unsigned long e)
{
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), b, e);
    return r;
}

bool divides(Integer const& d, Integer const& z)
{
    return mpz_divisible_p(z.get_mpz_t(), d.get_mpz_t()) != 0;
}

std::vector<long> small_prime_divisors(long n)
{
    std::vector<long> out;
    for (long q = 2; q * q <= n; ++q) {
        if (n % q)
            continue;
        out.push_back(q);
        while (n % q == 0)
            n /= q;
    }
    if (n > 1)
        out.push_back(n);
    return out;
}

bool word_sized(Integer const& p)
{
    return p.fits_ulong_p() && p.get_ui() < kMaxOraclePrime;
}

std::optional<ModPoly> first_factor(ModPoly const& u, std::uint64_t seed)
{
    if (u.degree() < 1)
        return std::nullopt;
    auto fac = factor(u, seed);
    return fac.factors.front().g;
}

// Budget for the cheap factorization of a used by the Eisenstein check.
Budget light_budget(std::uint64_t seed)
{
    Budget b;
    b.trial_bound = 10'000;
    b.rho_iterations = std::uint64_t{1} << 12;
    b.seed = seed;
    return b;
}

}  // namespace

void CompositionInstance::validate() const
{
    if (m < 1)
        throw ArithmeticError("m must be at least 1");
    if (n < 2)
        throw ArithmeticError("n must be at least 2");
    if (m > kMaxCompositionDegree / n)
        throw ArithmeticError("degree m*n too large");
    if (a == 0)
        throw ArithmeticError("a must be nonzero");
    if (m >= 2 && value_at_zero() == 0)
        throw ArithmeticError("(-b)^n - a vanishes: F is not separable");
}

Integer CompositionInstance::value_at_zero() const
{
    Integer mb = -b;
    return ipow(mb, static_cast<unsigned long>(n)) - a;
}

IntPoly CompositionInstance::outer() const
{
    return IntPoly::binomial(static_cast<std::size_t>(n), a);
}

IntPoly CompositionInstance::inner() const
{
    return IntPoly::binomial(static_cast<std::size_t>(m), b);
}

IntPoly CompositionInstance::composed() const
{
    return compose(outer(), inner());
}

std::string CompositionInstance::to_string() const
{
    std::ostringstream os;
    os << "(x^" << m << " - (" << b << "))^" << n << " - (" << a << ")";
    return os.str();
}

DiscFormula disc_formula(CompositionInstance const& inst)
{
    inst.validate();
    unsigned long const m = static_cast<unsigned long>(inst.m);
    unsigned long const n = static_cast<unsigned long>(inst.n);
    unsigned long const mn = m * n;
    Integer const c = inst.value_at_zero();

    DiscFormula out;
    out.magnitude = ipow_ui(mn, mn) * ipow(abs(inst.a), m * (n - 1)) * ipow(abs(c), m - 1);

    int sign = ((n * (n - 1) / 2 + m) % 2) ? -1 : 1;
    if (inst.a < 0 && (m * (n - 1)) % 2)
        sign = -sign;
    if (c < 0 && (m - 1) % 2)
        sign = -sign;
    out.printed_sign = sign;
    return out;
}

std::string_view to_string(Case c)
{
    switch (c) {
    case Case::I: return "I";
    case Case::II: return "II";
    case Case::III: return "III";
    case Case::IV: return "IV";
    case Case::V: return "V";
    }
    return "?";
}

Provenance provenance_of(Case c)
{
    switch (c) {
    case Case::I: return Provenance::CaseI;
    case Case::II: return Provenance::CaseII;
    case Case::III: return Provenance::CaseIII;
    case Case::IV: return Provenance::CaseIV;
    case Case::V: return Provenance::CaseV;
    }
    return Provenance::Oracle;
}

CaseTag classify_prime(CompositionInstance const& inst, Integer const& p)
{
    inst.validate();
    if (p < 2)
        throw ArithmeticError("classify_prime: p must be prime");
    Integer const m(inst.m), n(inst.n);
    Integer const c = inst.value_at_zero();
    bool const p_mn = divides(p, m * n);
    if (!p_mn && !divides(p, inst.a) && !(inst.m >= 2 && divides(p, c)))
        throw ArithmeticError("prime does not divide discriminant");

    CaseTag tag;
    tag.j = p_valuation(p, m);
    tag.k = p_valuation(p, n);
    tag.s = Integer(m / ipow(p, tag.j)).get_si();
    tag.s_prime = Integer(n / ipow(p, tag.k)).get_si();

    if (divides(p, inst.a)) {
        tag.kind = Case::I;
    } else if (divides(p, inst.b)) {
        if (!p_mn)
            throw std::logic_error("p divides b and D_F but not a or mn");
        tag.kind = Case::II;
    } else if (divides(p, n)) {
        tag.kind = Case::III;
    } else if (divides(p, m)) {
        tag.kind = Case::IV;
    } else {
        tag.kind = Case::V;
    }
    return tag;
}

TestPolynomials case2_testpoly(CompositionInstance const& inst, std::uint64_t p)
{
    Integer const P(static_cast<unsigned long>(p));
    CaseTag const tag = classify_prime(inst, P);
    if (tag.kind != Case::II)
        throw ArithmeticError("case2_testpoly: prime is not in case II");

    unsigned long const e = ipow(P, tag.j + tag.k).get_ui();
    Integer const head = ipow(inst.a, e) - inst.a;
    IntPoly bracket = IntPoly::constant(head)
        - inst.inner().pow(static_cast<unsigned long>(inst.n - 1)) * (Integer(inst.n) * inst.b);
    ModPoly t1 = reduce_mod(div_exact(bracket, P), p);
    ModPoly t2 = reduce_mod(IntPoly::binomial(static_cast<std::size_t>(tag.s * tag.s_prime), inst.a), p);
    return {std::move(t1), std::move(t2)};
}

namespace {

TestPolynomials case4_build(CompositionInstance const& inst, std::uint64_t p, bool exact)
{
    Integer const P(static_cast<unsigned long>(p));
    CaseTag const tag = classify_prime(inst, P);
    if (tag.kind != Case::IV)
        throw ArithmeticError("case4_testpoly: prime is not in case IV");

    unsigned long const pj = ipow(P, tag.j).get_ui();
    unsigned long const pj1 = pj / p;
    unsigned long const n = static_cast<unsigned long>(inst.n);
    IntPoly const hs = IntPoly::binomial(static_cast<std::size_t>(tag.s), inst.b);

    // Terms i = p-1 down to 1 share the factor hs^(n pj - (p-1) pj1).
    IntPoly const step = hs.pow(pj1);
    IntPoly power = hs.pow(n * pj - (p - 1) * pj1);
    IntPoly sum;
    for (unsigned long i = p - 1; i >= 1; --i) {
        Integer binom;
        mpz_bin_uiui(binom.get_mpz_t(), pj, i * pj1);
        sum += power * (binom * ipow(inst.b, exact ? i * pj1 : i));
        if (i > 1)
            power *= step;
    }
    Integer const frob = Integer(inst.n) * (ipow(inst.b, pj) - inst.b);
    IntPoly bracket = IntPoly::constant(ipow(inst.a, pj) - inst.a) + sum * Integer(inst.n);
    if (exact)
        bracket += hs.pow((n - 1) * pj) * frob;
    else
        bracket += IntPoly::constant(frob);

    ModPoly t1 = reduce_mod(div_exact(bracket, P), p);
    ModPoly t2 = reduce_mod(hs.pow(n) - IntPoly::constant(inst.a), p);
    return {std::move(t1), std::move(t2)};
}

}  // namespace

TestPolynomials case4_testpoly(CompositionInstance const& inst, std::uint64_t p)
{
    return case4_build(inst, p, false);
}

TestPolynomials case4_exact_testpoly(CompositionInstance const& inst, std::uint64_t p)
{
    return case4_build(inst, p, true);
}

PrimeIndexVerdict prime_index_test(CompositionInstance const& inst, Integer const& p, std::uint64_t seed)
{
    CaseTag const tag = classify_prime(inst, p);
    PrimeIndexVerdict v{p, false, std::nullopt, provenance_of(tag.kind)};
    Integer const p2 = p * p;
    bool const word = word_sized(p);
    std::uint64_t const pw = word ? p.get_ui() : 0;

    switch (tag.kind) {
    case Case::I:
        v.divides = divides(p2, inst.a);
        if (v.divides && word) {
            if (divides(p, inst.b))
                v.witness = ModPoly::x(pw);
            else
                v.witness = first_factor(reduce_mod(IntPoly::binomial(static_cast<std::size_t>(tag.s), inst.b), pw), seed);
        }
        break;
    case Case::II:
    case Case::IV: {
        auto const t = tag.kind == Case::II ? case2_testpoly(inst, pw) : case4_exact_testpoly(inst, pw);
        ModPoly const g = gcd(t.t1, t.t2);
        v.divides = !g.is_one();
        if (v.divides)
            v.witness = first_factor(g, seed);
        break;
    }
    case Case::III: {
        Integer const pk = ipow(p, tag.k);
        Integer lhs, rhs;
        mpz_powm(lhs.get_mpz_t(), inst.a.get_mpz_t(), pk.get_mpz_t(), p2.get_mpz_t());
        mpz_powm(rhs.get_mpz_t(), inst.a.get_mpz_t(), p.get_mpz_t(), p2.get_mpz_t());
        bool const full = divides(p2, lhs - inst.a);
        bool const reduced = divides(p2, rhs - inst.a);
        if (full != reduced)
            throw std::logic_error("case III: p^2 | a^(p^k) - a disagrees with p^2 | a^p - a");
        v.divides = full;
        if (v.divides && word) {
            IntPoly const h = IntPoly::binomial(static_cast<std::size_t>(tag.s), inst.b)
                                  .pow(static_cast<unsigned long>(tag.s_prime))
                - IntPoly::constant(inst.a);
            v.witness = first_factor(reduce_mod(h, pw), seed);
        }
        break;
    }
    case Case::V:
        v.divides = divides(p2, inst.value_at_zero());
        if (v.divides && word)
            v.witness = ModPoly::x(pw);
        break;
    }
    return v;
}

BinomialIrreducibility binom_irreducible(long n, Integer const& a)
{
    if (n < 1)
        throw ArithmeticError("binomial degree must be positive");
    BinomialIrreducibility out;
    Integer root;
    for (long q : small_prime_divisors(n)) {
        if (exact_root(a, static_cast<unsigned long>(q), root)) {
            out.irreducible = false;
            out.witness_exponent = static_cast<unsigned long>(q);
            out.factor = IntPoly::binomial(static_cast<std::size_t>(n / q), root);
            return out;
        }
    }
    if (n % 4 == 0 && a < 0 && divides(Integer(4), a)) {
        Integer const c4 = -a / 4;
        if (exact_root(c4, 4, root)) {
            out.irreducible = false;
            out.witness_exponent = 4;
            out.quartic_form = true;
            std::vector<Integer> coeffs(static_cast<std::size_t>(n / 2) + 1);
            coeffs[static_cast<std::size_t>(n / 2)] = 1;
            coeffs[static_cast<std::size_t>(n / 4)] += 2 * root;
            coeffs[0] += 2 * root * root;
            out.factor = IntPoly(std::move(coeffs));
        }
    }
    return out;
}

std::string_view to_string(BinomMonogenicity::Kind k)
{
    switch (k) {
    case BinomMonogenicity::Kind::Yes: return "yes";
    case BinomMonogenicity::Kind::No: return "no";
    case BinomMonogenicity::Kind::Unknown: return "unknown";
    }
    return "?";
}

BinomMonogenicity binom_monogenic(long n, Integer const& b, Budget const& budget)
{
    using K = BinomMonogenicity::Kind;
    if (n < 2)
        throw ArithmeticError("binom_monogenic: n must be at least 2");
    if (!binom_irreducible(n, b).irreducible)
        return {K::No, "x^n - b is reducible"};
    SquareFreeClass const sf = squarefree_class(b, budget);
    if (sf.kind == SquareFreeClass::Kind::NotSquareFree)
        return {K::No, sf.witness.get_str() + "^2 divides b"};
    for (long q : small_prime_divisors(n)) {
        Integer const P(q);
        Integer bp;
        Integer const p2 = P * P;
        mpz_powm(bp.get_mpz_t(), b.get_mpz_t(), P.get_mpz_t(), p2.get_mpz_t());
        if (divides(p2, bp - b))
            return {K::No, std::to_string(q) + "^2 divides b^" + std::to_string(q) + " - b"};
    }
    if (sf.is_unknown())
        return {K::Unknown, "square-freeness of b undecided: " + sf.to_string()};
    return {K::Yes, ""};
}

std::string_view to_string(Irreducibility i)
{
    switch (i) {
    case Irreducibility::Proven: return "proven";
    case Irreducibility::Disproven: return "disproven";
    case Irreducibility::Assumed: return "assumed";
    case Irreducibility::Unknown: return "unknown";
    }
    return "?";
}

IrreducibilityResult comp_irreducible(CompositionInstance const& inst, unsigned effort, std::uint64_t seed)
{
    inst.validate();
    IntPoly const g = inst.inner();
    auto const outer = binom_irreducible(inst.n, inst.a);
    if (!outer.irreducible)
        return {Irreducibility::Disproven, "x^n - a is reducible", compose(*outer.factor, g)};
    if (inst.b == 0) {
        auto const whole = binom_irreducible(inst.m * inst.n, inst.a);
        if (!whole.irreducible)
            return {Irreducibility::Disproven, "x^(mn) - a is reducible", whole.factor};
        return {Irreducibility::Proven, "x^(mn) - a is irreducible", std::nullopt};
    }
    if (inst.m == 1)
        return {Irreducibility::Proven, "translate of irreducible x^n - a", std::nullopt};

    IntPoly const F = inst.composed();
    for (auto const& q : factor_bounded(inst.a, light_budget(seed)).primes()) {
        bool eisenstein = !divides(q * q, F.coeffs()[0]);
        for (std::size_t i = 0; eisenstein && i + 1 < F.coeffs().size(); ++i)
            eisenstein = divides(q, F.coeffs()[i]);
        if (eisenstein)
            return {Irreducibility::Proven, "Eisenstein at " + q.get_str(), std::nullopt};
    }

    Integer const bad = Integer(inst.m * inst.n) * inst.a * inst.value_at_zero();
    std::size_t const N = static_cast<std::size_t>(F.degree());
    std::vector<char> possible(N + 1, 1);
    std::string used;
    unsigned tried = 0;
    auto const primes = primes_below(1 << 16);
    for (std::uint32_t q : *primes) {
        if (tried >= effort)
            break;
        if (mpz_divisible_ui_p(bad.get_mpz_t(), q))
            continue;
        ++tried;
        auto const fac = factor(reduce_mod(F, q), seed);
        if (fac.factors.size() == 1)
            return {Irreducibility::Proven, "irreducible mod " + std::to_string(q), std::nullopt};
        std::vector<char> sums(N + 1, 0);
        sums[0] = 1;
        for (auto const& [h, e] : fac.factors) {
            std::size_t const d = static_cast<std::size_t>(h.degree());
            for (std::size_t k = N; k >= d; --k)
                if (sums[k - d])
                    sums[k] = 1;
        }
        bool trivial = true;
        for (std::size_t k = 0; k <= N; ++k) {
            possible[k] = possible[k] && sums[k];
            if (possible[k] && k != 0 && k != N)
                trivial = false;
        }
        used += (used.empty() ? "" : ",") + std::to_string(q);
        if (trivial)
            return {Irreducibility::Proven, "factor degree patterns mod " + used, std::nullopt};
    }
    if (tried > 0 && N <= 64) {
        ZFactorSearch const z = recombination_search(F, 16, seed);
        if (z.outcome == ZFactorSearch::Outcome::Irreducible)
            return {Irreducibility::Proven, "Hensel recombination mod " + std::to_string(z.prime), std::nullopt};
        if (z.outcome == ZFactorSearch::Outcome::Reducible)
            return {Irreducibility::Disproven, "proper factor over Z", z.factor};
    }
    return {Irreducibility::Unknown, "no certificate within effort", std::nullopt};
}

std::string_view to_string(Verdict::Kind k)
{
    switch (k) {
    case Verdict::Kind::Monogenic: return "monogenic";
    case Verdict::Kind::NotMonogenic: return "not-monogenic";
    case Verdict::Kind::Unknown: return "unknown";
    }
    return "?";
}

bool MonogenicityReport::has_unknown() const
{
    return verdict.kind == Verdict::Kind::Unknown || irreducibility.status == Irreducibility::Unknown
        || !disc_factorization.complete;
}

MonogenicityReport monogenic_report(CompositionInstance const& inst, ReportOptions const& opts)
{
    inst.validate();
    MonogenicityReport rep;
    rep.instance = inst;

    rep.irreducibility = comp_irreducible(inst, opts.irreducibility_effort, opts.seed);
    if (rep.irreducibility.status == Irreducibility::Unknown && opts.assume_irreducible) {
        rep.irreducibility.status = Irreducibility::Assumed;
        rep.irreducibility.method = "assumed by caller";
    }

    DiscFormula const df = disc_formula(inst);
    rep.disc_magnitude = df.magnitude;
    rep.disc_formula_sign = df.printed_sign;

    IntPoly F;
    if (opts.verify) {
        F = inst.composed();
        Integer const d = discriminant(F);
        rep.disc_oracle_sign = sgn(d) < 0 ? -1 : 1;
        if (abs(d) != df.magnitude)
            throw std::logic_error("discriminant magnitude disagrees with the resultant for " + inst.to_string());
    }

    // |D_F| is assembled from (mn), a and F(0) separately; (mn)^(mn) alone
    // would be hopeless to factor as one integer.
    unsigned long const m = static_cast<unsigned long>(inst.m);
    unsigned long const n = static_cast<unsigned long>(inst.n);
    Budget budget = opts.budget;
    budget.seed = opts.seed;
    PrimeFactorization const mn_fac = factor_bounded(Integer(m * n), budget);
    rep.a_factorization = factor_bounded(inst.a, budget);
    Integer const c = inst.value_at_zero();
    if (c != 0)
        rep.zero_value_factorization = factor_bounded(c, budget);

    std::map<Integer, unsigned> exps;
    for (auto const& [p, e] : mn_fac.factors)
        exps[p] += static_cast<unsigned>(e * m * n);
    for (auto const& [p, e] : rep.a_factorization.factors)
        exps[p] += static_cast<unsigned>(e * m * (n - 1));
    Integer cofactor = ipow(rep.a_factorization.cofactor, m * (n - 1));
    bool complete = rep.a_factorization.complete;
    if (m >= 2) {
        for (auto const& [p, e] : rep.zero_value_factorization.factors)
            exps[p] += static_cast<unsigned>(e * (m - 1));
        cofactor *= ipow(rep.zero_value_factorization.cofactor, m - 1);
        complete = complete && rep.zero_value_factorization.complete;
    }
    rep.disc_factorization.sign = 1;
    for (auto const& [p, e] : exps)
        rep.disc_factorization.factors.push_back({p, e});
    rep.disc_factorization.cofactor = cofactor;
    rep.disc_factorization.complete = complete;

    for (auto const& [p, e] : rep.disc_factorization.factors) {
        PrimeEntry entry;
        entry.tag = classify_prime(inst, p);
        entry.verdict = prime_index_test(inst, p, opts.seed);
        if (opts.verify && word_sized(p)) {
            entry.oracle_divides = dedekind_test(F, p.get_ui(), opts.seed).divides;
            if (*entry.oracle_divides != entry.verdict.divides)
                rep.oracle_mismatch = true;
        }
        rep.per_prime.push_back(std::move(entry));
    }

    using K = Verdict::Kind;
    auto const& irr = rep.irreducibility.status;
    auto const first_divides = std::find_if(rep.per_prime.begin(), rep.per_prime.end(),
                                            [](PrimeEntry const& e) { return e.verdict.divides; });
    if (irr == Irreducibility::Disproven) {
        rep.verdict = {K::NotMonogenic, std::nullopt, std::nullopt, "F is reducible"};
    } else if (first_divides != rep.per_prime.end()) {
        rep.verdict = {K::NotMonogenic, first_divides->verdict.p, first_divides->tag.kind,
                       first_divides->verdict.p.get_str() + " divides the index (case "
                           + std::string(to_string(first_divides->tag.kind)) + ")"};
    } else if (!complete) {
        rep.verdict = {K::Unknown, std::nullopt, std::nullopt, "discriminant factorization incomplete"};
    } else if (irr == Irreducibility::Unknown) {
        rep.verdict = {K::Unknown, std::nullopt, std::nullopt, "irreducibility of F not established"};
    } else {
        rep.verdict = {K::Monogenic, std::nullopt, std::nullopt, ""};
    }

    // Shortcut when rad(mn) | rad(a): monogenic iff a and F(0) are
    // square-free. F(0) only enters D_F when m >= 2.
    bool rad_divides = true;
    for (auto const& [q, e] : mn_fac.factors)
        rad_divides = rad_divides && divides(q, inst.a);
    bool const zero_value_counts = m >= 2;
    if (rad_divides && rep.a_factorization.complete
        && (!zero_value_counts || rep.zero_value_factorization.complete)) {
        auto sqfree = [](PrimeFactorization const& f) {
            return std::all_of(f.factors.begin(), f.factors.end(), [](PrimePower const& pp) { return pp.exponent < 2; });
        };
        bool const expect = sqfree(rep.a_factorization) && (!zero_value_counts || sqfree(rep.zero_value_factorization));
        rep.shortcut_monogenic = expect;
        bool const irreducible = irr == Irreducibility::Proven || irr == Irreducibility::Assumed;
        if (irreducible && rep.verdict.kind != K::Unknown && (rep.verdict.kind == K::Monogenic) != expect)
            throw std::logic_error("square-free shortcut disagrees with the per-prime verdict for " + inst.to_string());
    }
    return rep;
}

std::string_view to_string(PairResult::Kind k)
{
    switch (k) {
    case PairResult::Kind::BothMonogenic: return "both-monogenic";
    case PairResult::Kind::FailF: return "fail-f";
    case PairResult::Kind::FailComposition: return "fail-composition";
    case PairResult::Kind::Unknown: return "unknown";
    }
    return "?";
}

bool pair_criterion_applies(CompositionInstance const& inst)
{
    Integer const an = inst.a * inst.n;
    for (long q : small_prime_divisors(inst.m))
        if (!divides(Integer(q), an))
            return false;
    return true;
}

namespace {

PairResult pair_conditions(CompositionInstance const& inst, ReportOptions const& opts)
{
    using K = PairResult::Kind;
    if (!binom_irreducible(inst.n, inst.a).irreducible)
        return {K::FailF, "x^n - a is reducible"};
    auto const irr = comp_irreducible(inst, opts.irreducibility_effort, opts.seed);
    if (irr.status == Irreducibility::Disproven)
        return {K::FailComposition, "F is reducible"};

    Budget budget = opts.budget;
    budget.seed = opts.seed;
    SquareFreeClass const sf = squarefree_class(inst.a, budget);
    if (sf.kind == SquareFreeClass::Kind::NotSquareFree)
        return {K::FailF, "a is not square-free (" + sf.witness.get_str() + "^2 divides a)"};
    for (long q : small_prime_divisors(inst.n)) {
        Integer const P(q), p2 = P * P;
        Integer ap;
        mpz_powm(ap.get_mpz_t(), inst.a.get_mpz_t(), P.get_mpz_t(), p2.get_mpz_t());
        if (divides(p2, ap - inst.a))
            return {K::FailF, "a^" + std::to_string(q) + " = a mod " + std::to_string(q) + "^2"};
    }

    bool incomplete = sf.is_unknown();
    if (inst.m >= 2) {
        Integer const c = inst.value_at_zero();
        Integer const abn = inst.a * inst.b * inst.n;
        auto const cf = factor_bounded(c, budget);
        for (auto const& [p, e] : cf.factors)
            if (e >= 2 && !divides(p, abn))
                return {K::FailComposition, p.get_str() + "^2 divides (-b)^n - a"};
        incomplete = incomplete || !cf.complete;
    }
    if (incomplete)
        return {K::Unknown, "factorization incomplete"};
    if (irr.status == Irreducibility::Unknown && !opts.assume_irreducible)
        return {K::Unknown, "irreducibility of F not established"};
    return {K::BothMonogenic, ""};
}

}  // namespace

PairResult pair_monogenic(CompositionInstance const& inst, ReportOptions const& opts)
{
    inst.validate();
    if (!pair_criterion_applies(inst))
        throw ArithmeticError("corollary inapplicable: rad(m) does not divide rad(an)");
    PairResult const result = pair_conditions(inst, opts);
    if (result.kind == PairResult::Kind::Unknown)
        return result;

    Budget budget = opts.budget;
    budget.seed = opts.seed;
    auto const f = binom_monogenic(inst.n, inst.a, budget);
    auto const rep = monogenic_report(inst, opts);
    if (f.kind != BinomMonogenicity::Kind::Unknown && rep.verdict.kind != Verdict::Kind::Unknown) {
        bool const both = f.kind == BinomMonogenicity::Kind::Yes && rep.verdict.kind == Verdict::Kind::Monogenic;
        if (both != (result.kind == PairResult::Kind::BothMonogenic))
            throw std::logic_error("pair criterion disagrees with the separate verdicts for " + inst.to_string());
    }
    return result;
}

}  // namespace monocomp
