#include "monocomp/arith.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <sstream>

namespace monocomp {

Budget Budget::from_level(std::string_view level)
{
    Budget b;
    if (level == "low") {
        b.trial_bound = 10'000;
        b.rho_iterations = std::uint64_t{1} << 16;
    } else if (level == "default") {
    } else if (level == "high") {
        b.trial_bound = 10'000'000;
        b.rho_iterations = std::uint64_t{1} << 26;
    } else {
        throw std::invalid_argument("unknown budget level '" + std::string(level) + "'");
    }
    return b;
}

Integer PrimeFactorization::value() const
{
    Integer v = cofactor;
    for (auto const& [p, e] : factors) {
        Integer pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
        v *= pe;
    }
    return sign < 0 ? Integer(-v) : v;
}

Integer PrimeFactorization::radical_of_factored() const
{
    Integer r = 1;
    for (auto const& f : factors)
        r *= f.prime;
    return r;
}

std::vector<Integer> PrimeFactorization::primes() const
{
    std::vector<Integer> out;
    out.reserve(factors.size());
    for (auto const& f : factors)
        out.push_back(f.prime);
    return out;
}

std::string PrimeFactorization::to_string() const
{
    std::ostringstream os;
    if (sign < 0)
        os << "-";
    bool first = true;
    for (auto const& [p, e] : factors) {
        if (!first)
            os << " * ";
        first = false;
        os << p;
        if (e > 1)
            os << "^" << e;
    }
    if (cofactor != 1 || first) {
        if (!first)
            os << " * ";
        os << cofactor;
        if (!complete)
            os << " (unfactored)";
    }
    return os.str();
}

IncompleteFactorization::IncompleteFactorization(PrimeFactorization partial)
    : std::runtime_error("factorization budget exhausted; unfactored cofactor " + partial.cofactor.get_str()),
      partial_(std::move(partial))
{}

std::string SquareFreeClass::to_string() const
{
    switch (kind) {
    case Kind::SquareFree:
        return "square-free";
    case Kind::NotSquareFree:
        return "not square-free (" + witness.get_str() + "^2 divides)";
    case Kind::Unknown:
        break;
    }
    return "unknown (cofactor " + cofactor.get_str() + ")";
}

unsigned p_valuation(Integer const& p, Integer const& z)
{
    if (z == 0)
        throw ArithmeticError("valuation of zero undefined");
    if (p < 2)
        throw ArithmeticError("valuation base must be a prime");
    Integer rest;
    return static_cast<unsigned>(mpz_remove(rest.get_mpz_t(), z.get_mpz_t(), p.get_mpz_t()));
}

unsigned binom_valuation(Integer const& p, unsigned j, Integer const& i)
{
    if (j < 1)
        throw ArithmeticError("binom_valuation: j must be at least 1");
    Integer pj;
    mpz_pow_ui(pj.get_mpz_t(), p.get_mpz_t(), j);
    if (i < 1 || i >= pj)
        throw ArithmeticError("binom_valuation: index out of range 1 <= i < p^j");
    return j - p_valuation(p, i);
}

std::shared_ptr<std::vector<std::uint32_t> const> primes_below(std::uint64_t bound)
{
    static std::mutex mu;
    static std::shared_ptr<std::vector<std::uint32_t> const> cache;
    static std::uint64_t cached_bound = 0;

    std::lock_guard lock(mu);
    if (cache && bound <= cached_bound)
        return cache;
    std::uint64_t const limit = std::max<std::uint64_t>({bound, cached_bound * 2, 1 << 16});
    std::vector<bool> composite(limit, false);
    auto primes = std::make_shared<std::vector<std::uint32_t>>();
    for (std::uint64_t i = 2; i < limit; ++i) {
        if (composite[i])
            continue;
        primes->push_back(static_cast<std::uint32_t>(i));
        for (std::uint64_t k = i * i; k < limit; k += i)
            composite[k] = true;
    }
    cache = std::move(primes);
    cached_bound = limit;
    return cache;
}

bool exact_root(Integer const& z, unsigned long k, Integer& root)
{
    if (k == 0)
        return false;
    if (z < 0) {
        if (k % 2 == 0)
            return false;
        Integer pos = -z;
        if (!mpz_root(root.get_mpz_t(), pos.get_mpz_t(), k))
            return false;
        root = -root;
        return true;
    }
    return mpz_root(root.get_mpz_t(), z.get_mpz_t(), k) != 0;
}

namespace {

bool miller_rabin_witness(Integer const& n, Integer const& nm1, Integer const& d, unsigned s, Integer const& a)
{
    Integer x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == nm1)
        return false;
    for (unsigned r = 1; r < s; ++r) {
        x = x * x % n;
        if (x == nm1)
            return false;
        if (x == 1)
            return true;
    }
    return true;
}

// Beyond this value the fixed bases 2..41 are no longer a proof.
Integer const& deterministic_limit()
{
    static Integer const limit("3317044064679887385961981");
    return limit;
}

Integer random_below(std::mt19937_64& rng, Integer const& n)
{
    gmp_randclass r(gmp_randinit_mt);
    r.seed(static_cast<unsigned long>(rng()));
    return r.get_z_range(n);
}

// Brent's cycle detection with batched gcds. Returns a nontrivial divisor
// of the odd composite n, or nothing once max_iter steps are spent.
std::optional<Integer> brent_rho(Integer const& n, std::uint64_t max_iter, std::mt19937_64& rng)
{
    if (mpz_even_p(n.get_mpz_t()))
        return Integer(2);
    constexpr std::uint64_t batch = 128;
    std::uint64_t spent = 0;
    Integer const nm1 = n - 1;
    while (spent < max_iter) {
        Integer y = random_below(rng, nm1) + 1;
        Integer const c = random_below(rng, nm1) + 1;
        Integer g = 1, q = 1, x, ys, diff;
        auto step = [&](Integer& v) {
            mpz_mul(v.get_mpz_t(), v.get_mpz_t(), v.get_mpz_t());
            mpz_add(v.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
            mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
            ++spent;
        };
        std::uint64_t r = 1;
        do {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i)
                step(y);
            std::uint64_t k = 0;
            while (k < r && g == 1) {
                ys = y;
                std::uint64_t const lim = std::min(batch, r - k);
                for (std::uint64_t i = 0; i < lim; ++i) {
                    step(y);
                    diff = x - y;
                    mpz_mul(q.get_mpz_t(), q.get_mpz_t(), diff.get_mpz_t());
                    mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += batch;
            }
            r *= 2;
        } while (g == 1 && spent < max_iter);

        if (g == n) {
            do {
                step(ys);
                diff = x - ys;
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != 1 && g != n)
            return g;
    }
    return std::nullopt;
}

}  // namespace

bool is_probable_prime(Integer const& z, unsigned rounds, std::uint64_t seed)
{
    if (z < 2)
        return false;
    static constexpr unsigned long bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
    for (unsigned long b : bases) {
        if (z == b)
            return true;
        if (mpz_divisible_ui_p(z.get_mpz_t(), b))
            return false;
    }
    Integer const nm1 = z - 1;
    Integer d = nm1;
    unsigned s = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d >>= 1;
        ++s;
    }
    for (unsigned long b : bases)
        if (miller_rabin_witness(z, nm1, d, s, Integer(b)))
            return false;
    if (z < deterministic_limit())
        return true;
    std::mt19937_64 rng(seed);
    Integer const span = z - 3;
    for (unsigned r = 0; r < rounds; ++r)
        if (miller_rabin_witness(z, nm1, d, s, random_below(rng, span) + 2))
            return false;
    return true;
}

PrimeFactorization factor_bounded(Integer const& z, Budget const& budget)
{
    if (z == 0)
        throw ArithmeticError("cannot factor zero");
    PrimeFactorization out;
    out.sign = z < 0 ? -1 : 1;
    Integer n = abs(z);
    std::map<Integer, unsigned> found;

    auto const primes = primes_below(budget.trial_bound);
    bool covered_sqrt = false;
    for (std::uint32_t p : *primes) {
        if (p >= budget.trial_bound)
            break;
        if (mpz_cmp_ui(n.get_mpz_t(), static_cast<unsigned long>(p) * p) < 0) {
            covered_sqrt = true;
            break;
        }
        if (!mpz_divisible_ui_p(n.get_mpz_t(), p))
            continue;
        unsigned e = 0;
        do {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
            ++e;
        } while (mpz_divisible_ui_p(n.get_mpz_t(), p));
        found[Integer(p)] += e;
    }

    std::vector<std::pair<Integer, unsigned>> pending;
    Integer leftover = 1;
    if (n > 1) {
        if (covered_sqrt)
            found[n] += 1;
        else
            pending.emplace_back(n, 1);
    }

    std::mt19937_64 rng(budget.seed);
    while (!pending.empty()) {
        auto [v, mult] = std::move(pending.back());
        pending.pop_back();
        if (v == 1)
            continue;
        if (is_probable_prime(v, budget.mr_rounds, budget.seed)) {
            found[v] += mult;
            continue;
        }
        if (mpz_perfect_power_p(v.get_mpz_t())) {
            unsigned long const top = mpz_sizeinbase(v.get_mpz_t(), 2);
            Integer root;
            bool split = false;
            for (unsigned long k = top; k >= 2 && !split; --k) {
                if (exact_root(v, k, root) && root > 1) {
                    pending.emplace_back(root, mult * static_cast<unsigned>(k));
                    split = true;
                }
            }
            if (split)
                continue;
        }
        if (auto d = brent_rho(v, budget.rho_iterations, rng)) {
            Integer other = v / *d;
            pending.emplace_back(*d, mult);
            pending.emplace_back(std::move(other), mult);
            continue;
        }
        Integer pw;
        mpz_pow_ui(pw.get_mpz_t(), v.get_mpz_t(), mult);
        leftover *= pw;
    }

    for (auto& [p, e] : found)
        out.factors.push_back({p, e});
    out.cofactor = leftover;
    out.complete = leftover == 1;
    return out;
}

Integer radical(Integer const& z, Budget const& budget)
{
    auto f = factor_bounded(z, budget);
    if (!f.complete)
        throw IncompleteFactorization(std::move(f));
    return f.radical_of_factored();
}

SquareFreeClass squarefree_class(Integer const& z, Budget const& budget)
{
    if (z == 0)
        throw ArithmeticError("square-freeness of zero undefined");
    if (abs(z) == 1)
        return SquareFreeClass::square_free();
    return squarefree_from(factor_bounded(z, budget), budget);
}

SquareFreeClass squarefree_from(PrimeFactorization const& f, Budget const& budget)
{
    for (auto const& [p, e] : f.factors)
        if (e >= 2)
            return SquareFreeClass::not_square_free(p);
    if (f.complete)
        return SquareFreeClass::square_free();

    // Every prime of the cofactor exceeds the trial bound B. A composite
    // below B^3 is then a product of exactly two such primes, distinct
    // unless the cofactor is a square.
    Integer const& c = f.cofactor;
    if (mpz_perfect_power_p(c.get_mpz_t()))
        return SquareFreeClass::unknown(c);
    Integer b3 = budget.trial_bound;
    b3 = b3 * b3 * b3;
    if (c < b3)
        return SquareFreeClass::square_free();
    return SquareFreeClass::unknown(c);
}

}  // namespace monocomp
