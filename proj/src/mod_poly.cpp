#include "monocomp/mod_poly.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace monocomp {

namespace modp {

std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    std::uint64_t s = a + b;
    return s >= p ? s - p : s;
}

std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    return a >= b ? a - b : a + (p - b);
}

std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p)
{
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1)
            r = mul(r, a, p);
        a = mul(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t inv(std::uint64_t a, std::uint64_t p)
{
    if (a % p == 0)
        throw ArithmeticError("inverse of zero modulo p");
    return pow(a, p - 2, p);
}

}  // namespace modp

ModPoly::ModPoly(std::uint64_t p) : p_(p)
{
    if (p < 2 || p >= (std::uint64_t{1} << 63))
        throw ArithmeticError("modulus must be a prime below 2^63");
}

ModPoly::ModPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs) : ModPoly(p)
{
    c_ = std::move(coeffs);
    for (auto& c : c_)
        c %= p_;
    trim();
}

ModPoly ModPoly::constant(std::uint64_t p, std::uint64_t c)
{
    return ModPoly(p, {c});
}

ModPoly ModPoly::x(std::uint64_t p)
{
    return ModPoly(p, {0, 1});
}

ModPoly ModPoly::monomial(std::uint64_t p, std::uint64_t c, std::size_t deg)
{
    std::vector<std::uint64_t> v(deg + 1, 0);
    v[deg] = c;
    return ModPoly(p, std::move(v));
}

void ModPoly::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

void ModPoly::require_same(ModPoly const& o) const
{
    if (p_ != o.p_)
        throw ArithmeticError("modulus mismatch");
}

ModPoly& ModPoly::operator+=(ModPoly const& o)
{
    require_same(o);
    if (c_.size() < o.c_.size())
        c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] = modp::add(c_[i], o.c_[i], p_);
    trim();
    return *this;
}

ModPoly& ModPoly::operator-=(ModPoly const& o)
{
    require_same(o);
    if (c_.size() < o.c_.size())
        c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] = modp::sub(c_[i], o.c_[i], p_);
    trim();
    return *this;
}

ModPoly& ModPoly::operator*=(ModPoly const& o)
{
    require_same(o);
    if (is_zero() || o.is_zero()) {
        c_.clear();
        return *this;
    }
    std::vector<std::uint64_t> r(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0)
            continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] = modp::add(r[i + j], modp::mul(c_[i], o.c_[j], p_), p_);
    }
    c_ = std::move(r);
    trim();
    return *this;
}

ModPoly ModPoly::operator-() const
{
    ModPoly r(*this);
    for (auto& c : r.c_)
        c = c ? p_ - c : 0;
    return r;
}

ModPoly ModPoly::scaled(std::uint64_t s) const
{
    ModPoly r(*this);
    s %= p_;
    for (auto& c : r.c_)
        c = modp::mul(c, s, p_);
    r.trim();
    return r;
}

std::pair<ModPoly, ModPoly> ModPoly::divmod(ModPoly const& d) const
{
    require_same(d);
    if (d.is_zero())
        throw ArithmeticError("polynomial division by zero");
    ModPoly rem(*this);
    if (degree() < d.degree())
        return {ModPoly(p_), rem};
    std::size_t const dd = d.c_.size() - 1;
    std::uint64_t const lead_inv = modp::inv(d.c_.back(), p_);
    std::vector<std::uint64_t> q(c_.size() - dd, 0);
    for (std::size_t k = c_.size(); k-- > dd;) {
        std::uint64_t const t = modp::mul(rem.c_[k], lead_inv, p_);
        q[k - dd] = t;
        if (t == 0)
            continue;
        for (std::size_t i = 0; i <= dd; ++i)
            rem.c_[k - dd + i] = modp::sub(rem.c_[k - dd + i], modp::mul(t, d.c_[i], p_), p_);
    }
    rem.trim();
    return {ModPoly(p_, std::move(q)), std::move(rem)};
}

ModPoly ModPoly::monic() const
{
    if (is_zero())
        return *this;
    return scaled(modp::inv(leading(), p_));
}

ModPoly ModPoly::derivative() const
{
    if (c_.size() <= 1)
        return ModPoly(p_);
    std::vector<std::uint64_t> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        r[i - 1] = modp::mul(c_[i], i % p_, p_);
    return ModPoly(p_, std::move(r));
}

std::uint64_t ModPoly::eval(std::uint64_t x) const
{
    std::uint64_t acc = 0;
    x %= p_;
    for (std::size_t k = c_.size(); k-- > 0;)
        acc = modp::add(modp::mul(acc, x, p_), c_[k], p_);
    return acc;
}

bool canonical_less(ModPoly const& a, ModPoly const& b)
{
    if (a.degree() != b.degree())
        return a.degree() < b.degree();
    return a.coeffs() < b.coeffs();
}

std::string ModPoly::to_string() const
{
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < c_.size(); ++i)
        os << (i ? ", " : "") << c_[i];
    os << "]";
    return os.str();
}

ModPoly gcd(ModPoly const& u, ModPoly const& v)
{
    if (u.modulus() != v.modulus())
        throw ArithmeticError("modulus mismatch");
    ModPoly a = u, b = v;
    while (!b.is_zero()) {
        ModPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

ModPoly mulmod(ModPoly const& a, ModPoly const& b, ModPoly const& m)
{
    return (a * b) % m;
}

ModPoly powmod(ModPoly const& base, Integer const& e, ModPoly const& m)
{
    if (e < 0)
        throw ArithmeticError("negative exponent");
    ModPoly result = ModPoly::constant(m.modulus(), 1) % m;
    ModPoly b = base % m;
    std::size_t const bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = mulmod(result, result, m);
        if (mpz_tstbit(e.get_mpz_t(), i))
            result = mulmod(result, b, m);
    }
    return result;
}

ModPoly pow_x(std::uint64_t p, Integer const& e, ModPoly const& modulus)
{
    if (modulus.degree() < 1)
        throw ArithmeticError("pow_x: modulus must have degree at least 1");
    return powmod(ModPoly::x(p), e, modulus);
}

namespace {

std::vector<unsigned> prime_divisors(unsigned n)
{
    std::vector<unsigned> out;
    for (unsigned q = 2; q * q <= n; ++q) {
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

ModPoly pth_root(ModPoly const& f)
{
    std::uint64_t const p = f.modulus();
    std::vector<std::uint64_t> r;
    for (std::size_t i = 0; i < f.coeffs().size(); i += p)
        r.push_back(f.coeffs()[i]);
    return ModPoly(p, std::move(r));
}

ModPoly random_poly(std::uint64_t p, int below_degree, std::mt19937_64& rng)
{
    std::vector<std::uint64_t> c(static_cast<std::size_t>(below_degree));
    for (auto& v : c)
        v = rng() % p;
    return ModPoly(p, std::move(c));
}

void equal_degree(ModPoly const& f, unsigned d, std::mt19937_64& rng, std::vector<ModPoly>& out)
{
    if (static_cast<unsigned>(f.degree()) == d) {
        out.push_back(f);
        return;
    }
    std::uint64_t const p = f.modulus();
    Integer exponent;
    if (p != 2) {
        mpz_ui_pow_ui(exponent.get_mpz_t(), p, d);
        exponent = (exponent - 1) / 2;
    }
    ModPoly const one = ModPoly::constant(p, 1);
    for (;;) {
        ModPoly a = random_poly(p, f.degree(), rng);
        if (a.degree() < 1)
            continue;
        ModPoly g;
        if (p == 2) {
            ModPoly t = a, acc = a;
            for (unsigned i = 1; i < d; ++i) {
                t = mulmod(t, t, f);
                acc += t;
            }
            g = gcd(acc, f);
        } else {
            g = gcd(powmod(a, exponent, f) - one, f);
        }
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree(g, d, rng, out);
            equal_degree((f / g).monic(), d, rng, out);
            return;
        }
    }
}

}  // namespace

bool is_irreducible(ModPoly const& u)
{
    if (u.degree() < 1)
        throw ArithmeticError("irreducibility test needs degree at least 1");
    if (u.degree() == 1)
        return true;
    ModPoly const f = u.monic();
    std::uint64_t const p = f.modulus();
    unsigned const n = static_cast<unsigned>(f.degree());
    ModPoly const x = ModPoly::x(p);
    Integer const P(static_cast<unsigned long>(p));

    // Frobenius powers x^(p^k) for k = 0..n, computed once.
    std::vector<ModPoly> frob{x % f};
    for (unsigned k = 1; k <= n; ++k)
        frob.push_back(powmod(frob.back(), P, f));
    if (!((frob[n] - x) % f).is_zero())
        return false;
    for (unsigned q : prime_divisors(n))
        if (!gcd(frob[n / q] - x, f).is_one())
            return false;
    return true;
}

std::vector<std::pair<ModPoly, unsigned>> squarefree_decomposition(ModPoly const& u)
{
    if (u.is_zero())
        throw ArithmeticError("square-free decomposition of zero");
    std::vector<std::pair<ModPoly, unsigned>> out;
    ModPoly const f = u.monic();
    if (f.degree() < 1)
        return out;
    std::uint64_t const p = f.modulus();
    auto append_root = [&](ModPoly const& c) {
        for (auto& [g, e] : squarefree_decomposition(pth_root(c)))
            out.emplace_back(std::move(g), static_cast<unsigned>(e * p));
    };
    ModPoly const fp = f.derivative();
    if (fp.is_zero()) {
        append_root(f);
        return out;
    }
    ModPoly c = gcd(f, fp);
    ModPoly w = f / c;
    unsigned i = 1;
    while (!w.is_one()) {
        ModPoly y = gcd(w, c);
        ModPoly z = (w / y).monic();
        if (z.degree() > 0)
            out.emplace_back(std::move(z), i);
        ++i;
        w = std::move(y);
        c = (c / w).monic();
    }
    if (c.degree() > 0)
        append_root(c);
    return out;
}

std::vector<std::pair<ModPoly, unsigned>> distinct_degree(ModPoly const& u)
{
    std::vector<std::pair<ModPoly, unsigned>> out;
    ModPoly f = u.monic();
    std::uint64_t const p = f.modulus();
    Integer const P(static_cast<unsigned long>(p));
    ModPoly const x = ModPoly::x(p);
    ModPoly h = x % f;
    for (unsigned d = 1; f.degree() >= static_cast<int>(2 * d); ++d) {
        h = powmod(h, P, f);
        ModPoly g = gcd(h - x, f);
        if (!g.is_one()) {
            f = (f / g).monic();
            h = h % f;
            out.emplace_back(std::move(g), d);
        }
    }
    if (f.degree() > 0)
        out.emplace_back(f, static_cast<unsigned>(f.degree()));
    return out;
}

ModFactorization factor(ModPoly const& u, std::uint64_t seed)
{
    if (u.is_zero())
        throw ArithmeticError("cannot factor the zero polynomial");
    ModFactorization out;
    out.unit = u.leading();
    std::mt19937_64 rng(seed);
    for (auto const& [part, mult] : squarefree_decomposition(u)) {
        for (auto const& [block, d] : distinct_degree(part)) {
            std::vector<ModPoly> pieces;
            equal_degree(block, d, rng, pieces);
            for (auto& g : pieces)
                out.factors.push_back({std::move(g), mult});
        }
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](ModFactor const& a, ModFactor const& b) { return canonical_less(a.g, b.g); });
    return out;
}

ModPoly ModFactorization::product(std::uint64_t p) const
{
    ModPoly r = ModPoly::constant(p, unit);
    for (auto const& [g, e] : factors)
        for (unsigned i = 0; i < e; ++i)
            r *= g;
    return r;
}

std::string ModFactorization::to_string() const
{
    std::ostringstream os;
    os << unit;
    for (auto const& [g, e] : factors) {
        os << " * " << g.to_string();
        if (e > 1)
            os << "^" << e;
    }
    return os.str();
}

}  // namespace monocomp
