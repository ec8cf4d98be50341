#include "monocomp/int_poly.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace monocomp {

IntPoly::IntPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs))
{
    trim();
}

IntPoly::IntPoly(std::initializer_list<long> coeffs)
{
    c_.reserve(coeffs.size());
    for (long c : coeffs)
        c_.emplace_back(c);
    trim();
}

IntPoly IntPoly::constant(Integer c)
{
    return IntPoly(std::vector<Integer>{std::move(c)});
}

IntPoly IntPoly::x()
{
    return IntPoly{0, 1};
}

IntPoly IntPoly::monomial(Integer c, std::size_t deg)
{
    std::vector<Integer> v(deg + 1);
    v[deg] = std::move(c);
    return IntPoly(std::move(v));
}

IntPoly IntPoly::binomial(std::size_t deg, Integer const& c)
{
    std::vector<Integer> v(deg + 1);
    v[deg] = 1;
    v[0] -= c;
    return IntPoly(std::move(v));
}

void IntPoly::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

Integer const& IntPoly::leading() const
{
    if (c_.empty())
        throw ArithmeticError("zero polynomial has no leading coefficient");
    return c_.back();
}

IntPoly& IntPoly::operator+=(IntPoly const& o)
{
    if (c_.size() < o.c_.size())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(IntPoly const& o)
{
    if (c_.size() < o.c_.size())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] -= o.c_[i];
    trim();
    return *this;
}

IntPoly operator*(IntPoly const& a, IntPoly const& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Integer> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j] == 0)
                continue;
            mpz_addmul(r[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
        }
    }
    return IntPoly(std::move(r));
}

IntPoly& IntPoly::operator*=(IntPoly const& o)
{
    *this = *this * o;
    return *this;
}

IntPoly& IntPoly::operator*=(Integer const& s)
{
    for (auto& c : c_)
        c *= s;
    trim();
    return *this;
}

IntPoly IntPoly::operator-() const
{
    IntPoly r(*this);
    for (auto& c : r.c_)
        c = -c;
    return r;
}

IntPoly IntPoly::pow(unsigned long e) const
{
    IntPoly result = constant(1);
    IntPoly base = *this;
    while (e) {
        if (e & 1)
            result *= base;
        e >>= 1;
        if (e)
            base = base * base;
    }
    return result;
}

IntPoly IntPoly::derivative() const
{
    if (c_.size() <= 1)
        return {};
    std::vector<Integer> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        r[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return IntPoly(std::move(r));
}

Integer IntPoly::content() const
{
    Integer g = 0;
    for (auto const& c : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1)
            break;
    }
    return g;
}

Integer IntPoly::eval(Integer const& x) const
{
    Integer acc = 0;
    for (std::size_t k = c_.size(); k-- > 0;)
        acc = acc * x + c_[k];
    return acc;
}

std::string IntPoly::to_string() const
{
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < c_.size(); ++i)
        os << (i ? ", " : "") << c_[i];
    os << "]";
    return os.str();
}

IntPoly IntPoly::parse(std::string_view text)
{
    auto fail = [&](char const* why) {
        return std::invalid_argument("malformed polynomial literal '" + std::string(text) + "': " + why);
    };
    auto trim = [](std::string_view v) {
        while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front())))
            v.remove_prefix(1);
        while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back())))
            v.remove_suffix(1);
        return std::string(v);
    };
    std::string s = trim(text);
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw fail("expected a bracketed coefficient list");
    s = trim(std::string_view(s).substr(1, s.size() - 2));
    std::vector<Integer> coeffs;
    if (s.empty())
        return {};
    std::size_t pos = 0;
    for (;;) {
        std::size_t const comma = s.find(',', pos);
        std::string tok = trim(std::string_view(s).substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
        if (tok.empty())
            throw fail("empty coefficient");
        std::size_t start = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
        if (start == tok.size())
            throw fail("sign without digits");
        for (std::size_t i = start; i < tok.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(tok[i])))
                throw fail("coefficients must be decimal integers");
        if (tok[0] == '+')
            tok.erase(0, 1);
        coeffs.emplace_back(tok, 10);
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    return IntPoly(std::move(coeffs));
}

IntPoly compose(IntPoly const& f, IntPoly const& g)
{
    IntPoly acc;
    for (std::size_t k = f.coeffs().size(); k-- > 0;) {
        acc = acc * g;
        acc += IntPoly::constant(f.coeffs()[k]);
    }
    return acc;
}

IntPoly pseudo_remainder(IntPoly const& u, IntPoly const& v)
{
    if (v.is_zero())
        throw ArithmeticError("pseudo-remainder by zero");
    if (u.degree() < v.degree())
        return u;
    std::vector<Integer> r = u.coeffs();
    std::size_t const dv = static_cast<std::size_t>(v.degree());
    Integer const& lc = v.leading();
    for (std::size_t k = r.size(); k-- > dv;) {
        Integer const t = r[k];
        for (auto& c : r)
            c *= lc;
        if (t != 0)
            for (std::size_t i = 0; i <= dv; ++i)
                mpz_submul(r[k - dv + i].get_mpz_t(), t.get_mpz_t(), v.coeffs()[i].get_mpz_t());
        r.pop_back();
    }
    return IntPoly(std::move(r));
}

std::pair<IntPoly, IntPoly> divmod_monic(IntPoly const& u, IntPoly const& v)
{
    if (!v.is_monic())
        throw ArithmeticError("divmod_monic: divisor must be monic");
    if (u.degree() < v.degree())
        return {IntPoly{}, u};
    std::vector<Integer> r = u.coeffs();
    std::size_t const dv = static_cast<std::size_t>(v.degree());
    std::vector<Integer> q(r.size() - dv);
    for (std::size_t k = r.size(); k-- > dv;) {
        Integer const t = r[k];
        q[k - dv] = t;
        if (t == 0)
            continue;
        for (std::size_t i = 0; i <= dv; ++i)
            mpz_submul(r[k - dv + i].get_mpz_t(), t.get_mpz_t(), v.coeffs()[i].get_mpz_t());
    }
    r.resize(dv);
    return {IntPoly(std::move(q)), IntPoly(std::move(r))};
}

namespace {

Integer ipow(Integer const& b, unsigned long e)
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

IntPoly div_exact_unchecked(IntPoly const& u, Integer const& c)
{
    std::vector<Integer> r = u.coeffs();
    for (auto& x : r)
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    return IntPoly(std::move(r));
}

}  // namespace

Integer resultant(IntPoly const& u, IntPoly const& v)
{
    if (u.is_zero() || v.is_zero())
        throw ArithmeticError("resultant with the zero polynomial");
    if (u.degree() == 0)
        return ipow(u.leading(), static_cast<unsigned long>(v.degree()));
    if (v.degree() == 0)
        return ipow(v.leading(), static_cast<unsigned long>(u.degree()));

    IntPoly A = u, B = v;
    Integer const a = A.content(), b = B.content();
    A = div_exact_unchecked(A, a);
    B = div_exact_unchecked(B, b);
    Integer const t = ipow(a, static_cast<unsigned long>(B.degree())) * ipow(b, static_cast<unsigned long>(A.degree()));
    int s = 1;
    if (A.degree() < B.degree()) {
        std::swap(A, B);
        if (A.degree() % 2 && B.degree() % 2)
            s = -s;
    }

    Integer g = 1, h = 1;
    for (;;) {
        unsigned long const delta = static_cast<unsigned long>(A.degree() - B.degree());
        if (A.degree() % 2 && B.degree() % 2)
            s = -s;
        IntPoly R = pseudo_remainder(A, B);
        A = std::move(B);
        B = div_exact_unchecked(R, g * ipow(h, delta));
        g = A.leading();
        if (delta > 0)
            h = ipow(g, delta) / ipow(h, delta - 1);
        if (B.is_zero())
            return 0;
        if (B.degree() == 0)
            break;
    }
    unsigned long const da = static_cast<unsigned long>(A.degree());
    h = ipow(B.leading(), da) / ipow(h, da - 1);
    return s * t * h;
}

Integer discriminant(IntPoly const& u)
{
    if (u.degree() < 1)
        throw ArithmeticError("discriminant of a constant polynomial");
    unsigned long const n = static_cast<unsigned long>(u.degree());
    Integer r = resultant(u, u.derivative());
    mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), u.leading().get_mpz_t());
    if ((n * (n - 1) / 2) % 2)
        r = -r;
    return r;
}

ModPoly reduce_mod(IntPoly const& u, std::uint64_t p)
{
    std::vector<std::uint64_t> r(u.coeffs().size());
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = mpz_fdiv_ui(u.coeffs()[i].get_mpz_t(), p);
    return ModPoly(p, std::move(r));
}

IntPoly lift(ModPoly const& u)
{
    std::vector<Integer> r;
    r.reserve(u.coeffs().size());
    for (auto c : u.coeffs())
        r.emplace_back(static_cast<unsigned long>(c));
    return IntPoly(std::move(r));
}

IntPoly div_exact(IntPoly const& u, Integer const& c)
{
    if (c == 0)
        throw ArithmeticError("division by zero");
    for (auto const& x : u.coeffs())
        if (!mpz_divisible_p(x.get_mpz_t(), c.get_mpz_t()))
            throw ArithmeticError("not exactly divisible");
    return div_exact_unchecked(u, c);
}

}  // namespace monocomp
