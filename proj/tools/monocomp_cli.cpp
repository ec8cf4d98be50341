// Command-line front end for libmonocomp. Talks to the library only through
// the C interface and renders its JSON records as text, JSON lines or CSV.

#include "monocomp/monocomp.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

using json = nlohmann::ordered_json;

namespace {

enum class Format { Text, Json, Csv };

struct Common {
    bool as_json = false;
    bool as_csv = false;
    std::uint64_t seed = 0x6d6f6e6f636f6d70ULL;
    std::string budget = "default";
    unsigned shards = 1;
    bool verify = false;
    bool assume_irreducible = false;
    bool strict = false;

    Format format() const { return as_json ? Format::Json : as_csv ? Format::Csv : Format::Text; }
};

std::string str(json const& v)
{
    if (v.is_null())
        return "";
    if (v.is_string())
        return v.get<std::string>();
    return v.dump();
}

std::string joined(json const& arr, char const* sep = ";")
{
    std::string out;
    for (auto const& v : arr) {
        if (!out.empty())
            out += sep;
        out += str(v);
    }
    return out;
}

std::string csv_field(std::string const& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"')
            q += '"';
        q += c;
    }
    return q + '"';
}

std::string csv_row(std::initializer_list<std::string> fields)
{
    std::string out;
    bool first = true;
    for (auto const& f : fields) {
        if (!first)
            out += ',';
        out += csv_field(f);
        first = false;
    }
    return out;
}

// "x^m - b" with the sign of b folded in.
std::string inner_text(json const& r)
{
    std::string const m = str(r["m"]);
    std::string const b = str(r["b"]);
    std::string g = m == "1" ? "x" : "x^" + m;
    if (b == "0")
        return g;
    if (b.front() == '-')
        return g + " + " + b.substr(1);
    return g + " - " + b;
}

std::string paren(json const& reason)
{
    std::string const s = str(reason);
    return s.empty() ? "" : " (" + s + ")";
}

std::string outer_text(std::string const& var, std::string const& n, std::string const& a)
{
    std::string s = var + "^" + n;
    return a.front() == '-' ? s + " + " + a.substr(1) : s + " - " + a;
}

char const* const kCheckHeader = "m,n,a,b,verdict,primes,case,index,witness_prime,witness_factor,irreducibility,"
                                 "disc_magnitude,paper_sign,f_verdict,pair";

void render_check(json const& r, Format fmt, bool header)
{
    if (fmt == Format::Json) {
        std::cout << r.dump() << '\n';
        return;
    }
    json const& w = r["witness"];
    if (fmt == Format::Csv) {
        if (header)
            std::cout << kCheckHeader << '\n';
        std::string wp, wf;
        if (!w.is_null()) {
            wp = str(w.value("prime", json()));
            if (w.contains("factor"))
                wf = w["factor"].dump();
            else if (w.contains("factor_of_F"))
                wf = w["factor_of_F"].dump();
        }
        std::cout << csv_row({str(r["m"]), str(r["n"]), str(r["a"]), str(r["b"]), str(r["verdict"]),
                              joined(r["primes"]), joined(r["case"]), joined(r["index"]), wp, wf,
                              str(r["irreducibility"]), str(r["disc"]["magnitude"]), str(r["disc"]["paper_sign"]),
                              str(r["f"]["monogenic"]),
                              r["pair"].is_null() ? std::string() : str(r["pair"]["verdict"])})
                  << '\n';
        return;
    }
    std::string const F = "(" + inner_text(r) + ")^" + str(r["n"]) + (str(r["a"]).front() == '-' ? " + " : " - ")
        + (str(r["a"]).front() == '-' ? str(r["a"]).substr(1) : str(r["a"]));
    std::cout << "F = " << F << "  (m=" << str(r["m"]) << ", n=" << str(r["n"]) << ", a=" << str(r["a"])
              << ", b=" << str(r["b"]) << ")\n";
    std::cout << "  verdict: " << str(r["verdict"]) << paren(r["reason"]) << '\n';
    std::cout << "  irreducibility: " << str(r["irreducibility"]);
    if (!str(r["irreducibility_method"]).empty())
        std::cout << " via " << str(r["irreducibility_method"]);
    std::cout << '\n';
    json const& d = r["disc"];
    std::cout << "  |D_F| = " << str(d["factorization"]) << (d["complete"].get<bool>() ? "" : " (incomplete)") << '\n';
    std::cout << "  sign: closed form " << (d["paper_sign"].get<int>() > 0 ? "+" : "-");
    if (!d["oracle_sign"].is_null())
        std::cout << ", resultant " << (d["oracle_sign"].get<int>() > 0 ? "+" : "-")
                  << (d["sign_mismatch"].get<bool>() ? "  [sign-mismatch]" : "");
    std::cout << '\n';
    for (std::size_t i = 0; i < r["primes"].size(); ++i) {
        std::cout << "  p = " << str(r["primes"][i]) << "  case " << str(r["case"][i]) << "  " << str(r["index"][i]);
        if (r.contains("oracle"))
            std::cout << "  (oracle: " << str(r["oracle"][i]) << ")";
        std::cout << '\n';
    }
    if (!w.is_null()) {
        if (w.contains("prime")) {
            std::cout << "  witness: p = " << str(w["prime"]) << ", case " << str(w["case"]);
            if (w.contains("factor"))
                std::cout << ", factor " << w["factor"].dump();
            std::cout << '\n';
        } else if (w.contains("factor_of_F")) {
            std::cout << "  witness: proper factor " << w["factor_of_F"].dump() << '\n';
        }
    }
    std::cout << "  f = " << outer_text("x", str(r["n"]), str(r["a"])) << ": " << str(r["f"]["monogenic"]) << paren(r["f"]["reason"])
              << '\n';
    if (!r["pair"].is_null())
        std::cout << "  pair: " << str(r["pair"]["verdict"]) << paren(r["pair"]["reason"]) << '\n';
}

void render_disc(json const& r, Format fmt)
{
    if (fmt == Format::Json) {
        std::cout << r.dump() << '\n';
        return;
    }
    std::string const printed = r["paper_sign"].get<int>() > 0 ? "+" : "-";
    std::string const oracle = r["oracle_sign"].is_null() ? "" : r["oracle_sign"].get<int>() > 0 ? "+" : "-";
    if (fmt == Format::Csv) {
        std::cout << "m,n,a,b,magnitude,paper_sign,oracle_sign,flags\n"
                  << csv_row({str(r["m"]), str(r["n"]), str(r["a"]), str(r["b"]), str(r["magnitude"]), printed, oracle,
                              joined(r["flags"])})
                  << '\n';
        return;
    }
    std::cout << "magnitude " << str(r["magnitude"]) << "\npaper-sign " << printed << '\n';
    if (!oracle.empty())
        std::cout << "oracle-sign " << oracle << '\n';
    for (auto const& f : r["flags"])
        std::cout << "flag " << str(f) << '\n';
}

void render_dedekind(json const& r, Format fmt)
{
    if (fmt == Format::Json) {
        std::cout << r.dump() << '\n';
        return;
    }
    std::string const wit = r["witness"].is_null() ? "" : r["witness"].dump();
    std::ostringstream fac;
    for (auto const& f : r["factorization_mod_p"]) {
        if (fac.tellp() > 0)
            fac << ' ';
        fac << f["factor"].dump() << '^' << f["multiplicity"].get<unsigned>();
    }
    if (fmt == Format::Csv) {
        std::cout << "poly,p,verdict,witness,factorization\n"
                  << csv_row({r["poly"].dump(), str(r["p"]), str(r["verdict"]), wit, fac.str()}) << '\n';
        return;
    }
    std::cout << str(r["verdict"]);
    if (!wit.empty())
        std::cout << ", witness " << wit;
    std::cout << "\nfactorization mod " << str(r["p"]) << ": " << fac.str() << '\n';
}

void render_binom(json const& r, Format fmt)
{
    if (fmt == Format::Json) {
        std::cout << r.dump() << '\n';
        return;
    }
    if (fmt == Format::Csv) {
        std::cout << "n,b,irreducible,verdict,reason\n"
                  << csv_row({str(r["n"]), str(r["b"]), r["irreducible"].get<bool>() ? "true" : "false",
                              str(r["verdict"]), str(r["reason"])})
                  << '\n';
        return;
    }
    std::cout << outer_text("x", str(r["n"]), str(r["b"])) << ": " << str(r["verdict"]) << paren(r["reason"]) << '\n';
    if (r.contains("factor"))
        std::cout << "  proper factor " << r["factor"].dump() << '\n';
}

void render_family(json const& r, Format fmt, bool header)
{
    if (fmt == Format::Json) {
        std::cout << r.dump() << '\n';
        return;
    }
    if (fmt == Format::Csv) {
        if (header)
            std::cout << "p,zero_value,square_free,square_witness,verdict,report_verdict,irreducibility\n";
        std::cout << csv_row({str(r["p"]), str(r["zero_value"]), str(r["square_free"]), str(r["square_witness"]),
                              str(r["verdict"]), str(r["report_verdict"]), str(r["irreducibility"])})
                  << '\n';
        return;
    }
    std::cout << "p = " << str(r["p"]) << ": " << str(r["verdict"]) << "  ((-2p)^p - p is " << str(r["square_free"]);
    if (!r["square_witness"].is_null())
        std::cout << ", " << str(r["square_witness"]) << "^2 divides it";
    std::cout << ")\n";
    std::cout << "  (-2p)^p - p = " << str(r["zero_value_factorization"]) << '\n';
}

bool parse_range(std::string const& text, mc_range& out)
{
    auto to_long = [](std::string const& s, long& v) {
        try {
            std::size_t used = 0;
            v = std::stol(s, &used);
            return used == s.size();
        } catch (std::exception const&) {
            return false;
        }
    };
    auto const dots = text.find("..");
    if (dots == std::string::npos) {
        if (!to_long(text, out.lo))
            return false;
        out.hi = out.lo;
        return true;
    }
    return to_long(text.substr(0, dots), out.lo) && to_long(text.substr(dots + 2), out.hi);
}

int finish(mc_context* ctx, mc_status st, mc_result* res, Common const& c, char const* what)
{
    if (st != MC_OK) {
        char const* detail = mc_context_last_error(ctx);
        std::cerr << "monocomp " << what << ": " << (*detail ? detail : mc_status_string(st)) << '\n';
        return st == MC_ERR_INTERNAL ? 1 : 2;
    }
    bool const unknown = mc_result_has_unknown(res) != 0;
    mc_result_destroy(res);
    return c.strict && unknown ? 3 : 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Monogenicity of (x^m - b)^n - a"};
    app.require_subcommand(1);
    app.fallthrough();

    Common c;
    app.add_flag("--json", c.as_json, "One JSON object per record");
    app.add_flag("--csv", c.as_csv, "CSV with a header row");
    app.add_option("--seed", c.seed, "Seed for every randomized step");
    app.add_option("--budget", c.budget, "Factorization effort")->check(CLI::IsMember({"low", "default", "high"}));
    app.add_option("--shards", c.shards, "Worker threads for search")->check(CLI::PositiveNumber);
    app.add_flag("--verify", c.verify, "Recompute the discriminant and rerun every prime through the oracle");
    app.add_flag("--assume-irreducible", c.assume_irreducible, "Treat F as irreducible when no proof is found");
    app.add_flag("--strict", c.strict, "Exit 3 when any verdict is unknown");

    long m = 1, n = 2;
    std::string a, b;
    auto* check = app.add_subcommand("check", "Monogenicity report for one instance");
    check->add_option("-m", m)->required();
    check->add_option("-n", n)->required();
    check->add_option("-a", a)->required();
    check->add_option("-b", b)->required();

    auto* disc = app.add_subcommand("disc", "Closed-form discriminant");
    disc->add_option("-m", m)->required();
    disc->add_option("-n", n)->required();
    disc->add_option("-a", a)->required();
    disc->add_option("-b", b)->required();

    std::string poly, prime;
    auto* ded = app.add_subcommand("dedekind", "Dedekind criterion for a monic polynomial at one prime");
    ded->add_option("--poly", poly, "Ascending coefficients, e.g. [-5,0,1]")->required();
    ded->add_option("-p", prime)->required();

    auto* binom = app.add_subcommand("binom", "Monogenicity of x^n - b");
    binom->add_option("-n", n)->required();
    binom->add_option("-b", b)->required();

    std::string rm = "1", rn = "2", ra = "1", rb = "0";
    bool require_pair = false;
    auto* search = app.add_subcommand("search", "Grid search; ranges are v or lo..hi");
    search->add_option("-m", rm);
    search->add_option("-n", rn);
    search->add_option("-a", ra);
    search->add_option("-b", rb);
    search->add_flag("--require-pair", require_pair, "Keep only pairs with both polynomials monogenic");

    unsigned long p_max = 13;
    auto* example = app.add_subcommand("example", "The family (x^p - 2p)^p - p for odd primes p <= P");
    example->add_option("-p", p_max, "Largest prime considered");

    try {
        app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
        int const rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    if (c.as_json && c.as_csv) {
        std::cerr << "monocomp: --json and --csv are exclusive\n";
        return 2;
    }

    mc_context* ctx = nullptr;
    mc_context_create(&ctx);
    struct Guard {
        mc_context* ctx;
        ~Guard() { mc_context_destroy(ctx); }
    } guard{ctx};
    mc_context_set_seed(ctx, c.seed);
    mc_context_set_budget(ctx, c.budget.c_str());
    mc_context_set_shards(ctx, c.shards);
    mc_context_set_verify(ctx, c.verify);
    mc_context_set_assume_irreducible(ctx, c.assume_irreducible);

    Format const fmt = c.format();
    mc_result* res = nullptr;
    mc_status st = MC_OK;
    char const* what = "";
    auto each = [&](auto&& render) {
        if (st != MC_OK)
            return;
        for (std::size_t i = 0; i < mc_result_count(res); ++i)
            render(json::parse(mc_result_record(res, i)), i == 0);
    };

    if (*check) {
        what = "check";
        st = mc_check(ctx, m, n, a.c_str(), b.c_str(), &res);
        each([&](json const& r, bool first) { render_check(r, fmt, first); });
    } else if (*disc) {
        what = "disc";
        st = mc_disc(ctx, m, n, a.c_str(), b.c_str(), &res);
        each([&](json const& r, bool) { render_disc(r, fmt); });
    } else if (*ded) {
        what = "dedekind";
        st = mc_dedekind(ctx, poly.c_str(), prime.c_str(), &res);
        each([&](json const& r, bool) { render_dedekind(r, fmt); });
    } else if (*binom) {
        what = "binom";
        st = mc_binom(ctx, n, b.c_str(), &res);
        each([&](json const& r, bool) { render_binom(r, fmt); });
    } else if (*search) {
        what = "search";
        mc_range r[4];
        std::string const* texts[4] = {&rm, &rn, &ra, &rb};
        for (int i = 0; i < 4; ++i)
            if (!parse_range(*texts[i], r[i])) {
                std::cerr << "monocomp search: malformed range '" << *texts[i] << "'\n";
                return 2;
            }
        st = mc_search(ctx, r[0], r[1], r[2], r[3], require_pair, &res);
        if (st == MC_OK && fmt == Format::Csv && mc_result_count(res) == 0)
            std::cout << kCheckHeader << '\n';
        each([&](json const& rec, bool first) {
            if (fmt == Format::Text && !first)
                std::cout << '\n';
            render_check(rec, fmt, first);
        });
    } else if (*example) {
        what = "example";
        st = mc_example(ctx, p_max, &res);
        each([&](json const& r, bool first) { render_family(r, fmt, first); });
    }
    std::cout.flush();
    return finish(ctx, st, res, c, what);
}
