#include "hyperasym/cli/cli.hpp"

#include "hyperasym/asymp/ck.hpp"
#include "hyperasym/asymp/full.hpp"
#include "hyperasym/continuation/continuation.hpp"
#include "hyperasym/expansion/evaluate.hpp"
#include "hyperasym/expansion/json.hpp"
#include "hyperasym/expansion/laplace.hpp"
#include "hyperasym/expansion/operator.hpp"
#include "hyperasym/hring/eval.hpp"
#include "hyperasym/hring/factory.hpp"
#include "hyperasym/hring/parse.hpp"
#include "hyperasym/identities/identities.hpp"
#include "hyperasym/numerics/hypergeom.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

namespace hyperasym {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string a, b, lambda = "1", branch = "upper", format = "json", out, expr, suite, form = "printed";
    std::size_t terms = 12;
    int prec = 50;
    unsigned qmax = 6, smax = 4;
};

std::string sci(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

// Splits at commas outside brackets and parentheses.
std::vector<std::string> split_list(const std::string& s)
{
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '[' || c == '(')
            ++depth;
        if (c == ']' || c == ')')
            --depth;
        if (c == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else if (c != ' ') {
            cur += c;
        }
    }
    if (!cur.empty())
        out.push_back(cur);
    return out;
}

std::vector<Rational> rationals(const std::string& s)
{
    std::vector<Rational> v;
    for (const auto& t : split_list(s))
        v.push_back(Rational::parse(t));
    return v;
}

std::vector<CycloNumber> cyclos(const std::string& s)
{
    std::vector<CycloNumber> v;
    for (const auto& t : split_list(s))
        v.push_back(CycloNumber::parse(t));
    return v;
}

Json rational_list(const std::vector<Rational>& v)
{
    Json j = Json::array();
    for (const auto& x : v)
        j.push_back(x.str());
    return j;
}

HyperParams params_of(const RunConfig& c)
{
    HyperParams p;
    p.a = rationals(c.a);
    p.b = rationals(c.b);
    p.lambda = CycloNumber::parse(c.lambda);
    p.validate();
    return p;
}

Json params_json(const HyperParams& p)
{
    return {{"a", rational_list(p.a)}, {"b", rational_list(p.b)}, {"lambda", p.lambda.str()}};
}

std::string expansion_text(const AsymptoticExpansion& e)
{
    std::ostringstream os;
    if (e.domain == "continuation")
        os << "domain: continuation (series in w = -z)\n";
    else
        os << "sector: " << branch_name(e.branch) << ", lambda = " << e.lambda.str() << "\n";
    os << "prefactor: " << e.prefactor.str() << "\n";
    for (const auto& [rho, list] : e.parts)
        for (const auto& s : list)
            for (std::size_t i = 0; i < s.log_count(); ++i)
                for (std::size_t n = 0; n < s.depth(); ++n) {
                    const HElement& c = s.coeff(i, n);
                    if (c.is_zero())
                        continue;
                    os << "  [rho=" << rho << " x^-(" << s.alpha().str() << "+" << n << ")";
                    if (i > 0)
                        os << " log(1/x)^" << i;
                    os << "] " << c.str() << "\n";
                }
    return os.str();
}

std::string residual_status(const OperatorResidual& r)
{
    if (r.zero)
        return "zero";
    return "nonzero at rho=" + std::to_string(r.rho) + " alpha=" + r.alpha.str() + " m=" + std::to_string(r.index);
}

struct Output {
    Json json;
    std::string text;
    int code = 0;
};

Output cmd_expand(const RunConfig& c)
{
    HyperParams p = params_of(c);
    Branch br = parse_branch(c.branch);
    AsymptoticExpansion e = compute_full_expansion(p, br, c.terms);
    const Bits wb = digits_to_bits(c.prec + kGuardDigits);
    const Rational ang = lambda_angle(p.lambda);
    Json pts = Json::array();
    double worst = 0;
    const Rational sgn(br == Branch::Upper ? 1 : -1);
    for (Rational phi : {Rational(1, 3), Rational(1, 2), Rational(2, 3)}) {
        // arg(lambda x) = sgn * phi * pi, |x| = 40
        Rational th = sgn * phi - Rational(2) * ang;
        BigComplex x = BigComplex::polar(Real(40, wb), const_pi(wb) * Real(th, wb));
        BigComplex ref = n_pFq(p, x, c.prec);
        BigComplex val = evaluate_expansion(e, x, c.prec);
        double err = relative_error(val, ref).to_double();
        worst = std::max(worst, err);
        pts.push_back({{"abs_x", "40"}, {"arg_lambda_x_over_pi", (sgn * phi).str()}, {"relative_error", sci(err)}});
    }
    OperatorResidual res = apply_hyp_operator(p, e);
    Json check{{"points", pts}, {"max_relative_error", sci(worst)}, {"operator_residual", residual_status(res)}};
    Output o;
    o.json = {{"command", "expand"}, {"params", params_json(p)}, {"expansion", to_json(e)}, {"check", check}};
    o.text = expansion_text(e) + "max relative error at |x|=40: " + sci(worst) + "\noperator residual: " +
             residual_status(res) + "\n";
    return o;
}

Output cmd_continue(const RunConfig& c)
{
    HyperParams p = params_of(c);
    AsymptoticExpansion e = compute_Mp(p, c.terms);
    const Bits wb = digits_to_bits(c.prec + kGuardDigits);
    Json pts = Json::array();
    double worst = 0;
    std::string oracle;
    if (p.q() == 0)
        oracle = "binomial";
    else if (p.q() == 1)
        oracle = "pfaff";
    if (!oracle.empty()) {
        for (long zi : {-2L, -7L, -30L}) {
            BigComplex z(zi, wb);
            BigComplex ref(wb);
            Real omz(1 - zi, wb);
            if (oracle == "binomial") {
                ref = BigComplex(pow(omz, -Real(p.a[0], wb)));
            } else {
                // (1-z)^{-a} 2F1(a, c-b; c; z/(z-1))
                Rational zr(zi);
                ref = n_pFq({p.a[0], p.b[0] - p.a[1]}, {p.b[0]}, BigComplex(zr / (zr - Rational(1)), wb), c.prec);
                ref *= pow(omz, -Real(p.a[0], wb));
            }
            double err = relative_error(evaluate_continuation(e, z, c.prec), ref).to_double();
            worst = std::max(worst, err);
            pts.push_back({{"z", std::to_string(zi)}, {"relative_error", sci(err)}});
        }
    }
    OperatorResidual res = apply_hyp_operator(p, e);
    Json check{{"oracle", oracle.empty() ? Json(nullptr) : Json(oracle)}, {"points", pts}};
    if (!oracle.empty())
        check["max_relative_error"] = sci(worst);
    check["operator_residual"] = residual_status(res);
    bool distinct = true;
    for (std::size_t i = 0; i < p.a.size(); ++i)
        for (std::size_t j = i + 1; j < p.a.size(); ++j)
            if ((p.a[i] - p.a[j]).is_integer())
                distinct = false;
    if (distinct) {
        AsymptoticExpansion m = absorb_prefactor(e), d = distinct_case_formula(p, c.terms);
        bool same = true;
        for (auto& [rho, list] : m.parts)
            for (std::size_t j = 0; j < list.size(); ++j)
                for (std::size_t n = 0; n < c.terms; ++n)
                    if (!(h_normalize(list[j].coeff(0, n)) == h_normalize(d.parts[rho].at(j).coeff(0, n))))
                        same = false;
        check["distinct_case_formula_agrees"] = same;
    }
    Output o;
    o.json = {{"command", "continue"}, {"params", params_json(p)}, {"expansion", to_json(e)}, {"check", check}};
    o.text = expansion_text(e) + "operator residual: " + residual_status(res) + "\n";
    if (!oracle.empty())
        o.text += "max relative error vs " + oracle + " oracle: " + sci(worst) + "\n";
    return o;
}

Output cmd_classify(const RunConfig& c)
{
    GalochkinVerdict v = galochkin_classify(cyclos(c.a), cyclos(c.b));
    Json pairs = Json::array();
    for (const auto& [x, y] : v.pairing)
        pairs.push_back(Json::array({x.str(), y.str()}));
    Output o;
    o.json = {{"command", "classify"}, {"is_E_function", v.is_E_function}, {"pairing", pairs}, {"reason", v.reason}};
    o.text = std::string(v.is_E_function ? "E-function" : "not an E-function") + ": " + v.reason + "\n";
    return o;
}

Output cmd_eval(const RunConfig& c)
{
    HElement x = parse_helement(c.expr);
    std::string v = h_eval(x, c.prec).to_string(c.prec);
    Output o;
    o.json = {{"command", "eval"}, {"expr", c.expr}, {"normal_form", h_normalize(x).str()}, {"prec", c.prec}, {"value", v}};
    o.text = v + "\n";
    return o;
}

std::vector<IdentityReport> ck_reports()
{
    std::vector<IdentityReport> out;
    const std::vector<std::pair<Rational, Rational>> fams{
        {Rational(2), Rational(1)}, {Rational(1), Rational(2)}, {Rational(1, 2), Rational(1)}, {Rational(1, 3), Rational(5, 7)}};
    for (const auto& [a, b] : fams) {
        HyperParams p{{a}, {b}};
        IdentityReport r;
        r.identity = "ck[" + p.str() + "]";
        r.depth = 4;
        std::vector<Real> fit = ck_numeric_fit(p, 4);
        std::vector<Rational> rec = ck_operator(p, 4);
        Rational cl(1);
        for (std::size_t k = 0; k <= 4; ++k) {
            if (k > 0)
                cl *= (b - a + Rational(static_cast<long>(k - 1))) * (Rational(1) - a + Rational(static_cast<long>(k - 1))) /
                      Rational(static_cast<long>(k));
            double e1 = abs(fit[k] - Real(cl, fit[k].prec())).to_double();
            r.max_error = std::max(r.max_error, e1);
            if ((e1 > 1e-10 || rec[k] != cl) && r.ok) {
                r.ok = false;
                r.first_failure = k;
            }
        }
        out.push_back(r);
    }
    return out;
}

std::vector<IdentityReport> laplace_reports()
{
    std::vector<IdentityReport> out;
    const std::vector<std::pair<std::vector<Rational>, std::vector<Rational>>> cases{
        {{Rational(1, 3)}, {Rational(1, 2), Rational(2, 3)}},
        {{Rational(1, 4)}, {Rational(1, 3), Rational(5, 6), Rational(1, 2)}},
        {{Rational(1, 2)}, {Rational(3, 4)}}};
    for (const auto& [a, b] : cases) {
        LaplaceIdentityReport l = check_laplace_identity(a, b, 30);
        IdentityReport r;
        r.identity = "laplace[r=" + std::to_string(l.r) + "]";
        r.depth = l.depth;
        r.ok = l.corrected_holds;
        r.first_failure = l.first_failure;
        if (l.uncorrected_ratio && *l.uncorrected_ratio != Rational(1))
            r.detail = "without the r^{-r} factor the two sides differ by the constant factor " + l.uncorrected_ratio->str();
        out.push_back(r);
    }
    return out;
}

Output cmd_verify(const RunConfig& c)
{
    std::vector<IdentityReport> reps;
    auto add = [&](const std::vector<IdentityReport>& v) { reps.insert(reps.end(), v.begin(), v.end()); };
    auto annihilators = [&](AnnihilatorForm f) {
        for (unsigned s : {1u, 2u})
            for (Rational a : {Rational(1, 2), Rational(1, 3)})
                reps.push_back(check_annihilator(s, CycloNumber(a), 60, f));
    };
    const std::string& s = c.suite;
    if (s == "identities" || s == "all") {
        add({check_L_identity(100), check_H_identity(100), check_alpha_identity(CycloNumber::sqrt2(), 100),
             check_alpha_identity(CycloNumber(1), 100)});
        annihilators(AnnihilatorForm::Corrected);
    }
    if (s == "annihilator") {
        if (c.form != "printed" && c.form != "corrected")
            throw UsageError("--form must be printed or corrected");
        annihilators(c.form == "printed" ? AnnihilatorForm::Printed : AnnihilatorForm::Corrected);
    }
    if (s == "gauss" || s == "all")
        add(check_gauss_suite(c.qmax, c.smax, c.prec));
    if (s == "ck" || s == "all")
        add(ck_reports());
    if (s == "laplace" || s == "all")
        add(laplace_reports());
    if (reps.empty())
        throw UsageError("unknown suite '" + s + "' (identities, annihilator, gauss, ck, laplace, all)");
    Json arr = Json::array();
    bool ok = true;
    std::ostringstream os;
    for (const auto& r : reps) {
        arr.push_back(to_json(r));
        ok = ok && r.ok;
        os << (r.ok ? "ok   " : "FAIL ") << r.identity;
        if (r.first_failure)
            os << " (first failure at " << *r.first_failure << ")";
        if (r.max_error > 0)
            os << " max error " << sci(r.max_error);
        if (!r.detail.empty())
            os << " - " << r.detail;
        os << "\n";
    }
    Output o;
    o.json = {{"command", "verify"}, {"suite", s}, {"status", ok ? "ok" : "fail"}, {"reports", arr}};
    o.text = os.str();
    o.code = ok ? 0 : 1;
    return o;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    RunConfig cfg;
    if (const char* env = std::getenv("HYPERASYM_PREC")) {
        try {
            cfg.prec = std::stoi(env);
        } catch (...) {
            err << "error: HYPERASYM_PREC must be an integer\n";
            return 2;
        }
    }
    CLI::App app{"Asymptotic expansions of hypergeometric series with exact coefficients"};
    app.require_subcommand(1);
    auto common = [&](CLI::App* sub) {
        sub->add_option("--prec", cfg.prec, "working precision in digits")->check(CLI::Range(10, 2000));
        sub->add_option("--format", cfg.format, "json or text")->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--out", cfg.out, "write output to this file");
    };
    auto params = [&](CLI::App* sub) {
        sub->add_option("--a", cfg.a, "upper parameters, comma separated rationals");
        sub->add_option("--b", cfg.b, "lower parameters, comma separated rationals");
        sub->add_option("--terms", cfg.terms, "expansion depth N")->check(CLI::Range(1, 400));
    };
    CLI::App* expand = app.add_subcommand("expand", "asymptotic expansion of pFp(lambda x) in a sector");
    params(expand);
    common(expand);
    expand->add_option("--lambda", cfg.lambda, "root of unity, cyclotomic literal");
    expand->add_option("--branch", cfg.branch, "upper or lower")->check(CLI::IsMember({"upper", "lower"}));
    CLI::App* cont = app.add_subcommand("continue", "continuation of (p+1)Fp to |z| > 1");
    params(cont);
    common(cont);
    CLI::App* classify = app.add_subcommand("classify", "E-function test for cyclotomic parameters");
    classify->add_option("--a", cfg.a, "upper parameters");
    classify->add_option("--b", cfg.b, "lower parameters");
    common(classify);
    CLI::App* eval = app.add_subcommand("eval", "numeric value of an element of H");
    eval->add_option("expr", cfg.expr, "expression")->required();
    common(eval);
    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", cfg.suite, "identities, annihilator, gauss, ck, laplace, all")->required();
    verify->add_option("--qmax", cfg.qmax)->check(CLI::Range(1, 12));
    verify->add_option("--smax", cfg.smax)->check(CLI::Range(2, 8));
    verify->add_option("--form", cfg.form, "annihilator form: printed or corrected");
    common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    Output o;
    try {
        if (*expand)
            o = cmd_expand(cfg);
        else if (*cont)
            o = cmd_continue(cfg);
        else if (*classify)
            o = cmd_classify(cfg);
        else if (*eval)
            o = cmd_eval(cfg);
        else
            o = cmd_verify(cfg);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "failure: " << e.what() << "\n";
        return 1;
    }
    std::string text = cfg.format == "json" ? o.json.dump(2) + "\n" : o.text;
    if (cfg.out.empty()) {
        out << text;
    } else {
        std::ofstream f(cfg.out);
        if (!f) {
            err << "error: cannot write " << cfg.out << "\n";
            return 2;
        }
        f << text;
    }
    return o.code;
}

}  // namespace hyperasym
