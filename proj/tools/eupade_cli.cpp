// Command line front end: construct approximation systems, run the
// certificate checks, print the explicit constants, and evaluate the series
// and linear forms p-adically.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "eupade/eupade.hpp"

using nlohmann::json;
using namespace eupade;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCertFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitPrecision = 3;

std::vector<Rational> parse_alpha_list(const std::string& s) {
    std::vector<Rational> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(Rational::parse(item));
    if (out.empty()) throw std::invalid_argument("empty alpha list");
    return out;
}

std::vector<Int> parse_int_list(const std::string& s) {
    std::vector<Int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.emplace_back(item);
    return out;
}

std::vector<unsigned long> parse_ulong_list(const std::string& s) {
    std::vector<unsigned long> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoul(item));
    return out;
}

std::string poly_str(const Poly& p) {
    std::ostringstream os;
    os << "[";
    for (long k = 0; k <= std::max(p.degree(), 0L); ++k) {
        if (k) os << ", ";
        os << p.coeff(static_cast<unsigned long>(k)).str();
    }
    os << "]";
    return os.str();
}

json poly_json(const Poly& p) {
    json a = json::array();
    for (long k = 0; k <= std::max(p.degree(), 0L); ++k)
        a.push_back(p.coeff(static_cast<unsigned long>(k)).str());
    return a;
}

ApproxParams make_params(const std::string& alphas, unsigned long n, const std::string& njs) {
    AlphaParams A(parse_alpha_list(alphas));
    if (njs.empty()) return ApproxParams(A, n);
    return ApproxParams(A, n, parse_ulong_list(njs));
}

void guard(bool ok, const char* what, bool force) {
    if (!ok && !force)
        throw std::invalid_argument(std::string(what) + " (use --force to override)");
}

int run_construct(const std::string& alphas, unsigned long n, const std::string& njs,
                  bool as_json, bool force) {
    ApproxParams params = make_params(alphas, n, njs);
    guard(params.n() <= 12, "n > 12", force);
    guard(params.m() <= 4, "m > 4", force);
    PadeSystem sys = build_system(params);
    if (as_json) {
        json out{{"schema", 1}, {"m", params.m()}, {"n", params.n()}, {"N", params.N()}};
        json rows = json::array();
        for (std::size_t i = 0; i <= params.m(); ++i) {
            json row{{"i", i}, {"Q", poly_json(sys.rows[i].Q)}};
            json ps = json::array();
            for (const auto& P : sys.rows[i].P) ps.push_back(poly_json(P));
            row["P"] = ps;
            rows.push_back(row);
        }
        out["rows"] = rows;
        std::cout << out.dump(2) << "\n";
        return kExitOk;
    }
    for (std::size_t i = 0; i <= params.m(); ++i) {
        std::cout << "Q_" << i << ": " << poly_str(sys.rows[i].Q) << "\n";
        for (std::size_t j = 1; j <= params.m(); ++j)
            std::cout << "P_" << i << j << ": " << poly_str(sys.rows[i].P[j - 1]) << "\n";
    }
    return kExitOk;
}

int run_verify(const std::string& alphas, unsigned long n, const std::string& njs,
               const std::string& a_str, unsigned long K, bool as_json, bool force) {
    ApproxParams params = make_params(alphas, n, njs);
    guard(params.n() <= 12, "n > 12", force);
    guard(params.m() <= 4, "m > 4", force);
    const Int a(a_str);
    if (a == 0) throw std::invalid_argument("a must be nonzero");

    PadeSystem sys = build_system(params);
    std::vector<std::pair<std::string, CheckReport>> checks;
    checks.emplace_back("order_conditions", verify_order(sys));

    // closed forms against the independent linear-system solution
    {
        CheckReport r = CheckReport::ok();
        if (!(q0_oracle(params) == sys.rows[0].Q)) r = CheckReport::fail("Q_0 oracle mismatch");
        for (std::size_t i = 1; i <= params.m() && r.pass; ++i)
            if (!(qi_oracle(params, i) == sys.rows[i].Q)) {
                std::ostringstream os;
                os << "Q_" << i << " oracle mismatch";
                r = CheckReport::fail(os.str());
            }
        checks.emplace_back("oracle_agreement", r);
    }

    const bool uniform = params.uniform_nj();
    if (uniform) {
        DenominatorSet D = denominators(params);
        checks.emplace_back("lemma3_integrality", check_lemma3(sys, D));
        checks.emplace_back("eq15_determinant", check_eq15(sys, a, D));
        checks.emplace_back("lemma4_height", check_lemma4(sys, Rational(a)));
        CheckReport l5 = CheckReport::ok();
        int done = 0;
        for (auto p : primes_upto(100)) {
            Int pz(static_cast<unsigned long>(p));
            if (params.alpha().s() % pz == 0) continue;
            l5 = check_lemma5(sys, a, pz, K, D.D1);
            if (!l5.pass) break;
            if (++done == 3) break;
        }
        checks.emplace_back("lemma5_padic", l5);
    } else {
        Poly omega = omega_det(sys);
        checks.emplace_back("omega_identity",
                            omega == omega_expected(sys)
                                ? CheckReport::ok()
                                : CheckReport::fail("omega determinant mismatch"));
    }

    bool all = true;
    json jchecks = json::array();
    for (const auto& [name, r] : checks) {
        all = all && r.pass;
        if (as_json)
            jchecks.push_back({{"name", name}, {"pass", r.pass}, {"detail", r.detail}});
        else
            std::cout << name << ": " << (r.pass ? "PASS" : "FAIL " + r.detail) << "\n";
    }
    if (as_json)
        std::cout << json{{"schema", 1}, {"pass", all}, {"checks", jchecks}}.dump(2) << "\n";
    else
        std::cout << (all ? "VERIFIED" : "FAILED") << "\n";
    return all ? kExitOk : kExitCertFailure;
}

int run_constants(const std::string& alphas, const std::string& a_str, const std::string& h_str,
                  bool as_json) {
    AlphaParams A(parse_alpha_list(alphas));
    const Int a(a_str);
    ConstantSet cs = all_constants(A, a);
    auto logv = [](const LogBound& b) { return b.log_up.str(); };
    if (as_json) {
        json out{{"schema", 1},
                 {"log_c1", logv(cs.c1)},
                 {"log_c2", logv(cs.c2)},
                 {"log_c3", logv(cs.c3)},
                 {"log_c", logv(cs.c)},
                 {"log_c4", logv(cs.c4)},
                 {"log_c5", logv(cs.c5)},
                 {"log_H0", cs.log_h0.str()}};
        if (!h_str.empty()) {
            Theorem2Window w = theorem2_window(Int(h_str), A, a);
            out["window"] = {{"log_H", w.log_H.str()},
                             {"Htilde", w.Htilde.get_str()},
                             {"log_lower", w.log_lower.str()},
                             {"upper", w.upper.get_str()}};
        }
        std::cout << out.dump(2) << "\n";
        return kExitOk;
    }
    std::cout << "log c1 = " << logv(cs.c1) << "\n"
              << "log c2 = " << logv(cs.c2) << "\n"
              << "log c3 = " << logv(cs.c3) << "\n"
              << "log c  = " << logv(cs.c) << "\n"
              << "log c4 = " << logv(cs.c4) << "\n"
              << "log c5 = " << logv(cs.c5) << "\n"
              << "log H0 = " << cs.log_h0.str() << "\n";
    if (!h_str.empty()) {
        Theorem2Window w = theorem2_window(Int(h_str), A, a);
        std::cout << "window: exp(" << w.log_lower.str() << ") < p <= " << w.upper.get_str()
                  << "  (Htilde = " << w.Htilde.get_str() << ")\n";
    }
    return kExitOk;
}

int run_eval(const std::string& alpha_str, const std::string& alphas_str,
             const std::string& coeffs_str, const std::string& a_str, const std::string& p_str,
             unsigned long K, bool as_json) {
    const Int a(a_str), p(p_str);
    if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 40) == 0)
        throw std::invalid_argument("p must be prime");
    PadicApprox r;
    if (!coeffs_str.empty()) {
        if (alphas_str.empty())
            throw std::invalid_argument("--coeffs needs --alphas");
        LinearFormSpec L(AlphaParams(parse_alpha_list(alphas_str)), a,
                         parse_int_list(coeffs_str));
        r = linear_form_eval(L, p, K);
    } else {
        if (alpha_str.empty()) throw std::invalid_argument("need --alpha or --alphas/--coeffs");
        Rational alpha = Rational::parse(alpha_str);
        if (alpha.den() % p == 0) throw std::domain_error("p divides the denominator of alpha");
        r = phi_eval(alpha, a, p, K);
    }
    if (as_json) {
        std::cout << json{{"schema", 1},
                          {"p", p.get_str()},
                          {"K", K},
                          {"residue", r.residue.get_str()},
                          {"modulus", r.modulus.get_str()},
                          {"tail_valuation", r.tail_valuation}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "residue " << r.residue.get_str() << " mod " << r.modulus.get_str()
                  << " (tail valuation >= " << r.tail_valuation << ")\n";
    }
    return kExitOk;
}

int run_scan(const std::string& alphas_str, const std::string& coeffs_str,
             const std::string& a_str, std::uint64_t p_lo, std::uint64_t p_hi, unsigned long K,
             bool as_json, bool force) {
    guard(p_hi - p_lo <= 1000000, "scan range wider than 10^6", force);
    LinearFormSpec L(AlphaParams(parse_alpha_list(alphas_str)), Int(a_str),
                     parse_int_list(coeffs_str));
    auto entries = scan_nonvanishing(L, p_lo, p_hi, K);
    if (as_json) {
        json je = json::array();
        for (const auto& e : entries)
            je.push_back({{"p", std::to_string(e.p)},
                          {"status", e.status == ScanStatus::kNonzero ? "NONZERO"
                                                                      : "ZERO_TO_PRECISION"},
                          {"K", e.K}});
        std::cout << json{{"schema", 1}, {"entries", je}}.dump(2) << "\n";
        return kExitOk;
    }
    for (const auto& e : entries)
        std::cout << "p=" << e.p << " "
                  << (e.status == ScanStatus::kNonzero ? "NONZERO" : "ZERO_TO_PRECISION")
                  << " (K=" << e.K << ")\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pade approximations of Euler-type series, with certificates"};
    app.require_subcommand(1);
    app.set_help_flag("--help", "print usage");  // leave --h free for the height option

    std::string alphas, alpha, njs, a_str = "1", h_str, p_str, coeffs;
    unsigned long n = 1, K = 32;
    std::uint64_t p_lo = 2, p_hi = 100;
    bool as_json = false, force = false;
    app.add_flag("--json", as_json, "emit JSON");
    app.add_flag("--force", force, "override size guards");

    auto* c_con = app.add_subcommand("construct", "build the approximation polynomials");
    c_con->add_option("--alphas", alphas)->required();
    c_con->add_option("--n", n)->required();
    c_con->add_option("--njs", njs);

    auto* c_ver = app.add_subcommand("verify", "run the certificate checks");
    c_ver->add_option("--alphas", alphas)->required();
    c_ver->add_option("--n", n)->required();
    c_ver->add_option("--njs", njs);
    c_ver->add_option("--a", a_str);
    c_ver->add_option("--K", K);

    auto* c_cst = app.add_subcommand("constants", "print the explicit constants");
    c_cst->add_option("--alphas", alphas)->required();
    c_cst->add_option("--a", a_str);
    c_cst->add_option("--h", h_str, "also print the prime window for height h");

    auto* c_evl = app.add_subcommand("eval", "evaluate a series or linear form p-adically");
    c_evl->add_option("--alpha", alpha);
    c_evl->add_option("--alphas", alphas);
    c_evl->add_option("--coeffs", coeffs);
    c_evl->add_option("--a", a_str);
    c_evl->add_option("--p", p_str)->required();
    c_evl->add_option("--K", K);

    auto* c_scn = app.add_subcommand("scan", "scan a prime range for nonvanishing");
    c_scn->add_option("--alphas", alphas)->required();
    c_scn->add_option("--coeffs", coeffs)->required();
    c_scn->add_option("--a", a_str);
    c_scn->add_option("--plo", p_lo);
    c_scn->add_option("--phi", p_hi);
    c_scn->add_option("--K", K);

    try {
        app.parse(argc, argv);
        if (c_con->parsed()) return run_construct(alphas, n, njs, as_json, force);
        if (c_ver->parsed()) return run_verify(alphas, n, njs, a_str, K, as_json, force);
        if (c_cst->parsed()) return run_constants(alphas, a_str, h_str, as_json);
        if (c_evl->parsed()) return run_eval(alpha, alphas, coeffs, a_str, p_str, K, as_json);
        if (c_scn->parsed()) return run_scan(alphas, coeffs, a_str, p_lo, p_hi, K, as_json, force);
        return kExitInputError;
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInputError;
    } catch (const PrecisionInsufficient& e) {
        std::cerr << "precision: " << e.what() << "\n";
        return kExitPrecision;
    } catch (const InvalidAlpha& e) {
        std::cerr << "input: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::domain_error& e) {
        std::cerr << "input: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCertFailure;
    }
}
