// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "eupade/eupade.hpp"

using namespace eupade;

namespace {

struct GridSystem {
    ApproxParams params;
    PadeSystem sys;
};

std::vector<GridSystem> build_grid() {
    const std::vector<Rational> pool{Rational(1),    Rational(1, 2), Rational(1, 3),
                                     Rational(2, 3), Rational(1, 5), Rational(3, 4)};
    std::vector<std::vector<Rational>> sets;
    const std::size_t P = pool.size();
    for (std::size_t mask = 1; mask < (1u << P); ++mask) {
        std::vector<Rational> s;
        for (std::size_t b = 0; b < P; ++b)
            if (mask & (1u << b)) s.push_back(pool[b]);
        if (s.size() > 3) continue;
        bool ok = true;
        for (std::size_t i = 0; i < s.size() && ok; ++i)
            for (std::size_t j = i + 1; j < s.size() && ok; ++j)
                ok = !(s[i] - s[j]).is_integer();
        if (ok) sets.push_back(std::move(s));
    }
    std::vector<GridSystem> grid;
    for (const auto& s : sets)
        for (unsigned long n = 1; n <= 6; ++n) {
            ApproxParams params(AlphaParams(s), n);
            grid.push_back({params, build_system(params)});
        }
    return grid;
}

int failures = 0;

void report(int crit, bool pass, const std::string& detail = "") {
    std::printf("criterion %2d: %s%s%s\n", crit, pass ? "PASS" : "FAIL",
                detail.empty() ? "" : " — ", detail.c_str());
    if (!pass) ++failures;
}

Int lcm_int(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

}  // namespace

int main() {
    std::vector<GridSystem> grid = build_grid();
    std::printf("grid: %zu systems\n", grid.size());

    // 1. closed forms == fraction-free oracle, exactly
    {
        bool ok = true;
        for (const auto& g : grid) {
            if (!(q0_oracle(g.params) == g.sys.rows[0].Q)) ok = false;
            for (std::size_t i = 1; i <= g.params.m() && ok; ++i)
                if (!(qi_oracle(g.params, i) == g.sys.rows[i].Q)) ok = false;
            if (!ok) break;
        }
        report(1, ok);
    }

    // 2. order conditions and remainder order, exact
    {
        bool ok = true;
        std::string why;
        for (const auto& g : grid) {
            CheckReport r = verify_order(g.sys);
            if (!r.pass) {
                ok = false;
                why = r.detail;
                break;
            }
        }
        report(2, ok, why);
    }

    // 3. omega determinant is the explicit monomial; worked instance 2z^3
    {
        bool ok = true;
        for (const auto& g : grid)
            if (!(omega_det(g.sys) == omega_expected(g.sys))) {
                ok = false;
                break;
            }
        PadeSystem worked = build_system(ApproxParams(AlphaParams({Rational(1)}), 1));
        ok = ok && omega_det(worked) ==
                       Poly({Rational(0), Rational(0), Rational(0), Rational(2)});
        report(3, ok);
    }

    // 4. divisibility and integrality with the explicit D1; worked D1 = 6
    {
        bool ok = d1(ApproxParams(AlphaParams({Rational(1)}), 1)) == 6;
        for (const auto& g : grid) {
            if (!ok) break;
            for (std::size_t j = 1; j <= g.params.m() && ok; ++j) {
                auto [U, V] = lemma2_bounds(g.params.alpha().alpha(j), g.params.n());
                Int lu = 1, lv = 1;
                for (unsigned long k = 0; k <= g.params.n(); ++k) {
                    Rational q = pochhammer(g.params.alpha().alpha(j) + Rational(1), k) /
                                 Rational(factorial(k));
                    if (!q.is_zero()) lu = lcm_int(lu, q.num());
                    lv = lcm_int(lv, q.den());
                }
                ok = U % lu == 0 && V % lv == 0;
            }
            ok = ok && check_lemma3(g.sys, denominators(g.params)).pass;
        }
        report(4, ok);
    }

    // 5. archimedean bound at z in {+-1, +-2, +-5}
    {
        bool ok = true;
        for (const auto& g : grid) {
            for (long z : {1L, -1L, 2L, -2L, 5L, -5L})
                if (!check_lemma4(g.sys, Rational(z)).pass) {
                    ok = false;
                    break;
                }
            if (!ok) break;
        }
        report(5, ok);
    }

    // 6. p-adic bound, a in {+-1, +-2, 3}, p <= 50 with p !| s, K = 32
    {
        bool ok = true;
        std::string why;
        for (const auto& g : grid) {
            Int D1 = d1(g.params);
            for (long a : {1L, -1L, 2L, -2L, 3L}) {
                for (auto p : primes_upto(50)) {
                    Int pz(static_cast<unsigned long>(p));
                    if (g.params.alpha().s() % pz == 0) continue;
                    CheckReport r = check_lemma5(g.sys, Int(a), pz, 32, D1);
                    if (!r.pass) {
                        ok = false;
                        why = r.detail;
                    }
                    if (!ok) break;
                }
                if (!ok) break;
            }
            if (!ok) break;
        }
        report(6, ok, why);
    }

    // 7. nonzero determinant and the Lambda congruence for random l-vectors
    {
        bool ok = true;
        std::string why;
        std::mt19937 rng(20260826);
        std::uniform_int_distribution<long> coef(-9, 9);
        for (const auto& g : grid) {
            DenominatorSet D = denominators(g.params);
            CheckReport r15 = check_eq15(g.sys, Int(1), D);
            if (!r15.pass) {
                ok = false;
                why = r15.detail;
                break;
            }
            std::vector<Int> ls;
            for (std::size_t j = 0; j <= g.params.m(); ++j) ls.emplace_back(coef(rng));
            bool allz = true;
            for (const auto& l : ls) allz = allz && l == 0;
            if (allz) ls[0] = 1;
            LinearFormSpec L(g.params.alpha(), Int(1), ls);
            int done = 0;
            for (auto p : primes_upto(200)) {
                Int pz(static_cast<unsigned long>(p));
                if (g.params.alpha().s() % pz == 0) continue;
                CheckReport r = lambda_decomposition(g.sys, L, pz, 20, D);
                if (!r.pass) {
                    ok = false;
                    why = r.detail;
                    break;
                }
                if (++done == 10) break;
            }
            if (!ok) break;
        }
        report(7, ok, why);
    }

    // 8. explicit constants
    {
        AlphaParams unit({Rational(1)});
        DReal got = constant_c(unit).log_up;
        DReal ref = dr::add(dr::mul_si(dr::log_int(Int(2), MPFR_RNDN), 2, MPFR_RNDN),
                            DReal::of_long(32), MPFR_RNDN);
        DReal diff = got < ref ? dr::sub(ref, got, MPFR_RNDU) : dr::sub(got, ref, MPFR_RNDU);
        bool pinned_ok = diff.to_double() <= ref.to_double() * 5.5e-20;  // 2^-64 relative

        bool forms_agree = true;
        for (const auto& g : grid) {
            DReal a_form = constant_c_product_form(g.params.alpha()).log_up;
            DReal b_form = constant_c(g.params.alpha()).log_up;
            DReal fd = a_form < b_form ? dr::sub(b_form, a_form, MPFR_RNDU)
                                       : dr::sub(a_form, b_form, MPFR_RNDU);
            if (fd.to_double() > 1e-12) forms_agree = false;
        }

        bool eval_ok = true;
        for (const auto& g : grid) {
            ConstantSet cs = all_constants(g.params.alpha(), Int(2));
            eval_ok = eval_ok && mpfr_number_p(cs.c4.log_up.raw()) &&
                      mpfr_number_p(cs.c5.log_up.raw()) && mpfr_number_p(cs.log_h0.raw());
        }

        std::string detail;
        if (!forms_agree)
            detail =
                "pinned value 4e^32 " + std::string(pinned_ok ? "holds" : "FAILS") +
                " and the height/window formulas evaluate in log-domain, but the two printed "
                "expressions for the linear-growth constant differ by exactly exp(12mS); "
                "they cannot both be the expansion of the same product";
        report(8, pinned_ok && forms_agree && eval_ok, detail);
    }

    // 9. sieve sweeps to 10^6
    {
        SweepReport p = pnt_weak_check(1000000);
        SweepReport m = mertens_check(1000000);
        report(9, p.pass && m.pass);
    }

    // 10. p-adic evaluation: hand value, and residues stable under cutoff doubling
    {
        PadicApprox v = phi_eval(Rational(1), Int(-1), Int(2), 4);
        bool ok = v.residue == 12 && v.modulus == 16;

        std::mt19937 rng(424242);
        std::uniform_int_distribution<long> adist(-6, 6);
        std::uniform_int_distribution<int> pick(0, 5);
        const std::vector<Rational> pool{Rational(1),    Rational(1, 2), Rational(1, 3),
                                         Rational(2, 3), Rational(1, 5), Rational(3, 4)};
        const long ps[] = {3, 5, 7, 11, 13};
        std::uniform_int_distribution<int> ppick(0, 4);
        int done = 0;
        while (done < 50 && ok) {
            Rational alpha = pool[static_cast<std::size_t>(pick(rng))];
            long a = adist(rng);
            if (a == 0) continue;
            Int p(ps[ppick(rng)]);
            if (alpha.den() % p == 0) continue;
            unsigned long K = 6 + static_cast<unsigned long>(done % 10);
            PhiPartial ps1 = phi_partial_sum(alpha, Int(a), p, K);
            PadicApprox base = phi_eval(alpha, Int(a), p, K);
            PadicApprox twice = phi_eval(alpha, Int(a), p, K, 2 * ps1.cutoff);
            ok = base.residue == twice.residue && base.modulus == twice.modulus;
            ++done;
        }
        report(10, ok);
    }

    // 11. non-vanishing witness below 100
    {
        LinearFormSpec L(AlphaParams({Rational(1)}), Int(1), {Int(1), Int(1)});
        bool ok = false;
        for (const auto& e : scan_nonvanishing(L, 1, 100, 20))
            ok = ok || e.status == ScanStatus::kNonzero;
        report(11, ok);
    }

    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
