#pragma once

#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "eupade/certificates.hpp"
#include "eupade/logbound.hpp"
#include "eupade/pade.hpp"
#include "eupade/params.hpp"
#include "eupade/primes.hpp"
#include "eupade/report.hpp"

namespace eupade {

namespace detail {

inline mpfr_rnd_t flip(mpfr_rnd_t rnd) { return rnd == MPFR_RNDU ? MPFR_RNDD : MPFR_RNDU; }

// coef * log(base) rounded toward `rnd`; base >= 1, coef of either sign.
inline DReal signed_log_term(long coef, const Int& base, mpfr_rnd_t rnd) {
    if (coef == 0) return DReal();
    DReal lg = dr::log_int(base, coef > 0 ? rnd : flip(rnd));
    return dr::mul_si(lg, coef, rnd);
}

inline long lm(std::size_t m) { return static_cast<long>(m); }

// log c_1 = log(m(1+m)^2(2+m)) + 6(m+2)R + 6S
inline DReal log_c1(const AlphaParams& A, mpfr_rnd_t rnd) {
    const long m = lm(A.m());
    DReal v = dr::log_int(Int(m * (1 + m) * (1 + m) * (2 + m)), rnd);
    v = dr::add(v, DReal::of_int(6 * (m + 2) * A.R() + 6 * A.S(), rnd), rnd);
    return v;
}

// log c_2 = (m+1)log2 + (2m-4)logS + 6(m^2+3m+1)S
inline DReal log_c2(const AlphaParams& A, mpfr_rnd_t rnd) {
    const long m = lm(A.m());
    DReal v = dr::mul_si(dr::log_int(Int(2), rnd), m + 1, rnd);
    v = dr::add(v, signed_log_term(2 * m - 4, A.S(), rnd), rnd);
    v = dr::add(v, DReal::of_int(6 * (m * m + 3 * m + 1) * A.S(), rnd), rnd);
    return v;
}

// log c_3 = log c_1 + log(1+m) + 12(m-1)RS + 6R
inline DReal log_c3(const AlphaParams& A, mpfr_rnd_t rnd) {
    const long m = lm(A.m());
    DReal v = dr::add(log_c1(A, rnd), dr::log_int(Int(1 + m), rnd), rnd);
    v = dr::add(v, DReal::of_int(12 * (m - 1) * A.R() * A.S() + 6 * A.R(), rnd), rnd);
    return v;
}

// log c, expanded printed form:
//   (m+1)log2 + 3m log s + (4m-4)logS + 2 + 6S(m^2+2m+2+(m-1)S)
inline DReal log_c(const AlphaParams& A, mpfr_rnd_t rnd) {
    const long m = lm(A.m());
    DReal v = dr::mul_si(dr::log_int(Int(2), rnd), m + 1, rnd);
    v = dr::add(v, signed_log_term(3 * m, A.s(), rnd), rnd);
    v = dr::add(v, signed_log_term(4 * m - 4, A.S(), rnd), rnd);
    Int e = 2 + 6 * A.S() * (m * m + 2 * m + 2 + (m - 1) * A.S());
    v = dr::add(v, DReal::of_int(e, rnd), rnd);
    return v;
}

// log c, product form: log c_2 + 3m log s + 2m log S + 2 + 6S((m-1)S+m+1)
inline DReal log_c_product_form(const AlphaParams& A, mpfr_rnd_t rnd) {
    const long m = lm(A.m());
    DReal v = dr::add(log_c2(A, rnd), signed_log_term(3 * m, A.s(), rnd), rnd);
    v = dr::add(v, signed_log_term(2 * m, A.S(), rnd), rnd);
    Int e = 2 + 6 * A.S() * ((m - 1) * A.S() + m + 1);
    v = dr::add(v, DReal::of_int(e, rnd), rnd);
    return v;
}

// log c_4 = log 6 + 10 + log c_3 + log|a|
inline DReal log_c4(const AlphaParams& A, const Int& a, mpfr_rnd_t rnd) {
    DReal v = dr::add(dr::log_int(Int(6), rnd), DReal::of_long(10), rnd);
    v = dr::add(v, log_c3(A, rnd), rnd);
    if (abs(a) > 1) v = dr::add(v, dr::log_int(abs(a), rnd), rnd);
    return v;
}

// log c_5 = log 2 + log c + 9(m+1) + 1 + m log s + m log|a|
inline DReal log_c5(const AlphaParams& A, const Int& a, mpfr_rnd_t rnd) {
    const long m = lm(A.m());
    DReal v = dr::add(dr::log_int(Int(2), rnd), log_c(A, rnd), rnd);
    v = dr::add(v, DReal::of_long(9 * (m + 1) + 1), rnd);
    v = dr::add(v, signed_log_term(m, A.s(), rnd), rnd);
    if (abs(a) > 1) v = dr::add(v, dr::mul_si(dr::log_int(abs(a), rnd), m, rnd), rnd);
    return v;
}

// log H_0 = max{(log c_4)^2, e^{(log c_5)^2}, e^{(5/2(m+1)+6)^2}}
inline DReal log_h0(const AlphaParams& A, const Int& a, mpfr_rnd_t rnd) {
    const long m = lm(A.m());
    DReal b1 = dr::sqr(log_c4(A, a, rnd), rnd);
    DReal b2 = dr::exp(dr::sqr(log_c5(A, a, rnd), rnd), rnd);
    DReal e3 = DReal::of_rational(Rational(5 * (m + 1) + 12, 2), rnd);
    DReal b3 = dr::exp(dr::sqr(e3, rnd), rnd);
    return dr::max(dr::max(b1, b2), b3);
}

}  // namespace detail

// Certified upper bounds, natural-log domain.
struct ConstantSet {
    LogBound c1, c2, c3, c, c4, c5;
    DReal log_h0;
};

inline std::pair<LogBound, LogBound> lemma4_constants(const AlphaParams& alpha) {
    return {LogBound::of_log(detail::log_c1(alpha, MPFR_RNDU)),
            LogBound::of_log(detail::log_c2(alpha, MPFR_RNDU))};
}

inline LogBound constant_c3(const AlphaParams& alpha) {
    return LogBound::of_log(detail::log_c3(alpha, MPFR_RNDU));
}

inline LogBound constant_c(const AlphaParams& alpha) {
    return LogBound::of_log(detail::log_c(alpha, MPFR_RNDU));
}

inline LogBound constant_c_product_form(const AlphaParams& alpha) {
    return LogBound::of_log(detail::log_c_product_form(alpha, MPFR_RNDU));
}

inline std::pair<LogBound, LogBound> constants_c4_c5(const AlphaParams& alpha, const Int& a) {
    if (a == 0) throw std::invalid_argument("constants_c4_c5: a must be nonzero");
    return {LogBound::of_log(detail::log_c4(alpha, a, MPFR_RNDU)),
            LogBound::of_log(detail::log_c5(alpha, a, MPFR_RNDU))};
}

inline DReal h0(const AlphaParams& alpha, const Int& a) {
    if (a == 0) throw std::invalid_argument("h0: a must be nonzero");
    return detail::log_h0(alpha, a, MPFR_RNDU);
}

inline ConstantSet all_constants(const AlphaParams& alpha, const Int& a) {
    auto [c1, c2] = lemma4_constants(alpha);
    auto [c4, c5] = constants_c4_c5(alpha, a);
    return {c1, c2, constant_c3(alpha), constant_c(alpha), c4, c5, h0(alpha, a)};
}

// |Q_i(z)|, |P_ij(z)| <= c_1 n^5 c_2^n max{1, |z|^{mn+1}}, compared against a
// lower bound of the log of the right side, so a pass is a certificate.
inline CheckReport check_lemma4(const PadeSystem& sys, const Rational& z) {
    const ApproxParams& params = sys.params;
    if (!params.uniform_nj())
        throw std::invalid_argument("check_lemma4: stated for the n_j = n case");
    const long m = static_cast<long>(params.m());
    const long n = static_cast<long>(params.n());

    DReal rhs = detail::log_c1(params.alpha(), MPFR_RNDD);
    rhs = dr::add(rhs, dr::mul_si(dr::log_int(Int(n), MPFR_RNDD), 5, MPFR_RNDD), MPFR_RNDD);
    rhs = dr::add(rhs, dr::mul_si(detail::log_c2(params.alpha(), MPFR_RNDD), n, MPFR_RNDD),
                  MPFR_RNDD);
    const Rational az = z.abs();
    if (az > Rational(1))
        rhs = dr::add(rhs, dr::mul_si(dr::log_rational(az, MPFR_RNDD), m * n + 1, MPFR_RNDD),
                      MPFR_RNDD);

    auto check_value = [&](const Rational& v, const char* what, std::size_t i,
                           std::size_t j) -> CheckReport {
        if (v.is_zero()) return CheckReport::ok();
        DReal lhs = dr::log_rational(v.abs(), MPFR_RNDU);
        if (lhs <= rhs) return CheckReport::ok();
        std::ostringstream os;
        os << "lemma 4 bound violated for " << what << " at (i,j)=(" << i << "," << j << ")";
        return CheckReport::fail(os.str());
    };

    for (std::size_t i = 0; i <= params.m(); ++i) {
        CheckReport r = check_value(sys.rows[i].Q.eval(z), "Q", i, 0);
        if (!r.pass) return r;
        for (std::size_t j = 1; j <= params.m(); ++j) {
            r = check_value(sys.rows[i].P[j - 1].eval(z), "P", i, j);
            if (!r.pass) return r;
        }
    }
    return CheckReport::ok();
}

// Component chain behind the key inequality of the Theorem 1 proof, n >= 5:
//   (1+m) c_1 n^5 c_2^n D_2  <=  c_3 c^n
// with D_2 the exact integer and c taken in its product form.
inline CheckReport check_eq16_components(const PadeSystem& sys, const DenominatorSet& D) {
    const ApproxParams& params = sys.params;
    const long n = static_cast<long>(params.n());
    if (n < 5) throw std::invalid_argument("check_eq16_components: stated for n >= 5 only");
    const long m = static_cast<long>(params.m());
    const AlphaParams& A = params.alpha();

    DReal lhs = dr::log_int(Int(1 + m), MPFR_RNDU);
    lhs = dr::add(lhs, detail::log_c1(A, MPFR_RNDU), MPFR_RNDU);
    lhs = dr::add(lhs, dr::mul_si(dr::log_int(Int(n), MPFR_RNDU), 5, MPFR_RNDU), MPFR_RNDU);
    lhs = dr::add(lhs, dr::mul_si(detail::log_c2(A, MPFR_RNDU), n, MPFR_RNDU), MPFR_RNDU);
    lhs = dr::add(lhs, dr::log_int(D.D2, MPFR_RNDU), MPFR_RNDU);

    DReal rhs = detail::log_c3(A, MPFR_RNDD);
    rhs = dr::add(rhs, dr::mul_si(detail::log_c_product_form(A, MPFR_RNDD), n, MPFR_RNDD),
                  MPFR_RNDD);

    if (lhs <= rhs) return CheckReport::ok();
    return CheckReport::fail("eq16 component bound failed");
}

// Prime window of the non-vanishing theorem, log-domain safe.
struct Theorem2Window {
    DReal log_H;       // H = max{h, H_0}; H itself is typically unrepresentable
    Int Htilde;        // [ (log H / loglog H)(1 + (5/4(m+1)+6)/sqrt(loglog H)) ]
    DReal lower;       // e^{sqrt(log Htilde)}, exclusive
    Int upper;         // m * Htilde, inclusive
    DReal log_lower;
    DReal log_upper;
};

inline Theorem2Window theorem2_window(const Int& h, const AlphaParams& alpha, const Int& a) {
    if (h < 1) throw std::invalid_argument("theorem2_window: h must be >= 1");
    const long m = static_cast<long>(alpha.m());

    DReal logH = detail::log_h0(alpha, a, MPFR_RNDU);
    DReal logh = h > 1 ? dr::log_int(h, MPFR_RNDU) : DReal();
    logH = dr::max(logH, logh);

    DReal loglogH = dr::log(logH, MPFR_RNDU);
    DReal ratio = dr::div(logH, loglogH, MPFR_RNDU);
    // statement form of the bracket: numerator 5/4(m+1)+6
    DReal num = DReal::of_rational(Rational(5 * (m + 1) + 24, 4), MPFR_RNDU);
    DReal eps = dr::div(num, dr::sqrt(loglogH, MPFR_RNDD), MPFR_RNDU);
    DReal val = dr::mul(ratio, dr::add(DReal::of_long(1), eps, MPFR_RNDU), MPFR_RNDU);

    Theorem2Window w;
    w.log_H = logH;
    mpfr_get_z(w.Htilde.get_mpz_t(), val.raw(), MPFR_RNDD);  // floor
    if (w.Htilde < 2) w.Htilde = 2;
    w.log_lower = dr::sqrt(dr::log_int(w.Htilde, MPFR_RNDU), MPFR_RNDU);
    w.lower = dr::exp(w.log_lower, MPFR_RNDU);
    w.upper = w.Htilde * m;
    w.log_upper = dr::log_int(w.upper, MPFR_RNDU);
    return w;
}

// --- analytic-number-theory ingredients, verified by sieve sweep ---

struct SweepReport {
    bool pass = true;
    std::uint64_t first_failure = 0;
};

// pi(t) <= 8 log2 * t/log t < 6 t/log t for every integer 2 <= t <= x.
inline SweepReport pnt_weak_check(std::uint64_t x) {
    if (x < 2) throw std::invalid_argument("pnt_weak_check: x must be >= 2");
    std::vector<bool> comp(x + 1, false);
    for (std::uint64_t i = 2; i * i <= x; ++i)
        if (!comp[i])
            for (std::uint64_t j = i * i; j <= x; j += i) comp[j] = true;
    std::uint64_t pi = 0;
    for (std::uint64_t t = 2; t <= x; ++t) {
        if (!comp[t]) ++pi;
        // upward-nudged log keeps the comparison conservative
        const double logt_up = std::log(static_cast<double>(t)) * (1 + 1e-12) + 1e-12;
        if (!(static_cast<double>(pi) * logt_up < 6.0 * static_cast<double>(t)))
            return {false, t};
    }
    return {true, 0};
}

// sum_{p <= t} log p / p <= log t + 6 for every integer 2 <= t <= x.
inline SweepReport mertens_check(std::uint64_t x) {
    if (x < 2) throw std::invalid_argument("mertens_check: x must be >= 2");
    std::vector<bool> comp(x + 1, false);
    for (std::uint64_t i = 2; i * i <= x; ++i)
        if (!comp[i])
            for (std::uint64_t j = i * i; j <= x; j += i) comp[j] = true;
    double sum_up = 0.0;  // running upper bound of the prime sum
    for (std::uint64_t t = 2; t <= x; ++t) {
        if (!comp[t]) {
            const double term =
                (std::log(static_cast<double>(t)) * (1 + 1e-12) + 1e-12) / static_cast<double>(t);
            sum_up += term * (1 + 1e-12);
        }
        const double rhs_down = std::log(static_cast<double>(t)) * (1 - 1e-12) - 1e-9 + 6.0;
        if (!(sum_up <= rhs_down)) return {false, t};
    }
    return {true, 0};
}

}  // namespace eupade
