#pragma once

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "eupade/pade.hpp"
#include "eupade/params.hpp"
#include "eupade/poly.hpp"
#include "eupade/primes.hpp"
#include "eupade/rational.hpp"
#include "eupade/report.hpp"

namespace eupade {

struct DenominatorSet {
    Int D1;
    Int D2;  // = D1 * s^N
};

// U_n = prod_{p !| s} p^[log(|r|+sn)/log p], V_n = s^{2n}; common denominators
// for numerators/denominators of (alpha+1)_k / k!, k <= n.
inline std::pair<Int, Int> lemma2_bounds(const Rational& alpha, unsigned long n) {
    const Int r = alpha.num();
    const Int s = alpha.den();
    const Int bound = abs(r) + s * static_cast<long>(n);
    Int U = 1;
    if (bound >= 2)
        for (auto p : primes_upto(bound.get_ui())) {
            Int pz(static_cast<unsigned long>(p));
            if (s % pz == 0) continue;
            Int pw;
            mpz_pow_ui(pw.get_mpz_t(), pz.get_mpz_t(), max_prime_power_leq(pz, bound));
            U *= pw;
        }
    Int V;
    mpz_pow_ui(V.get_mpz_t(), s.get_mpz_t(), 2 * n);
    return {U, V};
}

// The common denominator D_1 of the n_j = n specialization:
//   D_1 = s^{2N} (s_1...s_m)^{2n} prod_p p^{(m-1)[log(rhat+shat n)/log p] + [log(R+S(N+n))/log p]}.
// The product runs over all primes; exponents vanish past the larger bound.
inline Int d1(const ApproxParams& params) {
    if (!params.uniform_nj())
        throw std::invalid_argument("d1: defined for the n_j = n specialization only");
    const AlphaParams& A = params.alpha();
    const std::size_t m = params.m();
    const unsigned long n = params.n();
    const unsigned long N = params.N();

    Int D;
    mpz_pow_ui(D.get_mpz_t(), A.s().get_mpz_t(), 2 * N);
    for (const auto& a : A.alphas()) {
        Int pw;
        mpz_pow_ui(pw.get_mpz_t(), a.den().get_mpz_t(), 2 * n);
        D *= pw;
    }

    const Int bound1 = A.rhat() + A.shat() * static_cast<long>(n);    // pairs, m >= 2 only
    const Int bound2 = A.R() + A.S() * static_cast<long>(N + n);
    Int lim = bound2;
    if (m >= 2 && bound1 > lim) lim = bound1;
    if (lim >= 2)
        for (auto p : primes_upto(lim.get_ui())) {
            Int pz(static_cast<unsigned long>(p));
            unsigned long e = max_prime_power_leq(pz, bound2);
            if (m >= 2 && pz <= bound1)
                e += (m - 1) * max_prime_power_leq(pz, bound1);
            Int pw;
            mpz_pow_ui(pw.get_mpz_t(), pz.get_mpz_t(), e);
            D *= pw;
        }
    return D;
}

inline DenominatorSet denominators(const ApproxParams& params) {
    DenominatorSet d;
    d.D1 = d1(params);
    Int sN;
    mpz_pow_ui(sN.get_mpz_t(), params.alpha().s().get_mpz_t(), params.N());
    d.D2 = d.D1 * sN;
    return d;
}

// Integrality certificate: k! D_1 a_{i,N-k} and every coefficient of
// N! D_2 Q_i(z), N! D_2 P_ij(z) must be integers.
inline CheckReport check_lemma3(const PadeSystem& sys, const DenominatorSet& D) {
    const unsigned long N = sys.params.N();
    const Int Nfac = factorial(N);
    for (std::size_t i = 0; i < sys.rows.size(); ++i) {
        const PadeRow& row = sys.rows[i];
        for (unsigned long k = 0; k <= N; ++k) {
            Rational v = Rational(factorial(k)) * Rational(D.D1) * row.Q.coeff(N - k);
            if (!v.is_integer()) {
                std::ostringstream os;
                os << "k! D1 a_{i,N-k} not integral at (i,k)=(" << i << "," << k << ")";
                return CheckReport::fail(os.str());
            }
        }
        for (std::size_t c = 0; c < row.Q.coeffs().size(); ++c)
            if (!(Rational(Int(Nfac * D.D2)) * row.Q.coeff(c)).is_integer())
                return CheckReport::fail("N! D2 Q_" + std::to_string(i) + " not integral");
        for (std::size_t j = 1; j <= sys.params.m(); ++j)
            for (std::size_t c = 0; c < row.P[j - 1].coeffs().size(); ++c)
                if (!(Rational(Int(Nfac * D.D2)) * row.P[j - 1].coeff(c)).is_integer()) {
                    std::ostringstream os;
                    os << "N! D2 P_ij not integral at (i,j,mu)=(" << i << "," << j << "," << c
                       << ")";
                    return CheckReport::fail(os.str());
                }
    }
    return CheckReport::ok();
}

namespace detail {

inline Poly poly_det(const std::vector<std::vector<Poly>>& M) {
    const std::size_t n = M.size();
    if (n == 1) return M[0][0];
    Poly acc;
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<std::vector<Poly>> minor;
        minor.reserve(n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Poly> row;
            for (std::size_t cc = 0; cc < n; ++cc)
                if (cc != c) row.push_back(M[r][cc]);
            minor.push_back(std::move(row));
        }
        Poly term = M[0][c] * poly_det(minor);
        acc = (c % 2) ? (acc - term) : (acc + term);
    }
    return acc;
}

inline Int int_det(std::vector<std::vector<Int>> M) {
    const std::size_t n = M.size();
    if (n == 1) return M[0][0];
    Int acc = 0;
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<std::vector<Int>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Int> row;
            for (std::size_t cc = 0; cc < n; ++cc)
                if (cc != c) row.push_back(M[r][cc]);
            minor.push_back(std::move(row));
        }
        Int term = M[0][c] * int_det(minor);
        if (c % 2) acc -= term; else acc += term;
    }
    return acc;
}

}  // namespace detail

// Exact determinant of the (m+1)x(m+1) matrix (Q_i P_i1 ... P_im).
inline Poly omega_det(const PadeSystem& sys) {
    const std::size_t m = sys.params.m();
    std::vector<std::vector<Poly>> M(m + 1);
    for (std::size_t i = 0; i <= m; ++i) {
        M[i].push_back(sys.rows[i].Q);
        for (std::size_t j = 1; j <= m; ++j) M[i].push_back(sys.rows[i].P[j - 1]);
    }
    return detail::poly_det(M);
}

// The monomial the determinant must equal:
//   a_N * prod_i (alpha_i)_{n-n_i+1} * z^{m(N+n)+m}
// (the product collapses to alpha_1...alpha_m when every n_i = n).
inline Poly omega_expected(const PadeSystem& sys) {
    const ApproxParams& params = sys.params;
    Rational lead = sys.rows[0].Q.leading();
    for (std::size_t i = 1; i <= params.m(); ++i)
        lead *= pochhammer(params.alpha().alpha(i), params.n() - params.n_j(i) + 1);
    const unsigned long deg = params.m() * (params.N() + params.n()) + params.m();
    std::vector<Rational> c(deg + 1, Rational(0));
    c[deg] = lead;
    return Poly(std::move(c));
}

// Eq-(15)-style evaluation: the scaled values N! D2 Q_i(a), N! D2 P_ij(a)
// must be integers with nonzero determinant; the determinant is pinned to
// the Lemma 1 monomial evaluated at a, times (N! D2)^{m+1}.
inline CheckReport check_eq15(const PadeSystem& sys, const Int& a, const DenominatorSet& D) {
    if (a == 0) throw std::invalid_argument("check_eq15: a must be nonzero");
    const std::size_t m = sys.params.m();
    const Rational scale(Int(factorial(sys.params.N()) * D.D2));

    std::vector<std::vector<Int>> M(m + 1);
    for (std::size_t i = 0; i <= m; ++i) {
        Rational q = scale * sys.rows[i].Q.eval(Rational(a));
        if (!q.is_integer()) return CheckReport::fail("N! D2 Q_i(a) not an integer");
        M[i].push_back(q.num());
        for (std::size_t j = 1; j <= m; ++j) {
            Rational p = scale * sys.rows[i].P[j - 1].eval(Rational(a));
            if (!p.is_integer()) return CheckReport::fail("N! D2 P_ij(a) not an integer");
            M[i].push_back(p.num());
        }
    }
    const Int det = detail::int_det(M);
    if (det == 0) return CheckReport::fail("scaled approximation matrix is singular");

    Rational want = omega_expected(sys).eval(Rational(a));
    for (std::size_t i = 0; i <= m; ++i) want *= scale;
    if (Rational(det) != want)
        return CheckReport::fail("determinant does not match the Lemma 1 monomial at z=a");
    return CheckReport::ok();
}

}  // namespace eupade
