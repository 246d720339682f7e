#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "eupade/pade.hpp"
#include "eupade/params.hpp"
#include "eupade/poly.hpp"
#include "eupade/rational.hpp"

namespace eupade {

struct SingularMatrix : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ExactMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<std::vector<Rational>> a;

    static ExactMatrix zero(std::size_t r, std::size_t c) {
        return {r, c, std::vector<std::vector<Rational>>(r, std::vector<Rational>(c, Rational(0)))};
    }
    Rational& at(std::size_t i, std::size_t j) { return a[i][j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return a[i][j]; }
};

// Exact solve of a square nonsingular system by fraction-free (Bareiss)
// elimination on the denominator-cleared augmented matrix.  The solution is
// re-checked against A x = rhs before return.
inline std::vector<Rational> solve_exact(const ExactMatrix& A, const std::vector<Rational>& rhs) {
    const std::size_t n = A.rows;
    if (A.cols != n || rhs.size() != n)
        throw std::invalid_argument("solve_exact: need square A and matching rhs");
    if (n == 0) return {};

    // clear denominators per row
    std::vector<std::vector<Int>> M(n, std::vector<Int>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        Int l = 1;
        for (std::size_t j = 0; j < n; ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), A.at(i, j).den().get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), rhs[i].den().get_mpz_t());
        for (std::size_t j = 0; j < n; ++j) {
            Rational v = A.at(i, j) * Rational(l);
            M[i][j] = v.num();
        }
        Rational v = rhs[i] * Rational(l);
        M[i][n] = v.num();
    }

    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (M[k][k] == 0) {
            std::size_t piv = k;
            while (piv < n && M[piv][k] == 0) ++piv;
            if (piv == n) throw SingularMatrix("solve_exact: singular matrix");
            std::swap(M[k], M[piv]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j <= n; ++j) {
                Int t = M[i][j] * M[k][k] - M[i][k] * M[k][j];
                mpz_divexact(M[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            M[i][k] = 0;
        }
        prev = M[k][k];
    }
    if (M[n - 1][n - 1] == 0) throw SingularMatrix("solve_exact: singular matrix");

    std::vector<Rational> x(n, Rational(0));
    for (std::size_t i = n; i-- > 0;) {
        Rational acc(M[i][n]);
        for (std::size_t j = i + 1; j < n; ++j) acc -= Rational(M[i][j]) * x[j];
        x[i] = acc / Rational(M[i][i]);
    }

    for (std::size_t i = 0; i < n; ++i) {
        Rational acc(0);
        for (std::size_t j = 0; j < n; ++j) acc += A.at(i, j) * x[j];
        if (acc != rhs[i]) throw std::logic_error("solve_exact: back-substitution check failed");
    }
    return x;
}

// prod_{i<j} (gamma_j - gamma_i); the determinant of the factorial-power
// Vandermonde matrix with rows (1, g_i, g_i(g_i+1), ...).
inline Rational vandermonde_delta(const std::vector<Rational>& gammas) {
    if (gammas.empty()) throw std::invalid_argument("vandermonde_delta: empty node list");
    Rational d(1);
    for (std::size_t i = 0; i < gammas.size(); ++i)
        for (std::size_t j = i + 1; j < gammas.size(); ++j)
            d *= gammas[j] - gammas[i];
    return d;
}

// Independent construction of Q_0: sets up the defining linear system with
// b_N = -1/N! moved to the right side and solves it exactly.
inline Poly q0_oracle(const ApproxParams& params) {
    const GammaSequence g = gamma_sequence(params, 0);
    const std::size_t N = params.N();
    ExactMatrix A = ExactMatrix::zero(N, N);
    std::vector<Rational> rhs(N);
    const Rational invNfac = Rational(1) / Rational(factorial(N));
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t k = 0; k < N; ++k) A.at(i, k) = pochhammer(g.gammas[i], k);
        rhs[i] = invNfac * pochhammer(g.gammas[i], N);
    }
    std::vector<Rational> b = solve_exact(A, rhs);
    std::vector<Rational> a(N + 1);
    a[0] = -invNfac;
    for (std::size_t k = 0; k < N; ++k) a[N - k] = b[k];
    return Poly(std::move(a));
}

// Independent construction of Q_i, i >= 1: the (N+1)x(N+1) system whose
// gamma_0 equation is normalized to 1.
inline Poly qi_oracle(const ApproxParams& params, std::size_t i) {
    if (i < 1 || i > params.m()) throw std::invalid_argument("qi_oracle: need 1 <= i <= m");
    const GammaSequence g = gamma_sequence(params, i);
    const std::size_t N = params.N();
    ExactMatrix A = ExactMatrix::zero(N + 1, N + 1);
    std::vector<Rational> rhs(N + 1, Rational(0));
    for (std::size_t k = 0; k <= N; ++k) A.at(0, k) = pochhammer(g.gamma0, k);
    rhs[0] = Rational(1);
    for (std::size_t s = 1; s <= N; ++s)
        for (std::size_t k = 0; k <= N; ++k) A.at(s, k) = pochhammer(g.gammas[s - 1], k);
    std::vector<Rational> b = solve_exact(A, rhs);
    std::vector<Rational> a(N + 1);
    for (std::size_t k = 0; k <= N; ++k) a[N - k] = b[k];
    return Poly(std::move(a));
}

}  // namespace eupade
