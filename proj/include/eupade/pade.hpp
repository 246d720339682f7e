#pragma once

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "eupade/params.hpp"
#include "eupade/poly.hpp"
#include "eupade/rational.hpp"
#include "eupade/report.hpp"

namespace eupade {

// The interpolation nodes of row i.  Row 0 uses the N nodes
// n-n_j+1+alpha_j .. n+alpha_j per block j; rows i >= 1 add the
// normalization node gamma_0 = n-n_i+1+alpha_i and shift block i by one.
struct GammaSequence {
    std::size_t row = 0;
    Rational gamma0;          // meaningful for row >= 1 only
    std::vector<Rational> gammas;  // length N
};

inline GammaSequence gamma_sequence(const ApproxParams& params, std::size_t i) {
    const std::size_t m = params.m();
    if (i > m) throw std::invalid_argument("gamma_sequence: row out of range");
    GammaSequence g;
    g.row = i;
    for (std::size_t j = 1; j <= m; ++j) {
        const unsigned long nj = params.n_j(j);
        const Rational shift(i >= 1 && j == i ? 1 : 0);
        for (unsigned long k = params.n() - nj + 1; k <= params.n(); ++k)
            g.gammas.push_back(Rational(static_cast<long>(k)) + params.alpha().alpha(j) + shift);
    }
    if (i >= 1)
        g.gamma0 = Rational(static_cast<long>(params.n() - params.n_j(i) + 1)) +
                   params.alpha().alpha(i);

    for (std::size_t a = 0; a < g.gammas.size(); ++a) {
        for (std::size_t b = a + 1; b < g.gammas.size(); ++b)
            if (g.gammas[a] == g.gammas[b])
                throw InvalidAlpha("gamma_sequence: coincident nodes (alpha hypothesis violated)");
        if (i >= 1 && g.gammas[a] == g.gamma0)
            throw InvalidAlpha("gamma_sequence: gamma_0 coincides with a node");
    }
    return g;
}

// Row 0 denominator: a_0 = -1/N! and a_{N-k} = b_k with
//   k! b_k = sum_sigma prod_mu (gamma_sigma+mu)/(1+mu)
//            * sum_tau (-1)^tau C(k,tau) prod_{s != sigma} (gamma_s+tau)/(gamma_s-gamma_sigma).
inline Poly q0_coeffs(const ApproxParams& params) {
    const GammaSequence g = gamma_sequence(params, 0);
    const std::size_t N = params.N();
    std::vector<Rational> a(N + 1, Rational(0));
    a[0] = Rational(-1, 1) / Rational(factorial(N));
    for (std::size_t k = 0; k < N; ++k) {
        Rational acc(0);
        for (std::size_t sigma = 0; sigma < N; ++sigma) {
            Rational weight(1);
            for (std::size_t mu = 0; mu < N; ++mu)
                weight *= (g.gammas[sigma] + Rational(static_cast<long>(mu))) /
                          Rational(static_cast<long>(1 + mu));
            Rational inner(0);
            for (std::size_t tau = 0; tau <= k; ++tau) {
                Rational prod(1);
                for (std::size_t s = 0; s < N; ++s) {
                    if (s == sigma) continue;
                    prod *= (g.gammas[s] + Rational(static_cast<long>(tau))) /
                            (g.gammas[s] - g.gammas[sigma]);
                }
                Rational term = Rational(binomial(k, tau)) * prod;
                if (tau % 2) term = -term;
                inner += term;
            }
            acc += weight * inner;
        }
        a[N - k] = acc / Rational(factorial(k));
    }
    return Poly(std::move(a));
}

// Row i >= 1 denominator: a_{i,N-k} = b_k with
//   k! b_k = sum_tau (-1)^tau C(k,tau) prod_s (gamma_s+tau)/(gamma_s-gamma_0).
inline Poly qi_coeffs(const ApproxParams& params, std::size_t i) {
    if (i < 1 || i > params.m()) throw std::invalid_argument("qi_coeffs: need 1 <= i <= m");
    const GammaSequence g = gamma_sequence(params, i);
    const std::size_t N = params.N();
    std::vector<Rational> a(N + 1, Rational(0));
    for (std::size_t k = 0; k <= N; ++k) {
        Rational acc(0);
        for (std::size_t tau = 0; tau <= k; ++tau) {
            Rational prod(1);
            for (std::size_t s = 0; s < N; ++s)
                prod *= (g.gammas[s] + Rational(static_cast<long>(tau))) /
                        (g.gammas[s] - g.gamma0);
            Rational term = Rational(binomial(k, tau)) * prod;
            if (tau % 2) term = -term;
            acc += term;
        }
        a[N - k] = acc / Rational(factorial(k));
    }
    return Poly(std::move(a));
}

// Coefficient of z^mu in Q(z) * 2F0(alpha,1|z).
inline Rational series_coeff(const Poly& Q, const Rational& alpha, unsigned long mu) {
    Rational c(0);
    const std::size_t hi = std::min<std::size_t>(mu, Q.coeffs().size() ? Q.coeffs().size() - 1 : 0);
    for (std::size_t k = 0; k <= hi; ++k)
        c += Q.coeff(k) * pochhammer(alpha, mu - k);
    return c;
}

// Truncation of Q * phi_j to degree deg_bound: the numerator P.
inline Poly p_coeffs(const Poly& Q, const Rational& alpha_j, unsigned long deg_bound) {
    std::vector<Rational> c(deg_bound + 1);
    for (unsigned long mu = 0; mu <= deg_bound; ++mu)
        c[mu] = series_coeff(Q, alpha_j, mu);
    return Poly(std::move(c));
}

struct PadeRow {
    std::size_t i = 0;
    Poly Q;
    std::vector<Poly> P;  // P[j-1] approximates phi_j

    unsigned long remainder_start(const ApproxParams& params, std::size_t j) const {
        return params.N() + params.n() + 1 + (i >= 1 && i == j ? 1 : 0);
    }
};

struct PadeSystem {
    ApproxParams params;
    std::vector<PadeRow> rows;  // rows[i], i = 0..m

    const PadeRow& row(std::size_t i) const { return rows.at(i); }
};

// Coefficients c_{ij,mu} of Q_i phi_j - P_ij for mu = start .. start+count-1.
inline std::vector<Rational> remainder_coeffs(const PadeRow& row, const ApproxParams& params,
                                              std::size_t j, unsigned long count) {
    if (count < 1) throw std::invalid_argument("remainder_coeffs: count must be >= 1");
    const unsigned long start = row.remainder_start(params, j);
    std::vector<Rational> out;
    out.reserve(count);
    const Rational& alpha = params.alpha().alpha(j);
    for (unsigned long mu = start; mu < start + count; ++mu)
        out.push_back(series_coeff(row.Q, alpha, mu));
    return out;
}

// Recomputes every order condition from scratch, independent of how the
// system was built.  Checks the forced-zero gap windows, the truncation
// property of each P_ij, the degree/leading-coefficient facts, and row 0's
// normalization a_0 = -1/N!.
inline CheckReport verify_order(const PadeSystem& sys) {
    const ApproxParams& params = sys.params;
    const std::size_t m = params.m();
    const unsigned long n = params.n();
    const unsigned long N = params.N();

    auto fail = [](const std::string& s) { return CheckReport::fail(s); };

    if (sys.rows.size() != m + 1) return fail("verify_order: wrong row count");

    const Poly& Q0 = sys.rows[0].Q;
    if (Q0.degree() != static_cast<long>(N)) return fail("deg Q_0 != N");
    if (Q0.coeff(0) != Rational(-1, 1) / Rational(factorial(N)))
        return fail("Q_0 constant term != -1/N!");

    for (std::size_t i = 0; i <= m; ++i) {
        const PadeRow& row = sys.rows[i];
        if (row.Q.is_zero()) return fail("Q_" + std::to_string(i) + " = 0");
        if (row.Q.degree() > static_cast<long>(N))
            return fail("deg Q_" + std::to_string(i) + " > N");
        for (std::size_t j = 1; j <= m; ++j) {
            const unsigned long delta = (i >= 1 && i == j) ? 1 : 0;
            const unsigned long nj = params.n_j(j);
            const unsigned long pdeg = N + n - nj + delta;
            const Rational& alpha = params.alpha().alpha(j);
            const Poly& P = row.P[j - 1];

            if (P.degree() > static_cast<long>(pdeg))
                return fail("deg P_" + std::to_string(i) + std::to_string(j) + " too large");
            for (unsigned long mu = 0; mu <= pdeg; ++mu)
                if (P.coeff(mu) != series_coeff(row.Q, alpha, mu)) {
                    std::ostringstream os;
                    os << "P_" << i << j << " coefficient mismatch at mu=" << mu;
                    return fail(os.str());
                }
            // gap window: c_{ij,mu} = 0 for mu = N+n-n_j+1+delta .. N+n+delta
            for (unsigned long mu = N + n - nj + 1 + delta; mu <= N + n + delta; ++mu)
                if (!series_coeff(row.Q, alpha, mu).is_zero()) {
                    std::ostringstream os;
                    os << "order condition violated at (i,j,mu)=(" << i << "," << j << ","
                       << mu << ")";
                    return fail(os.str());
                }
            if (i == j) {
                // leading coefficient of P_ii is (alpha_i)_{n-n_i+1}, = alpha_i when n_i = n
                const Rational want = pochhammer(alpha, n - nj + 1);
                if (P.degree() != static_cast<long>(pdeg) || P.leading() != want) {
                    std::ostringstream os;
                    os << "leading coefficient of P_" << i << i << " != (alpha_i)_{n-n_i+1}";
                    return fail(os.str());
                }
            }
        }
    }
    return CheckReport::ok();
}

// All m+1 rows from the closed-form coefficient formulas; invariants checked
// before return.
inline PadeSystem build_system(const ApproxParams& params) {
    const std::size_t m = params.m();
    const unsigned long n = params.n();
    const unsigned long N = params.N();

    PadeSystem sys{params, {}};
    for (std::size_t i = 0; i <= m; ++i) {
        PadeRow row;
        row.i = i;
        row.Q = i == 0 ? q0_coeffs(params) : qi_coeffs(params, i);
        for (std::size_t j = 1; j <= m; ++j) {
            const unsigned long delta = (i >= 1 && i == j) ? 1 : 0;
            row.P.push_back(p_coeffs(row.Q, params.alpha().alpha(j), N + n - params.n_j(j) + delta));
        }
        sys.rows.push_back(std::move(row));
    }
    CheckReport rep = verify_order(sys);
    if (!rep.pass) throw std::runtime_error("build_system: " + rep.detail);
    return sys;
}

}  // namespace eupade
