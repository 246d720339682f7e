#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "eupade/certificates.hpp"
#include "eupade/pade.hpp"
#include "eupade/params.hpp"
#include "eupade/primes.hpp"
#include "eupade/rational.hpp"
#include "eupade/report.hpp"

namespace eupade {

struct PrecisionInsufficient : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A p-adic value known modulo p^K, with a certified lower bound on the
// valuation of the discarded series tail.
struct PadicApprox {
    Int p;
    unsigned long K = 0;
    Int modulus;        // p^K
    Int residue;        // in [0, p^K)
    long tail_valuation = 0;  // >= K
};

namespace detail {

inline Int pow_int(const Int& p, unsigned long K) {
    Int m;
    mpz_pow_ui(m.get_mpz_t(), p.get_mpz_t(), K);
    return m;
}

// residue of a rational with p-unit denominator, in [0, mod)
inline Int mod_reduce(const Rational& x, const Int& mod) {
    Int inv;
    if (mpz_invert(inv.get_mpz_t(), x.den().get_mpz_t(), mod.get_mpz_t()) == 0)
        throw std::domain_error("mod_reduce: denominator not invertible (p divides it)");
    Int r = (x.num() % mod) * inv % mod;
    if (r < 0) r += mod;
    return r;
}

}  // namespace detail

// Exact truncation of phi(a) = sum (alpha)_n a^n with a certified tail bound.
// The tail lemma: among the factors alpha+M, ..., alpha+M+k-1 (alpha a p-adic
// integer) at least [k/p^i] are divisible by p^i, so
//   v_p((alpha)_{M+k} a^{M+k}) >= v_p((alpha)_M) + v_p(k!) + (M+k) v_p(a),
// and summing through M with v_p((alpha)_M) + M v_p(a) >= K certifies the tail.
struct PhiPartial {
    Rational sum;
    unsigned long cutoff = 0;   // highest index summed
    long tail_valuation = 0;    // certified v_p of the discarded tail
};

inline PhiPartial phi_partial_sum(const Rational& alpha, const Int& a, const Int& p,
                                  unsigned long K, unsigned long min_cutoff = 0) {
    if (a == 0) throw std::invalid_argument("phi_partial_sum: a must be nonzero");
    if (alpha.den() % p == 0)
        throw std::domain_error("phi_partial_sum: p divides the denominator of alpha");
    const long va = vp_int(a, p);

    PhiPartial out;
    Rational term(1);  // (alpha)_n a^n
    long vpoch = 0;
    unsigned long n = 0;
    for (;;) {
        out.sum += term;
        const long bound = vpoch + static_cast<long>(n) * va;
        if (bound >= static_cast<long>(K) && n >= min_cutoff) {
            out.cutoff = n;
            out.tail_valuation = bound;
            return out;
        }
        Rational f = alpha + Rational(static_cast<long>(n));
        term *= f * Rational(a);
        auto vf = vp_rational(f, p);
        if (!vf) throw std::domain_error("phi_partial_sum: alpha is a nonpositive integer");
        vpoch += *vf;
        ++n;
    }
}

inline PadicApprox phi_eval(const Rational& alpha, const Int& a, const Int& p, unsigned long K,
                            unsigned long min_cutoff = 0) {
    if (K < 1) throw std::invalid_argument("phi_eval: K must be >= 1");
    PhiPartial ps = phi_partial_sum(alpha, a, p, K, min_cutoff);
    PadicApprox out;
    out.p = p;
    out.K = K;
    out.modulus = detail::pow_int(p, K);
    out.residue = detail::mod_reduce(ps.sum, out.modulus);
    out.tail_valuation = ps.tail_valuation;
    return out;
}

// Integer linear form l_0 + l_1 phi_1(a) + ... + l_m phi_m(a).
class LinearFormSpec {
public:
    LinearFormSpec(AlphaParams alpha, Int a, std::vector<Int> coeffs)
        : alpha_(std::move(alpha)), a_(std::move(a)), coeffs_(std::move(coeffs)) {
        if (a_ == 0) throw std::invalid_argument("LinearFormSpec: a must be nonzero");
        if (coeffs_.size() != alpha_.m() + 1)
            throw std::invalid_argument("LinearFormSpec: need m+1 coefficients l_0..l_m");
        bool nonzero = false;
        for (const auto& l : coeffs_) nonzero = nonzero || l != 0;
        if (!nonzero) throw std::invalid_argument("LinearFormSpec: coefficients all zero");
    }

    const AlphaParams& alpha() const { return alpha_; }
    const Int& a() const { return a_; }
    const std::vector<Int>& coeffs() const { return coeffs_; }
    const Int& l(std::size_t j) const { return coeffs_.at(j); }  // l(0) = l_0

private:
    AlphaParams alpha_;
    Int a_;
    std::vector<Int> coeffs_;
};

inline PadicApprox linear_form_eval(const LinearFormSpec& L, const Int& p, unsigned long K,
                                    unsigned long min_cutoff = 0) {
    if (L.alpha().s() % p == 0)
        throw std::domain_error("linear_form_eval: p divides s");
    PadicApprox out;
    out.p = p;
    out.K = K;
    out.modulus = detail::pow_int(p, K);
    out.residue = L.l(0) % out.modulus;
    long tail = static_cast<long>(K);
    for (std::size_t j = 1; j <= L.alpha().m(); ++j) {
        if (L.l(j) == 0) continue;
        PadicApprox phi = phi_eval(L.alpha().alpha(j), L.a(), p, K, min_cutoff);
        out.residue = (out.residue + L.l(j) * phi.residue) % out.modulus;
        if (phi.tail_valuation < tail) tail = phi.tail_valuation;
    }
    out.residue %= out.modulus;
    if (out.residue < 0) out.residue += out.modulus;
    out.tail_valuation = tail;
    return out;
}

// |D_1 R_ij(a)|_p <= |(n+1)!|_p |a|_p^{mn+n+1}, checked for every (i, j)
// by exact truncated summation with certified tails.
inline CheckReport check_lemma5(const PadeSystem& sys, const Int& a, const Int& p,
                                unsigned long K, const Int& D1) {
    const ApproxParams& params = sys.params;
    if (!params.uniform_nj())
        throw std::invalid_argument("check_lemma5: stated for the n_j = n case");
    if (params.alpha().s() % p == 0) throw std::domain_error("check_lemma5: p divides s");
    const long m = static_cast<long>(params.m());
    const long n = static_cast<long>(params.n());
    const long va = vp_int(a, p);
    const long bound =
        vp_factorial(Int(n + 1), p).get_si() + (m * n + n + 1) * va;

    for (std::size_t j = 1; j <= params.m(); ++j) {
        PhiPartial phi = phi_partial_sum(params.alpha().alpha(j), a, p, K);
        for (std::size_t i = 0; i <= params.m(); ++i) {
            const PadeRow& row = sys.rows[i];
            const Rational Qa = row.Q.eval(Rational(a));
            Rational Y = Rational(D1) * (Qa * phi.sum - row.P[j - 1].eval(Rational(a)));
            // discarded tail enters as D1 Q_i(a) * tail
            long terr = phi.tail_valuation;
            if (!Qa.is_zero()) {
                auto vq = vp_rational(Rational(D1) * Qa, p);
                terr += *vq;
            }
            if (terr < bound)
                throw PrecisionInsufficient("check_lemma5: K too small to separate the bound");
            auto vy = vp_rational(Y, p);
            if (vy && *vy < bound) {
                std::ostringstream os;
                os << "lemma 5 bound violated at (i,j)=(" << i << "," << j << "): v_p="
                   << *vy << " < " << bound;
                return CheckReport::fail(os.str());
            }
        }
    }
    return CheckReport::ok();
}

// Q_i L_p = Lambda_i + sum_j R_ij l_j with Lambda_i the exact integer
// Q_i l_0 + sum_j P_ij l_j (all scaled by N! D_2), congruence checked mod p^K.
inline CheckReport lambda_decomposition(const PadeSystem& sys, const LinearFormSpec& L,
                                        const Int& p, unsigned long K,
                                        const DenominatorSet& D) {
    const ApproxParams& params = sys.params;
    if (params.alpha().s() % p == 0)
        throw std::domain_error("lambda_decomposition: p divides s");
    const Int mod = detail::pow_int(p, K);
    const Rational scale(Int(factorial(params.N()) * D.D2));
    const Rational a(L.a());

    PadicApprox lf = linear_form_eval(L, p, K);

    std::vector<PhiPartial> phis;
    for (std::size_t j = 1; j <= params.m(); ++j)
        phis.push_back(phi_partial_sum(params.alpha().alpha(j), L.a(), p, K));

    bool some_lambda_nonzero = false;
    for (std::size_t i = 0; i <= params.m(); ++i) {
        const PadeRow& row = sys.rows[i];
        Rational Qs = scale * row.Q.eval(a);
        if (!Qs.is_integer())
            return CheckReport::fail("scaled Q_i(a) not an integer");
        Int lambda = Qs.num() * L.l(0);
        Int rhs = 0;
        for (std::size_t j = 1; j <= params.m(); ++j) {
            Rational Ps = scale * row.P[j - 1].eval(a);
            if (!Ps.is_integer())
                return CheckReport::fail("scaled P_ij(a) not an integer");
            lambda += Ps.num() * L.l(j);
            // scaled remainder R_ij(a) mod p^K from the certified truncation
            Rational R = Qs * phis[j - 1].sum - Ps;
            if (phis[j - 1].tail_valuation < static_cast<long>(K))
                throw PrecisionInsufficient("lambda_decomposition: tail valuation below K");
            rhs = (rhs + L.l(j) * detail::mod_reduce(R, mod)) % mod;
        }
        if (lambda != 0) some_lambda_nonzero = true;
        Int lhs = Qs.num() % mod * lf.residue % mod;
        Int want = (lambda % mod + rhs) % mod;
        Int diff = (lhs - want) % mod;
        if (diff != 0) {
            std::ostringstream os;
            os << "lambda decomposition mismatch at row " << i;
            return CheckReport::fail(os.str());
        }
    }
    if (lf.residue == 0 && !some_lambda_nonzero)
        return CheckReport::fail("L_p vanishes to precision K but every Lambda_i = 0");
    return CheckReport::ok();
}

enum class ScanStatus { kNonzero, kZeroToPrecision };

struct ScanEntry {
    std::uint64_t p = 0;
    ScanStatus status = ScanStatus::kZeroToPrecision;
    unsigned long K = 0;
};

// For each prime p in (p_lo, p_hi] with p !| s: NONZERO is a proof that
// L_p != 0; ZERO_TO_PRECISION is never a proof of vanishing.
inline std::vector<ScanEntry> scan_nonvanishing(const LinearFormSpec& L, std::uint64_t p_lo,
                                                std::uint64_t p_hi, unsigned long K) {
    if (p_lo > p_hi) throw std::invalid_argument("scan_nonvanishing: need p_lo <= p_hi");
    std::vector<ScanEntry> out;
    if (p_hi < 2) return out;
    for (auto p : primes_upto(p_hi)) {
        if (p <= p_lo) continue;
        Int pz(static_cast<unsigned long>(p));
        if (L.alpha().s() % pz == 0) continue;
        PadicApprox r = linear_form_eval(L, pz, K);
        out.push_back({p, r.residue != 0 ? ScanStatus::kNonzero : ScanStatus::kZeroToPrecision, K});
    }
    return out;
}

}  // namespace eupade
