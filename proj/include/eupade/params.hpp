#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "eupade/rational.hpp"

namespace eupade {

struct InvalidAlpha : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// The alpha_j = r_j/s_j defining the series, with the derived size data
// R = max|r_j|, S = max s_j, rhat/shat from the pairwise differences,
// and s = lcm{s_1..s_m}.
class AlphaParams {
public:
    explicit AlphaParams(std::vector<Rational> alphas) : alphas_(std::move(alphas)) {
        if (alphas_.empty()) throw InvalidAlpha("alphas: need m >= 1");
        for (const auto& a : alphas_) {
            if (a.is_integer() && a.num() <= 0)
                throw InvalidAlpha("alpha must avoid {0, -1, -2, ...}: " + a.str());
        }
        for (std::size_t i = 0; i < alphas_.size(); ++i)
            for (std::size_t j = i + 1; j < alphas_.size(); ++j)
                if ((alphas_[i] - alphas_[j]).is_integer())
                    throw InvalidAlpha("alpha_i - alpha_j must not be an integer: " +
                                       alphas_[i].str() + ", " + alphas_[j].str());

        R_ = 0;
        S_ = 1;
        s_ = 1;
        for (const auto& a : alphas_) {
            Int r = abs(a.num());
            if (r > R_) R_ = r;
            if (a.den() > S_) S_ = a.den();
            Int l;
            mpz_lcm(l.get_mpz_t(), s_.get_mpz_t(), a.den().get_mpz_t());
            s_ = l;
        }
        // rhat/shat over the pairwise differences; inert for m = 1 (every use
        // carries an (m-1) multiplier).
        rhat_ = 0;
        shat_ = 1;
        for (std::size_t k = 0; k < alphas_.size(); ++k)
            for (std::size_t j = 0; j < alphas_.size(); ++j) {
                if (k == j) continue;
                Rational d = alphas_[k] - alphas_[j];
                Int r = abs(d.num());
                if (r > rhat_) rhat_ = r;
                if (d.den() > shat_) shat_ = d.den();
            }
    }

    std::size_t m() const { return alphas_.size(); }
    const std::vector<Rational>& alphas() const { return alphas_; }
    const Rational& alpha(std::size_t j) const { return alphas_.at(j - 1); }  // 1-based

    const Int& R() const { return R_; }
    const Int& S() const { return S_; }
    const Int& rhat() const { return rhat_; }
    const Int& shat() const { return shat_; }
    const Int& s() const { return s_; }

private:
    std::vector<Rational> alphas_;
    Int R_, S_, rhat_, shat_, s_;
};

// One approximation problem: degrees n, n_1..n_m with n >= max n_j, N = sum n_j.
class ApproxParams {
public:
    ApproxParams(AlphaParams alpha, unsigned long n, std::vector<unsigned long> n_js)
        : alpha_(std::move(alpha)), n_(n), n_js_(std::move(n_js)) {
        if (n_js_.size() != alpha_.m())
            throw std::invalid_argument("n_js: need one per alpha");
        N_ = 0;
        for (auto nj : n_js_) {
            if (nj < 1 || nj > n_) throw std::invalid_argument("n_js: need 1 <= n_j <= n");
            N_ += nj;
        }
    }

    // n_j = n for all j.
    ApproxParams(AlphaParams alpha, unsigned long n)
        : ApproxParams(std::move(alpha), n, std::vector<unsigned long>(alpha.m(), n)) {}

    const AlphaParams& alpha() const { return alpha_; }
    std::size_t m() const { return alpha_.m(); }
    unsigned long n() const { return n_; }
    unsigned long n_j(std::size_t j) const { return n_js_.at(j - 1); }  // 1-based
    const std::vector<unsigned long>& n_js() const { return n_js_; }
    unsigned long N() const { return N_; }

    bool uniform_nj() const {
        for (auto nj : n_js_)
            if (nj != n_) return false;
        return true;
    }

private:
    AlphaParams alpha_;
    unsigned long n_;
    std::vector<unsigned long> n_js_;
    unsigned long N_;
};

}  // namespace eupade
