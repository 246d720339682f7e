#pragma once

#include <mpfr.h>

#include <stdexcept>
#include <string>
#include <utility>

#include "eupade/rational.hpp"

namespace eupade {

// Directed-rounding real: a thin RAII wrapper over mpfr_t where every
// operation states its rounding mode.  Used to keep certified one-sided
// bounds through log-domain arithmetic.
class DReal {
public:
    static constexpr mpfr_prec_t kDefaultPrec = 128;

    explicit DReal(mpfr_prec_t prec = kDefaultPrec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    DReal(const DReal& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    DReal(DReal&& o) noexcept { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_swap(v_, o.v_); }
    DReal& operator=(DReal o) noexcept { mpfr_swap(v_, o.v_); return *this; }
    ~DReal() { mpfr_clear(v_); }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

    static DReal of_long(long x, mpfr_prec_t prec = kDefaultPrec) {
        DReal r(prec);
        mpfr_set_si(r.v_, x, MPFR_RNDN);  // exact at >= 64 bits
        return r;
    }
    static DReal of_int(const Int& x, mpfr_rnd_t rnd, mpfr_prec_t prec = kDefaultPrec) {
        DReal r(prec);
        mpfr_set_z(r.v_, x.get_mpz_t(), rnd);
        return r;
    }
    static DReal of_rational(const Rational& x, mpfr_rnd_t rnd, mpfr_prec_t prec = kDefaultPrec) {
        DReal r(prec);
        mpfr_set_q(r.v_, x.raw().get_mpq_t(), rnd);
        return r;
    }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    std::string str() const {
        char* s = nullptr;
        mpfr_asprintf(&s, "%.20Rg", v_);
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }

    friend int cmp(const DReal& a, const DReal& b) { return mpfr_cmp(a.v_, b.v_); }
    friend bool operator<=(const DReal& a, const DReal& b) { return cmp(a, b) <= 0; }
    friend bool operator<(const DReal& a, const DReal& b) { return cmp(a, b) < 0; }

private:
    mpfr_t v_;
};

namespace dr {

inline mpfr_prec_t join_prec(const DReal& a, const DReal& b) {
    return std::max(a.prec(), b.prec());
}

inline DReal add(const DReal& a, const DReal& b, mpfr_rnd_t rnd) {
    DReal r(join_prec(a, b));
    mpfr_add(r.raw(), a.raw(), b.raw(), rnd);
    return r;
}
inline DReal sub(const DReal& a, const DReal& b, mpfr_rnd_t rnd) {
    DReal r(join_prec(a, b));
    mpfr_sub(r.raw(), a.raw(), b.raw(), rnd);
    return r;
}
inline DReal mul(const DReal& a, const DReal& b, mpfr_rnd_t rnd) {
    DReal r(join_prec(a, b));
    mpfr_mul(r.raw(), a.raw(), b.raw(), rnd);
    return r;
}
inline DReal mul_si(const DReal& a, long k, mpfr_rnd_t rnd) {
    DReal r(a.prec());
    mpfr_mul_si(r.raw(), a.raw(), k, rnd);
    return r;
}
inline DReal div(const DReal& a, const DReal& b, mpfr_rnd_t rnd) {
    DReal r(join_prec(a, b));
    mpfr_div(r.raw(), a.raw(), b.raw(), rnd);
    return r;
}
inline DReal log(const DReal& a, mpfr_rnd_t rnd) {
    DReal r(a.prec());
    mpfr_log(r.raw(), a.raw(), rnd);
    return r;
}
inline DReal exp(const DReal& a, mpfr_rnd_t rnd) {
    DReal r(a.prec());
    mpfr_exp(r.raw(), a.raw(), rnd);
    return r;
}
inline DReal sqrt(const DReal& a, mpfr_rnd_t rnd) {
    DReal r(a.prec());
    mpfr_sqrt(r.raw(), a.raw(), rnd);
    return r;
}
inline DReal sqr(const DReal& a, mpfr_rnd_t rnd) {
    DReal r(a.prec());
    mpfr_sqr(r.raw(), a.raw(), rnd);
    return r;
}
inline DReal max(const DReal& a, const DReal& b) { return cmp(a, b) >= 0 ? a : b; }

// log of a positive integer / rational in the requested direction.
inline DReal log_int(const Int& x, mpfr_rnd_t rnd, mpfr_prec_t prec = DReal::kDefaultPrec) {
    if (x <= 0) throw std::domain_error("log_int: need positive argument");
    // round the conversion the same way as the log: both monotone increasing
    return log(DReal::of_int(x, rnd, prec), rnd);
}
inline DReal log_rational(const Rational& x, mpfr_rnd_t rnd,
                          mpfr_prec_t prec = DReal::kDefaultPrec) {
    if (x.sign() <= 0) throw std::domain_error("log_rational: need positive argument");
    return log(DReal::of_rational(x, rnd, prec), rnd);
}

}  // namespace dr

// A certified upper bound on the natural log of a positive constant.
// All combining arithmetic rounds upward, so sums/positive multiples of
// upper bounds stay upper bounds.
struct LogBound {
    DReal log_up;

    static LogBound of_log(DReal v) { return {std::move(v)}; }

    // bound of a product: logs add, rounded up
    friend LogBound operator*(const LogBound& a, const LogBound& b) {
        return {dr::add(a.log_up, b.log_up, MPFR_RNDU)};
    }
    LogBound pow_ui(unsigned long k) const {
        return {dr::mul_si(log_up, static_cast<long>(k), MPFR_RNDU)};
    }

    double log_value() const { return log_up.to_double(); }
};

}  // namespace eupade
