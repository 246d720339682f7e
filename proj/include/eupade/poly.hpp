#pragma once

#include <cstddef>
#include <ostream>
#include <vector>

#include "eupade/rational.hpp"

namespace eupade {

// Dense polynomial over Rational, coefficient of z^k at index k.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly constant(const Rational& r) { return Poly({r}); }

    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    // Degree of the zero polynomial is -1.
    long degree() const { return static_cast<long>(c_.size()) - 1; }

    Rational coeff(std::size_t k) const {
        return k < c_.size() ? c_[k] : Rational(0);
    }

    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

    Rational eval(const Rational& z) const {
        Rational r(0);
        for (std::size_t k = c_.size(); k-- > 0;) r = r * z + c_[k];
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t k = 0; k < r.size(); ++k) r[k] = a.coeff(k) + b.coeff(k);
        return Poly(std::move(r));
    }

    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t k = 0; k < r.size(); ++k) r[k] = a.coeff(k) - b.coeff(k);
        return Poly(std::move(r));
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(r));
    }

    friend Poly operator*(const Rational& s, const Poly& p) {
        std::vector<Rational> r = p.c_;
        for (auto& x : r) x *= s;
        return Poly(std::move(r));
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const Poly& p) {
        if (p.is_zero()) return os << "0";
        for (std::size_t k = 0; k < p.c_.size(); ++k) {
            if (k) os << " + ";
            os << "(" << p.c_[k] << ")z^" << k;
        }
        return os;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rational> c_;
};

}  // namespace eupade
