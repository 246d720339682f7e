#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "eupade/rational.hpp"

namespace eupade {

// All primes <= x, ascending (Eratosthenes).
inline std::vector<std::uint64_t> primes_upto(std::uint64_t x) {
    if (x < 2) throw std::invalid_argument("primes_upto: x must be >= 2");
    std::vector<bool> comp(x + 1, false);
    std::vector<std::uint64_t> ps;
    for (std::uint64_t i = 2; i <= x; ++i) {
        if (comp[i]) continue;
        ps.push_back(i);
        for (std::uint64_t j = i * i; j <= x; j += i) comp[j] = true;
    }
    return ps;
}

// Immutable sieve cache, built once per run.
class PrimeCache {
public:
    explicit PrimeCache(std::uint64_t limit) : limit_(limit), primes_(primes_upto(limit)) {}

    const std::vector<std::uint64_t>& primes() const { return primes_; }
    std::uint64_t limit() const { return limit_; }

private:
    std::uint64_t limit_;
    std::vector<std::uint64_t> primes_;
};

// Legendre: v_p(n!) = sum_{i>=1} floor(n/p^i).
inline Int vp_factorial(const Int& n, const Int& p) {
    if (n < 0) throw std::invalid_argument("vp_factorial: n must be >= 0");
    Int total = 0;
    Int q = n;
    while (q > 0) {
        q /= p;
        total += q;
    }
    return total;
}

// Largest e with p^e <= x, by exact integer comparison (never floating logs).
inline unsigned long max_prime_power_leq(const Int& p, const Int& x) {
    if (x < 1) throw std::invalid_argument("max_prime_power_leq: x must be >= 1");
    unsigned long e = 0;
    Int pw = p;
    while (pw <= x) {
        ++e;
        pw *= p;
    }
    return e;
}

}  // namespace eupade
