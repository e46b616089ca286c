#include "iqfrac/arith.hpp"

#include <algorithm>
#include <stdexcept>

#include "iqfrac/checked.hpp"

namespace iqfrac {

PrimeFactorization factorize(std::int64_t n) {
    if (n <= 0) throw std::invalid_argument("factorize: n must be >= 1");
    PrimeFactorization out;
    auto strip = [&](std::int64_t p) {
        if (n % p != 0) return;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.push_back({p, e});
    };
    strip(2);
    strip(3);
    for (std::int64_t d = 5; d <= n / d; d += 6) {
        strip(d);
        strip(d + 2);
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

std::int64_t unfactor(const PrimeFactorization& f) {
    std::int64_t n = 1;
    for (const auto& [p, e] : f)
        for (int i = 0; i < e; ++i) n = checked_mul(n, p);
    return n;
}

std::vector<std::int64_t> divisors(const PrimeFactorization& f) {
    std::vector<std::int64_t> out{1};
    for (const auto& [p, e] : f) {
        const std::size_t base = out.size();
        std::int64_t pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk = checked_mul(pk, p);
            for (std::size_t j = 0; j < base; ++j) out.push_back(checked_mul(out[j], pk));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (std::int64_t d = 5; d <= n / d; d += 6)
        if (n % d == 0 || n % (d + 2) == 0) return false;
    return true;
}

bool is_squarefree(std::int64_t n) {
    if (n <= 0) return false;
    for (const auto& [p, e] : factorize(n))
        if (e > 1) return false;
    return true;
}

static std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t m) {
    __int128 r = 1;
    __int128 b = ((base % m) + m) % m;
    while (exp > 0) {
        if (exp & 1) r = r * b % m;
        b = b * b % m;
        exp >>= 1;
    }
    return static_cast<std::int64_t>(r);
}

int kronecker(std::int64_t d, std::int64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("kronecker: p must be prime");
    if (p == 2) {
        if (d % 2 == 0) return 0;
        const std::int64_t m = ((d % 8) + 8) % 8;
        return (m == 1 || m == 7) ? 1 : -1;
    }
    const std::int64_t m = ((d % p) + p) % p;
    if (m == 0) return 0;
    return mod_pow(m, (p - 1) / 2, p) == 1 ? 1 : -1;  // Euler's criterion
}

std::int64_t rational_totient(std::int64_t n) {
    if (n <= 0) throw std::invalid_argument("rational_totient: n must be >= 1");
    std::int64_t phi = n;
    for (const auto& [p, e] : factorize(n)) phi = phi / p * (p - 1);
    return phi;
}

}  // namespace iqfrac
