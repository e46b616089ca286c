#pragma once

#include <cstdint>
#include <vector>

namespace iqfrac {

// One prime power p^e of a factorization.
struct PrimeFactor {
    std::int64_t p = 0;
    int e = 0;
    bool operator==(const PrimeFactor&) const = default;
};

// Primes strictly increasing, exponents >= 1; empty for n = 1.
using PrimeFactorization = std::vector<PrimeFactor>;

// Trial division up to sqrt(n). Rejects n <= 0.
PrimeFactorization factorize(std::int64_t n);

// Multiplies a factorization back out.
std::int64_t unfactor(const PrimeFactorization& f);

// All positive divisors, ascending.
std::vector<std::int64_t> divisors(const PrimeFactorization& f);

bool is_prime(std::int64_t n);
bool is_squarefree(std::int64_t n);

// Kronecker symbol (d/p) for prime p: 0 iff p | d, otherwise the Legendre
// symbol for odd p and the 2-adic convention (d mod 8 = +-1 -> 1) at p = 2.
// Rejects non-prime p.
int kronecker(std::int64_t d, std::int64_t p);

// Euler's phi over Z. Rejects n <= 0.
std::int64_t rational_totient(std::int64_t n);

}  // namespace iqfrac
