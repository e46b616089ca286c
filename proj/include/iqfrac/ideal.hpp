#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "iqfrac/field.hpp"

namespace iqfrac {

// Nonzero integral ideal a*Z + (b + c*w)*Z in Hermite normal form:
// c | a, c | b, 0 <= b < a, norm = a*c. The ring itself is (1, 0, 1).
struct Ideal {
    std::int64_t a = 1;
    std::int64_t b = 0;
    std::int64_t c = 1;
    bool operator==(const Ideal&) const = default;
};

inline Ideal ring_of_integers() { return Ideal{1, 0, 1}; }
inline bool is_unit_ideal(const Ideal& i) { return i.a == 1 && i.c == 1; }

std::int64_t ideal_norm(const Ideal& i);
std::string to_string(const Ideal& i);  // "[a,b,c]"

// HNF shape plus w-stability of the module.
bool is_valid_ideal(const QuadraticField& k, const Ideal& i);
bool ideal_contains(const QuadraticField& k, const Ideal& i, const AlgebraicInt& a);

// HNF of the O_K-module generated (closes the Z-span of {g, w*g}).
// Rejects all-zero generator lists.
Ideal ideal_from_generators(const QuadraticField& k, const std::vector<AlgebraicInt>& gens);

// <alpha> for alpha != 0.
Ideal principal(const QuadraticField& k, const AlgebraicInt& alpha);

Ideal conj_ideal(const QuadraticField& k, const Ideal& i);

// The gcd <I union J>.
Ideal ideal_sum(const QuadraticField& k, const Ideal& i, const Ideal& j);
Ideal ideal_mul(const QuadraticField& k, const Ideal& i, const Ideal& j);

// i | j, equivalently j is contained in i.
bool ideal_divides(const QuadraticField& k, const Ideal& i, const Ideal& j);

// i / j; throws non_integral_quotient unless j | i.
Ideal ideal_quotient(const QuadraticField& k, const Ideal& i, const Ideal& j);

enum class SplitType { split, inert, ramified };

struct IdealFactor {
    Ideal prime;
    int exponent = 0;
    SplitType type = SplitType::split;
};
using IdealFactorization = std::vector<IdealFactor>;

// Prime ideals above the rational prime p, in deterministic order (split p
// gives the two conjugates ordered by the root of the minimal polynomial).
std::vector<std::pair<Ideal, SplitType>> primes_above(const QuadraticField& k, std::int64_t p);

IdealFactorization factor_ideal(const QuadraticField& k, const Ideal& i);

// phi(I) = N(I) * prod_{p | I} (1 - 1/N(p)).
std::int64_t ideal_totient(const QuadraticField& k, const Ideal& i);

inline constexpr std::int64_t kResidueBudget = 1'000'000;

// The norm(I) coset representatives {x + y*w : 0 <= x < a, 0 <= y < c}.
std::vector<AlgebraicInt> residues(const QuadraticField& k, const Ideal& i,
                                   std::int64_t budget = kResidueBudget);

// <a, b> for b != 0 (a may be zero).
Ideal gcd_ideal(const QuadraticField& k, const AlgebraicInt& a, const AlgebraicInt& b);

}  // namespace iqfrac
