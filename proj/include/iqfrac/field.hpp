#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "iqfrac/arith.hpp"

namespace iqfrac {

enum class OmegaKind { sqrt_n, half_one_plus_sqrt_n };

// The imaginary quadratic field Q(sqrt(N)) for squarefree N < 0, with
// integral basis {1, w} where w = sqrt(N) or (1 + sqrt(N))/2 depending on
// N mod 4. `units` is the number of roots of unity in O_K.
struct QuadraticField {
    std::int64_t n = 0;     // radicand N
    std::int64_t disc = 0;  // field discriminant d_K
    OmegaKind omega = OmegaKind::sqrt_n;
    int units = 2;
    int r2 = 1;  // pairs of complex embeddings
    int degree = 2;
    std::int64_t omega_trace = 0;  // Tr(w)
    std::int64_t omega_norm = 0;   // N(w)
};

// Rejects nonnegative or non-squarefree N.
QuadraticField make_field(std::int64_t n);

// x + y*w in the integral basis of some field.
struct AlgebraicInt {
    std::int64_t x = 0;
    std::int64_t y = 0;
    bool operator==(const AlgebraicInt&) const = default;
};

std::int64_t norm(const QuadraticField& k, const AlgebraicInt& a);
std::int64_t trace(const QuadraticField& k, const AlgebraicInt& a);
AlgebraicInt conj(const QuadraticField& k, const AlgebraicInt& a);
AlgebraicInt add(const QuadraticField& k, const AlgebraicInt& a, const AlgebraicInt& b);
AlgebraicInt sub(const QuadraticField& k, const AlgebraicInt& a, const AlgebraicInt& b);
AlgebraicInt mul(const QuadraticField& k, const AlgebraicInt& a, const AlgebraicInt& b);
AlgebraicInt negate(const AlgebraicInt& a);
AlgebraicInt mul_scalar(std::int64_t s, const AlgebraicInt& a);

inline bool is_zero(const AlgebraicInt& a) { return a.x == 0 && a.y == 0; }
bool is_unit(const QuadraticField& k, const AlgebraicInt& a);

// Serialization "x{+|-}y*w", e.g. "1+1*w" for 1 + sqrt(-5).
std::string to_string(const AlgebraicInt& a);

// The canonical unit-orbit representative: for two units take y > 0 or
// (y = 0, x > 0); for four or six units take the orbit element whose
// complex argument lies in [0, 2*pi/units), which is x > 0, y >= 0.
bool is_canonical_rep(const QuadraticField& k, const AlgebraicInt& a);

// One representative per unit orbit of the nonzero elements with norm at
// most x_max, sorted by norm ascending, ties by (y, x) lexicographically.
std::vector<AlgebraicInt> enumerate_by_norm(const QuadraticField& k, std::int64_t x_max);

}  // namespace iqfrac
