#include "iqfrac/field.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "iqfrac/checked.hpp"

namespace iqfrac {

QuadraticField make_field(std::int64_t n) {
    if (n >= 0) throw std::invalid_argument("make_field: N must be negative");
    if (!is_squarefree(-n)) throw std::invalid_argument("make_field: N must be squarefree");
    QuadraticField k;
    k.n = n;
    if (((n % 4) + 4) % 4 == 1) {
        k.disc = n;
        k.omega = OmegaKind::half_one_plus_sqrt_n;
        k.omega_trace = 1;
        k.omega_norm = (1 - n) / 4;
    } else {
        k.disc = 4 * n;
        k.omega = OmegaKind::sqrt_n;
        k.omega_trace = 0;
        k.omega_norm = -n;
    }
    if (k.disc == -3)
        k.units = 6;
    else if (k.disc == -4)
        k.units = 4;
    else
        k.units = 2;
    return k;
}

// N(x + y*w) = x^2 + Tr(w) x y + N(w) y^2, positive definite for N < 0.
std::int64_t norm(const QuadraticField& k, const AlgebraicInt& a) {
    const std::int64_t xx = checked_mul(a.x, a.x);
    const std::int64_t xy = checked_mul(k.omega_trace, checked_mul(a.x, a.y));
    const std::int64_t yy = checked_mul(k.omega_norm, checked_mul(a.y, a.y));
    return checked_add(checked_add(xx, xy), yy);
}

std::int64_t trace(const QuadraticField& k, const AlgebraicInt& a) {
    return checked_add(checked_mul(2, a.x), checked_mul(k.omega_trace, a.y));
}

AlgebraicInt conj(const QuadraticField& k, const AlgebraicInt& a) {
    // conj(w) = Tr(w) - w
    return {checked_add(a.x, checked_mul(k.omega_trace, a.y)), checked_neg(a.y)};
}

AlgebraicInt add(const QuadraticField&, const AlgebraicInt& a, const AlgebraicInt& b) {
    return {checked_add(a.x, b.x), checked_add(a.y, b.y)};
}

AlgebraicInt sub(const QuadraticField&, const AlgebraicInt& a, const AlgebraicInt& b) {
    return {checked_sub(a.x, b.x), checked_sub(a.y, b.y)};
}

// w^2 = Tr(w) w - N(w)
AlgebraicInt mul(const QuadraticField& k, const AlgebraicInt& a, const AlgebraicInt& b) {
    const std::int64_t yy = checked_mul(a.y, b.y);
    const std::int64_t x = checked_sub(checked_mul(a.x, b.x), checked_mul(k.omega_norm, yy));
    const std::int64_t y = checked_add(
        checked_add(checked_mul(a.x, b.y), checked_mul(a.y, b.x)),
        checked_mul(k.omega_trace, yy));
    return {x, y};
}

AlgebraicInt negate(const AlgebraicInt& a) {
    return {checked_neg(a.x), checked_neg(a.y)};
}

AlgebraicInt mul_scalar(std::int64_t s, const AlgebraicInt& a) {
    return {checked_mul(s, a.x), checked_mul(s, a.y)};
}

bool is_unit(const QuadraticField& k, const AlgebraicInt& a) {
    return !is_zero(a) && norm(k, a) == 1;
}

std::string to_string(const AlgebraicInt& a) {
    std::ostringstream os;
    os << a.x;
    if (a.y >= 0) os << '+';
    os << a.y << "*w";
    return os.str();
}

bool is_canonical_rep(const QuadraticField& k, const AlgebraicInt& a) {
    if (is_zero(a)) return false;
    if (k.units == 2) return a.y > 0 || (a.y == 0 && a.x > 0);
    // w = 4 or 6: complex argument in [0, 2*pi/w) amounts to x > 0, y >= 0.
    return a.x > 0 && a.y >= 0;
}

std::vector<AlgebraicInt> enumerate_by_norm(const QuadraticField& k, std::int64_t x_max) {
    if (x_max < 1) throw std::invalid_argument("enumerate_by_norm: bound must be >= 1");
    const std::int64_t absn = -k.n;

    // 4*N(x + y*w) >= |N| y^2 in both basis kinds, and |x| <= sqrt(X) + y.
    std::int64_t ymax = 0;
    while (checked_mul(checked_mul(ymax + 1, ymax + 1), absn) <= 4 * x_max) ++ymax;
    std::int64_t xspan = 1;
    while (xspan * xspan <= x_max) ++xspan;

    std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>> keyed;  // (norm, y, x)
    for (std::int64_t y = 0; y <= ymax; ++y) {
        for (std::int64_t x = -(xspan + ymax); x <= xspan + ymax; ++x) {
            const AlgebraicInt a{x, y};
            if (!is_canonical_rep(k, a)) continue;
            const std::int64_t na = norm(k, a);
            if (na > x_max) continue;
            keyed.emplace_back(na, y, x);
        }
    }
    std::sort(keyed.begin(), keyed.end());

    std::vector<AlgebraicInt> out;
    out.reserve(keyed.size());
    for (const auto& [na, y, x] : keyed) out.push_back({x, y});
    return out;
}

}  // namespace iqfrac
