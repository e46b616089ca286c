#include "iqfrac/ideal.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "iqfrac/checked.hpp"
#include "iqfrac/errors.hpp"

namespace iqfrac {

namespace {

// u*a + v*b = g >= 0
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& u, std::int64_t& v) {
    if (b == 0) {
        u = a < 0 ? -1 : 1;
        v = 0;
        return a < 0 ? -a : a;
    }
    std::int64_t u1, v1;
    const std::int64_t g = ext_gcd(b, a % b, u1, v1);
    u = v1;
    v = u1 - (a / b) * v1;
    return g;
}

// Incremental HNF of a Z-module a*Z + (b + c*w)*Z inside O_K.
struct HnfBuilder {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t c = 0;

    void add(std::int64_t x, std::int64_t y) {
        if (y == 0) {
            a = std::gcd(a, x);
            return;
        }
        if (c == 0) {
            b = x;
            c = y;
            return;
        }
        std::int64_t u, v;
        const std::int64_t g = ext_gcd(c, y, u, v);
        // unimodular: span{(b,c),(x,y)} = span{(ub+vx, g), ((cx-yb)/g, 0)}
        const std::int64_t nb = checked_add(checked_mul(u, b), checked_mul(v, x));
        const std::int64_t z = checked_sub(checked_mul(c, x), checked_mul(y, b)) / g;
        a = std::gcd(a, z);
        b = nb;
        c = g;
    }

    Ideal finish(const QuadraticField& k) const {
        if (a == 0 || c == 0)
            throw std::invalid_argument("ideal: generators span a rank-deficient module");
        Ideal i;
        i.a = a < 0 ? -a : a;
        i.c = c < 0 ? -c : c;
        std::int64_t bb = c < 0 ? checked_neg(b) : b;
        bb %= i.a;
        if (bb < 0) bb += i.a;
        i.b = bb;
        if (!is_valid_ideal(k, i)) throw std::logic_error("ideal: module is not O_K-stable");
        return i;
    }
};

}  // namespace

std::int64_t ideal_norm(const Ideal& i) {
    return checked_mul(i.a, i.c);
}

std::string to_string(const Ideal& i) {
    std::ostringstream os;
    os << '[' << i.a << ',' << i.b << ',' << i.c << ']';
    return os.str();
}

bool is_valid_ideal(const QuadraticField& k, const Ideal& i) {
    if (i.a < 1 || i.c < 1 || i.b < 0 || i.b >= i.a) return false;
    if (i.a % i.c != 0 || i.b % i.c != 0) return false;
    // w-stability: (a/c) | N(b/c + w)
    const std::int64_t m = i.a / i.c;
    return norm(k, {i.b / i.c, 1}) % m == 0;
}

bool ideal_contains(const QuadraticField&, const Ideal& i, const AlgebraicInt& a) {
    if (a.y % i.c != 0) return false;
    return (a.x - (a.y / i.c) * i.b) % i.a == 0;
}

Ideal ideal_from_generators(const QuadraticField& k, const std::vector<AlgebraicInt>& gens) {
    HnfBuilder hb;
    bool any = false;
    for (const AlgebraicInt& g : gens) {
        if (is_zero(g)) continue;
        any = true;
        hb.add(g.x, g.y);
        const AlgebraicInt wg = mul(k, {0, 1}, g);
        hb.add(wg.x, wg.y);
    }
    if (!any) throw std::invalid_argument("ideal_from_generators: all generators are zero");
    return hb.finish(k);
}

Ideal principal(const QuadraticField& k, const AlgebraicInt& alpha) {
    if (is_zero(alpha)) throw std::invalid_argument("principal: zero generator");
    return ideal_from_generators(k, {alpha});
}

Ideal conj_ideal(const QuadraticField& k, const Ideal& i) {
    return ideal_from_generators(k, {{i.a, 0}, conj(k, {i.b, i.c})});
}

Ideal ideal_sum(const QuadraticField& k, const Ideal& i, const Ideal& j) {
    HnfBuilder hb;
    hb.add(i.a, 0);
    hb.add(i.b, i.c);
    hb.add(j.a, 0);
    hb.add(j.b, j.c);
    return hb.finish(k);
}

Ideal ideal_mul(const QuadraticField& k, const Ideal& i, const Ideal& j) {
    // Z-span of pairwise products of the Z-bases is already O_K-stable.
    const AlgebraicInt gi{i.b, i.c}, gj{j.b, j.c};
    HnfBuilder hb;
    hb.add(checked_mul(i.a, j.a), 0);
    hb.add(checked_mul(i.a, gj.x), checked_mul(i.a, gj.y));
    hb.add(checked_mul(j.a, gi.x), checked_mul(j.a, gi.y));
    const AlgebraicInt gg = mul(k, gi, gj);
    hb.add(gg.x, gg.y);
    return hb.finish(k);
}

bool ideal_divides(const QuadraticField& k, const Ideal& i, const Ideal& j) {
    return ideal_contains(k, i, {j.a, 0}) && ideal_contains(k, i, {j.b, j.c});
}

Ideal ideal_quotient(const QuadraticField& k, const Ideal& i, const Ideal& j) {
    if (!ideal_divides(k, j, i))
        throw non_integral_quotient("ideal_quotient: " + to_string(j) + " does not divide " +
                                    to_string(i));
    // I / J = I * conj(J) / N(J) since J * conj(J) = <N(J)>.
    const Ideal p = ideal_mul(k, i, conj_ideal(k, j));
    const std::int64_t n = ideal_norm(j);
    if (p.a % n != 0 || p.b % n != 0 || p.c % n != 0)
        throw std::logic_error("ideal_quotient: non-integral HNF after exact division");
    return {p.a / n, p.b / n, p.c / n};
}

std::vector<std::pair<Ideal, SplitType>> primes_above(const QuadraticField& k, std::int64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("primes_above: p must be prime");
    const int chi = kronecker(k.disc, p);
    if (chi == -1) return {{Ideal{p, 0, p}, SplitType::inert}};

    // roots of the minimal polynomial of w modulo p
    std::vector<std::int64_t> roots;
    for (std::int64_t r = 0; r < p; ++r) {
        const std::int64_t v = ((r * r - k.omega_trace * r + k.omega_norm) % p + p) % p;
        if (v == 0) roots.push_back(r);
    }
    const SplitType type = chi == 0 ? SplitType::ramified : SplitType::split;
    if ((chi == 0 && roots.size() != 1) || (chi == 1 && roots.size() != 2))
        throw std::logic_error("primes_above: root count disagrees with the Kronecker symbol");

    std::vector<std::pair<Ideal, SplitType>> out;
    for (const std::int64_t r : roots)
        out.emplace_back(ideal_from_generators(k, {{p, 0}, {-r, 1}}), type);
    return out;
}

IdealFactorization factor_ideal(const QuadraticField& k, const Ideal& i) {
    IdealFactorization out;
    Ideal w = i;
    for (const auto& [p, e] : factorize(ideal_norm(i))) {
        (void)e;
        for (const auto& [prime, type] : primes_above(k, p)) {
            int exponent = 0;
            while (ideal_divides(k, prime, w)) {
                w = ideal_quotient(k, w, prime);
                ++exponent;
            }
            if (exponent > 0) out.push_back({prime, exponent, type});
        }
    }
    if (!is_unit_ideal(w)) throw std::logic_error("factor_ideal: leftover non-unit part");
    return out;
}

std::int64_t ideal_totient(const QuadraticField& k, const Ideal& i) {
    std::int64_t phi = 1;
    for (const auto& f : factor_ideal(k, i)) {
        const std::int64_t np = ideal_norm(f.prime);
        phi = checked_mul(phi, np - 1);
        for (int j = 1; j < f.exponent; ++j) phi = checked_mul(phi, np);
    }
    return phi;
}

std::vector<AlgebraicInt> residues(const QuadraticField& k, const Ideal& i, std::int64_t budget) {
    (void)k;
    const std::int64_t n = ideal_norm(i);
    if (n > budget)
        throw budget_exceeded("residues: norm " + std::to_string(n) + " exceeds budget " +
                              std::to_string(budget));
    std::vector<AlgebraicInt> out;
    out.reserve(static_cast<std::size_t>(n));
    for (std::int64_t y = 0; y < i.c; ++y)
        for (std::int64_t x = 0; x < i.a; ++x) out.push_back({x, y});
    return out;
}

Ideal gcd_ideal(const QuadraticField& k, const AlgebraicInt& a, const AlgebraicInt& b) {
    if (is_zero(b)) throw std::invalid_argument("gcd_ideal: b must be nonzero");
    return ideal_from_generators(k, {a, b});
}

}  // namespace iqfrac
