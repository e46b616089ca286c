#include "iqfrac/classgrp.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

#include "iqfrac/checked.hpp"
#include "iqfrac/errors.hpp"

namespace iqfrac {

std::int64_t form_disc(const QuadForm& f) {
    return checked_sub(checked_mul(f.B, f.B), checked_mul(4, checked_mul(f.A, f.C)));
}

bool is_reduced_form(const QuadForm& f) {
    const std::int64_t absB = f.B < 0 ? -f.B : f.B;
    if (!(absB <= f.A && f.A <= f.C)) return false;
    if (f.B < 0 && (absB == f.A || f.A == f.C)) return false;
    return true;
}

QuadForm reduce_form(QuadForm f) {
    const std::int64_t d = form_disc(f);
    if (f.A <= 0 || d >= 0) throw std::invalid_argument("reduce_form: not positive definite");
    for (;;) {
        // translate B into (-A, A], recompute C from the discriminant
        const std::int64_t twoA = 2 * f.A;
        std::int64_t bm = f.B % twoA;
        if (bm > f.A) bm -= twoA;
        if (bm <= -f.A) bm += twoA;
        f.B = bm;
        f.C = (checked_mul(f.B, f.B) - d) / (4 * f.A);
        if (f.A > f.C) {
            f = {f.C, -f.B, f.A};
            continue;
        }
        break;
    }
    if (f.B < 0 && (f.A == -f.B || f.A == f.C)) f.B = -f.B;
    return f;
}

bool is_fundamental_disc(std::int64_t d) {
    if (d >= 0) return false;
    const std::int64_t r = ((d % 4) + 4) % 4;
    if (r == 1) return is_squarefree(-d);
    if (r != 0) return false;
    const std::int64_t m = d / 4;
    const std::int64_t mr = ((m % 4) + 4) % 4;
    return (mr == 2 || mr == 3) && is_squarefree(-m);
}

ClassGroup reduced_forms(std::int64_t disc) {
    if (!is_fundamental_disc(disc))
        throw std::invalid_argument("reduced_forms: discriminant must be fundamental and negative");
    ClassGroup cg;
    cg.disc = disc;
    // |B| <= A <= C forces 3A^2 <= |d|
    for (std::int64_t a = 1; 3 * a * a <= -disc; ++a) {
        for (std::int64_t b = -a; b <= a; ++b) {
            if ((b * b - disc) % (4 * a) != 0) continue;
            const std::int64_t c = (b * b - disc) / (4 * a);
            if (c < a) continue;
            if (std::gcd(std::gcd(a, b < 0 ? -b : b), c) != 1) continue;
            if (b < 0 && (-b == a || a == c)) continue;
            cg.classes.push_back({a, b, c});
        }
    }
    std::sort(cg.classes.begin(), cg.classes.end(), [](const QuadForm& f, const QuadForm& g) {
        return std::tie(f.A, f.B, f.C) < std::tie(g.A, g.B, g.C);
    });
    cg.h = static_cast<int>(cg.classes.size());
    return cg;
}

Ideal ideal_of_form(const QuadraticField& k, const QuadForm& f) {
    if (form_disc(f) != k.disc)
        throw std::invalid_argument("ideal_of_form: form discriminant differs from d_K");
    // second basis vector (-B + sqrt(d_K))/2 in {1, w} coordinates
    std::int64_t x0;
    if (k.omega == OmegaKind::sqrt_n) {
        x0 = -f.B / 2;  // B is even since d_K is
    } else {
        x0 = (-f.B - 1) / 2;  // B odd
    }
    Ideal i;
    i.a = f.A;
    i.c = 1;
    std::int64_t bb = x0 % f.A;
    if (bb < 0) bb += f.A;
    i.b = bb;
    if (!is_valid_ideal(k, i)) throw std::logic_error("ideal_of_form: module is not O_K-stable");
    return i;
}

int class_of_ideal(const QuadraticField& k, const ClassGroup& cg, const Ideal& i) {
    if (k.disc != cg.disc)
        throw std::invalid_argument("class_of_ideal: class group is for another field");
    // Norm form of the primitive part (m, b1, 1) on the oriented basis
    // (b1 + w, m); the scalar c contributes a principal factor only.
    const std::int64_t m = i.a / i.c;
    const std::int64_t b1 = i.b / i.c;
    const QuadForm q{norm(k, {b1, 1}) / m, 2 * b1 + k.omega_trace, m};
    const QuadForm red = reduce_form(q);
    for (int idx = 0; idx < cg.h; ++idx)
        if (cg.classes[static_cast<std::size_t>(idx)] == red) return idx;
    throw std::logic_error("class_of_ideal: reduced form missing from the class list");
}

bool is_principal(const QuadraticField& k, const ClassGroup& cg, const Ideal& i) {
    return class_of_ideal(k, cg, i) == 0;
}

bool is_inseverable(const QuadraticField& k, const ClassGroup& cg, const Ideal& i) {
    if (is_unit_ideal(i)) return true;
    const IdealFactorization fac = factor_ideal(k, i);
    // Walk all divisors != O_K; any principal one severs a fraction.
    std::vector<int> exps(fac.size(), 0);
    for (;;) {
        std::size_t pos = 0;
        while (pos < fac.size() && exps[pos] == fac[pos].exponent) {
            exps[pos] = 0;
            ++pos;
        }
        if (pos == fac.size()) break;
        ++exps[pos];
        Ideal d = ring_of_integers();
        for (std::size_t j = 0; j < fac.size(); ++j)
            for (int t = 0; t < exps[j]; ++t) d = ideal_mul(k, d, fac[j].prime);
        if (is_principal(k, cg, d)) return false;
    }
    return true;
}

std::vector<Ideal> ideals_of_norm(const QuadraticField& k, std::int64_t n) {
    if (n < 1) throw std::invalid_argument("ideals_of_norm: n must be >= 1");
    std::vector<Ideal> out;
    for (std::int64_t c = 1; c * c <= n; ++c) {
        if (n % (c * c) != 0) continue;
        const std::int64_t m = n / (c * c);
        for (std::int64_t b1 = 0; b1 < m; ++b1)
            if (norm(k, {b1, 1}) % m == 0) out.push_back({c * m, c * b1, c});
    }
    std::sort(out.begin(), out.end(), [](const Ideal& i, const Ideal& j) {
        return std::tie(i.a, i.b, i.c) < std::tie(j.a, j.b, j.c);
    });
    return out;
}

std::vector<Ideal> enumerate_ideals(const QuadraticField& k, std::int64_t max_norm) {
    std::vector<Ideal> out;
    for (std::int64_t n = 1; n <= max_norm; ++n)
        for (const Ideal& i : ideals_of_norm(k, n)) out.push_back(i);
    return out;
}

std::vector<std::int64_t> rep_norms(const RepSystem& rs) {
    std::vector<std::int64_t> out;
    out.reserve(rs.reps.size());
    for (const RepEntry& r : rs.reps) out.push_back(ideal_norm(r.ideal));
    return out;
}

RepSystem minimal_norm_reps(const QuadraticField& k, const ClassGroup& cg) {
    RepSystem rs;
    rs.reps.resize(static_cast<std::size_t>(cg.h));
    std::vector<bool> filled(static_cast<std::size_t>(cg.h), false);
    int remaining = cg.h;
    // Minkowski guarantees a representative of norm below sqrt(|d|).
    for (std::int64_t n = 1; n <= -k.disc + 1 && remaining > 0; ++n) {
        for (const Ideal& i : ideals_of_norm(k, n)) {
            const int cls = class_of_ideal(k, cg, i);
            if (filled[static_cast<std::size_t>(cls)]) continue;
            rs.reps[static_cast<std::size_t>(cls)] = {i, cls};
            filled[static_cast<std::size_t>(cls)] = true;
            if (--remaining == 0) break;
        }
    }
    if (remaining > 0) throw std::logic_error("minimal_norm_reps: scan failed to fill all classes");
    return rs;
}

std::vector<Ideal> enumerate_inseverable(const QuadraticField& k, const ClassGroup& cg,
                                         std::int64_t max_norm) {
    if (max_norm < 1) throw std::invalid_argument("enumerate_inseverable: bound must be >= 1");

    // Seed: non-principal primes of norm <= X. Every prime factor of an
    // inseverable ideal is one of these.
    std::vector<Ideal> seed_primes;
    for (std::int64_t p = 2; p <= max_norm; ++p) {
        if (!is_prime(p)) continue;
        for (const auto& [prime, type] : primes_above(k, p)) {
            (void)type;
            if (ideal_norm(prime) > max_norm) continue;
            if (!is_principal(k, cg, prime)) seed_primes.push_back(prime);
        }
    }

    auto key = [](const Ideal& i) { return std::array<std::int64_t, 3>{i.a, i.b, i.c}; };
    std::set<std::array<std::int64_t, 3>> seen;
    std::vector<Ideal> found;
    std::vector<Ideal> work;

    seen.insert(key(ring_of_integers()));
    found.push_back(ring_of_integers());
    for (const Ideal& p : seed_primes) {
        if (seen.insert(key(p)).second) {
            found.push_back(p);
            work.push_back(p);
        }
    }

    while (!work.empty()) {
        const Ideal cur = work.back();
        work.pop_back();
        const std::int64_t cn = ideal_norm(cur);
        for (const Ideal& p : seed_primes) {
            const std::int64_t pn = ideal_norm(p);
            if (pn > max_norm / cn) continue;
            const Ideal next = ideal_mul(k, cur, p);
            if (seen.count(key(next))) continue;
            if (!is_inseverable(k, cg, next)) continue;
            seen.insert(key(next));
            found.push_back(next);
            work.push_back(next);
        }
    }

    std::sort(found.begin(), found.end(), [](const Ideal& i, const Ideal& j) {
        return std::make_tuple(ideal_norm(i), i.a, i.b, i.c) <
               std::make_tuple(ideal_norm(j), j.a, j.b, j.c);
    });
    return found;
}

namespace {

int class_order(const std::vector<std::vector<int>>& mul, int g) {
    int o = 1, x = g;
    while (x != 0) {
        x = mul[static_cast<std::size_t>(x)][static_cast<std::size_t>(g)];
        ++o;
    }
    return o;
}

}  // namespace

void group_structure(const QuadraticField& k, ClassGroup& cg) {
    if (cg.h > 100) throw std::invalid_argument("group_structure: h must be <= 100");
    if (k.disc != cg.disc)
        throw std::invalid_argument("group_structure: class group is for another field");

    const std::size_t h = static_cast<std::size_t>(cg.h);
    std::vector<Ideal> ideals;
    ideals.reserve(h);
    for (const QuadForm& f : cg.classes) ideals.push_back(ideal_of_form(k, f));

    cg.mul_table.assign(h, std::vector<int>(h, 0));
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = i; j < h; ++j) {
            const int c = class_of_ideal(k, cg, ideal_mul(k, ideals[i], ideals[j]));
            cg.mul_table[i][j] = c;
            cg.mul_table[j][i] = c;
        }
    for (std::size_t i = 0; i < h; ++i)
        if (cg.mul_table[0][i] != static_cast<int>(i))
            throw std::logic_error("group_structure: principal class is not the identity");

    // exponent of the group
    int e = 1;
    for (int g = 0; g < cg.h; ++g) e = std::lcm(e, class_order(cg.mul_table, g));
    cg.char_root_order = e;

    // Build all characters by extending along a subgroup chain; values are
    // exponents of a primitive e-th root of unity.
    std::vector<bool> in_h(h, false);
    in_h[0] = true;
    std::vector<int> members{0};
    std::vector<std::vector<int>> chars;
    chars.push_back(std::vector<int>(h, 0));

    while (members.size() < h) {
        int x = -1;
        for (std::size_t g = 0; g < h; ++g)
            if (!in_h[g]) {
                x = static_cast<int>(g);
                break;
            }
        // order of x in G/H, with x^ord = t in H
        int ord = 1, t = x;
        while (!in_h[static_cast<std::size_t>(t)]) {
            t = cg.mul_table[static_cast<std::size_t>(t)][static_cast<std::size_t>(x)];
            ++ord;
        }
        std::vector<std::vector<int>> extended;
        extended.reserve(chars.size() * static_cast<std::size_t>(ord));
        for (const std::vector<int>& chi : chars) {
            const int vt = chi[static_cast<std::size_t>(t)];
            if (vt % ord != 0)
                throw std::logic_error("group_structure: character extension is unsolvable");
            for (int j = 0; j < ord; ++j) {
                const int z = (vt / ord + j * (e / ord)) % e;
                std::vector<int> nchi = chi;
                int xpow = 0;
                for (int i = 1; i < ord; ++i) {
                    xpow = cg.mul_table[static_cast<std::size_t>(xpow)][static_cast<std::size_t>(x)];
                    for (const int g : members) {
                        const int gx = cg.mul_table[static_cast<std::size_t>(g)][static_cast<std::size_t>(xpow)];
                        nchi[static_cast<std::size_t>(gx)] = (chi[static_cast<std::size_t>(g)] + i * z) % e;
                    }
                }
                extended.push_back(std::move(nchi));
            }
        }
        chars = std::move(extended);

        std::vector<int> grown = members;
        int xpow = 0;
        for (int i = 1; i < ord; ++i) {
            xpow = cg.mul_table[static_cast<std::size_t>(xpow)][static_cast<std::size_t>(x)];
            for (const int g : members) {
                const int gx = cg.mul_table[static_cast<std::size_t>(g)][static_cast<std::size_t>(xpow)];
                grown.push_back(gx);
                in_h[static_cast<std::size_t>(gx)] = true;
            }
        }
        members = std::move(grown);
    }

    if (chars.size() != h) throw std::logic_error("group_structure: wrong character count");
    std::sort(chars.begin(), chars.end());
    cg.char_exponents = std::move(chars);
}

std::complex<double> character_value(const ClassGroup& cg, int chi, int cls) {
    if (!cg.has_structure()) throw std::invalid_argument("character_value: structure not built");
    if (chi < 0 || chi >= cg.h || cls < 0 || cls >= cg.h)
        throw std::invalid_argument("character_value: index out of range");
    const int ex = cg.char_exponents[static_cast<std::size_t>(chi)][static_cast<std::size_t>(cls)];
    const double tau = 6.283185307179586476925286766559;
    return std::polar(1.0, tau * static_cast<double>(ex) / static_cast<double>(cg.char_root_order));
}

}  // namespace iqfrac
