#include "iqfrac/density.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "iqfrac/checked.hpp"
#include "iqfrac/errors.hpp"

namespace iqfrac {

std::int64_t eta(const QuadraticField& k, const RepSystem& rs, const AlgebraicInt& b) {
    const Ideal ib = principal(k, b);
    std::int64_t total = 0;
    for (const RepEntry& r : rs.reps) {
        if (!ideal_divides(k, r.ideal, ib)) continue;  // phi vanishes off integral quotients
        total = checked_add(total, ideal_totient(k, ideal_quotient(k, ib, r.ideal)));
    }
    return total;
}

std::int64_t eta_oracle(const QuadraticField& k, const RepSystem& rs, const AlgebraicInt& b,
                        std::int64_t budget) {
    const Ideal ib = principal(k, b);
    std::int64_t count = 0;
    for (const AlgebraicInt& r : residues(k, ib, budget)) {
        const Ideal g = is_zero(r) ? ib : gcd_ideal(k, r, b);
        for (const RepEntry& rep : rs.reps)
            if (rep.ideal == g) {
                ++count;
                break;
            }
    }
    return count;
}

std::int64_t coprime_count(const QuadraticField& k, const AlgebraicInt& b) {
    return ideal_totient(k, principal(k, b));
}

Rational theoretical_density(const RepSystem& rs) {
    if (rs.reps.empty()) throw std::invalid_argument("theoretical_density: empty rep system");
    Rational sum(0);
    for (const RepEntry& r : rs.reps) {
        const std::int64_t n = ideal_norm(r.ideal);
        sum = sum + Rational(1, checked_mul(n, n));
    }
    return Rational(1) / sum;
}

Rational lower_bound(int h, std::int64_t b) {
    if (h < 1 || b < 1) throw std::invalid_argument("lower_bound: h and B must be >= 1");
    return Rational(checked_mul(b + 1, b + 1),
                    checked_add(checked_mul(b, b + 2), static_cast<std::int64_t>(h)));
}

double upper_bound(std::int64_t disc, int h, int degree, int r2) {
    if (disc >= 0 || h < 1) throw std::invalid_argument("upper_bound: bad arguments");
    const double pi = 3.14159265358979323846;
    double fact = 1;
    for (int i = 2; i <= degree; ++i) fact *= i;
    const double c = std::pow(degree, degree) * std::pow(pi, r2) / (fact * std::pow(4.0, r2));
    return 1.0 / (1.0 + static_cast<double>(h - 1) / static_cast<double>(-disc) * c * c);
}

double minkowski_bound(const QuadraticField& k) {
    const double pi = 3.14159265358979323846;
    double fact = 1;
    for (int i = 2; i <= k.degree; ++i) fact *= i;
    return std::sqrt(static_cast<double>(-k.disc)) * std::pow(4.0 / pi, k.r2) * fact /
           std::pow(k.degree, k.degree);
}

std::int64_t nonprincipal_norm_gap(const QuadraticField& k, const ClassGroup& cg) {
    if (cg.h == 1) return 0;
    const std::int64_t cap = static_cast<std::int64_t>(minkowski_bound(k)) + 1;
    for (std::int64_t n = 2; n <= cap; ++n)
        for (const Ideal& i : ideals_of_norm(k, n))
            if (!is_principal(k, cg, i)) return n - 1;
    throw std::logic_error("nonprincipal_norm_gap: no non-principal ideal below Minkowski bound");
}

DensityTable density_table(const QuadraticField& k, const ClassGroup& cg, const RepSystem& rs,
                           std::int64_t x_max) {
    if (x_max < 1) throw std::invalid_argument("density_table: bound must be >= 1");

    DensityTable t;
    t.report.field_n = k.n;
    t.report.disc = k.disc;
    t.report.h = cg.h;
    t.report.rep_norms = rep_norms(rs);

    const std::vector<AlgebraicInt> elems = enumerate_by_norm(k, x_max);
    t.rows.reserve(elems.size());

    std::int64_t cum_phi = 0, cum_eta = 0, count = 0;
    std::int64_t level_eta = 0, prev_eta_sum = 0;
    double uniformity = 0;

    for (std::size_t idx = 0; idx < elems.size(); ++idx) {
        const AlgebraicInt& b = elems[idx];
        DensityRow row;
        row.b = b;
        row.norm = norm(k, b);

        const Ideal ib = principal(k, b);
        row.phi_by_rep.reserve(rs.reps.size());
        for (const RepEntry& r : rs.reps) {
            std::int64_t term = 0;
            if (ideal_divides(k, r.ideal, ib))
                term = ideal_totient(k, ideal_quotient(k, ib, r.ideal));
            row.phi_by_rep.push_back(term);
            row.eta = checked_add(row.eta, term);
        }
        row.phi = row.phi_by_rep.empty() ? 0 : row.phi_by_rep.front();

        cum_phi = checked_add(cum_phi, row.phi);
        cum_eta = checked_add(cum_eta, row.eta);
        level_eta = checked_add(level_eta, row.eta);
        ++count;
        row.cum_phi = cum_phi;
        row.cum_eta = cum_eta;
        row.level_end = idx + 1 == elems.size() || norm(k, elems[idx + 1]) != row.norm;

        if (row.level_end) {
            t.report.series.push_back(
                {row.norm, count, cum_phi, cum_eta, Rational(cum_phi, cum_eta)});
            if (prev_eta_sum > 0) {
                const double u = static_cast<double>(level_eta) / static_cast<double>(prev_eta_sum);
                uniformity = std::max(uniformity, u);
            }
            prev_eta_sum = cum_eta;
            level_eta = 0;
        }
        t.rows.push_back(std::move(row));
    }

    t.report.theoretical = theoretical_density(rs);
    t.report.lower = lower_bound(cg.h, 1);
    t.report.b_gap = nonprincipal_norm_gap(k, cg);
    t.report.improved_lower =
        cg.h == 1 ? Rational(1) : lower_bound(cg.h, t.report.b_gap);
    t.report.upper = upper_bound(k.disc, cg.h, k.degree, k.r2);
    t.report.minkowski = minkowski_bound(k);
    t.report.phi_growth =
        static_cast<double>(cum_phi) / (static_cast<double>(x_max) * static_cast<double>(x_max));
    t.report.uniformity_max = uniformity;
    return t;
}

DensityReport empirical_density(const QuadraticField& k, const ClassGroup& cg,
                                const RepSystem& rs, std::int64_t x_max) {
    return density_table(k, cg, rs, x_max).report;
}

std::vector<BaselineRow> rational_baseline(std::int64_t p, std::int64_t x_max) {
    if (!is_prime(p)) throw std::invalid_argument("rational_baseline: p must be prime");
    if (x_max < 1) throw std::invalid_argument("rational_baseline: bound must be >= 1");

    // linear totient sieve
    std::vector<std::int64_t> phi(static_cast<std::size_t>(x_max) + 1, 0);
    std::vector<std::int64_t> primes;
    std::vector<bool> composite(static_cast<std::size_t>(x_max) + 1, false);
    phi[1] = 1;
    for (std::int64_t i = 2; i <= x_max; ++i) {
        if (!composite[static_cast<std::size_t>(i)]) {
            primes.push_back(i);
            phi[static_cast<std::size_t>(i)] = i - 1;
        }
        for (const std::int64_t q : primes) {
            if (q > x_max / i) break;
            composite[static_cast<std::size_t>(i * q)] = true;
            if (i % q == 0) {
                phi[static_cast<std::size_t>(i * q)] = phi[static_cast<std::size_t>(i)] * q;
                break;
            }
            phi[static_cast<std::size_t>(i * q)] = phi[static_cast<std::size_t>(i)] * (q - 1);
        }
    }

    std::vector<BaselineRow> rows;
    rows.reserve(static_cast<std::size_t>(x_max));
    std::int64_t cum_r = 0, cum_t = 0;
    for (std::int64_t n = 1; n <= x_max; ++n) {
        cum_t = checked_add(cum_t, phi[static_cast<std::size_t>(n)]);
        if (n % p == 0) cum_r = checked_add(cum_r, phi[static_cast<std::size_t>(n)]);
        rows.push_back({n, cum_r, cum_t, Rational(cum_r, cum_t)});
    }
    return rows;
}

namespace {

struct PrimeIdealTerm {
    std::int64_t rational_p = 0;
    std::int64_t norm = 0;
    int cls = 0;
};

// All prime ideals above rational primes p <= p_max, optionally filtered to
// norm <= norm_cap (norm_cap = 0 disables the filter).
std::vector<PrimeIdealTerm> prime_ideal_terms(const QuadraticField& k, const ClassGroup& cg,
                                              std::int64_t p_max, std::int64_t norm_cap) {
    std::vector<PrimeIdealTerm> out;
    for (std::int64_t p = 2; p <= p_max; ++p) {
        if (!is_prime(p)) continue;
        if (kronecker(k.disc, p) == -1) {
            const std::int64_t np = checked_mul(p, p);
            if (norm_cap == 0 || np <= norm_cap) out.push_back({p, np, 0});  // <p> is principal
            continue;
        }
        if (norm_cap != 0 && p > norm_cap) continue;
        for (const auto& [prime, type] : primes_above(k, p)) {
            (void)type;
            out.push_back({p, ideal_norm(prime), class_of_ideal(k, cg, prime)});
        }
    }
    std::sort(out.begin(), out.end(), [](const PrimeIdealTerm& a, const PrimeIdealTerm& b) {
        return std::tie(a.norm, a.rational_p, a.cls) < std::tie(b.norm, b.rational_p, b.cls);
    });
    return out;
}

}  // namespace

LQuotient l_quotient_check(const QuadraticField& k, const ClassGroup& cg, int chi, double s,
                           std::int64_t x_ideal, std::int64_t p_max) {
    if (!(s > 2.0)) throw std::invalid_argument("l_quotient_check: s must exceed 2");
    if (!cg.has_structure())
        throw std::invalid_argument("l_quotient_check: class group structure not built");
    if (chi < 0 || chi >= cg.h) throw std::invalid_argument("l_quotient_check: bad character");
    if (x_ideal < 1 || p_max < 2) throw std::invalid_argument("l_quotient_check: bad truncation");

    // Left side: sum over all ideals of norm <= x_ideal, walked as products
    // of prime ideals with multiplicative phi and class tracking.
    const std::vector<PrimeIdealTerm> lhs_terms = prime_ideal_terms(k, cg, x_ideal, x_ideal);
    std::complex<double> lhs = 0;
    std::function<void(std::size_t, std::int64_t, int, std::int64_t)> walk =
        [&](std::size_t start, std::int64_t norm_acc, int cls_acc, std::int64_t phi_acc) {
            lhs += character_value(cg, chi, cls_acc) * static_cast<double>(phi_acc) /
                   std::pow(static_cast<double>(norm_acc), s);
            for (std::size_t j = start; j < lhs_terms.size(); ++j) {
                const PrimeIdealTerm& t = lhs_terms[j];
                if (t.norm > x_ideal / norm_acc) break;
                std::int64_t n2 = norm_acc;
                std::int64_t phi2 = phi_acc;
                int cls2 = cls_acc;
                for (int e = 1;; ++e) {
                    if (t.norm > x_ideal / n2) break;
                    n2 = checked_mul(n2, t.norm);
                    phi2 = checked_mul(phi2, e == 1 ? t.norm - 1 : t.norm);
                    cls2 = cg.mul_table[static_cast<std::size_t>(cls2)]
                                       [static_cast<std::size_t>(t.cls)];
                    walk(j + 1, n2, cls2, phi2);
                }
            }
        };
    walk(0, 1, 0, 1);

    // Right side: truncated Euler products of L(s-1; chi) / L(s; chi).
    const std::vector<PrimeIdealTerm> rhs_terms = prime_ideal_terms(k, cg, p_max, 0);
    std::complex<double> num = 1, den = 1;
    for (const PrimeIdealTerm& t : rhs_terms) {
        const std::complex<double> cv = character_value(cg, chi, t.cls);
        num *= 1.0 / (1.0 - cv / std::pow(static_cast<double>(t.norm), s - 1));
        den *= 1.0 / (1.0 - cv / std::pow(static_cast<double>(t.norm), s));
    }

    LQuotient r;
    r.lhs = lhs;
    r.rhs = num / den;
    r.gap = std::abs(r.lhs - r.rhs);
    return r;
}

double dirichlet_partial(const QuadraticField& k, const RepSystem& rs, DirichletSeriesKind kind,
                         double s, std::int64_t x_max) {
    if (!(s > 2.0)) throw std::invalid_argument("dirichlet_partial: s must exceed 2");
    double sum = 0;
    for (const AlgebraicInt& b : enumerate_by_norm(k, x_max)) {
        const std::int64_t term = kind == DirichletSeriesKind::phi ? coprime_count(k, b)
                                                                   : eta(k, rs, b);
        sum += static_cast<double>(term) / std::pow(static_cast<double>(norm(k, b)), s);
    }
    return sum;
}

}  // namespace iqfrac
