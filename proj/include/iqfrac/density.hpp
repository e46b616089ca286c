#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "iqfrac/classgrp.hpp"
#include "iqfrac/rational.hpp"

namespace iqfrac {

// Number of reduced fractions with denominator b relative to the rep
// system: sum over reps g of phi(<b>/g), terms vanishing when g does not
// divide <b>.
std::int64_t eta(const QuadraticField& k, const RepSystem& rs, const AlgebraicInt& b);

// Brute-force count over residues r mod <b> whose gcd ideal <r, b> lies in
// the rep system. Independent of the eta formula path.
std::int64_t eta_oracle(const QuadraticField& k, const RepSystem& rs, const AlgebraicInt& b,
                        std::int64_t budget = kResidueBudget);

// phi(<b>), the coprime fractions with denominator b.
std::int64_t coprime_count(const QuadraticField& k, const AlgebraicInt& b);

struct DensitySeriesPoint {
    std::int64_t cutoff = 0;  // completed norm level
    std::int64_t count = 0;   // unit-orbit denominators up to the cutoff
    std::int64_t cum_phi = 0;
    std::int64_t cum_eta = 0;
    Rational ratio;
};

struct DensityRow {
    AlgebraicInt b;
    std::int64_t norm = 0;
    std::int64_t phi = 0;
    std::vector<std::int64_t> phi_by_rep;  // phi(<b>/g) per rep, class order
    std::int64_t eta = 0;
    std::int64_t cum_phi = 0;
    std::int64_t cum_eta = 0;
    bool level_end = false;
};

struct DensityReport {
    std::int64_t field_n = 0;
    std::int64_t disc = 0;
    int h = 0;
    std::vector<std::int64_t> rep_norms;
    std::vector<DensitySeriesPoint> series;
    Rational theoretical;
    Rational lower;            // 4/(3 + h)
    Rational improved_lower;   // (B+1)^2/(B^2 + 2B + h) with scanned B
    std::int64_t b_gap = 0;    // largest B with no non-principal ideal of norm <= B
    double upper = 0;
    double minkowski = 0;
    double phi_growth = 0;       // sum phi / x^2 at the final cutoff
    double uniformity_max = 0;   // max over levels of eta-level / preceding eta sum
};

struct DensityTable {
    std::vector<DensityRow> rows;
    DensityReport report;
};

DensityTable density_table(const QuadraticField& k, const ClassGroup& cg, const RepSystem& rs,
                           std::int64_t x_max);

// Cumulative phi and eta sums over denominators of norm <= x_max with exact
// rational ratios at each completed norm level.
DensityReport empirical_density(const QuadraticField& k, const ClassGroup& cg,
                                const RepSystem& rs, std::int64_t x_max);

// 1 / sum over reps of norm^-2, exact.
Rational theoretical_density(const RepSystem& rs);

// (B+1)^2 / (B^2 + 2B + h); B = 1 gives the unconditional 4/(3 + h).
Rational lower_bound(int h, std::int64_t b = 1);

// 1 / (1 + (h-1)/|d| * (n^n pi^r2 / (n! 4^r2))^2).
double upper_bound(std::int64_t disc, int h, int degree = 2, int r2 = 1);

// sqrt(|d|) * (4/pi)^r2 * n!/n^n.
double minkowski_bound(const QuadraticField& k);

// Largest B such that no non-principal ideal has norm <= B, by scanning
// ideals up to the Minkowski bound. Returns 0 when h = 1.
std::int64_t nonprincipal_norm_gap(const QuadraticField& k, const ClassGroup& cg);

struct BaselineRow {
    std::int64_t n = 0;
    std::int64_t cum_restricted = 0;  // phi summed over multiples of p
    std::int64_t cum_total = 0;
    Rational ratio;
};

// Cumulative density of denominators divisible by p among rational
// fractions; tends to 1/(p+1).
std::vector<BaselineRow> rational_baseline(std::int64_t p, std::int64_t x_max);

struct LQuotient {
    std::complex<double> lhs;
    std::complex<double> rhs;
    double gap = 0;
};

// Truncated check of sum chi([a]) phi(a) / Na^s against the Euler products
// of L(s-1; chi)/L(s; chi); ideals of norm <= x_ideal on the left, prime
// ideals above rational primes <= p_max on the right. Requires s > 2 and a
// class group with structure tables.
LQuotient l_quotient_check(const QuadraticField& k, const ClassGroup& cg, int chi, double s,
                           std::int64_t x_ideal, std::int64_t p_max);

enum class DirichletSeriesKind { phi, eta };

// Truncated Dirichlet partial sum over unit-orbit denominators of norm <= x_max.
double dirichlet_partial(const QuadraticField& k, const RepSystem& rs, DirichletSeriesKind kind,
                         double s, std::int64_t x_max);

}  // namespace iqfrac
