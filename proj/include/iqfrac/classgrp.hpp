#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "iqfrac/ideal.hpp"

namespace iqfrac {

// Binary quadratic form Ax^2 + Bxy + Cy^2.
struct QuadForm {
    std::int64_t A = 1;
    std::int64_t B = 0;
    std::int64_t C = 0;
    bool operator==(const QuadForm&) const = default;
};

std::int64_t form_disc(const QuadForm& f);
bool is_reduced_form(const QuadForm& f);

// Standard normalize/translate reduction of a positive definite form.
QuadForm reduce_form(QuadForm f);

bool is_fundamental_disc(std::int64_t d);

struct ClassGroup {
    std::int64_t disc = 0;
    std::vector<QuadForm> classes;  // reduced forms, principal first, then lex (A, B)
    int h = 0;

    // Filled by group_structure:
    std::vector<std::vector<int>> mul_table;
    int char_root_order = 0;                       // character values are e-th roots of unity
    std::vector<std::vector<int>> char_exponents;  // [chi][class] -> exponent mod e

    bool has_structure() const { return !mul_table.empty(); }
};

// All reduced primitive positive definite forms of the given fundamental
// discriminant; rejects non-fundamental or nonnegative input.
ClassGroup reduced_forms(std::int64_t disc);

// The ideal with Z-basis {A, (-B + sqrt(d_K))/2}; requires disc(f) = d_K.
Ideal ideal_of_form(const QuadraticField& k, const QuadForm& f);

// Index into cg.classes of the reduced norm form of I.
int class_of_ideal(const QuadraticField& k, const ClassGroup& cg, const Ideal& i);
bool is_principal(const QuadraticField& k, const ClassGroup& cg, const Ideal& i);

// True iff no divisor other than O_K is principal.
bool is_inseverable(const QuadraticField& k, const ClassGroup& cg, const Ideal& i);

// All HNF triples of the given norm, lexicographic by (a, b, c).
std::vector<Ideal> ideals_of_norm(const QuadraticField& k, std::int64_t n);

// All ideals of norm <= max_norm by ascending norm (quadratic-cost scan,
// intended for small bounds).
std::vector<Ideal> enumerate_ideals(const QuadraticField& k, std::int64_t max_norm);

struct RepEntry {
    Ideal ideal;
    int class_index = 0;
};

// One inseverable integral ideal of minimal norm per class; reps[i]
// represents class i, so reps[0] is the ring itself.
struct RepSystem {
    std::vector<RepEntry> reps;
};

std::vector<std::int64_t> rep_norms(const RepSystem& rs);

// Norm-ascending scan assigning to each class the first ideal seen; ties
// within a norm level go to the lexicographically smallest HNF triple.
RepSystem minimal_norm_reps(const QuadraticField& k, const ClassGroup& cg);

// All inseverable ideals of norm <= max_norm via the greedy closure:
// non-principal primes and the ring, extended by prime multiplications
// that stay inseverable. Sorted by (norm, a, b, c).
std::vector<Ideal> enumerate_inseverable(const QuadraticField& k, const ClassGroup& cg,
                                         std::int64_t max_norm);

// Fills mul_table and the character table (exact root-of-unity exponents).
// Rejects h > 100.
void group_structure(const QuadraticField& k, ClassGroup& cg);

std::complex<double> character_value(const ClassGroup& cg, int chi, int cls);

}  // namespace iqfrac
