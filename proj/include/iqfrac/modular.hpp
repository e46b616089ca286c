#pragma once

#include <cstdint>

#include "iqfrac/classgrp.hpp"

namespace iqfrac {

// Element of SL2(Z), row-major [[p, q], [r, s]].
struct ModularMatrix {
    std::int64_t p = 1, q = 0, r = 0, s = 1;
    bool operator==(const ModularMatrix&) const = default;
};

inline ModularMatrix mat_identity() { return {1, 0, 0, 1}; }
inline ModularMatrix mat_t() { return {1, 1, 0, 1}; }
inline ModularMatrix mat_s() { return {0, -1, 1, 0}; }

std::int64_t mat_det(const ModularMatrix& m);
ModularMatrix mat_mul(const ModularMatrix& a, const ModularMatrix& b);

// tau = num/den with num, den in O_K, den != 0, Im(tau) > 0.
struct CMPoint {
    AlgebraicInt num;
    AlgebraicInt den;
};

// Validates the upper-half-plane constraint exactly.
CMPoint make_cm_point(const QuadraticField& k, const AlgebraicInt& num, const AlgebraicInt& den);

// (a, b) -> (p*a + q*b, r*a + s*b); signals when the image denominator
// vanishes (tau at a cusp, excluded from CMPoint).
CMPoint mobius_apply(const QuadraticField& k, const ModularMatrix& m, const CMPoint& tau);

// The unique primitive positive definite form with Q(tau, 1) = 0, extracted
// by clearing denominators of the exact minimal polynomial of tau.
QuadForm form_of_tau(const QuadraticField& k, const CMPoint& tau);

std::int64_t discriminant_of_tau(const QuadraticField& k, const CMPoint& tau);

// Form-to-ideal map for fundamental discriminant; rejects disc(f) != d_K.
Ideal xi(const QuadraticField& k, const QuadForm& f);

// Class of xi(Q_tau) against the class of <num, den>; requires D(tau) = d_K.
bool correspondence_check(const QuadraticField& k, const ClassGroup& cg, const CMPoint& tau);

// Non-fundamental counterpart: extends the order ideal of Q_tau to O_K
// before comparing classes; requires D(tau) = f^2 d_K with f > 1.
bool order_check(const QuadraticField& k, const ClassGroup& cg, const CMPoint& tau);

struct CmVerdict {
    QuadForm form;
    std::int64_t disc = 0;
    std::int64_t conductor = 1;
    bool used_order_route = false;
    int class_xi = 0;
    int class_gcd = 0;
    bool match = false;
};

// Routes between correspondence_check and order_check by the conductor.
CmVerdict cm_check(const QuadraticField& k, const ClassGroup& cg, const CMPoint& tau);

}  // namespace iqfrac
