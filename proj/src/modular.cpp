#include "iqfrac/modular.hpp"

#include <numeric>
#include <stdexcept>

#include "iqfrac/checked.hpp"
#include "iqfrac/errors.hpp"

namespace iqfrac {

std::int64_t mat_det(const ModularMatrix& m) {
    return checked_sub(checked_mul(m.p, m.s), checked_mul(m.q, m.r));
}

ModularMatrix mat_mul(const ModularMatrix& a, const ModularMatrix& b) {
    return {checked_add(checked_mul(a.p, b.p), checked_mul(a.q, b.r)),
            checked_add(checked_mul(a.p, b.q), checked_mul(a.q, b.s)),
            checked_add(checked_mul(a.r, b.p), checked_mul(a.s, b.r)),
            checked_add(checked_mul(a.r, b.q), checked_mul(a.s, b.s))};
}

CMPoint make_cm_point(const QuadraticField& k, const AlgebraicInt& num, const AlgebraicInt& den) {
    if (is_zero(den)) throw std::invalid_argument("cm_point: zero denominator");
    // Im(num/den) > 0 iff the w-coordinate of num * conj(den) is positive.
    if (mul(k, num, conj(k, den)).y <= 0)
        throw std::invalid_argument("cm_point: not in the upper half-plane");
    return {num, den};
}

CMPoint mobius_apply(const QuadraticField& k, const ModularMatrix& m, const CMPoint& tau) {
    if (mat_det(m) != 1) throw std::invalid_argument("mobius_apply: matrix not in SL2(Z)");
    const AlgebraicInt num =
        add(k, mul_scalar(m.p, tau.num), mul_scalar(m.q, tau.den));
    const AlgebraicInt den =
        add(k, mul_scalar(m.r, tau.num), mul_scalar(m.s, tau.den));
    if (is_zero(den)) throw precondition_error("mobius_apply: image denominator vanishes (cusp)");
    return make_cm_point(k, num, den);
}

QuadForm form_of_tau(const QuadraticField& k, const CMPoint& tau) {
    // Clear denominators of the minimal polynomial:
    // N(den) x^2 - Tr(num * conj(den)) x + N(num), then divide by content.
    std::int64_t a = norm(k, tau.den);
    std::int64_t b = checked_neg(trace(k, mul(k, tau.num, conj(k, tau.den))));
    std::int64_t c = norm(k, tau.num);
    const std::int64_t g = std::gcd(std::gcd(a, b < 0 ? -b : b), c);
    a /= g;
    b /= g;
    c /= g;
    const QuadForm f{a, b, c};

    // Q(tau, 1) = 0 exactly: A num^2 + B num den + C den^2 = 0 in O_K.
    const AlgebraicInt check = add(
        k,
        add(k, mul_scalar(f.A, mul(k, tau.num, tau.num)),
            mul_scalar(f.B, mul(k, tau.num, tau.den))),
        mul_scalar(f.C, mul(k, tau.den, tau.den)));
    if (!is_zero(check)) throw std::logic_error("form_of_tau: extracted form does not vanish");
    return f;
}

std::int64_t discriminant_of_tau(const QuadraticField& k, const CMPoint& tau) {
    return form_disc(form_of_tau(k, tau));
}

Ideal xi(const QuadraticField& k, const QuadForm& f) {
    if (form_disc(f) != k.disc)
        throw std::invalid_argument("xi: form discriminant is not the field discriminant");
    return ideal_of_form(k, f);
}

namespace {

// D = conductor^2 * d_K; throws unless the quotient is a perfect square.
std::int64_t conductor_of_disc(const QuadraticField& k, std::int64_t d) {
    if (d % k.disc != 0) throw precondition_error("discriminant is not a multiple of d_K");
    const std::int64_t q = d / k.disc;
    std::int64_t f = 0;
    while (f * f < q) ++f;
    if (f * f != q) throw precondition_error("discriminant over d_K is not a perfect square");
    return f;
}

}  // namespace

bool correspondence_check(const QuadraticField& k, const ClassGroup& cg, const CMPoint& tau) {
    const QuadForm f = form_of_tau(k, tau);
    if (form_disc(f) != k.disc)
        throw precondition_error("correspondence_check: D(tau) is not fundamental");
    const int lhs = class_of_ideal(k, cg, xi(k, f));
    const int rhs = class_of_ideal(k, cg, gcd_ideal(k, tau.num, tau.den));
    return lhs == rhs;
}

bool order_check(const QuadraticField& k, const ClassGroup& cg, const CMPoint& tau) {
    const QuadForm f = form_of_tau(k, tau);
    const std::int64_t d = form_disc(f);
    const std::int64_t cond = conductor_of_disc(k, d);
    if (cond == 1)
        throw precondition_error("order_check: fundamental discriminant, use correspondence_check");

    // Xi_D(Q) has Z-basis {A, (-B + sqrt(D))/2}; extending the span to an
    // O_K-module realizes pr_D.
    AlgebraicInt gen2;
    if (k.omega == OmegaKind::sqrt_n) {
        gen2 = {-f.B / 2, cond};  // sqrt(D) = cond * 2w
    } else {
        if (((f.B - cond) % 2 + 2) % 2 != 0)
            throw std::logic_error("order_check: parity mismatch in sqrt(D)");
        gen2 = {(-f.B - cond) / 2, cond};  // sqrt(D) = cond * (2w - 1)
    }
    const Ideal extended = ideal_from_generators(k, {{f.A, 0}, gen2});
    const int lhs = class_of_ideal(k, cg, extended);
    const int rhs = class_of_ideal(k, cg, gcd_ideal(k, tau.num, tau.den));
    return lhs == rhs;
}

CmVerdict cm_check(const QuadraticField& k, const ClassGroup& cg, const CMPoint& tau) {
    CmVerdict v;
    v.form = form_of_tau(k, tau);
    v.disc = form_disc(v.form);
    v.conductor = conductor_of_disc(k, v.disc);
    v.used_order_route = v.conductor > 1;
    v.class_gcd = class_of_ideal(k, cg, gcd_ideal(k, tau.num, tau.den));
    if (v.used_order_route) {
        AlgebraicInt gen2;
        if (k.omega == OmegaKind::sqrt_n)
            gen2 = {-v.form.B / 2, v.conductor};
        else
            gen2 = {(-v.form.B - v.conductor) / 2, v.conductor};
        v.class_xi = class_of_ideal(k, cg, ideal_from_generators(k, {{v.form.A, 0}, gen2}));
    } else {
        v.class_xi = class_of_ideal(k, cg, xi(k, v.form));
    }
    v.match = v.class_xi == v.class_gcd;
    return v;
}

}  // namespace iqfrac
