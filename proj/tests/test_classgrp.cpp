#include <algorithm>
#include <array>
#include <complex>
#include <map>
#include <set>
#include <stdexcept>

#include "doctest.h"

#include "iqfrac/classgrp.hpp"

using namespace iqfrac;

TEST_SUITE("classgrp") {

TEST_CASE("reduced form enumeration") {
    const ClassGroup c20 = reduced_forms(-20);
    CHECK(c20.h == 2);
    CHECK(c20.classes == std::vector<QuadForm>{{1, 0, 5}, {2, 2, 3}});

    const ClassGroup c4 = reduced_forms(-4);
    CHECK(c4.h == 1);
    CHECK(c4.classes == std::vector<QuadForm>{{1, 0, 1}});

    const ClassGroup c23 = reduced_forms(-23);
    CHECK(c23.h == 3);
    CHECK(c23.classes == std::vector<QuadForm>{{1, 1, 6}, {2, -1, 3}, {2, 1, 3}});

    const ClassGroup c47 = reduced_forms(-47);
    CHECK(c47.h == 5);
    CHECK(c47.classes ==
          std::vector<QuadForm>{{1, 1, 12}, {2, -1, 6}, {2, 1, 6}, {3, -1, 4}, {3, 1, 4}});

    CHECK(reduced_forms(-163).h == 1);

    CHECK_THROWS_AS(reduced_forms(-12), std::invalid_argument);   // 4 * (-3), -3 = 1 mod 4
    CHECK_THROWS_AS(reduced_forms(-100), std::invalid_argument);
    CHECK_THROWS_AS(reduced_forms(-18), std::invalid_argument);
    CHECK_THROWS_AS(reduced_forms(5), std::invalid_argument);
}

TEST_CASE("form reduction") {
    CHECK(reduce_form({3, 2, 2}) == QuadForm{2, 2, 3});
    CHECK(reduce_form({2, -2, 3}) == QuadForm{2, 2, 3});
    CHECK(reduce_form({1, 8, 21}) == QuadForm{1, 0, 5});
    CHECK(is_reduced_form({2, 1, 3}));
    CHECK(!is_reduced_form({2, -1, 2}));
    CHECK_THROWS_AS(reduce_form({1, 0, -1}), std::invalid_argument);
}

TEST_CASE("class_of_ideal") {
    const QuadraticField k = make_field(-5);
    const ClassGroup cg = reduced_forms(-20);
    CHECK(class_of_ideal(k, cg, ring_of_integers()) == 0);
    CHECK(class_of_ideal(k, cg, {2, 1, 1}) == 1);  // p2 -> (2,2,3)
    CHECK(class_of_ideal(k, cg, principal(k, {1, 1})) == 0);
    CHECK(class_of_ideal(k, cg, gcd_ideal(k, {3, 0}, {1, -1})) == 1);  // <3, 1-sqrt(-5)>
}

TEST_CASE("is_principal and is_inseverable") {
    const QuadraticField k = make_field(-5);
    const ClassGroup cg = reduced_forms(-20);
    const Ideal p2{2, 1, 1};
    const Ideal p3 = ideal_from_generators(k, {{3, 0}, {1, 1}});
    const Ideal p3bar = ideal_from_generators(k, {{3, 0}, {1, -1}});

    CHECK(is_principal(k, cg, principal(k, {2, 0})));
    CHECK(!is_principal(k, cg, p2));
    CHECK(is_principal(k, cg, ideal_mul(k, p3, p3bar)));  // = <3>

    CHECK(is_inseverable(k, cg, p2));
    CHECK(!is_inseverable(k, cg, principal(k, {2, 0})));  // p2^2 = <2>
    CHECK(is_inseverable(k, cg, ring_of_integers()));
    CHECK(!is_inseverable(k, cg, ideal_mul(k, p3, p3bar)));
}

TEST_CASE("minimal_norm_reps") {
    const QuadraticField k5 = make_field(-5);
    const ClassGroup cg5 = reduced_forms(-20);
    const RepSystem rs5 = minimal_norm_reps(k5, cg5);
    REQUIRE(rs5.reps.size() == 2);
    CHECK(rs5.reps[0].ideal == ring_of_integers());
    CHECK(rs5.reps[1].ideal == Ideal{2, 1, 1});

    for (const std::int64_t n : {-1LL, -3LL, -163LL}) {
        const QuadraticField k = make_field(n);
        const ClassGroup cg = reduced_forms(k.disc);
        const RepSystem rs = minimal_norm_reps(k, cg);
        REQUIRE(rs.reps.size() == 1);
        CHECK(rs.reps[0].ideal == ring_of_integers());
    }

    const QuadraticField k47 = make_field(-47);
    const RepSystem rs47 = minimal_norm_reps(k47, reduced_forms(-47));
    CHECK(rep_norms(rs47) == std::vector<std::int64_t>{1, 2, 2, 3, 3});
}

TEST_CASE("minimal-norm representatives are inseverable") {
    for (const std::int64_t n : {-5LL, -6LL, -14LL, -23LL, -47LL, -71LL}) {
        const QuadraticField k = make_field(n);
        const ClassGroup cg = reduced_forms(k.disc);
        const RepSystem rs = minimal_norm_reps(k, cg);
        for (const RepEntry& r : rs.reps) {
            CHECK(r.ideal == rs.reps[static_cast<std::size_t>(r.class_index)].ideal);
            if (!is_inseverable(k, cg, r.ideal)) {
                FAIL("severable representative in Q(sqrt(", n, "))");
            }
        }
    }
}

TEST_CASE("representatives have minimal norm among inseverable ideals of their class") {
    for (const std::int64_t n : {-5LL, -23LL, -47LL}) {
        const QuadraticField k = make_field(n);
        const ClassGroup cg = reduced_forms(k.disc);
        const RepSystem rs = minimal_norm_reps(k, cg);
        for (const Ideal& ideal : enumerate_ideals(k, 50)) {
            if (!is_inseverable(k, cg, ideal)) continue;
            const int cls = class_of_ideal(k, cg, ideal);
            if (ideal_norm(rs.reps[static_cast<std::size_t>(cls)].ideal) > ideal_norm(ideal)) {
                FAIL("non-minimal representative for class ", cls, " in Q(sqrt(", n, "))");
            }
        }
    }
}

TEST_CASE("tie-break invariance of the density value") {
    // All minimal-norm candidates within a class share the norm, so the
    // density 1/sum(N(g)^-2) cannot depend on the tie-break.
    for (const std::int64_t n : {-47LL, -71LL}) {
        const QuadraticField k = make_field(n);
        const ClassGroup cg = reduced_forms(k.disc);
        const RepSystem rs = minimal_norm_reps(k, cg);
        std::map<int, std::set<std::int64_t>> min_norms;
        for (const Ideal& ideal : enumerate_ideals(k, 10)) {
            const int cls = class_of_ideal(k, cg, ideal);
            const std::int64_t rep_norm = ideal_norm(rs.reps[static_cast<std::size_t>(cls)].ideal);
            if (ideal_norm(ideal) == rep_norm && is_inseverable(k, cg, ideal))
                min_norms[cls].insert(ideal_norm(ideal));
        }
        for (const auto& [cls, norms] : min_norms) CHECK(norms.size() == 1);
    }
}

TEST_CASE("xi round-trips through class_of_ideal") {
    for (const std::int64_t disc : {-20LL, -23LL, -47LL, -163LL}) {
        const QuadraticField k = make_field(disc % 4 == 0 ? disc / 4 : disc);
        const ClassGroup cg = reduced_forms(disc);
        for (int i = 0; i < cg.h; ++i) {
            const Ideal ideal = ideal_of_form(k, cg.classes[static_cast<std::size_t>(i)]);
            if (class_of_ideal(k, cg, ideal) != i) {
                FAIL("xi round-trip failed for class ", i, " of disc ", disc);
            }
        }
    }
}

TEST_CASE("inseverable enumeration: h = 2 shortcut") {
    const QuadraticField k = make_field(-5);
    const ClassGroup cg = reduced_forms(-20);
    const std::vector<Ideal> found = enumerate_inseverable(k, cg, 100);

    std::set<std::array<std::int64_t, 3>> expect;
    expect.insert({1, 0, 1});
    for (std::int64_t p = 2; p <= 100; ++p) {
        if (!is_prime(p)) continue;
        for (const auto& [prime, type] : primes_above(k, p)) {
            (void)type;
            if (ideal_norm(prime) <= 100 && !is_principal(k, cg, prime))
                expect.insert({prime.a, prime.b, prime.c});
        }
    }
    std::set<std::array<std::int64_t, 3>> got;
    for (const Ideal& i : found) got.insert({i.a, i.b, i.c});
    CHECK(got == expect);
}

TEST_CASE("inseverable enumeration matches the exhaustive scan") {
    for (const std::int64_t n : {-5LL, -23LL}) {
        const QuadraticField k = make_field(n);
        const ClassGroup cg = reduced_forms(k.disc);
        const std::vector<Ideal> greedy = enumerate_inseverable(k, cg, 50);
        std::vector<Ideal> scan;
        for (const Ideal& ideal : enumerate_ideals(k, 50))
            if (is_inseverable(k, cg, ideal)) scan.push_back(ideal);
        CHECK(greedy.size() == scan.size());
        std::set<std::array<std::int64_t, 3>> a, b;
        for (const Ideal& i : greedy) a.insert({i.a, i.b, i.c});
        for (const Ideal& i : scan) b.insert({i.a, i.b, i.c});
        CHECK(a == b);
    }

    // h = 3: the square of a non-principal prime above 2 is inseverable
    const QuadraticField k23 = make_field(-23);
    const ClassGroup cg23 = reduced_forms(-23);
    const std::vector<Ideal> small = enumerate_inseverable(k23, cg23, 8);
    const Ideal p2sq = ideal_mul(k23, {2, 0, 1}, {2, 0, 1});
    CHECK(std::find(small.begin(), small.end(), p2sq) != small.end());

    // h = 1: only the ring itself
    const QuadraticField k1 = make_field(-1);
    const ClassGroup cg1 = reduced_forms(-4);
    CHECK(enumerate_inseverable(k1, cg1, 50) == std::vector<Ideal>{ring_of_integers()});
}

TEST_CASE("divisors of inseverable ideals are inseverable") {
    const QuadraticField k = make_field(-23);
    const ClassGroup cg = reduced_forms(-23);
    for (const Ideal& ideal : enumerate_ideals(k, 50)) {
        if (!is_inseverable(k, cg, ideal)) continue;
        for (const Ideal& div : enumerate_ideals(k, ideal_norm(ideal)))
            if (ideal_divides(k, div, ideal) && !is_inseverable(k, cg, div)) {
                FAIL("severable divisor ", to_string(div), " of ", to_string(ideal));
            }
    }
}

TEST_CASE("group structure and characters") {
    const QuadraticField k5 = make_field(-5);
    ClassGroup cg5 = reduced_forms(-20);
    group_structure(k5, cg5);
    CHECK(cg5.mul_table == std::vector<std::vector<int>>{{0, 1}, {1, 0}});
    CHECK(cg5.char_root_order == 2);
    CHECK(cg5.char_exponents == std::vector<std::vector<int>>{{0, 0}, {0, 1}});
    CHECK(character_value(cg5, 1, 1).real() == doctest::Approx(-1.0));

    ClassGroup cg4 = reduced_forms(-4);
    group_structure(make_field(-1), cg4);
    CHECK(cg4.char_exponents == std::vector<std::vector<int>>{{0}});

    // C5 for disc -47, C4 for disc -56, C3 for disc -23, C2xC2 for disc -84
    for (const std::int64_t n : {-47LL, -14LL, -23LL, -21LL}) {
        const QuadraticField k = make_field(n);
        ClassGroup cg = reduced_forms(k.disc);
        group_structure(k, cg);
        REQUIRE(static_cast<int>(cg.char_exponents.size()) == cg.h);

        for (int i = 0; i < cg.h; ++i) {
            for (int j = 0; j < cg.h; ++j) {
                CHECK(cg.mul_table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ==
                      cg.mul_table[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]);
                // characters are homomorphisms
                for (int chi = 0; chi < cg.h; ++chi) {
                    const int lhs =
                        (cg.char_exponents[static_cast<std::size_t>(chi)][static_cast<std::size_t>(i)] +
                         cg.char_exponents[static_cast<std::size_t>(chi)][static_cast<std::size_t>(j)]) %
                        cg.char_root_order;
                    const int prod = cg.mul_table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                    CHECK(lhs ==
                          cg.char_exponents[static_cast<std::size_t>(chi)][static_cast<std::size_t>(prod)]);
                }
            }
        }

        // row orthogonality
        for (int a = 0; a < cg.h; ++a)
            for (int b = 0; b < cg.h; ++b) {
                std::complex<double> sum = 0;
                for (int g = 0; g < cg.h; ++g)
                    sum += character_value(cg, a, g) * std::conj(character_value(cg, b, g));
                const double expect = a == b ? cg.h : 0.0;
                CHECK(std::abs(sum - expect) < 1e-12);
            }
    }

    const QuadraticField k47 = make_field(-47);
    ClassGroup cg47 = reduced_forms(-47);
    group_structure(k47, cg47);
    CHECK(cg47.char_root_order == 5);
}

}  // TEST_SUITE
