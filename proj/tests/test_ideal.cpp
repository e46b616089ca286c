#include <random>
#include <set>
#include <stdexcept>

#include "doctest.h"

#include "iqfrac/classgrp.hpp"
#include "iqfrac/errors.hpp"
#include "iqfrac/ideal.hpp"

using namespace iqfrac;

namespace {
const QuadraticField k5 = make_field(-5);
const Ideal p2{2, 1, 1};  // <2, 1 + sqrt(-5)>
}

TEST_SUITE("ideal") {

TEST_CASE("ideal_from_generators and HNF") {
    CHECK(ideal_from_generators(k5, {{2, 0}, {1, 1}}) == p2);
    CHECK(ideal_norm(p2) == 2);
    CHECK(ideal_from_generators(k5, {{1, 0}}) == ring_of_integers());

    // <6, 2(1+w)> = <2> <3, 1+w>
    const Ideal lhs = ideal_from_generators(k5, {{6, 0}, {2, 2}});
    const Ideal rhs = ideal_mul(k5, principal(k5, {2, 0}), ideal_from_generators(k5, {{3, 0}, {1, 1}}));
    CHECK(lhs == rhs);
    CHECK(lhs == Ideal{6, 2, 2});

    CHECK_THROWS_AS(ideal_from_generators(k5, {{0, 0}, {0, 0}}), std::invalid_argument);
}

TEST_CASE("generators lie in the constructed ideal") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<std::int64_t> dist(-30, 30);
    for (const std::int64_t n : {-5LL, -23LL, -14LL}) {
        const QuadraticField k = make_field(n);
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<AlgebraicInt> gens;
            for (int i = 0; i < 3; ++i) gens.push_back({dist(rng), dist(rng)});
            bool any = false;
            for (const auto& g : gens) any = any || !is_zero(g);
            if (!any) continue;
            const Ideal ideal = ideal_from_generators(k, gens);
            CHECK(is_valid_ideal(k, ideal));
            for (const auto& g : gens)
                if (!ideal_contains(k, ideal, g)) {
                    FAIL("generator outside its ideal in Q(sqrt(", n, "))");
                }
        }
    }
}

TEST_CASE("principal ideals") {
    CHECK(ideal_norm(principal(k5, {2, 0})) == 4);   // N(2) = 4
    CHECK(principal(k5, {1, 0}) == ring_of_integers());
    CHECK(ideal_norm(principal(k5, {1, 1})) == 6);
    CHECK_THROWS_AS(principal(k5, {0, 0}), std::invalid_argument);
}

TEST_CASE("sum, product, divisibility, quotient") {
    const Ideal two = principal(k5, {2, 0});
    CHECK(ideal_mul(k5, p2, p2) == two);  // p2^2 = <2>
    CHECK(ideal_sum(k5, p2, ring_of_integers()) == ring_of_integers());
    CHECK(ideal_quotient(k5, two, p2) == p2);
    CHECK(ideal_divides(k5, p2, two));
    CHECK(!ideal_divides(k5, two, p2));
    CHECK(ideal_norm(ideal_mul(k5, p2, two)) == ideal_norm(p2) * ideal_norm(two));

    const Ideal p3 = ideal_from_generators(k5, {{3, 0}, {1, 1}});
    CHECK_THROWS_AS(ideal_quotient(k5, two, p3), non_integral_quotient);
}

TEST_CASE("factor_ideal structure") {
    CHECK(factor_ideal(k5, ring_of_integers()).empty());

    const IdealFactorization f6 = factor_ideal(k5, principal(k5, {6, 0}));
    REQUIRE(f6.size() == 3);  // p2^2 p3 p3bar
    CHECK(f6[0].exponent == 2);
    CHECK(f6[0].type == SplitType::ramified);
    CHECK(ideal_norm(f6[0].prime) == 2);
    CHECK(f6[1].type == SplitType::split);
    CHECK(f6[2].type == SplitType::split);
    CHECK(ideal_norm(f6[1].prime) == 3);

    const IdealFactorization f5 = factor_ideal(k5, principal(k5, {5, 0}));
    REQUIRE(f5.size() == 1);
    CHECK(f5[0].exponent == 2);
    CHECK(f5[0].type == SplitType::ramified);
    CHECK(f5[0].prime == principal(k5, {0, 1}));  // p5 = <sqrt(-5)>

    // inert example: 11 stays prime in Q(sqrt(-5))
    const IdealFactorization f11 = factor_ideal(k5, principal(k5, {11, 0}));
    REQUIRE(f11.size() == 1);
    CHECK(f11[0].type == SplitType::inert);
    CHECK(ideal_norm(f11[0].prime) == 121);
}

TEST_CASE("factorization round-trips for all ideals of norm <= 500") {
    for (const std::int64_t n : {-5LL, -6LL, -23LL, -47LL}) {
        const QuadraticField k = make_field(n);
        for (const Ideal& ideal : enumerate_ideals(k, 500)) {
            Ideal prod = ring_of_integers();
            for (const IdealFactor& f : factor_ideal(k, ideal))
                for (int e = 0; e < f.exponent; ++e) prod = ideal_mul(k, prod, f.prime);
            if (!(prod == ideal)) {
                FAIL("refactor mismatch for ", to_string(ideal), " in Q(sqrt(", n, "))");
            }
        }
    }
}

TEST_CASE("totient values and multiplicativity") {
    CHECK(ideal_totient(k5, ideal_mul(k5, p2, p2)) == 2);  // phi(p2^2) = 2
    CHECK(ideal_totient(k5, p2) == 1);
    CHECK(ideal_totient(k5, ring_of_integers()) == 1);
    CHECK(ideal_totient(k5, principal(k5, {2, 1})) == 6);  // N(2+sqrt(-5)) = 9 row

    std::mt19937_64 rng(77);
    std::uniform_int_distribution<std::int64_t> dist(1, 400);
    int done = 0;
    const auto all = enumerate_ideals(k5, 80);
    while (done < 500) {
        const Ideal& a = all[dist(rng) % all.size()];
        const Ideal& b = all[dist(rng) % all.size()];
        if (!(ideal_sum(k5, a, b) == ring_of_integers())) continue;
        if (ideal_totient(k5, ideal_mul(k5, a, b)) != ideal_totient(k5, a) * ideal_totient(k5, b)) {
            FAIL("phi not multiplicative on ", to_string(a), " and ", to_string(b));
        }
        ++done;
    }
}

TEST_CASE("residues are a complete incongruent system") {
    const auto res2 = residues(k5, principal(k5, {2, 0}));
    const std::vector<AlgebraicInt> expected{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    CHECK(res2 == expected);
    CHECK(residues(k5, ring_of_integers()) == std::vector<AlgebraicInt>{{0, 0}});
    CHECK(residues(k5, p2) == std::vector<AlgebraicInt>{{0, 0}, {1, 0}});

    for (const std::int64_t n : {-5LL, -23LL}) {
        const QuadraticField k = make_field(n);
        for (const Ideal& ideal : enumerate_ideals(k, 200)) {
            const auto rs = residues(k, ideal);
            if (static_cast<std::int64_t>(rs.size()) != ideal_norm(ideal)) {
                FAIL("residue count mismatch for ", to_string(ideal));
            }
            for (std::size_t i = 0; i < rs.size(); ++i)
                for (std::size_t j = i + 1; j < rs.size(); ++j)
                    if (ideal_contains(k, ideal, sub(k, rs[i], rs[j]))) {
                        FAIL("congruent residues in ", to_string(ideal));
                    }
        }
    }
}

TEST_CASE("residue budget") {
    CHECK_THROWS_AS(residues(k5, principal(k5, {0, 2000})), budget_exceeded);
}

TEST_CASE("totient counts coprime residues") {
    const QuadraticField k = k5;
    for (const AlgebraicInt& b : enumerate_by_norm(k, 200)) {
        const Ideal ib = principal(k, b);
        std::int64_t count = 0;
        for (const AlgebraicInt& r : residues(k, ib))
            if (gcd_ideal(k, r, b) == ring_of_integers()) ++count;
        if (count != ideal_totient(k, ib)) {
            FAIL("coprime residue count != phi for b = ", to_string(b));
        }
    }
}

TEST_CASE("gcd_ideal") {
    CHECK(gcd_ideal(k5, {1, 1}, {2, 0}) == p2);
    CHECK(gcd_ideal(k5, {0, 0}, {1, 1}) == principal(k5, {1, 1}));
    CHECK(gcd_ideal(k5, {3, 0}, {1, -1}) == Ideal{3, 2, 1});  // <3, 1 - sqrt(-5)>
    CHECK_THROWS_AS(gcd_ideal(k5, {1, 0}, {0, 0}), std::invalid_argument);
}

}  // TEST_SUITE
