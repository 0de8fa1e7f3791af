#include <doctest.h>

#include <cmath>

#include "qwa/cyclotomic.hpp"
#include "qwa/random.hpp"

using namespace qwa;

namespace {

CycInt cyc(int p, std::vector<long> c) {
    std::vector<Integer> v(c.begin(), c.end());
    return CycInt::from_coeffs(p, v);
}

CycInt q(int p) { return CycInt::q_power(p, 1); }

} // namespace

TEST_CASE("Prime rejects composites and values above the cap") {
    CHECK(Prime(2).value() == 2);
    CHECK(Prime(13).value() == 13);
    CHECK_THROWS_AS(Prime(4), InputError);
    CHECK_THROWS_AS(Prime(1), InputError);
    CHECK_THROWS_AS(Prime(17), InputError);
    CHECK(Prime(17, 17).value() == 17);
}

TEST_CASE("ring operations reduce modulo the cyclotomic polynomial") {
    // p=3: q^2 = -1 - q
    CHECK(q(3) * q(3) == cyc(3, {-1, -1}));
    // p=2: q = -1
    CHECK(q(2) == cyc(2, {-1}));
    CHECK(q(2) * q(2) == CycInt::one(2));
    // p=5: (1+q)(1+q^4) = 1 - q^2 - q^3 (sympy oracle)
    const CycInt a = CycInt::one(5) + q(5);
    const CycInt b = CycInt::one(5) + CycInt::q_power(5, 4);
    const CycInt prod = a * b;
    CHECK(prod == cyc(5, {1, 0, -1, -1}));
    const auto z = a.complex_eval() * b.complex_eval();
    CHECK(std::abs(prod.complex_eval() - z) < 1e-12);
}

TEST_CASE("mixing primes is a structural error") {
    CHECK_THROWS_AS(CycInt::one(3) + CycInt::one(5), StructuralError);
    CHECK_THROWS_AS(CycInt::one(3) * CycInt::one(5), StructuralError);
}

TEST_CASE("q-integers") {
    for (int p : {2, 3, 5, 7, 11, 13}) {
        CAPTURE(p);
        CHECK(q_int(p, p).is_zero());
        CHECK(q_int(p, 0).is_zero());
        CHECK(q_int(p, 1).is_one());
        for (int n = 0; n <= 3 * p; ++n) CHECK(q_int(p, n + 1) == CycInt::one(p) + q(p) * q_int(p, n));
        for (int n = 0; n <= 3 * p; ++n) CHECK(q_int(p, n) == q_int(p, n % p));
    }
    CHECK(q_int(3, 2) == CycInt::one(3) + q(3));
}

TEST_CASE("q-factorials") {
    CHECK(q_factorial(7, 0).is_one());
    CHECK(q_factorial(3, 2) == CycInt::one(3) + q(3));
    // sympy oracle: [4]! mod Phi_5
    const CycInt f4 = q_factorial(5, 4);
    CHECK(f4 == cyc(5, {-1, -1, 0, 1}));
    // |[4]!|^2 from the embedding is the product of |[k]|^2, an independent check
    double expected = 1.0;
    for (int k = 1; k <= 4; ++k) expected *= std::norm(q_int(5, k).complex_eval());
    CHECK(std::norm(f4.complex_eval()) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(q_factorial(5, 5).is_zero());
    CHECK_THROWS_AS(q_factorial_inverse(5, 5), UnitInversionError);
}

TEST_CASE("explicit inverses of q-integers") {
    CHECK(q_int_inverse(7, 1).is_one());
    // p=3, i=2: 1 + q^2 = -q
    CHECK(q_int_inverse(3, 2) == -q(3));
    CHECK((q_int(3, 2) * -q(3)).is_one());
    // p=5, i=3: j=2, 1 + q^3
    CHECK(q_int_inverse(5, 3) == CycInt::one(5) + CycInt::q_power(5, 3));
    for (int p : {2, 3, 5, 7, 11, 13})
        for (int i = 1; i < 3 * p; ++i) {
            if (i % p == 0) {
                CHECK_THROWS_AS(q_int_inverse(p, i), UnitInversionError);
                continue;
            }
            CHECK((q_int(p, i) * q_int_inverse(p, i)).is_one());
        }
    CHECK((q_factorial(11, 10) * q_factorial_inverse(11, 10)).is_one());
}

TEST_CASE("q is a unit") {
    for (int p : {2, 3, 5, 7, 11, 13}) CHECK((q(p) * CycInt::q_power(p, p - 1)).is_one());
    CHECK(CycInt::q_power(5, -1) == CycInt::q_power(5, 4));
}

TEST_CASE("reduction mod J") {
    for (int p : {2, 3, 5, 7})
        for (int n = 0; n < 3 * p; ++n) CHECK(q_int(p, n).reduce_mod_J() == n % p);
    CHECK((CycInt::one(5) - q(5)).reduce_mod_J() == 0);
    CHECK((-q(3)).reduce_mod_J() == 2);

    Rng rng(7);
    for (int p : {2, 3, 5, 7})
        for (int t = 0; t < 100; ++t) {
            const CycInt a = rng.cyc_int(p, 20);
            const CycInt b = rng.cyc_int(p, 20);
            CHECK((a + b).reduce_mod_J() == (a.reduce_mod_J() + b.reduce_mod_J()) % p);
            CHECK((a * b).reduce_mod_J() == (a.reduce_mod_J() * b.reduce_mod_J()) % p);
        }
}

TEST_CASE("canonicalization is idempotent") {
    Rng rng(11);
    for (int p : {2, 3, 5, 7, 11})
        for (int t = 0; t < 50; ++t) {
            const auto raw = rng.raw_vector(2 * p);
            const auto once = canonicalize(p, raw);
            CHECK(canonicalize(p, once) == once);
            // same complex value before and after
            std::complex<double> z = 0;
            for (std::size_t k = 0; k < raw.size(); ++k)
                z += raw[k].get_d() * std::polar(1.0, 2.0 * M_PI * double(k) / p);
            CHECK(std::abs(CycInt::from_coeffs(p, once).complex_eval() - z) < 1e-9);
        }
}

TEST_CASE("complex embedding sanity") {
    CHECK(std::abs(CycInt::zero(7).complex_eval()) == 0.0);
    CHECK(std::abs(q(2).complex_eval() - std::complex<double>(-1, 0)) < 1e-15);
    CHECK(std::abs(std::abs(q_int(3, 2).complex_eval()) - 1.0) < 1e-12);
}

TEST_CASE("norm, exact division and units") {
    for (int p : {3, 5, 7}) {
        CHECK(q_int(p, 2).is_unit());
        CHECK((CycInt::one(p) - q(p)).norm() == p);
        CHECK_FALSE((CycInt::one(p) - q(p)).is_unit());
        CHECK_FALSE(CycInt::from_int(p, 2).is_unit());
    }
    Rng rng(3);
    for (int t = 0; t < 30; ++t) {
        const CycInt a = rng.cyc_int(5, 4);
        CycInt b = rng.cyc_int(5, 4);
        if (b.is_zero()) continue;
        auto quo = (a * b).exact_quotient(b);
        REQUIRE(quo);
        CHECK(*quo == a);
    }
    CHECK_FALSE(CycInt::one(5).exact_quotient(CycInt::from_int(5, 2)));
    CHECK_THROWS_AS(CycInt::one(5).exact_quotient(CycInt::zero(5)), UnitInversionError);
}

TEST_CASE("big coefficients stay exact") {
    // products of q-factorial inverses grow past 64 bits quickly
    CycInt big = q_factorial_inverse(13, 12).pow(40);
    CHECK((big * q_factorial(13, 12).pow(40)).is_one());
}
