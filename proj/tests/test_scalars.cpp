#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qborel/cyclotomic.hpp"
#include "qborel/generic_scalar.hpp"
#include "qborel/qnumbers.hpp"

using namespace qb;

namespace {

CycScalar random_scalar(const CycField& f, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-6, 6);
    std::vector<Rational> c(f.degree());
    for (auto& x : c) x = num(rng);
    return CycScalar::from_coeffs(f, c);
}

}  // namespace

TEST_CASE("cyclotomic basics at l=5") {
    const auto& F = CycField::get(5);
    CHECK(F.degree() == 4);
    CycScalar z = CycScalar::zeta(F, 1);
    // zeta^5 = 1
    CycScalar z5 = z * z * z * z * z;
    CHECK(z5.is_one());
    // 1 + z + z^2 + z^3 + z^4 = 0
    CycScalar s = CycScalar::one(F);
    for (int k = 1; k < 5; ++k) s += CycScalar::zeta(F, k);
    CHECK(s.is_zero());
    CHECK(CycScalar::zeta(F, -1) == CycScalar::zeta(F, 4));
}

TEST_CASE("composite order l=9 reduces modulo the order-9 cyclotomic polynomial") {
    const auto& F = CycField::get(9);
    CHECK(F.degree() == 6);  // phi(9)
    CycScalar z = CycScalar::zeta(F, 1);
    CycScalar p = CycScalar::one(F);
    for (int k = 0; k < 9; ++k) p *= z;
    CHECK(p.is_one());
    // z^3 is a primitive cube root: 1 + z^3 + z^6 = 0
    CycScalar s = CycScalar::one(F) + CycScalar::zeta(F, 3) + CycScalar::zeta(F, 6);
    CHECK(s.is_zero());
}

TEST_CASE("field axioms on randomized triples, exactly") {
    const auto& F = CycField::get(7);
    std::mt19937_64 rng(12345);
    for (int t = 0; t < 50; ++t) {
        CycScalar a = random_scalar(F, rng), b = random_scalar(F, rng), c = random_scalar(F, rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        if (!a.is_zero()) {
            CHECK((a * a.inverse()).is_one());
        }
    }
}

TEST_CASE("zeta discrete log") {
    const auto& F = CycField::get(5);
    for (int k = 0; k < 5; ++k) CHECK(CycScalar::zeta(F, k).zeta_log() == k);
    CHECK((CycScalar::zeta(F, 2) * 2).zeta_log() == -1);
    CHECK((-CycScalar::zeta(F, 1)).zeta_log() == -1);
}

TEST_CASE("laurent and generic scalar arithmetic") {
    Laurent v = Laurent::v_power(1);
    Laurent x = v * v - Laurent(1);  // v^2 - 1
    GenericScalar g(x, v - Laurent::v_power(-1));  // (v^2-1)/(v - v^-1) = v
    CHECK(g == GenericScalar::v_power(1));

    GenericScalar a = GenericScalar::v_power(3) - GenericScalar(1);
    GenericScalar b = GenericScalar::v_power(1) - GenericScalar(1);
    GenericScalar q = a / b;
    CHECK(q.is_polynomial());
    CHECK(q.num() == Laurent(1) + v + v * v);
}

TEST_CASE("specialize is a ring homomorphism where defined") {
    const auto& F = CycField::get(5);
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> e(-4, 4), n(-3, 3);
    auto rnd = [&]() {
        Laurent p;
        for (int i = 0; i < 3; ++i) p += Laurent::v_power(e(rng)) * Laurent(n(rng));
        return GenericScalar(p);
    };
    for (int t = 0; t < 40; ++t) {
        GenericScalar a = rnd(), b = rnd();
        CHECK((a + b).specialize(F) == a.specialize(F) + b.specialize(F));
        CHECK((a * b).specialize(F) == a.specialize(F) * b.specialize(F));
    }
}

TEST_CASE("specialization examples and poles at l=5") {
    const auto& F = CycField::get(5);
    // v^5 -> 1
    CHECK(GenericScalar::v_power(5).specialize(F).is_one());
    // 1/(v - v^-1) specializes to the exact inverse of zeta - zeta^-1
    GenericScalar inv = GenericScalar(1) / (GenericScalar::v_power(1) - GenericScalar::v_power(-1));
    CycScalar got = inv.specialize(F);
    CHECK((got * (CycScalar::zeta(F, 1) - CycScalar::zeta(F, -1))).is_one());
    // [5]_v vanishes at zeta_5, so 1/[5]_v has a pole
    GenericScalar pole = GenericScalar(1) / GenericScalar(q_int(5));
    CHECK_THROWS_AS(pole.specialize(F), SpecializationPole);
    // ... and [5]_v! as well
    CHECK_THROWS_AS((GenericScalar(1) / GenericScalar(q_factorial(5))).specialize(F), SpecializationPole);
    CHECK(GenericScalar(q_int(5)).specialize(F).is_zero());
}

TEST_CASE("q-binomial values") {
    // [2 choose 1] = q + q^-1
    CHECK(q_binomial_generic(2, 1) == Laurent::v_power(1) + Laurent::v_power(-1));
    const auto& F = CycField::get(5);
    // [5 choose 2] = 0 at l=5 since [5]_q = 0
    CHECK(q_binomial_at_root(5, 2, 1, F).is_zero());
    // [4 choose 2] at l=5: evaluate the defining product exactly
    CycScalar direct = (q_int_at_root(4, 1, F) * q_int_at_root(3, 1, F)) *
                       (q_int_at_root(2, 1, F) * q_int_at_root(1, 1, F)).inverse();
    CHECK(q_binomial_at_root(4, 2, 1, F) == direct);
    // generic value q^4+q^2+2+q^-2+q^-4 collapses to 1 at a fifth root of unity
    CHECK(direct.is_one());
    Laurent gen = Laurent::v_power(4) + Laurent::v_power(2) + Laurent(2) + Laurent::v_power(-2) + Laurent::v_power(-4);
    CHECK(q_binomial_generic(4, 2) == gen);
}

TEST_CASE("q-Pascal identity, randomized") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> N(1, 12);
    for (int t = 0; t < 60; ++t) {
        int n = N(rng);
        std::uniform_int_distribution<int> M(0, n);
        int m = M(rng);
        for (int d : {1, 2, 3}) {
            Laurent lhs = q_binomial_generic(n, m, d);
            Laurent rhs;
            if (m <= n - 1) rhs += Laurent::v_power(d * m) * q_binomial_generic(n - 1, m, d);
            if (m >= 1) rhs += Laurent::v_power(d * (m - n)) * q_binomial_generic(n - 1, m - 1, d);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("q-binomial domain errors") {
    CHECK_THROWS_AS(q_binomial_generic(3, 4), DomainError);
}

TEST_CASE("bar involution swaps v and v^-1") {
    GenericScalar a = GenericScalar(q_int(3, 2));
    CHECK(a.bar() == a);  // balanced q-integers are bar-invariant
    GenericScalar b = GenericScalar::v_power(2) + GenericScalar(3);
    CHECK(b.bar() == GenericScalar::v_power(-2) + GenericScalar(3));
}
