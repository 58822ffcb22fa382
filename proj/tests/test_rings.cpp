/*
   Copyright 2026 The exalg authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <doctest.h>

#include <random>

#include "exalg/rings.hpp"
#include "support/build.hpp"
#include "support/oracles.hpp"

using namespace exalg;
using namespace testutil;

namespace {

std::mt19937_64 rng(20260809);

long rnd(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

Element rnd_qpoly(int max_deg) {
    int deg = static_cast<int>(rnd(0, max_deg));
    std::vector<Element> c;
    for (int i = 0; i <= deg; ++i) c.push_back(qq(rnd(-20, 20), rnd(1, 9)));
    return Element::polynomial(QQX(), std::move(c));
}

bool associates(const Element& a, const Element& b) {
    return normalize_associate(a).canonical == normalize_associate(b).canonical;
}

}  // namespace

TEST_CASE("ring descriptors and capability table") {
    CHECK(ZZ().tag() == "ZZ");
    CHECK(QQ().tag() == "QQ");
    CHECK(FP(5).tag() == "Fp:5");
    CHECK(FPX(5).tag() == "poly:Fp:5");
    CHECK(RingDescriptor::from_tag("poly:Fp:5") == FPX(5));
    CHECK(RingDescriptor::from_tag("ZZ") == ZZ());
    CHECK_THROWS_AS(RingDescriptor::from_tag("GF:5"), parse_error);
    CHECK_THROWS_AS(RingDescriptor::from_tag("Fp:abc"), parse_error);
    CHECK_THROWS_AS(RingDescriptor::from_tag("Fp:4"), precondition_error);
    CHECK_THROWS_AS(RingDescriptor::from_tag("poly:poly:ZZ"), precondition_error);

    CHECK(ZZ().has(Capability::bezout));
    CHECK(ZZ().has(Capability::bound_witness));
    CHECK_FALSE(ZZ().has(Capability::field));
    CHECK(QQ().has(Capability::field));
    CHECK(FP(7).has(Capability::field));
    CHECK(QQX().has(Capability::bezout));
    CHECK(FPX(5).has(Capability::bezout));
    CHECK(ZZX().has(Capability::gcd));
    CHECK(ZZX().has(Capability::decidable_divisibility));
    CHECK(ZZX().has(Capability::bound_witness));
    CHECK_FALSE(ZZX().has(Capability::bezout));
}

TEST_CASE("payload canonical forms") {
    CHECK(Element::rational(Integer(4), Integer(6)) == Element::rational(Integer(2), Integer(3)));
    CHECK(Element::rational(Integer(1), Integer(-2)) == Element::rational(Integer(-1), Integer(2)));
    CHECK(fp(5, 7) == fp(5, 2));
    CHECK(fp(5, -1) == fp(5, 4));
    CHECK(Element::polynomial(ZZX(), {zz(1), zz(0), zz(0)}) == zpoly({1}));
    CHECK(zpoly({}).is_zero());
    CHECK(poly_degree(zpoly({})) == -1);
    CHECK_THROWS_AS(Element::rational(Integer(1), Integer(0)), precondition_error);
}

TEST_CASE("is_unit on every instance") {
    // ZZ: only +-1
    CHECK(*is_unit(zz(1)) == zz(1));
    CHECK(*is_unit(zz(-1)) == zz(-1));
    CHECK_FALSE(is_unit(zz(2)).has_value());
    CHECK_FALSE(is_unit(zz(0)).has_value());

    // F5: 2^-1 = 3, cross-checked against the full multiplication table
    const long long inv2 = oracle::inverse_by_table(5, 2);
    CHECK(inv2 == 3);
    CHECK(*is_unit(fp(5, 2)) == fp(5, 3));
    for (long v = 1; v < 5; ++v) {
        CHECK(*is_unit(fp(5, v)) == fp(5, oracle::inverse_by_table(5, v)));
    }
    CHECK_FALSE(is_unit(fp(5, 0)).has_value());

    // QQ: every nonzero
    CHECK(*is_unit(qq(-3, 4)) == qq(-4, 3));

    // k[X]: nonzero constants; ZZ[X]: constants +-1
    CHECK(is_unit(qpoly({2})).has_value());
    CHECK_FALSE(is_unit(qpoly({0, 1})).has_value());
    CHECK(is_unit(zpoly({-1})).has_value());
    CHECK_FALSE(is_unit(zpoly({2})).has_value());
}

TEST_CASE("gcd examples") {
    CHECK(gcd(zz(0), zz(0)) == zz(0));
    CHECK(oracle::gcd_euclid(12, 18) == 6);
    CHECK(gcd(zz(12), zz(18)) == zz(6));
    // (X^2-1, X^2-2X+1) = ((X-1)(X+1), (X-1)^2) -> X-1
    CHECK(gcd(qpoly({-1, 0, 1}), qpoly({1, -2, 1})) == qpoly({-1, 1}));
    // fields: unit ideal unless both vanish
    CHECK(gcd(qq(3), qq(0)) == qq(1));
    CHECK(gcd(fp(5, 0), fp(5, 0)) == fp(5, 0));
}

TEST_CASE("bezout certificates") {
    SUBCASE("forced shapes over ZZ") {
        BezoutCertificate c = bezout(zz(-5), zz(0));
        CHECK(c.g == zz(5));
        CHECK(c.s * zz(-5) + c.t * zz(0) == c.g);
        BezoutCertificate z = bezout(zz(0), zz(0));
        CHECK(z.g == zz(0));
        CHECK(z.s == zz(0));
        CHECK(z.t == zz(0));
    }
    SUBCASE("ZZ: 12, 18") {
        BezoutCertificate c = bezout(zz(12), zz(18));
        CHECK(c.g == zz(6));
        CHECK(c.s * zz(12) + c.t * zz(18) == c.g);
        CHECK(divides(c.g, zz(12)).has_value());
        CHECK(divides(c.g, zz(18)).has_value());
    }
    SUBCASE("ZZ[X] refuses") {
        CHECK_THROWS_AS(bezout(zpoly({2}), zpoly({0, 1})), capability_error);
    }
    SUBCASE("field shortcut") {
        BezoutCertificate c = bezout(fp(7, 0), fp(7, 4));
        CHECK(c.g == fp(7, 1));
        CHECK(c.s * fp(7, 0) + c.t * fp(7, 4) == fp(7, 1));
    }
}

TEST_CASE("divides examples") {
    CHECK(*divides(zz(3), zz(12)) == zz(4));
    CHECK_FALSE(divides(zz(5), zz(12)).has_value());
    CHECK(*divides(zz(0), zz(0)) == zz(0));
    CHECK_FALSE(divides(zz(0), zz(3)).has_value());
    // (X+1) | (X^2-1) with quotient X-1, in ZZ[X]
    CHECK(*divides(zpoly({1, 1}), zpoly({-1, 0, 1})) == zpoly({-1, 1}));
    CHECK_FALSE(divides(zpoly({2}), zpoly({1, 2})).has_value());
    CHECK_FALSE(divides(zpoly({0, 1}), zpoly({1, 1, 1})).has_value());
}

TEST_CASE("normalize_associate canonical forms") {
    AssociateForm f = normalize_associate(zz(-6));
    CHECK(f.canonical == zz(6));
    CHECK(f.unit == zz(-1));

    AssociateForm g = normalize_associate(qpoly({2, 2}));
    CHECK(g.canonical == qpoly({1, 1}));
    CHECK(g.unit == qpoly({2}));
    CHECK(g.canonical * g.unit == qpoly({2, 2}));

    AssociateForm h = normalize_associate(fp(5, 3));
    CHECK(h.canonical == fp(5, 1));
    CHECK(h.unit == fp(5, 3));

    AssociateForm zx = normalize_associate(zpoly({1, -2}));
    CHECK(zx.canonical == zpoly({-1, 2}));
    CHECK(zx.unit == zpoly({-1}));
}

TEST_CASE("characteristic") {
    CHECK(characteristic(QQ()) == 0);
    CHECK(characteristic(FP(7)) == 7);
    CHECK(characteristic(FPX(2)) == 2);
    CHECK(characteristic(ZZX()) == 0);
}

TEST_CASE("bezout certificate property: random ZZ and QQ[X] pairs") {
    for (int trial = 0; trial < 200; ++trial) {
        Element a = zz(rnd(-1000000, 1000000));
        Element b = zz(rnd(-1000000, 1000000));
        BezoutCertificate c = bezout(a, b);
        CHECK(c.s * a + c.t * b == c.g);
        CHECK(divides(c.g, a).has_value());
        CHECK(divides(c.g, b).has_value());
        CHECK(normalize_associate(c.g).canonical == c.g);
    }
    for (int trial = 0; trial < 60; ++trial) {
        Element a = rnd_qpoly(8);
        Element b = rnd_qpoly(8);
        BezoutCertificate c = bezout(a, b);
        CHECK(c.s * a + c.t * b == c.g);
        CHECK(divides(c.g, a).has_value());
        CHECK(divides(c.g, b).has_value());
    }
}

TEST_CASE("gcd is commutative and associative up to associates") {
    for (int trial = 0; trial < 120; ++trial) {
        Element a = zz(rnd(-300, 300));
        Element b = zz(rnd(-300, 300));
        Element c = zz(rnd(-300, 300));
        CHECK(associates(gcd(a, b), gcd(b, a)));
        CHECK(associates(gcd(gcd(a, b), c), gcd(a, gcd(b, c))));
    }
    for (int trial = 0; trial < 40; ++trial) {
        Element a = rnd_qpoly(5);
        Element b = rnd_qpoly(5);
        Element c = rnd_qpoly(5);
        CHECK(associates(gcd(a, b), gcd(b, a)));
        CHECK(associates(gcd(gcd(a, b), c), gcd(a, gcd(b, c))));
    }
}

TEST_CASE("gcd distributes over a common factor up to associates") {
    for (int trial = 0; trial < 120; ++trial) {
        Element a = zz(rnd(-99, 99));
        Element b = zz(rnd(-99, 99));
        Element c = zz(rnd(1, 40) * (rnd(0, 1) ? 1 : -1));
        CHECK(associates(gcd(c * a, c * b), c * gcd(a, b)));
    }
}

TEST_CASE("divisibility agrees with gcd absorption") {
    for (int trial = 0; trial < 200; ++trial) {
        Element a = zz(rnd(-60, 60));
        Element b = zz(rnd(-60, 60));
        const bool div = divides(a, b).has_value();
        const bool absorbed = associates(gcd(a, b), a);
        CHECK(div == absorbed);
        if (auto q = divides(a, b)) CHECK(a * *q == b);
    }
}

TEST_CASE("normalize_associate is idempotent and unit-invariant") {
    for (int trial = 0; trial < 100; ++trial) {
        Element a = zz(rnd(-500, 500));
        AssociateForm f = normalize_associate(a);
        CHECK(f.canonical * f.unit == a);
        CHECK(is_unit(f.unit).has_value());
        AssociateForm again = normalize_associate(f.canonical);
        CHECK(again.canonical == f.canonical);
        CHECK(again.unit.is_one());
        CHECK(normalize_associate(-a).canonical == f.canonical);
    }
    for (int trial = 0; trial < 40; ++trial) {
        Element a = rnd_qpoly(6);
        Element u = qpoly({rnd(1, 9)});
        CHECK(normalize_associate(u * a).canonical == normalize_associate(a).canonical);
    }
}

TEST_CASE("mixed-ring arithmetic is rejected") {
    CHECK_THROWS_AS((void)(zz(1) + qq(1)), precondition_error);
    CHECK_THROWS_AS((void)(fp(5, 1) == fp(7, 1)), precondition_error);
    CHECK_THROWS_AS(gcd(zz(2), qq(2)), precondition_error);
}

TEST_CASE("prime field construction is checked") {
    CHECK_THROWS_AS(RingDescriptor::prime_field(Integer(1)), precondition_error);
    CHECK_THROWS_AS(RingDescriptor::prime_field(Integer(91)), precondition_error);  // 7 * 13
    CHECK_NOTHROW(RingDescriptor::prime_field(Integer(2)));
    CHECK_NOTHROW(RingDescriptor::prime_field(Integer(1000003)));
}

TEST_CASE("polynomial helper edge cases") {
    CHECK(poly_content(zpoly({4, -6, 8})) == 2);
    CHECK(poly_primitive_part(zpoly({4, -6, 8})) == zpoly({2, -3, 4}));
    CHECK(poly_content(zpoly({})) == 0);
    CHECK(poly_derivative(zpoly({7})).is_zero());
    CHECK(poly_derivative(qpoly({1, 2, 3})) == qpoly({2, 6}));
    // d/dX of X^2+1 over F2 vanishes
    CHECK(poly_derivative(fppoly(2, {1, 0, 1})).is_zero());
    CHECK(poly_expand_variable(fppoly(2, {1, 1}), 2) == fppoly(2, {1, 0, 1}));
    PolyDivision d = poly_divmod(qpoly({-1, 0, 0, 1}), qpoly({-1, 1}));
    CHECK(d.remainder.is_zero());
    CHECK(d.quotient == qpoly({1, 1, 1}));
}
