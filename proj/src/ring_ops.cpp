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

#include <algorithm>
#include <utility>

#include "exalg/rings.hpp"

namespace exalg {

namespace {

void check_same_ring(const Element& a, const Element& b, const char* op) {
    if (a.ring() != b.ring()) {
        throw precondition_error(std::string(op) + ": elements from different rings (" +
                                 a.ring().tag() + " vs " + b.ring().tag() + ")");
    }
}

// Inverse of a nonzero element of QQ or F_p.
Element field_inverse(const Element& a) {
    if (a.ring().kind() == RingKind::rationals) {
        return Element::rational(Rational(1) / a.rat_value());
    }
    Integer inv;
    if (mpz_invert(inv.get_mpz_t(), a.int_value().get_mpz_t(),
                   a.ring().modulus().get_mpz_t()) == 0) {
        throw std::logic_error("field_inverse: residue not invertible");
    }
    return Element::residue(inv, a.ring());
}

Element poly_gcd_over_field(Element f, Element g) {
    while (!g.is_zero()) {
        Element r = poly_divmod(f, g).remainder;
        f = std::move(g);
        g = std::move(r);
    }
    if (f.is_zero()) return f;
    return poly_monic(f);
}

// Remainder of lc(v)^k * u under v for some k; exact power irrelevant here
// since callers take the primitive part immediately afterwards.
Element pseudo_remainder_zz(Element r, const Element& v) {
    const Element d = poly_leading_coefficient(v);
    const long dv = poly_degree(v);
    while (!r.is_zero() && poly_degree(r) >= dv) {
        const long k = poly_degree(r) - dv;
        Element top = poly_shift(poly_scale(v, poly_leading_coefficient(r)), k);
        r = poly_scale(r, d) - top;
    }
    return r;
}

// Gauss: split off integer contents, run a primitive remainder sequence.
Element poly_gcd_over_integers(const Element& a, const Element& b) {
    if (a.is_zero()) return normalize_associate(b).canonical;
    if (b.is_zero()) return normalize_associate(a).canonical;
    Integer c;
    Integer ca = poly_content(a);
    Integer cb = poly_content(b);
    mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    Element u = poly_primitive_part(a);
    Element v = poly_primitive_part(b);
    if (poly_degree(u) < poly_degree(v)) std::swap(u, v);
    while (!v.is_zero()) {
        Element r = pseudo_remainder_zz(u, v);
        u = std::move(v);
        v = r.is_zero() ? std::move(r) : poly_primitive_part(r);
    }
    Element g = normalize_associate(u).canonical;
    return poly_scale(g, Element::integer(c));
}

}  // namespace

std::optional<Element> is_unit(const Element& a) {
    a.ring().require(Capability::recognizable_units, "is_unit");
    switch (a.ring().kind()) {
        case RingKind::integers: {
            const Integer& v = a.int_value();
            if (v == 1 || v == -1) return a;  // self-inverse
            return std::nullopt;
        }
        case RingKind::rationals:
        case RingKind::prime_field:
            if (a.is_zero()) return std::nullopt;
            return field_inverse(a);
        case RingKind::polynomial: {
            if (poly_degree(a) != 0) return std::nullopt;
            auto inv = is_unit(a.coefficients()[0]);
            if (!inv) return std::nullopt;
            return Element::polynomial(a.ring(), {std::move(*inv)});
        }
    }
    throw std::logic_error("unreachable");
}

Element gcd(const Element& a, const Element& b) {
    check_same_ring(a, b, "gcd");
    a.ring().require(Capability::gcd, "gcd");
    switch (a.ring().kind()) {
        case RingKind::integers: {
            Integer g;
            mpz_gcd(g.get_mpz_t(), a.int_value().get_mpz_t(), b.int_value().get_mpz_t());
            return Element::integer(g);
        }
        case RingKind::rationals:
        case RingKind::prime_field:
            if (a.is_zero() && b.is_zero()) return a;
            return Element::one(a.ring());
        case RingKind::polynomial:
            if (a.ring().base().is_field()) return poly_gcd_over_field(a, b);
            return poly_gcd_over_integers(a, b);
    }
    throw std::logic_error("unreachable");
}

BezoutCertificate bezout(const Element& a, const Element& b) {
    check_same_ring(a, b, "bezout");
    a.ring().require(Capability::bezout, "bezout");
    const RingDescriptor& ring = a.ring();
    switch (ring.kind()) {
        case RingKind::integers: {
            Integer g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(),
                       a.int_value().get_mpz_t(), b.int_value().get_mpz_t());
            return {Element::integer(g), Element::integer(s), Element::integer(t)};
        }
        case RingKind::rationals:
        case RingKind::prime_field: {
            const Element zero = Element::zero(ring);
            if (!a.is_zero()) return {Element::one(ring), field_inverse(a), zero};
            if (!b.is_zero()) return {Element::one(ring), zero, field_inverse(b)};
            return {zero, zero, zero};
        }
        case RingKind::polynomial: {
            const Element zero = Element::zero(ring);
            if (a.is_zero() && b.is_zero()) return {zero, zero, zero};
            Element r0 = a, r1 = b;
            Element s0 = Element::one(ring), s1 = zero;
            Element t0 = zero, t1 = Element::one(ring);
            while (!r1.is_zero()) {
                PolyDivision d = poly_divmod(r0, r1);
                Element s2 = s0 - d.quotient * s1;
                Element t2 = t0 - d.quotient * t1;
                r0 = std::move(r1);
                r1 = std::move(d.remainder);
                s0 = std::move(s1);
                s1 = std::move(s2);
                t0 = std::move(t1);
                t1 = std::move(t2);
            }
            // scale to a monic gcd; the cofactors scale along
            Element lc_inv = Element::polynomial(ring, {*is_unit(poly_leading_coefficient(r0))});
            return {r0 * lc_inv, s0 * lc_inv, t0 * lc_inv};
        }
    }
    throw std::logic_error("unreachable");
}

std::optional<Element> divides(const Element& a, const Element& b) {
    check_same_ring(a, b, "divides");
    a.ring().require(Capability::decidable_divisibility, "divides");
    const RingDescriptor& ring = a.ring();
    switch (ring.kind()) {
        case RingKind::integers: {
            if (a.is_zero()) {
                if (b.is_zero()) return Element::integer(0);
                return std::nullopt;
            }
            if (!mpz_divisible_p(b.int_value().get_mpz_t(), a.int_value().get_mpz_t())) {
                return std::nullopt;
            }
            Integer q;
            mpz_divexact(q.get_mpz_t(), b.int_value().get_mpz_t(), a.int_value().get_mpz_t());
            return Element::integer(q);
        }
        case RingKind::rationals:
        case RingKind::prime_field:
            if (a.is_zero()) {
                if (b.is_zero()) return Element::zero(ring);
                return std::nullopt;
            }
            return b * field_inverse(a);
        case RingKind::polynomial: {
            if (a.is_zero()) {
                if (b.is_zero()) return Element::zero(ring);
                return std::nullopt;
            }
            if (b.is_zero()) return Element::zero(ring);
            const long da = poly_degree(a);
            const long db = poly_degree(b);
            if (db < da) return std::nullopt;
            // Long division stays in the base ring exactly when a | b, so a
            // failed leading-coefficient division decides the question.
            const auto& den = a.coefficients();
            const Element& lc = den.back();
            std::vector<Element> rem = b.coefficients();
            std::vector<Element> quot(static_cast<std::size_t>(db - da + 1),
                                      Element::zero(ring.base()));
            for (long k = db; k >= da; --k) {
                if (rem[k].is_zero()) continue;
                auto c = divides(lc, rem[k]);
                if (!c) return std::nullopt;
                for (long j = 0; j <= da; ++j) {
                    rem[k - da + j] = rem[k - da + j] - *c * den[j];
                }
                quot[k - da] = std::move(*c);
            }
            for (long j = 0; j < da; ++j) {
                if (!rem[j].is_zero()) return std::nullopt;
            }
            return Element::polynomial(ring, std::move(quot));
        }
    }
    throw std::logic_error("unreachable");
}

AssociateForm normalize_associate(const Element& a) {
    const RingDescriptor& ring = a.ring();
    switch (ring.kind()) {
        case RingKind::integers:
            if (sgn(a.int_value()) < 0) return {-a, Element::integer(-1)};
            return {a, Element::integer(1)};
        case RingKind::rationals:
        case RingKind::prime_field:
            if (a.is_zero()) return {a, Element::one(ring)};
            return {Element::one(ring), a};
        case RingKind::polynomial: {
            if (a.is_zero()) return {a, Element::one(ring)};
            if (ring.base().is_field()) {
                Element lc = poly_leading_coefficient(a);
                return {poly_monic(a), Element::polynomial(ring, {std::move(lc)})};
            }
            // ZZ[X]: positive leading coefficient
            if (sgn(poly_leading_coefficient(a).int_value()) < 0) {
                return {-a, Element::constant(ring, -1)};
            }
            return {a, Element::one(ring)};
        }
    }
    throw std::logic_error("unreachable");
}

Integer characteristic(const RingDescriptor& ring) { return ring.characteristic(); }

namespace {

int sign_of(int c) { return (c > 0) - (c < 0); }

}  // namespace

int compare_elements(const Element& a, const Element& b) {
    check_same_ring(a, b, "compare_elements");
    switch (a.ring().kind()) {
        case RingKind::integers:
        case RingKind::prime_field:
            return sign_of(cmp(a.int_value(), b.int_value()));
        case RingKind::rationals:
            return sign_of(cmp(a.rat_value(), b.rat_value()));
        case RingKind::polynomial: {
            const auto& ca = a.coefficients();
            const auto& cb = b.coefficients();
            if (ca.size() != cb.size()) return ca.size() < cb.size() ? -1 : 1;
            for (std::size_t i = ca.size(); i-- > 0;) {
                int c = compare_elements(ca[i], cb[i]);
                if (c != 0) return c;
            }
            return 0;
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace exalg
