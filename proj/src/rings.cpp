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

#include "exalg/rings.hpp"

#include <algorithm>
#include <utility>

namespace exalg {

namespace {

// Representative in [0, p); mpz division truncates toward zero.
Integer mod_reduce(const Integer& v, const Integer& p) {
    Integer r = v % p;
    if (sgn(r) < 0) r += p;
    return r;
}

bool is_prime_u64(unsigned long long n) {
    if (n < 2) return false;
    for (unsigned long long d : {2ull, 3ull, 5ull}) {
        if (n % d == 0) return n == d;
    }
    for (unsigned long long d = 7; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 4) == 0) return false;
    }
    return true;
}

const char* capability_name(Capability c) {
    switch (c) {
        case Capability::discrete_equality: return "discrete-equality";
        case Capability::recognizable_units: return "recognizable-units";
        case Capability::gcd: return "gcd";
        case Capability::bezout: return "bezout";
        case Capability::decidable_divisibility: return "decidable-divisibility";
        case Capability::bound_witness: return "bound-witness";
        case Capability::field: return "field";
        case Capability::characteristic: return "characteristic";
    }
    return "?";
}

void check_same_ring(const Element& a, const Element& b, const char* op) {
    if (a.ring() != b.ring()) {
        throw precondition_error(std::string(op) + ": elements from different rings (" +
                                 a.ring().tag() + " vs " + b.ring().tag() + ")");
    }
}

}  // namespace

// ---------------------------------------------------------------- rings

RingDescriptor RingDescriptor::integers() { return RingDescriptor(RingKind::integers); }

RingDescriptor RingDescriptor::rationals() { return RingDescriptor(RingKind::rationals); }

RingDescriptor RingDescriptor::prime_field(const Integer& p) {
    if (sgn(p) <= 0 || mpz_sizeinbase(p.get_mpz_t(), 2) > 63) {
        throw precondition_error("prime field modulus must satisfy 2 <= p < 2^63, got " +
                                 p.get_str());
    }
    if (!is_prime_u64(mpz_get_ui(p.get_mpz_t()))) {
        throw precondition_error("prime field modulus is not prime: " + p.get_str());
    }
    RingDescriptor r(RingKind::prime_field);
    r.modulus_ = p;
    return r;
}

RingDescriptor RingDescriptor::polynomial_over(const RingDescriptor& base) {
    if (base.is_polynomial()) {
        throw precondition_error("polynomial rings do not nest: base must be ZZ, QQ, or a prime field");
    }
    RingDescriptor r(RingKind::polynomial);
    r.base_ = std::make_shared<const RingDescriptor>(base);
    return r;
}

RingDescriptor RingDescriptor::from_tag(std::string_view tag) {
    if (tag == "ZZ") return integers();
    if (tag == "QQ") return rationals();
    if (tag.starts_with("Fp:")) {
        std::string_view digits = tag.substr(3);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos) {
            throw parse_error("bad prime field tag, expected Fp:<decimal>: \"" + std::string(tag) + "\"");
        }
        return prime_field(Integer(std::string(digits)));
    }
    if (tag.starts_with("poly:")) {
        return polynomial_over(from_tag(tag.substr(5)));
    }
    throw parse_error("unknown ring tag: \"" + std::string(tag) + "\"");
}

bool RingDescriptor::is_field() const noexcept {
    return kind_ == RingKind::rationals || kind_ == RingKind::prime_field;
}

const Integer& RingDescriptor::modulus() const {
    if (kind_ != RingKind::prime_field) throw std::logic_error("modulus(): not a prime field");
    return modulus_;
}

const RingDescriptor& RingDescriptor::base() const {
    if (!base_) throw std::logic_error("base(): not a polynomial ring");
    return *base_;
}

bool RingDescriptor::has(Capability c) const noexcept {
    switch (c) {
        case Capability::discrete_equality:
        case Capability::recognizable_units:
        case Capability::gcd:
        case Capability::decidable_divisibility:
        case Capability::bound_witness:
        case Capability::characteristic:
            return true;
        case Capability::field:
            return is_field();
        case Capability::bezout:
            // ZZ[X] is the one instance without Bezout relations: (2, X) has
            // gcd 1 but no certificate.
            return kind_ != RingKind::polynomial || base_->is_field();
    }
    return false;
}

void RingDescriptor::require(Capability c, const std::string& operation) const {
    if (!has(c)) {
        throw capability_error(operation + ": ring " + tag() + " lacks the " +
                               capability_name(c) + " capability");
    }
}

Integer RingDescriptor::characteristic() const {
    switch (kind_) {
        case RingKind::integers:
        case RingKind::rationals:
            return 0;
        case RingKind::prime_field:
            return modulus_;
        case RingKind::polynomial:
            return base_->characteristic();
    }
    throw std::logic_error("unreachable");
}

std::string RingDescriptor::tag() const {
    switch (kind_) {
        case RingKind::integers: return "ZZ";
        case RingKind::rationals: return "QQ";
        case RingKind::prime_field: return "Fp:" + modulus_.get_str();
        case RingKind::polynomial: return "poly:" + base_->tag();
    }
    throw std::logic_error("unreachable");
}

bool operator==(const RingDescriptor& a, const RingDescriptor& b) {
    if (a.kind_ != b.kind_) return false;
    switch (a.kind_) {
        case RingKind::integers:
        case RingKind::rationals:
            return true;
        case RingKind::prime_field:
            return a.modulus_ == b.modulus_;
        case RingKind::polynomial:
            return *a.base_ == *b.base_;
    }
    return false;
}

// ---------------------------------------------------------------- elements

Element::Element() : ring_(RingDescriptor::integers()), payload_(Integer(0)) {}

Element::Element(RingDescriptor ring, Payload payload)
    : ring_(std::move(ring)), payload_(std::move(payload)) {}

Element Element::integer(Integer value) {
    return Element(RingDescriptor::integers(), std::move(value));
}

Element Element::rational(Rational value) {
    value.canonicalize();
    return Element(RingDescriptor::rationals(), std::move(value));
}

Element Element::rational(const Integer& num, const Integer& den) {
    if (sgn(den) == 0) throw precondition_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return Element(RingDescriptor::rationals(), std::move(q));
}

Element Element::residue(const Integer& value, const RingDescriptor& field) {
    if (field.kind() != RingKind::prime_field) {
        throw std::logic_error("residue(): ring is not a prime field");
    }
    return Element(field, mod_reduce(value, field.modulus()));
}

Element Element::polynomial(const RingDescriptor& ring, std::vector<Element> coefficients) {
    if (ring.kind() != RingKind::polynomial) {
        throw std::logic_error("polynomial(): ring is not a polynomial ring");
    }
    for (const Element& c : coefficients) {
        if (c.ring() != ring.base()) {
            throw precondition_error("polynomial coefficient from the wrong ring: " +
                                     c.ring().tag() + " under " + ring.tag());
        }
    }
    while (!coefficients.empty() && coefficients.back().is_zero()) coefficients.pop_back();
    return Element(ring, std::move(coefficients));
}

Element Element::zero(const RingDescriptor& ring) {
    switch (ring.kind()) {
        case RingKind::integers: return integer(0);
        case RingKind::rationals: return rational(Rational(0));
        case RingKind::prime_field: return Element(ring, Integer(0));
        case RingKind::polynomial: return Element(ring, std::vector<Element>{});
    }
    throw std::logic_error("unreachable");
}

Element Element::one(const RingDescriptor& ring) {
    switch (ring.kind()) {
        case RingKind::integers: return integer(1);
        case RingKind::rationals: return rational(Rational(1));
        case RingKind::prime_field: return Element(ring, Integer(1));
        case RingKind::polynomial: return polynomial(ring, {one(ring.base())});
    }
    throw std::logic_error("unreachable");
}

Element Element::constant(const RingDescriptor& ring, const Integer& n) {
    switch (ring.kind()) {
        case RingKind::integers: return integer(n);
        case RingKind::rationals: return rational(Rational(n));
        case RingKind::prime_field: return residue(n, ring);
        case RingKind::polynomial: return polynomial(ring, {constant(ring.base(), n)});
    }
    throw std::logic_error("unreachable");
}

bool Element::is_zero() const {
    switch (ring_.kind()) {
        case RingKind::integers:
        case RingKind::prime_field:
            return sgn(std::get<Integer>(payload_)) == 0;
        case RingKind::rationals:
            return sgn(std::get<Rational>(payload_)) == 0;
        case RingKind::polynomial:
            return std::get<std::vector<Element>>(payload_).empty();
    }
    throw std::logic_error("unreachable");
}

bool Element::is_one() const {
    switch (ring_.kind()) {
        case RingKind::integers:
        case RingKind::prime_field:
            return std::get<Integer>(payload_) == 1;
        case RingKind::rationals:
            return std::get<Rational>(payload_) == 1;
        case RingKind::polynomial: {
            const auto& c = std::get<std::vector<Element>>(payload_);
            return c.size() == 1 && c[0].is_one();
        }
    }
    throw std::logic_error("unreachable");
}

const Integer& Element::int_value() const {
    if (ring_.kind() != RingKind::integers && ring_.kind() != RingKind::prime_field) {
        throw std::logic_error("int_value(): not an integer or residue element");
    }
    return std::get<Integer>(payload_);
}

const Rational& Element::rat_value() const {
    if (ring_.kind() != RingKind::rationals) {
        throw std::logic_error("rat_value(): not a rational element");
    }
    return std::get<Rational>(payload_);
}

const std::vector<Element>& Element::coefficients() const {
    if (ring_.kind() != RingKind::polynomial) {
        throw std::logic_error("coefficients(): not a polynomial element");
    }
    return std::get<std::vector<Element>>(payload_);
}

Element Element::operator-() const {
    switch (ring_.kind()) {
        case RingKind::integers:
            return integer(-std::get<Integer>(payload_));
        case RingKind::rationals:
            return rational(-std::get<Rational>(payload_));
        case RingKind::prime_field:
            return Element(ring_, mod_reduce(-std::get<Integer>(payload_), ring_.modulus()));
        case RingKind::polynomial: {
            std::vector<Element> out;
            out.reserve(coefficients().size());
            for (const Element& c : coefficients()) out.push_back(-c);
            return Element(ring_, std::move(out));
        }
    }
    throw std::logic_error("unreachable");
}

Element operator+(const Element& a, const Element& b) {
    check_same_ring(a, b, "add");
    switch (a.ring_.kind()) {
        case RingKind::integers:
            return Element::integer(a.int_value() + b.int_value());
        case RingKind::rationals:
            return Element::rational(a.rat_value() + b.rat_value());
        case RingKind::prime_field:
            return Element(a.ring_, mod_reduce(a.int_value() + b.int_value(), a.ring_.modulus()));
        case RingKind::polynomial: {
            const auto& ca = a.coefficients();
            const auto& cb = b.coefficients();
            std::vector<Element> out;
            out.reserve(std::max(ca.size(), cb.size()));
            const Element base_zero = Element::zero(a.ring_.base());
            for (std::size_t i = 0; i < std::max(ca.size(), cb.size()); ++i) {
                const Element& x = i < ca.size() ? ca[i] : base_zero;
                const Element& y = i < cb.size() ? cb[i] : base_zero;
                out.push_back(x + y);
            }
            return Element::polynomial(a.ring_, std::move(out));
        }
    }
    throw std::logic_error("unreachable");
}

Element operator-(const Element& a, const Element& b) {
    check_same_ring(a, b, "subtract");
    switch (a.ring_.kind()) {
        case RingKind::integers:
            return Element::integer(a.int_value() - b.int_value());
        case RingKind::rationals:
            return Element::rational(a.rat_value() - b.rat_value());
        case RingKind::prime_field:
            return Element(a.ring_, mod_reduce(a.int_value() - b.int_value(), a.ring_.modulus()));
        case RingKind::polynomial: {
            const auto& ca = a.coefficients();
            const auto& cb = b.coefficients();
            std::vector<Element> out;
            out.reserve(std::max(ca.size(), cb.size()));
            const Element base_zero = Element::zero(a.ring_.base());
            for (std::size_t i = 0; i < std::max(ca.size(), cb.size()); ++i) {
                const Element& x = i < ca.size() ? ca[i] : base_zero;
                const Element& y = i < cb.size() ? cb[i] : base_zero;
                out.push_back(x - y);
            }
            return Element::polynomial(a.ring_, std::move(out));
        }
    }
    throw std::logic_error("unreachable");
}

Element operator*(const Element& a, const Element& b) {
    check_same_ring(a, b, "multiply");
    switch (a.ring_.kind()) {
        case RingKind::integers:
            return Element::integer(a.int_value() * b.int_value());
        case RingKind::rationals:
            return Element::rational(a.rat_value() * b.rat_value());
        case RingKind::prime_field:
            return Element(a.ring_, mod_reduce(a.int_value() * b.int_value(), a.ring_.modulus()));
        case RingKind::polynomial: {
            const auto& ca = a.coefficients();
            const auto& cb = b.coefficients();
            if (ca.empty() || cb.empty()) return Element::zero(a.ring_);
            std::vector<Element> out(ca.size() + cb.size() - 1, Element::zero(a.ring_.base()));
            for (std::size_t i = 0; i < ca.size(); ++i) {
                if (ca[i].is_zero()) continue;
                for (std::size_t j = 0; j < cb.size(); ++j) {
                    out[i + j] = out[i + j] + ca[i] * cb[j];
                }
            }
            return Element::polynomial(a.ring_, std::move(out));
        }
    }
    throw std::logic_error("unreachable");
}

bool operator==(const Element& a, const Element& b) {
    check_same_ring(a, b, "equality");
    return a.payload_ == b.payload_;
}

}  // namespace exalg
