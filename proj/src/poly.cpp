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
#include <vector>

#include "exalg/rings.hpp"

namespace exalg {

namespace {

void require_polynomial(const Element& f, const char* op) {
    if (!f.ring().is_polynomial()) {
        throw precondition_error(std::string(op) + ": element of " + f.ring().tag() +
                                 " is not a polynomial");
    }
}

}  // namespace

long poly_degree(const Element& f) {
    require_polynomial(f, "poly_degree");
    return static_cast<long>(f.coefficients().size()) - 1;
}

Element poly_coefficient(const Element& f, std::size_t i) {
    require_polynomial(f, "poly_coefficient");
    const auto& c = f.coefficients();
    if (i < c.size()) return c[i];
    return Element::zero(f.ring().base());
}

Element poly_leading_coefficient(const Element& f) {
    require_polynomial(f, "poly_leading_coefficient");
    const auto& c = f.coefficients();
    if (c.empty()) return Element::zero(f.ring().base());
    return c.back();
}

Element poly_derivative(const Element& f) {
    require_polynomial(f, "poly_derivative");
    const auto& c = f.coefficients();
    const RingDescriptor& base = f.ring().base();
    std::vector<Element> out;
    if (c.size() > 1) out.reserve(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i) {
        out.push_back(Element::constant(base, Integer(static_cast<unsigned long>(i))) * c[i]);
    }
    return Element::polynomial(f.ring(), std::move(out));
}

bool poly_is_monic(const Element& f) {
    require_polynomial(f, "poly_is_monic");
    const auto& c = f.coefficients();
    return !c.empty() && c.back().is_one();
}

Element poly_monic(const Element& f) {
    require_polynomial(f, "poly_monic");
    if (!f.ring().base().is_field()) {
        throw precondition_error("poly_monic: coefficient ring " + f.ring().base().tag() +
                                 " is not a field");
    }
    if (f.is_zero()) throw precondition_error("poly_monic: zero polynomial");
    auto inv = is_unit(poly_leading_coefficient(f));
    return poly_scale(f, *inv);
}

PolyDivision poly_divmod(const Element& numerator, const Element& denominator) {
    require_polynomial(numerator, "poly_divmod");
    if (numerator.ring() != denominator.ring()) {
        throw precondition_error("poly_divmod: operands from different rings");
    }
    if (!numerator.ring().base().is_field()) {
        throw precondition_error("poly_divmod: coefficient ring " + numerator.ring().base().tag() +
                                 " is not a field");
    }
    if (denominator.is_zero()) throw precondition_error("poly_divmod: division by zero");

    const RingDescriptor& ring = numerator.ring();
    const RingDescriptor& base = ring.base();
    const auto& den = denominator.coefficients();
    const long dd = static_cast<long>(den.size()) - 1;
    const long dn = static_cast<long>(numerator.coefficients().size()) - 1;
    if (dn < dd) return {Element::zero(ring), numerator};

    const Element lc_inv = *is_unit(den.back());
    std::vector<Element> rem = numerator.coefficients();
    std::vector<Element> quot(static_cast<std::size_t>(dn - dd + 1), Element::zero(base));
    for (long k = dn; k >= dd; --k) {
        if (rem[k].is_zero()) continue;
        Element c = rem[k] * lc_inv;
        for (long j = 0; j <= dd; ++j) {
            rem[k - dd + j] = rem[k - dd + j] - c * den[j];
        }
        quot[k - dd] = std::move(c);
    }
    rem.resize(static_cast<std::size_t>(dd));
    return {Element::polynomial(ring, std::move(quot)), Element::polynomial(ring, std::move(rem))};
}

Integer poly_content(const Element& f) {
    require_polynomial(f, "poly_content");
    if (f.ring().base().kind() != RingKind::integers) {
        throw precondition_error("poly_content: coefficient ring is not ZZ");
    }
    Integer g = 0;
    for (const Element& c : f.coefficients()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.int_value().get_mpz_t());
    }
    return g;
}

Element poly_primitive_part(const Element& f) {
    Integer c = poly_content(f);
    if (sgn(c) == 0) return f;
    std::vector<Element> out;
    out.reserve(f.coefficients().size());
    for (const Element& a : f.coefficients()) {
        Integer q;
        mpz_divexact(q.get_mpz_t(), a.int_value().get_mpz_t(), c.get_mpz_t());
        out.push_back(Element::integer(q));
    }
    return Element::polynomial(f.ring(), std::move(out));
}

Element poly_scale(const Element& f, const Element& c) {
    require_polynomial(f, "poly_scale");
    if (c.ring() != f.ring().base()) {
        throw precondition_error("poly_scale: scalar from the wrong ring");
    }
    std::vector<Element> out;
    out.reserve(f.coefficients().size());
    for (const Element& a : f.coefficients()) out.push_back(a * c);
    return Element::polynomial(f.ring(), std::move(out));
}

Element poly_shift(const Element& f, std::size_t k) {
    require_polynomial(f, "poly_shift");
    if (f.is_zero() || k == 0) return f;
    std::vector<Element> out(k, Element::zero(f.ring().base()));
    out.insert(out.end(), f.coefficients().begin(), f.coefficients().end());
    return Element::polynomial(f.ring(), std::move(out));
}

Element poly_expand_variable(const Element& f, unsigned long q) {
    require_polynomial(f, "poly_expand_variable");
    if (q == 0) throw precondition_error("poly_expand_variable: q must be positive");
    if (q == 1 || f.is_zero()) return f;
    const auto& c = f.coefficients();
    std::vector<Element> out((c.size() - 1) * q + 1, Element::zero(f.ring().base()));
    for (std::size_t i = 0; i < c.size(); ++i) out[i * q] = c[i];
    return Element::polynomial(f.ring(), std::move(out));
}

}  // namespace exalg
