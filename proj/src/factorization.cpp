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

#include "exalg/factorization.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace exalg {

namespace {

Element divide_exact(const Element& numerator, const Element& denominator) {
    auto q = divides(denominator, numerator);
    if (!q) throw std::logic_error("divide_exact: not divisible");
    return std::move(*q);
}

}  // namespace

unsigned long bound_witness(const Element& a) {
    a.ring().require(Capability::bound_witness, "bound_witness");
    if (a.is_zero()) throw precondition_error("bound_witness: 0 is not bounded");
    switch (a.ring().kind()) {
        case RingKind::integers:
            return mpz_sizeinbase(a.int_value().get_mpz_t(), 2) - 1;
        case RingKind::rationals:
        case RingKind::prime_field:
            return 0;  // every nonzero element is a unit
        case RingKind::polynomial: {
            const unsigned long deg = static_cast<unsigned long>(poly_degree(a));
            if (a.ring().base().is_field()) return deg;
            Integer c = poly_content(a);
            return deg + mpz_sizeinbase(c.get_mpz_t(), 2) - 1;
        }
    }
    throw std::logic_error("unreachable");
}

CoprimeBasis quasi_factorize(const std::vector<Element>& xs) {
    CoprimeBasis out;
    if (xs.empty()) return out;
    const RingDescriptor& ring = xs[0].ring();
    ring.require(Capability::gcd, "quasi_factorize");
    ring.require(Capability::bound_witness, "quasi_factorize");
    for (const Element& x : xs) {
        if (x.ring() != ring) throw precondition_error("quasi_factorize: inputs from mixed rings");
        if (x.is_zero()) throw precondition_error("quasi_factorize: zero input");
    }

    // Worklist refinement: a pair sharing a nonunit gcd g is replaced by
    // {g, a/g, b/g}. The sum of bound witnesses drops with every split, so
    // this terminates; canonical forms stay canonical under exact division.
    std::vector<Element> basis;
    std::vector<Element> work;
    for (const Element& x : xs) {
        Element c = normalize_associate(x).canonical;
        if (!c.is_one()) work.push_back(std::move(c));
    }
    while (!work.empty()) {
        Element a = std::move(work.back());
        work.pop_back();
        if (a.is_one()) continue;
        bool coprime_to_all = true;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            Element g = gcd(a, basis[i]);
            if (is_unit(g)) continue;
            Element b = std::move(basis[i]);
            basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
            work.push_back(divide_exact(b, g));
            work.push_back(divide_exact(a, g));
            work.push_back(std::move(g));
            coprime_to_all = false;
            break;
        }
        if (coprime_to_all) basis.push_back(std::move(a));
    }
    std::sort(basis.begin(), basis.end(),
              [](const Element& a, const Element& b) { return compare_elements(a, b) < 0; });

    out.basis = std::move(basis);
    out.exponents.reserve(xs.size());
    out.units.reserve(xs.size());
    for (const Element& x : xs) {
        std::vector<unsigned long> row;
        row.reserve(out.basis.size());
        Element rem = x;
        for (const Element& p : out.basis) {
            unsigned long e = 0;
            while (auto q = divides(p, rem)) {
                rem = std::move(*q);
                ++e;
            }
            row.push_back(e);
        }
        if (!is_unit(rem)) throw std::logic_error("quasi_factorize: non-unit residue after refinement");
        out.exponents.push_back(std::move(row));
        out.units.push_back(std::move(rem));
    }
    return out;
}

Element poly_gcd(const Element& f, const Element& g) {
    if (!f.ring().is_polynomial()) {
        throw precondition_error("poly_gcd: elements of " + f.ring().tag() +
                                 " are not polynomials");
    }
    return gcd(f, g);
}

// ------------------------------------------------- separable decomposition

namespace {

struct RawPart {
    Element core;        // monic separable
    unsigned long mult;  // multiplicity of core(X^q) in the input
    unsigned long q;     // 1 or a power of the characteristic
};

// f with f' = 0 in characteristic p is h(X^p); over a prime field the p-th
// root of each coefficient is the coefficient itself.
Element pth_root_shrink(const Element& f, unsigned long p) {
    const auto& c = f.coefficients();
    std::vector<Element> out;
    out.reserve((c.size() - 1) / p + 1);
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i % p == 0) {
            out.push_back(c[i]);
        } else if (!c[i].is_zero()) {
            throw std::logic_error("pth_root_shrink: derivative was not zero");
        }
    }
    return Element::polynomial(f.ring(), std::move(out));
}

// Squarefree layers of a monic f of degree >= 1: f = prod core(X^q)^mult.
// Characteristic 0 is plain Musser; characteristic p additionally peels
// X^(p^e) layers whenever a derivative vanishes.
void squarefree_parts(const Element& f, unsigned long q, unsigned long p,
                      std::vector<RawPart>& out) {
    Element df = poly_derivative(f);
    if (p != 0 && df.is_zero()) {
        squarefree_parts(pth_root_shrink(f, p), q * p, p, out);
        return;
    }
    Element c = gcd(f, df);
    Element w = divide_exact(f, c);
    unsigned long i = 1;
    while (poly_degree(w) > 0) {
        Element y = gcd(w, c);
        Element z = divide_exact(w, y);
        if (poly_degree(z) > 0) out.push_back({std::move(z), i, q});
        c = divide_exact(c, y);
        w = std::move(y);
        ++i;
    }
    if (poly_degree(c) > 0) {
        if (p == 0) throw std::logic_error("squarefree_parts: leftover in characteristic 0");
        squarefree_parts(pth_root_shrink(c, p), q * p, p, out);
    }
}

}  // namespace

SeparableDecomposition separable_decompose(const std::vector<Element>& monic_polys) {
    SeparableDecomposition out;
    if (monic_polys.empty()) return out;
    const RingDescriptor& ring = monic_polys[0].ring();
    if (!ring.is_polynomial() || !ring.base().is_field()) {
        throw precondition_error(
            "separable_decompose: inputs must be polynomials over QQ or a prime field, got " +
            ring.tag());
    }
    for (const Element& f : monic_polys) {
        if (f.ring() != ring) {
            throw precondition_error("separable_decompose: inputs from mixed rings");
        }
        if (poly_degree(f) < 1 || !poly_is_monic(f)) {
            throw precondition_error("separable_decompose: inputs must be monic of degree >= 1");
        }
    }
    const Integer char_val = ring.characteristic();
    const unsigned long p = sgn(char_val) == 0 ? 0 : mpz_get_ui(char_val.get_mpz_t());

    std::vector<std::vector<RawPart>> raw(monic_polys.size());
    for (std::size_t i = 0; i < monic_polys.size(); ++i) {
        squarefree_parts(monic_polys[i], 1, p, raw[i]);
    }

    // Distinct separable cores across all inputs, refined pairwise coprime.
    std::vector<Element> cores;
    for (const auto& parts : raw) {
        for (const RawPart& part : parts) {
            if (std::find(cores.begin(), cores.end(), part.core) == cores.end()) {
                cores.push_back(part.core);
            }
        }
    }
    std::vector<Element> family = quasi_factorize(cores).basis;

    // Exponent of each family member in each original input, by repeated
    // exact division; the monic leftover must be exactly 1.
    std::vector<std::vector<unsigned long>> exponents(
        monic_polys.size(), std::vector<unsigned long>(family.size(), 0));
    for (std::size_t i = 0; i < monic_polys.size(); ++i) {
        Element rem = monic_polys[i];
        for (std::size_t j = 0; j < family.size(); ++j) {
            while (auto quo = divides(family[j], rem)) {
                rem = std::move(*quo);
                ++exponents[i][j];
            }
        }
        if (!rem.is_one()) throw std::logic_error("separable_decompose: refinement incomplete");
    }

    // In characteristic p, absorb the common p-power of each column into the
    // part itself: core(X^q) accounts for q copies of the core at once.
    out.parts.reserve(family.size());
    for (std::size_t j = 0; j < family.size(); ++j) {
        unsigned long power = 1;
        if (p != 0) {
            unsigned long g = 0;
            for (std::size_t i = 0; i < monic_polys.size(); ++i) {
                g = std::gcd(g, exponents[i][j]);
            }
            if (g == 0) throw std::logic_error("separable_decompose: unused family member");
            while (g % p == 0) {
                power *= p;
                g /= p;
            }
        }
        Element stored = poly_expand_variable(family[j], power);
        out.parts.push_back({family[j], power, std::move(stored)});
        for (std::size_t i = 0; i < monic_polys.size(); ++i) {
            exponents[i][j] /= power;
        }
    }
    out.exponents = std::move(exponents);

    for (std::size_t j = 0; j < out.parts.size(); ++j) {
        for (std::size_t k = j + 1; k < out.parts.size(); ++k) {
            BezoutCertificate cert = bezout(out.parts[j].stored, out.parts[k].stored);
            if (!cert.g.is_one()) {
                throw std::logic_error("separable_decompose: parts are not strongly coprime");
            }
            out.witnesses.push_back({j, k, std::move(cert.s), std::move(cert.t)});
        }
    }
    return out;
}

// ------------------------------------------------- integer ideals

namespace {

void require_integer_ideal(const Element& generator, const char* op) {
    if (generator.ring().kind() != RingKind::integers) {
        throw precondition_error(std::string(op) + ": ideal generator must be an integer, got " +
                                 generator.ring().tag());
    }
}

// Trial-division bound: inputs at or above 2^48 are refused.
void require_desk_scale(const Integer& n, const char* op) {
    if (mpz_sizeinbase(n.get_mpz_t(), 2) > 48) {
        throw precondition_error(std::string(op) + ": |n| must be below 2^48");
    }
}

std::vector<std::pair<unsigned long long, unsigned long>> trial_factor(unsigned long long n) {
    std::vector<std::pair<unsigned long long, unsigned long>> out;
    auto strip = [&](unsigned long long d) {
        if (n % d != 0) return;
        unsigned long e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        out.emplace_back(d, e);
    };
    strip(2);
    strip(3);
    strip(5);
    for (unsigned long long d = 7; d * d <= n; d += 6) {
        strip(d);
        strip(d + 4);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

}  // namespace

PrimaryDecomposition primary_decompose_int(const Element& generator) {
    require_integer_ideal(generator, "primary_decompose_int");
    Integer n = abs(generator.int_value());
    PrimaryDecomposition out;
    if (sgn(n) == 0) {
        out.components.push_back({Integer(0), Integer(0)});  // (0) is prime in ZZ
        return out;
    }
    if (n == 1) return out;  // the whole ring
    require_desk_scale(n, "primary_decompose_int");
    for (const auto& [p, e] : trial_factor(mpz_get_ui(n.get_mpz_t()))) {
        Integer prime(static_cast<unsigned long>(p));
        Integer power;
        mpz_pow_ui(power.get_mpz_t(), prime.get_mpz_t(), e);
        out.components.push_back({std::move(power), std::move(prime)});
    }
    return out;
}

std::optional<Integer> is_primary_int(const Element& generator) {
    require_integer_ideal(generator, "is_primary_int");
    Integer n = abs(generator.int_value());
    if (sgn(n) == 0) return Integer(0);
    if (n == 1) return std::nullopt;
    require_desk_scale(n, "is_primary_int");
    unsigned long long v = mpz_get_ui(n.get_mpz_t());
    auto factors = trial_factor(v);
    if (factors.size() != 1) return std::nullopt;
    return Integer(static_cast<unsigned long>(factors[0].first));
}

}  // namespace exalg
