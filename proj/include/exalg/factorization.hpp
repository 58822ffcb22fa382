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

#ifndef EXALG_FACTORIZATION_HPP
#define EXALG_FACTORIZATION_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "exalg/rings.hpp"

namespace exalg {

/// A valid (not necessarily minimal) bound n for a != 0: any way of writing a
/// as a product of n+1 factors contains a unit. Bit length - 1 over ZZ, the
/// degree over k[X], degree plus content bit length - 1 over ZZ[X], 0 in a
/// field.
unsigned long bound_witness(const Element& a);

/// Pairwise relatively prime family expressing each input as
/// unit * product of basis powers, exactly.
struct CoprimeBasis {
    std::vector<Element> basis;                         // canonical nonunits
    std::vector<std::vector<unsigned long>> exponents;  // [input][basis element]
    std::vector<Element> units;                         // one per input
};

/// gcd-free basis refinement for nonzero elements of a GCD instance with a
/// bound witness (ZZ, k[X], ZZ[X]). The basis is not unique; callers check
/// the postconditions, not a particular basis.
CoprimeBasis quasi_factorize(const std::vector<Element>& xs);

/// gcd in a polynomial ring over a field or over ZZ, associate-canonical.
Element poly_gcd(const Element& f, const Element& g);

/// One factor of a separable decomposition: stored = core(X^power), core
/// monic separable, power 1 or a power of the characteristic.
struct SeparablePart {
    Element core;
    unsigned long power = 1;
    Element stored;
};

/// Bezout identity u*stored[first] + v*stored[second] = 1.
struct CoprimalityWitness {
    std::size_t first = 0;
    std::size_t second = 0;
    Element u;
    Element v;
};

struct SeparableDecomposition {
    std::vector<SeparablePart> parts;
    std::vector<std::vector<unsigned long>> exponents;  // [input][part]
    std::vector<CoprimalityWitness> witnesses;          // one per part pair
};

/// Inputs: monic polynomials of degree >= 1 over QQ or F_p. In characteristic
/// zero every part has power 1; in characteristic p the X^(p^e) layers are
/// peeled by identity p-th roots of coefficients.
SeparableDecomposition separable_decompose(const std::vector<Element>& monic_polys);

/// One primary component (q) = (p^e) of an integer ideal with its radical (p).
struct PrimaryComponent {
    Integer q;
    Integer p;
};

struct PrimaryDecomposition {
    std::vector<PrimaryComponent> components;
};

/// Primary decomposition of the ideal (n) of ZZ by trial division;
/// requires |n| < 2^48. (0) is prime; units give the empty decomposition.
PrimaryDecomposition primary_decompose_int(const Element& generator);

/// The radical's generator when (n) is primary (n = 0 or |n| a prime power),
/// absence otherwise.
std::optional<Integer> is_primary_int(const Element& generator);

}  // namespace exalg

#endif
