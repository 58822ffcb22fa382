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

#ifndef EXALG_RINGS_HPP
#define EXALG_RINGS_HPP

#include <gmpxx.h>

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "exalg/errors.hpp"

namespace exalg {

using Integer = mpz_class;
using Rational = mpq_class;

enum class RingKind { integers, rationals, prime_field, polynomial };

/// What a ring instance can decide or compute. The set is a function of the
/// kind alone: ZZ and k[X] over a field carry the full arithmetic stack,
/// ZZ[X] has gcd and a divisibility test but no Bezout relations.
enum class Capability {
    discrete_equality,
    recognizable_units,
    gcd,
    bezout,
    decidable_divisibility,
    bound_witness,
    field,
    characteristic,
};

/// Identifies a concrete ring instance: ZZ, QQ, F_p, or R[X] over one of
/// those. Values are immutable and cheap to copy; polynomial descriptors
/// share their base descriptor.
class RingDescriptor {
   public:
    static RingDescriptor integers();
    static RingDescriptor rationals();
    /// p must be prime (checked by trial division) and below 2^63.
    static RingDescriptor prime_field(const Integer& p);
    /// base must not itself be a polynomial ring.
    static RingDescriptor polynomial_over(const RingDescriptor& base);
    /// Parses "ZZ", "QQ", "Fp:<p>", "poly:<base-tag>".
    static RingDescriptor from_tag(std::string_view tag);

    RingKind kind() const noexcept { return kind_; }
    bool is_polynomial() const noexcept { return kind_ == RingKind::polynomial; }
    bool is_field() const noexcept;

    /// Prime modulus; only valid for prime fields.
    const Integer& modulus() const;
    /// Coefficient ring; only valid for polynomial rings.
    const RingDescriptor& base() const;

    bool has(Capability c) const noexcept;
    /// Throws capability_error naming the operation when c is missing.
    void require(Capability c, const std::string& operation) const;

    Integer characteristic() const;
    std::string tag() const;

    friend bool operator==(const RingDescriptor& a, const RingDescriptor& b);
    friend bool operator!=(const RingDescriptor& a, const RingDescriptor& b) { return !(a == b); }

   private:
    explicit RingDescriptor(RingKind kind) : kind_(kind) {}

    RingKind kind_;
    Integer modulus_;                              // prime fields only
    std::shared_ptr<const RingDescriptor> base_;   // polynomial rings only
};

/// An exact value in a ring instance. Payloads are always canonical:
/// fractions reduced with positive denominator, residues in [0, p),
/// polynomial coefficient lists trimmed of leading zeros (zero polynomial
/// is the empty list, coefficients stored ascending by degree).
class Element {
   public:
    /// The integer 0 in ZZ.
    Element();

    static Element integer(Integer value);
    static Element rational(Rational value);
    static Element rational(const Integer& num, const Integer& den);
    /// Reduces value into [0, p).
    static Element residue(const Integer& value, const RingDescriptor& field);
    /// Coefficients ascending in degree; leading zeros are trimmed.
    static Element polynomial(const RingDescriptor& ring, std::vector<Element> coefficients);

    static Element zero(const RingDescriptor& ring);
    static Element one(const RingDescriptor& ring);
    /// The image of the integer n in the ring.
    static Element constant(const RingDescriptor& ring, const Integer& n);

    const RingDescriptor& ring() const noexcept { return ring_; }
    bool is_zero() const;
    bool is_one() const;

    /// Payload accessors; each checks the ring kind.
    const Integer& int_value() const;
    const Rational& rat_value() const;
    const std::vector<Element>& coefficients() const;

    Element operator-() const;
    friend Element operator+(const Element& a, const Element& b);
    friend Element operator-(const Element& a, const Element& b);
    friend Element operator*(const Element& a, const Element& b);
    friend bool operator==(const Element& a, const Element& b);
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

   private:
    using Payload = std::variant<Integer, Rational, std::vector<Element>>;
    Element(RingDescriptor ring, Payload payload);

    RingDescriptor ring_;
    Payload payload_;
};

/// Witness for s*a + t*b = g with g dividing both a and b,
/// g in associate-canonical form.
struct BezoutCertificate {
    Element g;
    Element s;
    Element t;
};

/// canonical * unit == original, unit invertible, canonical the fixed
/// representative of the associate class.
struct AssociateForm {
    Element canonical;
    Element unit;
};

/// Returns the inverse when a is a unit, absence otherwise.
std::optional<Element> is_unit(const Element& a);

/// Greatest common divisor in associate-canonical form; gcd(0,0) = 0.
/// Requires the gcd capability.
Element gcd(const Element& a, const Element& b);

/// Requires the bezout capability (ZZ, fields, k[X] over a field).
BezoutCertificate bezout(const Element& a, const Element& b);

/// Returns q with a*q = b when a divides b; divides(0, b) succeeds iff b = 0.
std::optional<Element> divides(const Element& a, const Element& b);

/// Canonical representatives: ZZ nonnegative, fields 0 or 1, k[X] monic or 0,
/// ZZ[X] positive leading coefficient. Idempotent.
AssociateForm normalize_associate(const Element& a);

Integer characteristic(const RingDescriptor& ring);

/// Total order on same-ring values; used only to fix deterministic output
/// orderings, carries no algebraic meaning.
int compare_elements(const Element& a, const Element& b);

// --- polynomial views and helpers (elements of a polynomial ring) ---

/// Degree of f, -1 for the zero polynomial.
long poly_degree(const Element& f);
/// Coefficient of X^i (base-ring zero beyond the degree).
Element poly_coefficient(const Element& f, std::size_t i);
Element poly_leading_coefficient(const Element& f);
Element poly_derivative(const Element& f);
bool poly_is_monic(const Element& f);
/// f scaled monic; requires a field base and f != 0.
Element poly_monic(const Element& f);

struct PolyDivision {
    Element quotient;
    Element remainder;
};
/// Euclidean division; requires a field base and denominator != 0.
PolyDivision poly_divmod(const Element& numerator, const Element& denominator);

/// gcd of the integer coefficients (nonnegative); integer base only.
Integer poly_content(const Element& f);
Element poly_primitive_part(const Element& f);

/// Coefficientwise product with a base-ring element.
Element poly_scale(const Element& f, const Element& c);
/// f * X^k.
Element poly_shift(const Element& f, std::size_t k);
/// f(X^q); q >= 1.
Element poly_expand_variable(const Element& f, unsigned long q);

}  // namespace exalg

#endif
