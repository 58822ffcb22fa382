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

// Shorthand constructors used across the test suites.

#ifndef EXALG_TESTS_BUILD_HPP
#define EXALG_TESTS_BUILD_HPP

#include <vector>

#include "exalg/linalg.hpp"
#include "exalg/rings.hpp"

namespace testutil {

using exalg::Element;
using exalg::Integer;
using exalg::Matrix;
using exalg::RingDescriptor;

inline RingDescriptor ZZ() { return RingDescriptor::integers(); }
inline RingDescriptor QQ() { return RingDescriptor::rationals(); }
inline RingDescriptor FP(unsigned long p) { return RingDescriptor::prime_field(Integer(p)); }
inline RingDescriptor ZZX() { return RingDescriptor::polynomial_over(ZZ()); }
inline RingDescriptor QQX() { return RingDescriptor::polynomial_over(QQ()); }
inline RingDescriptor FPX(unsigned long p) { return RingDescriptor::polynomial_over(FP(p)); }

inline Element zz(long v) { return Element::integer(Integer(v)); }
inline Element qq(long num, long den = 1) { return Element::rational(Integer(num), Integer(den)); }
inline Element fp(unsigned long p, long v) { return Element::residue(Integer(v), FP(p)); }

inline Element zpoly(const std::vector<long>& coeffs) {
    std::vector<Element> c;
    c.reserve(coeffs.size());
    for (long v : coeffs) c.push_back(zz(v));
    return Element::polynomial(ZZX(), std::move(c));
}

inline Element qpoly(const std::vector<long>& coeffs) {
    std::vector<Element> c;
    c.reserve(coeffs.size());
    for (long v : coeffs) c.push_back(qq(v));
    return Element::polynomial(QQX(), std::move(c));
}

inline Element fppoly(unsigned long p, const std::vector<long>& coeffs) {
    std::vector<Element> c;
    c.reserve(coeffs.size());
    for (long v : coeffs) c.push_back(fp(p, v));
    return Element::polynomial(FPX(p), std::move(c));
}

inline Matrix zmat(const std::vector<std::vector<long>>& rows) {
    std::vector<std::vector<Element>> entries;
    entries.reserve(rows.size());
    for (const auto& row : rows) {
        std::vector<Element> out;
        out.reserve(row.size());
        for (long v : row) out.push_back(zz(v));
        entries.push_back(std::move(out));
    }
    return Matrix::from_rows(ZZ(), entries);
}

inline Matrix zcol(const std::vector<long>& column) {
    std::vector<std::vector<long>> rows;
    rows.reserve(column.size());
    for (long v : column) rows.push_back({v});
    return zmat(rows);
}

}  // namespace testutil

#endif
