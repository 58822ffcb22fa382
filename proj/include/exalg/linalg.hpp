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

#ifndef EXALG_LINALG_HPP
#define EXALG_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "exalg/rings.hpp"

namespace exalg {

/// Dense row-major matrix over a single ring instance. Empty shapes are
/// permitted; products with compatible empty shapes are defined.
class Matrix {
   public:
    /// Zero-filled rows x cols matrix.
    Matrix(RingDescriptor ring, std::size_t rows, std::size_t cols);

    static Matrix identity(const RingDescriptor& ring, std::size_t n);
    /// All rows must have equal length and entries must share the ring.
    static Matrix from_rows(const RingDescriptor& ring, const std::vector<std::vector<Element>>& rows);

    const RingDescriptor& ring() const noexcept { return ring_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    const Element& at(std::size_t i, std::size_t j) const;
    Element& at(std::size_t i, std::size_t j);

    bool is_zero() const;
    bool is_identity() const;
    bool is_diagonal() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

   private:
    RingDescriptor ring_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Element> entries_;
};

/// U * A * V = D with D diagonal, each diagonal entry dividing the next and
/// in associate-canonical form; the inverses are carried along so certificate
/// checking never inverts a matrix.
struct SmithDecomposition {
    Matrix U;
    Matrix Uinv;
    Matrix D;
    Matrix V;
    Matrix Vinv;
};

/// Requires a constructive PID instance: bezout plus bound-witness
/// capabilities (ZZ, fields, k[X] over a field; not ZZ[X]).
SmithDecomposition smith_normal_form(const Matrix& A);

/// Recheck of every SmithDecomposition invariant against the source matrix.
bool verify_smith(const Matrix& A, const SmithDecomposition& S);

/// Diagonal with each entry dividing the next (0 divides only 0).
bool is_smith_form(const Matrix& D);

/// True iff corresponding diagonal entries are associates. Both matrices must
/// already be in Smith normal form, same shape, same GCD-domain instance.
bool snf_equivalent(const Matrix& D1, const Matrix& D2);

/// Columns generate {x : A*x = 0}; exactly cols(A) - rank(A) of them.
Matrix kernel(const Matrix& A);

/// Some x with A*x = b when b lies in the column span, absence otherwise.
/// b must be a column with rows(A) entries.
std::optional<Matrix> solve_membership(const Matrix& A, const Matrix& b);

}  // namespace exalg

#endif
