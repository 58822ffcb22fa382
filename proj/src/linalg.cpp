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

#include "exalg/linalg.hpp"

#include <algorithm>
#include <utility>

namespace exalg {

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(RingDescriptor ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols),
      entries_(rows * cols, Element::zero(ring_)) {}

Matrix Matrix::identity(const RingDescriptor& ring, std::size_t n) {
    Matrix m(ring, n, n);
    const Element one = Element::one(ring);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = one;
    return m;
}

Matrix Matrix::from_rows(const RingDescriptor& ring,
                         const std::vector<std::vector<Element>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows[0].size();
    Matrix m(ring, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) {
            throw precondition_error("matrix rows have unequal lengths");
        }
        for (std::size_t j = 0; j < c; ++j) {
            if (rows[i][j].ring() != ring) {
                throw precondition_error("matrix entry from the wrong ring: " +
                                         rows[i][j].ring().tag() + " in a matrix over " + ring.tag());
            }
            m.at(i, j) = rows[i][j];
        }
    }
    return m;
}

const Element& Matrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw std::logic_error("matrix index out of range");
    return entries_[i * cols_ + j];
}

Element& Matrix::at(std::size_t i, std::size_t j) {
    if (i >= rows_ || j >= cols_) throw std::logic_error("matrix index out of range");
    return entries_[i * cols_ + j];
}

bool Matrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Element& e) { return e.is_zero(); });
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            const Element& e = at(i, j);
            if (i == j ? !e.is_one() : !e.is_zero()) return false;
        }
    }
    return true;
}

bool Matrix::is_diagonal() const {
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (i != j && !at(i, j).is_zero()) return false;
        }
    }
    return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.ring_ != b.ring_) throw precondition_error("matrix product: ring mismatch");
    if (a.cols_ != b.rows_) throw precondition_error("matrix product: shape mismatch");
    Matrix out(a.ring_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Element& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                out.at(i, j) = out.at(i, j) + aik * b.at(k, j);
            }
        }
    }
    return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
    if (a.ring_ != b.ring_ || a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    return a.entries_ == b.entries_;
}

// ----------------------------------------------------- Smith normal form

namespace {

// Strictly decreasing measure driving pivot selection and termination:
// |a| over ZZ, the degree over k[X], 1 for nonzero field elements.
Integer pivot_measure(const Element& a) {
    switch (a.ring().kind()) {
        case RingKind::integers:
            return abs(a.int_value());
        case RingKind::rationals:
        case RingKind::prime_field:
            return 1;
        case RingKind::polynomial:
            return Integer(poly_degree(a));
    }
    throw std::logic_error("unreachable");
}

// Working state: every elementary operation is applied to D and mirrored
// into the transformation pair so that U*A*V = D stays invariant, with the
// inverses updated by the inverse operation on the opposite side.
struct SnfWorker {
    Matrix D, U, Uinv, V, Vinv;

    explicit SnfWorker(const Matrix& A)
        : D(A),
          U(Matrix::identity(A.ring(), A.rows())),
          Uinv(Matrix::identity(A.ring(), A.rows())),
          V(Matrix::identity(A.ring(), A.cols())),
          Vinv(Matrix::identity(A.ring(), A.cols())) {}

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < D.cols(); ++k) std::swap(D.at(i, k), D.at(j, k));
        for (std::size_t k = 0; k < U.cols(); ++k) std::swap(U.at(i, k), U.at(j, k));
        for (std::size_t k = 0; k < Uinv.rows(); ++k) std::swap(Uinv.at(k, i), Uinv.at(k, j));
    }

    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < D.rows(); ++k) std::swap(D.at(k, i), D.at(k, j));
        for (std::size_t k = 0; k < V.rows(); ++k) std::swap(V.at(k, i), V.at(k, j));
        for (std::size_t k = 0; k < Vinv.cols(); ++k) std::swap(Vinv.at(i, k), Vinv.at(j, k));
    }

    // row_i += c * row_j
    void add_row(std::size_t i, std::size_t j, const Element& c) {
        for (std::size_t k = 0; k < D.cols(); ++k) D.at(i, k) = D.at(i, k) + c * D.at(j, k);
        for (std::size_t k = 0; k < U.cols(); ++k) U.at(i, k) = U.at(i, k) + c * U.at(j, k);
        for (std::size_t k = 0; k < Uinv.rows(); ++k) {
            Uinv.at(k, j) = Uinv.at(k, j) - c * Uinv.at(k, i);
        }
    }

    // col_i += c * col_j
    void add_col(std::size_t i, std::size_t j, const Element& c) {
        for (std::size_t k = 0; k < D.rows(); ++k) D.at(k, i) = D.at(k, i) + c * D.at(k, j);
        for (std::size_t k = 0; k < V.rows(); ++k) V.at(k, i) = V.at(k, i) + c * V.at(k, j);
        for (std::size_t k = 0; k < Vinv.cols(); ++k) {
            Vinv.at(j, k) = Vinv.at(j, k) - c * Vinv.at(i, k);
        }
    }

    // row_i *= u where u is a unit with inverse u_inv
    void scale_row(std::size_t i, const Element& u, const Element& u_inv) {
        for (std::size_t k = 0; k < D.cols(); ++k) D.at(i, k) = D.at(i, k) * u;
        for (std::size_t k = 0; k < U.cols(); ++k) U.at(i, k) = U.at(i, k) * u;
        for (std::size_t k = 0; k < Uinv.rows(); ++k) Uinv.at(k, i) = Uinv.at(k, i) * u_inv;
    }

    // rows (i, j) <- [s t; -bq aq] * rows (i, j), a determinant-one block
    // built from a Bezout certificate: s*a + t*b = g, aq = a/g, bq = b/g.
    void combine_rows(std::size_t i, std::size_t j, const Element& s, const Element& t,
                      const Element& aq, const Element& bq) {
        for (std::size_t k = 0; k < D.cols(); ++k) {
            Element top = s * D.at(i, k) + t * D.at(j, k);
            Element bot = aq * D.at(j, k) - bq * D.at(i, k);
            D.at(i, k) = std::move(top);
            D.at(j, k) = std::move(bot);
        }
        for (std::size_t k = 0; k < U.cols(); ++k) {
            Element top = s * U.at(i, k) + t * U.at(j, k);
            Element bot = aq * U.at(j, k) - bq * U.at(i, k);
            U.at(i, k) = std::move(top);
            U.at(j, k) = std::move(bot);
        }
        // block inverse is [aq -t; bq s]
        for (std::size_t k = 0; k < Uinv.rows(); ++k) {
            Element left = Uinv.at(k, i) * aq + Uinv.at(k, j) * bq;
            Element right = Uinv.at(k, j) * s - Uinv.at(k, i) * t;
            Uinv.at(k, i) = std::move(left);
            Uinv.at(k, j) = std::move(right);
        }
    }

    // cols (i, j) <- cols (i, j) * [s -bq; t aq]^T arrangement mirroring combine_rows
    void combine_cols(std::size_t i, std::size_t j, const Element& s, const Element& t,
                      const Element& aq, const Element& bq) {
        for (std::size_t k = 0; k < D.rows(); ++k) {
            Element left = D.at(k, i) * s + D.at(k, j) * t;
            Element right = D.at(k, j) * aq - D.at(k, i) * bq;
            D.at(k, i) = std::move(left);
            D.at(k, j) = std::move(right);
        }
        for (std::size_t k = 0; k < V.rows(); ++k) {
            Element left = V.at(k, i) * s + V.at(k, j) * t;
            Element right = V.at(k, j) * aq - V.at(k, i) * bq;
            V.at(k, i) = std::move(left);
            V.at(k, j) = std::move(right);
        }
        for (std::size_t k = 0; k < Vinv.cols(); ++k) {
            Element top = aq * Vinv.at(i, k) + bq * Vinv.at(j, k);
            Element bot = s * Vinv.at(j, k) - t * Vinv.at(i, k);
            Vinv.at(i, k) = std::move(top);
            Vinv.at(j, k) = std::move(bot);
        }
    }
};

Element divexact(const Element& den, const Element& num) {
    auto q = divides(den, num);
    if (!q) throw std::logic_error("divexact: not divisible");
    return *q;
}

}  // namespace

SmithDecomposition smith_normal_form(const Matrix& A) {
    const RingDescriptor& ring = A.ring();
    ring.require(Capability::bezout, "smith_normal_form");
    ring.require(Capability::bound_witness, "smith_normal_form");

    SnfWorker w(A);
    const std::size_t m = A.rows();
    const std::size_t n = A.cols();
    const std::size_t t = std::min(m, n);

    for (std::size_t k = 0; k < t; ++k) {
        // pick the nonzero entry with the smallest measure as the pivot
        bool found = false;
        std::size_t pi = k, pj = k;
        Integer best;
        for (std::size_t i = k; i < m; ++i) {
            for (std::size_t j = k; j < n; ++j) {
                if (w.D.at(i, j).is_zero()) continue;
                Integer mes = pivot_measure(w.D.at(i, j));
                if (!found || mes < best) {
                    found = true;
                    best = std::move(mes);
                    pi = i;
                    pj = j;
                }
            }
        }
        if (!found) break;  // remaining block is zero
        w.swap_rows(k, pi);
        w.swap_cols(k, pj);

        for (;;) {
            for (std::size_t i = k + 1; i < m; ++i) {
                const Element& entry = w.D.at(i, k);
                if (entry.is_zero()) continue;
                if (auto q = divides(w.D.at(k, k), entry)) {
                    w.add_row(i, k, -*q);
                } else {
                    BezoutCertificate c = bezout(w.D.at(k, k), entry);
                    Element aq = divexact(c.g, w.D.at(k, k));
                    Element bq = divexact(c.g, entry);
                    w.combine_rows(k, i, c.s, c.t, aq, bq);
                }
            }
            for (std::size_t j = k + 1; j < n; ++j) {
                const Element& entry = w.D.at(k, j);
                if (entry.is_zero()) continue;
                if (auto q = divides(w.D.at(k, k), entry)) {
                    w.add_col(j, k, -*q);
                } else {
                    BezoutCertificate c = bezout(w.D.at(k, k), entry);
                    Element aq = divexact(c.g, w.D.at(k, k));
                    Element bq = divexact(c.g, entry);
                    w.combine_cols(k, j, c.s, c.t, aq, bq);
                }
            }
            // column ops can refill the pivot column; loop until both stay clean
            bool clean = true;
            for (std::size_t i = k + 1; i < m && clean; ++i) {
                if (!w.D.at(i, k).is_zero()) clean = false;
            }
            for (std::size_t j = k + 1; j < n && clean; ++j) {
                if (!w.D.at(k, j).is_zero()) clean = false;
            }
            if (clean) break;
        }
    }

    // enforce the divisibility chain with pairwise gcd/lcm repairs
    for (std::size_t i = 0; i < t; ++i) {
        for (std::size_t j = i + 1; j < t; ++j) {
            const Element& di = w.D.at(i, i);
            const Element& dj = w.D.at(j, j);
            if (dj.is_zero()) continue;
            if (di.is_zero()) {  // move the zero past the nonzero entry
                w.swap_rows(i, j);
                w.swap_cols(i, j);
                continue;
            }
            if (divides(di, dj)) continue;
            w.add_col(i, j, Element::one(ring));
            BezoutCertificate c = bezout(w.D.at(i, i), w.D.at(j, i));
            Element aq = divexact(c.g, w.D.at(i, i));
            Element bq = divexact(c.g, w.D.at(j, i));
            w.combine_rows(i, j, c.s, c.t, aq, bq);
            Element q = divexact(w.D.at(i, i), w.D.at(i, j));
            w.add_col(j, i, -q);
        }
    }

    // associate-canonical diagonal
    for (std::size_t k = 0; k < t; ++k) {
        const Element& d = w.D.at(k, k);
        if (d.is_zero()) continue;
        AssociateForm form = normalize_associate(d);
        if (form.unit.is_one()) continue;
        Element unit_inv = *is_unit(form.unit);
        w.scale_row(k, unit_inv, form.unit);
    }

    return {std::move(w.U), std::move(w.Uinv), std::move(w.D),
            std::move(w.V), std::move(w.Vinv)};
}

bool is_smith_form(const Matrix& D) {
    if (!D.is_diagonal()) return false;
    const std::size_t t = std::min(D.rows(), D.cols());
    for (std::size_t i = 0; i + 1 < t; ++i) {
        if (!divides(D.at(i, i), D.at(i + 1, i + 1))) return false;
    }
    return true;
}

bool verify_smith(const Matrix& A, const SmithDecomposition& S) {
    if (S.U * A * S.V != S.D) return false;
    if (!(S.U * S.Uinv).is_identity()) return false;
    if (!(S.V * S.Vinv).is_identity()) return false;
    if (!is_smith_form(S.D)) return false;
    const std::size_t t = std::min(S.D.rows(), S.D.cols());
    for (std::size_t i = 0; i < t; ++i) {
        const Element& d = S.D.at(i, i);
        if (normalize_associate(d).canonical != d) return false;
    }
    return true;
}

bool snf_equivalent(const Matrix& D1, const Matrix& D2) {
    if (D1.ring() != D2.ring()) {
        throw precondition_error("snf_equivalent: matrices over different rings");
    }
    D1.ring().require(Capability::gcd, "snf_equivalent");
    if (D1.rows() != D2.rows() || D1.cols() != D2.cols()) {
        throw precondition_error("snf_equivalent: shape mismatch");
    }
    if (!is_smith_form(D1) || !is_smith_form(D2)) {
        throw precondition_error("snf_equivalent: matrix not in Smith normal form");
    }
    const std::size_t t = std::min(D1.rows(), D1.cols());
    for (std::size_t i = 0; i < t; ++i) {
        if (normalize_associate(D1.at(i, i)).canonical !=
            normalize_associate(D2.at(i, i)).canonical) {
            return false;
        }
    }
    return true;
}

Matrix kernel(const Matrix& A) {
    SmithDecomposition S = smith_normal_form(A);
    const std::size_t t = std::min(A.rows(), A.cols());
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < A.cols(); ++j) {
        if (j >= t || S.D.at(j, j).is_zero()) free_cols.push_back(j);
    }
    Matrix K(A.ring(), A.cols(), free_cols.size());
    for (std::size_t c = 0; c < free_cols.size(); ++c) {
        for (std::size_t i = 0; i < A.cols(); ++i) {
            K.at(i, c) = S.V.at(i, free_cols[c]);
        }
    }
    return K;
}

std::optional<Matrix> solve_membership(const Matrix& A, const Matrix& b) {
    if (A.ring() != b.ring()) {
        throw precondition_error("solve_membership: ring mismatch");
    }
    if (b.cols() != 1 || b.rows() != A.rows()) {
        throw precondition_error("solve_membership: b must be a column with rows(A) entries");
    }
    SmithDecomposition S = smith_normal_form(A);
    Matrix c = S.U * b;
    const std::size_t t = std::min(A.rows(), A.cols());
    Matrix y(A.ring(), A.cols(), 1);
    for (std::size_t i = 0; i < A.rows(); ++i) {
        if (i < t && !S.D.at(i, i).is_zero()) {
            auto q = divides(S.D.at(i, i), c.at(i, 0));
            if (!q) return std::nullopt;
            y.at(i, 0) = std::move(*q);
        } else if (!c.at(i, 0).is_zero()) {
            return std::nullopt;
        }
    }
    return S.V * y;
}

}  // namespace exalg
