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

#ifndef EXALG_FPMODULES_HPP
#define EXALG_FPMODULES_HPP

#include <cstddef>
#include <vector>

#include "exalg/linalg.hpp"
#include "exalg/rings.hpp"

namespace exalg {

/// A finitely presented module: the cokernel of the relation matrix, whose
/// columns are relation vectors among `generators` generators.
class Presentation {
   public:
    Presentation(RingDescriptor ring, std::size_t generators, Matrix relations);

    const RingDescriptor& ring() const noexcept { return ring_; }
    std::size_t generators() const noexcept { return generators_; }
    const Matrix& relations() const noexcept { return relations_; }

   private:
    RingDescriptor ring_;
    std::size_t generators_;
    Matrix relations_;
};

/// R/(d_1) + ... + R/(d_k) + R^free_rank with each d_i a nonzero nonunit in
/// associate-canonical form and d_i | d_{i+1}.
struct InvariantFactorDecomposition {
    std::vector<Element> torsion;
    std::size_t free_rank = 0;
};

bool operator==(const InvariantFactorDecomposition& a, const InvariantFactorDecomposition& b);
inline bool operator!=(const InvariantFactorDecomposition& a,
                       const InvariantFactorDecomposition& b) {
    return !(a == b);
}

/// Structure decomposition via the Smith normal form of the relation matrix:
/// unit diagonal entries are stripped, zero contributions count toward the
/// free rank. Requires a constructive PID instance.
InvariantFactorDecomposition decompose(const Presentation& p);

/// True iff the two presented modules are isomorphic, decided by comparing
/// canonical decompositions. Both presentations must share the ring.
bool same_module(const Presentation& a, const Presentation& b);

/// Block-diagonal presentation of the direct sum.
Presentation direct_sum(const Presentation& a, const Presentation& b);

}  // namespace exalg

#endif
