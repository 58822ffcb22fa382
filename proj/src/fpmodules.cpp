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

#include "exalg/fpmodules.hpp"

#include <algorithm>
#include <utility>

namespace exalg {

Presentation::Presentation(RingDescriptor ring, std::size_t generators, Matrix relations)
    : ring_(std::move(ring)), generators_(generators), relations_(std::move(relations)) {
    if (relations_.ring() != ring_) {
        throw precondition_error("presentation: relation matrix over " + relations_.ring().tag() +
                                 ", expected " + ring_.tag());
    }
    if (relations_.rows() != generators_) {
        throw precondition_error("presentation: relation matrix must have one row per generator");
    }
}

bool operator==(const InvariantFactorDecomposition& a, const InvariantFactorDecomposition& b) {
    if (a.free_rank != b.free_rank || a.torsion.size() != b.torsion.size()) return false;
    for (std::size_t i = 0; i < a.torsion.size(); ++i) {
        if (a.torsion[i] != b.torsion[i]) return false;
    }
    return true;
}

InvariantFactorDecomposition decompose(const Presentation& p) {
    SmithDecomposition S = smith_normal_form(p.relations());
    const std::size_t t = std::min(S.D.rows(), S.D.cols());
    InvariantFactorDecomposition out;
    std::size_t rank = 0;
    for (std::size_t i = 0; i < t; ++i) {
        const Element& d = S.D.at(i, i);
        if (d.is_zero()) continue;
        ++rank;
        if (is_unit(d)) continue;  // R/(unit) vanishes
        out.torsion.push_back(d);
    }
    out.free_rank = p.generators() - rank;
    return out;
}

bool same_module(const Presentation& a, const Presentation& b) {
    if (a.ring() != b.ring()) {
        throw precondition_error("same_module: presentations over different rings");
    }
    return decompose(a) == decompose(b);
}

Presentation direct_sum(const Presentation& a, const Presentation& b) {
    if (a.ring() != b.ring()) {
        throw precondition_error("direct_sum: presentations over different rings");
    }
    const std::size_t rows = a.generators() + b.generators();
    const std::size_t cols = a.relations().cols() + b.relations().cols();
    Matrix rel(a.ring(), rows, cols);
    for (std::size_t i = 0; i < a.relations().rows(); ++i) {
        for (std::size_t j = 0; j < a.relations().cols(); ++j) {
            rel.at(i, j) = a.relations().at(i, j);
        }
    }
    for (std::size_t i = 0; i < b.relations().rows(); ++i) {
        for (std::size_t j = 0; j < b.relations().cols(); ++j) {
            rel.at(a.generators() + i, a.relations().cols() + j) = b.relations().at(i, j);
        }
    }
    return Presentation(a.ring(), rows, std::move(rel));
}

}  // namespace exalg
