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

#include "exalg/io.hpp"

#include <utility>
#include <vector>

namespace exalg::io {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    return s.find_first_not_of("0123456789") == std::string_view::npos;
}

std::string json_type_name(const json& j) { return j.type_name(); }

const json& require_member(const json& j, const char* key) {
    if (!j.is_object()) {
        throw parse_error("expected an object, got " + json_type_name(j));
    }
    auto it = j.find(key);
    if (it == j.end()) {
        throw parse_error(std::string("missing required key \"") + key + "\"");
    }
    return *it;
}

std::string require_string(const json& j, const char* what) {
    if (!j.is_string()) {
        throw parse_error(std::string(what) + ": expected a string, got " + json_type_name(j));
    }
    return j.get<std::string>();
}

}  // namespace

Integer integer_from_string(const std::string& text) {
    std::string_view body = text;
    if (body.starts_with("+") || body.starts_with("-")) body.remove_prefix(1);
    if (!all_digits(body)) {
        throw parse_error("not a decimal integer: \"" + text + "\"");
    }
    return Integer(text);
}

json element_to_json(const Element& e) {
    switch (e.ring().kind()) {
        case RingKind::integers:
        case RingKind::prime_field:
            return e.int_value().get_str();
        case RingKind::rationals:
            return e.rat_value().get_num().get_str() + "/" + e.rat_value().get_den().get_str();
        case RingKind::polynomial: {
            json coeffs = json::array();
            for (const Element& c : e.coefficients()) coeffs.push_back(element_to_json(c));
            return coeffs;
        }
    }
    throw std::logic_error("unreachable");
}

Element element_from_json(const json& j, const RingDescriptor& ring) {
    switch (ring.kind()) {
        case RingKind::integers:
            return Element::integer(integer_from_string(require_string(j, "integer element")));
        case RingKind::rationals: {
            const std::string text = require_string(j, "rational element");
            const auto slash = text.find('/');
            if (slash == std::string::npos) {
                return Element::rational(integer_from_string(text), 1);
            }
            Integer num = integer_from_string(text.substr(0, slash));
            const std::string den_text = text.substr(slash + 1);
            if (!all_digits(den_text)) {
                throw parse_error("rational denominator must be a positive decimal: \"" + text + "\"");
            }
            Integer den = integer_from_string(den_text);
            if (sgn(den) == 0) {
                throw parse_error("rational denominator must be positive: \"" + text + "\"");
            }
            return Element::rational(num, den);
        }
        case RingKind::prime_field: {
            const std::string text = require_string(j, "residue element");
            if (!all_digits(text)) {
                throw parse_error("residue must be a nonnegative decimal: \"" + text + "\"");
            }
            Integer v(text);
            if (v >= ring.modulus()) {
                throw parse_error("residue " + text + " out of range [0, " +
                                  ring.modulus().get_str() + ")");
            }
            return Element::residue(v, ring);
        }
        case RingKind::polynomial: {
            if (!j.is_array()) {
                throw parse_error("polynomial element: expected an array of coefficients, got " +
                                  json_type_name(j));
            }
            std::vector<Element> coeffs;
            coeffs.reserve(j.size());
            for (const json& c : j) coeffs.push_back(element_from_json(c, ring.base()));
            return Element::polynomial(ring, std::move(coeffs));
        }
    }
    throw std::logic_error("unreachable");
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(element_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return json{{"ring", m.ring().tag()}, {"rows", std::move(rows)}};
}

Matrix matrix_from_json(const json& j) {
    const RingDescriptor ring =
        RingDescriptor::from_tag(require_string(require_member(j, "ring"), "ring tag"));
    const json& rows = require_member(j, "rows");
    if (!rows.is_array()) {
        throw parse_error("matrix rows: expected an array, got " + json_type_name(rows));
    }
    std::vector<std::vector<Element>> entries;
    entries.reserve(rows.size());
    std::size_t width = 0;
    for (const json& row : rows) {
        if (!row.is_array()) {
            throw parse_error("matrix row: expected an array, got " + json_type_name(row));
        }
        if (entries.empty()) {
            width = row.size();
        } else if (row.size() != width) {
            throw parse_error("matrix rows have unequal lengths");
        }
        std::vector<Element> out;
        out.reserve(row.size());
        for (const json& cell : row) out.push_back(element_from_json(cell, ring));
        entries.push_back(std::move(out));
    }
    return Matrix::from_rows(ring, entries);
}

json presentation_to_json(const Presentation& p) {
    return json{{"ring", p.ring().tag()},
                {"generators", p.generators()},
                {"relations", matrix_to_json(p.relations())}};
}

Presentation presentation_from_json(const json& j) {
    const RingDescriptor ring =
        RingDescriptor::from_tag(require_string(require_member(j, "ring"), "ring tag"));
    const json& gens = require_member(j, "generators");
    if (!gens.is_number_integer() || gens.get<long long>() < 0) {
        throw parse_error("generators: expected a nonnegative integer");
    }
    Matrix relations = matrix_from_json(require_member(j, "relations"));
    if (relations.ring() != ring) {
        throw precondition_error("presentation ring " + ring.tag() +
                                 " does not match relation matrix ring " + relations.ring().tag());
    }
    return Presentation(ring, gens.get<std::size_t>(), std::move(relations));
}

}  // namespace exalg::io
