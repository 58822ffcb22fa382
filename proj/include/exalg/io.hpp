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

#ifndef EXALG_IO_HPP
#define EXALG_IO_HPP

#include <json.hpp>
#include <string>

#include "exalg/fpmodules.hpp"
#include "exalg/linalg.hpp"
#include "exalg/rings.hpp"

namespace exalg::io {

using json = nlohmann::json;

/// Strict optional-sign decimal; no whitespace, no empty string.
Integer integer_from_string(const std::string& text);

/// Integers and residues as decimal strings, rationals as "num/den" with
/// den > 0, polynomials as arrays of coefficient encodings ascending in
/// degree (zero polynomial = []).
json element_to_json(const Element& e);
Element element_from_json(const json& j, const RingDescriptor& ring);

/// {"ring": <tag>, "rows": [[entry, ...], ...]}.
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

/// {"ring": <tag>, "generators": <count>, "relations": <matrix>}.
json presentation_to_json(const Presentation& p);
Presentation presentation_from_json(const json& j);

}  // namespace exalg::io

#endif
