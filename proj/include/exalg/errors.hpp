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

#ifndef EXALG_ERRORS_HPP
#define EXALG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace exalg {

/// Base class for every error the library raises on purpose.
class error : public std::runtime_error {
   public:
    explicit error(const std::string& message) : std::runtime_error(message) {}
};

/// Malformed input text: bad ring tag syntax, bad element encoding, bad schema.
class parse_error : public error {
   public:
    explicit parse_error(const std::string& message) : error(message) {}
};

/// An operation was requested on a ring that does not support it.
class capability_error : public error {
   public:
    explicit capability_error(const std::string& message) : error(message) {}
};

/// Structurally valid input violating an operation precondition
/// (ring mismatch, shape mismatch, non-prime modulus, zero where nonzero required, ...).
class precondition_error : public error {
   public:
    explicit precondition_error(const std::string& message) : error(message) {}
};

}  // namespace exalg

#endif
