//
// Copyright 2026 The wasp authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
#ifndef WASP_ERROR_H
#define WASP_ERROR_H

#include <stdexcept>
#include <string>

namespace wasp {

// Machine-readable error categories. Anything lexical or surface-level maps
// to a usage/parse failure (exit code 1 in the CLI); the rest are semantic
// failures (exit code 2).
enum class Errc {
    syntax_error,      // program/formula text does not parse
    malformed_value,   // bad literal or value outside the carrier
    unknown_semiring,  // identifier not in the catalog
    bad_argument,      // unusable CLI/API argument
    io_error,          // file not readable

    carrier_mismatch,   // value from a different semiring
    order_unsupported,  // comparison on an unordered semiring
    non_ground,         // variables or unexpanded quantifiers at eval time
    capacity_exceeded,  // universe too large for exhaustive search
    unsafe_program,     // safety check failed
    missing_domain,     // variable has no inferable domain
    missing_weight,     // weight function undefined on a constant
    variable_capture,   // quantifier expansion would capture a variable
    bad_fragment,       // program outside the required fragment
    inconsistent,       // no answer set where one is required
    zero_mass,          // normalization over total weight zero
    negative_weight,    // normalization over a negative weight
    bad_aggregate,      // formula is not a temporal aggregate
    out_of_range,       // time point outside the stream horizon
};

const char* errcName(Errc code);

// True for error codes the CLI reports as usage/parse failures (exit 1).
bool isUsageError(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, std::string message) : std::runtime_error(std::move(message)), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

} // namespace wasp

#endif
