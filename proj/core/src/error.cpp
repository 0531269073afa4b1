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
#include <wasp/error.h>

namespace wasp {

const char* errcName(Errc code) {
    switch (code) {
        case Errc::syntax_error     : return "syntax_error";
        case Errc::malformed_value  : return "malformed_value";
        case Errc::unknown_semiring : return "unknown_semiring";
        case Errc::bad_argument     : return "bad_argument";
        case Errc::io_error         : return "io_error";
        case Errc::carrier_mismatch : return "carrier_mismatch";
        case Errc::order_unsupported: return "order_unsupported";
        case Errc::non_ground       : return "non_ground";
        case Errc::capacity_exceeded: return "capacity_exceeded";
        case Errc::unsafe_program   : return "unsafe_program";
        case Errc::missing_domain   : return "missing_domain";
        case Errc::missing_weight   : return "missing_weight";
        case Errc::variable_capture : return "variable_capture";
        case Errc::bad_fragment     : return "bad_fragment";
        case Errc::inconsistent     : return "inconsistent";
        case Errc::zero_mass        : return "zero_mass";
        case Errc::negative_weight  : return "negative_weight";
        case Errc::bad_aggregate    : return "bad_aggregate";
        case Errc::out_of_range     : return "out_of_range";
    }
    return "unknown";
}

bool isUsageError(Errc code) {
    switch (code) {
        case Errc::syntax_error:
        case Errc::malformed_value:
        case Errc::unknown_semiring:
        case Errc::bad_argument:
        case Errc::io_error:
            return true;
        default:
            return false;
    }
}

} // namespace wasp
