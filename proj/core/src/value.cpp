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
#include <wasp/value.h>

#include <wasp/error.h>

namespace wasp {

const char* ringName(Ring r) {
    switch (r) {
        case Ring::boolean  : return "bool";
        case Ring::naturals : return "nat";
        case Ring::integers : return "int";
        case Ring::rationals: return "rat";
        case Ring::tropical : return "trop";
        case Ring::maxplus  : return "maxplus";
        case Ring::fuzzy    : return "fuzzy";
    }
    return "?";
}

Value Value::boolean(bool truth) {
    Value v(Ring::boolean, Rep::boolean);
    v.truth_ = truth;
    return v;
}

Value Value::finite(Ring ring, Rational number) {
    if (ring == Ring::boolean) {
        throw Error(Errc::malformed_value, "boolean carrier holds no numbers");
    }
    Value v(ring, Rep::finite);
    v.number_ = std::move(number);
    if (!inCarrier(ring, v)) {
        throw Error(Errc::malformed_value,
                    "value " + v.number_.str() + " outside carrier of " + ringName(ring));
    }
    return v;
}

Value Value::posInf(Ring ring) {
    if (ring != Ring::tropical) {
        throw Error(Errc::malformed_value, std::string("carrier of ") + ringName(ring) + " has no inf");
    }
    return Value(ring, Rep::pos_inf);
}

Value Value::negInf(Ring ring) {
    if (ring != Ring::maxplus) {
        throw Error(Errc::malformed_value, std::string("carrier of ") + ringName(ring) + " has no -inf");
    }
    return Value(ring, Rep::neg_inf);
}

bool Value::truth() const {
    if (rep_ != Rep::boolean) {
        throw Error(Errc::carrier_mismatch, "not a boolean value");
    }
    return truth_;
}

const Rational& Value::number() const {
    if (rep_ != Rep::finite) {
        throw Error(Errc::carrier_mismatch, "not a finite numeric value");
    }
    return number_;
}

std::string Value::str() const {
    switch (rep_) {
        case Rep::boolean: return truth_ ? "true" : "false";
        case Rep::pos_inf: return "inf";
        case Rep::neg_inf: return "-inf";
        case Rep::finite : break;
    }
    if (denominator(number_) == 1) {
        return numerator(number_).str();
    }
    return numerator(number_).str() + "/" + denominator(number_).str();
}

bool operator==(const Value& a, const Value& b) {
    if (a.ring_ != b.ring_ || a.rep_ != b.rep_) {
        return false;
    }
    switch (a.rep_) {
        case Value::Rep::boolean: return a.truth_ == b.truth_;
        case Value::Rep::finite : return a.number_ == b.number_;
        default                 : return true;
    }
}

bool inCarrier(Ring ring, const Value& value) {
    if (value.ring() != ring) {
        return false;
    }
    switch (ring) {
        case Ring::boolean:
            return value.rep() == Value::Rep::boolean;
        case Ring::naturals:
            return value.isFinite() && denominator(value.number()) == 1 && value.number() >= 0;
        case Ring::integers:
            return value.isFinite() && denominator(value.number()) == 1;
        case Ring::rationals:
            return value.isFinite();
        case Ring::tropical:
            return value.isPosInf() || (value.isFinite() && value.number() >= 0);
        case Ring::maxplus:
            return value.isNegInf() || value.isFinite();
        case Ring::fuzzy:
            return value.isFinite() && value.number() >= 0 && value.number() <= 1;
    }
    return false;
}

} // namespace wasp
