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
#ifndef WASP_VALUE_H
#define WASP_VALUE_H

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace wasp {

// The fixed carrier catalog. All arithmetic is exact: the numeric carriers
// are backed by arbitrary-precision rationals plus explicit infinities where
// the carrier includes them.
enum class Ring {
    boolean,    // ({0,1}, or, and, false, true)
    naturals,   // (N, +, *, 0, 1)
    integers,   // (Z, +, *, 0, 1)
    rationals,  // (Q, +, *, 0, 1)
    tropical,   // ([0, inf], min, +, inf, 0)
    maxplus,    // (Q u {-inf}, max, +, -inf, 0)
    fuzzy,      // ([0, 1], max, *, 0, 1)
};

const char* ringName(Ring r);

using Rational = boost::multiprecision::cpp_rational;

// One element of one carrier. Values are immutable and tagged with the ring
// they belong to; mixing rings in arithmetic is a carrier_mismatch error.
class Value {
public:
    enum class Rep { boolean, finite, pos_inf, neg_inf };

    static Value boolean(bool truth);
    // Throws malformed_value if the number is outside the ring's carrier.
    static Value finite(Ring ring, Rational number);
    static Value posInf(Ring ring); // tropical only
    static Value negInf(Ring ring); // maxplus only

    Ring ring() const { return ring_; }
    Rep rep() const { return rep_; }
    bool isFinite() const { return rep_ == Rep::finite; }
    bool isPosInf() const { return rep_ == Rep::pos_inf; }
    bool isNegInf() const { return rep_ == Rep::neg_inf; }

    bool truth() const;            // boolean carrier
    const Rational& number() const; // finite numeric carriers

    // Exact text form: "true"/"false", integers as "15", rationals as "p/q"
    // in lowest terms, infinities as "inf"/"-inf".
    std::string str() const;

    friend bool operator==(const Value& a, const Value& b);
    friend bool operator!=(const Value& a, const Value& b) { return !(a == b); }

private:
    Value(Ring ring, Rep rep) : ring_(ring), rep_(rep) {}

    Ring ring_;
    Rep rep_;
    bool truth_ = false;
    Rational number_;
};

// True iff the (ring-tagged) payload lies in the declared carrier, e.g. a
// negative number is rejected for naturals and anything outside [0,1] for
// the fuzzy ring.
bool inCarrier(Ring ring, const Value& value);

} // namespace wasp

#endif
