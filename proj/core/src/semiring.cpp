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
#include <wasp/semiring.h>

#include <wasp/error.h>

#include <algorithm>

namespace wasp {

namespace {

using Int = boost::multiprecision::cpp_int;

bool allDigits(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    return std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

} // namespace

std::span<const Semiring* const> Semiring::catalog() {
    static const Semiring storage[7] = {
        Semiring(Ring::boolean, "bool"),  Semiring(Ring::naturals, "nat"),
        Semiring(Ring::integers, "int"),  Semiring(Ring::rationals, "rat"),
        Semiring(Ring::tropical, "trop"), Semiring(Ring::maxplus, "maxplus"),
        Semiring(Ring::fuzzy, "fuzzy"),
    };
    static const Semiring* const pointers[7] = {&storage[0], &storage[1], &storage[2], &storage[3],
                                                &storage[4], &storage[5], &storage[6]};
    return std::span<const Semiring* const>(pointers, 7);
}

const Semiring& Semiring::byName(std::string_view id) {
    for (const Semiring* s : catalog()) {
        if (s->name() == id) {
            return *s;
        }
    }
    throw Error(Errc::unknown_semiring, "unknown semiring '" + std::string(id) + "'");
}

Value Semiring::zero() const {
    switch (ring_) {
        case Ring::boolean : return Value::boolean(false);
        case Ring::tropical: return Value::posInf(ring_);
        case Ring::maxplus : return Value::negInf(ring_);
        default            : return Value::finite(ring_, Rational(0));
    }
}

Value Semiring::one() const {
    switch (ring_) {
        case Ring::boolean: return Value::boolean(true);
        case Ring::tropical:
        case Ring::maxplus: return Value::finite(ring_, Rational(0));
        default           : return Value::finite(ring_, Rational(1));
    }
}

void Semiring::checkOperand(const Value& v) const {
    if (v.ring() != ring_) {
        throw Error(Errc::carrier_mismatch, std::string("value from semiring ") + ringName(v.ring()) +
                                                " used in " + name_);
    }
}

Value Semiring::add(const Value& a, const Value& b) const {
    checkOperand(a);
    checkOperand(b);
    switch (ring_) {
        case Ring::boolean:
            return Value::boolean(a.truth() || b.truth());
        case Ring::naturals:
        case Ring::integers:
        case Ring::rationals:
            return Value::finite(ring_, a.number() + b.number());
        case Ring::tropical: // min
            if (a.isPosInf()) {
                return b;
            }
            if (b.isPosInf()) {
                return a;
            }
            return a.number() <= b.number() ? a : b;
        case Ring::maxplus: // max
            if (a.isNegInf()) {
                return b;
            }
            if (b.isNegInf()) {
                return a;
            }
            return a.number() >= b.number() ? a : b;
        case Ring::fuzzy: // max
            return a.number() >= b.number() ? a : b;
    }
    throw Error(Errc::bad_argument, "corrupt semiring");
}

Value Semiring::mul(const Value& a, const Value& b) const {
    checkOperand(a);
    checkOperand(b);
    switch (ring_) {
        case Ring::boolean:
            return Value::boolean(a.truth() && b.truth());
        case Ring::naturals:
        case Ring::integers:
        case Ring::rationals:
        case Ring::fuzzy:
            return Value::finite(ring_, a.number() * b.number());
        case Ring::tropical: // arithmetic +, inf absorbing
            if (a.isPosInf() || b.isPosInf()) {
                return Value::posInf(ring_);
            }
            return Value::finite(ring_, a.number() + b.number());
        case Ring::maxplus: // arithmetic +, -inf absorbing
            if (a.isNegInf() || b.isNegInf()) {
                return Value::negInf(ring_);
            }
            return Value::finite(ring_, a.number() + b.number());
    }
    throw Error(Errc::bad_argument, "corrupt semiring");
}

Value Semiring::sum(std::span<const Value> values) const {
    Value acc = zero();
    for (const Value& v : values) {
        acc = add(acc, v);
    }
    return acc;
}

Semiring::Cmp Semiring::compare(const Value& a, const Value& b) const {
    if (!ordered()) {
        throw Error(Errc::order_unsupported, std::string("semiring ") + name_ + " declares no order");
    }
    checkOperand(a);
    checkOperand(b);
    auto rank = [](const Value& v) { return v.isNegInf() ? -1 : v.isPosInf() ? 1 : 0; };
    int ra = rank(a), rb = rank(b);
    if (ra != rb) {
        return ra < rb ? Cmp::less : Cmp::greater;
    }
    if (ra != 0) {
        return Cmp::equal;
    }
    if (a.number() < b.number()) {
        return Cmp::less;
    }
    return a.number() == b.number() ? Cmp::equal : Cmp::greater;
}

Value Semiring::parse(std::string_view text) const {
    if (ring_ == Ring::boolean) {
        if (text == "true") {
            return Value::boolean(true);
        }
        if (text == "false") {
            return Value::boolean(false);
        }
        throw Error(Errc::malformed_value, "bad boolean literal '" + std::string(text) + "'");
    }
    bool negative = false;
    std::string_view body = text;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    if (body == "inf") {
        // Carrier membership of the infinities is ring specific.
        return negative ? Value::negInf(ring_) : Value::posInf(ring_);
    }
    std::string_view num = body, den;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        num = body.substr(0, slash);
        den = body.substr(slash + 1);
        if (!allDigits(den)) {
            throw Error(Errc::malformed_value, "bad literal '" + std::string(text) + "'");
        }
    }
    if (!allDigits(num)) {
        throw Error(Errc::malformed_value, "bad literal '" + std::string(text) + "'");
    }
    Int numerator{std::string(num)};
    Int denominator = den.empty() ? Int(1) : Int(std::string(den));
    if (denominator == 0) {
        throw Error(Errc::malformed_value, "zero denominator in '" + std::string(text) + "'");
    }
    if (negative) {
        numerator = -numerator;
    }
    return Value::finite(ring_, Rational(numerator, denominator));
}

} // namespace wasp
