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
#ifndef WASP_SEMIRING_H
#define WASP_SEMIRING_H

#include <wasp/value.h>

#include <span>
#include <string_view>
#include <vector>

namespace wasp {

// A semiring (R, add, mul, zero, one): addition forms a commutative monoid,
// multiplication a monoid, multiplication distributes over addition on both
// sides, and zero annihilates. The catalog is fixed; descriptors are
// immutable and all operations are pure, so they are safe to share between
// threads.
//
//   id        carrier                     add   mul   zero    one
//   bool      {false, true}               or    and   false   true
//   nat       naturals                    +     *     0       1
//   int       integers                    +     *     0       1
//   rat       rationals                   +     *     0       1
//   trop      [0, inf]                    min   +     inf     0
//   maxplus   rationals with -inf         max   +     -inf    0
//   fuzzy     [0, 1]                      max   *     0       1
//
// The numeric carriers are totally ordered (infinities at the ends); the
// boolean carrier declares no order, so compare() fails on it.
class Semiring {
public:
    enum class Cmp { less, equal, greater };

    // Catalog lookup by identifier; throws unknown_semiring.
    static const Semiring& byName(std::string_view id);
    static std::span<const Semiring* const> catalog();

    std::string_view name() const { return name_; }
    Ring ring() const { return ring_; }

    Value zero() const;
    Value one() const;

    Value add(const Value& a, const Value& b) const;
    Value mul(const Value& a, const Value& b) const;

    // Fold of add over a sequence, starting from zero(). Addition is
    // commutative and associative, so the result is order independent.
    Value sum(std::span<const Value> values) const;

    bool ordered() const { return ring_ != Ring::boolean; }
    // Total order on the carrier; throws order_unsupported for bool.
    Cmp compare(const Value& a, const Value& b) const;

    // Exact parse of a carrier element: "15", "-3", "3/7", "inf", "-inf",
    // "true"/"false". Rejects malformed literals and values outside the
    // carrier.
    Value parse(std::string_view text) const;

    bool contains(const Value& v) const { return inCarrier(ring_, v); }
    bool supportsExactDivision() const { return ring_ == Ring::rationals; }

private:
    Semiring(Ring ring, const char* name) : ring_(ring), name_(name) {}
    void checkOperand(const Value& v) const;

    Ring ring_;
    const char* name_;
};

} // namespace wasp

#endif
