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
#include <wasp/weighted.h>

#include <wasp/error.h>
#include <wasp/printer.h>

namespace wasp {

Value evalWeighted(const WfPtr& alpha, const Interpretation& i, const Semiring& s) {
    switch (alpha->kind) {
        case WeightedFormula::Kind::weight: {
            const Value& k = *alpha->weight;
            if (k.ring() != s.ring()) {
                throw Error(Errc::carrier_mismatch,
                            "weight '" + k.str() + "' does not belong to semiring '" +
                                std::string(s.name()) + "'");
            }
            return k;
        }
        case WeightedFormula::Kind::weight_app:
            throw Error(Errc::missing_weight,
                        "unresolved weight application '" + toText(alpha) + "'");
        case WeightedFormula::Kind::atom_gate:
            if (!alpha->atom.ground()) {
                throw Error(Errc::non_ground, "atom '" + toText(alpha) + "' is not ground");
            }
            return i.contains(alpha->atom) ? s.one() : s.zero();
        case WeightedFormula::Kind::gate: {
            const bool holds = satisfiesClassical(i, alpha->test);
            return (holds != alpha->negated) ? s.one() : s.zero();
        }
        case WeightedFormula::Kind::addition:
            return s.add(evalWeighted(alpha->lhs, i, s), evalWeighted(alpha->rhs, i, s));
        case WeightedFormula::Kind::multiplication:
            return s.mul(evalWeighted(alpha->lhs, i, s), evalWeighted(alpha->rhs, i, s));
        case WeightedFormula::Kind::sum:
        case WeightedFormula::Kind::prod:
            throw Error(Errc::non_ground,
                        "quantifier '" + toText(alpha) + "' must be expanded before evaluation");
        case WeightedFormula::Kind::eventually:
        case WeightedFormula::Kind::always:
            throw Error(Errc::bad_fragment,
                        "temporal operator in '" + toText(alpha) + "' needs a stream evaluator");
    }
    throw Error(Errc::bad_fragment, "unknown weighted formula node");
}

bool evalConstraint(const Constraint& c, const Interpretation& i) {
    const Semiring& s = Semiring::byName(c.semiring);
    const Value v = evalWeighted(c.body, i, s);
    switch (c.cmp) {
        case CmpOp::eq: return c.bound == v;
        case CmpOp::ne: return c.bound != v;
        default: break;
    }
    const Semiring::Cmp r = s.compare(c.bound, v);
    switch (c.cmp) {
        case CmpOp::lt: return r == Semiring::Cmp::less;
        case CmpOp::le: return r != Semiring::Cmp::greater;
        case CmpOp::gt: return r == Semiring::Cmp::greater;
        case CmpOp::ge: return r != Semiring::Cmp::less;
        default: break;
    }
    return false;
}

bool evalConstraintHt(const Constraint& c, const HTInterpretation& ht, World w) {
    if (w == World::there) {
        return evalConstraint(c, ht.there);
    }
    return evalConstraint(c, ht.here) && evalConstraint(c, ht.there);
}

} // namespace wasp
