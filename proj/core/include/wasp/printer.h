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
#ifndef WASP_PRINTER_H
#define WASP_PRINTER_H

#include <string>

#include <wasp/ast.h>

namespace wasp {

// Canonical text forms. parse(toText(x)) is structurally equal to x, and
// toText(parse(toText(x))) == toText(x). Parentheses are emitted only where
// precedence requires them.
std::string toText(const Term& t);
std::string toText(const Atom& a);
std::string toText(const FormulaPtr& f);
std::string toText(const WfPtr& wf);
std::string toText(const Constraint& c);
std::string toText(const HeadLiteral& h);
std::string toText(const BodyLiteral& b);
std::string toText(const Rule& r);
std::string toText(const Program& p);

} // namespace wasp

#endif
