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
#ifndef WASP_PARSER_H
#define WASP_PARSER_H

#include <string_view>
#include <vector>

#include <wasp/ast.h>
#include <wasp/semiring.h>

namespace wasp {

// Parses a full program: directives (#semiring, #domain, #weight) and rules.
// Validates that referenced semirings and domains are declared, that predicate
// arities are consistent, and that quantifiers do not rebind variables.
// Errors carry the position of the first offending token.
Program parseProgram(std::string_view text);

// Parses a classical formula (connectives ~ & | ->, temporal <> [] @t).
FormulaPtr parseFormula(std::string_view text);

// Parses a weighted formula whose weight literals belong to `semiring`.
// `context` (optional) supplies weight-function declarations and domains;
// without it every identifier application is read as an atom. Free variables
// are rejected; pass a context-free fragment through parseConstraint inside
// a rule body when rule variables are intended.
WfPtr parseWeightedFormula(std::string_view text, const Semiring& semiring,
                           const Program* context = nullptr);

// Parses "[value cmp wformula]@semiring". The semiring name is resolved
// against the global catalog; declaredness inside a program is checked by
// parseProgram, not here.
Constraint parseConstraint(std::string_view text, const Program* context = nullptr);

// Parses a comma-separated list of ground atoms ("a, p(1)"), with optional
// surrounding braces. Returns canonical atom keys, order preserved.
std::vector<std::string> parseAtomKeys(std::string_view text);

} // namespace wasp

#endif
