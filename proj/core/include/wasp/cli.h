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
#ifndef WASP_CLI_H
#define WASP_CLI_H

#include <ostream>
#include <string>
#include <vector>

namespace wasp::cli {

// Runs one command (args without the program name) and writes a single JSON
// document to `out`; human-readable error text goes to `err`. The document
// and the return value are deterministic for a given input: 0 on success, 1
// on usage or parse errors, 2 on semantic errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace wasp::cli

#endif
