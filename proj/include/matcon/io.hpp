// Copyright 2026 The Authors.
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

#pragma once

#include <string>
#include <string_view>

#include "matcon/matroid.hpp"

namespace matcon {

// Text format, one directive per line, '#' starts a comment:
//
//   matroid <name>
//   type linear|uniform|bases|graphic
//   field <q>               linear only
//   rank <r>                linear only; number of matrix rows
//   elements <label>...     optional
//   <body>
//
// Bodies: linear, r rows of field elements; uniform, "params <r> <n>";
// bases, one basis per line as labels ("-" for the empty basis; ids when no
// elements line is given); graphic, one edge "u v" per line.
//
// Syntax errors throw kParseError with the 1-based line number as detail;
// inconsistent content (bad bases, wrong matrix rank) throws kValidationError.
Matroid parse_matroid(std::string_view text);

// Reads and parses a file. Throws kInvalidArgument if it cannot be read.
Matroid load_matroid(const std::string& path);

// Concrete matroids keep their type; minors and duals are written as basis
// lists. parse_matroid(serialize_matroid(m)) has the rank oracle and labels of
// compact(m).
std::string serialize_matroid(const Matroid& m);

}  // namespace matcon
