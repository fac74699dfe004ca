// Copyright 2026 The qorder Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qorder/core.hpp"

namespace qorder::io {

using json = nlohmann::json;

// Program file:  {"n", "kind", "branching", "ranks"}
// QUBO file:     {"n", "lambda_r", "lambda_c", "normalized", "R", "r"} with R
//                row-major and fully symmetric. Optional "x" (input values)
//                and "program" (a program object) let `solve` report the
//                ordered output.
// All parse failures throw ParseError; invariant violations throw the
// corresponding library error.

json program_to_json(const OrderProgram& program);
OrderProgram program_from_json(const json& j);

struct QuboFile {
    QuboInstance instance;
    std::optional<std::vector<double>> values;
    std::optional<OrderProgram> program;
};

json qubo_to_json(const QuboInstance& inst, const std::vector<double>* values = nullptr,
                  const OrderProgram* program = nullptr);
QuboFile qubo_from_json(const json& j);

/// A JSON array of numbers, or one number per line (blank lines ignored).
std::vector<double> parse_values(std::string_view text);

json parse_json(std::string_view text);
std::string read_file(const std::string& path);

/// "- - + -": one glyph per neuron, '+' active, separated by single spaces.
std::string render_state(std::span<const int> s);

/// One line per step: the step index right-aligned in four columns, two
/// spaces, the rendered state, two spaces, the energy with one decimal.
std::string render_trace(const SolverTrace& trace);

}  // namespace qorder::io
