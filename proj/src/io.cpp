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

#include "qorder/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace qorder::io {

namespace {

template <typename T>
T get_field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw ParseError(std::string("missing field '") + key + "'");
    }
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ParseError(std::string("field '") + key + "': " + e.what());
    }
}

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(first, last - first + 1));
}

}  // namespace

json program_to_json(const OrderProgram& program) {
    return json{{"n", program.size()},
                {"kind", std::string(to_string(program.kind()))},
                {"branching", program.branching()},
                {"ranks", program.ranks()}};
}

OrderProgram program_from_json(const json& j) {
    auto ranks = get_field<std::vector<int>>(j, "ranks");
    const auto kind = j.contains("kind") ? parse_program_kind(get_field<std::string>(j, "kind"))
                                         : ProgramKind::custom;
    const int branching = j.contains("branching") ? get_field<int>(j, "branching") : 2;
    if (j.contains("n") && get_field<std::size_t>(j, "n") != ranks.size()) {
        throw ParseError("program 'n' does not match the number of ranks");
    }
    return OrderProgram(std::move(ranks), kind, branching);
}

json qubo_to_json(const QuboInstance& inst, const std::vector<double>* values,
                  const OrderProgram* program) {
    const auto& R = inst.R();
    json rows = json::array();
    for (Eigen::Index i = 0; i < R.rows(); ++i) {
        std::vector<double> row(static_cast<std::size_t>(R.cols()));
        for (Eigen::Index k = 0; k < R.cols(); ++k) row[static_cast<std::size_t>(k)] = R(i, k);
        rows.push_back(std::move(row));
    }
    std::vector<double> r(inst.r().data(), inst.r().data() + inst.r().size());
    json j{{"n", inst.source_n()},
           {"lambda_r", inst.lambda_r()},
           {"lambda_c", inst.lambda_c()},
           {"normalized", inst.normalized()},
           {"R", std::move(rows)},
           {"r", std::move(r)}};
    if (values != nullptr) j["x"] = *values;
    if (program != nullptr) j["program"] = program_to_json(*program);
    return j;
}

QuboFile qubo_from_json(const json& j) {
    const auto n = get_field<std::size_t>(j, "n");
    const auto rows = get_field<std::vector<std::vector<double>>>(j, "R");
    const auto r = get_field<std::vector<double>>(j, "r");
    const std::size_t dim = r.size();
    if (rows.size() != dim) throw ParseError("'R' and 'r' dimensions differ");
    Matrix R(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t i = 0; i < dim; ++i) {
        if (rows[i].size() != dim) throw ParseError("'R' is not square");
        for (std::size_t k = 0; k < dim; ++k) {
            R(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = rows[i][k];
        }
    }
    Vector rv = Eigen::Map<const Vector>(r.data(), static_cast<Eigen::Index>(dim));
    QuboFile file{QuboInstance(n, std::move(R), std::move(rv), get_field<double>(j, "lambda_r"),
                               get_field<double>(j, "lambda_c"),
                               get_field<bool>(j, "normalized")),
                  std::nullopt, std::nullopt};
    if (j.contains("x")) file.values = get_field<std::vector<double>>(j, "x");
    if (j.contains("program")) file.program = program_from_json(j.at("program"));
    if (file.values && file.values->size() != n) throw ParseError("'x' length differs from 'n'");
    if (file.program && file.program->size() != n) {
        throw ParseError("'program' length differs from 'n'");
    }
    return file;
}

std::vector<double> parse_values(std::string_view text) {
    const std::string body = trim(text);
    if (!body.empty() && body.front() == '[') {
        const json j = parse_json(body);
        try {
            return j.get<std::vector<double>>();
        } catch (const json::exception& e) {
            throw ParseError(std::string("values must be an array of numbers: ") + e.what());
        }
    }
    std::vector<double> values;
    std::istringstream lines(body);
    std::string line;
    while (std::getline(lines, line)) {
        const std::string item = trim(line);
        if (item.empty()) continue;
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size()) throw ParseError("not a number: '" + item + "'");
        values.push_back(v);
    }
    return values;
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

std::string render_state(std::span<const int> s) {
    std::string out;
    out.reserve(2 * s.size());
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (k > 0) out.push_back(' ');
        out.push_back(s[k] > 0 ? '+' : '-');
    }
    return out;
}

std::string render_trace(const SolverTrace& trace) {
    std::string out;
    char buffer[64];
    for (const auto& step : trace.steps) {
        std::snprintf(buffer, sizeof buffer, "%4d  ", step.t);
        out += buffer;
        out += render_state(step.state);
        std::snprintf(buffer, sizeof buffer, "  %.1f\n", step.energy);
        out += buffer;
    }
    return out;
}

}  // namespace qorder::io
