#include "covsys/io.hpp"

#include <cctype>
#include <sstream>

#include <json.hpp>

#include "covsys/error.hpp"

namespace covsys {

namespace {

[[noreturn]] void parse_fail(std::size_t line, std::size_t column, const std::string& message) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ", column " +
                                           std::to_string(column) + ": " + message);
}

// Whitespace-separated signed integer fields on one line.
std::vector<std::pair<i64, std::size_t>> line_fields(const std::string& line, std::size_t lineno) {
    std::vector<std::pair<i64, std::size_t>> fields; // (value, 1-based column)
    std::size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            i++;
            continue;
        }
        if (line[i] == '#') break;
        std::size_t start = i;
        if (line[i] == '-' || line[i] == '+') i++;
        std::size_t digits = 0;
        while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) {
            i++;
            digits++;
        }
        bool terminated = i == line.size() || line[i] == '#' ||
                          std::isspace(static_cast<unsigned char>(line[i]));
        if (digits == 0 || !terminated)
            parse_fail(lineno, start + 1, "expected an integer");
        try {
            fields.emplace_back(std::stoll(line.substr(start, i - start)), start + 1);
        } catch (const std::out_of_range&) {
            parse_fail(lineno, start + 1, "integer out of range");
        }
    }
    return fields;
}

} // namespace

Ecs parse_ecs_text(std::string_view text) {
    std::vector<ResidueClass> classes;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        lineno++;
        auto fields = line_fields(line, lineno);
        if (fields.empty()) continue;
        if (fields.size() != 2)
            parse_fail(lineno, fields.size() == 1 ? line.size() + 1 : fields[2].second,
                       "expected exactly two integers: residue and modulus");
        auto [residue, rcol] = fields[0];
        auto [modulus, mcol] = fields[1];
        if (modulus < 1) parse_fail(lineno, mcol, "modulus must be positive");
        classes.emplace_back(residue, modulus);
    }
    if (classes.empty())
        throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) +
                                               ", column 1: no classes in input");
    return Ecs(std::move(classes));
}

Ecs parse_ecs_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
    if (!doc.is_object() || !doc.contains("classes") || !doc["classes"].is_array())
        throw Error(ErrorCode::ParseError, "expected an object with a \"classes\" array");
    std::vector<ResidueClass> classes;
    for (const auto& entry : doc["classes"]) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() ||
            !entry[1].is_number_integer())
            throw Error(ErrorCode::ParseError, "each class must be an [residue, modulus] pair");
        i64 modulus = entry[1].get<i64>();
        if (modulus < 1) throw Error(ErrorCode::ParseError, "modulus must be positive");
        classes.emplace_back(entry[0].get<i64>(), modulus);
    }
    if (classes.empty()) throw Error(ErrorCode::ParseError, "no classes in input");
    return Ecs(std::move(classes));
}

Ecs parse_ecs_auto(std::string_view text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '{' ? parse_ecs_json(text) : parse_ecs_text(text);
    }
    throw Error(ErrorCode::ParseError, "empty input");
}

std::string format_ecs_text(const Ecs& system) {
    std::string out;
    for (const auto& c : system.classes()) {
        out += std::to_string(c.residue());
        out += ' ';
        out += std::to_string(c.modulus());
        out += '\n';
    }
    return out;
}

std::string format_ecs_json(const Ecs& system) {
    nlohmann::json classes = nlohmann::json::array();
    for (const auto& c : system.classes())
        classes.push_back(nlohmann::json::array({c.residue(), c.modulus()}));
    return nlohmann::json{{"classes", classes}}.dump();
}

std::string format_trace_json(const ReductionTrace& trace) {
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& step : trace.steps) {
        steps.push_back({{"residue", step.parent.residue()},
                         {"modulus", step.parent.modulus()},
                         {"prime", step.prime}});
    }
    return nlohmann::json{{"steps", steps}}.dump();
}

ReductionTrace parse_trace_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
    if (!doc.is_object() || !doc.contains("steps") || !doc["steps"].is_array())
        throw Error(ErrorCode::ParseError, "expected an object with a \"steps\" array");
    ReductionTrace trace;
    for (const auto& entry : doc["steps"]) {
        if (!entry.is_object() || !entry.contains("residue") || !entry.contains("modulus") ||
            !entry.contains("prime"))
            throw Error(ErrorCode::ParseError,
                        "each step needs residue, modulus and prime fields");
        i64 modulus = entry["modulus"].get<i64>();
        i64 prime = entry["prime"].get<i64>();
        if (modulus < 1) throw Error(ErrorCode::ParseError, "step modulus must be positive");
        if (!is_prime(prime)) throw Error(ErrorCode::ParseError, "step arity must be prime");
        trace.steps.push_back(
            SplitStep{ResidueClass(entry["residue"].get<i64>(), modulus), prime});
    }
    return trace;
}

} // namespace covsys
