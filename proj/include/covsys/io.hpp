#pragma once

#include <string>
#include <string_view>

#include "covsys/ecs.hpp"
#include "covsys/reduction.hpp"

namespace covsys {

/// Canonical text format: one "residue modulus" pair per line, '#' starts a
/// comment, blank lines ignored. Raw residues may be any integer; parsing
/// normalizes. Throws ParseError with a line/column diagnostic.
Ecs parse_ecs_text(std::string_view text);

/// JSON format: {"classes": [[residue, modulus], ...]}.
Ecs parse_ecs_json(std::string_view text);

/// Detect the format from the first non-space character ('{' means JSON).
Ecs parse_ecs_auto(std::string_view text);

std::string format_ecs_text(const Ecs& system);
std::string format_ecs_json(const Ecs& system);

/// Trace format: {"steps": [{"residue": a, "modulus": t, "prime": p}, ...]},
/// coarse to fine.
std::string format_trace_json(const ReductionTrace& trace);
ReductionTrace parse_trace_json(std::string_view text);

} // namespace covsys
