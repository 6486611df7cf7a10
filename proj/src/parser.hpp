#pragma once

#include "ast.hpp"

#include <optional>
#include <string>

namespace gvc {

struct ParseResult {
    std::optional<Program> program;
    std::optional<Diagnostic> error;

    bool ok() const { return program.has_value(); }
};

/// Parse a whole source file. On failure the diagnostic carries the
/// position and the set of expected tokens.
ParseResult parseProgram(const std::string& text, const std::string& file = "<input>");

/// Parse a single expression (used to re-read manifest payloads and
/// branch-context conditions).
struct ExprParseResult {
    ExprPtr expr;
    std::optional<Diagnostic> error;
};
ExprParseResult parseExprFragment(const std::string& text);

} // namespace gvc
