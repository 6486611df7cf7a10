#pragma once

#include "ast.hpp"

#include <vector>

namespace gvc {

struct TypecheckResult {
    std::vector<Diagnostic> errors;
    bool ok() const { return errors.empty(); }
};

/// Resolves names, checks arities and sorts, validates `?` placement, and
/// annotates every expression with its type. Mutates the program in place.
TypecheckResult typecheck(Program& program);

} // namespace gvc
