#pragma once

#include "ast.hpp"

#include <functional>
#include <string>

namespace gvc {

struct PrintOptions {
    /// Render `c ? e : false` / `c ? true : e` back as `c && e` / `c || e`.
    /// Used for check payloads built from desugared engine ASTs; off for
    /// program printing so round-trips stay exact.
    bool booleanSugar = false;

    /// Resolver for engine-internal SymHole nodes. Returns the source text
    /// for the wrapped term, or empty when the term has no source form.
    std::function<std::string(const TermPtr&)> holeResolver;
};

/// Thrown when a SymHole cannot be resolved to source text.
struct UnprintableExpr {
    SourceLoc loc;
};

std::string printExpr(const Expr& e, const PrintOptions& opts = {});
std::string printFormula(const Formula& f, const PrintOptions& opts = {});
std::string printType(const Type& t);
std::string printProgram(const Program& p);

} // namespace gvc
