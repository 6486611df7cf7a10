#pragma once

#include "source.hpp"
#include "term.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gvc {

/// One link of a check's branch context: the source-level condition, where
/// it must be evaluated (its origin), and which way the branch went.
struct ContextEntry {
    std::string condSrc;
    SourceLoc originLoc;
    bool expected = true;

    bool operator==(const ContextEntry&) const = default;
};

enum class CheckKind { Expr, Acc, Predicate, NonNull };

std::string checkKindName(CheckKind k);

/// A residual dynamic obligation. `payload` is source text valid at `loc`
/// once all context conditions (outermost first) have matched.
struct RuntimeCheck {
    SourceLoc loc;
    CheckKind kind{};
    std::string payload;
    std::vector<ContextEntry> context;

    bool operator==(const RuntimeCheck&) const = default;
};

/// Branch taken on the current path, pushed only for undecided conditions.
struct BranchFrame {
    TermPtr cond;
    std::string condSrc;
    SourceLoc originLoc;
    bool expected = true;
};

/// Where the obligations currently being generated semantically originate:
/// the enclosing unfolding / fold / unfold / call site, when inside one.
struct Origin {
    SourceLoc loc;
    std::string site; // short description for traces
};

/// Check collector threaded through the symbolic state.
struct CheckCollector {
    std::vector<RuntimeCheck> checks;
    std::optional<Origin> origin;
    std::vector<BranchFrame> branchContext;

    std::vector<ContextEntry> currentContext() const {
        std::vector<ContextEntry> ctx;
        ctx.reserve(branchContext.size());
        for (const auto& f : branchContext)
            ctx.push_back(ContextEntry{f.condSrc, f.originLoc, f.expected});
        return ctx;
    }
};

} // namespace gvc
