#pragma once

#include "term.hpp"

#include <vector>

namespace gvc {

enum class Verdict { Valid, Invalid, Unknown };

std::string verdictName(Verdict v);

/// Entailment under a path condition. Valid/Invalid answers must be correct;
/// Unknown is always safe. The engine never relies on completeness.
class Oracle {
public:
    virtual ~Oracle() = default;

    /// Valid: pc entails goal in every model. Invalid: pc entails !goal.
    virtual Verdict entails(const std::vector<TermPtr>& pc, const TermPtr& goal) = 0;

    /// Valid: a model of pc provably exists. Invalid: pc is unsatisfiable.
    virtual Verdict satisfiable(const std::vector<TermPtr>& pc) = 0;
};

/// Built-in decision procedure: congruence closure over Int/Bool/Ref terms
/// (with boolean parity reasoning) plus difference-bound propagation for
/// integer comparisons. Conjunctions outside that fragment yield Unknown.
/// Satisfiability is certified by building and evaluating a candidate model,
/// so a Valid answer is always backed by a witness.
class BuiltinOracle : public Oracle {
public:
    Verdict entails(const std::vector<TermPtr>& pc, const TermPtr& goal) override;
    Verdict satisfiable(const std::vector<TermPtr>& pc) override;

    /// Fixed cap on closure fixpoint rounds; exhaustion degrades to Unknown.
    static constexpr int kMaxRounds = 64;
};

} // namespace gvc
