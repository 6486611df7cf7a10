#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace gvc {

enum class Sort { Int, Bool, Ref, Snap };

std::string sortName(Sort s);

enum class TermOp { Add, Sub, Mul, Neg, Eq, Ne, Lt, Le, Gt, Ge, Not };

struct TermNode;
using TermPtr = std::shared_ptr<const TermNode>;

/// Sorted first-order term. Immutable; shared freely across states.
struct TermNode {
    enum class Kind { IntLit, BoolLit, NullLit, Sym, App, SnapUnit, SnapPair };

    Kind kind{};
    Sort sort = Sort::Int;

    long long intVal = 0;
    bool boolVal = false;
    std::uint64_t symId = 0;
    std::string hint; // debug name for symbols
    TermOp op{};
    std::vector<TermPtr> args;
};

TermPtr mkIntTerm(long long v);
TermPtr mkBoolTerm(bool v);
TermPtr mkNullTerm();
TermPtr mkSnapUnit();
TermPtr mkSnapPair(TermPtr a, TermPtr b);

/// Builds an application, constant-folding literal operands and a few
/// structural identities (x == x, !!x). Result sorts follow the operator.
TermPtr mkApp(TermOp op, std::vector<TermPtr> args);

TermPtr mkNot(TermPtr t);
TermPtr mkEq(TermPtr a, TermPtr b);

bool termEquals(const TermPtr& a, const TermPtr& b);
bool termVectorEquals(const std::vector<TermPtr>& a, const std::vector<TermPtr>& b);

/// Stable structural key; used for hashing and deterministic printing.
std::string termKey(const TermPtr& t);

/// Human-readable rendering for traces and test failures.
std::string termToString(const TermPtr& t);

/// Monotone counter handing out distinct symbols. One supply per
/// verification run keeps ids reproducible.
class SymbolSupply {
public:
    TermPtr fresh(Sort sort, const std::string& hint = "");
    std::uint64_t issued() const { return next_; }

private:
    std::uint64_t next_ = 0;
};

} // namespace gvc
