#pragma once

#include "source.hpp"

#include <memory>
#include <string>
#include <vector>

namespace gvc {

struct TermNode;
using TermPtr = std::shared_ptr<const TermNode>;

// ---------------------------------------------------------------------------
// Types
// ---------------------------------------------------------------------------

struct Type {
    enum class Kind { Invalid, Int, Bool, Record, Null };
    Kind kind = Kind::Invalid;
    std::string record; // Kind::Record only

    static Type intType() { return {Kind::Int, {}}; }
    static Type boolType() { return {Kind::Bool, {}}; }
    static Type recordType(std::string name) { return {Kind::Record, std::move(name)}; }
    static Type nullType() { return {Kind::Null, {}}; }

    bool isRef() const { return kind == Kind::Record || kind == Kind::Null; }
    bool operator==(const Type&) const = default;
};

std::string typeName(const Type& t);

// ---------------------------------------------------------------------------
// Expressions
// ---------------------------------------------------------------------------

enum class UnOp { Neg, Not };
enum class BinOp { Add, Sub, Mul, Eq, Ne, Lt, Le, Gt, Ge, And, Or };

bool isComparisonOp(BinOp op);
std::string binOpSpelling(BinOp op);

struct Expr;
using ExprPtr = std::shared_ptr<Expr>;

/// Expression node. One struct with a kind tag; only the fields relevant to
/// the kind are populated. `type` is filled in by the typechecker.
///
/// SymHole is engine-internal: it wraps an already-evaluated symbolic term
/// and never appears in parser output.
struct Expr {
    enum class Kind {
        IntLit,
        BoolLit,
        NullLit,
        Var,
        Result,      // `result` in postconditions
        FieldAccess, // a->name
        Unary,       // unop a
        Binary,      // a binop b
        Ternary,     // a ? b : c
        Unfolding,   // unfolding name(args) in a
        SymHole,
    };

    Kind kind{};
    SourceLoc loc;
    Type type;

    long long intVal = 0;
    bool boolVal = false;
    std::string name;
    UnOp unop{};
    BinOp binop{};
    ExprPtr a, b, c;
    std::vector<ExprPtr> args;
    TermPtr hole;
};

ExprPtr mkIntLit(long long v, SourceLoc loc = {});
ExprPtr mkBoolLit(bool v, SourceLoc loc = {});
ExprPtr mkNullLit(SourceLoc loc = {});
ExprPtr mkVar(std::string name, SourceLoc loc = {});
ExprPtr mkResult(SourceLoc loc = {});
ExprPtr mkFieldAccess(ExprPtr recv, std::string field, SourceLoc loc = {});
ExprPtr mkUnary(UnOp op, ExprPtr a, SourceLoc loc = {});
ExprPtr mkBinary(BinOp op, ExprPtr a, ExprPtr b, SourceLoc loc = {});
ExprPtr mkTernary(ExprPtr cond, ExprPtr t, ExprPtr f, SourceLoc loc = {});
ExprPtr mkUnfolding(std::string pred, std::vector<ExprPtr> args, ExprPtr body, SourceLoc loc = {});
ExprPtr mkSymHole(TermPtr t, Type type, SourceLoc loc = {});

// ---------------------------------------------------------------------------
// Formulas
// ---------------------------------------------------------------------------

struct Formula;
using FormulaPtr = std::shared_ptr<Formula>;

/// Specification formula. `?` parses to Imprecise; a bare `?` gets a
/// synthetic `true` as its rest so the engine never sees a null child.
struct Formula {
    enum class Kind {
        Imprecise, // ? && f1
        Bool,      // expr
        Acc,       // acc(expr), expr is a FieldAccess
        Pred,      // pred(args)
        And,       // f1 && f2
        Cond,      // expr ? f1 : f2
    };

    Kind kind{};
    SourceLoc loc;
    FormulaPtr f1, f2;
    ExprPtr expr;
    std::string pred;
    std::vector<ExprPtr> args;
};

FormulaPtr mkImprecise(FormulaPtr rest, SourceLoc loc = {});
FormulaPtr mkBoolFormula(ExprPtr e);
FormulaPtr mkAcc(ExprPtr lval, SourceLoc loc = {});
FormulaPtr mkPredFormula(std::string name, std::vector<ExprPtr> args, SourceLoc loc = {});
FormulaPtr mkAndFormula(FormulaPtr a, FormulaPtr b);
FormulaPtr mkCondFormula(ExprPtr cond, FormulaPtr t, FormulaPtr f, SourceLoc loc = {});

/// True if `?` occurs anywhere in the formula, including conditional arms.
bool formulaHasImprecision(const Formula& f);

// ---------------------------------------------------------------------------
// Statements
// ---------------------------------------------------------------------------

struct Stmt;
using StmtPtr = std::shared_ptr<Stmt>;

struct Stmt {
    enum class Kind {
        VarDecl,    // type name;
        Assign,     // target = expr;
        FieldWrite, // lval = expr;
        Alloc,      // target = alloc(record);
        If,         // if (expr) body else elseBody
        While,      // while (expr) invariant formula; body
        Fold,       // fold pred(args);
        Unfold,     // unfold pred(args);
        Assert,     // assert formula;
        Call,       // target = method(args);
        Return,     // return expr;
    };

    Kind kind{};
    SourceLoc loc;

    Type varType;          // VarDecl
    std::string name;      // VarDecl/Assign/Alloc/Call target; Fold/Unfold pred; Call method in `callee`
    std::string callee;    // Call method name; Alloc record name
    ExprPtr lval;          // FieldWrite destination
    ExprPtr expr;          // Assign/FieldWrite rhs, If/While cond, Return value
    FormulaPtr formula;    // While invariant (conjoined), Assert body
    std::vector<ExprPtr> args;
    std::vector<StmtPtr> body, elseBody;
};

// ---------------------------------------------------------------------------
// Declarations
// ---------------------------------------------------------------------------

struct FieldDecl {
    std::string name;
    Type type;
    SourceLoc loc;
};

struct RecordDecl {
    std::string name;
    std::vector<FieldDecl> fields;
    SourceLoc loc;

    const FieldDecl* findField(const std::string& f) const;
};

struct Param {
    std::string name;
    Type type;
    SourceLoc loc;
};

struct PredicateDecl {
    std::string name;
    std::vector<Param> params;
    FormulaPtr body;
    SourceLoc loc;
};

struct MethodDecl {
    std::string name;
    Type returnType;
    std::vector<Param> params;
    FormulaPtr requiresClause; // never null after parsing (defaults to true)
    FormulaPtr ensuresClause;
    std::vector<StmtPtr> body;
    SourceLoc loc;
};

struct Program {
    std::string file;
    std::string text;
    std::vector<RecordDecl> records;
    std::vector<PredicateDecl> predicates;
    std::vector<MethodDecl> methods;

    const RecordDecl* findRecord(const std::string& n) const;
    const PredicateDecl* findPredicate(const std::string& n) const;
    const MethodDecl* findMethod(const std::string& n) const;
};

// ---------------------------------------------------------------------------
// Traversal helpers
// ---------------------------------------------------------------------------

SourceSpan exprSpan(const Expr& e);
SourceSpan formulaSpan(const Formula& f);
SourceSpan stmtSpan(const Stmt& s);

ExprPtr cloneExpr(const ExprPtr& e);
FormulaPtr cloneFormula(const FormulaPtr& f);

/// Simultaneous substitution of variables by replacement expressions.
/// The language has no binders below predicate/method parameters, so the
/// substitution is capture-free by construction; replacements are cloned
/// at every insertion point.
ExprPtr substituteExpr(const ExprPtr& e,
                       const std::vector<std::pair<std::string, ExprPtr>>& map);
FormulaPtr substituteFormula(const FormulaPtr& f,
                             const std::vector<std::pair<std::string, ExprPtr>>& map);

void collectAssignedVars(const std::vector<StmtPtr>& block, std::vector<std::string>& out);

} // namespace gvc
