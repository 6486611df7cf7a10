#include "typecheck.hpp"

#include <map>
#include <set>

namespace gvc {

namespace {

enum class SpecContext { Requires, Ensures, Invariant, PredicateBody, Assert };

class Checker {
public:
    explicit Checker(Program& p) : prog_(p) {}

    TypecheckResult run() {
        collectDecls();
        for (auto& pd : prog_.predicates) checkPredicate(pd);
        for (auto& md : prog_.methods) checkMethod(md);
        return std::move(result_);
    }

private:
    Program& prog_;
    TypecheckResult result_;

    // current scope
    std::map<std::string, Type> vars_;
    const MethodDecl* method_ = nullptr;
    bool resultVisible_ = false;

    void error(SourceLoc loc, std::string msg) {
        result_.errors.push_back(Diagnostic{loc, std::move(msg)});
    }

    void collectDecls() {
        std::set<std::string> names;
        for (const auto& r : prog_.records) {
            if (!names.insert("record " + r.name).second)
                error(r.loc, "duplicate struct '" + r.name + "'");
            std::set<std::string> fieldNames;
            for (const auto& f : r.fields) {
                if (!fieldNames.insert(f.name).second)
                    error(f.loc, "duplicate field '" + f.name + "' in struct " + r.name);
                checkTypeRef(f.type, f.loc);
            }
        }
        for (const auto& p : prog_.predicates) {
            if (!names.insert("pred " + p.name).second)
                error(p.loc, "duplicate predicate '" + p.name + "'");
        }
        for (const auto& m : prog_.methods) {
            if (!names.insert("method " + m.name).second)
                error(m.loc, "duplicate method '" + m.name + "' (overloading is not supported)");
        }
    }

    void checkTypeRef(const Type& t, SourceLoc loc) {
        if (t.kind == Type::Kind::Record && !prog_.findRecord(t.record))
            error(loc, "unknown struct '" + t.record + "'");
    }

    void checkPredicate(PredicateDecl& pd) {
        vars_.clear();
        method_ = nullptr;
        resultVisible_ = false;
        for (const auto& p : pd.params) {
            checkTypeRef(p.type, p.loc);
            if (!vars_.emplace(p.name, p.type).second)
                error(p.loc, "duplicate parameter '" + p.name + "'");
        }
        checkFormula(*pd.body, SpecContext::PredicateBody, /*imprecisionAllowed=*/true);
    }

    void checkMethod(MethodDecl& md) {
        vars_.clear();
        method_ = &md;
        checkTypeRef(md.returnType, md.loc);
        for (const auto& p : md.params) {
            checkTypeRef(p.type, p.loc);
            if (!vars_.emplace(p.name, p.type).second)
                error(p.loc, "duplicate parameter '" + p.name + "'");
        }

        resultVisible_ = false;
        checkFormula(*md.requiresClause, SpecContext::Requires, true);
        resultVisible_ = true;
        checkFormula(*md.ensuresClause, SpecContext::Ensures, true);
        resultVisible_ = false;

        checkBlock(md.body, /*topLevel=*/true);
    }

    // -- statements ---------------------------------------------------------

    void checkBlock(std::vector<StmtPtr>& block, bool topLevel) {
        for (size_t i = 0; i < block.size(); ++i) {
            Stmt& s = *block[i];
            bool last = i + 1 == block.size();
            if (s.kind == Stmt::Kind::Return && !(topLevel && last)) {
                error(s.loc, "'return' is only allowed as the final statement of a method body");
            }
            checkStmt(s);
        }
        if (topLevel) {
            if (block.empty() || block.back()->kind != Stmt::Kind::Return)
                error(method_->loc, "method body must end with a return statement");
        }
    }

    void checkStmt(Stmt& s) {
        switch (s.kind) {
        case Stmt::Kind::VarDecl:
            checkTypeRef(s.varType, s.loc);
            if (!vars_.emplace(s.name, s.varType).second)
                error(s.loc, "redeclaration of '" + s.name + "'");
            break;
        case Stmt::Kind::Assign: {
            Type vt = lookupVar(s.name, s.loc);
            Type et = checkExpr(*s.expr);
            requireAssignable(vt, et, s.loc);
            break;
        }
        case Stmt::Kind::FieldWrite: {
            Type lt = checkExpr(*s.lval);
            Type rt = checkExpr(*s.expr);
            requireAssignable(lt, rt, s.loc);
            break;
        }
        case Stmt::Kind::Alloc: {
            Type vt = lookupVar(s.name, s.loc);
            if (!prog_.findRecord(s.callee)) {
                error(s.loc, "unknown struct '" + s.callee + "'");
            } else {
                requireAssignable(vt, Type::recordType(s.callee), s.loc);
            }
            break;
        }
        case Stmt::Kind::If: {
            requireBool(checkExpr(*s.expr), s.expr->loc);
            checkBlock(s.body, false);
            checkBlock(s.elseBody, false);
            break;
        }
        case Stmt::Kind::While: {
            requireBool(checkExpr(*s.expr), s.expr->loc);
            checkFormula(*s.formula, SpecContext::Invariant, true);
            checkBlock(s.body, false);
            break;
        }
        case Stmt::Kind::Fold:
        case Stmt::Kind::Unfold:
            checkPredicateInstance(s.name, s.args, s.loc);
            break;
        case Stmt::Kind::Assert:
            checkFormula(*s.formula, SpecContext::Assert, /*imprecisionAllowed=*/false);
            break;
        case Stmt::Kind::Call: {
            Type vt = lookupVar(s.name, s.loc);
            const MethodDecl* callee = prog_.findMethod(s.callee);
            if (!callee) {
                error(s.loc, "unknown method '" + s.callee + "'");
                break;
            }
            if (callee->params.size() != s.args.size()) {
                error(s.loc, "method '" + s.callee + "' expects " +
                                 std::to_string(callee->params.size()) + " arguments, got " +
                                 std::to_string(s.args.size()));
                break;
            }
            for (size_t i = 0; i < s.args.size(); ++i) {
                Type at = checkExpr(*s.args[i]);
                requireAssignable(callee->params[i].type, at, s.args[i]->loc);
            }
            requireAssignable(vt, callee->returnType, s.loc);
            break;
        }
        case Stmt::Kind::Return: {
            Type rt = checkExpr(*s.expr);
            requireAssignable(method_->returnType, rt, s.loc);
            break;
        }
        }
    }

    // -- formulas -------------------------------------------------------------

    void checkFormula(Formula& f, SpecContext ctx, bool imprecisionAllowed) {
        switch (f.kind) {
        case Formula::Kind::Imprecise:
            if (!imprecisionAllowed || ctx == SpecContext::Assert)
                error(f.loc, "'?' is not allowed here");
            // A nested `?` below this point would mean two per conjunction.
            checkFormula(*f.f1, ctx, false);
            break;
        case Formula::Kind::Bool:
            requireBool(checkExpr(*f.expr), f.expr->loc);
            break;
        case Formula::Kind::Acc: {
            Type t = checkExpr(*f.expr);
            (void)t;
            if (f.expr->kind != Expr::Kind::FieldAccess) {
                error(f.loc, "acc() takes a field access");
            }
            break;
        }
        case Formula::Kind::Pred:
            checkPredicateInstance(f.pred, f.args, f.loc);
            break;
        case Formula::Kind::And:
            checkFormula(*f.f1, ctx, false);
            checkFormula(*f.f2, ctx, false);
            break;
        case Formula::Kind::Cond: {
            requireBool(checkExpr(*f.expr), f.expr->loc);
            // Arms are formula roots again, so a leading `?` is fine there
            // (outside asserts).
            bool armImprecision = ctx != SpecContext::Assert;
            checkFormula(*f.f1, ctx, armImprecision);
            checkFormula(*f.f2, ctx, armImprecision);
            break;
        }
        }
    }

    void checkPredicateInstance(const std::string& name, std::vector<ExprPtr>& args,
                                SourceLoc loc) {
        const PredicateDecl* pd = prog_.findPredicate(name);
        if (!pd) {
            error(loc, "unknown predicate '" + name + "'");
            for (auto& a : args) checkExpr(*a);
            return;
        }
        if (pd->params.size() != args.size()) {
            error(loc, "predicate '" + name + "' expects " +
                           std::to_string(pd->params.size()) + " arguments, got " +
                           std::to_string(args.size()));
        }
        for (size_t i = 0; i < args.size(); ++i) {
            Type at = checkExpr(*args[i]);
            if (i < pd->params.size()) requireAssignable(pd->params[i].type, at, args[i]->loc);
        }
    }

    // -- expressions ------------------------------------------------------------

    Type lookupVar(const std::string& name, SourceLoc loc) {
        auto it = vars_.find(name);
        if (it == vars_.end()) {
            error(loc, "unknown name '" + name + "'");
            return Type{};
        }
        return it->second;
    }

    void requireBool(const Type& t, SourceLoc loc) {
        if (t.kind != Type::Kind::Bool && t.kind != Type::Kind::Invalid)
            error(loc, "expected a bool expression, got " + typeName(t));
    }

    void requireAssignable(const Type& target, const Type& value, SourceLoc loc) {
        if (target.kind == Type::Kind::Invalid || value.kind == Type::Kind::Invalid) return;
        if (target == value) return;
        if (target.kind == Type::Kind::Record && value.kind == Type::Kind::Null) return;
        error(loc, "type mismatch: expected " + typeName(target) + ", got " + typeName(value));
    }

    bool comparable(const Type& a, const Type& b) {
        if (a.kind == Type::Kind::Invalid || b.kind == Type::Kind::Invalid) return true;
        if (a == b) return a.kind != Type::Kind::Null || true;
        if (a.isRef() && b.isRef()) {
            return a.kind == Type::Kind::Null || b.kind == Type::Kind::Null || a == b;
        }
        return false;
    }

    Type checkExpr(Expr& e) {
        Type t = checkExprInner(e);
        e.type = t;
        return t;
    }

    Type checkExprInner(Expr& e) {
        switch (e.kind) {
        case Expr::Kind::IntLit:
            return Type::intType();
        case Expr::Kind::BoolLit:
            return Type::boolType();
        case Expr::Kind::NullLit:
            return Type::nullType();
        case Expr::Kind::Var:
            return lookupVar(e.name, e.loc);
        case Expr::Kind::Result:
            if (!resultVisible_ || !method_) {
                error(e.loc, "'result' is only allowed in ensures clauses");
                return Type{};
            }
            return method_->returnType;
        case Expr::Kind::SymHole:
            return e.type;
        case Expr::Kind::FieldAccess: {
            Type rt = checkExpr(*e.a);
            if (rt.kind == Type::Kind::Invalid) return Type{};
            if (rt.kind != Type::Kind::Record) {
                error(e.loc, "field access on non-struct value of type " + typeName(rt));
                return Type{};
            }
            const RecordDecl* rd = prog_.findRecord(rt.record);
            if (!rd) return Type{};
            const FieldDecl* fd = rd->findField(e.name);
            if (!fd) {
                error(e.loc, "struct " + rt.record + " has no field '" + e.name + "'");
                return Type{};
            }
            return fd->type;
        }
        case Expr::Kind::Unary: {
            Type at = checkExpr(*e.a);
            if (e.unop == UnOp::Neg) {
                if (at.kind != Type::Kind::Int && at.kind != Type::Kind::Invalid)
                    error(e.loc, "unary '-' needs an int operand");
                return Type::intType();
            }
            requireBool(at, e.a->loc);
            return Type::boolType();
        }
        case Expr::Kind::Binary: {
            Type at = checkExpr(*e.a);
            Type bt = checkExpr(*e.b);
            switch (e.binop) {
            case BinOp::Add:
            case BinOp::Sub:
            case BinOp::Mul:
                if (at.kind != Type::Kind::Int && at.kind != Type::Kind::Invalid)
                    error(e.a->loc, "arithmetic needs int operands");
                if (bt.kind != Type::Kind::Int && bt.kind != Type::Kind::Invalid)
                    error(e.b->loc, "arithmetic needs int operands");
                return Type::intType();
            case BinOp::Lt:
            case BinOp::Le:
            case BinOp::Gt:
            case BinOp::Ge:
                if (at.kind != Type::Kind::Int && at.kind != Type::Kind::Invalid)
                    error(e.a->loc, "comparison needs int operands");
                if (bt.kind != Type::Kind::Int && bt.kind != Type::Kind::Invalid)
                    error(e.b->loc, "comparison needs int operands");
                return Type::boolType();
            case BinOp::Eq:
            case BinOp::Ne:
                if (!comparable(at, bt))
                    error(e.loc, "cannot compare " + typeName(at) + " with " + typeName(bt));
                return Type::boolType();
            case BinOp::And:
            case BinOp::Or:
                requireBool(at, e.a->loc);
                requireBool(bt, e.b->loc);
                return Type::boolType();
            }
            return Type{};
        }
        case Expr::Kind::Ternary: {
            requireBool(checkExpr(*e.a), e.a->loc);
            Type t = checkExpr(*e.b);
            Type f = checkExpr(*e.c);
            if (t.kind == Type::Kind::Null && f.isRef()) return f;
            if (f.kind == Type::Kind::Null && t.isRef()) return t;
            if (!(t == f) && t.kind != Type::Kind::Invalid && f.kind != Type::Kind::Invalid)
                error(e.loc, "branches of '?:' have different types: " + typeName(t) +
                                 " vs " + typeName(f));
            return t.kind == Type::Kind::Invalid ? f : t;
        }
        case Expr::Kind::Unfolding: {
            checkPredicateInstance(e.name, e.args, e.loc);
            return checkExpr(*e.a);
        }
        }
        return Type{};
    }
};

} // namespace

TypecheckResult typecheck(Program& program) {
    Checker c(program);
    return c.run();
}

} // namespace gvc
