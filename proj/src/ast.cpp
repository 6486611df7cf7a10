#include "ast.hpp"

#include <algorithm>

namespace gvc {

std::string formatDiagnostic(const std::string& file, const Diagnostic& d) {
    std::string out = file;
    if (d.loc.valid()) {
        out += ":" + std::to_string(d.loc.line) + ":" + std::to_string(d.loc.col);
    }
    out += ": " + d.message;
    return out;
}

std::string typeName(const Type& t) {
    switch (t.kind) {
    case Type::Kind::Int: return "int";
    case Type::Kind::Bool: return "bool";
    case Type::Kind::Record: return "struct " + t.record + " *";
    case Type::Kind::Null: return "null";
    case Type::Kind::Invalid: break;
    }
    return "<invalid>";
}

bool isComparisonOp(BinOp op) {
    switch (op) {
    case BinOp::Eq:
    case BinOp::Ne:
    case BinOp::Lt:
    case BinOp::Le:
    case BinOp::Gt:
    case BinOp::Ge:
        return true;
    default:
        return false;
    }
}

std::string binOpSpelling(BinOp op) {
    switch (op) {
    case BinOp::Add: return "+";
    case BinOp::Sub: return "-";
    case BinOp::Mul: return "*";
    case BinOp::Eq: return "==";
    case BinOp::Ne: return "!=";
    case BinOp::Lt: return "<";
    case BinOp::Le: return "<=";
    case BinOp::Gt: return ">";
    case BinOp::Ge: return ">=";
    case BinOp::And: return "&&";
    case BinOp::Or: return "||";
    }
    return "?";
}

ExprPtr mkIntLit(long long v, SourceLoc loc) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::IntLit;
    e->intVal = v;
    e->loc = loc;
    return e;
}

ExprPtr mkBoolLit(bool v, SourceLoc loc) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::BoolLit;
    e->boolVal = v;
    e->loc = loc;
    return e;
}

ExprPtr mkNullLit(SourceLoc loc) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::NullLit;
    e->loc = loc;
    return e;
}

ExprPtr mkVar(std::string name, SourceLoc loc) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Var;
    e->name = std::move(name);
    e->loc = loc;
    return e;
}

ExprPtr mkResult(SourceLoc loc) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Result;
    e->loc = loc;
    return e;
}

ExprPtr mkFieldAccess(ExprPtr recv, std::string field, SourceLoc loc) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::FieldAccess;
    e->a = std::move(recv);
    e->name = std::move(field);
    e->loc = loc;
    return e;
}

ExprPtr mkUnary(UnOp op, ExprPtr a, SourceLoc loc) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Unary;
    e->unop = op;
    e->a = std::move(a);
    e->loc = loc;
    return e;
}

ExprPtr mkBinary(BinOp op, ExprPtr a, ExprPtr b, SourceLoc loc) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Binary;
    e->binop = op;
    e->a = std::move(a);
    e->b = std::move(b);
    e->loc = loc;
    return e;
}

ExprPtr mkTernary(ExprPtr cond, ExprPtr t, ExprPtr f, SourceLoc loc) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Ternary;
    e->a = std::move(cond);
    e->b = std::move(t);
    e->c = std::move(f);
    e->loc = loc;
    return e;
}

ExprPtr mkUnfolding(std::string pred, std::vector<ExprPtr> args, ExprPtr body, SourceLoc loc) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Unfolding;
    e->name = std::move(pred);
    e->args = std::move(args);
    e->a = std::move(body);
    e->loc = loc;
    return e;
}

ExprPtr mkSymHole(TermPtr t, Type type, SourceLoc loc) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::SymHole;
    e->hole = std::move(t);
    e->type = std::move(type);
    e->loc = loc;
    return e;
}

FormulaPtr mkImprecise(FormulaPtr rest, SourceLoc loc) {
    auto f = std::make_shared<Formula>();
    f->kind = Formula::Kind::Imprecise;
    f->f1 = rest ? std::move(rest) : mkBoolFormula(mkBoolLit(true, loc));
    f->loc = loc;
    return f;
}

FormulaPtr mkBoolFormula(ExprPtr e) {
    auto f = std::make_shared<Formula>();
    f->kind = Formula::Kind::Bool;
    f->loc = e ? e->loc : SourceLoc{};
    f->expr = std::move(e);
    return f;
}

FormulaPtr mkAcc(ExprPtr lval, SourceLoc loc) {
    auto f = std::make_shared<Formula>();
    f->kind = Formula::Kind::Acc;
    f->expr = std::move(lval);
    f->loc = loc;
    return f;
}

FormulaPtr mkPredFormula(std::string name, std::vector<ExprPtr> args, SourceLoc loc) {
    auto f = std::make_shared<Formula>();
    f->kind = Formula::Kind::Pred;
    f->pred = std::move(name);
    f->args = std::move(args);
    f->loc = loc;
    return f;
}

FormulaPtr mkAndFormula(FormulaPtr a, FormulaPtr b) {
    auto f = std::make_shared<Formula>();
    f->kind = Formula::Kind::And;
    f->loc = a ? a->loc : SourceLoc{};
    f->f1 = std::move(a);
    f->f2 = std::move(b);
    return f;
}

FormulaPtr mkCondFormula(ExprPtr cond, FormulaPtr t, FormulaPtr f, SourceLoc loc) {
    auto r = std::make_shared<Formula>();
    r->kind = Formula::Kind::Cond;
    r->expr = std::move(cond);
    r->f1 = std::move(t);
    r->f2 = std::move(f);
    r->loc = loc;
    return r;
}

bool formulaHasImprecision(const Formula& f) {
    switch (f.kind) {
    case Formula::Kind::Imprecise:
        return true;
    case Formula::Kind::Bool:
    case Formula::Kind::Acc:
    case Formula::Kind::Pred:
        return false;
    case Formula::Kind::And:
    case Formula::Kind::Cond:
        return (f.f1 && formulaHasImprecision(*f.f1)) || (f.f2 && formulaHasImprecision(*f.f2));
    }
    return false;
}

const FieldDecl* RecordDecl::findField(const std::string& f) const {
    for (const auto& fd : fields)
        if (fd.name == f) return &fd;
    return nullptr;
}

const RecordDecl* Program::findRecord(const std::string& n) const {
    for (const auto& r : records)
        if (r.name == n) return &r;
    return nullptr;
}

const PredicateDecl* Program::findPredicate(const std::string& n) const {
    for (const auto& p : predicates)
        if (p.name == n) return &p;
    return nullptr;
}

const MethodDecl* Program::findMethod(const std::string& n) const {
    for (const auto& m : methods)
        if (m.name == n) return &m;
    return nullptr;
}

SourceSpan exprSpan(const Expr& e) {
    SourceSpan s;
    s.extend(e.loc);
    for (const auto& child : {e.a, e.b, e.c})
        if (child) s.extend(exprSpan(*child));
    for (const auto& arg : e.args)
        if (arg) s.extend(exprSpan(*arg));
    return s;
}

SourceSpan formulaSpan(const Formula& f) {
    SourceSpan s;
    s.extend(f.loc);
    if (f.expr) s.extend(exprSpan(*f.expr));
    if (f.f1) s.extend(formulaSpan(*f.f1));
    if (f.f2) s.extend(formulaSpan(*f.f2));
    for (const auto& arg : f.args)
        if (arg) s.extend(exprSpan(*arg));
    return s;
}

SourceSpan stmtSpan(const Stmt& s) {
    SourceSpan sp;
    sp.extend(s.loc);
    if (s.lval) sp.extend(exprSpan(*s.lval));
    if (s.expr) sp.extend(exprSpan(*s.expr));
    if (s.formula) sp.extend(formulaSpan(*s.formula));
    for (const auto& a : s.args)
        if (a) sp.extend(exprSpan(*a));
    for (const auto& st : s.body)
        if (st) sp.extend(stmtSpan(*st));
    for (const auto& st : s.elseBody)
        if (st) sp.extend(stmtSpan(*st));
    return sp;
}

ExprPtr cloneExpr(const ExprPtr& e) {
    if (!e) return nullptr;
    auto c = std::make_shared<Expr>(*e);
    c->a = cloneExpr(e->a);
    c->b = cloneExpr(e->b);
    c->c = cloneExpr(e->c);
    c->args.clear();
    for (const auto& arg : e->args) c->args.push_back(cloneExpr(arg));
    return c;
}

FormulaPtr cloneFormula(const FormulaPtr& f) {
    if (!f) return nullptr;
    auto c = std::make_shared<Formula>(*f);
    c->f1 = cloneFormula(f->f1);
    c->f2 = cloneFormula(f->f2);
    c->expr = cloneExpr(f->expr);
    c->args.clear();
    for (const auto& arg : f->args) c->args.push_back(cloneExpr(arg));
    return c;
}

ExprPtr substituteExpr(const ExprPtr& e,
                       const std::vector<std::pair<std::string, ExprPtr>>& map) {
    if (!e) return nullptr;
    if (e->kind == Expr::Kind::Var) {
        for (const auto& [name, repl] : map) {
            if (e->name == name) return cloneExpr(repl);
        }
        return cloneExpr(e);
    }
    auto c = std::make_shared<Expr>(*e);
    c->a = substituteExpr(e->a, map);
    c->b = substituteExpr(e->b, map);
    c->c = substituteExpr(e->c, map);
    c->args.clear();
    for (const auto& arg : e->args) c->args.push_back(substituteExpr(arg, map));
    return c;
}

FormulaPtr substituteFormula(const FormulaPtr& f,
                             const std::vector<std::pair<std::string, ExprPtr>>& map) {
    if (!f) return nullptr;
    auto c = std::make_shared<Formula>(*f);
    c->f1 = substituteFormula(f->f1, map);
    c->f2 = substituteFormula(f->f2, map);
    c->expr = substituteExpr(f->expr, map);
    c->args.clear();
    for (const auto& arg : f->args) c->args.push_back(substituteExpr(arg, map));
    return c;
}

void collectAssignedVars(const std::vector<StmtPtr>& block, std::vector<std::string>& out) {
    auto add = [&out](const std::string& n) {
        if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
    };
    for (const auto& s : block) {
        if (!s) continue;
        switch (s->kind) {
        case Stmt::Kind::VarDecl:
        case Stmt::Kind::Assign:
        case Stmt::Kind::Alloc:
        case Stmt::Kind::Call:
            add(s->name);
            break;
        case Stmt::Kind::If:
        case Stmt::Kind::While:
            collectAssignedVars(s->body, out);
            collectAssignedVars(s->elseBody, out);
            break;
        default:
            break;
        }
    }
}

} // namespace gvc
