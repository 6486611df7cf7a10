#include "pretty.hpp"

#include <sstream>

namespace gvc {

namespace {

// Precedence ranks; higher binds tighter.
enum Prec {
    PrecTernary = 0,
    PrecOr = 1,
    PrecAnd = 2,
    PrecEq = 3,
    PrecRel = 4,
    PrecAdd = 5,
    PrecMul = 6,
    PrecUnary = 7,
    PrecPostfix = 8,
};

int binPrec(BinOp op) {
    switch (op) {
    case BinOp::Or: return PrecOr;
    case BinOp::And: return PrecAnd;
    case BinOp::Eq:
    case BinOp::Ne: return PrecEq;
    case BinOp::Lt:
    case BinOp::Le:
    case BinOp::Gt:
    case BinOp::Ge: return PrecRel;
    case BinOp::Add:
    case BinOp::Sub: return PrecAdd;
    case BinOp::Mul: return PrecMul;
    }
    return PrecTernary;
}

class Printer {
public:
    explicit Printer(const PrintOptions& opts) : opts_(opts) {}

    std::string expr(const Expr& e, int parentPrec) {
        switch (e.kind) {
        case Expr::Kind::IntLit:
            return std::to_string(e.intVal);
        case Expr::Kind::BoolLit:
            return e.boolVal ? "true" : "false";
        case Expr::Kind::NullLit:
            return "NULL";
        case Expr::Kind::Var:
            return e.name;
        case Expr::Kind::Result:
            return "result";
        case Expr::Kind::SymHole: {
            if (opts_.holeResolver) {
                std::string s = opts_.holeResolver(e.hole);
                if (!s.empty()) return s;
            }
            throw UnprintableExpr{e.loc};
        }
        case Expr::Kind::FieldAccess:
            return expr(*e.a, PrecPostfix) + "->" + e.name;
        case Expr::Kind::Unary: {
            std::string inner = expr(*e.a, PrecUnary);
            std::string s = (e.unop == UnOp::Neg ? "-" : "!") + inner;
            return parentPrec > PrecUnary ? "(" + s + ")" : s;
        }
        case Expr::Kind::Binary: {
            int p = binPrec(e.binop);
            // Left-assoc: right child needs a strictly higher level.
            std::string s = expr(*e.a, p) + " " + binOpSpelling(e.binop) + " " +
                            expr(*e.b, p + 1);
            return parentPrec > p ? "(" + s + ")" : s;
        }
        case Expr::Kind::Ternary: {
            if (opts_.booleanSugar) {
                if (e.b->kind == Expr::Kind::BoolLit && e.b->boolVal) {
                    // c ? true : x  ==  c || x
                    std::string s = expr(*e.a, PrecOr) + " || " + expr(*e.c, PrecOr + 1);
                    return parentPrec > PrecOr ? "(" + s + ")" : s;
                }
                if (e.c->kind == Expr::Kind::BoolLit && !e.c->boolVal) {
                    // c ? x : false  ==  c && x
                    std::string s = expr(*e.a, PrecAnd) + " && " + expr(*e.b, PrecAnd + 1);
                    return parentPrec > PrecAnd ? "(" + s + ")" : s;
                }
            }
            std::string s = expr(*e.a, PrecOr) + " ? " + expr(*e.b, PrecTernary) +
                            " : " + expr(*e.c, PrecTernary);
            return parentPrec > PrecTernary ? "(" + s + ")" : s;
        }
        case Expr::Kind::Unfolding: {
            std::string s = "unfolding " + e.name + "(" + argList(e.args) + ") in " +
                            expr(*e.a, PrecTernary);
            return parentPrec > PrecTernary ? "(" + s + ")" : s;
        }
        }
        return "<expr>";
    }

    std::string argList(const std::vector<ExprPtr>& args) {
        std::string s;
        for (size_t i = 0; i < args.size(); ++i) {
            if (i) s += ", ";
            s += expr(*args[i], PrecTernary);
        }
        return s;
    }

    // Formula-level expressions re-enter the parser at comparison level, so
    // anything looser gets parenthesized.
    std::string fconjExpr(const Expr& e) { return expr(e, PrecEq); }

    std::string formula(const Formula& f) {
        switch (f.kind) {
        case Formula::Kind::Imprecise: {
            bool bare = f.f1->kind == Formula::Kind::Bool &&
                        f.f1->expr->kind == Expr::Kind::BoolLit && f.f1->expr->boolVal;
            return bare ? "?" : "? && " + formula(*f.f1);
        }
        case Formula::Kind::Bool:
            return fconjExpr(*f.expr);
        case Formula::Kind::Acc:
            return "acc(" + expr(*f.expr, PrecTernary) + ")";
        case Formula::Kind::Pred:
            return f.pred + "(" + argList(f.args) + ")";
        case Formula::Kind::And:
            return formula(*f.f1) + " && " + formula(*f.f2);
        case Formula::Kind::Cond:
            return "(" + expr(*f.expr, PrecOr) + " ? " + formula(*f.f1) + " : " +
                   formula(*f.f2) + ")";
        }
        return "<formula>";
    }

private:
    const PrintOptions& opts_;
};

class ProgramPrinter {
public:
    std::string run(const Program& p) {
        for (const auto& r : p.records) record(r);
        for (const auto& pr : p.predicates) predicate(pr);
        for (const auto& m : p.methods) method(m);
        return out_.str();
    }

private:
    std::ostringstream out_;
    int indent_ = 0;
    PrintOptions opts_;
    Printer printer_{opts_};

    void line(const std::string& s) {
        for (int i = 0; i < indent_; ++i) out_ << "  ";
        out_ << s << "\n";
    }

    void record(const RecordDecl& r) {
        std::string s = "struct " + r.name + " { ";
        for (const auto& f : r.fields) s += printType(f.type) + " " + f.name + "; ";
        s += "};";
        line(s);
    }

    void predicate(const PredicateDecl& p) {
        std::string s = "predicate " + p.name + "(" + params(p.params) + ") = " +
                        printer_.formula(*p.body) + ";";
        line(s);
    }

    std::string params(const std::vector<Param>& ps) {
        std::string s;
        for (size_t i = 0; i < ps.size(); ++i) {
            if (i) s += ", ";
            s += printType(ps[i].type) + " " + ps[i].name;
        }
        return s;
    }

    void method(const MethodDecl& m) {
        line(printType(m.returnType) + " " + m.name + "(" + params(m.params) + ")");
        indent_++;
        line("requires " + printer_.formula(*m.requiresClause) + ";");
        line("ensures " + printer_.formula(*m.ensuresClause) + ";");
        indent_--;
        line("{");
        indent_++;
        for (const auto& s : m.body) stmt(*s);
        indent_--;
        line("}");
    }

    void stmt(const Stmt& s) {
        switch (s.kind) {
        case Stmt::Kind::VarDecl:
            line(printType(s.varType) + " " + s.name + ";");
            break;
        case Stmt::Kind::Assign:
            line(s.name + " = " + printer_.expr(*s.expr, PrecTernary) + ";");
            break;
        case Stmt::Kind::FieldWrite:
            line(printer_.expr(*s.lval, PrecTernary) + " = " +
                 printer_.expr(*s.expr, PrecTernary) + ";");
            break;
        case Stmt::Kind::Alloc:
            line(s.name + " = alloc(" + s.callee + ");");
            break;
        case Stmt::Kind::If:
            line("if (" + printer_.expr(*s.expr, PrecTernary) + ") {");
            indent_++;
            for (const auto& st : s.body) stmt(*st);
            indent_--;
            if (s.elseBody.empty()) {
                line("}");
            } else {
                line("} else {");
                indent_++;
                for (const auto& st : s.elseBody) stmt(*st);
                indent_--;
                line("}");
            }
            break;
        case Stmt::Kind::While:
            line("while (" + printer_.expr(*s.expr, PrecTernary) + ")");
            indent_++;
            line("invariant " + printer_.formula(*s.formula) + ";");
            indent_--;
            line("{");
            indent_++;
            for (const auto& st : s.body) stmt(*st);
            indent_--;
            line("}");
            break;
        case Stmt::Kind::Fold:
            line("fold " + s.name + "(" + printer_.argList(s.args) + ");");
            break;
        case Stmt::Kind::Unfold:
            line("unfold " + s.name + "(" + printer_.argList(s.args) + ");");
            break;
        case Stmt::Kind::Assert:
            line("assert " + printer_.formula(*s.formula) + ";");
            break;
        case Stmt::Kind::Call:
            line(s.name + " = " + s.callee + "(" + printer_.argList(s.args) + ");");
            break;
        case Stmt::Kind::Return:
            line("return " + printer_.expr(*s.expr, PrecTernary) + ";");
            break;
        }
    }
};

} // namespace

std::string printExpr(const Expr& e, const PrintOptions& opts) {
    Printer p(opts);
    return p.expr(e, PrecTernary);
}

std::string printFormula(const Formula& f, const PrintOptions& opts) {
    Printer p(opts);
    return p.formula(f);
}

std::string printType(const Type& t) {
    switch (t.kind) {
    case Type::Kind::Int: return "int";
    case Type::Kind::Bool: return "bool";
    case Type::Kind::Record: return "struct " + t.record + " *";
    default: return "<type>";
    }
}

std::string printProgram(const Program& p) {
    ProgramPrinter pp;
    return pp.run(p);
}

} // namespace gvc
