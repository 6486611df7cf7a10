#include "parser.hpp"

#include "lexer.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace gvc {

namespace {

/// Thrown internally; converted to a Diagnostic at the entry points.
struct ParseError {
    SourceLoc loc;
    std::string message;
};

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

    Program parseProgram(const std::string& file, const std::string& text) {
        Program prog;
        prog.file = file;
        prog.text = text;
        while (!at(Tok::End)) {
            if (at(Tok::KwPredicate)) {
                prog.predicates.push_back(parsePredicate());
            } else if (at(Tok::KwStruct) && peek(1).kind == Tok::Ident &&
                       peek(2).kind == Tok::LBrace) {
                prog.records.push_back(parseRecord());
            } else {
                prog.methods.push_back(parseMethod());
            }
        }
        return prog;
    }

    ExprPtr parseLoneExpr() {
        ExprPtr e = parseExpr();
        expect(Tok::End);
        return e;
    }

private:
    std::vector<Token> toks_;
    size_t pos_ = 0;

    const Token& peek(size_t off = 0) const {
        size_t i = std::min(pos_ + off, toks_.size() - 1);
        return toks_[i];
    }
    bool at(Tok k) const { return peek().kind == k; }
    Token take() { return toks_[std::min(pos_++, toks_.size() - 1)]; }

    Token expect(Tok k) {
        if (!at(k)) fail({k});
        return take();
    }
    bool accept(Tok k) {
        if (at(k)) {
            take();
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(std::initializer_list<Tok> expected) {
        std::set<std::string> names;
        for (Tok t : expected) names.insert(tokName(t));
        std::ostringstream msg;
        msg << "unexpected " << tokName(peek().kind);
        if (peek().kind == Tok::Ident) msg << " '" << peek().text << "'";
        if (!names.empty()) {
            msg << ", expected ";
            bool first = true;
            for (const auto& n : names) {
                if (!first) msg << " or ";
                msg << n;
                first = false;
            }
        }
        throw ParseError{peek().loc, msg.str()};
    }

    [[noreturn]] void failMsg(const std::string& m) { throw ParseError{peek().loc, m}; }

    // -- types ------------------------------------------------------------

    bool atType() const {
        return at(Tok::KwInt) || at(Tok::KwBool) || at(Tok::KwStruct);
    }

    Type parseType() {
        if (accept(Tok::KwInt)) return Type::intType();
        if (accept(Tok::KwBool)) return Type::boolType();
        if (at(Tok::KwStruct)) {
            take();
            Token name = expect(Tok::Ident);
            expect(Tok::Star);
            return Type::recordType(name.text);
        }
        fail({Tok::KwInt, Tok::KwBool, Tok::KwStruct});
    }

    // -- declarations -----------------------------------------------------

    RecordDecl parseRecord() {
        RecordDecl rec;
        rec.loc = peek().loc;
        expect(Tok::KwStruct);
        rec.name = expect(Tok::Ident).text;
        expect(Tok::LBrace);
        while (!accept(Tok::RBrace)) {
            FieldDecl fd;
            fd.loc = peek().loc;
            fd.type = parseType();
            fd.name = expect(Tok::Ident).text;
            expect(Tok::Semi);
            rec.fields.push_back(std::move(fd));
        }
        expect(Tok::Semi);
        return rec;
    }

    std::vector<Param> parseParams() {
        std::vector<Param> params;
        expect(Tok::LParen);
        if (!at(Tok::RParen)) {
            do {
                Param p;
                p.loc = peek().loc;
                p.type = parseType();
                p.name = expect(Tok::Ident).text;
                params.push_back(std::move(p));
            } while (accept(Tok::Comma));
        }
        expect(Tok::RParen);
        return params;
    }

    PredicateDecl parsePredicate() {
        PredicateDecl pd;
        pd.loc = peek().loc;
        expect(Tok::KwPredicate);
        pd.name = expect(Tok::Ident).text;
        pd.params = parseParams();
        expect(Tok::Assign);
        pd.body = parseFormula();
        expect(Tok::Semi);
        return pd;
    }

    MethodDecl parseMethod() {
        MethodDecl md;
        md.loc = peek().loc;
        md.returnType = parseType();
        md.name = expect(Tok::Ident).text;
        md.params = parseParams();
        while (at(Tok::KwRequires) || at(Tok::KwEnsures)) {
            bool isReq = take().kind == Tok::KwRequires;
            FormulaPtr f = parseFormula();
            expect(Tok::Semi);
            FormulaPtr& slot = isReq ? md.requiresClause : md.ensuresClause;
            slot = slot ? mkAndFormula(slot, f) : f;
        }
        if (!md.requiresClause) md.requiresClause = mkBoolFormula(mkBoolLit(true, md.loc));
        if (!md.ensuresClause) md.ensuresClause = mkBoolFormula(mkBoolLit(true, md.loc));
        md.body = parseBlock();
        return md;
    }

    // -- statements ---------------------------------------------------------

    std::vector<StmtPtr> parseBlock() {
        expect(Tok::LBrace);
        std::vector<StmtPtr> stmts;
        while (!accept(Tok::RBrace)) stmts.push_back(parseStmt());
        return stmts;
    }

    StmtPtr parseStmt() {
        auto s = std::make_shared<Stmt>();
        s->loc = peek().loc;

        if (atType()) {
            s->kind = Stmt::Kind::VarDecl;
            s->varType = parseType();
            s->name = expect(Tok::Ident).text;
            expect(Tok::Semi);
            return s;
        }
        if (accept(Tok::KwIf)) {
            s->kind = Stmt::Kind::If;
            expect(Tok::LParen);
            s->expr = parseExpr();
            expect(Tok::RParen);
            s->body = parseBlock();
            if (accept(Tok::KwElse)) s->elseBody = parseBlock();
            return s;
        }
        if (accept(Tok::KwWhile)) {
            s->kind = Stmt::Kind::While;
            expect(Tok::LParen);
            s->expr = parseExpr();
            expect(Tok::RParen);
            while (accept(Tok::KwInvariant)) {
                FormulaPtr f = parseFormula();
                expect(Tok::Semi);
                s->formula = s->formula ? mkAndFormula(s->formula, f) : f;
            }
            if (!s->formula) s->formula = mkBoolFormula(mkBoolLit(true, s->loc));
            s->body = parseBlock();
            return s;
        }
        if (at(Tok::KwFold) || at(Tok::KwUnfold)) {
            s->kind = take().kind == Tok::KwFold ? Stmt::Kind::Fold : Stmt::Kind::Unfold;
            s->name = expect(Tok::Ident).text;
            s->args = parseArgs();
            expect(Tok::Semi);
            return s;
        }
        if (accept(Tok::KwAssert)) {
            s->kind = Stmt::Kind::Assert;
            s->formula = parseFormula();
            expect(Tok::Semi);
            return s;
        }
        if (accept(Tok::KwReturn)) {
            s->kind = Stmt::Kind::Return;
            s->expr = parseExpr();
            expect(Tok::Semi);
            return s;
        }
        if (at(Tok::Ident)) {
            // lvalue write, assignment, alloc, or call
            if (peek(1).kind == Tok::Arrow || peek(1).kind == Tok::Dot) {
                s->kind = Stmt::Kind::FieldWrite;
                s->lval = parsePostfix(parsePrimary());
                if (s->lval->kind != Expr::Kind::FieldAccess)
                    failMsg("left-hand side of field write must be a field access");
                expect(Tok::Assign);
                s->expr = parseExpr();
                expect(Tok::Semi);
                return s;
            }
            s->name = take().text;
            expect(Tok::Assign);
            if (accept(Tok::KwAlloc)) {
                s->kind = Stmt::Kind::Alloc;
                expect(Tok::LParen);
                s->callee = expect(Tok::Ident).text;
                expect(Tok::RParen);
            } else if (at(Tok::Ident) && peek(1).kind == Tok::LParen) {
                s->kind = Stmt::Kind::Call;
                s->callee = take().text;
                s->args = parseArgs();
            } else {
                s->kind = Stmt::Kind::Assign;
                s->expr = parseExpr();
            }
            expect(Tok::Semi);
            return s;
        }
        fail({Tok::Ident, Tok::KwIf, Tok::KwWhile, Tok::KwFold, Tok::KwUnfold,
              Tok::KwAssert, Tok::KwReturn, Tok::KwInt, Tok::KwBool, Tok::KwStruct});
    }

    std::vector<ExprPtr> parseArgs() {
        std::vector<ExprPtr> args;
        expect(Tok::LParen);
        if (!at(Tok::RParen)) {
            do {
                args.push_back(parseExpr());
            } while (accept(Tok::Comma));
        }
        expect(Tok::RParen);
        return args;
    }

    // -- formulas -----------------------------------------------------------
    //
    // formula := "?" ["&&" conjuncts] | conjuncts
    // conjuncts := fconj ("&&" fconj)*
    // fconj := "acc" "(" lval ")"
    //        | Ident "(" args ")"                  (predicate instance)
    //        | "(" formula ")"                     (only if not a pure expression)
    //        | expr_noand ["?" formula ":" formula]
    //
    // `&&`/`||` inside formula-level expressions need parentheses; bare
    // conjunction belongs to the formula, not the expression.

    FormulaPtr parseFormula() {
        SourceLoc loc = peek().loc;
        if (at(Tok::Question)) {
            take();
            if (accept(Tok::AndAnd)) return mkImprecise(parseConjuncts(), loc);
            return mkImprecise(nullptr, loc);
        }
        return parseConjuncts();
    }

    FormulaPtr parseConjuncts() {
        FormulaPtr f = parseFConj();
        while (accept(Tok::AndAnd)) f = mkAndFormula(f, parseFConj());
        return f;
    }

    static bool formulaIsPureExpr(const Formula& f) {
        switch (f.kind) {
        case Formula::Kind::Bool:
            return true;
        case Formula::Kind::And:
        case Formula::Kind::Cond:
            return false; // conservatively treat as structured
        default:
            return false;
        }
    }

    FormulaPtr parseFConj() {
        SourceLoc loc = peek().loc;
        if (at(Tok::KwAcc)) {
            take();
            expect(Tok::LParen);
            ExprPtr lval = parseExpr();
            expect(Tok::RParen);
            if (lval->kind != Expr::Kind::FieldAccess)
                throw ParseError{loc, "acc() takes a field access"};
            return mkAcc(std::move(lval), loc);
        }
        if (at(Tok::Ident) && peek(1).kind == Tok::LParen) {
            std::string name = take().text;
            return mkPredFormula(std::move(name), parseArgs(), loc);
        }
        if (at(Tok::LParen)) {
            // Either a parenthesized sub-formula or a parenthesized
            // expression. Try the formula first; fall back when the inside
            // turns out to be a plain expression (so trailing operators and
            // `? :` keep working).
            size_t save = pos_;
            take();
            try {
                FormulaPtr inner = parseFormula();
                if (at(Tok::RParen) && !formulaIsPureExpr(*inner)) {
                    take();
                    return inner;
                }
            } catch (const ParseError&) {
                // fall through to expression parse
            }
            pos_ = save;
        }
        ExprPtr e = parseCmp();
        if (at(Tok::Question)) {
            SourceLoc qloc = take().loc;
            FormulaPtr t = parseFormula();
            expect(Tok::Colon);
            FormulaPtr f = parseFormula();
            return mkCondFormula(std::move(e), std::move(t), std::move(f), qloc);
        }
        return mkBoolFormula(std::move(e));
    }

    // -- expressions ----------------------------------------------------------

    ExprPtr parseExpr() { return parseTernary(); }

    ExprPtr parseTernary() {
        ExprPtr c = parseOr();
        if (at(Tok::Question)) {
            SourceLoc loc = take().loc;
            ExprPtr t = parseTernary();
            expect(Tok::Colon);
            ExprPtr f = parseTernary();
            return mkTernary(std::move(c), std::move(t), std::move(f), loc);
        }
        return c;
    }

    ExprPtr parseOr() {
        ExprPtr e = parseAnd();
        while (at(Tok::OrOr)) {
            SourceLoc loc = take().loc;
            e = mkBinary(BinOp::Or, std::move(e), parseAnd(), loc);
        }
        return e;
    }

    ExprPtr parseAnd() {
        ExprPtr e = parseEq();
        while (at(Tok::AndAnd)) {
            SourceLoc loc = take().loc;
            e = mkBinary(BinOp::And, std::move(e), parseEq(), loc);
        }
        return e;
    }

    ExprPtr parseCmp() { return parseEq(); }

    ExprPtr parseEq() {
        ExprPtr e = parseRel();
        while (at(Tok::Eq) || at(Tok::Ne)) {
            BinOp op = at(Tok::Eq) ? BinOp::Eq : BinOp::Ne;
            SourceLoc loc = take().loc;
            e = mkBinary(op, std::move(e), parseRel(), loc);
        }
        return e;
    }

    ExprPtr parseRel() {
        ExprPtr e = parseAdd();
        if (at(Tok::Lt) || at(Tok::Le) || at(Tok::Gt) || at(Tok::Ge)) {
            BinOp op = at(Tok::Lt)   ? BinOp::Lt
                       : at(Tok::Le) ? BinOp::Le
                       : at(Tok::Gt) ? BinOp::Gt
                                     : BinOp::Ge;
            SourceLoc loc = take().loc;
            e = mkBinary(op, std::move(e), parseAdd(), loc);
        }
        return e;
    }

    ExprPtr parseAdd() {
        ExprPtr e = parseMul();
        while (at(Tok::Plus) || at(Tok::Minus)) {
            BinOp op = at(Tok::Plus) ? BinOp::Add : BinOp::Sub;
            SourceLoc loc = take().loc;
            e = mkBinary(op, std::move(e), parseMul(), loc);
        }
        return e;
    }

    ExprPtr parseMul() {
        ExprPtr e = parseUnary();
        while (at(Tok::Star)) {
            SourceLoc loc = take().loc;
            e = mkBinary(BinOp::Mul, std::move(e), parseUnary(), loc);
        }
        return e;
    }

    ExprPtr parseUnary() {
        if (at(Tok::Minus)) {
            SourceLoc loc = take().loc;
            return mkUnary(UnOp::Neg, parseUnary(), loc);
        }
        if (at(Tok::Not)) {
            SourceLoc loc = take().loc;
            return mkUnary(UnOp::Not, parseUnary(), loc);
        }
        return parsePostfix(parsePrimary());
    }

    ExprPtr parsePostfix(ExprPtr e) {
        while (at(Tok::Arrow) || at(Tok::Dot)) {
            SourceLoc loc = take().loc;
            std::string field = expect(Tok::Ident).text;
            e = mkFieldAccess(std::move(e), std::move(field), loc);
        }
        return e;
    }

    ExprPtr parsePrimary() {
        SourceLoc loc = peek().loc;
        if (at(Tok::IntLit)) return mkIntLit(take().intVal, loc);
        if (accept(Tok::KwTrue)) return mkBoolLit(true, loc);
        if (accept(Tok::KwFalse)) return mkBoolLit(false, loc);
        if (accept(Tok::KwNull)) return mkNullLit(loc);
        if (accept(Tok::KwResult)) return mkResult(loc);
        if (at(Tok::Ident)) return mkVar(take().text, loc);
        if (accept(Tok::LParen)) {
            ExprPtr e = parseExpr();
            expect(Tok::RParen);
            return e;
        }
        if (at(Tok::KwUnfolding)) return parseUnfolding();
        fail({Tok::IntLit, Tok::Ident, Tok::KwTrue, Tok::KwFalse, Tok::KwNull,
              Tok::KwResult, Tok::LParen, Tok::KwUnfolding});
    }

    ExprPtr parseUnfolding() {
        SourceLoc loc = expect(Tok::KwUnfolding).loc;
        bool wrapped = false;
        // Accept both `unfolding p(args) in e` and `unfolding (p(args)) in e`.
        if (at(Tok::LParen) && peek(1).kind == Tok::Ident && peek(2).kind == Tok::LParen) {
            take();
            wrapped = true;
        }
        std::string pred = expect(Tok::Ident).text;
        std::vector<ExprPtr> args = parseArgs();
        if (wrapped) expect(Tok::RParen);
        expect(Tok::KwIn);
        ExprPtr body = parseExpr();
        return mkUnfolding(std::move(pred), std::move(args), std::move(body), loc);
    }
};

} // namespace

ParseResult parseProgram(const std::string& text, const std::string& file) {
    ParseResult res;
    LexResult lr = lex(text);
    if (lr.error) {
        res.error = lr.error;
        return res;
    }
    Parser p(std::move(lr.tokens));
    try {
        res.program = p.parseProgram(file, text);
    } catch (const ParseError& e) {
        res.error = Diagnostic{e.loc, e.message};
    }
    return res;
}

ExprParseResult parseExprFragment(const std::string& text) {
    ExprParseResult res;
    LexResult lr = lex(text);
    if (lr.error) {
        res.error = lr.error;
        return res;
    }
    Parser p(std::move(lr.tokens));
    try {
        res.expr = p.parseLoneExpr();
    } catch (const ParseError& e) {
        res.error = Diagnostic{e.loc, e.message};
    }
    return res;
}

} // namespace gvc
