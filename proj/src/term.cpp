#include "term.hpp"

#include <sstream>

namespace gvc {

std::string sortName(Sort s) {
    switch (s) {
    case Sort::Int: return "Int";
    case Sort::Bool: return "Bool";
    case Sort::Ref: return "Ref";
    case Sort::Snap: return "Snap";
    }
    return "?";
}

namespace {

const char* opName(TermOp op) {
    switch (op) {
    case TermOp::Add: return "+";
    case TermOp::Sub: return "-";
    case TermOp::Mul: return "*";
    case TermOp::Neg: return "neg";
    case TermOp::Eq: return "==";
    case TermOp::Ne: return "!=";
    case TermOp::Lt: return "<";
    case TermOp::Le: return "<=";
    case TermOp::Gt: return ">";
    case TermOp::Ge: return ">=";
    case TermOp::Not: return "!";
    }
    return "?";
}

// Wrap-around arithmetic keeps constant folding well-defined; the language
// spec treats integers as unbounded and the corpus stays far from the edges.
long long wrapAdd(long long a, long long b) {
    return static_cast<long long>(static_cast<unsigned long long>(a) +
                                  static_cast<unsigned long long>(b));
}
long long wrapSub(long long a, long long b) {
    return static_cast<long long>(static_cast<unsigned long long>(a) -
                                  static_cast<unsigned long long>(b));
}
long long wrapMul(long long a, long long b) {
    return static_cast<long long>(static_cast<unsigned long long>(a) *
                                  static_cast<unsigned long long>(b));
}

Sort opResultSort(TermOp op, const std::vector<TermPtr>& args) {
    switch (op) {
    case TermOp::Add:
    case TermOp::Sub:
    case TermOp::Mul:
    case TermOp::Neg:
        return Sort::Int;
    case TermOp::Eq:
    case TermOp::Ne:
    case TermOp::Lt:
    case TermOp::Le:
    case TermOp::Gt:
    case TermOp::Ge:
    case TermOp::Not:
        return Sort::Bool;
    }
    return args.empty() ? Sort::Int : args[0]->sort;
}

bool isIntLit(const TermPtr& t) { return t->kind == TermNode::Kind::IntLit; }
bool isBoolLit(const TermPtr& t) { return t->kind == TermNode::Kind::BoolLit; }

} // namespace

TermPtr mkIntTerm(long long v) {
    auto t = std::make_shared<TermNode>();
    t->kind = TermNode::Kind::IntLit;
    t->sort = Sort::Int;
    t->intVal = v;
    return t;
}

TermPtr mkBoolTerm(bool v) {
    auto t = std::make_shared<TermNode>();
    t->kind = TermNode::Kind::BoolLit;
    t->sort = Sort::Bool;
    t->boolVal = v;
    return t;
}

TermPtr mkNullTerm() {
    auto t = std::make_shared<TermNode>();
    t->kind = TermNode::Kind::NullLit;
    t->sort = Sort::Ref;
    return t;
}

TermPtr mkSnapUnit() {
    auto t = std::make_shared<TermNode>();
    t->kind = TermNode::Kind::SnapUnit;
    t->sort = Sort::Snap;
    return t;
}

TermPtr mkSnapPair(TermPtr a, TermPtr b) {
    auto t = std::make_shared<TermNode>();
    t->kind = TermNode::Kind::SnapPair;
    t->sort = Sort::Snap;
    t->args = {std::move(a), std::move(b)};
    return t;
}

TermPtr mkApp(TermOp op, std::vector<TermPtr> args) {
    // constant folding
    if (op == TermOp::Neg && isIntLit(args[0])) return mkIntTerm(wrapSub(0, args[0]->intVal));
    if (op == TermOp::Not && isBoolLit(args[0])) return mkBoolTerm(!args[0]->boolVal);
    if (op == TermOp::Not && args[0]->kind == TermNode::Kind::App &&
        args[0]->op == TermOp::Not)
        return args[0]->args[0];

    if (args.size() == 2) {
        const TermPtr& a = args[0];
        const TermPtr& b = args[1];
        if (isIntLit(a) && isIntLit(b)) {
            long long x = a->intVal, y = b->intVal;
            switch (op) {
            case TermOp::Add: return mkIntTerm(wrapAdd(x, y));
            case TermOp::Sub: return mkIntTerm(wrapSub(x, y));
            case TermOp::Mul: return mkIntTerm(wrapMul(x, y));
            case TermOp::Eq: return mkBoolTerm(x == y);
            case TermOp::Ne: return mkBoolTerm(x != y);
            case TermOp::Lt: return mkBoolTerm(x < y);
            case TermOp::Le: return mkBoolTerm(x <= y);
            case TermOp::Gt: return mkBoolTerm(x > y);
            case TermOp::Ge: return mkBoolTerm(x >= y);
            default: break;
            }
        }
        if (isBoolLit(a) && isBoolLit(b) && (op == TermOp::Eq || op == TermOp::Ne)) {
            bool eq = a->boolVal == b->boolVal;
            return mkBoolTerm(op == TermOp::Eq ? eq : !eq);
        }
        if (a->kind == TermNode::Kind::NullLit && b->kind == TermNode::Kind::NullLit) {
            if (op == TermOp::Eq) return mkBoolTerm(true);
            if (op == TermOp::Ne) return mkBoolTerm(false);
        }
        if (termEquals(a, b)) {
            switch (op) {
            case TermOp::Eq:
            case TermOp::Le:
            case TermOp::Ge:
                return mkBoolTerm(true);
            case TermOp::Ne:
            case TermOp::Lt:
            case TermOp::Gt:
                return mkBoolTerm(false);
            default: break;
            }
        }
    }

    auto t = std::make_shared<TermNode>();
    t->kind = TermNode::Kind::App;
    t->op = op;
    t->sort = opResultSort(op, args);
    t->args = std::move(args);
    return t;
}

TermPtr mkNot(TermPtr t) { return mkApp(TermOp::Not, {std::move(t)}); }
TermPtr mkEq(TermPtr a, TermPtr b) { return mkApp(TermOp::Eq, {std::move(a), std::move(b)}); }

bool termEquals(const TermPtr& a, const TermPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->kind != b->kind || a->sort != b->sort) return false;
    switch (a->kind) {
    case TermNode::Kind::IntLit: return a->intVal == b->intVal;
    case TermNode::Kind::BoolLit: return a->boolVal == b->boolVal;
    case TermNode::Kind::NullLit:
    case TermNode::Kind::SnapUnit: return true;
    case TermNode::Kind::Sym: return a->symId == b->symId;
    case TermNode::Kind::App:
        if (a->op != b->op) return false;
        [[fallthrough]];
    case TermNode::Kind::SnapPair:
        return termVectorEquals(a->args, b->args);
    }
    return false;
}

bool termVectorEquals(const std::vector<TermPtr>& a, const std::vector<TermPtr>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (!termEquals(a[i], b[i])) return false;
    return true;
}

std::string termKey(const TermPtr& t) {
    std::ostringstream os;
    switch (t->kind) {
    case TermNode::Kind::IntLit: os << "i" << t->intVal; break;
    case TermNode::Kind::BoolLit: os << (t->boolVal ? "bt" : "bf"); break;
    case TermNode::Kind::NullLit: os << "null"; break;
    case TermNode::Kind::SnapUnit: os << "unit"; break;
    case TermNode::Kind::Sym: os << "s" << t->symId; break;
    case TermNode::Kind::App:
        os << "(" << opName(t->op);
        for (const auto& a : t->args) os << " " << termKey(a);
        os << ")";
        break;
    case TermNode::Kind::SnapPair:
        os << "(pair " << termKey(t->args[0]) << " " << termKey(t->args[1]) << ")";
        break;
    }
    return os.str();
}

std::string termToString(const TermPtr& t) {
    if (!t) return "<null>";
    std::ostringstream os;
    switch (t->kind) {
    case TermNode::Kind::IntLit: os << t->intVal; break;
    case TermNode::Kind::BoolLit: os << (t->boolVal ? "true" : "false"); break;
    case TermNode::Kind::NullLit: os << "null"; break;
    case TermNode::Kind::SnapUnit: os << "unit"; break;
    case TermNode::Kind::Sym:
        os << (t->hint.empty() ? "s" : t->hint) << "$" << t->symId;
        break;
    case TermNode::Kind::App: {
        os << "(" << opName(t->op);
        for (const auto& a : t->args) os << " " << termToString(a);
        os << ")";
        break;
    }
    case TermNode::Kind::SnapPair:
        os << "(pair " << termToString(t->args[0]) << " " << termToString(t->args[1]) << ")";
        break;
    }
    return os.str();
}

TermPtr SymbolSupply::fresh(Sort sort, const std::string& hint) {
    auto t = std::make_shared<TermNode>();
    t->kind = TermNode::Kind::Sym;
    t->sort = sort;
    t->symId = next_++;
    t->hint = hint;
    return t;
}

} // namespace gvc
