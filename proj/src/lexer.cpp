#include "lexer.hpp"

#include <cctype>
#include <unordered_map>

namespace gvc {

std::string tokName(Tok t) {
    switch (t) {
    case Tok::End: return "end of input";
    case Tok::Ident: return "identifier";
    case Tok::IntLit: return "integer literal";
    case Tok::KwStruct: return "'struct'";
    case Tok::KwInt: return "'int'";
    case Tok::KwBool: return "'bool'";
    case Tok::KwPredicate: return "'predicate'";
    case Tok::KwRequires: return "'requires'";
    case Tok::KwEnsures: return "'ensures'";
    case Tok::KwInvariant: return "'invariant'";
    case Tok::KwIf: return "'if'";
    case Tok::KwElse: return "'else'";
    case Tok::KwWhile: return "'while'";
    case Tok::KwFold: return "'fold'";
    case Tok::KwUnfold: return "'unfold'";
    case Tok::KwAssert: return "'assert'";
    case Tok::KwAlloc: return "'alloc'";
    case Tok::KwReturn: return "'return'";
    case Tok::KwUnfolding: return "'unfolding'";
    case Tok::KwIn: return "'in'";
    case Tok::KwAcc: return "'acc'";
    case Tok::KwNull: return "'NULL'";
    case Tok::KwTrue: return "'true'";
    case Tok::KwFalse: return "'false'";
    case Tok::KwResult: return "'result'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Semi: return "';'";
    case Tok::Comma: return "','";
    case Tok::Question: return "'?'";
    case Tok::Colon: return "':'";
    case Tok::Assign: return "'='";
    case Tok::Eq: return "'=='";
    case Tok::Ne: return "'!='";
    case Tok::Lt: return "'<'";
    case Tok::Le: return "'<='";
    case Tok::Gt: return "'>'";
    case Tok::Ge: return "'>='";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Star: return "'*'";
    case Tok::AndAnd: return "'&&'";
    case Tok::OrOr: return "'||'";
    case Tok::Not: return "'!'";
    case Tok::Arrow: return "'->'";
    case Tok::Dot: return "'.'";
    }
    return "?";
}

namespace {

const std::unordered_map<std::string, Tok>& keywordTable() {
    static const std::unordered_map<std::string, Tok> table = {
        {"struct", Tok::KwStruct},       {"int", Tok::KwInt},
        {"bool", Tok::KwBool},           {"predicate", Tok::KwPredicate},
        {"requires", Tok::KwRequires},   {"ensures", Tok::KwEnsures},
        {"invariant", Tok::KwInvariant}, {"if", Tok::KwIf},
        {"else", Tok::KwElse},           {"while", Tok::KwWhile},
        {"fold", Tok::KwFold},           {"unfold", Tok::KwUnfold},
        {"assert", Tok::KwAssert},       {"alloc", Tok::KwAlloc},
        {"return", Tok::KwReturn},       {"unfolding", Tok::KwUnfolding},
        {"in", Tok::KwIn},               {"acc", Tok::KwAcc},
        {"NULL", Tok::KwNull},           {"true", Tok::KwTrue},
        {"false", Tok::KwFalse},         {"result", Tok::KwResult},
    };
    return table;
}

} // namespace

LexResult lex(const std::string& text) {
    LexResult res;
    size_t i = 0;
    int line = 1, col = 1;

    auto advance = [&](size_t n) {
        for (size_t k = 0; k < n && i < text.size(); ++k, ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    auto peek = [&](size_t off = 0) -> char {
        return i + off < text.size() ? text[i + off] : '\0';
    };
    auto push = [&](Tok kind, std::string t, SourceLoc loc) {
        Token tok;
        tok.kind = kind;
        tok.text = std::move(t);
        tok.loc = loc;
        res.tokens.push_back(std::move(tok));
    };

    while (i < text.size()) {
        char c = peek();
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            advance(1);
            continue;
        }
        if (c == '/' && peek(1) == '/') {
            while (i < text.size() && peek() != '\n') advance(1);
            continue;
        }
        if (c == '/' && peek(1) == '*') {
            SourceLoc start{line, col};
            advance(2);
            while (i < text.size() && !(peek() == '*' && peek(1) == '/')) advance(1);
            if (i >= text.size()) {
                res.error = Diagnostic{start, "unterminated block comment"};
                return res;
            }
            advance(2);
            continue;
        }

        SourceLoc loc{line, col};
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num;
            while (std::isdigit(static_cast<unsigned char>(peek()))) {
                num += peek();
                advance(1);
            }
            Token tok;
            tok.kind = Tok::IntLit;
            tok.text = num;
            tok.intVal = std::stoll(num);
            tok.loc = loc;
            res.tokens.push_back(std::move(tok));
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string word;
            while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') {
                word += peek();
                advance(1);
            }
            auto it = keywordTable().find(word);
            push(it != keywordTable().end() ? it->second : Tok::Ident, word, loc);
            continue;
        }

        auto two = [&](char a, char b) { return c == a && peek(1) == b; };
        if (two('=', '=')) { push(Tok::Eq, "==", loc); advance(2); continue; }
        if (two('!', '=')) { push(Tok::Ne, "!=", loc); advance(2); continue; }
        if (two('<', '=')) { push(Tok::Le, "<=", loc); advance(2); continue; }
        if (two('>', '=')) { push(Tok::Ge, ">=", loc); advance(2); continue; }
        if (two('&', '&')) { push(Tok::AndAnd, "&&", loc); advance(2); continue; }
        if (two('|', '|')) { push(Tok::OrOr, "||", loc); advance(2); continue; }
        if (two('-', '>')) { push(Tok::Arrow, "->", loc); advance(2); continue; }

        Tok kind;
        switch (c) {
        case '{': kind = Tok::LBrace; break;
        case '}': kind = Tok::RBrace; break;
        case '(': kind = Tok::LParen; break;
        case ')': kind = Tok::RParen; break;
        case ';': kind = Tok::Semi; break;
        case ',': kind = Tok::Comma; break;
        case '?': kind = Tok::Question; break;
        case ':': kind = Tok::Colon; break;
        case '=': kind = Tok::Assign; break;
        case '<': kind = Tok::Lt; break;
        case '>': kind = Tok::Gt; break;
        case '+': kind = Tok::Plus; break;
        case '-': kind = Tok::Minus; break;
        case '*': kind = Tok::Star; break;
        case '!': kind = Tok::Not; break;
        case '.': kind = Tok::Dot; break;
        default:
            res.error = Diagnostic{loc, std::string("unexpected character '") + c + "'"};
            return res;
        }
        push(kind, std::string(1, c), loc);
        advance(1);
    }

    Token end;
    end.kind = Tok::End;
    end.loc = SourceLoc{line, col};
    res.tokens.push_back(end);
    return res;
}

} // namespace gvc
