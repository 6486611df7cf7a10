#pragma once

#include "source.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gvc {

enum class Tok {
    End,
    Ident,
    IntLit,
    // keywords
    KwStruct, KwInt, KwBool, KwPredicate, KwRequires, KwEnsures, KwInvariant,
    KwIf, KwElse, KwWhile, KwFold, KwUnfold, KwAssert, KwAlloc, KwReturn,
    KwUnfolding, KwIn, KwAcc, KwNull, KwTrue, KwFalse, KwResult,
    // punctuation
    LBrace, RBrace, LParen, RParen, Semi, Comma, Question, Colon,
    Assign, Eq, Ne, Lt, Le, Gt, Ge, Plus, Minus, Star, AndAnd, OrOr, Not,
    Arrow, Dot,
};

std::string tokName(Tok t);

struct Token {
    Tok kind = Tok::End;
    std::string text;
    long long intVal = 0;
    SourceLoc loc;
};

struct LexResult {
    std::vector<Token> tokens;
    std::optional<Diagnostic> error;
};

LexResult lex(const std::string& text);

} // namespace gvc
