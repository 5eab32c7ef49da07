#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace jasonrs::logic::detail {

enum class TokenKind { Ident, Var, Number, String, QuotedAtom, Punct, End };

struct Token {
    TokenKind kind = TokenKind::End;
    std::string text;
    std::size_t line = 1;
    std::size_t column = 1;

    bool is(std::string_view punct) const { return kind == TokenKind::Punct && text == punct; }
    bool is_ident(std::string_view name) const { return kind == TokenKind::Ident && text == name; }
};

/// Splits AgentSpeak source into tokens. `%` and `//` start line comments,
/// `/* */` block comments. Throws ParseError on stray characters or an
/// unterminated string. The result always ends with an End token.
std::vector<Token> tokenize(std::string_view source);

std::string describe(const Token& t);

} // namespace jasonrs::logic::detail
