#include "lexer.hpp"

#include <array>
#include <cctype>

#include "jasonrs/logic/errors.hpp"

namespace jasonrs::logic::detail {
namespace {

constexpr std::array<std::string_view, 5> kTwoCharPunct{":-", "<-", "<=", ">=", "=="};
constexpr std::string_view kOneCharPunct = "()[],.:&;+-*/!?~<>=@|";

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        for (;;) {
            skip_space_and_comments();
            Token tok;
            tok.line = line_;
            tok.column = column_;
            if (pos_ >= src_.size()) {
                tok.kind = TokenKind::End;
                out.push_back(tok);
                return out;
            }
            char c = src_[pos_];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                tok.kind = TokenKind::Number;
                tok.text = take_number();
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::string word = take_word();
                tok.kind = (std::isupper(static_cast<unsigned char>(word.front())) || word.front() == '_')
                               ? TokenKind::Var
                               : TokenKind::Ident;
                tok.text = std::move(word);
            } else if (c == '"') {
                tok.kind = TokenKind::String;
                tok.text = take_quoted('"', tok);
            } else if (c == '\'') {
                tok.kind = TokenKind::QuotedAtom;
                tok.text = take_quoted('\'', tok);
            } else {
                tok.kind = TokenKind::Punct;
                tok.text = take_punct(tok);
            }
            out.push_back(std::move(tok));
        }
    }

private:
    char peek(std::size_t ahead = 0) const {
        return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
    }

    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    void skip_space_and_comments() {
        while (pos_ < src_.size()) {
            char c = peek();
            if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else if (c == '%' || (c == '/' && peek(1) == '/')) {
                while (pos_ < src_.size() && peek() != '\n') {
                    advance();
                }
            } else if (c == '/' && peek(1) == '*') {
                std::size_t line = line_, column = column_;
                advance();
                advance();
                while (pos_ < src_.size() && !(peek() == '*' && peek(1) == '/')) {
                    advance();
                }
                if (pos_ >= src_.size()) {
                    throw ParseError(line, column, "unterminated block comment");
                }
                advance();
                advance();
            } else {
                return;
            }
        }
    }

    std::string take_number() {
        std::string out;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            out.push_back(peek());
            advance();
        }
        if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
            out.push_back('.');
            advance();
            while (std::isdigit(static_cast<unsigned char>(peek()))) {
                out.push_back(peek());
                advance();
            }
        }
        return out;
    }

    std::string take_word() {
        std::string out;
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') {
            out.push_back(peek());
            advance();
        }
        return out;
    }

    std::string take_quoted(char quote, const Token& start) {
        advance();
        std::string out;
        for (;;) {
            if (pos_ >= src_.size() || peek() == '\n') {
                throw ParseError(start.line, start.column,
                                 std::string("unterminated ") + (quote == '"' ? "string" : "quoted atom"));
            }
            char c = peek();
            advance();
            if (c == quote) {
                return out;
            }
            if (c == '\\') {
                if (pos_ >= src_.size()) {
                    continue;
                }
                char e = peek();
                advance();
                switch (e) {
                case 'n': out.push_back('\n'); break;
                case 't': out.push_back('\t'); break;
                default: out.push_back(e); break;
                }
            } else {
                out.push_back(c);
            }
        }
    }

    std::string take_punct(const Token& start) {
        if (peek() == '\\' && peek(1) == '=' && peek(2) == '=') {
            advance();
            advance();
            advance();
            return "\\==";
        }
        for (auto two : kTwoCharPunct) {
            if (peek() == two[0] && peek(1) == two[1]) {
                advance();
                advance();
                return std::string(two);
            }
        }
        char c = peek();
        if (kOneCharPunct.find(c) == std::string_view::npos) {
            throw ParseError(start.line, start.column, std::string("unexpected character '") + c + "'");
        }
        advance();
        return std::string(1, c);
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

} // namespace

std::vector<Token> tokenize(std::string_view source) {
    return Lexer(source).run();
}

std::string describe(const Token& t) {
    switch (t.kind) {
    case TokenKind::End: return "end of input";
    case TokenKind::String: return "string \"" + t.text + "\"";
    case TokenKind::Number: return "number " + t.text;
    case TokenKind::Var: return "variable " + t.text;
    default: return "'" + t.text + "'";
    }
}

} // namespace jasonrs::logic::detail
