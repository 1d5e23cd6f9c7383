#include "calcforge/error.hpp"
#include "calcforge/expr.hpp"

#include <cctype>
#include <vector>

namespace calcforge {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string_view text;
    std::size_t offset;
};

std::vector<Token> lex(std::string_view src) {
    std::vector<Token> out;
    std::size_t i = 0;
    auto is_ident_start = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
    auto is_ident_char = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
    auto is_digit = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; };

    while (i < src.size()) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (is_digit(c)) {
            while (i < src.size() && is_digit(src[i])) ++i;
            if (i < src.size() && src[i] == '.') {
                ++i;
                if (i >= src.size() || !is_digit(src[i]))
                    throw ParseError(ParseErrorKind::Lexical, i, "expected digits after decimal point");
                while (i < src.size() && is_digit(src[i])) ++i;
            }
            out.push_back({Tok::Number, src.substr(start, i - start), start});
            continue;
        }
        if (is_ident_start(c)) {
            while (i < src.size() && is_ident_char(src[i])) ++i;
            out.push_back({Tok::Ident, src.substr(start, i - start), start});
            continue;
        }
        Tok kind;
        switch (c) {
            case '+': kind = Tok::Plus; break;
            case '-': kind = Tok::Minus; break;
            case '*': kind = Tok::Star; break;
            case '/': kind = Tok::Slash; break;
            case '^': kind = Tok::Caret; break;
            case '(': kind = Tok::LParen; break;
            case ')': kind = Tok::RParen; break;
            default:
                throw ParseError(ParseErrorKind::Lexical, start,
                                 std::string("unexpected character '") + c + "'");
        }
        ++i;
        out.push_back({kind, src.substr(start, 1), start});
    }
    out.push_back({Tok::End, {}, src.size()});
    return out;
}

class Parser {
public:
    explicit Parser(std::string_view src) : toks_(lex(src)) {}

    Expr parse_all() {
        Expr e = expr();
        const Token& t = peek();
        if (t.kind == Tok::RParen)
            throw ParseError(ParseErrorKind::UnbalancedParens, t.offset, "unmatched ')'");
        if (t.kind != Tok::End)
            throw ParseError(ParseErrorKind::TrailingTokens, t.offset, "unexpected trailing input '" + std::string(t.text) + "'");
        return e;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_++]; }
    bool accept(Tok k) {
        if (peek().kind != k) return false;
        ++pos_;
        return true;
    }

    Expr expr() {
        Expr lhs = term();
        while (true) {
            if (accept(Tok::Plus)) lhs = std::move(lhs) + term();
            else if (accept(Tok::Minus)) lhs = std::move(lhs) - term();
            else return lhs;
        }
    }

    Expr term() {
        Expr lhs = factor();
        while (true) {
            if (accept(Tok::Star)) lhs = std::move(lhs) * factor();
            else if (accept(Tok::Slash)) lhs = std::move(lhs) / factor();
            else return lhs;
        }
    }

    Expr factor() {
        if (accept(Tok::Minus)) return -power();
        return power();
    }

    Expr power() {
        Expr base = atom();
        if (accept(Tok::Caret)) return pow(std::move(base), factor());
        return base;
    }

    Expr closing_paren(Expr inner, std::size_t open_offset) {
        if (!accept(Tok::RParen))
            throw ParseError(ParseErrorKind::UnbalancedParens, open_offset, "'(' is never closed");
        return inner;
    }

    Expr atom() {
        const Token& t = next();
        switch (t.kind) {
            case Tok::Number: return Expr(Rational::from_string(std::string(t.text)));
            case Tok::LParen: return closing_paren(expr(), t.offset);
            case Tok::Ident: {
                const bool call = peek().kind == Tok::LParen;
                if (!call) {
                    if (t.text == "pi") return Expr::pi();
                    if (t.text == "e") return Expr::e();
                    if (lookup_function(t.text))
                        throw ParseError(ParseErrorKind::UnexpectedToken, t.offset,
                                         "function '" + std::string(t.text) + "' requires parentheses");
                    return Expr::var(std::string(t.text));
                }
                auto f = lookup_function(t.text);
                if (!f)
                    throw ParseError(ParseErrorKind::UnknownFunction, t.offset,
                                     "unknown function '" + std::string(t.text) + "'");
                const std::size_t open = next().offset;
                return Expr::call(*f, closing_paren(expr(), open));
            }
            case Tok::RParen:
                throw ParseError(ParseErrorKind::UnbalancedParens, t.offset, "unexpected ')'");
            case Tok::End:
                throw ParseError(ParseErrorKind::UnexpectedToken, t.offset, "unexpected end of input");
            default:
                throw ParseError(ParseErrorKind::UnexpectedToken, t.offset,
                                 "unexpected token '" + std::string(t.text) + "'");
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

}  // namespace

Expr parse(std::string_view text) { return Parser(text).parse_all(); }

}  // namespace calcforge
