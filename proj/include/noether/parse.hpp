#ifndef NOETHER_PARSE_HPP
#define NOETHER_PARSE_HPP

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "noether/polynomial.hpp"

namespace noether {

// Polynomial text grammar (also embedded in ideal files):
//
//   expr    := ['+'|'-'] term { ('+'|'-') term }
//   term    := factor { ('*'|'/') factor | factor }     (juxtaposition = '*')
//   factor  := primary [ '^' INT ]
//   primary := INT | NAME | '(' expr ')'
//
// '/' requires a nonzero constant divisor. '#' starts a line comment.

namespace lex {

enum class Tok {
    End, Int, Name,
    Plus, Minus, Star, Slash, Caret,
    LParen, RParen, LBracket, RBracket,
    Comma, Semicolon, Equals, Colon,
};

struct Token {
    Tok kind = Tok::End;
    std::string text;
    int line = 1;
    int col = 1;
};

class Lexer {
  public:
    explicit Lexer(std::string_view src) : src_(src) { advance(); }

    const Token& peek() const { return tok_; }

    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw parse_error(msg, tok_.line, tok_.col);
    }

  private:
    void advance() {
        skip_space_and_comments();
        tok_ = Token{Tok::End, "", line_, col_};
        if (pos_ >= src_.size()) return;
        char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                bump();
            tok_.kind = Tok::Int;
            tok_.text = std::string(src_.substr(start, pos_ - start));
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                bump();
            tok_.kind = Tok::Name;
            tok_.text = std::string(src_.substr(start, pos_ - start));
            return;
        }
        switch (c) {
            case '+': tok_.kind = Tok::Plus; break;
            case '-': tok_.kind = Tok::Minus; break;
            case '*': tok_.kind = Tok::Star; break;
            case '/': tok_.kind = Tok::Slash; break;
            case '^': tok_.kind = Tok::Caret; break;
            case '(': tok_.kind = Tok::LParen; break;
            case ')': tok_.kind = Tok::RParen; break;
            case '[': tok_.kind = Tok::LBracket; break;
            case ']': tok_.kind = Tok::RBracket; break;
            case ',': tok_.kind = Tok::Comma; break;
            case ';': tok_.kind = Tok::Semicolon; break;
            case '=': tok_.kind = Tok::Equals; break;
            case ':': tok_.kind = Tok::Colon; break;
            default:
                throw parse_error(std::string("unexpected character '") + c + "'", line_, col_);
        }
        tok_.text = std::string(1, c);
        bump();
    }

    void skip_space_and_comments() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n') bump();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                bump();
            } else {
                break;
            }
        }
    }

    void bump() {
        if (src_[pos_] == '\n') { ++line_; col_ = 1; }
        else ++col_;
        ++pos_;
    }

    std::string_view src_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_;
};

} // namespace lex

namespace detail {

class PolyParser {
  public:
    PolyParser(lex::Lexer& lx, RingPtr ring) : lx_(lx), ring_(std::move(ring)) {}

    Polynomial parse_expr() {
        bool negate = false;
        if (lx_.peek().kind == lex::Tok::Minus) { lx_.next(); negate = true; }
        else if (lx_.peek().kind == lex::Tok::Plus) { lx_.next(); }
        Polynomial acc = parse_term();
        if (negate) acc = -acc;
        while (true) {
            auto k = lx_.peek().kind;
            if (k == lex::Tok::Plus) { lx_.next(); acc = acc + parse_term(); }
            else if (k == lex::Tok::Minus) { lx_.next(); acc = acc - parse_term(); }
            else break;
        }
        return acc;
    }

  private:
    bool starts_factor(lex::Tok k) const {
        return k == lex::Tok::Int || k == lex::Tok::Name || k == lex::Tok::LParen;
    }

    Polynomial parse_term() {
        Polynomial acc = parse_factor();
        while (true) {
            auto k = lx_.peek().kind;
            if (k == lex::Tok::Star) {
                lx_.next();
                acc = acc * parse_factor();
            } else if (k == lex::Tok::Slash) {
                auto slash = lx_.next();
                Polynomial d = parse_factor();
                if (!d.is_constant() || d.is_zero())
                    throw parse_error("division only by a nonzero constant",
                                      slash.line, slash.col);
                acc = acc.scaled(Rat(1) / d.terms()[0].coeff);
            } else if (starts_factor(k)) {
                acc = acc * parse_factor();
            } else {
                break;
            }
        }
        return acc;
    }

    Polynomial parse_factor() {
        Polynomial base = parse_primary();
        if (lx_.peek().kind == lex::Tok::Caret) {
            lx_.next();
            if (lx_.peek().kind != lex::Tok::Int) lx_.fail("expected integer exponent");
            auto e = lx_.next();
            if (e.text.size() > 6)
                throw parse_error("exponent too large", e.line, e.col);
            base = base.pow(std::stoi(e.text));
        }
        return base;
    }

    Polynomial parse_primary() {
        auto t = lx_.peek();
        switch (t.kind) {
            case lex::Tok::Int:
                lx_.next();
                return Polynomial::constant(ring_, Rat(Int(t.text)));
            case lex::Tok::Name: {
                lx_.next();
                auto idx = ring_->index_of(t.text);
                if (!idx)
                    throw parse_error("unknown variable '" + t.text + "'", t.line, t.col);
                return Polynomial::variable(ring_, *idx);
            }
            case lex::Tok::LParen: {
                lx_.next();
                Polynomial inner = parse_expr();
                if (lx_.peek().kind != lex::Tok::RParen) lx_.fail("expected ')'");
                lx_.next();
                return inner;
            }
            default:
                lx_.fail("expected a polynomial");
        }
    }

    lex::Lexer& lx_;
    RingPtr ring_;
};

} // namespace detail

/// Parses a single polynomial; the whole input must be consumed.
inline Polynomial parse_polynomial(std::string_view text, RingPtr ring) {
    lex::Lexer lx(text);
    detail::PolyParser parser(lx, ring);
    Polynomial p = parser.parse_expr();
    if (lx.peek().kind != lex::Tok::End) lx.fail("trailing input after polynomial");
    return p;
}

/// Parses a comma-separated generator list, e.g. "x^2, x*y".
inline std::vector<Polynomial> parse_polynomial_list(std::string_view text, RingPtr ring) {
    lex::Lexer lx(text);
    detail::PolyParser parser(lx, ring);
    std::vector<Polynomial> out;
    out.push_back(parser.parse_expr());
    while (lx.peek().kind == lex::Tok::Comma) {
        lx.next();
        out.push_back(parser.parse_expr());
    }
    if (lx.peek().kind != lex::Tok::End) lx.fail("trailing input after generator list");
    return out;
}

/// Collects identifiers from polynomial text in order of first appearance;
/// used by the CLI to infer a ring for inline input.
inline std::vector<std::string> collect_variable_names(
    const std::vector<std::string>& texts) {
    std::vector<std::string> names;
    for (const auto& text : texts) {
        lex::Lexer lx(text);
        while (lx.peek().kind != lex::Tok::End) {
            auto t = lx.next();
            if (t.kind == lex::Tok::Name &&
                std::find(names.begin(), names.end(), t.text) == names.end())
                names.push_back(t.text);
        }
    }
    return names;
}

} // namespace noether

#endif
