#pragma once

#include <cctype>
#include <charconv>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ordcalc/band.hpp"
#include "ordcalc/errors.hpp"
#include "ordcalc/natural.hpp"

namespace ordcalc {

// Expression grammar (whitespace-insensitive):
//
//   expr   := term ("+" term)*
//   term   := factor ("*" factor)*
//   factor := nat | "w" ("^" nat)? | bandconst | call | "(" expr ")"
//   call   := ident "(" expr ("," expr)* ")"
//   nat    := [0-9]+
//
// Band constants: "omega_star" (or "w*"), "zeta" (or "z"). A "*" glued to a
// preceding "w" is read as the reverse order w* only when what follows
// cannot start a factor; "w*w" stays a product.

class Expr {
public:
    enum class Kind { Number, OmegaPow, BandConst, Add, Mul, Call };

    static Expr number(Nat n) { return Expr{Kind::Number, n}; }
    static Expr omega_pow(Nat e) { return Expr{Kind::OmegaPow, e}; }
    static Expr band_const(BandElement b) {
        Expr e{Kind::BandConst, 0};
        e.band_ = b;
        return e;
    }
    static Expr binary(Kind kind, Expr l, Expr r) {
        Expr e{kind, 0};
        e.children_.push_back(std::move(l));
        e.children_.push_back(std::move(r));
        return e;
    }
    static Expr call(std::string name, std::vector<Expr> args) {
        Expr e{Kind::Call, 0};
        e.name_ = std::move(name);
        e.children_ = std::move(args);
        return e;
    }

    Kind kind() const { return kind_; }
    Nat number() const { return value_; }
    Nat exponent() const { return value_; }
    BandElement band() const { return band_; }
    const std::string& call_name() const { return name_; }
    const std::vector<Expr>& args() const { return children_; }
    const Expr& left() const { return children_[0]; }
    const Expr& right() const { return children_[1]; }

private:
    Expr(Kind kind, Nat value) : kind_(kind), value_(value) {}

    Kind kind_;
    Nat value_;
    BandElement band_ = BandElement::One;
    std::string name_;
    std::vector<Expr> children_;
};

namespace detail {

enum class TokKind { Nat, W, OmegaStar, Zeta, Ident, Plus, Star, Caret, LParen, RParen, Comma, End };

struct Token {
    TokKind kind;
    std::size_t column;  // 1-based
    std::string text;
    Nat value = 0;
};

class Lexer {
public:
    explicit Lexer(std::string_view input) : input_(input) { tokenize(); }

    const Token& peek() const { return tokens_[pos_]; }
    Token next() { return tokens_[pos_++]; }

private:
    static bool starts_factor(char c) {
        return std::isdigit(static_cast<unsigned char>(c)) ||
               std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '(';
    }

    void tokenize() {
        std::size_t i = 0;
        while (i < input_.size()) {
            const char c = input_[i];
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++i;
                continue;
            }
            const std::size_t col = i + 1;
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::size_t j = i;
                while (j < input_.size() && std::isdigit(static_cast<unsigned char>(input_[j]))) ++j;
                Nat value = 0;
                auto [ptr, ec] = std::from_chars(input_.data() + i, input_.data() + j, value);
                if (ec != std::errc{})
                    throw SyntaxError(col, "'" + std::string(input_.substr(i, j - i)) + "'",
                                      {"a smaller number"});
                tokens_.push_back({TokKind::Nat, col, std::string(input_.substr(i, j - i)), value});
                i = j;
                continue;
            }
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::size_t j = i;
                while (j < input_.size() &&
                       (std::isalnum(static_cast<unsigned char>(input_[j])) || input_[j] == '_'))
                    ++j;
                std::string word(input_.substr(i, j - i));
                i = j;
                if (word == "w") {
                    // "w*" is the reverse order when the "*" cannot begin a product.
                    if (i < input_.size() && input_[i] == '*') {
                        std::size_t k = i + 1;
                        while (k < input_.size() &&
                               std::isspace(static_cast<unsigned char>(input_[k])))
                            ++k;
                        if (k == input_.size() || !starts_factor(input_[k])) {
                            tokens_.push_back({TokKind::OmegaStar, col, "w*"});
                            ++i;
                            continue;
                        }
                    }
                    tokens_.push_back({TokKind::W, col, "w"});
                } else if (word == "omega_star") {
                    tokens_.push_back({TokKind::OmegaStar, col, word});
                } else if (word == "zeta" || word == "z") {
                    tokens_.push_back({TokKind::Zeta, col, word});
                } else {
                    tokens_.push_back({TokKind::Ident, col, word});
                }
                continue;
            }
            switch (c) {
                case '+': tokens_.push_back({TokKind::Plus, col, "+"}); break;
                case '*': tokens_.push_back({TokKind::Star, col, "*"}); break;
                case '^': tokens_.push_back({TokKind::Caret, col, "^"}); break;
                case '(': tokens_.push_back({TokKind::LParen, col, "("}); break;
                case ')': tokens_.push_back({TokKind::RParen, col, ")"}); break;
                case ',': tokens_.push_back({TokKind::Comma, col, ","}); break;
                default:
                    throw SyntaxError(col, "'" + std::string(1, c) + "'",
                                      {"a number", "'w'", "a name", "an operator"});
            }
            ++i;
        }
        tokens_.push_back({TokKind::End, input_.size() + 1, "end of input"});
    }

    std::string_view input_;
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

class Parser {
public:
    explicit Parser(std::string_view input) : lexer_(input) {}

    Expr parse() {
        Expr e = parse_expr();
        expect(TokKind::End, {"'+'", "'*'", "end of input"});
        return e;
    }

private:
    [[noreturn]] void fail(const Token& tok, std::vector<std::string> expected) {
        std::string text = tok.kind == TokKind::End ? tok.text : "'" + tok.text + "'";
        throw SyntaxError(tok.column, std::move(text), std::move(expected));
    }

    Token expect(TokKind kind, std::vector<std::string> expected) {
        if (lexer_.peek().kind != kind) fail(lexer_.peek(), std::move(expected));
        return lexer_.next();
    }

    Expr parse_expr() {
        Expr e = parse_term();
        while (lexer_.peek().kind == TokKind::Plus) {
            lexer_.next();
            e = Expr::binary(Expr::Kind::Add, std::move(e), parse_term());
        }
        return e;
    }

    Expr parse_term() {
        Expr e = parse_factor();
        while (lexer_.peek().kind == TokKind::Star) {
            lexer_.next();
            e = Expr::binary(Expr::Kind::Mul, std::move(e), parse_factor());
        }
        return e;
    }

    Expr parse_factor() {
        const Token tok = lexer_.next();
        switch (tok.kind) {
            case TokKind::Nat: return Expr::number(tok.value);
            case TokKind::W:
                if (lexer_.peek().kind == TokKind::Caret) {
                    lexer_.next();
                    Token e = expect(TokKind::Nat, {"a number"});
                    return Expr::omega_pow(e.value);
                }
                return Expr::omega_pow(1);
            case TokKind::OmegaStar: return Expr::band_const(BandElement::OmegaStar);
            case TokKind::Zeta: return Expr::band_const(BandElement::Zeta);
            case TokKind::Ident: {
                expect(TokKind::LParen, {"'('"});
                std::vector<Expr> args;
                args.push_back(parse_expr());
                while (lexer_.peek().kind == TokKind::Comma) {
                    lexer_.next();
                    args.push_back(parse_expr());
                }
                expect(TokKind::RParen, {"')'", "','"});
                return Expr::call(tok.text, std::move(args));
            }
            case TokKind::LParen: {
                Expr e = parse_expr();
                expect(TokKind::RParen, {"')'"});
                return e;
            }
            default:
                fail(tok, {"a number", "'w'", "'omega_star'", "'zeta'", "a function name", "'('"});
        }
    }

    Lexer lexer_;
};

}  // namespace detail

/// Parse an expression; throws SyntaxError with a 1-based column on failure.
inline Expr parse(std::string_view input) { return detail::Parser(input).parse(); }

}  // namespace ordcalc
