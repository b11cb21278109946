#include "inexp/parse.hpp"

#include <cctype>

#include "inexp/errors.hpp"

namespace inexp {

namespace {

constexpr std::uint32_t kMaxExponent = 4096;

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
        std::size_t start = i_;
        if (i_ >= src_.size()) {
            current_ = {Tok::End, "", start};
            return;
        }
        char c = src_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i_]))) ++i_;
            current_ = {Tok::Number, src_.substr(start, i_ - start), start};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[i_])) || src_[i_] == '_'))
                ++i_;
            current_ = {Tok::Ident, src_.substr(start, i_ - start), start};
            return;
        }
        ++i_;
        switch (c) {
        case '+': current_ = {Tok::Plus, "+", start}; return;
        case '-': current_ = {Tok::Minus, "-", start}; return;
        case '*': current_ = {Tok::Star, "*", start}; return;
        case '/': current_ = {Tok::Slash, "/", start}; return;
        case '^': current_ = {Tok::Caret, "^", start}; return;
        case '(': current_ = {Tok::LParen, "(", start}; return;
        case ')': current_ = {Tok::RParen, ")", start}; return;
        default: throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
    }

    const std::string& src_;
    std::size_t i_ = 0;
    Token current_{Tok::End, "", 0};
};

class Parser {
public:
    Parser(const std::string& src, const std::vector<std::string>& variables)
        : lex_(src), variables_(variables), m_(variables.size()) {}

    Polynomial run() {
        Polynomial p = expression();
        const Token& t = lex_.peek();
        if (t.kind != Tok::End) throw ParseError("unexpected '" + t.text + "'", t.pos);
        return p;
    }

private:
    Polynomial expression() {
        Polynomial acc = term();
        for (;;) {
            Tok k = lex_.peek().kind;
            if (k == Tok::Plus) {
                lex_.take();
                acc = acc + term();
            } else if (k == Tok::Minus) {
                lex_.take();
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    Polynomial term() {
        bool negate = false;
        while (lex_.peek().kind == Tok::Minus) {
            lex_.take();
            negate = !negate;
        }
        Polynomial acc = factor();
        for (;;) {
            const Token& t = lex_.peek();
            if (t.kind == Tok::Star) {
                lex_.take();
                acc = acc * factor();
            } else if (t.kind == Tok::Slash) {
                throw ParseError("division is only allowed inside rational literals a/b", t.pos);
            } else if (t.kind == Tok::Number || t.kind == Tok::Ident || t.kind == Tok::LParen) {
                throw ParseError("missing '*' (juxtaposition is not allowed)", t.pos);
            } else {
                return negate ? -acc : acc;
            }
        }
    }

    Polynomial factor() {
        Polynomial base = primary();
        if (lex_.peek().kind != Tok::Caret) return base;
        Token caret = lex_.take();
        const Token& e = lex_.peek();
        if (e.kind != Tok::Number)
            throw ParseError("malformed exponent: expected a natural number after '^'", e.pos);
        Token num = lex_.take();
        unsigned long value = 0;
        try {
            value = std::stoul(num.text);
        } catch (const std::exception&) {
            throw ParseError("malformed exponent: '" + num.text + "' is out of range", num.pos);
        }
        if (value > kMaxExponent)
            throw ParseError("malformed exponent: larger than " + std::to_string(kMaxExponent),
                             num.pos);
        (void)caret;
        // Square-and-multiply.
        Polynomial acc = Polynomial::constant(m_, 1);
        Polynomial sq = base;
        for (unsigned long e = value; e > 0; e >>= 1) {
            if (e & 1) acc = acc * sq;
            if (e > 1) sq = sq * sq;
        }
        return acc;
    }

    Polynomial primary() {
        Token t = lex_.take();
        switch (t.kind) {
        case Tok::Number: {
            Rational value(t.text);
            if (lex_.peek().kind == Tok::Slash) {
                lex_.take();
                const Token& d = lex_.peek();
                if (d.kind != Tok::Number)
                    throw ParseError("division is only allowed inside rational literals a/b",
                                     d.pos);
                Token den = lex_.take();
                Rational denom(den.text);
                if (denom == 0) throw ParseError("zero denominator", den.pos);
                value /= denom;
            }
            value.canonicalize();
            return Polynomial::constant(m_, value);
        }
        case Tok::Ident: {
            for (std::size_t i = 0; i < variables_.size(); ++i)
                if (variables_[i] == t.text)
                    return Polynomial::term(Exponent::axis(m_, i, 1), 1);
            throw ParseError("unknown identifier '" + t.text + "'", t.pos);
        }
        case Tok::LParen: {
            Polynomial inner = expression();
            const Token& close = lex_.peek();
            if (close.kind != Tok::RParen) throw ParseError("expected ')'", close.pos);
            lex_.take();
            return inner;
        }
        case Tok::Minus:
            // Unary minus inside a factor chain, e.g. "2 * -x".
            return -factor();
        default:
            throw ParseError("expected a number, variable or '('", t.pos);
        }
    }

    Lexer lex_;
    const std::vector<std::string>& variables_;
    std::size_t m_;
};

} // namespace

Polynomial parse_polynomial(const std::string& src, const std::vector<std::string>& variables) {
    return Parser(src, variables).run();
}

} // namespace inexp
