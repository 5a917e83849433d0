#pragma once

#include <array>
#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "microlang/source.hpp"

namespace microlang {

enum class TokType {
    Ident,
    Keyword,
    Int,
    Double,
    String,
    // punctuation
    LBrace, RBrace, LParen, RParen, LBracket, RBracket,
    Semi, Colon, Comma, Dot, Assign, At, Pipe, Amp, Star, Plus, Minus, Slash, Percent,
    Lt, Gt, Le, Ge, EqEq, NotEq, Bang, AndAnd, OrOr, Question, Hash,
    End,
};

struct Token {
    TokType type = TokType::End;
    std::string text;        // identifier/keyword spelling or literal lexeme
    std::string str_value;   // decoded payload for String tokens
    std::int64_t int_value = 0;
    double dbl_value = 0.0;
    SourceSpan span;

    bool is_kw(std::string_view kw) const { return type == TokType::Keyword && text == kw; }
    bool is_ident(std::string_view name) const { return type == TokType::Ident && text == name; }
};

inline const char* tok_type_name(TokType t) {
    switch (t) {
        case TokType::Ident: return "identifier";
        case TokType::Keyword: return "keyword";
        case TokType::Int: return "int literal";
        case TokType::Double: return "double literal";
        case TokType::String: return "string literal";
        case TokType::LBrace: return "'{'";
        case TokType::RBrace: return "'}'";
        case TokType::LParen: return "'('";
        case TokType::RParen: return "')'";
        case TokType::LBracket: return "'['";
        case TokType::RBracket: return "']'";
        case TokType::Semi: return "';'";
        case TokType::Colon: return "':'";
        case TokType::Comma: return "','";
        case TokType::Dot: return "'.'";
        case TokType::Assign: return "'='";
        case TokType::At: return "'@'";
        case TokType::Pipe: return "'|'";
        case TokType::Amp: return "'&'";
        case TokType::Star: return "'*'";
        case TokType::Plus: return "'+'";
        case TokType::Minus: return "'-'";
        case TokType::Slash: return "'/'";
        case TokType::Percent: return "'%'";
        case TokType::Lt: return "'<'";
        case TokType::Gt: return "'>'";
        case TokType::Le: return "'<='";
        case TokType::Ge: return "'>='";
        case TokType::EqEq: return "'=='";
        case TokType::NotEq: return "'!='";
        case TokType::Bang: return "'!'";
        case TokType::AndAnd: return "'&&'";
        case TokType::OrOr: return "'||'";
        case TokType::Question: return "'?'";
        case TokType::End: return "end of input";
    }
    return "?";
}

inline bool is_keyword(std::string_view w) {
    static const std::array<std::string_view, 19> kws = {
        "inputPort", "outputPort", "interface", "type", "cset", "define", "main",
        "provide", "until", "execution", "if", "else", "while", "nil", "new",
        "rebind", "sleep", "true", "false",
    };
    for (auto k : kws)
        if (k == w) return true;
    return false;
}

namespace detail {

class Lexer {
public:
    Lexer(std::string_view src, std::string file) : src_(src), file_(std::move(file)) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        for (;;) {
            skip_trivia();
            mark();
            if (eof()) {
                out.push_back(make(TokType::End, ""));
                return out;
            }
            char c = peek();
            if (c == '"') { out.push_back(string_token()); continue; }
            if (std::isdigit(static_cast<unsigned char>(c))) { out.push_back(number_token()); continue; }
            if (c == '_' || std::isalpha(static_cast<unsigned char>(c))) { out.push_back(word_token()); continue; }
            out.push_back(punct_token());
        }
    }

private:
    std::string_view src_;
    std::string file_;
    std::size_t i_ = 0;
    int line_ = 1, col_ = 1;
    int mark_line_ = 1, mark_col_ = 1;

    bool eof() const { return i_ >= src_.size(); }
    char peek(std::size_t k = 0) const { return i_ + k < src_.size() ? src_[i_ + k] : '\0'; }
    char advance() {
        char c = src_[i_++];
        if (c == '\n') { ++line_; col_ = 1; } else { ++col_; }
        return c;
    }
    void mark() { mark_line_ = line_; mark_col_ = col_; }

    SourceSpan span_here() const {
        return SourceSpan{file_, mark_line_, mark_col_, line_, col_ > 1 ? col_ - 1 : col_};
    }

    Token make(TokType t, std::string text) const {
        Token tok;
        tok.type = t;
        tok.text = std::move(text);
        tok.span = span_here();
        return tok;
    }

    [[noreturn]] void fail(const std::string& msg) const { throw LexError(span_here(), msg); }

    void skip_trivia() {
        for (;;) {
            while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) advance();
            if (peek() == '/' && peek(1) == '/') {
                while (!eof() && peek() != '\n') advance();
                continue;
            }
            if (peek() == '/' && peek(1) == '*') {
                mark();
                advance();
                advance();
                for (;;) {
                    if (eof()) fail("unterminated block comment");
                    if (peek() == '*' && peek(1) == '/') { advance(); advance(); break; }
                    advance();
                }
                continue;
            }
            return;
        }
    }

    Token string_token() {
        advance();  // opening quote
        std::string value;
        for (;;) {
            if (eof() || peek() == '\n') fail("unterminated string literal");
            char c = advance();
            if (c == '"') break;
            if (c == '\\') {
                if (eof()) fail("unterminated string literal");
                char e = advance();
                switch (e) {
                    case '"': value += '"'; break;
                    case '\\': value += '\\'; break;
                    case 'n': value += '\n'; break;
                    case 't': value += '\t'; break;
                    case 'r': value += '\r'; break;
                    default: fail(std::string("unknown escape '\\") + e + "'");
                }
                continue;
            }
            value += c;
        }
        Token t = make(TokType::String, value);
        t.str_value = std::move(t.text);
        t.text = "\"" + t.str_value + "\"";
        return t;
    }

    Token number_token() {
        std::string digits;
        while (std::isdigit(static_cast<unsigned char>(peek()))) digits += advance();
        bool is_double = false;
        if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
            is_double = true;
            digits += advance();
            while (std::isdigit(static_cast<unsigned char>(peek()))) digits += advance();
        }
        if (peek() == 'e' || peek() == 'E') {
            std::size_t k = 1;
            if (peek(1) == '+' || peek(1) == '-') k = 2;
            if (std::isdigit(static_cast<unsigned char>(peek(k)))) {
                is_double = true;
                for (std::size_t j = 0; j < k; ++j) digits += advance();
                while (std::isdigit(static_cast<unsigned char>(peek()))) digits += advance();
            }
        }
        Token t = make(is_double ? TokType::Double : TokType::Int, digits);
        try {
            if (is_double)
                t.dbl_value = std::stod(digits);
            else
                t.int_value = std::stoll(digits);
        } catch (const std::out_of_range&) {
            fail("numeric literal out of range");
        }
        return t;
    }

    Token word_token() {
        std::string w;
        while (peek() == '_' || std::isalnum(static_cast<unsigned char>(peek()))) w += advance();
        return make(is_keyword(w) ? TokType::Keyword : TokType::Ident, std::move(w));
    }

    Token punct_token() {
        char c = advance();
        auto two = [&](char second, TokType yes, TokType no) {
            if (peek() == second) {
                advance();
                return make(yes, std::string{c, second});
            }
            return make(no, std::string{c});
        };
        switch (c) {
            case '{': return make(TokType::LBrace, "{");
            case '}': return make(TokType::RBrace, "}");
            case '(': return make(TokType::LParen, "(");
            case ')': return make(TokType::RParen, ")");
            case '[': return make(TokType::LBracket, "[");
            case ']': return make(TokType::RBracket, "]");
            case ';': return make(TokType::Semi, ";");
            case ':': return make(TokType::Colon, ":");
            case ',': return make(TokType::Comma, ",");
            case '.': return make(TokType::Dot, ".");
            case '@': return make(TokType::At, "@");
            case '*': return make(TokType::Star, "*");
            case '+': return make(TokType::Plus, "+");
            case '-': return make(TokType::Minus, "-");
            case '/': return make(TokType::Slash, "/");
            case '%': return make(TokType::Percent, "%");
            case '?': return make(TokType::Question, "?");
            case '=': return two('=', TokType::EqEq, TokType::Assign);
            case '!': return two('=', TokType::NotEq, TokType::Bang);
            case '<': return two('=', TokType::Le, TokType::Lt);
            case '>': return two('=', TokType::Ge, TokType::Gt);
            case '|': return two('|', TokType::OrOr, TokType::Pipe);
            case '&': return two('&', TokType::AndAnd, TokType::Amp);
            default: fail(std::string("illegal character '") + c + "'");
        }
    }
};

}  // namespace detail

/// Turns source text into tokens. Comments and whitespace are discarded; the
/// stream always ends with a single End token. Throws LexError.
inline std::vector<Token> tokenize(std::string_view source, std::string file = "<input>") {
    return detail::Lexer(source, std::move(file)).run();
}

}  // namespace microlang
