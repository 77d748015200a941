#include "pytod/dsl.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace pytod::dsl {

namespace {

enum class TokKind {
    Ident,
    String,
    Int,
    Float,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Dot,
    Equals,
    End,
};

struct Token {
    TokKind kind;
    std::string text;        // identifier text or decoded string value
    std::string raw_number;  // numeric tokens keep their spelling
    SourceSpan span;
};

bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_spaces();
            if (pos_ >= text_.size()) {
                out.push_back({TokKind::End, "", "", span(pos_, pos_)});
                return out;
            }
            const std::size_t start = pos_;
            const char c = text_[pos_];
            if (ident_start(c)) {
                while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
                out.push_back({TokKind::Ident, std::string(text_.substr(start, pos_ - start)),
                               "", span(start, pos_)});
            } else if (c == '"') {
                out.push_back(lex_string());
            } else if (std::isdigit(static_cast<unsigned char>(c)) ||
                       (c == '-' && pos_ + 1 < text_.size() &&
                        std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
                out.push_back(lex_number());
            } else {
                TokKind kind;
                switch (c) {
                    case '(': kind = TokKind::LParen; break;
                    case ')': kind = TokKind::RParen; break;
                    case '[': kind = TokKind::LBracket; break;
                    case ']': kind = TokKind::RBracket; break;
                    case ',': kind = TokKind::Comma; break;
                    case '.': kind = TokKind::Dot; break;
                    case '=': kind = TokKind::Equals; break;
                    default:
                        throw SyntaxError(std::string("unexpected character '") + c + "'",
                                          span(start, start + 1));
                }
                ++pos_;
                out.push_back({kind, std::string(1, c), "", span(start, pos_)});
            }
        }
    }

private:
    void skip_spaces() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    SourceSpan span(std::size_t a, std::size_t b) const {
        return SourceSpan{1, static_cast<int>(a), static_cast<int>(b)};
    }

    Token lex_string() {
        const std::size_t start = pos_;
        ++pos_;  // opening quote
        std::string value;
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '"') {
                ++pos_;
                return {TokKind::String, value, "", span(start, pos_)};
            }
            if (c == '\\') {
                if (pos_ + 1 >= text_.size()) break;
                const char esc = text_[pos_ + 1];
                if (esc != '"' && esc != '\\') {
                    throw SyntaxError(std::string("unsupported escape '\\") + esc + "'",
                                      span(pos_, pos_ + 2));
                }
                value.push_back(esc);
                pos_ += 2;
                continue;
            }
            value.push_back(c);
            ++pos_;
        }
        throw SyntaxError("unterminated string literal", span(start, text_.size()));
    }

    Token lex_number() {
        const std::size_t start = pos_;
        if (text_[pos_] == '-') ++pos_;
        bool has_dot = false;
        bool has_exp = false;
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                ++pos_;
            } else if (c == '.' && !has_dot && !has_exp) {
                has_dot = true;
                ++pos_;
            } else if ((c == 'e' || c == 'E') && !has_exp && pos_ + 1 < text_.size()) {
                const char n = text_[pos_ + 1];
                if (std::isdigit(static_cast<unsigned char>(n)) || n == '+' || n == '-') {
                    has_exp = true;
                    pos_ += (n == '+' || n == '-') ? 2 : 1;
                } else {
                    break;
                }
            } else {
                break;
            }
        }
        const std::string raw(text_.substr(start, pos_ - start));
        if (raw.back() == '.' || raw.back() == 'e' || raw.back() == 'E' ||
            raw.back() == '+' || raw.back() == '-') {
            throw SyntaxError("malformed number '" + raw + "'", span(start, pos_));
        }
        const TokKind kind = (has_dot || has_exp) ? TokKind::Float : TokKind::Int;
        return {kind, "", raw, span(start, pos_)};
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

    Statement statement() {
        if (at(TokKind::End)) {
            throw SyntaxError("empty statement", peek().span);
        }
        if (at(TokKind::Ident) && peek().text == "parse_error") {
            if (toks_[pos_ + 1].kind == TokKind::End) {
                ++pos_;
                return Statement{ParseErrorMarker{}};
            }
            throw SyntaxError("parse_error must stand alone", peek().span);
        }
        // Assignment needs lookahead: IDENT ("." IDENT)? "=" but not "==",
        // and `f(...)` alone is a bare call.
        if (at(TokKind::Ident)) {
            const bool plain_assign = toks_[pos_ + 1].kind == TokKind::Equals;
            const bool attr_assign = toks_[pos_ + 1].kind == TokKind::Dot &&
                                     toks_[pos_ + 2].kind == TokKind::Ident &&
                                     toks_[pos_ + 3].kind == TokKind::Equals;
            if (plain_assign || attr_assign) {
                Target target;
                target.variable = expect(TokKind::Ident, "identifier").text;
                if (attr_assign) {
                    expect(TokKind::Dot, "'.'");
                    target.attribute = expect(TokKind::Ident, "identifier").text;
                }
                expect(TokKind::Equals, "'='");
                Expr value = expression();
                expect(TokKind::End, "end of statement");
                return Statement{Assign{std::move(target), std::move(value)}};
            }
        }
        Expr head = expression();
        expect(TokKind::End, "end of statement");
        if (auto* call = std::get_if<CallExpr>(&head.node)) {
            return Statement{BareCall{std::move(*call)}};
        }
        throw SyntaxError("statement must be an assignment, a call, or parse_error",
                          toks_.front().span);
    }

private:
    const Token& peek(std::size_t ahead = 0) const {
        return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
    }

    bool at(TokKind kind) const { return peek().kind == kind; }

    Token expect(TokKind kind, const std::string& what) {
        if (!at(kind)) {
            throw SyntaxError("expected " + what, peek().span);
        }
        return toks_[pos_++];
    }

    Expr expression() {
        switch (peek().kind) {
            case TokKind::String:
            case TokKind::Int:
            case TokKind::Float:
            case TokKind::LBracket:
                return Expr{literal()};
            case TokKind::Ident:
                break;
            default:
                throw SyntaxError("expected expression", peek().span);
        }
        const Token& first = peek();
        if (first.text == "True" || first.text == "False") {
            return Expr{literal()};
        }
        if (first.text == "parse_error") {
            throw SyntaxError("parse_error is reserved", first.span);
        }
        std::string base = toks_[pos_++].text;
        std::optional<std::string> attribute;
        if (at(TokKind::Dot)) {
            ++pos_;
            attribute = expect(TokKind::Ident, "identifier after '.'").text;
        }
        if (at(TokKind::LParen)) {
            return Expr{call_tail(std::move(base), std::move(attribute))};
        }
        if (attribute) {
            return Expr{AttrRef{std::move(base), std::move(*attribute)}};
        }
        return Expr{VarRef{std::move(base)}};
    }

    CallExpr call_tail(std::string base, std::optional<std::string> attribute) {
        CallExpr call;
        call.callee_base = std::move(base);
        call.callee_attribute = std::move(attribute);
        expect(TokKind::LParen, "'('");
        if (at(TokKind::RParen)) {
            ++pos_;
            return call;
        }
        while (true) {
            // kwarg needs lookahead: IDENT "=" expr
            if (at(TokKind::Ident) && peek(1).kind == TokKind::Equals) {
                const Token name = toks_[pos_];
                pos_ += 2;
                for (const auto& [existing, _] : call.keywords) {
                    if (existing == name.text) {
                        throw SyntaxError("duplicate keyword argument '" + name.text + "'",
                                          name.span);
                    }
                }
                call.keywords.emplace_back(name.text, expression());
            } else {
                if (!call.keywords.empty()) {
                    throw SyntaxError("positional argument follows keyword argument",
                                      peek().span);
                }
                call.positional.push_back(expression());
            }
            if (at(TokKind::Comma)) {
                ++pos_;
                continue;
            }
            expect(TokKind::RParen, "')' or ','");
            return call;
        }
    }

    Literal literal() {
        const Token tok = toks_[pos_];
        switch (tok.kind) {
            case TokKind::String:
                ++pos_;
                return Literal{tok.text};
            case TokKind::Int: {
                ++pos_;
                std::int64_t v = 0;
                const auto [ptr, ec] = std::from_chars(
                    tok.raw_number.data(), tok.raw_number.data() + tok.raw_number.size(), v);
                if (ec != std::errc{} || ptr != tok.raw_number.data() + tok.raw_number.size()) {
                    throw SyntaxError("integer literal out of range", tok.span);
                }
                return Literal{v};
            }
            case TokKind::Float: {
                ++pos_;
                double v = 0;
                const auto [ptr, ec] = std::from_chars(
                    tok.raw_number.data(), tok.raw_number.data() + tok.raw_number.size(), v);
                if (ec != std::errc{} || ptr != tok.raw_number.data() + tok.raw_number.size()) {
                    throw SyntaxError("float literal out of range", tok.span);
                }
                return Literal{v};
            }
            case TokKind::Ident:
                if (tok.text == "True") {
                    ++pos_;
                    return Literal{true};
                }
                if (tok.text == "False") {
                    ++pos_;
                    return Literal{false};
                }
                throw SyntaxError("expected literal", tok.span);
            case TokKind::LBracket: {
                ++pos_;
                Literal::List items;
                if (at(TokKind::RBracket)) {
                    ++pos_;
                    return Literal{std::move(items)};
                }
                while (true) {
                    items.push_back(literal());
                    if (at(TokKind::Comma)) {
                        ++pos_;
                        continue;
                    }
                    expect(TokKind::RBracket, "']' or ','");
                    return Literal{std::move(items)};
                }
            }
            default:
                throw SyntaxError("expected literal", tok.span);
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

void render_literal_to(std::ostringstream& out, const Literal& lit) {
    struct Visitor {
        std::ostringstream& out;
        void operator()(const std::string& s) const {
            out << '"';
            for (const char c : s) {
                if (c == '"' || c == '\\') out << '\\';
                out << c;
            }
            out << '"';
        }
        void operator()(std::int64_t v) const { out << v; }
        void operator()(double v) const {
            char buf[64];
            const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
            std::string text(buf, ptr);
            // Keep a float marker so the value re-parses as a float.
            if (text.find('.') == std::string::npos &&
                text.find('e') == std::string::npos &&
                text.find('E') == std::string::npos) {
                text += ".0";
            }
            out << text;
        }
        void operator()(bool v) const { out << (v ? "True" : "False"); }
        void operator()(const Literal::List& items) const {
            out << '[';
            for (std::size_t i = 0; i < items.size(); ++i) {
                if (i > 0) out << ", ";
                render_literal_to(out, items[i]);
            }
            out << ']';
        }
    };
    std::visit(Visitor{out}, lit.value);
}

void render_expr_to(std::ostringstream& out, const Expr& expr) {
    struct Visitor {
        std::ostringstream& out;
        void operator()(const Literal& lit) const { render_literal_to(out, lit); }
        void operator()(const VarRef& ref) const { out << ref.name; }
        void operator()(const AttrRef& ref) const { out << ref.base << '.' << ref.attribute; }
        void operator()(const CallExpr& call) const {
            out << call.callee_text() << '(';
            bool first = true;
            for (const auto& arg : call.positional) {
                if (!first) out << ", ";
                first = false;
                render_expr_to(out, arg);
            }
            for (const auto& [name, value] : call.keywords) {
                if (!first) out << ", ";
                first = false;
                out << name << '=';
                render_expr_to(out, value);
            }
            out << ')';
        }
    };
    std::visit(Visitor{out}, expr.node);
}

}  // namespace

Statement parse_statement(std::string_view text) {
    if (text.find('\n') != std::string_view::npos) {
        throw SyntaxError("statement must be a single line", SourceSpan{});
    }
    return Parser(Lexer(text).run()).statement();
}

std::string render_literal(const Literal& lit) {
    std::ostringstream out;
    render_literal_to(out, lit);
    return out.str();
}

std::string render_expr(const Expr& expr) {
    std::ostringstream out;
    render_expr_to(out, expr);
    return out.str();
}

std::string render_statement(const Statement& stmt) {
    std::ostringstream out;
    struct Visitor {
        std::ostringstream& out;
        void operator()(const Assign& assign) const {
            out << assign.target.variable;
            if (assign.target.attribute) out << '.' << *assign.target.attribute;
            out << " = ";
            render_expr_to(out, assign.value);
        }
        void operator()(const BareCall& call) const {
            render_expr_to(out, Expr{call.call});
        }
        void operator()(const ParseErrorMarker&) const { out << "parse_error"; }
    };
    std::visit(Visitor{out}, stmt.node);
    return out.str();
}

std::vector<Statement> split_program(std::string_view text) {
    std::vector<Statement> out;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        ++line_no;
        std::string_view line = text.substr(start, end - start);
        const bool blank =
            line.find_first_not_of(" \t\r") == std::string_view::npos;
        if (!blank) {
            try {
                out.push_back(parse_statement(line));
            } catch (const SyntaxError& err) {
                SourceSpan span = err.span();
                span.line = static_cast<int>(line_no);
                throw SyntaxError(err.diagnostic(), span);
            }
        }
        if (end == text.size()) break;
        start = end + 1;
    }
    return out;
}

}  // namespace pytod::dsl
