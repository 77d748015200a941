#pragma once

// Statement sub-language used for user and system actions: lexer, recursive
// descent parser, AST and canonical printer. One statement per source line.
//
// Grammar:
//   statement := target "=" expr | call | "parse_error"
//   target    := IDENT ("." IDENT)?
//   expr      := literal | IDENT | IDENT "." IDENT | call
//   call      := (IDENT | IDENT "." IDENT) "(" [arg ("," arg)*] ")"
//   arg       := expr | IDENT "=" expr
//   literal   := STRING | INT | FLOAT | "True" | "False"
//              | "[" [literal ("," literal)*] "]"
//
// String escapes are limited to \" and \\ so rendering round-trips exactly.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "pytod/errors.hpp"

namespace pytod::dsl {

struct SourceSpan {
    int line = 1;           // 1-based
    int column_start = 0;   // 0-based, inclusive
    int column_end = 0;     // 0-based, exclusive

    bool operator==(const SourceSpan&) const = default;
};

class SyntaxError : public Error {
public:
    SyntaxError(std::string message, SourceSpan span)
        : Error(message + " (line " + std::to_string(span.line) + ", col " +
                std::to_string(span.column_start) + ")"),
          span_(span),
          diagnostic_(std::move(message)) {}

    const SourceSpan& span() const { return span_; }
    const std::string& diagnostic() const { return diagnostic_; }

private:
    SourceSpan span_;
    std::string diagnostic_;
};

struct Literal {
    using List = std::vector<Literal>;
    std::variant<std::string, std::int64_t, double, bool, List> value;

    bool operator==(const Literal&) const = default;

    bool is_string() const { return std::holds_alternative<std::string>(value); }
    const std::string& as_string() const { return std::get<std::string>(value); }
};

struct Expr;

struct VarRef {
    std::string name;
    bool operator==(const VarRef&) const = default;
};

struct AttrRef {
    std::string base;
    std::string attribute;
    bool operator==(const AttrRef&) const = default;
};

struct CallExpr {
    std::string callee_base;
    std::optional<std::string> callee_attribute;  // set for `a.b(...)`
    std::vector<Expr> positional;
    std::vector<std::pair<std::string, Expr>> keywords;  // stored order

    bool operator==(const CallExpr&) const = default;

    std::string callee_text() const {
        return callee_attribute ? callee_base + "." + *callee_attribute : callee_base;
    }
};

struct Expr {
    std::variant<Literal, VarRef, AttrRef, CallExpr> node;
    bool operator==(const Expr&) const = default;
};

struct Target {
    std::string variable;
    std::optional<std::string> attribute;
    bool operator==(const Target&) const = default;
};

struct Assign {
    Target target;
    Expr value;
    bool operator==(const Assign&) const = default;
};

struct BareCall {
    CallExpr call;
    bool operator==(const BareCall&) const = default;
};

struct ParseErrorMarker {
    bool operator==(const ParseErrorMarker&) const = default;
};

struct Statement {
    std::variant<Assign, BareCall, ParseErrorMarker> node;
    bool operator==(const Statement&) const = default;

    bool is_parse_error() const { return std::holds_alternative<ParseErrorMarker>(node); }
    const Assign* as_assign() const { return std::get_if<Assign>(&node); }
    const BareCall* as_call() const { return std::get_if<BareCall>(&node); }
};

// Parses a single source line. Throws SyntaxError with a span on malformed
// input; the bare token `parse_error` yields ParseErrorMarker.
Statement parse_statement(std::string_view text);

// Canonical single-line text; parse_statement(render_statement(s)) == s.
std::string render_statement(const Statement& stmt);
std::string render_expr(const Expr& expr);
std::string render_literal(const Literal& lit);

// One Statement per nonempty line. A SyntaxError aborts with the 1-based
// physical line index filled in.
std::vector<Statement> split_program(std::string_view text);

}  // namespace pytod::dsl
