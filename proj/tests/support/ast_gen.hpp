#pragma once

// Random statement generator for parser round-trip property tests.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pytod/dsl.hpp"

namespace pytod::testing {

class AstGen {
public:
    explicit AstGen(std::uint64_t seed) : rng_(seed) {}

    dsl::Statement statement() {
        switch (pick(10)) {
            case 0:
                return dsl::Statement{dsl::ParseErrorMarker{}};
            case 1:
            case 2:
                return dsl::Statement{dsl::BareCall{call(2)}};
            default: {
                dsl::Target target;
                target.variable = ident();
                if (pick(2) == 0) target.attribute = ident();
                return dsl::Statement{dsl::Assign{target, expr(2)}};
            }
        }
    }

    dsl::Expr expr(int depth) {
        const int choice = depth > 0 ? pick(6) : pick(4);
        switch (choice) {
            case 0:
            case 1:
                return dsl::Expr{literal(depth)};
            case 2:
                return dsl::Expr{dsl::VarRef{ident()}};
            case 3:
                return dsl::Expr{dsl::AttrRef{ident(), ident()}};
            default:
                return dsl::Expr{call(depth - 1)};
        }
    }

    dsl::CallExpr call(int depth) {
        dsl::CallExpr out;
        out.callee_base = ident();
        if (pick(4) == 0) out.callee_attribute = ident();
        const int n_pos = pick(3);
        for (int i = 0; i < n_pos; ++i) out.positional.push_back(expr(depth));
        const int n_kw = pick(3);
        std::vector<std::string> names;
        for (int i = 0; i < n_kw; ++i) {
            std::string name = ident();
            if (std::find(names.begin(), names.end(), name) != names.end()) continue;
            names.push_back(name);
            out.keywords.emplace_back(name, expr(depth));
        }
        return out;
    }

    dsl::Literal literal(int depth) {
        switch (depth > 0 ? pick(5) : pick(4)) {
            case 0:
                return dsl::Literal{random_string()};
            case 1:
                return dsl::Literal{random_int()};
            case 2:
                return dsl::Literal{random_double()};
            case 3:
                return dsl::Literal{pick(2) == 0};
            default: {
                dsl::Literal::List items;
                const int n = pick(4);
                for (int i = 0; i < n; ++i) items.push_back(literal(depth - 1));
                return dsl::Literal{std::move(items)};
            }
        }
    }

    std::string ident() {
        static const char* pool[] = {"x1",       "x2",        "x17",     "say",
                                     "FindBus",  "from_city", "to_city", "value",
                                     "confirm",  "departure", "a",       "_tmp"};
        std::string base = pool[pick(static_cast<int>(std::size(pool)))];
        if (pick(4) == 0) base += std::to_string(pick(100));
        return base;
    }

    std::string random_string() {
        static const char charset[] =
            " abcdefgzXYZ0123456789_.,:;-'\"\\()[]{}=?!";
        const int len = pick(12);
        std::string out;
        for (int i = 0; i < len; ++i) out.push_back(charset[pick(static_cast<int>(sizeof(charset)) - 1)]);
        return out;
    }

    std::int64_t random_int() {
        switch (pick(4)) {
            case 0: return pick(10);
            case 1: return -pick(1000);
            case 2: return std::numeric_limits<std::int64_t>::max() - pick(3);
            default: return static_cast<std::int64_t>(rng_()) >> pick(30);
        }
    }

    double random_double() {
        while (true) {
            double v;
            switch (pick(4)) {
                case 0: v = pick(1000) / 8.0; break;
                case 1: v = -std::uniform_real_distribution<double>(0, 1)(rng_); break;
                case 2: v = std::uniform_real_distribution<double>(-1e18, 1e18)(rng_); break;
                default: v = std::uniform_real_distribution<double>(-5, 5)(rng_); break;
            }
            if (std::isfinite(v)) return v;
        }
    }

    int pick(int n) { return static_cast<int>(rng_() % static_cast<std::uint64_t>(n)); }

private:
    std::mt19937_64 rng_;
};

}  // namespace pytod::testing
