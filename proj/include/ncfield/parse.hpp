/*
   Copyright 2026 The ncfield Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef NCFIELD_PARSE_HPP
#define NCFIELD_PARSE_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cctype>
#include <string>

#include "errors.hpp"

namespace ncfield {

/// Recursive-descent parser for ASCII polynomial expressions: integers,
/// single-letter symbols with optional digit suffix (x, T, t, x1, ...),
/// + - * / ^ and parentheses; juxtaposition multiplies ("2T", "T t").
/// The context supplies the ring: it must provide a Value type and
/// number(cpp_int), symbol(name, pos), add, sub, mul, div(a, b, pos),
/// neg(a), pow(a, long, pos).
template <class Ctx>
class ExprParser {
   public:
    using Value = typename Ctx::Value;

    ExprParser(Ctx& ctx, std::string text) : ctx_(ctx), s_(std::move(text)) {}

    Value parse() {
        Value v = expr();
        skip_ws();
        if (pos_ != s_.size()) throw parse_error("unexpected trailing input", pos_);
        return v;
    }

   private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    Value expr() {
        Value v = peek() == '-' ? (++pos_, ctx_.neg(term())) : term();
        while (true) {
            char c = peek();
            if (c == '+') {
                ++pos_;
                v = ctx_.add(v, term());
            } else if (c == '-') {
                ++pos_;
                v = ctx_.sub(v, term());
            } else {
                return v;
            }
        }
    }

    Value term() {
        Value v = factor();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                v = ctx_.mul(v, factor());
            } else if (c == '/') {
                std::size_t at = pos_++;
                v = ctx_.div(v, factor(), at);
            } else if (c == '(' || std::isalnum(static_cast<unsigned char>(c))) {
                v = ctx_.mul(v, factor());  // juxtaposition
            } else {
                return v;
            }
        }
    }

    Value factor() {
        Value v = base();
        if (peek() == '^') {
            std::size_t at = pos_++;
            skip_ws();
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                throw parse_error("exponent must be a non-negative integer", pos_);
            long k = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                k = k * 10 + (s_[pos_] - '0');
                if (k > 1'000'000) throw parse_error("exponent too large", pos_);
                ++pos_;
            }
            v = ctx_.pow(v, k, at);
        }
        return v;
    }

    Value base() {
        char c = peek();
        if (c == '(') {
            std::size_t open = pos_++;
            Value v = expr();
            if (peek() != ')') throw parse_error("unbalanced parenthesis", open);
            ++pos_;
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                digits.push_back(s_[pos_++]);
            return ctx_.number(boost::multiprecision::cpp_int(digits));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t at = pos_;
            std::string name(1, s_[pos_++]);
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                name.push_back(s_[pos_++]);
            return ctx_.symbol(name, at);
        }
        throw parse_error(pos_ >= s_.size() ? "unexpected end of input"
                                            : std::string("unexpected character '") + c + "'",
                          pos_);
    }

    Ctx& ctx_;
    std::string s_;
    std::size_t pos_ = 0;
};

template <class Ctx>
typename Ctx::Value parse_expression(Ctx& ctx, const std::string& text) {
    ExprParser<Ctx> p(ctx, text);
    return p.parse();
}

}  // namespace ncfield

#endif  // NCFIELD_PARSE_HPP
