/*
   Copyright 2026 The milnor authors

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
#include "milnor/parse.hpp"

#include <algorithm>
#include <cctype>

namespace milnor {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return c >= '0' && c <= '9'; }

class Parser {
public:
    Parser(std::string_view text, const std::vector<std::string>& names) : text_(text), names_(names) {
        if (names.empty()) throw std::invalid_argument("no variables given");
        nvars_ = static_cast<int>(names.size());
    }

    Poly run() {
        skip_ws();
        if (pos_ == text_.size()) throw ParseError("empty expression", pos_);
        Poly p = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Poly expr() {
        Poly acc = term();
        for (;;) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    Poly term() {
        Poly acc = unary();
        for (;;) {
            if (accept('*')) {
                acc = acc * unary();
            } else if (accept('/')) {
                std::size_t at = pos_;
                Poly d = unary();
                if (d.is_zero() || d.total_degree() != 0) {
                    pos_ = at;
                    fail(d.is_zero() ? "division by zero" : "division by a non-constant");
                }
                acc *= Rational(1) / d.leading().coeff;
            } else {
                skip_ws();
                if (pos_ < text_.size() && (ident_start(text_[pos_]) || digit(text_[pos_]) || text_[pos_] == '('))
                    fail("implicit multiplication is not allowed");
                return acc;
            }
        }
    }

    Poly unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    Poly power() {
        Poly base = primary();
        if (!accept('^')) return base;
        skip_ws();
        std::size_t at = pos_;
        bool negative = false;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            negative = text_[pos_] == '-';
            ++pos_;
            skip_ws();
        }
        if (pos_ >= text_.size() || !digit(text_[pos_])) fail("expected integer exponent");
        std::size_t start = pos_;
        while (pos_ < text_.size() && digit(text_[pos_])) ++pos_;
        std::string_view lit = text_.substr(start, pos_ - start);
        if (negative) {
            pos_ = at;
            fail("negative exponent");
        }
        if (lit.size() > 3 || std::stoi(std::string(lit)) > kMaxExponent) {
            pos_ = start;
            fail("exponent too large");
        }
        return base.pow(std::stoi(std::string(lit)));
    }

    Poly primary() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Poly inner = expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (digit(c)) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && digit(text_[pos_])) ++pos_;
            return Poly(nvars_, Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
        }
        if (ident_start(c)) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            auto it = std::find(names_.begin(), names_.end(), name);
            if (it == names_.end()) {
                pos_ = start;
                fail("unknown identifier '" + name + "'");
            }
            return Poly::variable(nvars_, static_cast<int>(it - names_.begin()));
        }
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    const std::vector<std::string>& names_;
    int nvars_ = 0;
    std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, const std::vector<std::string>& variable_names) {
    return Parser(text, variable_names).run();
}

std::vector<std::string> identifiers_in(std::string_view text) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < text.size()) {
        if (ident_start(text[i]) && (i == 0 || !ident_char(text[i - 1]))) {
            std::size_t start = i;
            while (i < text.size() && ident_char(text[i])) ++i;
            std::string name(text.substr(start, i - start));
            if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
        } else {
            ++i;
        }
    }
    return out;
}

}  // namespace milnor
