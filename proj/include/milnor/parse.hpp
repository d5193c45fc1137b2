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
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "milnor/poly.hpp"

namespace milnor {

/// Syntax errors carry the 0-based character offset where parsing stopped.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Parses and expands an expression over the named variables.
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := ('+' | '-') unary | power
///   power   := primary ('^' integer)?
///   primary := integer | identifier | '(' expr ')'
///
/// Division is only allowed by nonzero constants, so "3/4*x" is a rational
/// literal times x. Juxtaposition ("2x", "x y") is rejected.
Poly parse_poly(std::string_view text, const std::vector<std::string>& variable_names);

/// Identifiers appearing in text, in order of first appearance.
std::vector<std::string> identifiers_in(std::string_view text);

}  // namespace milnor
