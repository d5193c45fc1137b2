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
#include "milnor/rational.hpp"

#include <stdexcept>

#include <gmp.h>

namespace milnor {

std::string to_string(const Rational& q) {
    return q.str();
}

Rational parse_rational(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    auto is_int = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_int(num) || !is_int(den) || den.front() == '-' || den.front() == '+')
        throw std::invalid_argument("malformed rational literal: " + std::string(text));
    std::string n(num);
    if (n.front() == '+') n.erase(0, 1);
    Integer d{std::string(den)};
    if (d == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
    return Rational(Integer(n), d);
}

Integer gcd(const Integer& a, const Integer& b) {
    return boost::multiprecision::gcd(a, b);
}

Integer lcm(const Integer& a, const Integer& b) {
    if (a == 0 || b == 0) return Integer(0);
    return boost::multiprecision::lcm(a, b);
}

std::uint64_t mod_u64(const Integer& a, std::uint64_t p) {
    // mpz_fdiv_ui returns the non-negative residue for p that fits in an unsigned long
    return mpz_fdiv_ui(a.backend().data(), static_cast<unsigned long>(p));
}

}  // namespace milnor
