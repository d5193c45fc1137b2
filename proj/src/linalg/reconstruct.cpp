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
#include "milnor/linalg/reconstruct.hpp"

#include <boost/multiprecision/integer.hpp>

#include "milnor/linalg/field.hpp"

namespace milnor::linalg {

Integer crt_combine(const Integer& a, const Integer& m, std::uint32_t r, std::uint32_t p) {
    const auto a_mod = static_cast<std::uint32_t>(mod_u64(a, p));
    const auto m_mod = static_cast<std::uint32_t>(mod_u64(m, p));
    PrimeField f(p);
    // x = a + m*t with t = (r - a) / m mod p
    std::uint32_t t = f.mul(f.sub(r, a_mod), f.inv(m_mod));
    return a + m * t;
}

std::optional<Rational> rational_reconstruct(const Integer& a, const Integer& m) {
    Integer half = m / 2;
    Integer bound = boost::multiprecision::sqrt(half);
    Integer r0 = m, r1 = a % m;
    if (r1 < 0) r1 += m;
    Integer t0 = 0, t1 = 1;
    while (r1 > bound) {
        Integer q = r0 / r1;
        Integer r2 = r0 - q * r1;
        Integer t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (t1 == 0 || abs(t1) > bound || gcd(r1, t1) != 1) return std::nullopt;
    return Rational(r1, t1);
}

}  // namespace milnor::linalg
