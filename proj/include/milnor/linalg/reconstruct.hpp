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

#include <cstdint>
#include <optional>

#include "milnor/rational.hpp"

namespace milnor::linalg {

/// Combines x = a mod m with x = r mod p (p coprime to m) into the residue
/// modulo m*p in [0, m*p).
Integer crt_combine(const Integer& a, const Integer& m, std::uint32_t r, std::uint32_t p);

/// Wang's rational reconstruction: the unique n/d with |n|, d <= sqrt(m/2)
/// and n = a*d mod m, if one exists.
std::optional<Rational> rational_reconstruct(const Integer& a, const Integer& m);

}  // namespace milnor::linalg
