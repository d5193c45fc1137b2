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
#include <string>
#include <vector>

#include "milnor/linalg/rank.hpp"
#include "milnor/poly.hpp"

namespace milnor {

/// A relation r_0 f_0 + ... + r_n f_n = 0 with every r_i homogeneous of
/// the given degree.
struct Syzygy {
    std::vector<Poly> r;
    int degree = 0;
};

struct SyzygyGens {
    std::vector<Syzygy> gens;  // degrees nondecreasing
    /// Generators are complete in every degree <= degree_bound.
    int degree_bound = -1;
    /// Set when a Saito check proved that gens generate the whole module.
    bool generates_module = false;

    std::vector<int> degrees() const;
};

struct SyzygyOptions {
    linalg::KernelMethod method = linalg::KernelMethod::modular;
    std::uint64_t seed = 0;
    /// Stop as soon as n generators pass the Saito check.
    bool stop_when_free = true;
};

/// True iff sum r_i f_i = 0 exactly.
bool is_syzygy(const Poly& f, const std::vector<Poly>& r);

/// Basis of the degree-q part of the relation module.
std::vector<Syzygy> ar_slice(const Poly& f, int q, const SyzygyOptions& options = {});

/// A minimal generating set up to degree D, built degree by degree: the new
/// generators in degree q complete the span of x^m * (earlier generators) to
/// the whole degree-q part.
SyzygyGens minimal_generators(const Poly& f, int D, const SyzygyOptions& options = {});

struct FreenessReport {
    bool is_free = false;
    std::vector<int> exponents;   // generator degrees when free
    Rational determinant_scale;   // det = scale * f, zero if not free
    std::string reason;
};

/// Saito's criterion: with exactly n generators, f is free iff the
/// determinant of the matrix with rows (x_0..x_n), r^(1), ..., r^(n) is a
/// nonzero multiple of f.
FreenessReport saito_check(const Poly& f, const SyzygyGens& gens);

/// Determinant of a square polynomial matrix: cofactor expansion up to
/// 4 x 4, fraction-free (Bareiss) elimination beyond.
Poly determinant(const std::vector<std::vector<Poly>>& m);

struct PoincareData {
    std::vector<Integer> coefficients;  // of prod_j (1 + d_j t), constant term first
    Integer chi;                        // value at t = -1
};

/// Poincare polynomial of the complement of a free arrangement with the
/// given exponents, and its Euler characteristic.
PoincareData poincare_free(const std::vector<int>& exponents);

}  // namespace milnor
