/* Copyright 2026 The skewlat Authors.

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

// Finite fields F_{p^j} and finite chain rings O_K / p O_K. Both are Rings over
// the prime field (a base ring at precision 1); automorphisms are LinearMaps.

#ifndef SKEWLAT_RESIDUE_HPP
#define SKEWLAT_RESIDUE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "skewlat/ring.hpp"

namespace skewlat {

class Tower;

/// Polynomials over Z/p as coefficient vectors, low degree first.
using IntPoly = std::vector<std::int64_t>;

bool is_irreducible_mod_p(const IntPoly& poly, std::int64_t p);

/// The monic irreducible polynomial of the given degree whose coefficient
/// vector (a_0, ..., a_{j-1}) is lexicographically smallest.
IntPoly smallest_irreducible(std::int64_t p, int degree);

struct RingAuto {
    std::string name;
    LinearMap map;
    int order = 1;
};

struct FiniteField {
    std::int64_t p = 0;
    int degree = 1;
    IntPoly modulus;  // monic, degree + 1 coefficients
    RingPtr ring;     // basis 1, x, ..., x^{j-1}
    RingAuto frobenius;

    std::uint64_t size() const { return ring->size(); }
};

FiniteField make_finite_field(std::int64_t p, int degree, BaseKind kind = BaseKind::PAdic);

struct ChainRing {
    std::int64_t p = 0;
    int e = 1;
    int residue_degree = 1;
    RingPtr ring;
    /// Generator of the maximal ideal (zero for a field).
    Ring::Elem max_ideal_gen;
    std::vector<RingAuto> automorphisms;

    std::uint64_t size() const { return ring->size(); }
};

/// Residue ring O_K / p O_K with the induced Galois automorphisms.
ChainRing chain_ring_from_extension(const Tower& ext);

/// Unit test in a finite commutative local ring: not in the maximal ideal.
bool is_unit(const ChainRing& S, const Ring::Elem& r);

}  // namespace skewlat

#endif
