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

// Reduction of a natural order modulo p and Construction A lattices.
//
// Lambda is a PetitAlgebra over a truncated ring of integers O_K; its
// reduction is the PetitAlgebra over O_K / p O_K with the reduced twist and
// modulus. A lattice is kept in valuation-Hermite form over the base ring,
// in the coordinates of PetitAlgebra::to_base.

#ifndef SKEWLAT_LIFT_HPP
#define SKEWLAT_LIFT_HPP

#include <memory>
#include <string>

#include "skewlat/codes.hpp"

namespace skewlat {

class ReductionMap {
public:
    /// Throws ModulusMismatch unless target is the reduction of source (same
    /// multiplication table, reduced twist, reduced modulus).
    ReductionMap(std::shared_ptr<const PetitAlgebra> source, std::shared_ptr<const PetitAlgebra> target);

    const PetitAlgebra& source() const noexcept { return *source_; }
    const PetitAlgebra& target() const noexcept { return *target_; }
    const std::shared_ptr<const PetitAlgebra>& target_ptr() const noexcept { return target_; }

    PetitAlgebra::Elem reduce(const PetitAlgebra::Elem& x) const;
    /// Digit-exact lift with residue digits in [0, p).
    PetitAlgebra::Elem lift(const PetitAlgebra::Elem& x) const;

private:
    std::shared_ptr<const PetitAlgebra> source_;
    std::shared_ptr<const PetitAlgebra> target_;
};

/// The reduction of Lambda, built from Lambda alone.
ReductionMap reduction_of(std::shared_ptr<const PetitAlgebra> lambda);

struct Lattice {
    BaseRing base;
    /// N = m * [O_K : base].
    std::size_t rank = 0;
    /// Rank over O_K (the lattice is also an O_K-module).
    int ok_rank = 0;
    /// Upper triangular, diagonal entries uniformizer^v, entries above a
    /// pivot reduced modulo it.
    Echelon hermite;
};

Lattice construction_a(const ReductionMap& psi, const CyclicCode& C);

/// log_p of |Lambda / L|; throws PrecisionExhausted if the precision cannot
/// certify full rank.
int lattice_index_exponent(const Lattice& L);
/// p^exponent as a decimal string, or "p^k" when it overflows 64 bits.
std::string lattice_index(const Lattice& L);

bool membership(const Lattice& L, const BaseVec& v);

}  // namespace skewlat

#endif
