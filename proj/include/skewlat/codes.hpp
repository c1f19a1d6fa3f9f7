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

// Cyclic (f, sigma, delta)-codes over finite chain rings: the principal left
// ideals S_f o g of a Petit algebra for monic right divisors g of f.
//
// A code is stored by its generator matrix over S. Size, membership and
// dimension are computed on the underlying F_p-space: the rows b * r for r a
// generator row and b running over the F_p-basis of S span the code
// additively.

#ifndef SKEWLAT_CODES_HPP
#define SKEWLAT_CODES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "skewlat/petit.hpp"

namespace skewlat {

class CyclicCode {
public:
    CyclicCode(std::shared_ptr<const PetitAlgebra> ambient, SkewPoly generator);

    const PetitAlgebra& ambient() const noexcept { return *ambient_; }
    const std::shared_ptr<const PetitAlgebra>& ambient_ptr() const noexcept { return ambient_; }
    const SkewPoly& generator() const noexcept { return generator_; }
    int length() const noexcept { return ambient_->m(); }
    /// Rows vec(t^i o g), i = 0 .. m - deg g - 1.
    const std::vector<PetitAlgebra::Elem>& generator_matrix() const noexcept { return rows_; }

    /// Reduced echelon form of the additive span over F_p (canonical).
    const Echelon& fp_echelon() const noexcept { return fp_; }
    std::size_t fp_dimension() const noexcept { return fp_.rank(); }
    /// |C| = p^fp_dimension.
    std::uint64_t size() const;
    /// Free over S with the given rank, or not free (then dimension is the
    /// composition length over the residue field).
    bool is_free() const noexcept { return free_; }
    int dimension() const noexcept { return dimension_; }

    bool contains(const PetitAlgebra::Elem& word) const;
    /// All codewords in the order of F_p-coefficient vectors; throws
    /// SearchTooLarge above `bound`.
    std::vector<PetitAlgebra::Elem> codewords(std::uint64_t bound = 10000) const;

private:
    std::shared_ptr<const PetitAlgebra> ambient_;
    SkewPoly generator_;
    std::vector<PetitAlgebra::Elem> rows_;
    Echelon fp_;
    bool free_ = true;
    int dimension_ = 0;
};

/// Throws NotARightDivisor unless g is a monic right divisor of f.
CyclicCode code_from_divisor(std::shared_ptr<const PetitAlgebra> A, const SkewPoly& g);

/// One code per monic right divisor of each degree 0 .. m, deduplicated.
std::vector<CyclicCode> enumerate_codes(std::shared_ptr<const PetitAlgebra> A, std::uint64_t bound = kDefaultSearchBound);

/// (sigma(a_{m-1}) c, sigma(a_0), ..., sigma(a_{m-2})).
PetitAlgebra::Elem constacyclic_shift(const PetitAlgebra& A, const PetitAlgebra::Elem& word, const Ring::Elem& c);
/// Closure of C under the twisted shift, checked on generator rows.
bool is_constacyclic(const CyclicCode& C, const Ring::Elem& c);

/// Codeword listing, one word per line, coordinates in element syntax.
std::string codewords_csv(const CyclicCode& C, std::uint64_t bound = 10000);

}  // namespace skewlat

#endif
