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

// Rank-metric codes from left multiplication matrices.
//
// Column rank is computed over a commutative coefficient ring:
//  - finite rings (fields and chain rings): number of unit pivots in a
//    Smith-like reduction, which is the free rank of the column module and the
//    usual rank over a field;
//  - truncated rings of integers: valuation-minimal pivoting, which keeps
//    every entry exact modulo p^N. Entries vanishing modulo p^N count as zero,
//    so a deficient rank is only a certificate at the given precision.

#ifndef SKEWLAT_MRD_HPP
#define SKEWLAT_MRD_HPP

#include <cstdint>
#include <random>

#include "skewlat/lift.hpp"

namespace skewlat {

std::size_t column_rank(const Ring& R, const ElemMatrix& M);
/// Throws PrecisionExhausted unless every column gets a pivot of valuation
/// below the precision.
void certify_full_column_rank(const Ring& R, const ElemMatrix& M);

/// A finite code, listed explicitly (the zero matrix may or may not be
/// included).
struct MatrixCode {
    RingPtr ring;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<ElemMatrix> members;
};

/// Closed under addition and under scaling by every element of the subfield
/// of degree `subfield_degree` over F_p (exhaustive).
bool is_linear(const MatrixCode& C, int subfield_degree = 1, std::uint64_t bound = kDefaultSearchBound);

/// Minimum of rank(A - B) over distinct members; throws SearchTooLarge when
/// more than `bound` ranks would be needed and InvalidArgument for codes
/// with fewer than two members.
int min_rank_distance(const MatrixCode& C, std::uint64_t bound = kDefaultSearchBound);

struct SingletonReport {
    int dim_L = 0;
    int distance = 0;
    int bound = 0;
    bool is_mrd = false;
};

/// dim_L(C) <= n (m - d + 1) [K : L] for C inside n x m matrices over the
/// finite field K, with L the subfield of degree `subfield_degree` over F_p.
/// C must be L-linear.
SingletonReport singleton_check(const MatrixCode& C, int subfield_degree = 1, std::uint64_t bound = kDefaultSearchBound);

/// {M(x) : x in C}, with M the left multiplication matrix of the ambient
/// algebra.
MatrixCode residue_matrix_code(const CyclicCode& C, std::uint64_t bound = 10000);
/// {M(x) : x in A}.
MatrixCode full_matrix_code(const PetitAlgebra& A, std::uint64_t bound = 10000);

/// {M(x) : x in L} for the Construction A lattice L = Lambda o g + p Lambda of
/// a residue code. Infinite, so it is sampled.
class OrderMatrixCode {
public:
    OrderMatrixCode(ReductionMap psi, CyclicCode code);

    const ReductionMap& reduction() const noexcept { return psi_; }
    const CyclicCode& residue_code() const noexcept { return code_; }
    const Lattice& lattice() const noexcept { return lattice_; }
    const PetitAlgebra& order() const noexcept { return psi_.source(); }

    /// Random lattice element: integral combination of the Hermite basis.
    PetitAlgebra::Elem sample(std::mt19937_64& rng) const;
    ElemMatrix matrix(const PetitAlgebra::Elem& x) const { return left_mul_matrix(order(), x); }

private:
    ReductionMap psi_;
    CyclicCode code_;
    Lattice lattice_;
};

/// I = Lambda o g + p Lambda for a monic g whose reduction right-divides fbar.
OrderMatrixCode matrix_code_from_order(const ReductionMap& psi, const SkewPoly& g);
/// The lift rho^{-1}(C0) of the residue code behind C0.
OrderMatrixCode mrd_lift(const ReductionMap& psi, const CyclicCode& C0);

struct CertificationReport {
    int samples = 0;
    int zero_samples = 0;
    /// Largest sum of pivot valuations over the samples.
    int max_valuation = 0;
};

/// Draws `count` members and certifies full column rank of every nonzero
/// one (PrecisionExhausted otherwise).
CertificationReport certify_samples(const OrderMatrixCode& C, int count, std::uint64_t seed);

}  // namespace skewlat

#endif
