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

// Linear algebra over a truncated DVR base (Z_p / p^N or F_p[[t]] / t^N).
//
// All elimination happens exactly in the truncated ring. A pivot with
// valuation v < N is a genuine invariant of the underlying Z_p-module; entries
// that vanish to precision are treated as zero. At precision 1 everything
// degenerates to ordinary Gaussian elimination over F_p.

#ifndef SKEWLAT_LINALG_HPP
#define SKEWLAT_LINALG_HPP

#include <optional>
#include <vector>

#include "skewlat/base.hpp"

namespace skewlat {

using BaseVec = std::vector<BaseElem>;
using BaseMatrix = std::vector<BaseVec>;  // row-major

BaseMatrix zero_matrix(const BaseRing& R, std::size_t rows, std::size_t cols);
BaseMatrix identity_matrix(const BaseRing& R, std::size_t n);
BaseMatrix transpose(const BaseMatrix& a);
BaseVec mat_vec(const BaseRing& R, const BaseMatrix& a, const BaseVec& x);
BaseMatrix mat_mul(const BaseRing& R, const BaseMatrix& a, const BaseMatrix& b);

/// Row echelon form of the row module, column by column. In each column the
/// pivot is the remaining entry of least valuation, normalized to
/// uniformizer^v; entries below it are cleared. Rows that end up zero are
/// dropped.
struct Echelon {
    BaseMatrix rows;
    std::vector<int> pivot_cols;
    std::vector<int> pivot_vals;

    std::size_t rank() const { return rows.size(); }
};

Echelon echelon(const BaseRing& R, BaseMatrix rows, std::size_t cols);

/// Additionally reduces every entry above a pivot p^v modulo p^v.
void reduce_above_pivots(const BaseRing& R, Echelon& e);

/// Module rank over the fraction field, as certified at this precision.
std::size_t rank(const BaseRing& R, const BaseMatrix& rows, std::size_t cols);

/// Solves a x = b for square a; nullopt if there is no solution over the
/// base. When pivots have positive valuation the solution is only determined
/// modulo the lost digits, which are returned as zero.
std::optional<BaseVec> solve(const BaseRing& R, const BaseMatrix& a, const BaseVec& b);

/// Whether v lies in the row module of an echelon form (back-substitution with
/// integral quotients).
bool in_row_module(const BaseRing& R, const Echelon& e, BaseVec v);

}  // namespace skewlat

#endif
