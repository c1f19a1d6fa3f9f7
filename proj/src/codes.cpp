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

#include "skewlat/codes.hpp"

#include <algorithm>
#include <sstream>

#include "skewlat/error.hpp"

namespace skewlat {

namespace {

// F_p-spanning rows of the S-span of the given rows.
BaseMatrix additive_generators(const PetitAlgebra& A, const std::vector<PetitAlgebra::Elem>& rows) {
    BaseMatrix out;
    const Ring& S = A.ring();
    for (const auto& r : rows)
        for (std::size_t i = 0; i < S.rank(); ++i) out.push_back(A.to_base(A.left_scale(S.basis(i), r)));
    return out;
}

}  // namespace

CyclicCode::CyclicCode(std::shared_ptr<const PetitAlgebra> ambient, SkewPoly generator)
    : ambient_(std::move(ambient)), generator_(std::move(generator)) {
    const PetitAlgebra& A = *ambient_;
    if (!A.ring().is_finite()) fail(ErrorCode::InvalidArgument, "codes live over finite coefficient rings");
    const int k = A.m() - generator_.degree();
    for (int i = 0; i < k; ++i) rows_.push_back(A.from_poly(skew_mul(A.ctx(), monomial(A.ctx(), A.ring().one(), i), generator_)));
    fp_ = echelon(A.ring().base(), additive_generators(A, rows_), A.base_dim());
    reduce_above_pivots(A.ring().base(), fp_);
    // Free rank: the rows have unit leading coefficients in distinct positions.
    const std::size_t per_copy = A.ring().rank();
    free_ = fp_.rank() == per_copy * static_cast<std::size_t>(k);
    if (free_) dimension_ = k;
    else {
        const int f_deg = A.ring().info().inertia;
        dimension_ = static_cast<int>(fp_.rank()) / std::max(f_deg, 1);
    }
}

std::uint64_t CyclicCode::size() const {
    std::uint64_t s = 1;
    const auto p = static_cast<std::uint64_t>(ambient_->ring().base().p());
    for (std::size_t i = 0; i < fp_.rank(); ++i) {
        if (s > UINT64_MAX / p) fail(ErrorCode::SearchTooLarge, "code size overflows 64 bits");
        s *= p;
    }
    return s;
}

bool CyclicCode::contains(const PetitAlgebra::Elem& word) const {
    if (word.size() != static_cast<std::size_t>(length())) fail(ErrorCode::InvalidArgument, "word length does not match the code");
    return in_row_module(ambient_->ring().base(), fp_, ambient_->to_base(word));
}

std::vector<PetitAlgebra::Elem> CyclicCode::codewords(std::uint64_t bound) const {
    const std::uint64_t total = size();
    if (total > bound) fail(ErrorCode::SearchTooLarge, "code has more than " + std::to_string(bound) + " words");
    const BaseRing& B = ambient_->ring().base();
    const auto p = static_cast<std::uint64_t>(B.p());
    std::vector<PetitAlgebra::Elem> out;
    out.reserve(total);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        BaseVec v(ambient_->base_dim(), B.zero());
        std::uint64_t rest = idx;
        for (const auto& row : fp_.rows) {
            const auto coef = B.from_int(static_cast<std::int64_t>(rest % p));
            rest /= p;
            for (std::size_t j = 0; j < v.size(); ++j) v[j] = B.add(v[j], B.mul(coef, row[j]));
        }
        out.push_back(ambient_->from_base(v));
    }
    return out;
}

CyclicCode code_from_divisor(std::shared_ptr<const PetitAlgebra> A, const SkewPoly& g) {
    if (!is_monic(A->ctx(), g) || g.degree() > A->m() || !is_right_divisor(A->ctx(), g, A->f()))
        fail(ErrorCode::NotARightDivisor, "generator is not a monic right divisor of f");
    return CyclicCode(std::move(A), g);
}

std::vector<CyclicCode> enumerate_codes(std::shared_ptr<const PetitAlgebra> A, std::uint64_t bound) {
    std::vector<CyclicCode> out;
    for (int k = 0; k <= A->m(); ++k)
        for (const auto& g : enumerate_monic_right_divisors(A->ctx(), A->f(), k, bound)) {
            CyclicCode C(A, g);
            const bool dup = std::any_of(out.begin(), out.end(), [&](const CyclicCode& D) { return D.fp_echelon().rows == C.fp_echelon().rows; });
            if (!dup) out.push_back(std::move(C));
        }
    return out;
}

PetitAlgebra::Elem constacyclic_shift(const PetitAlgebra& A, const PetitAlgebra::Elem& word, const Ring::Elem& c) {
    const auto m = word.size();
    PetitAlgebra::Elem out(m);
    const SkewContext& ctx = A.ctx();
    out[0] = A.ring().mul(ctx.apply_sigma(word[m - 1]), c);
    for (std::size_t i = 1; i < m; ++i) out[i] = ctx.apply_sigma(word[i - 1]);
    return out;
}

bool is_constacyclic(const CyclicCode& C, const Ring::Elem& c) {
    if (C.ambient().ring().is_zero(c)) fail(ErrorCode::ZeroInput, "constacyclic constant must be nonzero");
    // shift(x + a y) = shift(x) + sigma(a) shift(y), so generator rows suffice.
    for (const auto& row : C.generator_matrix())
        if (!C.contains(constacyclic_shift(C.ambient(), row, c))) return false;
    return true;
}

std::string codewords_csv(const CyclicCode& C, std::uint64_t bound) {
    std::ostringstream os;
    const Ring& S = C.ambient().ring();
    for (int j = 0; j < C.length(); ++j) os << (j ? "," : "") << "a" << j;
    os << '\n';
    for (const auto& w : C.codewords(bound)) {
        for (std::size_t j = 0; j < w.size(); ++j) os << (j ? "," : "") << '"' << format_elem(S, w[j]) << '"';
        os << '\n';
    }
    return os.str();
}

}  // namespace skewlat
