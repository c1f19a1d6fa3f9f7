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

#include "skewlat/mrd.hpp"

#include <algorithm>
#include <set>

#include "skewlat/error.hpp"

namespace skewlat {

namespace {

struct RankResult {
    std::size_t rank = 0;
    int valuation_sum = 0;
};

// With the pivot of least valuation v, the quotients are only known modulo
// p^(N - v) but they multiply entries of valuation >= v, so every update is
// still exact modulo p^N.
RankResult rank_core(const Ring& R, ElemMatrix A) {
    if (!R.is_commutative()) fail(ErrorCode::InvalidArgument, "column rank needs a commutative coefficient ring");
    const bool finite = R.is_finite();
    if (!finite && !R.has_valuation()) fail(ErrorCode::InvalidArgument, "column rank needs a finite ring or a valuation");
    RankResult out;
    while (!A.empty() && !A[0].empty()) {
        std::size_t pr = A.size(), pc = 0;
        int best = 0;
        for (std::size_t r = 0; r < A.size() && !(finite && pr < A.size()); ++r)
            for (std::size_t c = 0; c < A[r].size(); ++c) {
                if (finite) {
                    if (R.is_unit(A[r][c])) {
                        pr = r, pc = c;
                        break;
                    }
                    continue;
                }
                const auto v = R.valuation(A[r][c]);
                if (v && (pr == A.size() || *v < best)) pr = r, pc = c, best = *v;
            }
        if (pr == A.size()) break;
        const Ring::Elem pivot = A[pr][pc];
        const Ring::Elem inv = finite ? R.inverse(pivot) : Ring::Elem{};
        for (std::size_t r = 0; r < A.size(); ++r) {
            if (r == pr || R.is_zero(A[r][pc])) continue;
            const Ring::Elem q = finite ? R.mul(A[r][pc], inv) : R.divide(A[r][pc], pivot);
            for (std::size_t c = 0; c < A[r].size(); ++c) A[r][c] = R.sub(A[r][c], R.mul(q, A[pr][c]));
        }
        A.erase(A.begin() + static_cast<std::ptrdiff_t>(pr));
        for (auto& row : A) row.erase(row.begin() + static_cast<std::ptrdiff_t>(pc));
        ++out.rank;
        out.valuation_sum += best;
    }
    return out;
}

ElemMatrix mat_sub(const Ring& R, const ElemMatrix& a, const ElemMatrix& b) {
    ElemMatrix out = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) out[i][j] = R.sub(a[i][j], b[i][j]);
    return out;
}

bool is_zero_matrix(const Ring& R, const ElemMatrix& a) {
    return std::all_of(a.begin(), a.end(), [&](const auto& row) { return std::all_of(row.begin(), row.end(), [&](const auto& x) { return R.is_zero(x); }); });
}

// Elements of the subfield F_{p^l} of a finite field: a^(p^l) = a.
std::vector<Ring::Elem> subfield(const Ring& R, int l) {
    std::uint64_t q = 1;
    for (int i = 0; i < l; ++i) q *= static_cast<std::uint64_t>(R.base().p());
    std::vector<Ring::Elem> out;
    for (std::uint64_t k = 0; k < R.size(); ++k) {
        const auto a = R.element(k);
        if (R.pow(a, q) == a) out.push_back(a);
    }
    return out;
}

}  // namespace

std::size_t column_rank(const Ring& R, const ElemMatrix& M) {
    return rank_core(R, M).rank;
}

void certify_full_column_rank(const Ring& R, const ElemMatrix& M) {
    const auto r = rank_core(R, M);
    const std::size_t cols = M.empty() ? 0 : M[0].size();
    if (r.rank < cols)
        fail(ErrorCode::PrecisionExhausted, "could not certify full column rank at this precision");
}

bool is_linear(const MatrixCode& C, int subfield_degree, std::uint64_t bound) {
    const Ring& R = *C.ring;
    const std::uint64_t n = C.members.size();
    if (n > 0 && n * n > bound) fail(ErrorCode::SearchTooLarge, "linearity check exceeds the search bound");
    const std::set<ElemMatrix> members(C.members.begin(), C.members.end());
    for (const auto& a : C.members)
        for (const auto& b : C.members) {
            ElemMatrix s = a;
            for (std::size_t i = 0; i < s.size(); ++i)
                for (std::size_t j = 0; j < s[i].size(); ++j) s[i][j] = R.add(a[i][j], b[i][j]);
            if (!members.count(s)) return false;
        }
    if (subfield_degree > 1) {
        for (const auto& lambda : subfield(R, subfield_degree))
            for (const auto& a : C.members) {
                ElemMatrix s = a;
                for (auto& row : s)
                    for (auto& x : row) x = R.mul(lambda, x);
                if (!members.count(s)) return false;
            }
    }
    return true;
}

int min_rank_distance(const MatrixCode& C, std::uint64_t bound) {
    const Ring& R = *C.ring;
    const std::uint64_t n = C.members.size();
    if (n < 2) fail(ErrorCode::InvalidArgument, "distance needs at least two members");
    std::optional<std::size_t> best;
    if (is_linear(C, 1, bound)) {
        for (const auto& a : C.members) {
            if (is_zero_matrix(R, a)) continue;
            const auto r = column_rank(R, a);
            if (!best || r < *best) best = r;
        }
    } else {
        if (n * (n - 1) / 2 > bound) fail(ErrorCode::SearchTooLarge, "pairwise distance exceeds the search bound");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                const auto d = mat_sub(R, C.members[i], C.members[j]);
                if (is_zero_matrix(R, d)) continue;
                const auto r = column_rank(R, d);
                if (!best || r < *best) best = r;
            }
    }
    if (!best) fail(ErrorCode::InvalidArgument, "code has fewer than two distinct members");
    return static_cast<int>(*best);
}

SingletonReport singleton_check(const MatrixCode& C, int subfield_degree, std::uint64_t bound) {
    const Ring& R = *C.ring;
    if (!R.is_finite() || R.info().ramification != 1 || !R.is_commutative())
        fail(ErrorCode::InvalidArgument, "Singleton check needs a finite field");
    const int k = static_cast<int>(R.rank());
    if (subfield_degree < 1 || k % subfield_degree != 0) fail(ErrorCode::InvalidArgument, "not a subfield degree");
    if (!is_linear(C, subfield_degree, bound)) fail(ErrorCode::InvalidArgument, "code is not linear over the subfield");

    BaseMatrix flat;
    for (const auto& a : C.members) {
        BaseVec v;
        for (const auto& row : a)
            for (const auto& x : row) v.insert(v.end(), x.begin(), x.end());
        flat.push_back(std::move(v));
    }
    const std::size_t width = C.rows * C.cols * R.rank();
    const int dim_fp = static_cast<int>(rank(R.base(), flat, width));

    SingletonReport out;
    out.dim_L = dim_fp / subfield_degree;
    out.distance = min_rank_distance(C, bound);
    out.bound = static_cast<int>(C.rows) * (static_cast<int>(C.cols) - out.distance + 1) * (k / subfield_degree);
    out.is_mrd = out.dim_L == out.bound;
    return out;
}

MatrixCode residue_matrix_code(const CyclicCode& C, std::uint64_t bound) {
    const PetitAlgebra& A = C.ambient();
    const auto m = static_cast<std::size_t>(A.m());
    MatrixCode out{A.ctx().ring_ptr(), m, m, {}};
    for (const auto& x : C.codewords(bound)) out.members.push_back(left_mul_matrix(A, x));
    return out;
}

MatrixCode full_matrix_code(const PetitAlgebra& A, std::uint64_t bound) {
    const auto m = static_cast<std::size_t>(A.m());
    MatrixCode out{A.ctx().ring_ptr(), m, m, {}};
    const std::uint64_t n = A.size(bound);
    for (std::uint64_t k = 0; k < n; ++k) out.members.push_back(left_mul_matrix(A, A.element(k)));
    return out;
}

OrderMatrixCode::OrderMatrixCode(ReductionMap psi, CyclicCode code)
    : psi_(std::move(psi)), code_(std::move(code)), lattice_(construction_a(psi_, code_)) {}

PetitAlgebra::Elem OrderMatrixCode::sample(std::mt19937_64& rng) const {
    const BaseRing& B = lattice_.base;
    BaseVec v(lattice_.rank, B.zero());
    std::vector<std::int64_t> digits(static_cast<std::size_t>(B.precision()));
    for (const auto& row : lattice_.hermite.rows) {
        for (auto& d : digits) d = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(B.p()));
        const BaseElem r = B.from_digits(digits);
        for (std::size_t j = 0; j < v.size(); ++j) v[j] = B.add(v[j], B.mul(r, row[j]));
    }
    return order().from_base(v);
}

OrderMatrixCode matrix_code_from_order(const ReductionMap& psi, const SkewPoly& g) {
    const auto& target = psi.target_ptr();
    std::vector<Ring::Elem> gbar;
    for (const auto& a : g.coeffs) gbar.push_back(psi.source().ring().reduce_into(target->ring(), a));
    return OrderMatrixCode(psi, code_from_divisor(target, make_poly(target->ctx(), gbar)));
}

OrderMatrixCode mrd_lift(const ReductionMap& psi, const CyclicCode& C0) { return OrderMatrixCode(psi, C0); }

CertificationReport certify_samples(const OrderMatrixCode& C, int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    CertificationReport out;
    const Ring& R = C.order().ring();
    for (int i = 0; i < count; ++i) {
        const auto x = C.sample(rng);
        ++out.samples;
        if (C.order().is_zero(x)) {
            ++out.zero_samples;
            continue;
        }
        const auto M = C.matrix(x);
        const auto r = rank_core(R, M);
        if (r.rank < M.size())
            fail(ErrorCode::PrecisionExhausted, "sampled member without certified full column rank");
        out.max_valuation = std::max(out.max_valuation, r.valuation_sum);
    }
    return out;
}

}  // namespace skewlat
