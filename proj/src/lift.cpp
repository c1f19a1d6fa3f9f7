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

#include "skewlat/lift.hpp"

#include "skewlat/error.hpp"

namespace skewlat {

ReductionMap::ReductionMap(std::shared_ptr<const PetitAlgebra> source, std::shared_ptr<const PetitAlgebra> target)
    : source_(std::move(source)), target_(std::move(target)) {
    const Ring& R = source_->ring();
    const Ring& S = target_->ring();
    if (!S.is_finite() || S.base().p() != R.base().p() || S.base().kind() != R.base().kind() || S.table() != R.reduced(1)->table())
        fail(ErrorCode::ModulusMismatch, "target ring is not the residue ring of the source");
    if (source_->ctx().sigma().reduced_into(R, S) != target_->ctx().sigma())
        fail(ErrorCode::ModulusMismatch, "twists do not agree modulo p");
    if (source_->m() != target_->m())
        fail(ErrorCode::ModulusMismatch, "moduli have different degrees");
    for (int i = 0; i <= source_->m(); ++i)
        if (R.reduce_into(S, coeff(source_->ctx(), source_->f(), i)) != coeff(target_->ctx(), target_->f(), i))
            fail(ErrorCode::ModulusMismatch, "target modulus is not the reduction of f");
}

PetitAlgebra::Elem ReductionMap::reduce(const PetitAlgebra::Elem& x) const {
    PetitAlgebra::Elem out;
    out.reserve(x.size());
    for (const auto& a : x) out.push_back(source_->ring().reduce_into(target_->ring(), a));
    return out;
}

PetitAlgebra::Elem ReductionMap::lift(const PetitAlgebra::Elem& x) const {
    PetitAlgebra::Elem out;
    out.reserve(x.size());
    for (const auto& a : x) out.push_back(source_->ring().lift_from(target_->ring(), a));
    return out;
}

ReductionMap reduction_of(std::shared_ptr<const PetitAlgebra> lambda) {
    const Ring& R = lambda->ring();
    auto S = R.reduced(1);
    auto ctx = std::make_shared<const SkewContext>(S, lambda->ctx().sigma().reduced_into(R, *S));
    std::vector<Ring::Elem> fbar;
    for (const auto& a : lambda->f().coeffs) fbar.push_back(R.reduce_into(*S, a));
    auto target = std::make_shared<const PetitAlgebra>(ctx, make_poly(*ctx, fbar));
    return ReductionMap(std::move(lambda), std::move(target));
}

Lattice construction_a(const ReductionMap& psi, const CyclicCode& C) {
    const PetitAlgebra& A = C.ambient();
    const PetitAlgebra& T = psi.target();
    if (A.m() != T.m() || A.ring().table() != T.ring().table() || A.f().coeffs != T.f().coeffs ||
        A.ctx().sigma() != T.ctx().sigma())
        fail(ErrorCode::ModulusMismatch, "code does not live in the reduction of Lambda");
    const PetitAlgebra& Lam = psi.source();
    const BaseRing& B = Lam.ring().base();
    const std::size_t n = Lam.base_dim();

    BaseMatrix gens;
    for (const auto& row : C.fp_echelon().rows) gens.push_back(Lam.to_base(psi.lift(A.from_base(row))));
    const BaseElem p = B.uniformizer();
    for (std::size_t k = 0; k < n; ++k) {
        BaseVec v(n, B.zero());
        v[k] = p;
        gens.push_back(std::move(v));
    }
    Lattice L{B, n, Lam.m(), echelon(B, std::move(gens), n)};
    reduce_above_pivots(B, L.hermite);
    return L;
}

int lattice_index_exponent(const Lattice& L) {
    if (L.hermite.rank() != L.rank)
        fail(ErrorCode::PrecisionExhausted, "precision too low to certify a full-rank lattice");
    int total = 0;
    for (int v : L.hermite.pivot_vals) total += v;
    return total;
}

std::string lattice_index(const Lattice& L) {
    const int k = lattice_index_exponent(L);
    const auto p = static_cast<std::uint64_t>(L.base.p());
    std::uint64_t v = 1;
    for (int i = 0; i < k; ++i) {
        if (v > UINT64_MAX / p) return std::to_string(p) + "^" + std::to_string(k);
        v *= p;
    }
    return std::to_string(v);
}

bool membership(const Lattice& L, const BaseVec& v) {
    if (v.size() != L.rank) fail(ErrorCode::InvalidArgument, "vector length does not match the lattice rank");
    if (L.hermite.rank() != L.rank)
        fail(ErrorCode::PrecisionExhausted, "precision too low to certify a full-rank lattice");
    return in_row_module(L.base, L.hermite, v);
}

}  // namespace skewlat
