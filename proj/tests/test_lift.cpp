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

#include <cstdlib>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "skewlat/error.hpp"
#include "skewlat/lift.hpp"
#include "skewlat/residue.hpp"

using namespace skewlat;

namespace {

struct Quaternion {
    Tower K;
    std::shared_ptr<const PetitAlgebra> lambda;
    ReductionMap psi;

    explicit Quaternion(BaseKind kind = BaseKind::PAdic, std::int64_t c1 = 3)
        : K(TowerSpec{kind, 3, 8, 2, 1, 1}),
          lambda(std::make_shared<const PetitAlgebra>(
              make_cyclic(K.ring(), K.action("frobenius").map, K.ring()->add(K.ring()->one(), K.ring()->scale(K.base().from_int(c1), K.x())), 2))),
          psi(reduction_of(lambda)) {}

    const Ring& R() const { return lambda->ring(); }
};

PetitAlgebra::Elem random_elem(const PetitAlgebra& A, std::mt19937_64& rng) {
    const BaseRing& B = A.ring().base();
    BaseVec v(A.base_dim());
    for (auto& c : v) {
        std::vector<std::int64_t> d(static_cast<std::size_t>(B.precision()));
        for (auto& x : d) x = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(B.p()));
        c = B.from_digits(d);
    }
    return A.from_base(v);
}

// Index of the Z-lattice spanned by integer rows (full rank), via integer
// Hermite reduction with gcd steps.
std::int64_t integer_index(std::vector<std::vector<std::int64_t>> rows, std::size_t n) {
    std::int64_t det = 1;
    std::size_t top = 0;
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t r = top + 1; r < rows.size(); ++r) {
            while (rows[r][c] != 0) {
                const std::int64_t q = rows[top][c] / rows[r][c];
                for (std::size_t j = 0; j < n; ++j) rows[top][j] -= q * rows[r][j];
                std::swap(rows[top], rows[r]);
            }
        }
        if (rows[top][c] == 0) return 0;
        det *= std::llabs(rows[top][c]);
        ++top;
    }
    return det;
}

// Every codeword of S_fbar o g, by brute force.
std::set<PetitAlgebra::Elem> codeword_oracle(const PetitAlgebra& A, const SkewPoly& g) {
    std::set<PetitAlgebra::Elem> out;
    const auto gen = A.from_poly(g);
    for (std::uint64_t k = 0; k < A.size(); ++k) out.insert(A.mul(A.element(k), gen));
    return out;
}

}  // namespace

TEST_CASE("reduction is a unital multiplicative surjection with kernel p Lambda") {
    Quaternion Q;
    const auto& L = *Q.lambda;
    std::mt19937_64 rng(7);
    CHECK(Q.psi.reduce(L.one()) == Q.psi.target().one());
    for (int i = 0; i < 200; ++i) {
        const auto x = random_elem(L, rng), y = random_elem(L, rng);
        CHECK(Q.psi.reduce(L.mul(x, y)) == Q.psi.target().mul(Q.psi.reduce(x), Q.psi.reduce(y)));
        CHECK(Q.psi.target().is_zero(Q.psi.reduce(L.scale(L.ring().base().from_int(3), x))));
        CHECK(Q.psi.reduce(Q.psi.lift(Q.psi.reduce(x))) == Q.psi.reduce(x));
    }
    // fbar = t^2 - 1 here, and any other target is rejected.
    const auto& S = Q.psi.target().ring();
    auto other = std::make_shared<const PetitAlgebra>(make_cyclic(Q.psi.target().ctx().ring_ptr(), Q.psi.target().ctx().sigma(), S.from_int(2), 2));
    CHECK_THROWS_AS(ReductionMap(Q.lambda, other), Error);
}

TEST_CASE("construction A over Q_3(i) with f = t^2 - (1 + 3i)") {
    Quaternion Q;
    const auto& Lam = *Q.lambda;
    const auto target = Q.psi.target_ptr();
    const BaseRing& B = Lam.ring().base();

    const auto full = code_from_divisor(target, constant_poly(target->ctx(), target->ring().one()));
    const auto zero = code_from_divisor(target, target->f());
    const auto g = make_poly(target->ctx(), {target->ring().from_int(-1), target->ring().one()});
    const auto C = code_from_divisor(target, g);

    CHECK(lattice_index(construction_a(Q.psi, full)) == "1");
    const auto Lzero = construction_a(Q.psi, zero);
    CHECK(lattice_index(Lzero) == "81");
    for (int v : Lzero.hermite.pivot_vals) CHECK(v == 1);

    const auto L = construction_a(Q.psi, C);
    CHECK(L.rank == 4);
    CHECK(lattice_index(L) == "9");

    // Integer oracle: lifts of all codewords together with 3 e_j.
    std::vector<std::vector<std::int64_t>> rows;
    for (const auto& w : codeword_oracle(*target, g)) {
        std::vector<std::int64_t> r;
        for (const auto& a : w)
            for (auto d : target->ring().to_ints(a)) r.push_back(d);
        rows.push_back(r);
    }
    for (std::size_t j = 0; j < 4; ++j) {
        std::vector<std::int64_t> r(4, 0);
        r[j] = 3;
        rows.push_back(r);
    }
    CHECK(integer_index(rows, 4) == 9);

    // Hermite shape.
    for (std::size_t i = 0; i < L.hermite.rank(); ++i) {
        CHECK(L.hermite.pivot_cols[i] == static_cast<int>(i));
        CHECK(B.valuation(L.hermite.rows[i][i]) == L.hermite.pivot_vals[i]);
    }

    // v in L iff rho(v) in C; p Lambda inside L.
    std::mt19937_64 rng(11);
    int inside = 0;
    for (int i = 0; i < 300; ++i) {
        const auto x = random_elem(Lam, rng);
        const bool expect = C.contains(Q.psi.reduce(x));
        inside += expect;
        CHECK(membership(L, Lam.to_base(x)) == expect);
        CHECK(membership(L, Lam.to_base(Lam.scale(B.from_int(3), x))));
    }
    CHECK(inside > 0);
    CHECK_FALSE(membership(L, Lam.to_base(Lam.one())));
}

TEST_CASE("index times code size is |Lambda / p Lambda| for every code") {
    for (auto kind : {BaseKind::PAdic, BaseKind::PowerSeries}) {
        Quaternion Q(kind);
        const auto target = Q.psi.target_ptr();
        const PetitAlgebra& Lam = *Q.lambda;
        for (const auto& C : enumerate_codes(target)) {
            const auto L = construction_a(Q.psi, C);
            CHECK(lattice_index_exponent(L) + static_cast<int>(C.fp_dimension()) == 4);
            // rho(L) = C.
            BaseMatrix reduced;
            for (const auto& row : L.hermite.rows) {
                const auto w = Q.psi.reduce(Lam.from_base(row));
                CHECK(C.contains(w));
                reduced.push_back(target->to_base(w));
            }
            CHECK(rank(target->ring().base(), reduced, 4) == C.fp_dimension());
            // L is a left ideal of Lambda since C is a left ideal of S_fbar.
            std::mt19937_64 rng(3);
            for (int i = 0; i < 20; ++i) {
                const auto x = random_elem(Lam, rng);
                for (const auto& row : L.hermite.rows) CHECK(membership(L, Lam.to_base(Lam.mul(x, Lam.from_base(row)))));
            }
        }
    }
}

TEST_CASE("codes from another algebra are rejected") {
    Quaternion Q;
    const auto target = Q.psi.target_ptr();
    auto other = std::make_shared<const PetitAlgebra>(make_cyclic(target->ctx().ring_ptr(), target->ctx().sigma(), target->ring().from_int(2), 2));
    const auto C = code_from_divisor(other, constant_poly(other->ctx(), other->ring().one()));
    CHECK_THROWS_AS((void)construction_a(Q.psi, C), Error);
}

TEST_CASE("precision one cannot certify a lattice") {
    Tower K(TowerSpec{BaseKind::PAdic, 3, 1, 2, 1, 1});
    auto lam = std::make_shared<const PetitAlgebra>(make_cyclic(K.ring(), K.action("frobenius").map, K.ring()->one(), 2));
    auto psi = reduction_of(lam);
    const auto C = code_from_divisor(psi.target_ptr(), psi.target().f());
    try {
        (void)lattice_index(construction_a(psi, C));
        FAIL("expected PrecisionExhausted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::PrecisionExhausted);
    }
}
