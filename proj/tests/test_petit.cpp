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

#include <random>

#include "doctest.h"
#include "skewlat/error.hpp"
#include "skewlat/petit.hpp"
#include "skewlat/residue.hpp"

using namespace skewlat;

namespace {

struct F9 {
    Tower K{TowerSpec{BaseKind::PAdic, 3, 8, 2, 1, 1}};
    ChainRing S = chain_ring_from_extension(K);
    const Ring& R = *S.ring;
    const LinearMap& sigma = S.automorphisms.at(0).map;

    PetitAlgebra cyclic(const Ring::Elem& c) const { return make_cyclic(S.ring, sigma, c, 2); }
    bool in_f3(const Ring::Elem& c) const { return sigma.apply(R, c) == c; }
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

}  // namespace

TEST_CASE_FIXTURE(F9, "products in (F_9/F_3, sigma, c)") {
    for (std::uint64_t ci = 1; ci < 9; ++ci) {
        const auto c = R.element(ci);
        const auto A = cyclic(c);
        const auto t = A.monomial(R.one(), 1);
        CHECK(A.mul(t, t) == A.monomial(c, 0));
        for (std::uint64_t ai = 0; ai < 9; ++ai)
            for (std::uint64_t bi = 0; bi < 9; ++bi) {
                const auto a = R.element(ai), b = R.element(bi);
                const auto lhs = A.mul(A.monomial(a, 1), A.monomial(b, 1));
                CHECK(lhs == A.monomial(R.mul(R.mul(a, sigma.apply(R, b)), c), 0));
            }
        for (std::uint64_t k = 0; k < 81; k += 7) {
            const auto x = A.element(k);
            CHECK(A.mul(A.one(), x) == x);
            CHECK(A.mul(x, A.one()) == x);
        }
    }
}

TEST_CASE_FIXTURE(F9, "degree one modulus gives S") {
    auto ctx = std::make_shared<const SkewContext>(S.ring, sigma);
    PetitAlgebra A(ctx, monomial(*ctx, R.one(), 1));
    for (std::uint64_t a = 0; a < 9; ++a)
        for (std::uint64_t b = 0; b < 9; ++b)
            CHECK(A.mul(A.monomial(R.element(a), 0), A.monomial(R.element(b), 0))[0] == R.mul(R.element(a), R.element(b)));
    CHECK_THROWS_AS(PetitAlgebra(ctx, make_poly(*ctx, {R.one(), R.from_int(2)})), Error);
}

TEST_CASE_FIXTURE(F9, "associativity and the two-sided criterion") {
    for (std::uint64_t ci = 0; ci < 9; ++ci) {
        const auto c = R.element(ci);
        const auto A = cyclic(c);
        const bool assoc = is_associative(A);
        CHECK(assoc == is_two_sided_modulus(A));
        CHECK(assoc == in_f3(c));
    }
    // f = t^2 with sigma = Frobenius is associative; it is commutative only
    // when sigma is trivial.
    const auto A0 = cyclic(R.zero());
    CHECK(is_associative(A0));
    const auto x = A0.monomial(R.basis(1), 0), t = A0.monomial(R.one(), 1);
    CHECK(A0.mul(x, t) != A0.mul(t, x));
    const auto Aid = make_cyclic(S.ring, LinearMap::identity(R), R.zero(), 2);
    for (std::size_t a = 0; a < Aid.base_dim(); ++a)
        for (std::size_t b = 0; b < Aid.base_dim(); ++b)
            CHECK(Aid.mul(Aid.base_basis(a), Aid.base_basis(b)) == Aid.mul(Aid.base_basis(b), Aid.base_basis(a)));
}

TEST_CASE_FIXTURE(F9, "right nucleus and center") {
    const auto c = R.basis(1);  // x, outside F_3
    const auto A = cyclic(c);
    const auto nuc = right_nucleus(A);
    CHECK(nuc.consistent);
    REQUIRE(nuc.elements.size() == 9);
    for (const auto& g : nuc.elements) CHECK(R.is_zero(g[1]));
    const auto Z = center(A);
    CHECK(Z.size() == 3);
    const auto nuc0 = right_nucleus(cyclic(R.zero()));
    CHECK(nuc0.consistent);
    CHECK(nuc0.elements.size() == 81);
    const auto nuc1 = right_nucleus(cyclic(R.one()));
    CHECK(nuc1.elements.size() == 81);
}

TEST_CASE_FIXTURE(F9, "division verdicts") {
    const BaseRing fp = R.base();
    for (std::uint64_t ci = 1; ci < 9; ++ci) {
        const auto c = R.element(ci);
        const auto A = cyclic(c);
        const bool div = is_division_finite(A);
        CHECK(div == !in_f3(c));
        // Independent check: all nonzero left multiplications are invertible.
        bool all_invertible = true;
        for (std::uint64_t k = 1; k < 81; ++k)
            if (rank(fp, base_left_mul_matrix(A, A.element(k)), 4) != 4) all_invertible = false;
        CHECK(all_invertible == div);
    }
    Tower Kr(TowerSpec{BaseKind::PAdic, 3, 4, 1, 2, 1});
    auto Sr = chain_ring_from_extension(Kr);
    const auto Ar = make_cyclic(Sr.ring, Sr.automorphisms.at(0).map, Sr.ring->one(), 2);
    CHECK_FALSE(is_division_finite(Ar));
    CHECK_THROWS_AS(is_division_finite(Ar, 100), Error);
}

TEST_CASE_FIXTURE(F9, "left multiplication matrices") {
    std::mt19937_64 rng(1);
    const auto c = R.basis(1);
    const auto A = cyclic(c);
    const auto I = left_mul_matrix(A, A.one());
    CHECK(I == ElemMatrix{{R.one(), R.zero()}, {R.zero(), R.one()}});
    for (int i = 0; i < 100; ++i) {
        const auto x = random_elem(A, rng), y = random_elem(A, rng);
        const auto M = left_mul_matrix(A, x);
        const ElemMatrix expected = {{x[0], R.mul(c, sigma.apply(R, x[1]))}, {x[1], sigma.apply(R, x[0])}};
        CHECK(M == expected);
        CHECK(elem_mat_vec(R, M, y) == A.mul(y, x));
        CHECK(mat_vec(R.base(), base_left_mul_matrix(A, x), A.to_base(y)) == A.to_base(A.mul(x, y)));
    }
}

TEST_CASE("classification over Q_3(i)") {
    Tower K(TowerSpec{BaseKind::PAdic, 3, 32, 2, 1, 1});
    const Ring& R = *K.ring();
    const auto& s = K.galois_generators()[0].map;
    auto c1 = classify_cyclic_algebra(K, s, K.x(), 2);
    CHECK_FALSE(c1.associative);
    CHECK(c1.division == Verdict::Yes);
    auto c2 = classify_cyclic_algebra(K, s, R.from_int(3), 2);
    CHECK(c2.associative);
    CHECK(c2.division == Verdict::Yes);
    auto c3 = classify_cyclic_algebra(K, s, R.one(), 2);
    CHECK(c3.associative);
    CHECK(c3.division == Verdict::No);
    CHECK(classify_cyclic_algebra(K, s, R.from_int(9), 2).division == Verdict::No);
    CHECK_THROWS_AS(classify_cyclic_algebra(K, s, R.zero(), 2), Error);

    // Degree 4 unramified: sigma^2 generates an order 2 subgroup, its fixed field
    // is the quadratic subextension.
    Tower K4(TowerSpec{BaseKind::PAdic, 3, 16, 4, 1, 1});
    const auto& f4 = K4.galois_generators()[0].map;
    auto c4 = classify_cyclic_algebra(K4, f4, K4.ring()->from_int(3), 4);
    CHECK(c4.division == Verdict::Yes);
    CHECK(classify_cyclic_algebra(K4, f4, K4.ring()->from_int(9), 4).division == Verdict::No);
    CHECK(classify_cyclic_algebra(K4, f4, K4.x(), 4).division == Verdict::Yes);

    // Ramified quadratic: no criterion for c in the base.
    Tower Kr(TowerSpec{BaseKind::PAdic, 3, 16, 1, 2, 1});
    auto cr = classify_cyclic_algebra(Kr, Kr.galois_generators()[0].map, Kr.ring()->from_int(2), 2);
    CHECK(cr.associative);
    CHECK(cr.division == Verdict::Unknown);
}

TEST_CASE("natural order closure and associativity over Q_3(i)") {
    Tower K(TowerSpec{BaseKind::PAdic, 3, 32, 2, 1, 1});
    const auto& s = K.galois_generators()[0].map;
    const Ring& R = *K.ring();
    const auto A = make_cyclic(K.ring(), s, R.add(R.one(), R.scale(R.base().from_int(3), K.x())), 2);
    CHECK_FALSE(is_associative(A));
    CHECK_FALSE(is_two_sided_modulus(A));
    const auto B = make_cyclic(K.ring(), s, R.from_int(3), 2);
    CHECK(is_associative(B));
    CHECK(is_two_sided_modulus(B));
}

namespace {

struct Klein {
    Tower K{TowerSpec{BaseKind::PAdic, 3, 32, 2, 2, 1}};
    const Ring& R = *K.ring();
    const LinearMap& phi = K.action("frobenius").map;
    const LinearMap& tau = K.action("tau").map;
    CyclicOrder D = make_cyclic_order(K.ring(), tau, 2, R.from_int(-1));

    // gamma(a)[(l + k) mod n][l] = rho^l(a_k), times c on wrap-around.
    ElemMatrix gamma_oracle(const std::vector<Ring::Elem>& a) const {
        const int n = 2;
        ElemMatrix M(2, std::vector<Ring::Elem>(2, R.zero()));
        for (int l = 0; l < n; ++l)
            for (int k = 0; k < n; ++k) {
                Ring::Elem v = tau.power(R, l).apply(R, a[static_cast<std::size_t>(k)]);
                if (l + k >= n) v = R.mul(v, D.c);
                M[static_cast<std::size_t>((l + k) % n)][static_cast<std::size_t>(l)] = v;
            }
        return M;
    }
    ElemMatrix apply_entrywise(const LinearMap& s, ElemMatrix M) const {
        for (auto& row : M)
            for (auto& e : row) e = s.apply(R, e);
        return M;
    }
    ElemMatrix matmul(const ElemMatrix& A, const ElemMatrix& B) const {
        ElemMatrix C(A.size(), std::vector<Ring::Elem>(B[0].size(), R.zero()));
        for (std::size_t i = 0; i < A.size(); ++i)
            for (std::size_t j = 0; j < B[0].size(); ++j)
                for (std::size_t k = 0; k < B.size(); ++k) C[i][j] = R.add(C[i][j], R.mul(A[i][k], B[k][j]));
        return C;
    }
};

}  // namespace

TEST_CASE_FIXTURE(Klein, "generalized cyclic algebra over the biquadratic tower") {
    CHECK(D.ring->rank() == 8);
    const Ring& Dr = *D.ring;
    CHECK(Dr.mul(D.e(), D.e()) == Dr.from_int(-1));
    CHECK(Dr.mul(D.e(), D.embed(K.y())) == Dr.mul(D.embed(tau.apply(R, K.y())), D.e()));
    const auto d = K.x();  // i, in O_F with F = Q_3(i)
    auto G = make_generalized_cyclic(D, phi, d, 2);
    const PetitAlgebra& A = *G.algebra;
    CHECK(A.base_dim() == 16);
    CHECK_FALSE(is_associative(A));
    CHECK(is_associative(*make_generalized_cyclic(D, phi, R.one(), 2).algebra));

    ElemMatrix I(4, std::vector<Ring::Elem>(4, R.zero()));
    for (std::size_t i = 0; i < 4; ++i) I[i][i] = R.one();
    CHECK(generalized_left_mul_matrix(G, A.one()) == I);

    std::mt19937_64 rng(23);
    const auto gd = gamma_oracle(D.components(D.embed(d)));
    for (int it = 0; it < 50; ++it) {
        const auto x = random_elem(A, rng), y = random_elem(A, rng);
        const auto M = generalized_left_mul_matrix(G, x);
        CHECK(elem_mat_vec(R, M, generalized_vec(G, y)) == generalized_vec(G, A.mul(y, x)));
        // Block pattern [[g(x0), g(d) s(g(x1))], [g(x1), s(g(x0))]].
        const auto g0 = gamma_oracle(D.components(x[0])), g1 = gamma_oracle(D.components(x[1]));
        const ElemMatrix blocks[2][2] = {{g0, matmul(gd, apply_entrywise(phi, g1))}, {g1, apply_entrywise(phi, g0)}};
        bool match = true;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                if (M[i][j] != blocks[i / 2][j / 2][i % 2][j % 2]) match = false;
        CHECK(match);
        // d in O_F: the determinant is fixed by rho.
        const auto det = determinant(R, M);
        CHECK(tau.apply(R, det) == det);
    }
}

TEST_CASE("determinant by cofactor expansion") {
    BaseRing Z(BaseKind::PAdic, 5, 6);
    auto R = std::make_shared<const Ring>(Z, Ring::Table{{{Z.one()}}}, RingInfo{"Z5", 1, 1, {0}});
    auto I = [&](std::int64_t v) { return R->from_int(v); };
    ElemMatrix M = {{I(2), I(1), I(0)}, {I(1), I(3), I(4)}, {I(0), I(2), I(1)}};
    // 2 (3 - 8) - 1 (1 - 0) = -11
    CHECK(determinant(*R, M) == I(-11));
}
