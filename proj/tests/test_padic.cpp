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
#include "skewlat/padic.hpp"
#include "skewlat/residue.hpp"

using namespace skewlat;

namespace {

Ring::Elem random_elem(const Ring& R, std::mt19937_64& rng) {
    Ring::Elem x(R.rank());
    const auto N = static_cast<std::size_t>(R.base().precision());
    for (auto& c : x) {
        std::vector<std::int64_t> d(N);
        for (auto& v : d) v = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(R.base().p()));
        c = R.base().from_digits(d);
    }
    return x;
}

}  // namespace

TEST_CASE("smallest irreducible moduli") {
    CHECK(smallest_irreducible(3, 1) == IntPoly{0, 1});
    CHECK(smallest_irreducible(3, 2) == IntPoly{1, 0, 1});
    CHECK(smallest_irreducible(2, 2) == IntPoly{1, 1, 1});
    CHECK_FALSE(is_irreducible_mod_p({2, 0, 1}, 3));  // x^2 - 1
    CHECK_THROWS_AS(make_finite_field(6, 1), Error);
}

TEST_CASE("F_9 and F_125") {
    auto F9 = make_finite_field(3, 2);
    CHECK(F9.size() == 9);
    CHECK(F9.frobenius.map.order(*F9.ring) == 2);
    auto F125 = make_finite_field(5, 3);
    const Ring& R = *F125.ring;
    REQUIRE(R.size() == 125);
    for (std::uint64_t k = 0; k < 125; ++k) {
        // a^125 by 124 plain multiplications.
        const auto a = R.element(k);
        auto acc = a;
        for (int i = 1; i < 125; ++i) acc = R.mul(acc, a);
        CHECK(acc == a);
    }
    CHECK(F125.frobenius.map.order(R) == 3);
}

TEST_CASE("chain ring of the unramified quadratic over Q_3") {
    BaseRing Z3(BaseKind::PAdic, 3, 32);
    auto K = unramified_extension(Z3, 2);
    auto S = chain_ring_from_extension(K);
    const Ring& R = *S.ring;
    REQUIRE(S.size() == 9);
    REQUIRE(S.automorphisms.size() == 1);
    const auto& sb = S.automorphisms[0].map;
    int fixed = 0;
    for (std::uint64_t k = 0; k < 9; ++k) {
        const auto a = R.element(k);
        CHECK(sb.apply(R, a) == R.mul(R.mul(a, a), a));  // Frobenius a -> a^3
        if (sb.apply(R, a) == a) ++fixed;
    }
    CHECK(fixed == 3);
    // pi o sigma = sigma-bar o pi on the basis.
    const auto& sigma = K.galois_generators()[0].map;
    for (std::size_t i = 0; i < K.ring()->rank(); ++i) {
        const auto b = K.ring()->basis(i);
        CHECK(reduce_to_chain_ring(K, sigma.apply(*K.ring(), b)) == sb.apply(R, reduce_to_chain_ring(K, b)));
    }
    // sigma is complex conjugation on i = x.
    CHECK(sigma.apply(*K.ring(), K.x()) == K.ring()->neg(K.x()));
}

TEST_CASE("ramified quadratic chain ring F_3[w]/(w^2)") {
    BaseRing Z3(BaseKind::PAdic, 3, 32);
    auto K = totally_ramified_extension(Z3, 2, 1);
    auto S = chain_ring_from_extension(K);
    const Ring& R = *S.ring;
    REQUIRE(S.size() == 9);
    const auto w = S.max_ideal_gen;
    CHECK(R.is_zero(R.mul(w, w)));
    CHECK_FALSE(is_unit(S, w));
    const auto one_plus_w = R.add(R.one(), w);
    CHECK(is_unit(S, one_plus_w));
    CHECK(R.inverse(one_plus_w) == R.sub(R.one(), w));
    CHECK(S.automorphisms.at(0).map.apply(R, w) == R.neg(w));
    int units = 0, nilpotent = 0;
    for (std::uint64_t k = 0; k < 9; ++k) {
        const auto a = R.element(k);
        if (is_unit(S, a)) ++units;
        if (R.is_zero(R.mul(a, a))) ++nilpotent;
        for (std::uint64_t l = 0; l < 9; ++l) {
            const auto b = R.element(l);
            const auto& s = S.automorphisms[0].map;
            CHECK(s.apply(R, R.mul(a, b)) == R.mul(s.apply(R, a), s.apply(R, b)));
            CHECK(s.apply(R, R.add(a, b)) == R.add(s.apply(R, a), s.apply(R, b)));
        }
    }
    CHECK(units == 6);
    CHECK(nilpotent == 3);
    CHECK(units + nilpotent == 9);
    // 1 + y + 3z reduces to 1 + w.
    const Ring& O = *K.ring();
    const auto z = O.from_ints({4, 7});
    const auto v = O.add(O.add(O.one(), K.y()), O.scale(Z3.from_int(3), z));
    CHECK(reduce_to_chain_ring(K, v) == one_plus_w);
}

TEST_CASE("trivial extension") {
    BaseRing Z3(BaseKind::PAdic, 3, 8);
    auto K = unramified_extension(Z3, 1);
    CHECK(K.ring()->rank() == 1);
    CHECK(K.galois_generators().empty());
    CHECK(chain_ring_from_extension(K).size() == 3);
}

TEST_CASE("tower guards") {
    BaseRing Z5(BaseKind::PAdic, 5, 8);
    try {
        totally_ramified_extension(Z5, 5, 1);
        FAIL("expected WildRamification");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::WildRamification);
    }
    BaseRing Z2(BaseKind::PAdic, 2, 8);
    try {
        totally_ramified_extension(Z2, 2, 1);
        FAIL("expected UnsupportedCharacteristic");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::UnsupportedCharacteristic);
    }
    CHECK(unramified_extension(Z2, 2).galois_generators().size() == 1);
    // Cubic ramification over Q_3(i)... e = 3 is wild for p = 3.
    CHECK_THROWS_AS(Tower(TowerSpec{BaseKind::PAdic, 3, 8, 2, 3, 1}), Error);
    // e = 4 over Q_5: 4 | 5 - 1, so the extension is Galois.
    Tower T(TowerSpec{BaseKind::PAdic, 5, 8, 1, 4, 1});
    CHECK(T.galois());
    CHECK(T.action("tau").map.order(*T.ring()) == 4);
    // e = 4 over Q_3 is not Galois (no primitive 4th root of unity in Q_3).
    CHECK_FALSE(Tower(TowerSpec{BaseKind::PAdic, 3, 8, 1, 4, 1}).galois());
    CHECK(Tower(TowerSpec{BaseKind::PAdic, 3, 8, 2, 4, 1}).galois());
}

TEST_CASE("hensel lifting") {
    BaseRing Z5(BaseKind::PAdic, 5, 8);
    auto R = std::make_shared<const Ring>(Z5, Ring::Table{{{Z5.one()}}}, RingInfo{"Z5", 1, 1, {0}});
    RingPoly x2p1 = {R->one(), R->zero(), R->one()};
    auto b = hensel_lift(*R, x2p1, R->from_int(2));
    const std::uint64_t mod = 390625;
    const std::uint64_t bv = Z5.padic_value(b[0]);
    CHECK((bv * bv + 1) % mod == 0);
    CHECK(bv % 5 == 2);

    BaseRing Z3(BaseKind::PAdic, 3, 8);
    auto T = std::make_shared<const Ring>(Z3, Ring::Table{{{Z3.one()}}}, RingInfo{"Z3", 1, 1, {0}});
    CHECK(hensel_lift(*T, {T->from_int(-7), T->one()}, T->from_int(7)) == T->from_int(7));
    CHECK(hensel_lift(*T, {T->zero(), T->from_int(-1), T->one()}, T->one()) == T->one());
    // x^2 - 3 has no root near 0: v(f(0)) = 1 but v(f'(0)) is infinite.
    CHECK_THROWS_AS(hensel_lift(*T, {T->from_int(-3), T->zero(), T->one()}, T->zero()), Error);
}

TEST_CASE("Frobenius lift of order n") {
    for (int n : {2, 3}) {
        BaseRing Z5(BaseKind::PAdic, 5, 12);
        auto K = unramified_extension(Z5, n);
        const auto& s = K.galois_generators().at(0).map;
        const Ring& R = *K.ring();
        CHECK_FALSE(s.is_identity(R));
        CHECK(s.power(R, n).apply(R, K.x()) == K.x());
        CHECK(s.is_ring_homomorphism(R));
        // sigma(x) = x^5 mod 5
        CHECK(reduce_to_chain_ring(K, s.apply(R, K.x())) == reduce_to_chain_ring(K, R.pow(K.x(), 5)));
    }
}

TEST_CASE("valuations and norm classes") {
    BaseRing Z3(BaseKind::PAdic, 3, 16);
    auto K = totally_ramified_extension(Z3, 2, 1);
    CHECK(valuation(*K.ring(), K.y()).value == 1);
    CHECK(valuation(*K.ring(), K.ring()->from_int(3)).value == 2);
    CHECK(valuation(*K.ring(), K.ring()->one()).value == 0);
    CHECK(valuation(*K.ring(), K.ring()->zero()) == Valuation{32, true});
    CHECK(valuation(Z3, Z3.from_int(3)).value == 1);

    auto U = unramified_extension(Z3, 2);
    CHECK(norm_and_class(U, Z3.one()).is_norm);
    auto c3 = norm_and_class(U, Z3.from_int(3));
    CHECK_FALSE(c3.is_norm);
    CHECK(c3.class_exponent == 1);
    CHECK(norm_and_class(U, Z3.from_int(9)).is_norm);
    CHECK_THROWS_AS(norm_and_class(U, Z3.zero()), Error);

    std::mt19937_64 rng(11);
    const Ring& R = *K.ring();
    for (int i = 0; i < 200; ++i) {
        auto a = random_elem(R, rng), b = random_elem(R, rng);
        auto va = valuation(R, a), vb = valuation(R, b), vab = valuation(R, R.mul(a, b));
        if (!va.at_least && !vb.at_least && va.value + vb.value < R.valuation_cap()) CHECK(vab.value == va.value + vb.value);
    }
}

TEST_CASE("ring axioms on the biquadratic tower over Q_3") {
    Tower K(TowerSpec{BaseKind::PAdic, 3, 32, 2, 2, 1});
    const Ring& R = *K.ring();
    REQUIRE(R.rank() == 4);
    CHECK(K.galois_generators().size() == 2);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 1000; ++i) {
        auto a = random_elem(R, rng), b = random_elem(R, rng), c = random_elem(R, rng);
        CHECK(R.mul(R.mul(a, b), c) == R.mul(a, R.mul(b, c)));
        CHECK(R.add(R.add(a, b), c) == R.add(a, R.add(b, c)));
        CHECK(R.mul(a, R.add(b, c)) == R.add(R.mul(a, b), R.mul(a, c)));
    }
    for (const auto& g : K.galois_generators()) {
        CHECK(g.map.is_ring_homomorphism(R));
        CHECK(g.map.order(R) == g.order);
    }
}

TEST_CASE("precision coherence of Hensel lifts") {
    BaseRing Z3a(BaseKind::PAdic, 3, 16), Z3b(BaseKind::PAdic, 3, 32);
    auto Ka = unramified_extension(Z3a, 3), Kb = unramified_extension(Z3b, 3);
    const auto& Ra = *Ka.ring();
    const auto& Rb = *Kb.ring();
    const auto sa = Ka.galois_generators()[0].map.apply(Ra, Ka.x());
    const auto sb = Kb.galois_generators()[0].map.apply(Rb, Kb.x());
    CHECK(Rb.reduce_into(Ra, sb) == sa);
}

TEST_CASE("power series towers") {
    BaseRing F3t(BaseKind::PowerSeries, 3, 16);
    auto K = unramified_extension(F3t, 2);
    const auto& s = K.galois_generators().at(0).map;
    CHECK(s.apply(*K.ring(), K.x()) == K.ring()->neg(K.x()));
    auto Kr = totally_ramified_extension(F3t, 2, 1);
    CHECK(valuation(*Kr.ring(), Kr.ring()->from_base(F3t.uniformizer())).value == 2);
}
