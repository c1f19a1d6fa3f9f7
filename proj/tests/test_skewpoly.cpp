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
#include "skewlat/skewpoly.hpp"

using namespace skewlat;

namespace {

struct F9Fixture {
    Tower K{TowerSpec{BaseKind::PAdic, 3, 8, 2, 1, 1}};
    ChainRing S = chain_ring_from_extension(K);
    SkewContext ctx{S.ring, S.automorphisms.at(0).map};
    const Ring& R = *S.ring;

    Ring::Elem el(std::uint64_t k) const { return R.element(k); }
    SkewPoly poly(std::vector<Ring::Elem> c) const { return make_poly(ctx, std::move(c)); }
};

SkewPoly random_poly(const SkewContext& ctx, int deg, std::mt19937_64& rng, bool monic) {
    const Ring& R = ctx.ring();
    std::vector<Ring::Elem> c;
    const auto N = static_cast<std::size_t>(R.base().precision());
    for (int i = 0; i <= deg; ++i) {
        Ring::Elem x(R.rank());
        for (auto& v : x) {
            std::vector<std::int64_t> d(N);
            for (auto& dv : d) dv = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(R.base().p()));
            v = R.base().from_digits(d);
        }
        c.push_back(x);
    }
    if (monic) c.back() = R.one();
    return make_poly(ctx, std::move(c));
}

}  // namespace

TEST_CASE_FIXTURE(F9Fixture, "commutation rule and products") {
    const auto t = monomial(ctx, R.one(), 1);
    for (std::uint64_t k = 0; k < 9; ++k) {
        const auto a = el(k);
        CHECK(skew_mul(ctx, t, constant_poly(ctx, a)) == monomial(ctx, ctx.apply_sigma(a), 1));
        for (std::uint64_t l = 0; l < 9; ++l) {
            const auto b = el(l);
            // (t - a)(t - b) = t^2 - (sigma(b) + a) t + a b
            const auto lhs = skew_mul(ctx, poly({R.neg(a), R.one()}), poly({R.neg(b), R.one()}));
            const auto rhs = poly({R.mul(a, b), R.neg(R.add(ctx.apply_sigma(b), a)), R.one()});
            CHECK(lhs == rhs);
        }
    }
    const auto f = poly({el(4), el(7), R.one()});
    CHECK(skew_mul(ctx, f, constant_poly(ctx, R.one())) == f);
}

TEST_CASE_FIXTURE(F9Fixture, "division of t^2 - c by t - a") {
    for (std::uint64_t ci = 0; ci < 9; ++ci)
        for (std::uint64_t ai = 0; ai < 9; ++ai) {
            const auto c = el(ci), a = el(ai);
            const auto g = poly({R.neg(c), R.zero(), R.one()});
            const auto f = poly({R.neg(a), R.one()});
            const auto d = right_divide(ctx, g, f);
            CHECK(d.quotient == poly({ctx.apply_sigma(a), R.one()}));
            CHECK(d.remainder == poly({R.sub(R.mul(ctx.apply_sigma(a), a), c)}));
            CHECK(is_right_divisor(ctx, f, g) == (R.mul(ctx.apply_sigma(a), a) == c));
        }
    const auto f = poly({el(5), R.one()});
    CHECK(right_divide(ctx, f, f).quotient == constant_poly(ctx, R.one()));
    CHECK(right_divide(ctx, f, f).remainder.is_zero());
    const auto small = poly({el(3)});
    CHECK(right_divide(ctx, small, f).quotient.is_zero());
    CHECK(right_divide(ctx, small, f).remainder == small);
    CHECK(is_right_divisor(ctx, constant_poly(ctx, R.one()), f));
}

TEST_CASE_FIXTURE(F9Fixture, "linear right divisors of t^2 - c") {
    const auto& sb = S.automorphisms[0].map;
    for (std::uint64_t ci = 0; ci < 9; ++ci) {
        const auto c = el(ci);
        const auto f = poly({R.neg(c), R.zero(), R.one()});
        const auto divs = enumerate_monic_right_divisors(ctx, f, 1);
        // Oracle: count a with sigma(a) a = c over all 9 candidates.
        std::size_t expected = 0;
        for (std::uint64_t ai = 0; ai < 9; ++ai)
            if (R.mul(sb.apply(R, el(ai)), el(ai)) == c) ++expected;
        CHECK(divs.size() == expected);
        if (R.is_zero(c)) CHECK(divs.size() == 1);
        else if (sb.apply(R, c) == c) CHECK(divs.size() == 4);
        else CHECK(divs.empty());
        for (const auto& g : divs) CHECK(is_right_divisor(ctx, g, f));
    }
    const auto t2 = poly({R.zero(), R.zero(), R.one()});
    auto divs = enumerate_monic_right_divisors(ctx, t2, 1);
    REQUIRE(divs.size() == 1);
    CHECK(divs[0] == monomial(ctx, R.one(), 1));
    CHECK_THROWS_AS(enumerate_monic_right_divisors(ctx, t2, 2, 50), Error);
}

TEST_CASE_FIXTURE(F9Fixture, "random division round trips and degree law") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 300; ++i) {
        const auto f = random_poly(ctx, 1 + static_cast<int>(rng() % 4), rng, true);
        const auto g = random_poly(ctx, static_cast<int>(rng() % 8), rng, false);
        const auto d = right_divide(ctx, g, f);
        CHECK(add(ctx, skew_mul(ctx, d.quotient, f), d.remainder) == g);
        CHECK(d.remainder.degree() < f.degree());
        const auto a = random_poly(ctx, 3, rng, false);
        if (!a.is_zero() && !g.is_zero()) CHECK(skew_mul(ctx, a, g).degree() == a.degree() + g.degree());
    }
}

TEST_CASE("sigma-derivations over F_9") {
    Tower K(TowerSpec{BaseKind::PAdic, 3, 4, 2, 1, 1});
    auto S = chain_ring_from_extension(K);
    const Ring& R = *S.ring;
    const auto& sigma = S.automorphisms[0].map;
    // Inner derivation delta(a) = a - sigma(a).
    std::vector<Ring::Elem> im;
    for (std::size_t i = 0; i < R.rank(); ++i) im.push_back(R.sub(R.basis(i), sigma.apply(R, R.basis(i))));
    SkewContext ctx(S.ring, sigma, LinearMap(im));
    REQUIRE(ctx.has_delta());
    const auto t = monomial(ctx, R.one(), 1);
    for (std::uint64_t k = 0; k < 9; ++k) {
        const auto a = R.element(k);
        const auto expected = make_poly(ctx, {ctx.apply_delta(a), ctx.apply_sigma(a)});
        CHECK(skew_mul(ctx, t, constant_poly(ctx, a)) == expected);
        for (std::uint64_t l = 0; l < 9; ++l) {
            const auto b = R.element(l);
            CHECK(ctx.apply_delta(R.mul(a, b)) == R.add(R.mul(ctx.apply_sigma(a), ctx.apply_delta(b)), R.mul(ctx.apply_delta(a), b)));
        }
    }
    std::mt19937_64 rng(9);
    for (int i = 0; i < 200; ++i) {
        const auto f = random_poly(ctx, 2, rng, true);
        const auto g = random_poly(ctx, 5, rng, false);
        const auto d = right_divide(ctx, g, f);
        CHECK(add(ctx, skew_mul(ctx, d.quotient, f), d.remainder) == g);
    }
    // A non-derivation is rejected.
    std::vector<Ring::Elem> bad(R.rank(), R.one());
    CHECK_THROWS_AS(SkewContext(S.ring, sigma, LinearMap(bad)), Error);
    // Nonzero delta over a p-adic ring is rejected.
    const Ring& O = *K.ring();
    std::vector<Ring::Elem> pim;
    for (std::size_t i = 0; i < O.rank(); ++i) pim.push_back(O.sub(O.basis(i), K.galois_generators()[0].map.apply(O, O.basis(i))));
    try {
        SkewContext bad_ctx(K.ring(), K.galois_generators()[0].map, LinearMap(pim));
        FAIL("expected InvalidDerivation");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidDerivation);
    }
}

TEST_CASE("division over a chain ring needs a unit leading coefficient") {
    Tower K(TowerSpec{BaseKind::PAdic, 3, 4, 1, 2, 1});
    auto S = chain_ring_from_extension(K);
    SkewContext ctx(S.ring, S.automorphisms.at(0).map);
    const Ring& R = *S.ring;
    const auto f = make_poly(ctx, {R.one(), S.max_ideal_gen});
    try {
        right_divide(ctx, monomial(ctx, R.one(), 3), f);
        FAIL("expected NonUnitLeadingCoefficient");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NonUnitLeadingCoefficient);
    }
}

TEST_CASE("round trips over the Q_3(i) order at precision 32") {
    Tower K(TowerSpec{BaseKind::PAdic, 3, 32, 2, 1, 1});
    SkewContext ctx(K.ring(), K.galois_generators()[0].map);
    std::mt19937_64 rng(17);
    for (int i = 0; i < 200; ++i) {
        const auto f = random_poly(ctx, 1 + static_cast<int>(rng() % 3), rng, true);
        const auto g = random_poly(ctx, static_cast<int>(rng() % 6), rng, false);
        const auto d = right_divide(ctx, g, f);
        CHECK(add(ctx, skew_mul(ctx, d.quotient, f), d.remainder) == g);
    }
}

TEST_CASE("text format") {
    Tower K(TowerSpec{BaseKind::PAdic, 3, 8, 2, 1, 1});
    SkewContext ctx(K.ring(), K.galois_generators()[0].map);
    const Ring& R = *K.ring();
    const auto f = make_poly(ctx, {R.from_ints({-1, 3}), R.zero(), R.one()});
    const auto s = format_poly(ctx, f);
    CHECK(s == "(-1, 3) + t^2");
    CHECK(parse_poly(ctx, s) == f);
    CHECK(parse_poly(ctx, "(2, 0)*t + (1, 1)*t^3 + 5") == make_poly(ctx, {R.from_int(5), R.from_ints({2, 0}), R.zero(), R.from_ints({1, 1})}));
    CHECK(parse_poly(ctx, "0").is_zero());
    CHECK_THROWS_AS(parse_poly(ctx, "(1, 2"), Error);
    CHECK_THROWS_AS(parse_poly(ctx, "3 t"), Error);
}
