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
#include "skewlat/base.hpp"
#include "skewlat/error.hpp"
#include "skewlat/linalg.hpp"
#include "skewlat/ring.hpp"

using namespace skewlat;

TEST_CASE("p-adic arithmetic matches integer arithmetic mod p^N") {
    BaseRing R(BaseKind::PAdic, 3, 10);
    const std::int64_t mod = 59049;
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        std::int64_t a = static_cast<std::int64_t>(rng() % mod), b = static_cast<std::int64_t>(rng() % mod);
        CHECK(R.padic_value(R.add(R.from_int(a), R.from_int(b))) == static_cast<std::uint64_t>((a + b) % mod));
        CHECK(R.padic_value(R.mul(R.from_int(a), R.from_int(b))) == static_cast<std::uint64_t>((a * b) % mod));
        if (a % 3 != 0) CHECK(R.is_one(R.mul(R.from_int(a), R.inverse(R.from_int(a)))));
    }
    CHECK(R.valuation(R.from_int(18)) == 2);
    CHECK_FALSE(R.valuation(R.zero()).has_value());
    CHECK(R.to_int(R.from_int(-5)) == -5);
    CHECK(R.padic_value(R.shift_down(R.from_int(54), 3)) == 2);
}

TEST_CASE("base ring guards") {
    CHECK_THROWS_AS(BaseRing(BaseKind::PAdic, 9, 4), Error);
    CHECK_THROWS_AS(BaseRing(BaseKind::PAdic, 3, 60), Error);
    CHECK(BaseRing::max_padic_precision(3) >= 32);
}

TEST_CASE("power series arithmetic") {
    BaseRing R(BaseKind::PowerSeries, 3, 6);
    const BaseElem t = R.uniformizer();
    const BaseElem one_minus_t = R.sub(R.one(), t);
    // 1 / (1 - t) = 1 + t + t^2 + ...
    auto inv = R.inverse(one_minus_t);
    CHECK(R.digits(inv) == std::vector<std::int64_t>{1, 1, 1, 1, 1, 1});
    CHECK(R.valuation(R.mul(t, t)) == 2);
    CHECK(R.is_zero(R.mul_int(R.one(), 3)));
    BaseRing R2(BaseKind::PowerSeries, 2, 8);
    auto x = R2.add(R2.one(), R2.uniformizer());
    CHECK(R2.is_one(R2.mul(x, R2.inverse(x))));
}

TEST_CASE("echelon and membership over Z/3^6") {
    BaseRing R(BaseKind::PAdic, 3, 6);
    auto I = [&](std::int64_t v) { return R.from_int(v); };
    BaseMatrix m = {{I(3), I(6)}, {I(1), I(9)}};
    auto e = echelon(R, m, 2);
    CHECK(e.rank() == 2);
    // det = 27 - 6 = 21 = 3 * 7, so the pivot valuations sum to 1.
    CHECK(e.pivot_vals[0] + e.pivot_vals[1] == 1);
    CHECK(in_row_module(R, e, {I(4), I(15)}));
    CHECK_FALSE(in_row_module(R, e, {I(0), I(1)}));
    // Row module membership is a solve against the transpose: (4, 15) = row0 + row1.
    auto x = solve(R, transpose(m), {I(4), I(15)});
    REQUIRE(x);
    CHECK(*x == BaseVec{I(1), I(1)});
    CHECK_FALSE(solve(R, m, {I(4), I(15)}).has_value());
}

TEST_CASE("monogenic ring Z_3[i]") {
    BaseRing B(BaseKind::PAdic, 3, 8);
    auto R = make_monogenic_ring(B, {B.one(), B.zero(), B.one()}, {"Z3[i]", 1, 2, {0, 0}});
    auto i = R->basis(1);
    CHECK(R->mul(i, i) == R->from_int(-1));
    auto a = R->from_ints({2, 1});
    CHECK(R->is_unit(a));
    CHECK(R->mul(a, R->inverse(a)) == R->one());
    CHECK_FALSE(R->is_unit(R->from_ints({3, 6})));
    CHECK(R->valuation(R->from_ints({9, 3})) == 1);
    auto conj = LinearMap({R->one(), R->neg(i)});
    CHECK(conj.is_ring_homomorphism(*R));
    CHECK(conj.order(*R) == 2);
    auto F9 = R->reduced(1);
    CHECK(F9->size() == 9);
    for (std::uint64_t k = 0; k < 9; ++k) CHECK(F9->index_of(F9->element(k)) == k);
}
