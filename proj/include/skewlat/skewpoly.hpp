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

/**
 * @file skewpoly.hpp
 * @brief Skew polynomial rings S[t; sigma, delta] with t a = sigma(a) t + delta(a).
 *
 * Polynomials carry left coefficients a_0 + a_1 t + ... stored low to high;
 * the zero polynomial is the empty vector. The coefficient ring may be
 * noncommutative.
 */

#ifndef SKEWLAT_SKEWPOLY_HPP
#define SKEWLAT_SKEWPOLY_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "skewlat/ring.hpp"

namespace skewlat {

inline constexpr std::uint64_t kDefaultSearchBound = 10'000'000;

class SkewContext {
public:
    /// Validates that sigma is an injective ring endomorphism and that delta
    /// (if given) is a left sigma-derivation. Nonzero delta is accepted over
    /// finite coefficient rings only.
    SkewContext(RingPtr ring, LinearMap sigma, LinearMap delta = {});

    const Ring& ring() const noexcept { return *ring_; }
    const RingPtr& ring_ptr() const noexcept { return ring_; }
    const LinearMap& sigma() const noexcept { return sigma_; }
    const LinearMap& delta() const noexcept { return delta_; }
    bool has_delta() const noexcept { return !delta_.empty(); }

    Ring::Elem apply_sigma(const Ring::Elem& a) const { return sigma_.apply(*ring_, a); }
    Ring::Elem apply_sigma(const Ring::Elem& a, int k) const;
    Ring::Elem apply_delta(const Ring::Elem& a) const;

private:
    RingPtr ring_;
    LinearMap sigma_;
    LinearMap delta_;
};

using SkewContextPtr = std::shared_ptr<const SkewContext>;

struct SkewPoly {
    std::vector<Ring::Elem> coeffs;

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
    bool is_zero() const noexcept { return coeffs.empty(); }
    const Ring::Elem& lead() const { return coeffs.back(); }

    friend bool operator==(const SkewPoly&, const SkewPoly&) = default;
};

/// Drops trailing zero coefficients.
SkewPoly make_poly(const SkewContext& ctx, std::vector<Ring::Elem> coeffs);
SkewPoly constant_poly(const SkewContext& ctx, const Ring::Elem& a);
/// a t^k
SkewPoly monomial(const SkewContext& ctx, const Ring::Elem& a, int k);
/// Coefficient of t^i (zero beyond the degree).
Ring::Elem coeff(const SkewContext& ctx, const SkewPoly& f, int i);

SkewPoly add(const SkewContext& ctx, const SkewPoly& a, const SkewPoly& b);
SkewPoly sub(const SkewContext& ctx, const SkewPoly& a, const SkewPoly& b);
SkewPoly left_scale(const SkewContext& ctx, const Ring::Elem& s, const SkewPoly& a);
bool is_monic(const SkewContext& ctx, const SkewPoly& f);

SkewPoly skew_mul(const SkewContext& ctx, const SkewPoly& a, const SkewPoly& b);

struct Division {
    SkewPoly quotient;
    SkewPoly remainder;
};

/// g = q f + r with deg r < deg f; the leading coefficient of f must be a unit.
Division right_divide(const SkewContext& ctx, const SkewPoly& g, const SkewPoly& f);

/// Whether g is a right divisor of f (f = q g).
bool is_right_divisor(const SkewContext& ctx, const SkewPoly& g, const SkewPoly& f);

/// All monic right divisors of f of degree k over a finite coefficient ring,
/// ordered lexicographically by (g_0, ..., g_{k-1}) in element index order.
std::vector<SkewPoly> enumerate_monic_right_divisors(const SkewContext& ctx, const SkewPoly& f, int k,
                                                     std::uint64_t bound = kDefaultSearchBound);

/// Element syntax: an integer for rank-1 rings, otherwise "(c_0, c_1, ...)".
std::string format_elem(const Ring& R, const Ring::Elem& a);
Ring::Elem parse_elem(const Ring& R, const std::string& text);

/// Polynomial syntax: "c0 + c1*t + c2*t^2".
std::string format_poly(const SkewContext& ctx, const SkewPoly& f);
SkewPoly parse_poly(const SkewContext& ctx, const std::string& text);

}  // namespace skewlat

#endif
