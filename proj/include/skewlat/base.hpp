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
 * @file base.hpp
 * @brief Truncated discrete valuation rings Z_p / p^N and F_p[[t]] / t^N.
 *
 * Every ring in the library is a free module of finite rank over one of these
 * two bases. Elements are canonical: a p-adic element is its residue in
 * [0, p^N), a power series is its vector of N coefficients in [0, p). Both
 * kinds expose the same digit view (low to high), so serialization and the
 * valuation are kind-agnostic. Precision 1 gives the prime field F_p for
 * either kind, which is how residue rings are modelled.
 */

#ifndef SKEWLAT_BASE_HPP
#define SKEWLAT_BASE_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace skewlat {

enum class BaseKind { PAdic, PowerSeries };

std::string to_string(BaseKind kind);
BaseKind base_kind_from_string(const std::string& s);

bool is_prime(std::int64_t n) noexcept;

/// Element of a BaseRing. Only meaningful together with the ring that made it.
class BaseElem {
public:
    BaseElem() = default;

    friend bool operator==(const BaseElem&, const BaseElem&) = default;
    /// Arbitrary but fixed order, for use as a container key.
    friend auto operator<=>(const BaseElem&, const BaseElem&) = default;

private:
    friend class BaseRing;
    // p-adic: a single word holding the residue; power series: one word per digit.
    std::vector<std::uint64_t> w_;
};

class BaseRing {
public:
    /// Throws CompositeCharacteristic if p is not prime, InvalidArgument if the
    /// precision is < 1 or (p-adic only) p^N does not fit in 62 bits.
    BaseRing(BaseKind kind, std::int64_t p, int precision);

    BaseKind kind() const noexcept { return kind_; }
    std::int64_t p() const noexcept { return p_; }
    int precision() const noexcept { return precision_; }
    bool is_field() const noexcept { return precision_ == 1; }

    /// Same kind and prime, new precision.
    BaseRing with_precision(int precision) const { return BaseRing(kind_, p_, precision); }

    /// Largest p-adic precision representable for the prime p.
    static int max_padic_precision(std::int64_t p);

    BaseElem zero() const;
    BaseElem one() const;
    /// Integer embedding. For power series the base-p digits of |n| become the
    /// coefficients of t^0, t^1, ... and the sign is applied afterwards.
    BaseElem from_int(std::int64_t n) const;
    BaseElem from_digits(std::span<const std::int64_t> digits) const;
    /// k * 1 in the ring (for power series this is k mod p).
    BaseElem constant(std::int64_t k) const;
    /// The uniformizer: p for Z_p, t for F_p[[t]].
    BaseElem uniformizer() const;

    /// Exactly `precision()` digits in [0, p), low to high.
    std::vector<std::int64_t> digits(const BaseElem& a) const;
    std::int64_t residue(const BaseElem& a) const;

    BaseElem add(const BaseElem& a, const BaseElem& b) const;
    BaseElem sub(const BaseElem& a, const BaseElem& b) const;
    BaseElem neg(const BaseElem& a) const;
    BaseElem mul(const BaseElem& a, const BaseElem& b) const;
    BaseElem mul_int(const BaseElem& a, std::int64_t k) const;

    bool is_zero(const BaseElem& a) const;
    bool is_one(const BaseElem& a) const;
    /// Index of the first nonzero digit; nullopt when all digits vanish.
    std::optional<int> valuation(const BaseElem& a) const;
    bool is_unit(const BaseElem& a) const { return valuation(a) == 0; }
    /// Inverse of a unit; throws InvalidArgument otherwise.
    BaseElem inverse(const BaseElem& a) const;

    /// Multiplication by uniformizer^k (digits shift up, top digits fall off).
    BaseElem shift_up(const BaseElem& a, int k) const;
    /// Exact division by uniformizer^k; requires valuation >= k. The k digits
    /// that become unknown are filled with zero.
    BaseElem shift_down(const BaseElem& a, int k) const;
    /// Reduction modulo uniformizer^k.
    BaseElem truncate(const BaseElem& a, int k) const;

    /// Reduction into a ring of the same kind and prime with lower precision.
    BaseElem reduce_into(const BaseRing& target, const BaseElem& a) const;
    /// Digit-exact lift of an element of `source` (same kind and prime).
    BaseElem lift_from(const BaseRing& source, const BaseElem& a) const;

    /// Canonical integer for p-adic elements (the residue in [0, p^N)).
    std::uint64_t padic_value(const BaseElem& a) const;
    /// Signed representative in (-p^N/2, p^N/2] for p-adic elements; the
    /// base-p digit integer for power series. Used for readable output.
    std::int64_t to_int(const BaseElem& a) const;

    std::string to_string(const BaseElem& a) const;

    friend bool operator==(const BaseRing& a, const BaseRing& b) noexcept {
        return a.kind_ == b.kind_ && a.p_ == b.p_ && a.precision_ == b.precision_;
    }

private:
    BaseElem make_padic(std::uint64_t v) const;
    BaseElem make_series(std::vector<std::uint64_t> digits) const;

    BaseKind kind_;
    std::int64_t p_;
    int precision_;
    std::uint64_t modulus_ = 0;  // p^N for the p-adic kind
};

}  // namespace skewlat

#endif
