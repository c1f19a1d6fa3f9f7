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
 * @file ring.hpp
 * @brief Associative algebras of finite rank over a truncated DVR base.
 *
 * A Ring is given by a basis b_0 = 1, b_1, ..., b_{n-1} over the base and its
 * structure constants b_i b_j = sum_k T[i][j][k] b_k. This one representation
 * covers rings of integers O_K (truncated at precision N), their residue chain
 * rings O_K / p O_K (the same table at precision 1), finite fields, and the
 * noncommutative natural orders of cyclic algebras.
 *
 * Ring automorphisms and sigma-derivations are base-linear maps, stored as the
 * images of the basis (LinearMap).
 */

#ifndef SKEWLAT_RING_HPP
#define SKEWLAT_RING_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "skewlat/base.hpp"
#include "skewlat/linalg.hpp"

namespace skewlat {

/// Descriptive data carried alongside the multiplication table.
struct RingInfo {
    std::string name;
    /// Ramification index e and inertia degree f of a local ring of integers
    /// (or of the chain ring it reduces to).
    int ramification = 1;
    int inertia = 1;
    /// Valuation weight of each basis element, in units of the ring's own
    /// uniformizer. Empty when the ring carries no valuation.
    std::vector<int> weights;
};

class Ring {
public:
    using Elem = std::vector<BaseElem>;
    using Table = std::vector<std::vector<Elem>>;

    /// `table[i][j]` is b_i * b_j. Basis element 0 must be the identity.
    Ring(BaseRing base, Table table, RingInfo info);

    const BaseRing& base() const noexcept { return base_; }
    std::size_t rank() const noexcept { return table_.size(); }
    const RingInfo& info() const noexcept { return info_; }
    const std::string& name() const noexcept { return info_.name; }
    bool is_commutative() const noexcept { return commutative_; }
    bool has_valuation() const noexcept { return !info_.weights.empty(); }
    const Table& table() const noexcept { return table_; }

    /// Precision 1: the ring is finite and small enough to enumerate.
    bool is_finite() const noexcept { return base_.is_field(); }

    Elem zero() const;
    Elem one() const;
    Elem basis(std::size_t i) const;
    Elem from_base(const BaseElem& a) const;
    Elem from_int(std::int64_t n) const;
    /// Coordinates given in the integer digit syntax (see BaseRing::from_int).
    Elem from_ints(const std::vector<std::int64_t>& coords) const;

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem scale(const BaseElem& s, const Elem& a) const;
    Elem pow(const Elem& a, std::uint64_t k) const;

    bool is_zero(const Elem& a) const;
    bool equal(const Elem& a, const Elem& b) const { return a == b; }

    /// Matrix of x -> a x (column j holds the coordinates of a b_j).
    BaseMatrix left_regular(const Elem& a) const;
    /// Matrix of x -> x a.
    BaseMatrix right_regular(const Elem& a) const;

    /// a is a unit iff left multiplication by a is invertible modulo p.
    bool is_unit(const Elem& a) const;
    Elem inverse(const Elem& a) const;
    /// Exact quotient q with b q = a in a commutative ring with valuation;
    /// requires valuation(a) >= valuation(b).
    Elem divide(const Elem& a, const Elem& b) const;

    /// Valuation normalized so the ring's uniformizer has valuation 1 and the
    /// base uniformizer has valuation e. nullopt for zero to precision.
    std::optional<int> valuation(const Elem& a) const;
    /// The bound N * e reported for elements that vanish to precision.
    int valuation_cap() const noexcept { return base_.precision() * info_.ramification; }

    /// Number of elements p^(rank * N); throws SearchTooLarge above `bound`.
    std::uint64_t size(std::uint64_t bound = UINT64_MAX) const;
    /// Deterministic enumeration: digit k of `index` (base p) is digit k / rank
    /// of coordinate k % rank.
    Elem element(std::uint64_t index) const;
    std::uint64_t index_of(const Elem& a) const;

    /// Same multiplication table over the base truncated to `precision`.
    std::shared_ptr<const Ring> reduced(int precision) const;
    Elem reduce_into(const Ring& target, const Elem& a) const;
    /// Digit-exact lift (canonical section of the reduction).
    Elem lift_from(const Ring& source, const Elem& a) const;

    std::vector<std::int64_t> to_ints(const Elem& a) const;
    std::string to_string(const Elem& a) const;

private:
    BaseRing base_;
    Table table_;
    RingInfo info_;
    bool commutative_ = true;
};

using RingPtr = std::shared_ptr<const Ring>;

/// Base-linear map of a Ring, stored as the images of the basis.
class LinearMap {
public:
    LinearMap() = default;
    explicit LinearMap(std::vector<Ring::Elem> images) : images_(std::move(images)) {}

    static LinearMap identity(const Ring& R);
    static LinearMap zero(const Ring& R);

    const std::vector<Ring::Elem>& images() const noexcept { return images_; }
    bool empty() const noexcept { return images_.empty(); }

    Ring::Elem apply(const Ring& R, const Ring::Elem& x) const;
    /// (this o other)(x) = this(other(x)).
    LinearMap compose(const Ring& R, const LinearMap& other) const;
    LinearMap power(const Ring& R, int k) const;
    bool is_identity(const Ring& R) const;

    /// Multiplicative and unital on all basis pairs (which suffices by
    /// bilinearity).
    bool is_ring_homomorphism(const Ring& R) const;
    /// Least k >= 1 with map^k = id, or nullopt if none up to `max_order`.
    std::optional<int> order(const Ring& R, int max_order = 64) const;
    /// Transfer to the same table at another precision.
    LinearMap reduced_into(const Ring& source, const Ring& target) const;

    friend bool operator==(const LinearMap&, const LinearMap&) = default;

private:
    std::vector<Ring::Elem> images_;
};

/// Builds a commutative ring from a monic polynomial: base[x] / (g(x)).
RingPtr make_monogenic_ring(const BaseRing& base, const std::vector<BaseElem>& monic_poly, RingInfo info);

}  // namespace skewlat

#endif
