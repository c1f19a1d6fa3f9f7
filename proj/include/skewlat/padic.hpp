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
 * @file padic.hpp
 * @brief Rings of integers of local fields at finite precision.
 *
 * A Tower is O_K for K obtained from the base (Z_p or F_p[[t]]) by at most one
 * unramified step of degree f followed by at most one tame totally ramified
 * step y^e = u * uniformizer. O_K is stored as a Ring with basis x^i y^j
 * (index j * f + i), where x generates the unramified part.
 */

#ifndef SKEWLAT_PADIC_HPP
#define SKEWLAT_PADIC_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skewlat/residue.hpp"
#include "skewlat/ring.hpp"

namespace skewlat {

struct GaloisAction {
    std::string name;
    LinearMap map;
    int order = 1;
};

struct TowerSpec {
    BaseKind kind = BaseKind::PAdic;
    std::int64_t p = 3;
    int precision = 32;
    int unramified_degree = 1;
    int ramification = 1;
    /// Unit u of the base in y^e = u * uniformizer, in integer digit syntax.
    std::int64_t unit = 1;
};

class Tower {
public:
    /// Validates the spec and builds O_K with its Galois generators.
    explicit Tower(const TowerSpec& spec);

    const TowerSpec& spec() const noexcept { return spec_; }
    const BaseRing& base() const noexcept { return base_; }
    const RingPtr& ring() const noexcept { return ring_; }
    int e() const noexcept { return spec_.ramification; }
    int f() const noexcept { return spec_.unramified_degree; }
    int degree() const noexcept { return e() * f(); }

    /// Residue modulus of the unramified step (digit-exact lift is the
    /// defining polynomial of x).
    const IntPoly& residue_modulus() const noexcept { return modulus_; }
    /// Whether the ramified step is Galois over the unramified subextension.
    bool galois() const noexcept { return galois_; }
    /// Frobenius lift (when f > 1), then y -> zeta y (when e > 1 and Galois).
    const std::vector<GaloisAction>& galois_generators() const noexcept { return actions_; }
    const GaloisAction& action(const std::string& name) const;

    Ring::Elem x() const;
    Ring::Elem y() const;
    /// Generator of the maximal ideal of O_K: y if ramified, else the base uniformizer.
    Ring::Elem uniformizer() const;
    /// The primitive e-th root of unity used by the ramified Galois action.
    const std::optional<Ring::Elem>& zeta() const noexcept { return zeta_; }

    RingPtr residue_ring() const { return residue_; }

private:
    TowerSpec spec_;
    BaseRing base_;
    IntPoly modulus_;
    RingPtr ring_;
    RingPtr residue_;
    bool galois_ = true;
    std::vector<GaloisAction> actions_;
    std::optional<Ring::Elem> zeta_;
};

using ExtensionRing = Tower;

Tower unramified_extension(const BaseRing& base, int n);
Tower totally_ramified_extension(const BaseRing& base, int e, std::int64_t unit);

/// Polynomial over a commutative Ring, coefficients low to high.
using RingPoly = std::vector<Ring::Elem>;

Ring::Elem evaluate(const Ring& R, const RingPoly& poly, const Ring::Elem& x);
RingPoly derivative(const Ring& R, const RingPoly& poly);

/// Newton iteration from `seed`; requires v(poly(seed)) > 2 v(poly'(seed)).
Ring::Elem hensel_lift(const Ring& R, const RingPoly& poly, const Ring::Elem& seed);

struct Valuation {
    int value = 0;
    /// True when the element vanishes to precision; value is then N * e.
    bool at_least = false;

    friend bool operator==(const Valuation&, const Valuation&) = default;
};

Valuation valuation(const Ring& R, const Ring::Elem& x);
Valuation valuation(const BaseRing& R, const BaseElem& x);

struct NormClass {
    bool is_norm = false;
    /// The class of c is uniformizer^class_exponent.
    int class_exponent = 0;
};

/// Norm class of a base element for an unramified extension of degree f.
NormClass norm_and_class(const Tower& ext, const BaseElem& c);

Ring::Elem reduce_to_chain_ring(const Tower& ext, const Ring::Elem& x);

}  // namespace skewlat

#endif
