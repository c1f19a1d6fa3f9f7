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

#include "skewlat/residue.hpp"

#include "skewlat/error.hpp"
#include "skewlat/padic.hpp"

namespace skewlat {

namespace {

std::int64_t mod_p(std::int64_t a, std::int64_t p) {
    a %= p;
    return a < 0 ? a + p : a;
}

// Remainder of a modulo the monic polynomial b.
IntPoly poly_rem(IntPoly a, const IntPoly& b, std::int64_t p) {
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const std::int64_t lead = mod_p(a.back(), p);
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) a[shift + i] = mod_p(a[shift + i] - lead * b[i], p);
        a.pop_back();
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

}  // namespace

bool is_irreducible_mod_p(const IntPoly& poly, std::int64_t p) {
    if (poly.size() < 2 || mod_p(poly.back(), p) != 1) fail(ErrorCode::InvalidArgument, "expected a monic polynomial");
    const int n = static_cast<int>(poly.size()) - 1;
    if (n == 1) return true;
    // Exhaustive trial division by monic polynomials of degree <= n/2.
    for (int d = 1; 2 * d <= n; ++d) {
        std::uint64_t count = 1;
        for (int i = 0; i < d; ++i) count *= static_cast<std::uint64_t>(p);
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            IntPoly div(static_cast<std::size_t>(d) + 1, 0);
            div[static_cast<std::size_t>(d)] = 1;
            std::uint64_t k = idx;
            for (int i = 0; i < d; ++i) {
                div[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(k % static_cast<std::uint64_t>(p));
                k /= static_cast<std::uint64_t>(p);
            }
            if (poly_rem(poly, div, p).empty()) return false;
        }
    }
    return true;
}

IntPoly smallest_irreducible(std::int64_t p, int degree) {
    if (!is_prime(p)) fail(ErrorCode::CompositeCharacteristic, std::to_string(p) + " is not prime");
    if (degree < 1) fail(ErrorCode::InvalidArgument, "field degree must be >= 1");
    std::uint64_t count = 1;
    for (int i = 0; i < degree; ++i) count *= static_cast<std::uint64_t>(p);
    // Lexicographic on (a_0, ..., a_{j-1}): a_0 is the most significant digit.
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        IntPoly poly(static_cast<std::size_t>(degree) + 1, 0);
        poly.back() = 1;
        std::uint64_t k = idx;
        for (int i = degree - 1; i >= 0; --i) {
            poly[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(k % static_cast<std::uint64_t>(p));
            k /= static_cast<std::uint64_t>(p);
        }
        if (is_irreducible_mod_p(poly, p)) return poly;
    }
    fail(ErrorCode::InvalidArgument, "no irreducible polynomial found");
}

FiniteField make_finite_field(std::int64_t p, int degree, BaseKind kind) {
    FiniteField F;
    F.p = p;
    F.degree = degree;
    F.modulus = smallest_irreducible(p, degree);
    const BaseRing fp(kind, p, 1);
    std::vector<BaseElem> coeffs;
    for (auto c : F.modulus) coeffs.push_back(fp.from_int(c));
    RingInfo info{"F_" + std::to_string(p) + "^" + std::to_string(degree), 1, degree, std::vector<int>(static_cast<std::size_t>(degree), 0)};
    F.ring = make_monogenic_ring(fp, coeffs, info);
    // Frobenius: x^i -> (x^p)^i.
    const Ring& R = *F.ring;
    const Ring::Elem xp = degree > 1 ? R.pow(R.basis(1), static_cast<std::uint64_t>(p)) : R.one();
    std::vector<Ring::Elem> images;
    for (int i = 0; i < degree; ++i) images.push_back(R.pow(xp, static_cast<std::uint64_t>(i)));
    F.frobenius = RingAuto{"frobenius", LinearMap(std::move(images)), degree};
    return F;
}

ChainRing chain_ring_from_extension(const Tower& ext) {
    ChainRing S;
    S.p = ext.base().p();
    S.e = ext.e();
    S.residue_degree = ext.f();
    S.ring = ext.residue_ring();
    S.max_ideal_gen = ext.e() > 1 ? ext.ring()->reduce_into(*S.ring, ext.uniformizer()) : S.ring->zero();
    for (const auto& g : ext.galois_generators())
        S.automorphisms.push_back(RingAuto{g.name, g.map.reduced_into(*ext.ring(), *S.ring), g.order});
    return S;
}

bool is_unit(const ChainRing& S, const Ring::Elem& r) { return S.ring->is_unit(r); }

}  // namespace skewlat
