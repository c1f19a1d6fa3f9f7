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

#include "skewlat/padic.hpp"

#include <numeric>

#include "skewlat/error.hpp"

namespace skewlat {

namespace {

std::vector<std::int64_t> prime_factors(std::uint64_t n) {
    std::vector<std::int64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(static_cast<std::int64_t>(d));
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(static_cast<std::int64_t>(n));
    return out;
}

// A generator of the multiplicative group of a finite field given as a Ring.
Ring::Elem multiplicative_generator(const Ring& F) {
    const std::uint64_t q = F.size();
    const auto factors = prime_factors(q - 1);
    for (std::uint64_t idx = 1; idx < q; ++idx) {
        const Ring::Elem a = F.element(idx);
        if (F.is_zero(a)) continue;
        bool generator = true;
        for (auto r : factors)
            if (F.pow(a, (q - 1) / static_cast<std::uint64_t>(r)) == F.one()) {
                generator = false;
                break;
            }
        if (generator) return a;
    }
    fail(ErrorCode::InvalidArgument, "residue ring is not a field");
}

// Embeds an element of the unramified ring U into block j of the tower basis.
Ring::Elem embed_block(const Ring& K, const Ring::Elem& u, int f, int j) {
    Ring::Elem out = K.zero();
    for (int i = 0; i < f; ++i) out[static_cast<std::size_t>(j * f + i)] = u[static_cast<std::size_t>(i)];
    return out;
}

}  // namespace

Tower::Tower(const TowerSpec& spec) : spec_(spec), base_(spec.kind, spec.p, spec.precision) {
    const int f = spec_.unramified_degree, e = spec_.ramification;
    if (f < 1 || e < 1) fail(ErrorCode::InvalidArgument, "extension degrees must be >= 1");
    if (e > 1) {
        if (spec_.p == 2) fail(ErrorCode::UnsupportedCharacteristic, "ramified towers need an odd residue characteristic");
        if (e % spec_.p == 0) fail(ErrorCode::WildRamification, "ramification index divisible by p is wild");
    }
    const BaseElem u = base_.from_int(spec_.unit);
    if (e > 1 && !base_.is_unit(u)) fail(ErrorCode::InvalidArgument, "ramification constant u must be a unit");

    // Unramified part U = base[x] / (g), g the digit lift of the residue modulus.
    RingPtr U;
    if (f > 1) {
        modulus_ = smallest_irreducible(spec_.p, f);
        std::vector<BaseElem> g;
        for (auto c : modulus_) g.push_back(base_.from_int(c));
        U = make_monogenic_ring(base_, g, {"U", 1, f, std::vector<int>(static_cast<std::size_t>(f), 0)});
    } else {
        modulus_ = {0, 1};
        U = std::make_shared<const Ring>(base_, Ring::Table{{{base_.one()}}}, RingInfo{"U", 1, 1, {0}});
    }

    const int n = e * f;
    const BaseElem u_pi = base_.mul(u, base_.uniformizer());
    Ring::Table table(static_cast<std::size_t>(n), std::vector<Ring::Elem>(static_cast<std::size_t>(n)));
    std::vector<int> weights(static_cast<std::size_t>(n));
    for (int j1 = 0; j1 < e; ++j1)
        for (int i1 = 0; i1 < f; ++i1) {
            weights[static_cast<std::size_t>(j1 * f + i1)] = j1;
            for (int j2 = 0; j2 < e; ++j2)
                for (int i2 = 0; i2 < f; ++i2) {
                    Ring::Elem prod = U->table()[static_cast<std::size_t>(i1)][static_cast<std::size_t>(i2)];
                    int j = j1 + j2;
                    if (j >= e) {
                        j -= e;
                        for (auto& c : prod) c = base_.mul(c, u_pi);
                    }
                    Ring::Elem out(static_cast<std::size_t>(n), base_.zero());
                    for (int k = 0; k < f; ++k) out[static_cast<std::size_t>(j * f + k)] = prod[static_cast<std::size_t>(k)];
                    table[static_cast<std::size_t>(j1 * f + i1)][static_cast<std::size_t>(j2 * f + i2)] = std::move(out);
                }
        }
    std::string name = "O_K(" + to_string(spec_.kind) + ", p=" + std::to_string(spec_.p) + ", f=" + std::to_string(f) +
                       ", e=" + std::to_string(e) + ")";
    ring_ = std::make_shared<const Ring>(base_, std::move(table), RingInfo{name, e, f, weights});
    residue_ = ring_->reduced(1);
    const Ring& K = *ring_;

    if (f > 1) {
        // Frobenius lift: the root of g congruent to x^p.
        RingPoly g;
        for (auto c : modulus_) g.push_back(U->from_int(c));
        const Ring::Elem r = hensel_lift(*U, g, U->pow(U->basis(1), static_cast<std::uint64_t>(spec_.p)));
        std::vector<Ring::Elem> images;
        for (int j = 0; j < e; ++j)
            for (int i = 0; i < f; ++i) images.push_back(embed_block(K, U->pow(r, static_cast<std::uint64_t>(i)), f, j));
        // images are ordered by index j * f + i, matching the loop order.
        actions_.push_back(GaloisAction{"frobenius", LinearMap(std::move(images)), f});
    }
    if (e > 1) {
        std::uint64_t q = 1;
        for (int i = 0; i < f; ++i) q *= static_cast<std::uint64_t>(spec_.p);
        galois_ = (q - 1) % static_cast<std::uint64_t>(e) == 0;
        if (galois_) {
            auto Ures = U->reduced(1);
            const Ring::Elem w = Ures->pow(multiplicative_generator(*Ures), (q - 1) / static_cast<std::uint64_t>(e));
            RingPoly xe_minus_1(static_cast<std::size_t>(e) + 1, U->zero());
            xe_minus_1[0] = U->from_int(-1);
            xe_minus_1.back() = U->one();
            const Ring::Elem z = hensel_lift(*U, xe_minus_1, U->lift_from(*Ures, w));
            std::vector<Ring::Elem> images;
            for (int j = 0; j < e; ++j)
                for (int i = 0; i < f; ++i)
                    images.push_back(embed_block(K, U->mul(U->basis(static_cast<std::size_t>(i)), U->pow(z, static_cast<std::uint64_t>(j))), f, j));
            actions_.push_back(GaloisAction{"tau", LinearMap(std::move(images)), e});
            zeta_ = embed_block(K, z, f, 0);
        }
    }
}

const GaloisAction& Tower::action(const std::string& name) const {
    for (const auto& a : actions_)
        if (a.name == name) return a;
    fail(ErrorCode::InvalidArgument, "tower has no Galois generator named '" + name + "'");
}

Ring::Elem Tower::x() const { return f() > 1 ? ring_->basis(1) : ring_->one(); }

Ring::Elem Tower::y() const {
    if (e() == 1) fail(ErrorCode::InvalidArgument, "unramified tower has no ramified generator");
    return ring_->basis(static_cast<std::size_t>(f()));
}

Ring::Elem Tower::uniformizer() const { return e() > 1 ? y() : ring_->from_base(base_.uniformizer()); }

Tower unramified_extension(const BaseRing& base, int n) {
    return Tower(TowerSpec{base.kind(), base.p(), base.precision(), n, 1, 1});
}

Tower totally_ramified_extension(const BaseRing& base, int e, std::int64_t unit) {
    return Tower(TowerSpec{base.kind(), base.p(), base.precision(), 1, e, unit});
}

Ring::Elem evaluate(const Ring& R, const RingPoly& poly, const Ring::Elem& x) {
    Ring::Elem acc = R.zero();
    for (std::size_t i = poly.size(); i-- > 0;) acc = R.add(R.mul(acc, x), poly[i]);
    return acc;
}

RingPoly derivative(const Ring& R, const RingPoly& poly) {
    RingPoly d;
    for (std::size_t i = 1; i < poly.size(); ++i) d.push_back(R.scale(R.base().constant(static_cast<std::int64_t>(i)), poly[i]));
    return d;
}

Ring::Elem hensel_lift(const Ring& R, const RingPoly& poly, const Ring::Elem& seed) {
    const RingPoly dpoly = derivative(R, poly);
    Ring::Elem a = seed;
    Ring::Elem fa = evaluate(R, poly, a);
    if (R.is_zero(fa)) return a;
    const auto vf = R.valuation(fa);
    const auto vd = R.valuation(evaluate(R, dpoly, a));
    if (!vd || *vf <= 2 * *vd)
        fail(ErrorCode::HenselPreconditionFailed, "Hensel condition v(f(a)) > 2 v(f'(a)) fails at the seed");
    for (int iter = 0; iter < 256 && !R.is_zero(fa); ++iter) {
        const Ring::Elem next = R.sub(a, R.divide(fa, evaluate(R, dpoly, a)));
        if (next == a) break;
        a = next;
        fa = evaluate(R, poly, a);
    }
    if (!R.is_zero(fa)) fail(ErrorCode::PrecisionExhausted, "Newton iteration did not reach full precision");
    return a;
}

Valuation valuation(const Ring& R, const Ring::Elem& x) {
    auto v = R.valuation(x);
    if (!v) return {R.valuation_cap(), true};
    return {*v, false};
}

Valuation valuation(const BaseRing& R, const BaseElem& x) {
    auto v = R.valuation(x);
    if (!v) return {R.precision(), true};
    return {*v, false};
}

NormClass norm_and_class(const Tower& ext, const BaseElem& c) {
    if (ext.e() != 1) fail(ErrorCode::InvalidArgument, "norm classes are computed for unramified extensions only");
    auto v = ext.base().valuation(c);
    if (!v) fail(ErrorCode::ZeroInput, "norm class of zero");
    const int k = *v % ext.f();
    return {k == 0, k};
}

Ring::Elem reduce_to_chain_ring(const Tower& ext, const Ring::Elem& x) {
    return ext.ring()->reduce_into(*ext.residue_ring(), x);
}

}  // namespace skewlat
