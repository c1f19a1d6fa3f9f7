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

#include "skewlat/ring.hpp"

#include <algorithm>
#include <sstream>

#include "skewlat/error.hpp"

namespace skewlat {

Ring::Ring(BaseRing base, Table table, RingInfo info) : base_(std::move(base)), table_(std::move(table)), info_(std::move(info)) {
    const std::size_t n = table_.size();
    if (n == 0) fail(ErrorCode::InvalidArgument, "ring of rank 0");
    for (const auto& row : table_) {
        if (row.size() != n) fail(ErrorCode::InvalidArgument, "multiplication table is not square");
        for (const auto& e : row)
            if (e.size() != n) fail(ErrorCode::InvalidArgument, "structure constant vector has wrong length");
    }
    if (!info_.weights.empty() && info_.weights.size() != n)
        fail(ErrorCode::InvalidArgument, "valuation weights do not match the rank");
    for (std::size_t i = 0; i < n; ++i) {
        if (table_[0][i] != basis(i) || table_[i][0] != basis(i))
            fail(ErrorCode::InvalidArgument, "basis element 0 is not the identity");
    }
    for (std::size_t i = 0; i < n && commutative_; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (table_[i][j] != table_[j][i]) {
                commutative_ = false;
                break;
            }
}

Ring::Elem Ring::zero() const { return Elem(rank(), base_.zero()); }

Ring::Elem Ring::one() const { return basis(0); }

Ring::Elem Ring::basis(std::size_t i) const {
    Elem e = zero();
    e.at(i) = base_.one();
    return e;
}

Ring::Elem Ring::from_base(const BaseElem& a) const {
    Elem e = zero();
    e[0] = a;
    return e;
}

Ring::Elem Ring::from_int(std::int64_t n) const { return from_base(base_.constant(n)); }

Ring::Elem Ring::from_ints(const std::vector<std::int64_t>& coords) const {
    if (coords.size() > rank()) fail(ErrorCode::InvalidArgument, "too many coordinates for " + name());
    Elem e = zero();
    for (std::size_t i = 0; i < coords.size(); ++i) e[i] = base_.from_int(coords[i]);
    return e;
}

Ring::Elem Ring::add(const Elem& a, const Elem& b) const {
    Elem r(rank());
    for (std::size_t i = 0; i < rank(); ++i) r[i] = base_.add(a[i], b[i]);
    return r;
}

Ring::Elem Ring::sub(const Elem& a, const Elem& b) const {
    Elem r(rank());
    for (std::size_t i = 0; i < rank(); ++i) r[i] = base_.sub(a[i], b[i]);
    return r;
}

Ring::Elem Ring::neg(const Elem& a) const {
    Elem r(rank());
    for (std::size_t i = 0; i < rank(); ++i) r[i] = base_.neg(a[i]);
    return r;
}

Ring::Elem Ring::mul(const Elem& a, const Elem& b) const {
    const std::size_t n = rank();
    Elem r = zero();
    for (std::size_t i = 0; i < n; ++i) {
        if (base_.is_zero(a[i])) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (base_.is_zero(b[j])) continue;
            const BaseElem s = base_.mul(a[i], b[j]);
            const Elem& t = table_[i][j];
            for (std::size_t k = 0; k < n; ++k)
                if (!base_.is_zero(t[k])) r[k] = base_.add(r[k], base_.mul(s, t[k]));
        }
    }
    return r;
}

Ring::Elem Ring::scale(const BaseElem& s, const Elem& a) const {
    Elem r(rank());
    for (std::size_t i = 0; i < rank(); ++i) r[i] = base_.mul(s, a[i]);
    return r;
}

Ring::Elem Ring::pow(const Elem& a, std::uint64_t k) const {
    Elem result = one(), sq = a;
    while (k != 0) {
        if (k & 1U) result = mul(result, sq);
        k >>= 1U;
        if (k != 0) sq = mul(sq, sq);
    }
    return result;
}

bool Ring::is_zero(const Elem& a) const {
    return std::all_of(a.begin(), a.end(), [&](const BaseElem& x) { return base_.is_zero(x); });
}

BaseMatrix Ring::left_regular(const Elem& a) const {
    const std::size_t n = rank();
    BaseMatrix m = zero_matrix(base_, n, n);
    for (std::size_t j = 0; j < n; ++j) {
        const Elem col = mul(a, basis(j));
        for (std::size_t i = 0; i < n; ++i) m[i][j] = col[i];
    }
    return m;
}

BaseMatrix Ring::right_regular(const Elem& a) const {
    const std::size_t n = rank();
    BaseMatrix m = zero_matrix(base_, n, n);
    for (std::size_t j = 0; j < n; ++j) {
        const Elem col = mul(basis(j), a);
        for (std::size_t i = 0; i < n; ++i) m[i][j] = col[i];
    }
    return m;
}

bool Ring::is_unit(const Elem& a) const {
    const BaseRing fp = base_.with_precision(1);
    BaseMatrix m = left_regular(a);
    for (auto& row : m)
        for (auto& x : row) x = base_.reduce_into(fp, x);
    return skewlat::rank(fp, m, rank()) == rank();
}

Ring::Elem Ring::inverse(const Elem& a) const {
    if (!is_unit(a)) fail(ErrorCode::InvalidArgument, "inverse of a non-unit in " + name() + ": " + to_string(a));
    auto x = solve(base_, left_regular(a), one());
    if (!x) fail(ErrorCode::InvalidArgument, "inverse: singular left multiplication");
    return *x;
}

Ring::Elem Ring::divide(const Elem& a, const Elem& b) const {
    auto q = solve(base_, left_regular(b), a);
    if (!q) fail(ErrorCode::InvalidArgument, "divide: " + to_string(b) + " does not divide " + to_string(a));
    return *q;
}

std::optional<int> Ring::valuation(const Elem& a) const {
    if (!has_valuation()) fail(ErrorCode::InvalidArgument, name() + " carries no valuation");
    std::optional<int> best;
    for (std::size_t i = 0; i < rank(); ++i) {
        auto v = base_.valuation(a[i]);
        if (!v) continue;
        const int w = *v * info_.ramification + info_.weights[i];
        if (!best || w < *best) best = w;
    }
    return best;
}

std::uint64_t Ring::size(std::uint64_t bound) const {
    const auto digits = static_cast<std::uint64_t>(rank()) * static_cast<std::uint64_t>(base_.precision());
    std::uint64_t s = 1;
    const auto p = static_cast<std::uint64_t>(base_.p());
    for (std::uint64_t i = 0; i < digits; ++i) {
        if (s > bound / p) fail(ErrorCode::SearchTooLarge, name() + " has more than " + std::to_string(bound) + " elements");
        s *= p;
    }
    return s;
}

Ring::Elem Ring::element(std::uint64_t index) const {
    const std::size_t n = rank();
    const auto N = static_cast<std::size_t>(base_.precision());
    std::vector<std::vector<std::int64_t>> digits(n, std::vector<std::int64_t>(N, 0));
    const auto p = static_cast<std::uint64_t>(base_.p());
    for (std::size_t k = 0; index != 0 && k < n * N; ++k) {
        digits[k % n][k / n] = static_cast<std::int64_t>(index % p);
        index /= p;
    }
    Elem e(n);
    for (std::size_t i = 0; i < n; ++i) e[i] = base_.from_digits(digits[i]);
    return e;
}

std::uint64_t Ring::index_of(const Elem& a) const {
    const std::size_t n = rank();
    const auto N = static_cast<std::size_t>(base_.precision());
    std::vector<std::vector<std::int64_t>> digits(n);
    for (std::size_t i = 0; i < n; ++i) digits[i] = base_.digits(a[i]);
    std::uint64_t idx = 0;
    const auto p = static_cast<std::uint64_t>(base_.p());
    for (std::size_t k = n * N; k-- > 0;) idx = idx * p + static_cast<std::uint64_t>(digits[k % n][k / n]);
    return idx;
}

std::shared_ptr<const Ring> Ring::reduced(int precision) const {
    const BaseRing target = base_.with_precision(precision);
    Table t = table_;
    for (auto& row : t)
        for (auto& e : row)
            for (auto& x : e) x = base_.reduce_into(target, x);
    return std::make_shared<const Ring>(target, std::move(t), info_);
}

Ring::Elem Ring::reduce_into(const Ring& target, const Elem& a) const {
    if (target.rank() != rank()) fail(ErrorCode::ContextMismatch, "reduce_into: rank mismatch");
    Elem r(rank());
    for (std::size_t i = 0; i < rank(); ++i) r[i] = base_.reduce_into(target.base(), a[i]);
    return r;
}

Ring::Elem Ring::lift_from(const Ring& source, const Elem& a) const {
    if (source.rank() != rank()) fail(ErrorCode::ContextMismatch, "lift_from: rank mismatch");
    Elem r(rank());
    for (std::size_t i = 0; i < rank(); ++i) r[i] = base_.lift_from(source.base(), a[i]);
    return r;
}

std::vector<std::int64_t> Ring::to_ints(const Elem& a) const {
    std::vector<std::int64_t> out(rank());
    for (std::size_t i = 0; i < rank(); ++i) out[i] = base_.to_int(a[i]);
    return out;
}

std::string Ring::to_string(const Elem& a) const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < rank(); ++i) os << (i ? ", " : "") << base_.to_int(a[i]);
    os << ')';
    return os.str();
}

LinearMap LinearMap::identity(const Ring& R) {
    std::vector<Ring::Elem> im;
    for (std::size_t i = 0; i < R.rank(); ++i) im.push_back(R.basis(i));
    return LinearMap(std::move(im));
}

LinearMap LinearMap::zero(const Ring& R) { return LinearMap(std::vector<Ring::Elem>(R.rank(), R.zero())); }

Ring::Elem LinearMap::apply(const Ring& R, const Ring::Elem& x) const {
    if (images_.size() != R.rank()) fail(ErrorCode::ContextMismatch, "linear map does not match ring rank");
    const BaseRing& B = R.base();
    Ring::Elem r = R.zero();
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (B.is_zero(x[i])) continue;
        for (std::size_t k = 0; k < r.size(); ++k) r[k] = B.add(r[k], B.mul(x[i], images_[i][k]));
    }
    return r;
}

LinearMap LinearMap::compose(const Ring& R, const LinearMap& other) const {
    std::vector<Ring::Elem> im;
    im.reserve(other.images_.size());
    for (const auto& y : other.images_) im.push_back(apply(R, y));
    return LinearMap(std::move(im));
}

LinearMap LinearMap::power(const Ring& R, int k) const {
    if (k < 0) fail(ErrorCode::InvalidArgument, "negative power of a linear map");
    LinearMap result = identity(R), sq = *this;
    while (k != 0) {
        if (k & 1) result = result.compose(R, sq);
        k >>= 1;
        if (k != 0) sq = sq.compose(R, sq);
    }
    return result;
}

bool LinearMap::is_identity(const Ring& R) const { return *this == identity(R); }

bool LinearMap::is_ring_homomorphism(const Ring& R) const {
    if (images_.size() != R.rank() || images_[0] != R.one()) return false;
    for (std::size_t i = 0; i < R.rank(); ++i)
        for (std::size_t j = 0; j < R.rank(); ++j)
            if (apply(R, R.table()[i][j]) != R.mul(images_[i], images_[j])) return false;
    return true;
}

std::optional<int> LinearMap::order(const Ring& R, int max_order) const {
    LinearMap cur = *this;
    for (int k = 1; k <= max_order; ++k) {
        if (cur.is_identity(R)) return k;
        cur = compose(R, cur);
    }
    return std::nullopt;
}

LinearMap LinearMap::reduced_into(const Ring& source, const Ring& target) const {
    std::vector<Ring::Elem> im;
    im.reserve(images_.size());
    for (const auto& y : images_) im.push_back(source.reduce_into(target, y));
    return LinearMap(std::move(im));
}

RingPtr make_monogenic_ring(const BaseRing& base, const std::vector<BaseElem>& monic_poly, RingInfo info) {
    if (monic_poly.size() < 2 || !base.is_one(monic_poly.back()))
        fail(ErrorCode::InvalidArgument, "defining polynomial must be monic of degree >= 1");
    const std::size_t n = monic_poly.size() - 1;
    // powers[k] = x^k reduced modulo the polynomial, k < 2n - 1.
    std::vector<Ring::Elem> powers;
    Ring::Elem cur(n, base.zero());
    cur[0] = base.one();
    for (std::size_t k = 0; k + 1 < 2 * n; ++k) {
        powers.push_back(cur);
        // multiply by x: shift up, then replace x^n by -(g_0 + ... + g_{n-1} x^{n-1}).
        Ring::Elem next(n, base.zero());
        for (std::size_t i = 0; i + 1 < n; ++i) next[i + 1] = cur[i];
        const BaseElem top = cur[n - 1];
        if (!base.is_zero(top))
            for (std::size_t i = 0; i < n; ++i) next[i] = base.sub(next[i], base.mul(top, monic_poly[i]));
        cur = std::move(next);
    }
    Ring::Table table(n, std::vector<Ring::Elem>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) table[i][j] = powers[i + j];
    return std::make_shared<const Ring>(base, std::move(table), std::move(info));
}

}  // namespace skewlat
