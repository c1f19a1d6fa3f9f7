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

#include "skewlat/base.hpp"

#include <algorithm>
#include <sstream>

#include "skewlat/error.hpp"

namespace skewlat {

namespace {

using u128 = unsigned __int128;

// Inverse of a modulo m for gcd(a, m) = 1.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
    __int128 t = 0, new_t = 1;
    __int128 r = m, new_r = a % m;
    while (new_r != 0) {
        __int128 q = r / new_r;
        __int128 tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) fail(ErrorCode::InvalidArgument, "element is not invertible");
    if (t < 0) t += m;
    return static_cast<std::uint64_t>(t);
}

}  // namespace

std::string to_string(BaseKind kind) { return kind == BaseKind::PAdic ? "p-adic" : "power-series"; }

BaseKind base_kind_from_string(const std::string& s) {
    if (s == "p-adic" || s == "padic") return BaseKind::PAdic;
    if (s == "power-series" || s == "power_series" || s == "laurent") return BaseKind::PowerSeries;
    fail(ErrorCode::InvalidArgument, "unknown base kind '" + s + "'");
}

bool is_prime(std::int64_t n) noexcept {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

int BaseRing::max_padic_precision(std::int64_t p) {
    int n = 0;
    u128 v = 1;
    while (v * static_cast<u128>(p) <= (u128{1} << 62)) {
        v *= static_cast<u128>(p);
        ++n;
    }
    return n;
}

BaseRing::BaseRing(BaseKind kind, std::int64_t p, int precision) : kind_(kind), p_(p), precision_(precision) {
    if (!is_prime(p)) fail(ErrorCode::CompositeCharacteristic, "characteristic " + std::to_string(p) + " is not prime");
    if (p > (std::int64_t{1} << 20)) fail(ErrorCode::InvalidArgument, "prime too large");
    if (precision < 1) fail(ErrorCode::InvalidArgument, "precision must be at least 1");
    if (kind == BaseKind::PAdic) {
        if (precision > max_padic_precision(p))
            fail(ErrorCode::InvalidArgument, "precision " + std::to_string(precision) + " exceeds the 62-bit limit for p = " +
                                                 std::to_string(p) + " (max " + std::to_string(max_padic_precision(p)) + ")");
        modulus_ = 1;
        for (int i = 0; i < precision; ++i) modulus_ *= static_cast<std::uint64_t>(p);
    }
}

BaseElem BaseRing::make_padic(std::uint64_t v) const {
    BaseElem r;
    r.w_.assign(1, v % modulus_);
    return r;
}

BaseElem BaseRing::make_series(std::vector<std::uint64_t> digits) const {
    BaseElem r;
    digits.resize(static_cast<std::size_t>(precision_), 0);
    r.w_ = std::move(digits);
    return r;
}

BaseElem BaseRing::zero() const {
    if (kind_ == BaseKind::PAdic) return make_padic(0);
    return make_series({});
}

BaseElem BaseRing::one() const { return from_int(1); }

BaseElem BaseRing::from_int(std::int64_t n) const {
    if (kind_ == BaseKind::PAdic) {
        const auto m = static_cast<__int128>(modulus_);
        __int128 v = static_cast<__int128>(n) % m;
        if (v < 0) v += m;
        return make_padic(static_cast<std::uint64_t>(v));
    }
    std::uint64_t mag = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
    std::vector<std::uint64_t> d;
    while (mag != 0 && static_cast<int>(d.size()) < precision_) {
        d.push_back(mag % static_cast<std::uint64_t>(p_));
        mag /= static_cast<std::uint64_t>(p_);
    }
    BaseElem r = make_series(std::move(d));
    return n < 0 ? neg(r) : r;
}

BaseElem BaseRing::from_digits(std::span<const std::int64_t> digits) const {
    if (kind_ == BaseKind::PAdic) {
        u128 v = 0, scale = 1;
        for (std::size_t i = 0; i < digits.size() && static_cast<int>(i) < precision_; ++i) {
            std::int64_t d = digits[i] % p_;
            if (d < 0) d += p_;
            v = (v + static_cast<u128>(d) * scale) % modulus_;
            scale *= static_cast<u128>(p_);
        }
        return make_padic(static_cast<std::uint64_t>(v));
    }
    std::vector<std::uint64_t> d;
    for (std::size_t i = 0; i < digits.size() && static_cast<int>(i) < precision_; ++i) {
        std::int64_t x = digits[i] % p_;
        if (x < 0) x += p_;
        d.push_back(static_cast<std::uint64_t>(x));
    }
    return make_series(std::move(d));
}

BaseElem BaseRing::constant(std::int64_t k) const {
    if (kind_ == BaseKind::PAdic) return from_int(k);
    std::int64_t r = k % p_;
    if (r < 0) r += p_;
    return from_int(r);
}

BaseElem BaseRing::uniformizer() const {
    if (kind_ == BaseKind::PAdic) return from_int(p_);
    return make_series({0, 1});
}

std::vector<std::int64_t> BaseRing::digits(const BaseElem& a) const {
    std::vector<std::int64_t> out(static_cast<std::size_t>(precision_), 0);
    if (kind_ == BaseKind::PAdic) {
        std::uint64_t v = a.w_[0];
        for (auto& d : out) {
            d = static_cast<std::int64_t>(v % static_cast<std::uint64_t>(p_));
            v /= static_cast<std::uint64_t>(p_);
        }
    } else {
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<std::int64_t>(a.w_[i]);
    }
    return out;
}

std::int64_t BaseRing::residue(const BaseElem& a) const {
    if (kind_ == BaseKind::PAdic) return static_cast<std::int64_t>(a.w_[0] % static_cast<std::uint64_t>(p_));
    return static_cast<std::int64_t>(a.w_[0]);
}

BaseElem BaseRing::add(const BaseElem& a, const BaseElem& b) const {
    if (kind_ == BaseKind::PAdic) return make_padic(a.w_[0] + b.w_[0]);
    BaseElem r = a;
    const auto p = static_cast<std::uint64_t>(p_);
    for (std::size_t i = 0; i < r.w_.size(); ++i) {
        r.w_[i] += b.w_[i];
        if (r.w_[i] >= p) r.w_[i] -= p;
    }
    return r;
}

BaseElem BaseRing::neg(const BaseElem& a) const {
    if (kind_ == BaseKind::PAdic) return make_padic(modulus_ - a.w_[0]);
    BaseElem r = a;
    const auto p = static_cast<std::uint64_t>(p_);
    for (auto& d : r.w_) d = d == 0 ? 0 : p - d;
    return r;
}

BaseElem BaseRing::sub(const BaseElem& a, const BaseElem& b) const { return add(a, neg(b)); }

BaseElem BaseRing::mul(const BaseElem& a, const BaseElem& b) const {
    if (kind_ == BaseKind::PAdic)
        return make_padic(static_cast<std::uint64_t>(static_cast<u128>(a.w_[0]) * b.w_[0] % modulus_));
    const auto n = static_cast<std::size_t>(precision_);
    const auto p = static_cast<std::uint64_t>(p_);
    std::vector<std::uint64_t> acc(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (a.w_[i] == 0) continue;
        for (std::size_t j = 0; i + j < n; ++j) acc[i + j] = (acc[i + j] + a.w_[i] * b.w_[j]) % p;
    }
    return make_series(std::move(acc));
}

BaseElem BaseRing::mul_int(const BaseElem& a, std::int64_t k) const { return mul(a, constant(k)); }

bool BaseRing::is_zero(const BaseElem& a) const {
    return std::all_of(a.w_.begin(), a.w_.end(), [](std::uint64_t w) { return w == 0; });
}

bool BaseRing::is_one(const BaseElem& a) const { return a == one(); }

std::optional<int> BaseRing::valuation(const BaseElem& a) const {
    if (kind_ == BaseKind::PAdic) {
        std::uint64_t v = a.w_[0];
        if (v == 0) return std::nullopt;
        int k = 0;
        while (v % static_cast<std::uint64_t>(p_) == 0) {
            v /= static_cast<std::uint64_t>(p_);
            ++k;
        }
        return k;
    }
    for (std::size_t i = 0; i < a.w_.size(); ++i)
        if (a.w_[i] != 0) return static_cast<int>(i);
    return std::nullopt;
}

BaseElem BaseRing::inverse(const BaseElem& a) const {
    if (!is_unit(a)) fail(ErrorCode::InvalidArgument, "inverse of a non-unit " + to_string(a));
    if (kind_ == BaseKind::PAdic) return make_padic(inverse_mod(a.w_[0], modulus_));
    // Newton iteration x <- x (2 - a x), doubling the number of correct digits.
    BaseElem x = from_int(static_cast<std::int64_t>(inverse_mod(a.w_[0], static_cast<std::uint64_t>(p_))));
    const BaseElem two = constant(2);
    for (int correct = 1; correct < precision_; correct *= 2) x = mul(x, sub(two, mul(a, x)));
    return x;
}

BaseElem BaseRing::shift_up(const BaseElem& a, int k) const {
    if (k <= 0) return a;
    if (k >= precision_) return zero();
    if (kind_ == BaseKind::PAdic) {
        std::uint64_t s = 1;
        for (int i = 0; i < k; ++i) s *= static_cast<std::uint64_t>(p_);
        return make_padic(static_cast<std::uint64_t>(static_cast<u128>(a.w_[0]) * s % modulus_));
    }
    std::vector<std::uint64_t> d(static_cast<std::size_t>(k), 0);
    d.insert(d.end(), a.w_.begin(), a.w_.end() - k);
    return make_series(std::move(d));
}

BaseElem BaseRing::shift_down(const BaseElem& a, int k) const {
    if (k <= 0) return a;
    auto v = valuation(a);
    if (v && *v < k) fail(ErrorCode::InvalidArgument, "shift_down: valuation too small");
    if (!v) return zero();
    if (kind_ == BaseKind::PAdic) {
        std::uint64_t s = 1;
        for (int i = 0; i < k; ++i) s *= static_cast<std::uint64_t>(p_);
        return make_padic(a.w_[0] / s);
    }
    std::vector<std::uint64_t> d(a.w_.begin() + k, a.w_.end());
    return make_series(std::move(d));
}

BaseElem BaseRing::truncate(const BaseElem& a, int k) const {
    if (k >= precision_) return a;
    if (k <= 0) return zero();
    if (kind_ == BaseKind::PAdic) {
        std::uint64_t s = 1;
        for (int i = 0; i < k; ++i) s *= static_cast<std::uint64_t>(p_);
        return make_padic(a.w_[0] % s);
    }
    std::vector<std::uint64_t> d(a.w_.begin(), a.w_.begin() + k);
    return make_series(std::move(d));
}

BaseElem BaseRing::reduce_into(const BaseRing& target, const BaseElem& a) const {
    if (target.kind_ != kind_ || target.p_ != p_) fail(ErrorCode::ContextMismatch, "reduce_into: incompatible base rings");
    auto d = digits(a);
    return target.from_digits(d);
}

BaseElem BaseRing::lift_from(const BaseRing& source, const BaseElem& a) const {
    if (source.kind_ != kind_ || source.p_ != p_) fail(ErrorCode::ContextMismatch, "lift_from: incompatible base rings");
    auto d = source.digits(a);
    return from_digits(d);
}

std::uint64_t BaseRing::padic_value(const BaseElem& a) const {
    if (kind_ != BaseKind::PAdic) fail(ErrorCode::InvalidArgument, "padic_value on a power-series element");
    return a.w_[0];
}

std::int64_t BaseRing::to_int(const BaseElem& a) const {
    if (kind_ == BaseKind::PAdic) {
        std::uint64_t v = a.w_[0];
        if (v > modulus_ / 2) return -static_cast<std::int64_t>(modulus_ - v);
        return static_cast<std::int64_t>(v);
    }
    std::int64_t v = 0;
    for (std::size_t i = a.w_.size(); i-- > 0;) v = v * p_ + static_cast<std::int64_t>(a.w_[i]);
    return v;
}

std::string BaseRing::to_string(const BaseElem& a) const {
    if (kind_ == BaseKind::PAdic) return std::to_string(to_int(a));
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < a.w_.size(); ++i) {
        if (a.w_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << a.w_[i];
        if (i == 1) os << "*T";
        if (i > 1) os << "*T^" << i;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace skewlat
