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

#include "skewlat/skewpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "skewlat/error.hpp"

namespace skewlat {

SkewContext::SkewContext(RingPtr ring, LinearMap sigma, LinearMap delta)
    : ring_(std::move(ring)), sigma_(std::move(sigma)), delta_(std::move(delta)) {
    const Ring& R = *ring_;
    if (sigma_.images().size() != R.rank()) fail(ErrorCode::InvalidArgument, "sigma does not match the coefficient ring");
    if (!sigma_.is_ring_homomorphism(R)) fail(ErrorCode::InvalidArgument, "sigma is not a ring endomorphism");
    BaseMatrix m;
    for (const auto& img : sigma_.images()) m.push_back(img);
    if (skewlat::rank(R.base(), m, R.rank()) != R.rank()) fail(ErrorCode::InvalidArgument, "sigma is not injective");

    if (delta_.empty()) return;
    if (delta_.images().size() != R.rank()) fail(ErrorCode::InvalidDerivation, "delta does not match the coefficient ring");
    if (delta_ == LinearMap::zero(R)) {
        delta_ = LinearMap();
        return;
    }
    if (!R.is_finite()) fail(ErrorCode::InvalidDerivation, "nonzero delta is supported over finite coefficient rings only");
    if (!R.is_zero(delta_.images()[0])) fail(ErrorCode::InvalidDerivation, "delta(1) must vanish");
    // delta(ab) = sigma(a) delta(b) + delta(a) b is biadditive, so basis pairs suffice.
    for (std::size_t i = 0; i < R.rank(); ++i)
        for (std::size_t j = 0; j < R.rank(); ++j) {
            const Ring::Elem lhs = delta_.apply(R, R.table()[i][j]);
            const Ring::Elem rhs = R.add(R.mul(sigma_.images()[i], delta_.images()[j]), R.mul(delta_.images()[i], R.basis(j)));
            if (lhs != rhs) fail(ErrorCode::InvalidDerivation, "delta violates the sigma-derivation law");
        }
}

Ring::Elem SkewContext::apply_sigma(const Ring::Elem& a, int k) const {
    Ring::Elem r = a;
    for (int i = 0; i < k; ++i) r = sigma_.apply(*ring_, r);
    return r;
}

Ring::Elem SkewContext::apply_delta(const Ring::Elem& a) const {
    if (delta_.empty()) return ring_->zero();
    return delta_.apply(*ring_, a);
}

namespace {

void check_poly(const SkewContext& ctx, const SkewPoly& f) {
    for (const auto& c : f.coeffs)
        if (c.size() != ctx.ring().rank()) fail(ErrorCode::ContextMismatch, "polynomial coefficients do not belong to the context ring");
}

void trim(const Ring& R, std::vector<Ring::Elem>& c) {
    while (!c.empty() && R.is_zero(c.back())) c.pop_back();
}

}  // namespace

SkewPoly make_poly(const SkewContext& ctx, std::vector<Ring::Elem> coeffs) {
    SkewPoly f{std::move(coeffs)};
    check_poly(ctx, f);
    trim(ctx.ring(), f.coeffs);
    return f;
}

SkewPoly constant_poly(const SkewContext& ctx, const Ring::Elem& a) { return make_poly(ctx, {a}); }

SkewPoly monomial(const SkewContext& ctx, const Ring::Elem& a, int k) {
    std::vector<Ring::Elem> c(static_cast<std::size_t>(k) + 1, ctx.ring().zero());
    c.back() = a;
    return make_poly(ctx, std::move(c));
}

Ring::Elem coeff(const SkewContext& ctx, const SkewPoly& f, int i) {
    if (i < 0 || i > f.degree()) return ctx.ring().zero();
    return f.coeffs[static_cast<std::size_t>(i)];
}

SkewPoly add(const SkewContext& ctx, const SkewPoly& a, const SkewPoly& b) {
    check_poly(ctx, a);
    check_poly(ctx, b);
    const Ring& R = ctx.ring();
    std::vector<Ring::Elem> c(std::max(a.coeffs.size(), b.coeffs.size()), R.zero());
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i < a.coeffs.size()) c[i] = R.add(c[i], a.coeffs[i]);
        if (i < b.coeffs.size()) c[i] = R.add(c[i], b.coeffs[i]);
    }
    trim(R, c);
    return SkewPoly{std::move(c)};
}

SkewPoly sub(const SkewContext& ctx, const SkewPoly& a, const SkewPoly& b) {
    SkewPoly nb = b;
    for (auto& c : nb.coeffs) c = ctx.ring().neg(c);
    return add(ctx, a, nb);
}

SkewPoly left_scale(const SkewContext& ctx, const Ring::Elem& s, const SkewPoly& a) {
    std::vector<Ring::Elem> c;
    for (const auto& x : a.coeffs) c.push_back(ctx.ring().mul(s, x));
    return make_poly(ctx, std::move(c));
}

bool is_monic(const SkewContext& ctx, const SkewPoly& f) { return !f.is_zero() && f.lead() == ctx.ring().one(); }

SkewPoly skew_mul(const SkewContext& ctx, const SkewPoly& a, const SkewPoly& b) {
    check_poly(ctx, a);
    check_poly(ctx, b);
    if (a.is_zero() || b.is_zero()) return {};
    const Ring& R = ctx.ring();
    std::vector<Ring::Elem> out(a.coeffs.size() + b.coeffs.size() - 1, R.zero());
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
        if (R.is_zero(b.coeffs[j])) continue;
        // P = t^i b_j as a polynomial, advanced by one factor of t per step.
        std::vector<Ring::Elem> P{b.coeffs[j]};
        for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
            if (!R.is_zero(a.coeffs[i]))
                for (std::size_t k = 0; k < P.size(); ++k) out[k + j] = R.add(out[k + j], R.mul(a.coeffs[i], P[k]));
            if (i + 1 == a.coeffs.size()) break;
            std::vector<Ring::Elem> next(P.size() + 1, R.zero());
            for (std::size_t k = 0; k < P.size(); ++k) {
                next[k + 1] = ctx.apply_sigma(P[k]);
                if (ctx.has_delta()) next[k] = R.add(next[k], ctx.apply_delta(P[k]));
            }
            P = std::move(next);
        }
    }
    trim(R, out);
    return SkewPoly{std::move(out)};
}

Division right_divide(const SkewContext& ctx, const SkewPoly& g, const SkewPoly& f) {
    check_poly(ctx, g);
    check_poly(ctx, f);
    if (f.is_zero()) fail(ErrorCode::NonUnitLeadingCoefficient, "division by the zero polynomial");
    const Ring& R = ctx.ring();
    if (!R.is_unit(f.lead())) fail(ErrorCode::NonUnitLeadingCoefficient, "leading coefficient of the divisor is not a unit");
    const int m = f.degree();
    Division d{{}, g};
    std::vector<Ring::Elem> inv_leads;  // inverses of sigma^k(lead f)
    while (d.remainder.degree() >= m) {
        const int k = d.remainder.degree() - m;
        while (static_cast<int>(inv_leads.size()) <= k) inv_leads.push_back(R.inverse(ctx.apply_sigma(f.lead(), static_cast<int>(inv_leads.size()))));
        const Ring::Elem s = R.mul(d.remainder.lead(), inv_leads[static_cast<std::size_t>(k)]);
        const SkewPoly term = monomial(ctx, s, k);
        const int before = d.remainder.degree();
        d.remainder = sub(ctx, d.remainder, skew_mul(ctx, term, f));
        d.quotient = add(ctx, d.quotient, term);
        if (d.remainder.degree() >= before) fail(ErrorCode::NonUnitLeadingCoefficient, "leading term did not cancel");
    }
    return d;
}

bool is_right_divisor(const SkewContext& ctx, const SkewPoly& g, const SkewPoly& f) {
    return right_divide(ctx, f, g).remainder.is_zero();
}

std::vector<SkewPoly> enumerate_monic_right_divisors(const SkewContext& ctx, const SkewPoly& f, int k, std::uint64_t bound) {
    const Ring& R = ctx.ring();
    if (!R.is_finite()) fail(ErrorCode::InvalidArgument, "divisor enumeration needs a finite coefficient ring");
    if (k < 0 || k > f.degree()) fail(ErrorCode::InvalidArgument, "divisor degree out of range");
    const std::uint64_t q = R.size(bound);
    std::uint64_t count = 1;
    for (int i = 0; i < k; ++i) {
        if (count > bound / q) fail(ErrorCode::SearchTooLarge, "divisor search space exceeds the configured bound");
        count *= q;
    }
    std::vector<SkewPoly> out;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::vector<Ring::Elem> c(static_cast<std::size_t>(k) + 1);
        std::uint64_t rest = idx;
        for (int i = k - 1; i >= 0; --i) {
            c[static_cast<std::size_t>(i)] = R.element(rest % q);
            rest /= q;
        }
        c.back() = R.one();
        SkewPoly g{std::move(c)};
        if (is_right_divisor(ctx, g, f)) out.push_back(std::move(g));
    }
    return out;
}

std::string format_elem(const Ring& R, const Ring::Elem& a) {
    const auto ints = R.to_ints(a);
    if (ints.size() == 1) return std::to_string(ints[0]);
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < ints.size(); ++i) os << (i ? ", " : "") << ints[i];
    os << ')';
    return os.str();
}

namespace {

std::string strip(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::int64_t parse_int(const std::string& s) {
    const std::string t = strip(s);
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
        v = std::stoll(t, &used);
    } catch (const std::exception&) {
        fail(ErrorCode::InvalidArgument, "malformed integer '" + t + "'");
    }
    if (used != t.size()) fail(ErrorCode::InvalidArgument, "malformed integer '" + t + "'");
    return v;
}

}  // namespace

Ring::Elem parse_elem(const Ring& R, const std::string& text) {
    const std::string t = strip(text);
    if (t.empty()) fail(ErrorCode::InvalidArgument, "empty element");
    std::vector<std::int64_t> coords;
    if (t.front() == '(') {
        if (t.back() != ')') fail(ErrorCode::InvalidArgument, "unbalanced parentheses in '" + t + "'");
        std::stringstream ss(t.substr(1, t.size() - 2));
        std::string part;
        while (std::getline(ss, part, ',')) coords.push_back(parse_int(part));
    } else {
        coords.push_back(parse_int(t));
    }
    return R.from_ints(coords);
}

std::string format_poly(const SkewContext& ctx, const SkewPoly& f) {
    const Ring& R = ctx.ring();
    if (f.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
        if (R.is_zero(f.coeffs[i])) continue;
        std::string term;
        const bool unit_coeff = f.coeffs[i] == R.one();
        if (i == 0) term = format_elem(R, f.coeffs[i]);
        else {
            if (!unit_coeff) term = format_elem(R, f.coeffs[i]) + "*";
            term += "t";
            if (i > 1) term += "^" + std::to_string(i);
        }
        out += (out.empty() ? "" : " + ") + term;
    }
    return out;
}

SkewPoly parse_poly(const SkewContext& ctx, const std::string& text) {
    const Ring& R = ctx.ring();
    std::vector<std::string> terms;
    int depth = 0;
    std::string cur;
    for (char ch : text) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == '+' && depth == 0) {
            terms.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    terms.push_back(cur);
    std::vector<Ring::Elem> c;
    for (const auto& raw : terms) {
        const std::string term = strip(raw);
        if (term.empty()) fail(ErrorCode::InvalidArgument, "empty term in polynomial '" + text + "'");
        Ring::Elem a = R.one();
        std::size_t power = 0;
        const auto tpos = term.rfind('t');
        if (tpos == std::string::npos) {
            a = parse_elem(R, term);
        } else {
            std::string head = strip(term.substr(0, tpos));
            const std::string tail = strip(term.substr(tpos + 1));
            if (!head.empty()) {
                if (head.back() != '*') fail(ErrorCode::InvalidArgument, "expected '*' before t in '" + term + "'");
                a = parse_elem(R, head.substr(0, head.size() - 1));
            }
            power = 1;
            if (!tail.empty()) {
                if (tail.front() != '^') fail(ErrorCode::InvalidArgument, "expected '^' after t in '" + term + "'");
                const std::int64_t k = parse_int(tail.substr(1));
                if (k < 0) fail(ErrorCode::InvalidArgument, "negative exponent in '" + term + "'");
                power = static_cast<std::size_t>(k);
            }
        }
        if (c.size() <= power) c.resize(power + 1, R.zero());
        c[power] = R.add(c[power], a);
    }
    return make_poly(ctx, std::move(c));
}

}  // namespace skewlat
