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

#include "skewlat/petit.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "skewlat/error.hpp"

namespace skewlat {

PetitAlgebra::PetitAlgebra(SkewContextPtr ctx, SkewPoly f) : ctx_(std::move(ctx)), f_(std::move(f)) {
    if (f_.degree() < 1 || !is_monic(*ctx_, f_)) fail(ErrorCode::NonMonicModulus, "the modulus f must be monic of degree >= 1");
}

PetitAlgebra::Elem PetitAlgebra::zero() const { return Elem(static_cast<std::size_t>(m()), ring().zero()); }

PetitAlgebra::Elem PetitAlgebra::one() const { return monomial(ring().one(), 0); }

PetitAlgebra::Elem PetitAlgebra::monomial(const Ring::Elem& a, int j) const {
    if (j < 0 || j >= m()) return from_poly(skewlat::monomial(ctx(), a, j));
    Elem x = zero();
    x[static_cast<std::size_t>(j)] = a;
    return x;
}

PetitAlgebra::Elem PetitAlgebra::from_poly(const SkewPoly& g) const {
    const SkewPoly r = g.degree() < m() ? g : right_divide(ctx(), g, f_).remainder;
    Elem x = zero();
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) x[i] = r.coeffs[i];
    return x;
}

SkewPoly PetitAlgebra::to_poly(const Elem& x) const {
    if (x.size() != static_cast<std::size_t>(m())) fail(ErrorCode::ContextMismatch, "element has the wrong length");
    return make_poly(ctx(), x);
}

PetitAlgebra::Elem PetitAlgebra::add(const Elem& x, const Elem& y) const {
    Elem r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = ring().add(x[i], y[i]);
    return r;
}

PetitAlgebra::Elem PetitAlgebra::sub(const Elem& x, const Elem& y) const {
    Elem r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = ring().sub(x[i], y[i]);
    return r;
}

PetitAlgebra::Elem PetitAlgebra::scale(const BaseElem& s, const Elem& x) const {
    Elem r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = ring().scale(s, x[i]);
    return r;
}

PetitAlgebra::Elem PetitAlgebra::left_scale(const Ring::Elem& a, const Elem& x) const {
    Elem r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = ring().mul(a, x[i]);
    return r;
}

PetitAlgebra::Elem PetitAlgebra::mul(const Elem& x, const Elem& y) const {
    return from_poly(skew_mul(ctx(), to_poly(x), to_poly(y)));
}

PetitAlgebra::Elem PetitAlgebra::associator(const Elem& x, const Elem& y, const Elem& z) const {
    return sub(mul(mul(x, y), z), mul(x, mul(y, z)));
}

bool PetitAlgebra::is_zero(const Elem& x) const {
    return std::all_of(x.begin(), x.end(), [&](const Ring::Elem& a) { return ring().is_zero(a); });
}

BaseVec PetitAlgebra::to_base(const Elem& x) const {
    BaseVec v;
    v.reserve(base_dim());
    for (const auto& c : x) v.insert(v.end(), c.begin(), c.end());
    return v;
}

PetitAlgebra::Elem PetitAlgebra::from_base(const BaseVec& v) const {
    if (v.size() != base_dim()) fail(ErrorCode::ContextMismatch, "base vector has the wrong length");
    const std::size_t r = ring().rank();
    Elem x = zero();
    for (std::size_t j = 0; j < x.size(); ++j) x[j] = Ring::Elem(v.begin() + static_cast<std::ptrdiff_t>(j * r), v.begin() + static_cast<std::ptrdiff_t>((j + 1) * r));
    return x;
}

PetitAlgebra::Elem PetitAlgebra::base_basis(std::size_t k) const {
    BaseVec v(base_dim(), ring().base().zero());
    v.at(k) = ring().base().one();
    return from_base(v);
}

std::uint64_t PetitAlgebra::size(std::uint64_t bound) const {
    const auto digits = static_cast<std::uint64_t>(base_dim()) * static_cast<std::uint64_t>(ring().base().precision());
    const auto p = static_cast<std::uint64_t>(ring().base().p());
    std::uint64_t s = 1;
    for (std::uint64_t i = 0; i < digits; ++i) {
        if (s > bound / p) fail(ErrorCode::SearchTooLarge, "algebra has more than " + std::to_string(bound) + " elements");
        s *= p;
    }
    return s;
}

PetitAlgebra::Elem PetitAlgebra::element(std::uint64_t index) const {
    const BaseRing& B = ring().base();
    const std::size_t n = base_dim();
    const auto N = static_cast<std::size_t>(B.precision());
    std::vector<std::vector<std::int64_t>> digits(n, std::vector<std::int64_t>(N, 0));
    const auto p = static_cast<std::uint64_t>(B.p());
    for (std::size_t k = 0; index != 0 && k < n * N; ++k) {
        digits[k % n][k / n] = static_cast<std::int64_t>(index % p);
        index /= p;
    }
    BaseVec v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = B.from_digits(digits[i]);
    return from_base(v);
}

std::string PetitAlgebra::to_string(const Elem& x) const { return format_poly(ctx(), make_poly(ctx(), x)); }

PetitAlgebra make_petit(SkewContextPtr ctx, SkewPoly f) { return PetitAlgebra(std::move(ctx), std::move(f)); }

SkewPoly cyclic_modulus(const SkewContext& ctx, const Ring::Elem& c, int m) {
    if (m < 1) fail(ErrorCode::InvalidArgument, "degree must be >= 1");
    std::vector<Ring::Elem> coeffs(static_cast<std::size_t>(m) + 1, ctx.ring().zero());
    coeffs[0] = ctx.ring().neg(c);
    coeffs.back() = ctx.ring().one();
    return make_poly(ctx, std::move(coeffs));
}

PetitAlgebra make_cyclic(RingPtr S, const LinearMap& sigma, const Ring::Elem& c, int m) {
    auto ctx = std::make_shared<const SkewContext>(std::move(S), sigma);
    auto f = cyclic_modulus(*ctx, c, m);
    return PetitAlgebra(ctx, std::move(f));
}

std::optional<Ring::Elem> cyclic_constant(const PetitAlgebra& A) {
    const auto& c = A.f().coeffs;
    for (int i = 1; i < A.m(); ++i)
        if (!A.ring().is_zero(c[static_cast<std::size_t>(i)])) return std::nullopt;
    return A.ring().neg(c[0]);
}

bool is_associative(const PetitAlgebra& A) {
    // The associator is additive in each slot and base scalars are central, so
    // triples of base generators decide associativity exactly.
    const std::size_t n = A.base_dim();
    std::vector<PetitAlgebra::Elem> basis;
    for (std::size_t k = 0; k < n; ++k) basis.push_back(A.base_basis(k));
    for (const auto& x : basis)
        for (const auto& y : basis) {
            const auto xy = A.mul(x, y);
            for (const auto& z : basis)
                if (A.mul(xy, z) != A.mul(x, A.mul(y, z))) return false;
        }
    return true;
}

bool is_two_sided_modulus(const PetitAlgebra& A) {
    const SkewContext& ctx = A.ctx();
    const Ring& R = A.ring();
    auto reduces = [&](const SkewPoly& g) { return right_divide(ctx, skew_mul(ctx, A.f(), g), A.f()).remainder.is_zero(); };
    for (std::size_t i = 0; i < R.rank(); ++i)
        if (!reduces(constant_poly(ctx, R.basis(i)))) return false;
    return reduces(skewlat::monomial(ctx, R.one(), 1));
}

NucleusResult right_nucleus(const PetitAlgebra& A, std::uint64_t bound) {
    const std::uint64_t total = A.size(bound);
    std::vector<PetitAlgebra::Elem> basis;
    for (std::size_t k = 0; k < A.base_dim(); ++k) basis.push_back(A.base_basis(k));
    std::vector<PetitAlgebra::Elem> products;  // x o y over basis pairs
    for (const auto& x : basis)
        for (const auto& y : basis) products.push_back(A.mul(x, y));
    NucleusResult out;
    const SkewContext& ctx = A.ctx();
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        const auto g = A.element(idx);
        bool in = true;
        for (std::size_t a = 0; a < basis.size() && in; ++a)
            for (std::size_t b = 0; b < basis.size() && in; ++b)
                if (A.mul(products[a * basis.size() + b], g) != A.mul(basis[a], A.mul(basis[b], g))) in = false;
        if (in) out.elements.push_back(g);
        if (right_divide(ctx, skew_mul(ctx, A.f(), A.to_poly(g)), A.f()).remainder.is_zero()) out.by_divisibility.push_back(g);
    }
    out.consistent = out.elements == out.by_divisibility;
    return out;
}

std::vector<PetitAlgebra::Elem> center(const PetitAlgebra& A, std::uint64_t bound) {
    const std::uint64_t total = A.size(bound);
    std::vector<PetitAlgebra::Elem> basis;
    for (std::size_t k = 0; k < A.base_dim(); ++k) basis.push_back(A.base_basis(k));
    std::vector<PetitAlgebra::Elem> out;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        const auto z = A.element(idx);
        bool in = true;
        for (const auto& x : basis) {
            if (A.mul(x, z) != A.mul(z, x)) {
                in = false;
                break;
            }
        }
        for (std::size_t a = 0; a < basis.size() && in; ++a)
            for (std::size_t b = 0; b < basis.size() && in; ++b) {
                const auto& x = basis[a];
                const auto& y = basis[b];
                if (!A.is_zero(A.associator(z, x, y)) || !A.is_zero(A.associator(x, z, y)) || !A.is_zero(A.associator(x, y, z))) in = false;
            }
        if (in) out.push_back(z);
    }
    return out;
}

bool is_division_finite(const PetitAlgebra& A, std::uint64_t bound) {
    const std::uint64_t total = A.size(bound);
    if (total > bound / total) fail(ErrorCode::SearchTooLarge, "exhaustive zero-divisor search exceeds the configured bound");
    std::vector<PetitAlgebra::Elem> elems;
    for (std::uint64_t idx = 1; idx < total; ++idx) elems.push_back(A.element(idx));
    for (const auto& x : elems)
        for (const auto& y : elems)
            if (A.is_zero(A.mul(x, y))) return false;
    return true;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Yes: return "yes";
        case Verdict::No: return "no";
        case Verdict::Unknown: return "unknown";
    }
    return "unknown";
}

Classification classify_cyclic_algebra(const Tower& tower, const LinearMap& sigma, const Ring::Elem& c, int m) {
    const Ring& K = *tower.ring();
    if (K.is_zero(c)) fail(ErrorCode::ZeroInput, "c must be nonzero");
    const auto order = sigma.order(K, tower.degree());
    if (!order || *order != m) fail(ErrorCode::InvalidArgument, "sigma must have order m on the tower");
    Classification out;
    out.associative = sigma.apply(K, c) == c;
    const bool fixed_is_base = m == tower.degree();

    if (!out.associative) {
        bool prime = m >= 2;
        for (int d = 2; d * d <= m; ++d)
            if (m % d == 0) prime = false;
        if (prime) {
            out.division = Verdict::Yes;
            out.reason = "c lies outside the fixed field and m is prime";
            return out;
        }
        if (!fixed_is_base) {
            out.reason = "fixed field is larger than the base; independence of the powers of c is not tested";
            return out;
        }
        BaseMatrix rows;
        Ring::Elem power = K.one();
        for (int i = 0; i < m; ++i) {
            rows.push_back(power);
            power = K.mul(power, c);
        }
        if (rank(K.base(), rows, K.rank()) == static_cast<std::size_t>(m)) {
            out.division = Verdict::Yes;
            out.reason = "1, c, ..., c^(m-1) are linearly independent over the fixed field";
        } else {
            out.reason = "powers of c are not certified independent";
        }
        return out;
    }

    // c in Fix(sigma): decide whether K / Fix(sigma) is unramified by the order
    // of sigma on the residue field.
    int residue_order = 1;
    if (tower.f() > 1) {
        Ring::Elem img = sigma.apply(K, tower.x());
        while (residue_order < m) {
            const auto v = K.valuation(K.sub(img, tower.x()));
            if (!v || *v >= 1) break;
            img = sigma.apply(K, img);
            ++residue_order;
        }
    }
    if (residue_order == m) {
        const auto v = K.valuation(c);
        const int g = std::gcd(*v, m);
        out.division = g == 1 ? Verdict::Yes : Verdict::No;
        out.reason = "unramified: c has order " + std::to_string(m / g) + " modulo norms (v(c) = " + std::to_string(*v) + ")";
        return out;
    }
    out.reason = "K / Fix(sigma) is ramified; no criterion applies";
    return out;
}

ElemMatrix left_mul_matrix(const PetitAlgebra& A, const PetitAlgebra::Elem& x) {
    const auto m = static_cast<std::size_t>(A.m());
    ElemMatrix M(m, std::vector<Ring::Elem>(m));
    for (std::size_t j = 0; j < m; ++j) {
        const auto col = A.mul(A.monomial(A.ring().one(), static_cast<int>(j)), x);
        for (std::size_t i = 0; i < m; ++i) M[i][j] = col[i];
    }
    return M;
}

BaseMatrix base_left_mul_matrix(const PetitAlgebra& A, const PetitAlgebra::Elem& x) {
    const std::size_t n = A.base_dim();
    BaseMatrix M = zero_matrix(A.ring().base(), n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const auto col = A.to_base(A.mul(x, A.base_basis(k)));
        for (std::size_t i = 0; i < n; ++i) M[i][k] = col[i];
    }
    return M;
}

std::vector<Ring::Elem> elem_mat_vec(const Ring& R, const ElemMatrix& M, const std::vector<Ring::Elem>& v) {
    std::vector<Ring::Elem> out(M.size(), R.zero());
    for (std::size_t i = 0; i < M.size(); ++i) {
        if (M[i].size() != v.size()) fail(ErrorCode::InvalidArgument, "matrix-vector dimension mismatch");
        for (std::size_t j = 0; j < v.size(); ++j) out[i] = R.add(out[i], R.mul(v[j], M[i][j]));
    }
    return out;
}

namespace {

Ring::Elem det_rec(const Ring& R, const ElemMatrix& M, std::vector<std::size_t>& cols, std::size_t row) {
    if (row == M.size()) return R.one();
    Ring::Elem acc = R.zero();
    bool negative = false;
    for (std::size_t k = 0; k < cols.size(); ++k) {
        const std::size_t c = cols[k];
        if (!R.is_zero(M[row][c])) {
            cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
            const Ring::Elem term = R.mul(M[row][c], det_rec(R, M, cols, row + 1));
            cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), c);
            acc = negative ? R.sub(acc, term) : R.add(acc, term);
        }
        negative = !negative;
    }
    return acc;
}

}  // namespace

Ring::Elem determinant(const Ring& R, const ElemMatrix& M) {
    if (!R.is_commutative()) fail(ErrorCode::InvalidArgument, "determinant needs a commutative ring");
    if (M.size() > 10) fail(ErrorCode::SearchTooLarge, "cofactor expansion is limited to 10 x 10 matrices");
    for (const auto& row : M)
        if (row.size() != M.size()) fail(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
    std::vector<std::size_t> cols(M.size());
    std::iota(cols.begin(), cols.end(), 0);
    return det_rec(R, M, cols, 0);
}

Ring::Elem CyclicOrder::e() const { return ring->basis(coeff->rank()); }

Ring::Elem CyclicOrder::embed(const Ring::Elem& a) const {
    Ring::Elem out = ring->zero();
    std::copy(a.begin(), a.end(), out.begin());
    return out;
}

std::vector<Ring::Elem> CyclicOrder::components(const Ring::Elem& x) const {
    const std::size_t r = coeff->rank();
    std::vector<Ring::Elem> out;
    for (int k = 0; k < n; ++k)
        out.emplace_back(x.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(k) * r),
                         x.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(k + 1) * r));
    return out;
}

LinearMap CyclicOrder::extend(const LinearMap& sigma) const {
    const std::size_t r = coeff->rank();
    std::vector<Ring::Elem> images;
    for (int k = 0; k < n; ++k)
        for (std::size_t i = 0; i < r; ++i) {
            Ring::Elem out = ring->zero();
            const auto& img = sigma.images()[i];
            std::copy(img.begin(), img.end(), out.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(k) * r));
            images.push_back(std::move(out));
        }
    return LinearMap(std::move(images));
}

CyclicOrder make_cyclic_order(RingPtr OK, const LinearMap& rho, int n, const Ring::Elem& c) {
    const Ring& K = *OK;
    if (n < 1) fail(ErrorCode::InvalidArgument, "degree must be >= 1");
    if (!rho.power(K, n).is_identity(K)) fail(ErrorCode::InvalidArgument, "rho^n must be the identity");
    if (rho.apply(K, c) != c) fail(ErrorCode::InvalidArgument, "c must be fixed by rho");
    const std::size_t r = K.rank(), N = r * static_cast<std::size_t>(n);
    std::vector<LinearMap> rho_pow;
    for (int k = 0; k < n; ++k) rho_pow.push_back(rho.power(K, k));
    Ring::Table table(N, std::vector<Ring::Elem>(N));
    for (int k = 0; k < n; ++k)
        for (std::size_t i = 0; i < r; ++i)
            for (int l = 0; l < n; ++l)
                for (std::size_t j = 0; j < r; ++j) {
                    Ring::Elem coeff = K.mul(K.basis(i), rho_pow[static_cast<std::size_t>(k)].apply(K, K.basis(j)));
                    int s = k + l;
                    if (s >= n) {
                        s -= n;
                        coeff = K.mul(coeff, c);
                    }
                    Ring::Elem out(N, K.base().zero());
                    std::copy(coeff.begin(), coeff.end(), out.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(s) * r));
                    table[static_cast<std::size_t>(k) * r + i][static_cast<std::size_t>(l) * r + j] = std::move(out);
                }
    CyclicOrder D;
    D.coeff = OK;
    D.rho = rho;
    D.n = n;
    D.c = c;
    D.ring = std::make_shared<const Ring>(K.base(), std::move(table), RingInfo{"(O_K/O_F, rho, c)", 1, 1, {}});
    const Ring& R = *D.ring;
    for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = 0; b < N; ++b)
            for (std::size_t d = 0; d < N; ++d)
                if (R.mul(R.table()[a][b], R.basis(d)) != R.mul(R.basis(a), R.table()[b][d]))
                    fail(ErrorCode::InvalidArgument, "cyclic order is not associative");
    return D;
}

GeneralizedCyclicAlgebra make_generalized_cyclic(const CyclicOrder& D, const LinearMap& sigma, const Ring::Elem& d, int m) {
    const Ring& K = *D.coeff;
    if (sigma.compose(K, D.rho) != D.rho.compose(K, sigma)) fail(ErrorCode::InvalidArgument, "sigma and rho must commute");
    if (sigma.apply(K, D.c) != D.c) fail(ErrorCode::InvalidArgument, "sigma must fix c");
    if (sigma.order(K, 64) != m) fail(ErrorCode::InvalidArgument, "sigma must have order m");
    GeneralizedCyclicAlgebra G;
    G.D = D;
    G.sigma = sigma;
    G.d = d;
    G.m = m;
    auto ctx = std::make_shared<const SkewContext>(D.ring, D.extend(sigma));
    auto f = cyclic_modulus(*ctx, D.embed(d), m);
    G.algebra = std::make_shared<const PetitAlgebra>(ctx, std::move(f));
    return G;
}

ElemMatrix gamma_matrix(const CyclicOrder& D, const Ring::Elem& a) {
    const auto n = static_cast<std::size_t>(D.n);
    ElemMatrix M(n, std::vector<Ring::Elem>(n));
    Ring::Elem el = D.ring->one();
    for (std::size_t l = 0; l < n; ++l) {
        const auto col = D.components(D.ring->mul(el, a));
        for (std::size_t k = 0; k < n; ++k) M[k][l] = col[k];
        el = D.ring->mul(el, D.e());
    }
    return M;
}

ElemMatrix generalized_left_mul_matrix(const GeneralizedCyclicAlgebra& G, const PetitAlgebra::Elem& x) {
    const auto Mp = left_mul_matrix(*G.algebra, x);
    const auto m = static_cast<std::size_t>(G.m), n = static_cast<std::size_t>(G.D.n);
    ElemMatrix M(m * n, std::vector<Ring::Elem>(m * n));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            const auto block = gamma_matrix(G.D, Mp[i][j]);
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b) M[i * n + a][j * n + b] = block[a][b];
        }
    return M;
}

std::vector<Ring::Elem> generalized_vec(const GeneralizedCyclicAlgebra& G, const PetitAlgebra::Elem& x) {
    std::vector<Ring::Elem> out;
    for (const auto& xj : x)
        for (auto& comp : G.D.components(xj)) out.push_back(std::move(comp));
    return out;
}

}  // namespace skewlat
