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
 * @file petit.hpp
 * @brief Petit algebras S_f = S[t; sigma, delta] / S[t; sigma, delta] f.
 *
 * Elements are coefficient vectors of length m = deg f over S; the product is
 * the remainder of the skew product under right division by f. With S a ring
 * of integers this is the natural order of the algebra over the fraction
 * field.
 *
 * Flattening: an element has base coordinates indexed j * rank(S) + i for the
 * i-th base coordinate of the coefficient of t^j. For the generalized cyclic
 * algebras S is itself the order (O_K / O_F, rho, c) with basis b_i e^k at
 * index k * rank(O_K) + i, so the base index is (j * n + k) * rank(O_K) + i.
 */

#ifndef SKEWLAT_PETIT_HPP
#define SKEWLAT_PETIT_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "skewlat/padic.hpp"
#include "skewlat/skewpoly.hpp"

namespace skewlat {

/// Matrix with entries in a Ring, row-major.
using ElemMatrix = std::vector<std::vector<Ring::Elem>>;

class PetitAlgebra {
public:
    using Elem = std::vector<Ring::Elem>;

    /// Throws NonMonicModulus unless f is monic of degree >= 1.
    PetitAlgebra(SkewContextPtr ctx, SkewPoly f);

    const SkewContext& ctx() const noexcept { return *ctx_; }
    const SkewContextPtr& ctx_ptr() const noexcept { return ctx_; }
    const Ring& ring() const noexcept { return ctx_->ring(); }
    const SkewPoly& f() const noexcept { return f_; }
    int m() const noexcept { return f_.degree(); }

    Elem zero() const;
    Elem one() const;
    /// a t^j
    Elem monomial(const Ring::Elem& a, int j) const;
    /// Reduces an arbitrary polynomial modulo f.
    Elem from_poly(const SkewPoly& g) const;
    SkewPoly to_poly(const Elem& x) const;

    Elem add(const Elem& x, const Elem& y) const;
    Elem sub(const Elem& x, const Elem& y) const;
    Elem scale(const BaseElem& s, const Elem& x) const;
    Elem left_scale(const Ring::Elem& a, const Elem& x) const;
    Elem mul(const Elem& x, const Elem& y) const;
    Elem associator(const Elem& x, const Elem& y, const Elem& z) const;
    bool is_zero(const Elem& x) const;

    std::size_t base_dim() const noexcept { return static_cast<std::size_t>(m()) * ring().rank(); }
    BaseVec to_base(const Elem& x) const;
    Elem from_base(const BaseVec& v) const;
    Elem base_basis(std::size_t k) const;

    /// Finite enumeration (see Ring::element for the digit order).
    std::uint64_t size(std::uint64_t bound = UINT64_MAX) const;
    Elem element(std::uint64_t index) const;

    std::string to_string(const Elem& x) const;

private:
    SkewContextPtr ctx_;
    SkewPoly f_;
};

using NaturalOrder = PetitAlgebra;

PetitAlgebra make_petit(SkewContextPtr ctx, SkewPoly f);

/// f = t^m - c.
SkewPoly cyclic_modulus(const SkewContext& ctx, const Ring::Elem& c, int m);
PetitAlgebra make_cyclic(RingPtr S, const LinearMap& sigma, const Ring::Elem& c, int m);

/// If f = t^m - c, returns c.
std::optional<Ring::Elem> cyclic_constant(const PetitAlgebra& A);

/// Associator test on all triples of additive base generators b_i t^j.
bool is_associative(const PetitAlgebra& A);
/// Whether R f is two-sided: f b mod_r f = 0 for base generators b of S and
/// f t mod_r f = 0.
bool is_two_sided_modulus(const PetitAlgebra& A);

struct NucleusResult {
    std::vector<PetitAlgebra::Elem> elements;
    /// The same set computed as {g : f g in R f}.
    std::vector<PetitAlgebra::Elem> by_divisibility;
    bool consistent = false;
};

NucleusResult right_nucleus(const PetitAlgebra& A, std::uint64_t bound = kDefaultSearchBound);
/// Elements that commute and associate with everything (finite only).
std::vector<PetitAlgebra::Elem> center(const PetitAlgebra& A, std::uint64_t bound = kDefaultSearchBound);

/// No nonzero x, y with x o y = 0; exhaustive over all pairs.
bool is_division_finite(const PetitAlgebra& A, std::uint64_t bound = kDefaultSearchBound);

enum class Verdict { Yes, No, Unknown };
std::string to_string(Verdict v);

struct Classification {
    bool associative = false;
    Verdict division = Verdict::Unknown;
    std::string reason;
};

/// (K / Fix(sigma), sigma, c) of degree m over a tower.
Classification classify_cyclic_algebra(const Tower& tower, const LinearMap& sigma, const Ring::Elem& c, int m);

/// Column j holds the coefficients of t^j o x, so M(x) vec(y) = vec(y o x)
/// with the entries of vec(y) acting from the left. For f = t^m - c this is
/// the sigma-twisted circulant [[x0, c sigma(x1)], [x1, sigma(x0)]] (m = 2).
ElemMatrix left_mul_matrix(const PetitAlgebra& A, const PetitAlgebra::Elem& x);

/// Matrix of y -> x o y on base coordinates: B(x) to_base(y) = to_base(x o y).
BaseMatrix base_left_mul_matrix(const PetitAlgebra& A, const PetitAlgebra::Elem& x);

/// sum_j v_j M[i][j] (left action of the vector entries).
std::vector<Ring::Elem> elem_mat_vec(const Ring& R, const ElemMatrix& M, const std::vector<Ring::Elem>& v);
/// Determinant over a commutative ring by cofactor expansion (n <= 10).
Ring::Elem determinant(const Ring& R, const ElemMatrix& M);

/// The order (O_K / O_F, rho, c) with basis b_i e^k, e^n = c, e a = rho(a) e.
struct CyclicOrder {
    RingPtr coeff;  // O_K
    LinearMap rho;
    int n = 0;
    Ring::Elem c;
    RingPtr ring;  // the order itself

    Ring::Elem e() const;
    /// O_K -> order, a -> a e^0.
    Ring::Elem embed(const Ring::Elem& a) const;
    /// O_K-coordinates (x_0, ..., x_{n-1}) of x = sum x_k e^k.
    std::vector<Ring::Elem> components(const Ring::Elem& x) const;
    /// Extends an automorphism of O_K coefficientwise on the basis e^k.
    LinearMap extend(const LinearMap& sigma) const;
};

using CyclicDivisionAlgebra = CyclicOrder;

/// Requires rho^n = id and rho(c) = c; associativity is verified on basis triples.
CyclicOrder make_cyclic_order(RingPtr OK, const LinearMap& rho, int n, const Ring::Elem& c);

struct GeneralizedCyclicAlgebra {
    CyclicOrder D;
    LinearMap sigma;  // on O_K
    Ring::Elem d;     // element of O_K
    int m = 0;
    std::shared_ptr<const PetitAlgebra> algebra;  // D[t; sigma] / (t^m - d)
};

/// Requires sigma rho = rho sigma and sigma(c) = c.
GeneralizedCyclicAlgebra make_generalized_cyclic(const CyclicOrder& D, const LinearMap& sigma, const Ring::Elem& d, int m);

/// gamma(a): n x n matrix over O_K of z -> z a on O_K-coordinates.
ElemMatrix gamma_matrix(const CyclicOrder& D, const Ring::Elem& a);

/// The (mn) x (mn) matrix over O_K obtained from left_mul_matrix by replacing
/// every entry a with gamma(a). Satisfies M(x) vec(y) = vec(y o x) on the
/// flattening index j * n + k.
ElemMatrix generalized_left_mul_matrix(const GeneralizedCyclicAlgebra& G, const PetitAlgebra::Elem& x);

/// O_K-coordinates of an element of the generalized algebra (length m n).
std::vector<Ring::Elem> generalized_vec(const GeneralizedCyclicAlgebra& G, const PetitAlgebra::Elem& x);

}  // namespace skewlat

#endif
