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

#include "skewlat/linalg.hpp"

#include <utility>

#include "skewlat/error.hpp"

namespace skewlat {

BaseMatrix zero_matrix(const BaseRing& R, std::size_t rows, std::size_t cols) {
    return BaseMatrix(rows, BaseVec(cols, R.zero()));
}

BaseMatrix identity_matrix(const BaseRing& R, std::size_t n) {
    auto m = zero_matrix(R, n, n);
    for (std::size_t i = 0; i < n; ++i) m[i][i] = R.one();
    return m;
}

BaseMatrix transpose(const BaseMatrix& a) {
    if (a.empty()) return {};
    BaseMatrix t(a[0].size(), BaseVec(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
    return t;
}

BaseVec mat_vec(const BaseRing& R, const BaseMatrix& a, const BaseVec& x) {
    BaseVec y(a.size(), R.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != x.size()) fail(ErrorCode::InvalidArgument, "mat_vec: dimension mismatch");
        for (std::size_t j = 0; j < x.size(); ++j) y[i] = R.add(y[i], R.mul(a[i][j], x[j]));
    }
    return y;
}

BaseMatrix mat_mul(const BaseRing& R, const BaseMatrix& a, const BaseMatrix& b) {
    if (a.empty()) return {};
    const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    auto c = zero_matrix(R, n, m);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != k) fail(ErrorCode::InvalidArgument, "mat_mul: dimension mismatch");
        for (std::size_t l = 0; l < k; ++l) {
            if (R.is_zero(a[i][l])) continue;
            for (std::size_t j = 0; j < m; ++j) c[i][j] = R.add(c[i][j], R.mul(a[i][l], b[l][j]));
        }
    }
    return c;
}

Echelon echelon(const BaseRing& R, BaseMatrix rows, std::size_t cols) {
    Echelon out;
    std::size_t top = 0;
    for (std::size_t c = 0; c < cols && top < rows.size(); ++c) {
        std::size_t best = rows.size();
        int best_val = 0;
        for (std::size_t r = top; r < rows.size(); ++r) {
            auto v = R.valuation(rows[r][c]);
            if (v && (best == rows.size() || *v < best_val)) {
                best = r;
                best_val = *v;
                if (best_val == 0) break;
            }
        }
        if (best == rows.size()) continue;
        std::swap(rows[top], rows[best]);

        auto& pivot_row = rows[top];
        const BaseElem unit_inv = R.inverse(R.shift_down(pivot_row[c], best_val));
        if (!R.is_one(unit_inv))
            for (auto& x : pivot_row) x = R.mul(x, unit_inv);

        for (std::size_t r = top + 1; r < rows.size(); ++r) {
            if (R.is_zero(rows[r][c])) continue;
            const BaseElem factor = R.shift_down(rows[r][c], best_val);
            for (std::size_t j = c; j < cols; ++j) rows[r][j] = R.sub(rows[r][j], R.mul(factor, pivot_row[j]));
        }
        out.pivot_cols.push_back(static_cast<int>(c));
        out.pivot_vals.push_back(best_val);
        ++top;
    }
    rows.resize(top);
    out.rows = std::move(rows);
    return out;
}

void reduce_above_pivots(const BaseRing& R, Echelon& e) {
    for (std::size_t i = 0; i < e.rows.size(); ++i) {
        const auto c = static_cast<std::size_t>(e.pivot_cols[i]);
        const int v = e.pivot_vals[i];
        for (std::size_t r = 0; r < i; ++r) {
            const BaseElem& x = e.rows[r][c];
            if (R.is_zero(x)) continue;
            // x = q p^v + rem with rem having only the low v digits.
            const BaseElem rem = R.truncate(x, v);
            const BaseElem q = R.shift_down(R.sub(x, rem), v);
            if (R.is_zero(q)) continue;
            for (std::size_t j = c; j < e.rows[r].size(); ++j)
                e.rows[r][j] = R.sub(e.rows[r][j], R.mul(q, e.rows[i][j]));
        }
    }
}

std::size_t rank(const BaseRing& R, const BaseMatrix& rows, std::size_t cols) { return echelon(R, rows, cols).rank(); }

std::optional<BaseVec> solve(const BaseRing& R, const BaseMatrix& a, const BaseVec& b) {
    const std::size_t n = a.size();
    // Augmented matrix; columns are eliminated with row operations, pivoting on
    // least valuation.
    BaseMatrix aug(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) fail(ErrorCode::InvalidArgument, "solve: matrix must be square");
        aug[i] = a[i];
        aug[i].push_back(b[i]);
    }
    std::vector<int> vals(n, 0);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t best = n;
        int best_val = 0;
        for (std::size_t r = c; r < n; ++r) {
            auto v = R.valuation(aug[r][c]);
            if (v && (best == n || *v < best_val)) {
                best = r;
                best_val = *v;
            }
        }
        if (best == n) return std::nullopt;
        std::swap(aug[c], aug[best]);
        const BaseElem unit_inv = R.inverse(R.shift_down(aug[c][c], best_val));
        for (auto& x : aug[c]) x = R.mul(x, unit_inv);
        vals[c] = best_val;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || R.is_zero(aug[r][c])) continue;
            auto v = R.valuation(aug[r][c]);
            if (*v < best_val) continue;  // handled when back-substituting
            const BaseElem factor = R.shift_down(aug[r][c], best_val);
            for (std::size_t j = c; j <= n; ++j) aug[r][j] = R.sub(aug[r][j], R.mul(factor, aug[c][j]));
        }
    }
    // Rows above a pivot whose entry had smaller valuation than the pivot were
    // skipped; finish with back substitution from the bottom.
    BaseVec x(n, R.zero());
    for (std::size_t i = n; i-- > 0;) {
        BaseElem rhs = aug[i][n];
        for (std::size_t j = i + 1; j < n; ++j) rhs = R.sub(rhs, R.mul(aug[i][j], x[j]));
        auto v = R.valuation(rhs);
        if (v && *v < vals[i]) return std::nullopt;
        x[i] = R.shift_down(rhs, vals[i]);
    }
    return x;
}

bool in_row_module(const BaseRing& R, const Echelon& e, BaseVec v) {
    std::size_t next = 0;
    const std::size_t cols = v.size();
    for (std::size_t c = 0; c < cols; ++c) {
        if (next < e.rows.size() && static_cast<std::size_t>(e.pivot_cols[next]) == c) {
            const int pv = e.pivot_vals[next];
            if (!R.is_zero(v[c])) {
                auto val = R.valuation(v[c]);
                if (*val < pv) return false;
                const BaseElem q = R.shift_down(v[c], pv);
                for (std::size_t j = c; j < cols; ++j) v[j] = R.sub(v[j], R.mul(q, e.rows[next][j]));
            }
            ++next;
        } else if (!R.is_zero(v[c])) {
            return false;
        }
    }
    return true;
}

}  // namespace skewlat
