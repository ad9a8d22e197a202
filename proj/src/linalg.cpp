/*
   Copyright 2026 dcconv contributors

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

#include "dcconv/linalg.hpp"

#include <utility>

namespace dcconv {

std::vector<FieldElement> FMatrix::row(int r) const {
    return std::vector<FieldElement>(d_.begin() + static_cast<long>(r) * cols_, d_.begin() + static_cast<long>(r + 1) * cols_);
}

void FMatrix::set_row(int r, const std::vector<FieldElement>& v) {
    for (int c = 0; c < cols_; ++c) (*this)(r, c) = v[static_cast<size_t>(c)];
}

FMatrix FMatrix::identity(const Field* field, int n) {
    FMatrix m(field, n, n);
    for (int i = 0; i < n; ++i) m(i, i) = field->one();
    return m;
}

FMatrix FMatrix::from_rows(const Field* field, const std::vector<std::vector<FieldElement>>& rows) {
    FMatrix m(field, static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (int r = 0; r < m.rows(); ++r) m.set_row(r, rows[static_cast<size_t>(r)]);
    return m;
}

FMatrix FMatrix::vstack(const FMatrix& top, const FMatrix& bottom) {
    FMatrix m(top.field(), top.rows() + bottom.rows(), top.cols());
    for (int r = 0; r < top.rows(); ++r)
        for (int c = 0; c < top.cols(); ++c) m(r, c) = top(r, c);
    for (int r = 0; r < bottom.rows(); ++r)
        for (int c = 0; c < bottom.cols(); ++c) m(top.rows() + r, c) = bottom(r, c);
    return m;
}

int rank(FMatrix m) {
    const Field* F = m.field();
    int rk = 0;
    for (int col = 0; col < m.cols() && rk < m.rows(); ++col) {
        int pivot = -1;
        for (int r = rk; r < m.rows(); ++r)
            if (!m(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        for (int c = 0; c < m.cols(); ++c) std::swap(m(rk, c), m(pivot, c));
        FieldElement inv = F->inv(m(rk, col));
        for (int c = col; c < m.cols(); ++c) m(rk, c) = F->mul(m(rk, c), inv);
        for (int r = rk + 1; r < m.rows(); ++r) {
            FieldElement f = m(r, col);
            if (f.is_zero()) continue;
            for (int c = col; c < m.cols(); ++c) m(r, c) = F->sub(m(r, c), F->mul(f, m(rk, c)));
        }
        ++rk;
    }
    return rk;
}

std::optional<FMatrix> inverse(const FMatrix& m) {
    const int n = m.rows();
    const Field* F = m.field();
    FMatrix a = m;
    FMatrix inv = FMatrix::identity(F, n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!a(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) return std::nullopt;
        for (int c = 0; c < n; ++c) {
            std::swap(a(col, c), a(pivot, c));
            std::swap(inv(col, c), inv(pivot, c));
        }
        FieldElement piv_inv = F->inv(a(col, col));
        for (int c = 0; c < n; ++c) {
            a(col, c) = F->mul(a(col, c), piv_inv);
            inv(col, c) = F->mul(inv(col, c), piv_inv);
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            FieldElement f = a(r, col);
            if (f.is_zero()) continue;
            for (int c = 0; c < n; ++c) {
                a(r, c) = F->sub(a(r, c), F->mul(f, a(col, c)));
                inv(r, c) = F->sub(inv(r, c), F->mul(f, inv(col, c)));
            }
        }
    }
    return inv;
}

FMatrix matmul(const FMatrix& a, const FMatrix& b) {
    const Field* F = a.field();
    FMatrix out(F, a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            FieldElement v = a(i, k);
            if (v.is_zero()) continue;
            for (int j = 0; j < b.cols(); ++j) out(i, j) = F->add(out(i, j), F->mul(v, b(k, j)));
        }
    return out;
}

std::vector<FieldElement> vecmat(const std::vector<FieldElement>& v, const FMatrix& m) {
    const Field* F = m.field();
    std::vector<FieldElement> out(static_cast<size_t>(m.cols()));
    for (int i = 0; i < m.rows(); ++i) {
        FieldElement s = v[static_cast<size_t>(i)];
        if (s.is_zero()) continue;
        for (int j = 0; j < m.cols(); ++j) out[static_cast<size_t>(j)] = F->add(out[static_cast<size_t>(j)], F->mul(s, m(i, j)));
    }
    return out;
}

int weight(const std::vector<FieldElement>& v) noexcept {
    int w = 0;
    for (auto c : v)
        if (!c.is_zero()) ++w;
    return w;
}

}  // namespace dcconv
