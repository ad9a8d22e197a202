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

#ifndef DCCONV_LINALG_HPP
#define DCCONV_LINALG_HPP

#include <optional>
#include <vector>

#include "field.hpp"

namespace dcconv {

/// Dense matrix over a Field, row-major.
class FMatrix {
   public:
    FMatrix() noexcept : field_(nullptr), rows_(0), cols_(0) {}
    FMatrix(const Field* field, int rows, int cols)
        : field_(field), rows_(rows), cols_(cols), d_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {}

    const Field* field() const noexcept { return field_; }
    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }

    FieldElement& operator()(int r, int c) noexcept { return d_[static_cast<size_t>(r) * cols_ + c]; }
    FieldElement operator()(int r, int c) const noexcept { return d_[static_cast<size_t>(r) * cols_ + c]; }

    std::vector<FieldElement> row(int r) const;
    void set_row(int r, const std::vector<FieldElement>& v);

    static FMatrix identity(const Field* field, int n);
    static FMatrix from_rows(const Field* field, const std::vector<std::vector<FieldElement>>& rows);
    /// Vertical stack.
    static FMatrix vstack(const FMatrix& top, const FMatrix& bottom);

    friend bool operator==(const FMatrix& l, const FMatrix& r) noexcept {
        return l.rows_ == r.rows_ && l.cols_ == r.cols_ && l.d_ == r.d_;
    }

   private:
    const Field* field_;
    int rows_, cols_;
    std::vector<FieldElement> d_;
};

int rank(FMatrix m);
/// Inverse of a square matrix; nullopt if singular.
std::optional<FMatrix> inverse(const FMatrix& m);
FMatrix matmul(const FMatrix& a, const FMatrix& b);
/// Row vector times matrix.
std::vector<FieldElement> vecmat(const std::vector<FieldElement>& v, const FMatrix& m);

int weight(const std::vector<FieldElement>& v) noexcept;

}  // namespace dcconv

#endif
