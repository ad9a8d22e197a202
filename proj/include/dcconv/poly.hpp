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

#ifndef DCCONV_POLY_HPP
#define DCCONV_POLY_HPP

#include <string>
#include <string_view>
#include <vector>

#include "field.hpp"

namespace dcconv {

/// Univariate polynomial over a Field: coefficients ascending, trailing zeros
/// trimmed. deg() of the zero polynomial is -1 (the distinguished marker).
/// Values bind to a specific Field instance, which must outlive them.
class Polynomial {
   public:
    Polynomial() noexcept : field_(nullptr) {}
    explicit Polynomial(const Field* field) noexcept : field_(field) {}
    Polynomial(const Field* field, std::vector<FieldElement> coeffs);

    static Polynomial constant(const Field* field, FieldElement c);
    /// x^d with coefficient c.
    static Polynomial monomial(const Field* field, FieldElement c, int d);
    /// Coefficients as prime-subfield integers, ascending.
    static Polynomial from_ints(const Field* field, const std::vector<long>& coeffs);

    const Field* field() const noexcept { return field_; }
    int deg() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_one() const noexcept;
    bool is_monic() const noexcept;

    /// Coefficient of x^i (zero beyond the degree).
    FieldElement operator[](int i) const noexcept;
    const std::vector<FieldElement>& coeffs() const noexcept { return coeffs_; }
    FieldElement leading() const;

    FieldElement operator()(FieldElement x) const;  // evaluation (Horner)
    int weight() const noexcept;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial& operator*=(FieldElement s);

    friend Polynomial operator+(Polynomial l, const Polynomial& r) { return l += r; }
    friend Polynomial operator-(Polynomial l, const Polynomial& r) { return l -= r; }
    friend Polynomial operator*(Polynomial l, const Polynomial& r) { return l *= r; }
    friend Polynomial operator*(Polynomial l, FieldElement s) { return l *= s; }
    friend bool operator==(const Polynomial& l, const Polynomial& r) noexcept { return l.coeffs_ == r.coeffs_; }
    friend bool operator!=(const Polynomial& l, const Polynomial& r) noexcept { return !(l == r); }

   private:
    const Field* field_;
    std::vector<FieldElement> coeffs_;

    void trim() noexcept;
};

struct DivModResult {
    Polynomial quot;
    Polynomial rem;
};

/// f = quot*g + rem with deg rem < deg g; g must be nonzero.
DivModResult divmod(const Polynomial& f, const Polynomial& g);
Polynomial operator/(const Polynomial& f, const Polynomial& g);
Polynomial operator%(const Polynomial& f, const Polynomial& g);

/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(Polynomial f, Polynomial g);

struct ExtGcdResult {
    Polynomial d;  // monic gcd
    Polynomial s;
    Polynomial t;  // s*f + t*g = d
};
ExtGcdResult ext_gcd(const Polynomial& f, const Polynomial& g);

/// Textual polynomial format: terms `<elem>*<var>^<d>` joined by " + ",
/// ascending degree, zero terms omitted, degree 0/1 printed as `<elem>` /
/// `<elem>*<var>`. The zero polynomial prints as "0".
std::string format_poly(const Polynomial& f, std::string_view var = "x");
Polynomial parse_poly(const Field* field, std::string_view text, std::string_view var = "x");

}  // namespace dcconv

#endif
