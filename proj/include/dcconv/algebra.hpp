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

#ifndef DCCONV_ALGEBRA_HPP
#define DCCONV_ALGEBRA_HPP

#include <memory>
#include <vector>

#include "linalg.hpp"
#include "poly.hpp"

namespace dcconv {

class AlgebraContext;
using ContextPtr = std::shared_ptr<const AlgebraContext>;

/// Element of A = F[x]/(x^n - 1) as its length-n coefficient vector.
class AlgebraElement {
   public:
    AlgebraElement() noexcept : ctx_(nullptr) {}
    AlgebraElement(const AlgebraContext* ctx, std::vector<FieldElement> v);
    static AlgebraElement zero(const AlgebraContext* ctx);
    static AlgebraElement one(const AlgebraContext* ctx);
    /// Image of a polynomial of degree < n (reduced mod x^n - 1 otherwise).
    static AlgebraElement from_poly(const AlgebraContext* ctx, const Polynomial& f);

    const AlgebraContext* ctx() const noexcept { return ctx_; }
    const std::vector<FieldElement>& coeffs() const noexcept { return v_; }
    FieldElement operator[](int i) const noexcept { return v_[static_cast<size_t>(i)]; }

    bool is_zero() const noexcept;
    int weight() const noexcept { return dcconv::weight(v_); }
    Polynomial to_poly() const;

    AlgebraElement operator+(const AlgebraElement& rhs) const;
    AlgebraElement operator-(const AlgebraElement& rhs) const;
    AlgebraElement operator*(const AlgebraElement& rhs) const;  // mod x^n - 1
    AlgebraElement operator*(FieldElement s) const;
    AlgebraElement pow(long k) const;  // k >= 0

    friend bool operator==(const AlgebraElement& l, const AlgebraElement& r) noexcept { return l.v_ == r.v_; }
    friend bool operator!=(const AlgebraElement& l, const AlgebraElement& r) noexcept { return l.v_ != r.v_; }

   private:
    const AlgebraContext* ctx_;
    std::vector<FieldElement> v_;
};

/// The ordered primitive idempotents of A, index-aligned with the factors.
struct IdempotentSet {
    std::vector<AlgebraElement> eps;
    int size() const noexcept { return static_cast<int>(eps.size()); }
    const AlgebraElement& operator[](int i) const noexcept { return eps[static_cast<size_t>(i)]; }
};

/// F-algebra automorphism of A, determined by the image of x. Validated at
/// construction; caches the substitution matrix and its inverse.
class Automorphism {
   public:
    static std::shared_ptr<const Automorphism> from_image(ContextPtr ctx, const AlgebraElement& image);
    static std::shared_ptr<const Automorphism> identity(ContextPtr ctx);

    const AlgebraContext* ctx() const noexcept { return ctx_.get(); }
    const AlgebraElement& image() const noexcept { return image_; }
    bool is_identity() const noexcept;

    AlgebraElement apply(const AlgebraElement& f) const;
    AlgebraElement apply_inverse(const AlgebraElement& f) const;
    /// sigma^k for any integer k.
    AlgebraElement apply_power(const AlgebraElement& f, long k) const;

   private:
    Automorphism() = default;
    ContextPtr ctx_;
    AlgebraElement image_;
    FMatrix mat_;      // row i = v(image^i)
    FMatrix mat_inv_;
};

using AutomorphismPtr = std::shared_ptr<const Automorphism>;

/// The algebra A with the prime factorization of x^n - 1 over F, computed via
/// cyclotomic cosets of q mod n in the splitting field GF(q^t). Factors are
/// in canonical order (ascending smallest coset representative).
class AlgebraContext : public std::enable_shared_from_this<AlgebraContext> {
   public:
    static ContextPtr build(FieldPtr field, int n);

    const Field* field() const noexcept { return field_.get(); }
    FieldPtr field_ptr() const noexcept { return field_; }
    int n() const noexcept { return n_; }
    int r() const noexcept { return static_cast<int>(factors_.size()); }
    const std::vector<Polynomial>& factors() const noexcept { return factors_; }
    const std::vector<std::vector<int>>& cosets() const noexcept { return cosets_; }

    const Field* root_field() const noexcept { return root_field_.get(); }
    /// Canonical element of order n in the splitting field.
    FieldElement alpha_n() const noexcept { return alpha_n_; }
    /// x^n - 1 as a polynomial over F.
    Polynomial xn_minus_1() const;

   private:
    AlgebraContext() = default;
    FieldPtr field_;
    int n_ = 0;
    std::vector<Polynomial> factors_;
    std::vector<std::vector<int>> cosets_;
    FieldPtr root_field_;
    FieldElement alpha_n_;
};

/// CRT idempotents: eps_i = delta_ij mod pi_j.
IdempotentSet idempotents(const AlgebraContext& ctx);

/// The permutation i -> j(i) with sigma(eps_i) = eps_{j(i)}.
std::vector<int> idempotent_permutation(const Automorphism& sigma, const IdempotentSet& E);
/// Cycle decomposition, cycles ordered by smallest member, each cycle
/// starting at its smallest member.
std::vector<std::vector<int>> permutation_cycles(const std::vector<int>& perm);

}  // namespace dcconv

#endif
