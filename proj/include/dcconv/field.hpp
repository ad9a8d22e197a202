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

#ifndef DCCONV_FIELD_HPP
#define DCCONV_FIELD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace dcconv {

/// Element of GF(p^e) in discrete-log form relative to the field generator `a`.
/// log() == kZeroLog marks the zero element; otherwise log() is in [0, q-2].
class FieldElement {
   public:
    static constexpr std::int32_t kZeroLog = -1;

    constexpr FieldElement() noexcept : log_(kZeroLog) {}
    constexpr explicit FieldElement(std::int32_t log) noexcept : log_(log) {}

    constexpr bool is_zero() const noexcept { return log_ == kZeroLog; }
    constexpr std::int32_t log() const noexcept { return log_; }

    friend constexpr bool operator==(FieldElement l, FieldElement r) noexcept { return l.log_ == r.log_; }
    friend constexpr bool operator!=(FieldElement l, FieldElement r) noexcept { return l.log_ != r.log_; }

   private:
    std::int32_t log_;
};

/// GF(p^e) with a fixed primitive modulus; all arithmetic runs on log/antilog
/// tables for the modulus root `a`. Immutable after construction.
///
/// Internally elements also have a "vec" representation: the coefficient
/// vector of the residue polynomial packed base p into one integer (for p = 2
/// this is the usual bit pattern). vec values lie in [0, q).
class Field {
   public:
    // modulus: coefficients ascending, length e+1, monic, entries in [0, p).
    static std::shared_ptr<const Field> create(long p, int e, const std::vector<long>& modulus);
    // Uses the shipped default modulus for (p, e).
    static std::shared_ptr<const Field> create(long p, int e);

    static std::vector<long> default_modulus(long p, int e);

    long p() const noexcept { return p_; }
    int e() const noexcept { return e_; }
    long q() const noexcept { return q_; }
    const std::vector<long>& modulus() const noexcept { return modulus_; }

    FieldElement zero() const noexcept { return FieldElement(); }
    FieldElement one() const noexcept { return FieldElement(0); }
    /// The modulus root `a`, a generator of the multiplicative group.
    FieldElement gen() const noexcept { return q_ == 2 ? one() : FieldElement(1); }

    /// a^k for any integer k (reduced mod q-1).
    FieldElement from_log(long k) const noexcept;
    /// Injection of the prime subfield: c mod p as a field element.
    FieldElement from_int(long c) const noexcept;

    FieldElement add(FieldElement x, FieldElement y) const noexcept;
    FieldElement sub(FieldElement x, FieldElement y) const noexcept { return add(x, neg(y)); }
    FieldElement neg(FieldElement x) const noexcept;
    FieldElement mul(FieldElement x, FieldElement y) const noexcept;
    FieldElement inv(FieldElement x) const;
    FieldElement div(FieldElement x, FieldElement y) const { return mul(x, inv(y)); }
    /// x^n; negative n requires x != 0; 0^0 = 1.
    FieldElement pow(FieldElement x, long n) const;

    std::uint32_t to_vec(FieldElement x) const noexcept;
    FieldElement from_vec(std::uint32_t v) const noexcept;
    /// Addition on vec representations (hot-path form; both args in [0, q)).
    std::uint32_t add_vec(std::uint32_t x, std::uint32_t y) const noexcept;

    std::string format(FieldElement x) const;
    FieldElement parse(std::string_view token) const;

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

   private:
    Field() = default;

    long p_ = 0;
    int e_ = 0;
    long q_ = 0;
    std::vector<long> modulus_;
    std::vector<std::uint32_t> antilog_;   // size q-1, antilog_[i] = vec of a^i
    std::vector<std::int32_t> logtab_;     // size q, vec -> log (zero -> kZeroLog)
    std::vector<std::uint16_t> add_tbl_;   // vec x vec -> vec, built when p > 2 and q <= kAddTableCap
    std::vector<std::uint16_t> neg_tbl_;   // vec -> vec of the additive inverse

    static constexpr long kMaxQ = 1L << 20;
    static constexpr long kAddTableCap = 1024;

    std::uint32_t add_vec_digits(std::uint32_t x, std::uint32_t y) const noexcept;
};

using FieldPtr = std::shared_ptr<const Field>;

}  // namespace dcconv

#endif
