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

#include "dcconv/field.hpp"

#include <algorithm>
#include <charconv>

namespace dcconv {

const char* errc_name(Errc c) noexcept {
    switch (c) {
        case Errc::NotPrime: return "NotPrime";
        case Errc::NotPrimitiveModulus: return "NotPrimitiveModulus";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::CharDividesN: return "CharDividesN";
        case Errc::ContextMismatch: return "ContextMismatch";
        case Errc::NotAnAutomorphism: return "NotAnAutomorphism";
        case Errc::InternalInconsistency: return "InternalInconsistency";
        case Errc::AutomorphismMismatch: return "AutomorphismMismatch";
        case Errc::SpecInvalid: return "SpecInvalid";
        case Errc::RangeError: return "RangeError";
        case Errc::KTooLarge: return "KTooLarge";
        case Errc::NNotDividing: return "NNotDividing";
        case Errc::RankDeficient: return "RankDeficient";
        case Errc::StateSpaceTooLarge: return "StateSpaceTooLarge";
        case Errc::NotUniformRowDegrees: return "NotUniformRowDegrees";
        case Errc::NotRSConfig: return "NotRSConfig";
        case Errc::TooLarge: return "TooLarge";
        case Errc::LengthMismatch: return "LengthMismatch";
        case Errc::ParseError: return "ParseError";
    }
    return "UnknownError";
}

namespace {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Digit-vector helpers for the residue ring GF(p)[x]/(modulus), used only
// during table construction.
using Digits = std::vector<long>;

std::uint32_t pack(const Digits& d, long p) {
    std::uint32_t v = 0;
    for (auto it = d.rbegin(); it != d.rend(); ++it) v = v * static_cast<std::uint32_t>(p) + static_cast<std::uint32_t>(*it);
    return v;
}

// d <- d * x mod modulus
void mul_by_x(Digits& d, const std::vector<long>& modulus, long p) {
    const int e = static_cast<int>(d.size());
    long carry = d[e - 1];
    for (int i = e - 1; i > 0; --i) d[i] = d[i - 1];
    d[0] = 0;
    if (carry != 0) {
        // subtract carry * (modulus - x^e)
        for (int i = 0; i < e; ++i) {
            long t = (d[i] - carry * modulus[i]) % p;
            d[i] = t < 0 ? t + p : t;
        }
    }
}

}  // namespace

std::shared_ptr<const Field> Field::create(long p, int e, const std::vector<long>& modulus) {
    if (!is_prime(p)) fail(Errc::NotPrime, "p = " + std::to_string(p) + " is not prime");
    if (e < 1) fail(Errc::RangeError, "extension degree must be >= 1");

    long q = 1;
    for (int i = 0; i < e; ++i) {
        q *= p;
        if (q > kMaxQ) fail(Errc::TooLarge, "field size exceeds the q <= 2^20 table cap");
    }

    if (static_cast<int>(modulus.size()) != e + 1)
        fail(Errc::RangeError, "modulus must have degree e = " + std::to_string(e));
    std::vector<long> mod(modulus);
    for (auto& c : mod) {
        c %= p;
        if (c < 0) c += p;
    }
    if (mod[e] != 1) fail(Errc::RangeError, "modulus must be monic");

    auto field = std::shared_ptr<Field>(new Field());
    field->p_ = p;
    field->e_ = e;
    field->q_ = q;
    field->modulus_ = mod;
    field->antilog_.assign(static_cast<size_t>(q - 1), 0);
    field->logtab_.assign(static_cast<size_t>(q), FieldElement::kZeroLog);

    // Walk the powers of the modulus root; the modulus is primitive exactly
    // when this covers all q-1 nonzero residues before returning to 1.
    Digits cur(static_cast<size_t>(e), 0);
    cur[0] = 1;  // a^0 = 1
    for (long i = 0; i < q - 1; ++i) {
        std::uint32_t v = pack(cur, p);
        if (v == 0 || field->logtab_[v] != FieldElement::kZeroLog)
            fail(Errc::NotPrimitiveModulus, "modulus root does not generate the multiplicative group");
        field->antilog_[static_cast<size_t>(i)] = v;
        field->logtab_[v] = static_cast<std::int32_t>(i);
        mul_by_x(cur, mod, p);
    }
    if (pack(cur, p) != 1) fail(Errc::NotPrimitiveModulus, "modulus root has order != q-1");

    if (p > 2) {
        field->neg_tbl_.assign(static_cast<size_t>(q), 0);
        for (long v = 0; v < q; ++v) {
            std::uint32_t r = 0, pw = 1;
            long x = v;
            for (int i = 0; i < e; ++i) {
                long d = x % p;
                x /= p;
                r += static_cast<std::uint32_t>(((p - d) % p) * pw);
                pw *= static_cast<std::uint32_t>(p);
            }
            field->neg_tbl_[static_cast<size_t>(v)] = static_cast<std::uint16_t>(r);
        }
        if (q <= kAddTableCap) {
            field->add_tbl_.assign(static_cast<size_t>(q) * static_cast<size_t>(q), 0);
            for (long x = 0; x < q; ++x)
                for (long y = 0; y < q; ++y)
                    field->add_tbl_[static_cast<size_t>(x * q + y)] =
                        static_cast<std::uint16_t>(field->add_vec_digits(static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y)));
        }
    }
    return field;
}

std::shared_ptr<const Field> Field::create(long p, int e) { return create(p, e, default_modulus(p, e)); }

std::vector<long> Field::default_modulus(long p, int e) {
    if (!is_prime(p)) fail(Errc::NotPrime, "p = " + std::to_string(p) + " is not prime");
    if (p == 2) {
        // Primitive polynomials over GF(2), given by the exponents with
        // nonzero coefficient (Peterson's tables).
        static const std::vector<std::vector<int>> taps = {
            {1, 0},                {2, 1, 0},         {3, 1, 0},         {4, 1, 0},
            {5, 2, 0},             {6, 1, 0},         {7, 1, 0},         {8, 4, 3, 2, 0},
            {9, 4, 0},             {10, 3, 0},        {11, 2, 0},        {12, 6, 4, 1, 0},
            {13, 4, 3, 1, 0},      {14, 10, 6, 1, 0}, {15, 1, 0},        {16, 12, 3, 1, 0},
            {17, 3, 0},            {18, 7, 0},        {19, 5, 2, 1, 0},  {20, 3, 0},
        };
        if (e < 1 || e > static_cast<int>(taps.size())) fail(Errc::TooLarge, "no default modulus for GF(2^" + std::to_string(e) + ")");
        std::vector<long> mod(static_cast<size_t>(e) + 1, 0);
        for (int t : taps[static_cast<size_t>(e) - 1]) mod[static_cast<size_t>(t)] = 1;
        return mod;
    }
    if (e == 1) {
        // x - g for the smallest primitive root g mod p.
        for (long g = 1; g < p; ++g) {
            long x = 1;
            bool prim = true;
            for (long i = 1; i < p - 1; ++i) {
                x = (x * g) % p;
                if (x == 1) {
                    prim = false;
                    break;
                }
            }
            if (prim && (x * g) % p == 1) return {p - g, 1};
        }
        fail(Errc::InternalInconsistency, "no primitive root found mod " + std::to_string(p));
    }
    // Smallest (lexicographic in ascending coefficients) monic primitive
    // polynomial of degree e over GF(p); intended for small q only.
    long q = 1;
    for (int i = 0; i < e; ++i) {
        q *= p;
        if (q > kMaxQ) fail(Errc::TooLarge, "field size exceeds the q <= 2^20 table cap");
    }
    std::vector<long> mod(static_cast<size_t>(e) + 1, 0);
    mod[static_cast<size_t>(e)] = 1;
    for (long idx = 1; idx < q; ++idx) {
        long x = idx;
        for (int i = 0; i < e; ++i) {
            mod[static_cast<size_t>(i)] = x % p;
            x /= p;
        }
        if (mod[0] == 0) continue;
        try {
            (void)create(p, e, mod);
            return mod;
        } catch (const Error&) {
            continue;
        }
    }
    fail(Errc::InternalInconsistency, "no primitive modulus of degree " + std::to_string(e) + " over GF(" + std::to_string(p) + ")");
}

FieldElement Field::from_log(long k) const noexcept {
    long m = q_ - 1;
    k %= m;
    if (k < 0) k += m;
    return FieldElement(static_cast<std::int32_t>(k));
}

FieldElement Field::from_int(long c) const noexcept {
    c %= p_;
    if (c < 0) c += p_;
    return from_vec(static_cast<std::uint32_t>(c));
}

std::uint32_t Field::to_vec(FieldElement x) const noexcept {
    return x.is_zero() ? 0u : antilog_[static_cast<size_t>(x.log())];
}

FieldElement Field::from_vec(std::uint32_t v) const noexcept {
    return v == 0 ? FieldElement() : FieldElement(logtab_[v]);
}

std::uint32_t Field::add_vec_digits(std::uint32_t x, std::uint32_t y) const noexcept {
    std::uint32_t r = 0, pw = 1;
    for (int i = 0; i < e_; ++i) {
        std::uint32_t d = (x + y) % static_cast<std::uint32_t>(p_);
        x /= static_cast<std::uint32_t>(p_);
        y /= static_cast<std::uint32_t>(p_);
        r += d * pw;
        pw *= static_cast<std::uint32_t>(p_);
    }
    return r;
}

std::uint32_t Field::add_vec(std::uint32_t x, std::uint32_t y) const noexcept {
    if (p_ == 2) return x ^ y;
    if (!add_tbl_.empty()) return add_tbl_[static_cast<size_t>(x) * static_cast<size_t>(q_) + y];
    return add_vec_digits(x, y);
}

FieldElement Field::add(FieldElement x, FieldElement y) const noexcept {
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    return from_vec(add_vec(to_vec(x), to_vec(y)));
}

FieldElement Field::neg(FieldElement x) const noexcept {
    if (p_ == 2 || x.is_zero()) return x;
    return from_vec(neg_tbl_[to_vec(x)]);
}

FieldElement Field::mul(FieldElement x, FieldElement y) const noexcept {
    if (x.is_zero() || y.is_zero()) return FieldElement();
    long s = static_cast<long>(x.log()) + y.log();
    if (s >= q_ - 1) s -= q_ - 1;
    return FieldElement(static_cast<std::int32_t>(s));
}

FieldElement Field::inv(FieldElement x) const {
    if (x.is_zero()) fail(Errc::DivisionByZero, "inverse of zero");
    return from_log(-static_cast<long>(x.log()));
}

FieldElement Field::pow(FieldElement x, long n) const {
    if (x.is_zero()) {
        if (n > 0) return FieldElement();
        if (n == 0) return one();
        fail(Errc::DivisionByZero, "negative power of zero");
    }
    return from_log(static_cast<long>(x.log()) * n);
}

std::string Field::format(FieldElement x) const {
    if (x.is_zero()) return "0";
    if (x.log() == 0) return "1";
    return "a^" + std::to_string(x.log());
}

FieldElement Field::parse(std::string_view token) const {
    if (token == "0") return zero();
    if (token == "1") return one();
    if (token == "a") return gen();
    if (token.size() > 2 && token[0] == 'a' && token[1] == '^') {
        long k = 0;
        auto [ptr, ec] = std::from_chars(token.data() + 2, token.data() + token.size(), k);
        if (ec == std::errc() && ptr == token.data() + token.size() && k >= 0) return from_log(k);
    }
    fail(Errc::ParseError, "bad field element token '" + std::string(token) + "'");
}

}  // namespace dcconv
