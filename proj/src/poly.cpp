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

#include "dcconv/poly.hpp"

#include <algorithm>
#include <charconv>

namespace dcconv {

Polynomial::Polynomial(const Field* field, std::vector<FieldElement> coeffs) : field_(field), coeffs_(std::move(coeffs)) {
    trim();
}

Polynomial Polynomial::constant(const Field* field, FieldElement c) {
    Polynomial r(field);
    if (!c.is_zero()) r.coeffs_.push_back(c);
    return r;
}

Polynomial Polynomial::monomial(const Field* field, FieldElement c, int d) {
    Polynomial r(field);
    if (!c.is_zero()) {
        r.coeffs_.assign(static_cast<size_t>(d) + 1, FieldElement());
        r.coeffs_.back() = c;
    }
    return r;
}

Polynomial Polynomial::from_ints(const Field* field, const std::vector<long>& coeffs) {
    std::vector<FieldElement> c;
    c.reserve(coeffs.size());
    for (long v : coeffs) c.push_back(field->from_int(v));
    return Polynomial(field, std::move(c));
}

bool Polynomial::is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == field_->one(); }

bool Polynomial::is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == field_->one(); }

FieldElement Polynomial::operator[](int i) const noexcept {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return FieldElement();
    return coeffs_[static_cast<size_t>(i)];
}

FieldElement Polynomial::leading() const {
    if (coeffs_.empty()) fail(Errc::RangeError, "leading coefficient of the zero polynomial");
    return coeffs_.back();
}

FieldElement Polynomial::operator()(FieldElement x) const {
    FieldElement acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = field_->add(field_->mul(acc, x), *it);
    return acc;
}

int Polynomial::weight() const noexcept {
    int w = 0;
    for (auto c : coeffs_)
        if (!c.is_zero()) ++w;
    return w;
}

void Polynomial::trim() noexcept {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& c : r.coeffs_) c = field_->neg(c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (field_ == nullptr) field_ = rhs.field_;
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] = field_->add(coeffs_[i], rhs.coeffs_[i]);
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) { return *this += -rhs; }

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
    if (field_ == nullptr) field_ = rhs.field_;
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<FieldElement> out(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out[i + j] = field_->add(out[i + j], field_->mul(coeffs_[i], rhs.coeffs_[j]));
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(FieldElement s) {
    if (s.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c = field_->mul(c, s);
    return *this;
}

DivModResult divmod(const Polynomial& f, const Polynomial& g) {
    if (g.is_zero()) fail(Errc::DivisionByZero, "polynomial division by zero");
    const Field* F = g.field() != nullptr ? g.field() : f.field();
    if (f.deg() < g.deg()) return {Polynomial(F), f};

    std::vector<FieldElement> rem(f.coeffs());
    std::vector<FieldElement> quot(static_cast<size_t>(f.deg() - g.deg()) + 1);
    FieldElement lg_inv = F->inv(g.leading());
    for (int d = f.deg(); d >= g.deg(); --d) {
        FieldElement c = rem[static_cast<size_t>(d)];
        if (c.is_zero()) continue;
        FieldElement qc = F->mul(c, lg_inv);
        quot[static_cast<size_t>(d - g.deg())] = qc;
        for (int i = 0; i <= g.deg(); ++i) {
            size_t idx = static_cast<size_t>(d - g.deg() + i);
            rem[idx] = F->sub(rem[idx], F->mul(qc, g[i]));
        }
    }
    return {Polynomial(F, std::move(quot)), Polynomial(F, std::move(rem))};
}

Polynomial operator/(const Polynomial& f, const Polynomial& g) { return divmod(f, g).quot; }
Polynomial operator%(const Polynomial& f, const Polynomial& g) { return divmod(f, g).rem; }

Polynomial gcd(Polynomial f, Polynomial g) {
    while (!g.is_zero()) {
        Polynomial r = f % g;
        f = std::move(g);
        g = std::move(r);
    }
    if (!f.is_zero()) f *= f.field()->inv(f.leading());
    return f;
}

ExtGcdResult ext_gcd(const Polynomial& f, const Polynomial& g) {
    const Field* F = f.field() != nullptr ? f.field() : g.field();
    Polynomial r0 = f, r1 = g;
    Polynomial s0 = Polynomial::constant(F, F->one()), s1(F);
    Polynomial t0(F), t1 = Polynomial::constant(F, F->one());
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Polynomial s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        Polynomial t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (!r0.is_zero()) {
        FieldElement c = F->inv(r0.leading());
        r0 *= c;
        s0 *= c;
        t0 *= c;
    }
    return {std::move(r0), std::move(s0), std::move(t0)};
}

std::string format_poly(const Polynomial& f, std::string_view var) {
    if (f.is_zero()) return "0";
    std::string out;
    const Field* F = f.field();
    for (int d = 0; d <= f.deg(); ++d) {
        FieldElement c = f[d];
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += F->format(c);
        if (d == 1)
            out += "*" + std::string(var);
        else if (d > 1)
            out += "*" + std::string(var) + "^" + std::to_string(d);
    }
    return out;
}

namespace {

std::string_view strip(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

}  // namespace

Polynomial parse_poly(const Field* field, std::string_view text, std::string_view var) {
    text = strip(text);
    if (text.empty()) fail(Errc::ParseError, "empty polynomial");
    if (text == "0") return Polynomial(field);

    Polynomial out(field);
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t next = text.find('+', pos);
        std::string_view term = strip(text.substr(pos, next == std::string_view::npos ? next : next - pos));
        pos = next == std::string_view::npos ? text.size() + 1 : next + 1;
        if (term.empty()) fail(Errc::ParseError, "empty term in polynomial '" + std::string(text) + "'");

        // term := ELEM | ELEM '*' XPART | XPART, with XPART := var | var^d
        std::string_view elem = term, xpart;
        size_t star = term.find('*');
        if (star != std::string_view::npos) {
            elem = strip(term.substr(0, star));
            xpart = strip(term.substr(star + 1));
        } else if (term.substr(0, var.size()) == var && (term.size() == var.size() || term[var.size()] == '^')) {
            elem = "1";
            xpart = term;
        }
        int d = 0;
        if (!xpart.empty()) {
            if (xpart.substr(0, var.size()) != var) fail(Errc::ParseError, "bad term '" + std::string(term) + "'");
            std::string_view rest = xpart.substr(var.size());
            if (rest.empty()) {
                d = 1;
            } else {
                if (rest[0] != '^') fail(Errc::ParseError, "bad term '" + std::string(term) + "'");
                rest.remove_prefix(1);
                auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), d);
                if (ec != std::errc() || ptr != rest.data() + rest.size() || d < 0)
                    fail(Errc::ParseError, "bad exponent in term '" + std::string(term) + "'");
            }
        }
        FieldElement c = field->parse(elem);
        out += Polynomial::monomial(field, c, d);
    }
    return out;
}

}  // namespace dcconv
