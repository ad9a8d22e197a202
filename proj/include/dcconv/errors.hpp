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

#ifndef DCCONV_ERRORS_HPP
#define DCCONV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dcconv {

enum class Errc {
    NotPrime,
    NotPrimitiveModulus,
    DivisionByZero,
    CharDividesN,
    ContextMismatch,
    NotAnAutomorphism,
    InternalInconsistency,
    AutomorphismMismatch,
    SpecInvalid,
    RangeError,
    KTooLarge,
    NNotDividing,
    RankDeficient,
    StateSpaceTooLarge,
    NotUniformRowDegrees,
    NotRSConfig,
    TooLarge,
    LengthMismatch,
    ParseError,
};

const char* errc_name(Errc c) noexcept;

class Error : public std::runtime_error {
   public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

   private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace dcconv

#endif
