/*
   Copyright 2026 The cartan-algebra authors

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

#ifndef CARTAN_ERROR_HPP
#define CARTAN_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace cartan {

enum class Errc {
    DivisionByZero,
    FieldMismatch,
    ZeroPolynomial,
    NotUnital,
    DimensionMismatch,
    NotLieClosed,
    NotIdeal,
    NotInRadical,
    NotTorus,
    NotCentralSimple,
    VerificationFailed,
    EnumerationTooLarge,
    NotFiniteField,
    InvalidOrder,
    NotSubgroup,
    InvalidN,
    TooLarge,
    ParseError,
    ValidationError,
    UnknownPreset,
};

constexpr std::string_view errc_name(Errc e) noexcept {
    switch (e) {
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::FieldMismatch: return "FieldMismatch";
        case Errc::ZeroPolynomial: return "ZeroPolynomial";
        case Errc::NotUnital: return "NotUnital";
        case Errc::DimensionMismatch: return "DimensionMismatch";
        case Errc::NotLieClosed: return "NotLieClosed";
        case Errc::NotIdeal: return "NotIdeal";
        case Errc::NotInRadical: return "NotInRadical";
        case Errc::NotTorus: return "NotTorus";
        case Errc::NotCentralSimple: return "NotCentralSimple";
        case Errc::VerificationFailed: return "VerificationFailed";
        case Errc::EnumerationTooLarge: return "EnumerationTooLarge";
        case Errc::NotFiniteField: return "NotFiniteField";
        case Errc::InvalidOrder: return "InvalidOrder";
        case Errc::NotSubgroup: return "NotSubgroup";
        case Errc::InvalidN: return "InvalidN";
        case Errc::TooLarge: return "TooLarge";
        case Errc::ParseError: return "ParseError";
        case Errc::ValidationError: return "ValidationError";
        case Errc::UnknownPreset: return "UnknownPreset";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

  private:
    Errc code_;
};

}  // namespace cartan

#endif
