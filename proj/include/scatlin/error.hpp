/*
   Copyright 2026 The scatlin Authors

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

#ifndef SCATLIN_ERROR_HPP
#define SCATLIN_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace scatlin {

enum class ErrorKind {
    NotPrime,
    TooLarge,
    NoIrreducibleFound,
    DivisionByZero,
    CtxMismatch,
    BadSubfield,
    BadDrop,
    ParityMismatch,
    InvalidParameter,
    HypothesisViolated,
    ClassificationGap,
    ZeroParameter,
    PreconditionFailed,
    BudgetExceeded,
    DegenerateInput,
    ZeroMap,
    ParseError,
};

constexpr std::string_view to_string(ErrorKind k) noexcept {
    switch (k) {
        case ErrorKind::NotPrime: return "NotPrime";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::NoIrreducibleFound: return "NoIrreducibleFound";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::CtxMismatch: return "CtxMismatch";
        case ErrorKind::BadSubfield: return "BadSubfield";
        case ErrorKind::BadDrop: return "BadDrop";
        case ErrorKind::ParityMismatch: return "ParityMismatch";
        case ErrorKind::InvalidParameter: return "InvalidParameter";
        case ErrorKind::HypothesisViolated: return "HypothesisViolated";
        case ErrorKind::ClassificationGap: return "ClassificationGap";
        case ErrorKind::ZeroParameter: return "ZeroParameter";
        case ErrorKind::PreconditionFailed: return "PreconditionFailed";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::DegenerateInput: return "DegenerateInput";
        case ErrorKind::ZeroMap: return "ZeroMap";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace scatlin

#endif  // SCATLIN_ERROR_HPP
