/* Copyright 2026 The skewlat Authors.

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

#include "skewlat/error.hpp"

namespace skewlat {

std::string_view error_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::CompositeCharacteristic: return "CompositeCharacteristic";
        case ErrorCode::UnsupportedCharacteristic: return "UnsupportedCharacteristic";
        case ErrorCode::WildRamification: return "WildRamification";
        case ErrorCode::HenselPreconditionFailed: return "HenselPreconditionFailed";
        case ErrorCode::ZeroInput: return "ZeroInput";
        case ErrorCode::ContextMismatch: return "ContextMismatch";
        case ErrorCode::NonUnitLeadingCoefficient: return "NonUnitLeadingCoefficient";
        case ErrorCode::NonMonicModulus: return "NonMonicModulus";
        case ErrorCode::NotARightDivisor: return "NotARightDivisor";
        case ErrorCode::ModulusMismatch: return "ModulusMismatch";
        case ErrorCode::InvalidDerivation: return "InvalidDerivation";
        case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
        case ErrorCode::SearchTooLarge: return "SearchTooLarge";
    }
    return "Unknown";
}

int exit_code(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidArgument: return 10;
        case ErrorCode::CompositeCharacteristic: return 11;
        case ErrorCode::UnsupportedCharacteristic: return 12;
        case ErrorCode::WildRamification: return 13;
        case ErrorCode::HenselPreconditionFailed: return 14;
        case ErrorCode::ZeroInput: return 15;
        case ErrorCode::ContextMismatch:
        case ErrorCode::ModulusMismatch: return 16;
        case ErrorCode::NonUnitLeadingCoefficient:
        case ErrorCode::NonMonicModulus: return 17;
        case ErrorCode::NotARightDivisor: return 18;
        case ErrorCode::InvalidDerivation: return 19;
        case ErrorCode::PrecisionExhausted: return 20;
        case ErrorCode::SearchTooLarge: return 30;
    }
    return 10;
}

}  // namespace skewlat
