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

#ifndef SKEWLAT_ERROR_HPP
#define SKEWLAT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace skewlat {

enum class ErrorCode {
    InvalidArgument,
    CompositeCharacteristic,
    UnsupportedCharacteristic,
    WildRamification,
    HenselPreconditionFailed,
    ZeroInput,
    ContextMismatch,
    NonUnitLeadingCoefficient,
    NonMonicModulus,
    NotARightDivisor,
    ModulusMismatch,
    InvalidDerivation,
    PrecisionExhausted,
    SearchTooLarge,
};

std::string_view error_name(ErrorCode code) noexcept;

/// Process exit code used by the command-line frontend for each error kind:
/// domain errors map into 10..19, precision loss to 20, search bounds to 30.
int exit_code(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace skewlat

#endif
