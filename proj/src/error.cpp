/*
   Copyright 2026 The rackrs Authors

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

#include "rackrs/error.hpp"

namespace rackrs {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NotPrime: return "NOT_PRIME";
        case ErrorCode::ReducibleModulus: return "REDUCIBLE_MODULUS";
        case ErrorCode::BadModulus: return "BAD_MODULUS";
        case ErrorCode::FieldTooLarge: return "FIELD_TOO_LARGE";
        case ErrorCode::DivideByZero: return "DIVIDE_BY_ZERO";
        case ErrorCode::LevelMismatch: return "LEVEL_MISMATCH";
        case ErrorCode::BadSubfield: return "BAD_SUBFIELD";
        case ErrorCode::NotABasis: return "NOT_A_BASIS";
        case ErrorCode::DivideByZeroPoly: return "DIVIDE_BY_ZERO_POLY";
        case ErrorCode::DuplicatePoint: return "DUPLICATE_POINT";
        case ErrorCode::Singular: return "SINGULAR";
        case ErrorCode::TooManyErasures: return "TOO_MANY_ERASURES";
        case ErrorCode::Inconsistent: return "INCONSISTENT";
        case ErrorCode::OrderNotDividing: return "ORDER_NOT_DIVIDING";
        case ErrorCode::WrongKernelSize: return "WRONG_KERNEL_SIZE";
        case ErrorCode::DuplicateConstants: return "DUPLICATE_CONSTANTS";
        case ErrorCode::CoeffSumNonzero: return "COEFF_SUM_NONZERO";
        case ErrorCode::ClosureFailure: return "CLOSURE_FAILURE";
        case ErrorCode::NotGoodOnSet: return "NOT_GOOD_ON_SET";
        case ErrorCode::InsufficientClasses: return "INSUFFICIENT_CLASSES";
        case ErrorCode::PreconditionFailed: return "PRECONDITION_FAILED";
        case ErrorCode::BasisDegenerate: return "BASIS_DEGENERATE";
        case ErrorCode::InsufficientHelpers: return "INSUFFICIENT_HELPERS";
        case ErrorCode::TooManyFailedRacks: return "TOO_MANY_FAILED_RACKS";
        case ErrorCode::InvalidFailure: return "INVALID_FAILURE";
        case ErrorCode::ConfigError: return "CONFIG_ERROR";
    }
    return "UNKNOWN";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

}  // namespace rackrs
