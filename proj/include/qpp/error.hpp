// Copyright 2026 The qppsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qpp {

/// Every failure the library can report. The numeric values double as the
/// CLI's process exit codes, so keep them stable.
enum class ErrorCode : int {
    InvalidArgument = 2,
    KeyTooShort = 3,
    NotBasisState = 4,
    BadBlockCount = 5,
    BadMagic = 6,
    BadVersion = 7,
    TruncatedStream = 8,
    TrailingData = 9,
    NormViolation = 10,
    NotUnitary = 11,
    InputTooShort = 12,
    DiagonalizationFailure = 13,
    LengthTooSmall = 14,
    IoError = 15,
};

constexpr std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::KeyTooShort: return "KeyTooShort";
        case ErrorCode::NotBasisState: return "NotBasisState";
        case ErrorCode::BadBlockCount: return "BadBlockCount";
        case ErrorCode::BadMagic: return "BadMagic";
        case ErrorCode::BadVersion: return "BadVersion";
        case ErrorCode::TruncatedStream: return "TruncatedStream";
        case ErrorCode::TrailingData: return "TrailingData";
        case ErrorCode::NormViolation: return "NormViolation";
        case ErrorCode::NotUnitary: return "NotUnitary";
        case ErrorCode::InputTooShort: return "InputTooShort";
        case ErrorCode::DiagonalizationFailure: return "DiagonalizationFailure";
        case ErrorCode::LengthTooSmall: return "LengthTooSmall";
        case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace qpp
