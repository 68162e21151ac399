//
// Copyright 2026 The Blockmix Authors
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
//

#ifndef BLOCKMIX_ERROR_H_
#define BLOCKMIX_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace blockmix {

enum class ErrorCode {
  kInvalidArgument,
  kNonDivisible,
  kOutOfGrid,
  kShapeMismatch,
  kEmptyDonorSet,
  kDonorShortage,
  kSingletonLabel,
  kTooSmall,
  kPairingMismatch,
  kInstanceTooLarge,
  kEmptyDataset,
  kDecodeError,
  kUnsupportedFormat,
  kIoError,
  kParseError,
  kVersionMismatch,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures are reported as blockmix::Error. The message is
// prefixed with the code name, e.g. "NonDivisible: 100 does not divide 192".
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace blockmix

#endif  // BLOCKMIX_ERROR_H_
