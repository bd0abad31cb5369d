// Copyright 2026 The qgauss Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace qgauss {

/// Failure categories shared by every module. The C API maps these onto
/// its status codes one to one.
enum class ErrorCode {
  invalid_argument,  // malformed input (non-positive scale, NaN, ...)
  domain,            // special-function argument outside its domain
  regime,            // entropic index outside the range where a quantity exists
  validity,          // parameter hits a pole of the closed-form transforms
  convergence,       // numerical method did not reach its tolerance
  grid,              // bad sampling step or half-width index
  not_found,         // search exhausted its horizon
  io,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qgauss
