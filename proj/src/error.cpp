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

#include "qgauss/error.hpp"

namespace qgauss {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid-argument";
    case ErrorCode::domain: return "domain-error";
    case ErrorCode::regime: return "regime-error";
    case ErrorCode::validity: return "validity-error";
    case ErrorCode::convergence: return "convergence-failure";
    case ErrorCode::grid: return "grid-error";
    case ErrorCode::not_found: return "not-found";
    case ErrorCode::io: return "io-error";
  }
  return "unknown";
}

}  // namespace qgauss
