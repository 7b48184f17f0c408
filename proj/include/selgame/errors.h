// Copyright 2026 The selgame Authors.
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

#ifndef SELGAME_ERRORS_H_
#define SELGAME_ERRORS_H_

#include <stdexcept>
#include <string>

namespace selgame {

enum class ErrorCode {
  kValidation = 1,
  kArgument = 2,
  kUnsupported = 3,
  kResource = 4,
  kDegenerate = 5,
  kInconsistent = 6,
  kIntegration = 7,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void Fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace selgame

#endif  // SELGAME_ERRORS_H_
