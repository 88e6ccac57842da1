// Copyright 2026 The Authors.
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

#ifndef MTW_ERRORS_HPP_
#define MTW_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace mtw {

enum class ErrorKind {
  kInvalidSpec,
  kNotDownwardClosed,
  kOutOfRange,
  kCapExceeded,
  kEmptyRestriction,
  kDependentSeed,
  kDimensionOutOfRange,
  kUnsupportedShape,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Enumeration limits. Every enumerating operation takes these explicitly so
// reports can state which bounds were in force.
struct Caps {
  int max_ground = 20;
  long long max_faces = 200000;
  int max_word_rank = 7;
};

}  // namespace mtw

#endif  // MTW_ERRORS_HPP_
