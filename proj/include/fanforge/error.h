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

#ifndef FANFORGE_ERROR_H_
#define FANFORGE_ERROR_H_

#include <stdexcept>
#include <string>

namespace fanforge {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: indices out of range, inconsistent shapes, bad syntax.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its documented domain.
class UsageError : public Error {
 public:
  using Error::Error;
};

// A configured cap or search bound was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// A ternary semigroup failed the fan criterion.
class NotAFanError : public Error {
 public:
  using Error::Error;
};

// Two fans have non-isomorphic specialization forests.
class OrderMismatchError : public Error {
 public:
  OrderMismatchError(std::string code1, std::string code2)
      : Error("specialization forests differ: " + code1 + " vs " + code2),
        code1_(std::move(code1)),
        code2_(std::move(code2)) {}

  const std::string& code1() const { return code1_; }
  const std::string& code2() const { return code2_; }

 private:
  std::string code1_;
  std::string code2_;
};

}  // namespace fanforge

#endif  // FANFORGE_ERROR_H_
