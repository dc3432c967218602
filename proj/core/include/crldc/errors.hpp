// Copyright 2026 The crldc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace crldc {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define CRLDC_DEFINE_ERROR(Name)            \
  class Name : public Error {               \
   public:                                  \
    explicit Name(const std::string& what)  \
        : Error(#Name ": " + what) {}       \
  }

CRLDC_DEFINE_ERROR(LengthMismatch);
CRLDC_DEFINE_ERROR(OutOfRange);
CRLDC_DEFINE_ERROR(IndexOutOfRange);
CRLDC_DEFINE_ERROR(MalformedInput);
CRLDC_DEFINE_ERROR(UnsupportedLambda);
CRLDC_DEFINE_ERROR(ParamMismatch);
CRLDC_DEFINE_ERROR(InvalidParam);
CRLDC_DEFINE_ERROR(InfeasibleTarget);
CRLDC_DEFINE_ERROR(TTooSmall);
CRLDC_DEFINE_ERROR(EmptyList);
CRLDC_DEFINE_ERROR(BudgetExceeded);
CRLDC_DEFINE_ERROR(ConfigInvalid);
CRLDC_DEFINE_ERROR(BoundViolated);
CRLDC_DEFINE_ERROR(IoError);

#undef CRLDC_DEFINE_ERROR

}  // namespace crldc
