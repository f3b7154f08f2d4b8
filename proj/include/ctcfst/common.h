// ctcfst/common.h

// Copyright 2026  The ctcfst authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef CTCFST_COMMON_H_
#define CTCFST_COMMON_H_

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>

namespace ctcfst {

using StateId = int32_t;
using Label = int32_t;

constexpr StateId kNoStateId = -1;
constexpr Label kEpsilon = 0;
constexpr Label kBlank = 1;

// Thrown for malformed data (unparseable files, inconsistent graphs, ...).
// Callers that own a main() translate this into a nonzero exit code.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string &what) : std::runtime_error(what) {}
};

namespace internal {

template <typename Error>
class ErrorStream {
 public:
  [[noreturn]] ~ErrorStream() noexcept(false) { throw Error(stream_.str()); }
  template <typename T>
  ErrorStream &operator<<(const T &value) {
    stream_ << value;
    return *this;
  }

 private:
  std::ostringstream stream_;
};

}  // namespace internal

// Usage: CTCFST_ERR << "bad arc " << a << " in state " << s;
// Streams the message, then throws DataError from the destructor.
#define CTCFST_ERR                                       \
  ::ctcfst::internal::ErrorStream<::ctcfst::DataError>() \
      << __FILE__ << ":" << __LINE__ << " "

// Internal consistency checks; failures indicate a bug, not bad input.
#define CTCFST_ASSERT(cond)                                            \
  do {                                                                 \
    if (!(cond))                                                       \
      throw std::logic_error(std::string("assertion failed at ") +     \
                             __FILE__ + ":" + std::to_string(__LINE__) \
                             + ": " #cond);                            \
  } while (0)

}  // namespace ctcfst

#endif  // CTCFST_COMMON_H_
