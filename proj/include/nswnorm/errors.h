// Copyright 2026 The nswnorm Authors.
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

#ifndef NSWNORM_ERRORS_H_
#define NSWNORM_ERRORS_H_

#include <stdexcept>
#include <string>

namespace nswnorm {

// Base class of everything the library throws.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input is not well-formed UTF-8.
class Utf8Error : public Error {
 public:
  explicit Utf8Error(const std::string& what) : Error(what) {}
};

// A precondition on the arguments was violated (length mismatch,
// overlapping spans, empty sequence, ...).
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error(what) {}
};

class RangeError : public Error {
 public:
  explicit RangeError(const std::string& what) : Error(what) {}
};

// Malformed file contents (model, corpus, dictionary).
class FormatError : public Error {
 public:
  explicit FormatError(const std::string& what) : Error(what) {}
};

// Model was trained with a different feature template version.
class VersionMismatchError : public Error {
 public:
  explicit VersionMismatchError(const std::string& what) : Error(what) {}
};

class TrainingError : public Error {
 public:
  TrainingError(const std::string& what, int iteration)
      : Error(what), iteration_(iteration) {}
  int iteration() const { return iteration_; }

 private:
  int iteration_;
};

}  // namespace nswnorm

#endif  // NSWNORM_ERRORS_H_
