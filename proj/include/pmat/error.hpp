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

#ifndef PMAT_ERROR_HPP_
#define PMAT_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace pmat {

enum class ErrorKind {
  kEmptyCircuit,
  kNotAntichain,
  kEliminationFailure,
  kUnknownElement,
  kGroundTooLarge,
  kAxiomViolation,
  kNonDisjoint,
  kCommutationFailure,
  kNotAFlat,
  kNotStrong,
  kGroundMismatch,
  kNotAdmissible,
  kNonCommuting,
  kWindowTooLarge,
  kIncompatibleCocone,
  kNotEnumerable,
  kInvalidDescriptor,
  kSideConditionViolated,
  kLabelAbsent,
  kParseError,
};

std::string_view to_string(ErrorKind kind);

// Validation errors describe malformed input; the rest are domain failures
// (a well-formed object that does not have the requested property).
bool is_validation_error(ErrorKind kind);

class MatroidError : public std::runtime_error {
 public:
  MatroidError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace pmat

#endif  // PMAT_ERROR_HPP_
