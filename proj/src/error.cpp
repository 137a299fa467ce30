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

#include "pmat/error.hpp"

namespace pmat {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kEmptyCircuit: return "EmptyCircuit";
    case ErrorKind::kNotAntichain: return "NotAntichain";
    case ErrorKind::kEliminationFailure: return "EliminationFailure";
    case ErrorKind::kUnknownElement: return "UnknownElement";
    case ErrorKind::kGroundTooLarge: return "GroundTooLarge";
    case ErrorKind::kAxiomViolation: return "AxiomViolation";
    case ErrorKind::kNonDisjoint: return "NonDisjoint";
    case ErrorKind::kCommutationFailure: return "CommutationFailure";
    case ErrorKind::kNotAFlat: return "NotAFlat";
    case ErrorKind::kNotStrong: return "NotStrong";
    case ErrorKind::kGroundMismatch: return "GroundMismatch";
    case ErrorKind::kNotAdmissible: return "NotAdmissible";
    case ErrorKind::kNonCommuting: return "NonCommuting";
    case ErrorKind::kWindowTooLarge: return "WindowTooLarge";
    case ErrorKind::kIncompatibleCocone: return "IncompatibleCocone";
    case ErrorKind::kNotEnumerable: return "NotEnumerable";
    case ErrorKind::kInvalidDescriptor: return "InvalidDescriptor";
    case ErrorKind::kSideConditionViolated: return "SideConditionViolated";
    case ErrorKind::kLabelAbsent: return "LabelAbsent";
    case ErrorKind::kParseError: return "ParseError";
  }
  return "Unknown";
}

bool is_validation_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kEmptyCircuit:
    case ErrorKind::kNotAntichain:
    case ErrorKind::kEliminationFailure:
    case ErrorKind::kUnknownElement:
    case ErrorKind::kGroundTooLarge:
    case ErrorKind::kAxiomViolation:
    case ErrorKind::kNonDisjoint:
    case ErrorKind::kGroundMismatch:
    case ErrorKind::kWindowTooLarge:
    case ErrorKind::kInvalidDescriptor:
    case ErrorKind::kParseError:
      return true;
    default:
      return false;
  }
}

}  // namespace pmat
