// Copyright 2026 The mcg Authors
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

#ifndef MCG_ERROR_HPP
#define MCG_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace mcg {

enum class ErrorCode {
  kSelfLoop,
  kDuplicateEdge,
  kVertexOutOfRange,
  kBadParams,
  kBadEdgeId,
  kBadVertexSet,
  kParseError,
  kSizeLimitExceeded,
  kRetriesExhausted,
  kNotFoundWithinBound,
  kDisconnected,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kVertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::kBadParams: return "BadParams";
    case ErrorCode::kBadEdgeId: return "BadEdgeId";
    case ErrorCode::kBadVertexSet: return "BadVertexSet";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kSizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::kRetriesExhausted: return "RetriesExhausted";
    case ErrorCode::kNotFoundWithinBound: return "NotFoundWithinBound";
    case ErrorCode::kDisconnected: return "Disconnected";
  }
  return "Unknown";
}

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mcg

#endif  // MCG_ERROR_HPP
