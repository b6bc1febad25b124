// Copyright 2026 The tilc Authors
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

#ifndef TILC_ERROR_HPP
#define TILC_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tilc {

enum class ErrorKind {
  InvalidName,
  InvalidType,
  InvalidArgument,
  Overflow,
  NotElementManipulating,
  DuplicateStreamName,
  DuplicateIdentifier,
  UnknownIdentifier,
  InvalidInterface,
  InterfaceMismatch,
  InvalidPath,
  MissingDomainAssignment,
  UnknownDomain,
  NamedBeforeOrdered,
  DoubleAssignment,
  TypeMismatch,
  DomainMismatch,
  DirectionMismatch,
  AlreadyConnected,
  UnconnectedPort,
  LaneOutOfRange,
  InvalidLast,
  LastTooComplexForC,
  NonContiguousActiveLanes,
  TooManyElements,
  InvalidVhdl,
  Io,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a machine-checkable kind.
/// `details` lists the offending items when there is more than one (for
/// example every unconnected port of a structural implementation).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message,
        std::vector<std::string> details = {})
      : std::runtime_error(std::move(message)),
        kind_(kind),
        details_(std::move(details)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<std::string>& details() const noexcept { return details_; }

 private:
  ErrorKind kind_;
  std::vector<std::string> details_;
};

}  // namespace tilc

#endif  // TILC_ERROR_HPP
