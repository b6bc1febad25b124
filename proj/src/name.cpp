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

#include "tilc/name.hpp"

#include <algorithm>

#include "tilc/error.hpp"

namespace tilc {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidName: return "InvalidName";
    case ErrorKind::InvalidType: return "InvalidType";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::NotElementManipulating: return "NotElementManipulating";
    case ErrorKind::DuplicateStreamName: return "DuplicateStreamName";
    case ErrorKind::DuplicateIdentifier: return "DuplicateIdentifier";
    case ErrorKind::UnknownIdentifier: return "UnknownIdentifier";
    case ErrorKind::InvalidInterface: return "InvalidInterface";
    case ErrorKind::InterfaceMismatch: return "InterfaceMismatch";
    case ErrorKind::InvalidPath: return "InvalidPath";
    case ErrorKind::MissingDomainAssignment: return "MissingDomainAssignment";
    case ErrorKind::UnknownDomain: return "UnknownDomain";
    case ErrorKind::NamedBeforeOrdered: return "NamedBeforeOrdered";
    case ErrorKind::DoubleAssignment: return "DoubleAssignment";
    case ErrorKind::TypeMismatch: return "TypeMismatch";
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::DirectionMismatch: return "DirectionMismatch";
    case ErrorKind::AlreadyConnected: return "AlreadyConnected";
    case ErrorKind::UnconnectedPort: return "UnconnectedPort";
    case ErrorKind::LaneOutOfRange: return "LaneOutOfRange";
    case ErrorKind::InvalidLast: return "InvalidLast";
    case ErrorKind::LastTooComplexForC: return "LastTooComplexForC";
    case ErrorKind::NonContiguousActiveLanes: return "NonContiguousActiveLanes";
    case ErrorKind::TooManyElements: return "TooManyElements";
    case ErrorKind::InvalidVhdl: return "InvalidVhdl";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

namespace {

bool is_ascii_alpha(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}
bool is_ascii_digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

std::optional<std::string> name_violation(std::string_view raw) {
  if (raw.empty()) return "name is empty";
  for (char c : raw) {
    if (!is_ascii_alpha(c) && !is_ascii_digit(c) && c != '_') {
      return "name contains a character other than letters, digits and "
             "underscores";
    }
  }
  if (raw.front() == '_') return "name starts with an underscore";
  if (raw.back() == '_') return "name ends with an underscore";
  if (is_ascii_digit(raw.front())) return "name starts with a digit";
  if (raw.find("__") != std::string_view::npos) {
    return "name contains consecutive underscores";
  }
  return std::nullopt;
}

std::string ascii_fold(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](char c) {
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
  });
  return out;
}

Name Name::make(std::string_view raw) {
  if (auto why = name_violation(raw)) {
    throw Error(ErrorKind::InvalidName,
                "invalid name \"" + std::string(raw) + "\": " + *why);
  }
  return Name(std::string(raw));
}

std::optional<Name> Name::try_make(std::string_view raw) noexcept {
  if (name_violation(raw)) return std::nullopt;
  return Name(std::string(raw));
}

std::string Name::folded() const { return ascii_fold(value_); }

bool Name::same_as(const Name& other) const noexcept {
  if (value_.size() != other.value_.size()) return false;
  for (std::size_t i = 0; i < value_.size(); ++i) {
    char a = value_[i], b = other.value_[i];
    if (a >= 'A' && a <= 'Z') a = static_cast<char>(a - 'A' + 'a');
    if (b >= 'A' && b <= 'Z') b = static_cast<char>(b - 'A' + 'a');
    if (a != b) return false;
  }
  return true;
}

PathName PathName::parse(std::string_view rendered) {
  std::vector<Name> segments;
  if (rendered.empty()) return PathName{};
  std::size_t start = 0;
  while (true) {
    std::size_t pos = rendered.find("__", start);
    segments.push_back(Name::make(rendered.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 2;
  }
  return PathName(std::move(segments));
}

std::string PathName::render() const {
  std::string out;
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    if (i) out += "__";
    out += segments_[i].str();
  }
  return out;
}

PathName PathName::join(const PathName& next) const {
  std::vector<Name> segments = segments_;
  segments.insert(segments.end(), next.segments_.begin(),
                  next.segments_.end());
  return PathName(std::move(segments));
}

PathName PathName::with(const Name& next) const {
  std::vector<Name> segments = segments_;
  segments.push_back(next);
  return PathName(std::move(segments));
}

}  // namespace tilc
