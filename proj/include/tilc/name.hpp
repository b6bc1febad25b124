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

#ifndef TILC_NAME_HPP
#define TILC_NAME_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tilc {

/// An identifier: ASCII letters, digits and single underscores, not starting
/// with a digit or underscore and not ending with an underscore.
///
/// Equality is exact (casing is preserved for emission); use `same_as` or
/// `folded()` where uniqueness must be case-insensitive.
class Name {
 public:
  /// Throws Error(InvalidName) naming the rule that failed.
  static Name make(std::string_view raw);
  static std::optional<Name> try_make(std::string_view raw) noexcept;

  const std::string& str() const noexcept { return value_; }
  std::string folded() const;
  bool same_as(const Name& other) const noexcept;

  friend bool operator==(const Name&, const Name&) = default;
  friend auto operator<=>(const Name&, const Name&) = default;

 private:
  explicit Name(std::string value) : value_(std::move(value)) {}
  std::string value_;
};

/// Returns the reason `raw` is not a valid Name, or nullopt if it is.
std::optional<std::string> name_violation(std::string_view raw);

std::string ascii_fold(std::string_view s);

/// A hierarchical name. Renders with "__" between segments; the empty path
/// renders as "".
class PathName {
 public:
  PathName() = default;
  explicit PathName(std::vector<Name> segments)
      : segments_(std::move(segments)) {}
  PathName(std::initializer_list<Name> segments) : segments_(segments) {}

  /// Splits a rendered path ("a__b") back into segments.
  static PathName parse(std::string_view rendered);

  const std::vector<Name>& segments() const noexcept { return segments_; }
  bool empty() const noexcept { return segments_.empty(); }
  std::size_t size() const noexcept { return segments_.size(); }

  std::string render() const;
  std::string folded() const { return ascii_fold(render()); }

  PathName join(const PathName& next) const;
  PathName with(const Name& next) const;

  friend bool operator==(const PathName&, const PathName&) = default;
  friend auto operator<=>(const PathName&, const PathName&) = default;

 private:
  std::vector<Name> segments_;
};

}  // namespace tilc

template <>
struct std::hash<tilc::Name> {
  std::size_t operator()(const tilc::Name& n) const noexcept {
    return std::hash<std::string>{}(n.str());
  }
};

#endif  // TILC_NAME_HPP
