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


#ifndef TILC_FRONTEND_DIAGNOSTIC_HPP
#define TILC_FRONTEND_DIAGNOSTIC_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace tilc::frontend {

/// Half-open byte range into a source text.
struct Span {
  std::size_t start = 0;
  std::size_t end = 0;

  static Span join(Span a, Span b) {
    return Span{a.start < b.start ? a.start : b.start,
                a.end > b.end ? a.end : b.end};
  }
  friend bool operator==(const Span&, const Span&) = default;
};

enum class Severity { Error, Warning };

struct Label {
  Span span;
  std::string note;
  friend bool operator==(const Label&, const Label&) = default;
};

struct Diagnostic {
  Severity severity = Severity::Error;
  std::string code;  ///< e.g. "SyntaxError", or an ErrorKind name.
  std::string message;
  Span span;
  std::vector<Label> labels;
  std::vector<std::string> notes;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

bool has_errors(const std::vector<Diagnostic>& diagnostics);

struct Location {
  std::size_t line = 1;    ///< 1-based.
  std::size_t column = 1;  ///< 1-based, in bytes.
};

class SourceFile {
 public:
  SourceFile(std::string name, std::string text);

  const std::string& name() const noexcept { return name_; }
  const std::string& text() const noexcept { return text_; }
  /// Offsets past the end clamp to the end of the text.
  Location locate(std::size_t offset) const;
  /// Line `line` (1-based) without its terminator.
  std::string_view line(std::size_t line) const;
  std::size_t line_count() const noexcept { return line_starts_.size(); }

 private:
  std::string name_;
  std::string text_;
  std::vector<std::size_t> line_starts_;
};

/// Multi-line rendering with the offending source line underlined.
std::string render(const Diagnostic& d, const SourceFile& file,
                   bool color = false);
std::string render(const std::vector<Diagnostic>& ds, const SourceFile& file,
                   bool color = false);

}  // namespace tilc::frontend

#endif  // TILC_FRONTEND_DIAGNOSTIC_HPP
