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


#include "tilc/frontend/diagnostic.hpp"

#include <algorithm>

namespace tilc::frontend {

bool has_errors(const std::vector<Diagnostic>& diagnostics) {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) {
                       return d.severity == Severity::Error;
                     });
}

SourceFile::SourceFile(std::string name, std::string text)
    : name_(std::move(name)), text_(std::move(text)) {
  line_starts_.push_back(0);
  for (std::size_t i = 0; i < text_.size(); ++i) {
    if (text_[i] == '\n') line_starts_.push_back(i + 1);
  }
}

Location SourceFile::locate(std::size_t offset) const {
  offset = std::min(offset, text_.size());
  auto it = std::upper_bound(line_starts_.begin(), line_starts_.end(), offset);
  std::size_t line = static_cast<std::size_t>(it - line_starts_.begin());
  return Location{line, offset - line_starts_[line - 1] + 1};
}

std::string_view SourceFile::line(std::size_t line) const {
  if (line == 0 || line > line_starts_.size()) return {};
  std::size_t start = line_starts_[line - 1];
  std::size_t end =
      line < line_starts_.size() ? line_starts_[line] - 1 : text_.size();
  std::string_view out(text_.data() + start, end - start);
  if (!out.empty() && out.back() == '\r') out.remove_suffix(1);
  return out;
}

namespace {

constexpr std::string_view kRed = "\x1b[1;31m";
constexpr std::string_view kYellow = "\x1b[1;33m";
constexpr std::string_view kBlue = "\x1b[1;34m";
constexpr std::string_view kBold = "\x1b[1m";
constexpr std::string_view kReset = "\x1b[0m";

struct Painter {
  bool on;
  std::string operator()(std::string_view style, std::string_view text) const {
    if (!on) return std::string(text);
    return std::string(style) + std::string(text) + std::string(kReset);
  }
};

void underline(std::string& out, const SourceFile& file, Span span,
               std::string_view note, std::string_view style,
               const Painter& paint, std::size_t gutter) {
  Location from = file.locate(span.start);
  Location to = file.locate(span.end);
  std::string_view text = file.line(from.line);
  std::size_t width = 1;
  if (to.line == from.line && to.column > from.column) {
    width = to.column - from.column;
  } else if (to.line != from.line && text.size() + 1 > from.column) {
    width = text.size() + 1 - from.column;
  }
  std::string number = std::to_string(from.line);
  std::string pad(gutter, ' ');
  out += paint(kBlue, std::string(gutter - number.size(), ' ') + number + " |");
  out += ' ';
  out += text;
  out += '\n';
  out += paint(kBlue, pad + " |");
  out += ' ';
  out += std::string(from.column - 1, ' ');
  std::string marks(width, '^');
  if (!note.empty()) marks += " " + std::string(note);
  out += paint(style, marks);
  out += '\n';
}

}  // namespace

std::string render(const Diagnostic& d, const SourceFile& file, bool color) {
  Painter paint{color};
  bool error = d.severity == Severity::Error;
  std::string_view style = error ? kRed : kYellow;
  std::string out = paint(style, error ? "error" : "warning");
  if (!d.code.empty()) out += paint(style, "[" + d.code + "]");
  out += paint(kBold, ": " + d.message);
  out += '\n';

  std::size_t widest = file.locate(d.span.start).line;
  for (const auto& l : d.labels) {
    widest = std::max(widest, file.locate(l.span.start).line);
  }
  std::size_t gutter = std::to_string(widest).size();
  Location at = file.locate(d.span.start);
  out += paint(kBlue, std::string(gutter, ' ') + "--> ");
  out += file.name() + ":" + std::to_string(at.line) + ":" +
         std::to_string(at.column) + "\n";
  out += paint(kBlue, std::string(gutter, ' ') + " |") + "\n";
  underline(out, file, d.span, "", style, paint, gutter);
  for (const auto& l : d.labels) {
    underline(out, file, l.span, l.note, kBlue, paint, gutter);
  }
  for (const auto& n : d.notes) {
    out += paint(kBlue, std::string(gutter, ' ') + " =") + " note: " + n + "\n";
  }
  return out;
}

std::string render(const std::vector<Diagnostic>& ds, const SourceFile& file,
                   bool color) {
  std::string out;
  for (const auto& d : ds) {
    if (!out.empty()) out += '\n';
    out += render(d, file, color);
  }
  return out;
}

}  // namespace tilc::frontend
