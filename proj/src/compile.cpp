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


#include "tilc/compile.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <system_error>

#include "tilc/error.hpp"
#include "tilc/frontend/evaluate.hpp"

namespace tilc {

namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + p.string());
  std::ostringstream text;
  text << in.rdbuf();
  if (in.bad()) throw Error(ErrorKind::Io, "cannot read " + p.string());
  return text.str();
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  out << text;
  out.close();
  if (!out) throw Error(ErrorKind::Io, "cannot write " + p.string());
}

std::string random_suffix() {
  std::random_device rd;
  std::uniform_int_distribution<unsigned> digit(0, 35);
  std::string out;
  for (int i = 0; i < 10; ++i) {
    unsigned d = digit(rd);
    out += static_cast<char>(d < 10 ? '0' + d : 'a' + d - 10);
  }
  return out;
}

/// Removes a path on scope exit unless released.
class Cleanup {
 public:
  explicit Cleanup(fs::path p) : path_(std::move(p)) {}
  ~Cleanup() {
    if (!path_.empty()) {
      std::error_code ec;
      fs::remove_all(path_, ec);
    }
  }
  void release() { path_.clear(); }
  Cleanup(const Cleanup&) = delete;
  Cleanup& operator=(const Cleanup&) = delete;

 private:
  fs::path path_;
};

/// Moves `staging` to `target`, replacing whatever was there.
void install(const fs::path& staging, const fs::path& target) {
  std::error_code ec;
  fs::path old;
  if (fs::exists(fs::symlink_status(target, ec))) {
    old = target.parent_path() / (".proj.old-" + random_suffix());
    fs::rename(target, old, ec);
    if (ec) {
      throw Error(ErrorKind::Io, "cannot move " + target.string() +
                                     " aside: " + ec.message());
    }
  }
  fs::rename(staging, target, ec);
  if (ec) {
    std::error_code restore;
    if (!old.empty()) fs::rename(old, target, restore);
    throw Error(ErrorKind::Io,
                "cannot move output into " + target.string() + ": " +
                    ec.message());
  }
  if (!old.empty()) fs::remove_all(old, ec);
}

ExitCode code_for(ErrorKind kind) {
  return kind == ErrorKind::Io ? ExitCode::Io : ExitCode::Emit;
}

}  // namespace

CompileResult compile(const CompileOptions& options) {
  CompileResult result;
  auto failure = [&](ExitCode code, const std::string& message) {
    result.code = code;
    result.errors += "error: " + message + "\n";
    return result;
  };

  std::string text;
  try {
    text = read_file(options.input);
  } catch (const Error& e) {
    return failure(ExitCode::Io, e.what());
  }

  frontend::SourceFile source(options.input.string(), std::move(text));
  IrDatabase db;
  frontend::FrontendResult fe =
      frontend::run_frontend(source, db, options.continue_on_ast_errors);
  result.diagnostics = std::move(fe.diagnostics);
  result.errors = frontend::render(result.diagnostics, source, options.color);
  if (fe.failed != frontend::Stage::Ok) {
    result.code =
        fe.failed == frontend::Stage::Parse ? ExitCode::Parse : ExitCode::Eval;
    return result;
  }

  fs::path root = options.input.parent_path();
  if (root.empty()) root = ".";
  vhdl::EmittedProject project;
  try {
    project = vhdl::emit_project(db, root, options.linked_missing);
  } catch (const Error& e) {
    return failure(code_for(e.kind()), std::string(to_string(e.kind())) + ": " +
                                           e.what());
  }

  try {
    std::error_code ec;
    fs::create_directories(options.output, ec);
    if (ec) {
      throw Error(ErrorKind::Io, "cannot create " + options.output.string() +
                                     ": " + ec.message());
    }
    fs::path staging = options.output / (".proj.staging-" + random_suffix());
    Cleanup cleanup(staging);
    if (!fs::create_directory(staging, ec) || ec) {
      throw Error(ErrorKind::Io, "cannot create " + staging.string());
    }
    for (const auto& f : project.files) write_file(staging / f.name, f.text);
    install(staging, options.output / "proj");
    cleanup.release();
    // Templates live next to the input; they are only written once the
    // project itself is in place.
    for (const auto& t : project.templates) {
      fs::path p(t.name);
      fs::create_directories(p.parent_path(), ec);
      if (ec) {
        throw Error(ErrorKind::Io, "cannot create " +
                                       p.parent_path().string() + ": " +
                                       ec.message());
      }
      write_file(p, t.text);
    }
  } catch (const Error& e) {
    return failure(ExitCode::Io, e.what());
  }

  for (const auto& f : project.files) result.files.push_back(f.name);
  std::size_t warnings = result.diagnostics.size();
  result.summary = "wrote " + std::to_string(result.files.size()) +
                   " file" + (result.files.size() == 1 ? "" : "s") + " to " +
                   (options.output / "proj").string();
  if (warnings) {
    result.summary += " (" + std::to_string(warnings) + " warning" +
                      (warnings == 1 ? "" : "s") + ")";
  }
  return result;
}

}  // namespace tilc
