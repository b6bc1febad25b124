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


#ifndef TILC_VHDL_TESTBENCH_HPP
#define TILC_VHDL_TESTBENCH_HPP

#include <string>
#include <vector>

#include "tilc/ir.hpp"
#include "tilc/transfer.hpp"
#include "tilc/vhdl/syntax.hpp"

namespace tilc::vhdl {

/// Records transfer actions on one physical stream of a streamlet port as
/// the statements of a VHDL process.
class ProcessWriter : public PhysicalSignals {
 public:
  /// `base` is the signal prefix ("<port>" or "<port>__<stream>"), also used
  /// as the process label.
  ProcessWriter(std::string base, std::string clock, StreamRole role,
                SynthesizedStream stream);

  /// A writer for stream `stream` of `port`. The bench drives what the
  /// streamlet consumes and checks what it produces. Throws InvalidArgument.
  static ProcessWriter for_port(const IrDatabase& db, StreamletId id,
                                const tilc::Name& port, const PathName& stream);

  StreamRole role() const override { return role_; }
  const SignalMap& signal_map() const override { return stream_.signals; }
  std::uint64_t lanes() const override { return stream_.stream.lanes; }
  const PhysicalStream& stream() const noexcept { return stream_.stream; }

  void drive(Signal s, std::optional<BitRange> slice,
             const SignalValue& v) override;
  void expect(Signal s, std::optional<BitRange> slice, const SignalValue& v,
              std::string_view message) override;
  void wait(std::optional<Signal> handshake) override;

  const Process& process() const noexcept { return process_; }
  std::string render(int indent = 0) const;

 private:
  Ref ref(Signal s, std::optional<BitRange> slice) const;

  std::string base_;
  std::string clock_;
  StreamRole role_;
  SynthesizedStream stream_;
  Process process_;
};

Expr to_expr(const SignalValue& v);

/// A self-contained bench: signals for every port of the streamlet, the
/// streamlet as "dut", and the given processes.
std::string emit_testbench(const IrDatabase& db, StreamletId id,
                           const std::vector<Process>& processes);

}  // namespace tilc::vhdl

#endif  // TILC_VHDL_TESTBENCH_HPP
