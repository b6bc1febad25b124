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


#include "tilc/vhdl/testbench.hpp"

#include "tilc/error.hpp"
#include "tilc/vhdl/backend.hpp"

namespace tilc::vhdl {

ProcessWriter::ProcessWriter(std::string base, std::string clock,
                             StreamRole role, SynthesizedStream stream)
    : base_(std::move(base)),
      clock_(std::move(clock)),
      role_(role),
      stream_(std::move(stream)) {
  process_.label = base_;
}

ProcessWriter ProcessWriter::for_port(const IrDatabase& db, StreamletId id,
                                      const tilc::Name& port,
                                      const PathName& stream) {
  const Interface& iface = db.streamlet(id).interface;
  const Port* p = iface.find_port(port);
  if (!p) {
    throw Error(ErrorKind::InvalidArgument,
                "no port \"" + port.str() + "\" on streamlet \"" +
                    db.streamlet(id).name.str() + "\"");
  }
  for (const auto& ss : *db.port_physical_streams(*p)) {
    if (ss.stream.name != stream) continue;
    bool source = p->mode == PortMode::In;
    if (ss.stream.direction == Direction::Reverse) source = !source;
    std::string base = p->name.str();
    if (!stream.empty()) base += "__" + stream.render();
    return ProcessWriter(std::move(base), clock_name(p->domain),
                         source ? StreamRole::Source : StreamRole::Sink, ss);
  }
  throw Error(ErrorKind::InvalidArgument,
              "port \"" + port.str() + "\" has no physical stream \"" +
                  stream.render() + "\"");
}

Ref ProcessWriter::ref(Signal s, std::optional<BitRange> slice) const {
  Ref r{base_ + "_" + std::string(to_string(s)), {}};
  if (slice) r.slice = Range{slice->high, slice->low};
  return r;
}

Expr to_expr(const SignalValue& v) {
  switch (v.kind) {
    case SignalValue::Kind::Bit:
      return Expr::bit(v.bits.at(0));
    case SignalValue::Kind::BitString:
      return Expr::bit_string(v.bits);
    case SignalValue::Kind::Zeros:
      return Expr::others('0');
    case SignalValue::Kind::Unsigned:
      return Expr::to_unsigned(v.value, v.width);
  }
  return Expr::others('0');
}

void ProcessWriter::drive(Signal s, std::optional<BitRange> slice,
                          const SignalValue& v) {
  process_.body.push_back(SignalAssign{ref(s, slice), to_expr(v)});
}

void ProcessWriter::expect(Signal s, std::optional<BitRange> slice,
                           const SignalValue& v, std::string_view message) {
  process_.body.push_back(
      Assert{ref(s, slice), to_expr(v), std::string(message)});
}

void ProcessWriter::wait(std::optional<Signal> handshake) {
  WaitUntil w{clock_, {}, '1'};
  if (handshake) w.condition = ref(*handshake, std::nullopt);
  process_.body.push_back(std::move(w));
}

std::string ProcessWriter::render(int indent) const {
  return vhdl::render(process_, indent);
}

std::string emit_testbench(const IrDatabase& db, StreamletId id,
                           const std::vector<Process>& processes) {
  Package pkg = package(db);
  Entity dut = entity(db, id);
  DesignFile f;
  f.numeric_std = true;
  f.work_package = pkg.name;
  f.entity = Entity{dut.name + "_tb", {}, {}};
  Architecture a;
  a.name = "tb";
  a.entity = f.entity->name;
  Instantiation inst{"dut", dut.name, {}};
  for (const auto& p : dut.ports) {
    a.signals.push_back(SignalDecl{p.name, p.type});
    inst.ports.push_back(Association{p.name, p.name});
  }
  a.instances.push_back(std::move(inst));
  a.processes = processes;
  f.architecture = std::move(a);
  validate(f, &pkg);
  return render(f);
}

}  // namespace tilc::vhdl
