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

#include "tilc/lowering.hpp"

#include <algorithm>
#include <unordered_map>

#include "tilc/error.hpp"

namespace tilc {

void Fields::push(PathName name, std::uint64_t width) {
  if (width == 0) {
    throw Error(ErrorKind::InvalidType, "zero-width field \"" +
                                            name.render() + "\"");
  }
  std::string key = name.folded();
  for (const auto& e : entries_) {
    if (e.name.folded() == key) {
      throw Error(ErrorKind::InvalidType,
                  "duplicate field name \"" + name.render() + "\"");
    }
  }
  entries_.push_back(Entry{std::move(name), width});
  total_ += width;
}

std::uint64_t Fields::offset(std::size_t i) const {
  std::uint64_t off = 0;
  for (std::size_t k = 0; k < i && k < entries_.size(); ++k) {
    off += entries_[k].width;
  }
  return off;
}

namespace {

const Name& tag_name() {
  static const Name n = Name::make("tag");
  return n;
}
const Name& union_name() {
  static const Name n = Name::make("union");
  return n;
}

void collect_fields(Fields& out, TypeId id, const TypeInterner& types,
                    const PathName& path) {
  const LogicalType& t = types.get(id);
  if (std::holds_alternative<NullType>(t)) return;
  if (auto* b = std::get_if<BitsType>(&t)) {
    out.push(path, b->count);
  } else if (auto* g = std::get_if<GroupType>(&t)) {
    for (const auto& f : g->fields) {
      collect_fields(out, f.type, types, path.with(f.name));
    }
  } else if (auto* u = std::get_if<UnionType>(&t)) {
    std::uint64_t payload = 0;
    for (const auto& f : u->fields) {
      payload = std::max(payload, element_bit_width(f.type, types));
    }
    if (payload > 0) out.push(path.with(union_name()), payload);
    std::uint64_t tag = ceil_log2(u->fields.size());
    if (tag > 0) out.push(path.with(tag_name()), tag);
  } else {
    throw Error(ErrorKind::NotElementManipulating,
                "cannot derive fields of a Stream at \"" + path.render() +
                    "\"");
  }
}

}  // namespace

Fields fields(TypeId type, const TypeInterner& types, const PathName& prefix) {
  Fields out;
  collect_fields(out, type, types, prefix);
  return out;
}

namespace {

struct Splitter {
  TypeInterner& types;
  std::vector<SplitStream> out;

  // Replaces every Stream inside `id` by Null, splitting the Streams found
  // under `parent`. Unions keep their Stream fields as Null so the tag that
  // selects between them survives.
  TypeId strip(TypeId id, const PathName& path, const SplitStream* parent) {
    const LogicalType t = types.get(id);
    if (auto* s = std::get_if<StreamType>(&t)) {
      split_stream(*s, path, parent);
      return types.null();
    }
    auto strip_fields = [&](const std::vector<Field>& in) {
      std::vector<Field> fields;
      fields.reserve(in.size());
      for (const auto& f : in) {
        fields.push_back(Field{f.name, strip(f.type, path.with(f.name), parent)});
      }
      return fields;
    };
    if (auto* g = std::get_if<GroupType>(&t)) {
      return types.intern(GroupType{strip_fields(g->fields)});
    }
    if (auto* u = std::get_if<UnionType>(&t)) {
      return types.intern(UnionType{strip_fields(u->fields)});
    }
    return id;
  }

  void split_stream(const StreamType& s, const PathName& path,
                    const SplitStream* parent) {
    SplitStream self;
    self.name = path;
    self.throughput = parent ? parent->throughput * s.throughput : s.throughput;
    self.direction =
        parent ? compose(parent->direction, s.direction) : s.direction;
    self.dimensionality = s.dimensionality;
    bool inherits = s.synchronicity == Synchronicity::Sync ||
                    s.synchronicity == Synchronicity::Desync;
    if (parent && inherits) self.dimensionality += parent->dimensionality;
    self.synchronicity = s.synchronicity;
    self.complexity = s.complexity;
    self.user = s.user;
    self.keep = s.keep;

    // Reserve our slot so the parent precedes its children in the output.
    std::size_t slot = out.size();
    out.push_back(self);
    self.data = strip(s.data, path, &self);
    out[slot].data = self.data;

    bool retained = element_bit_width(self.data, types) > 0 ||
                    self.user != types.null() || self.keep;
    if (!retained) out.erase(out.begin() + static_cast<std::ptrdiff_t>(slot));
  }
};

}  // namespace

std::vector<SplitStream> split(TypeId type, TypeInterner& types) {
  Splitter splitter{types, {}};
  splitter.strip(type, PathName{}, nullptr);
  std::unordered_map<std::string, std::size_t> seen;
  for (const auto& s : splitter.out) {
    if (!seen.emplace(s.name.folded(), 0).second) {
      throw Error(ErrorKind::DuplicateStreamName,
                  "split produces two physical streams named \"" +
                      s.name.render() + "\"");
    }
  }
  return std::move(splitter.out);
}

std::string_view to_string(Signal s) {
  switch (s) {
    case Signal::Valid: return "valid";
    case Signal::Ready: return "ready";
    case Signal::Data: return "data";
    case Signal::Last: return "last";
    case Signal::Stai: return "stai";
    case Signal::Endi: return "endi";
    case Signal::Strb: return "strb";
    case Signal::User: return "user";
  }
  return "?";
}

std::uint64_t SignalMap::width(Signal s) const noexcept {
  switch (s) {
    case Signal::Valid: return valid;
    case Signal::Ready: return ready;
    case Signal::Data: return data;
    case Signal::Last: return last;
    case Signal::Stai: return stai;
    case Signal::Endi: return endi;
    case Signal::Strb: return strb;
    case Signal::User: return user;
  }
  return 0;
}

std::vector<Signal> SignalMap::present() const {
  std::vector<Signal> out;
  for (Signal s : kAllSignals) {
    if (width(s) > 0) out.push_back(s);
  }
  return out;
}

SignalMap signal_map(const PhysicalStream& ps) {
  const std::uint64_t n = ps.lanes;
  const std::uint64_t d = ps.dimensionality;
  const std::uint32_t c = ps.complexity.major();
  SignalMap m;
  m.data = ps.element_fields.total_width() * n;
  m.last = d == 0 ? 0 : (c < 8 ? d : d * n);
  m.endi = (n > 1 && (c >= 5 || d >= 1)) ? ceil_log2(n) : 0;
  m.stai = (n > 1 && c >= 6) ? ceil_log2(n) : 0;
  m.strb = c >= 7 ? n : (d >= 1 ? 1 : 0);
  m.user = ps.user_fields.total_width();
  return m;
}

std::vector<SynthesizedStream> synthesize(TypeId type, TypeInterner& types) {
  std::vector<SynthesizedStream> out;
  for (const auto& s : split(type, types)) {
    PhysicalStream ps;
    ps.name = s.name;
    ps.element_fields = fields(s.data, types);
    ps.lanes = s.throughput.ceil();
    ps.dimensionality = s.dimensionality;
    ps.complexity = s.complexity;
    ps.user_fields = fields(s.user, types);
    ps.direction = s.direction;
    ps.data_type = s.data;
    ps.user_type = s.user;
    SignalMap map = signal_map(ps);
    out.push_back(SynthesizedStream{std::move(ps), map});
  }
  return out;
}

std::optional<std::string> lane_activity_warning(const PhysicalStream& ps) {
  if (ps.lanes > 1 && ps.complexity.major() < 5 && ps.dimensionality == 0) {
    std::string name = ps.name.empty() ? "<root>" : ps.name.render();
    return "physical stream \"" + name + "\" has " + std::to_string(ps.lanes) +
           " lanes at complexity " + ps.complexity.to_string() +
           " without dimensionality, so it cannot mark lanes inactive; every "
           "transfer must carry exactly " +
           std::to_string(ps.lanes) + " elements";
  }
  return std::nullopt;
}

BitRange lane_slice(Signal signal, std::uint64_t lane, const PhysicalStream& ps,
                    const SignalMap& map) {
  if (lane >= ps.lanes) {
    throw Error(ErrorKind::LaneOutOfRange,
                "lane " + std::to_string(lane) + " out of range for " +
                    std::to_string(ps.lanes) + " lanes");
  }
  std::uint64_t per_lane = 0;
  if (signal == Signal::Data) {
    per_lane = ps.element_fields.total_width();
  } else if (signal == Signal::Last && map.last == ps.dimensionality * ps.lanes &&
             ps.complexity.major() >= 8) {
    per_lane = ps.dimensionality;
  } else {
    throw Error(ErrorKind::InvalidArgument,
                "signal " + std::string(to_string(signal)) +
                    " has no per-lane slices on this stream");
  }
  if (per_lane == 0) {
    throw Error(ErrorKind::InvalidArgument,
                "signal " + std::string(to_string(signal)) + " is omitted");
  }
  return BitRange{(lane + 1) * per_lane - 1, lane * per_lane};
}

}  // namespace tilc
