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

#include "tilc/transfer.hpp"

#include <algorithm>

#include "tilc/error.hpp"

namespace tilc {

ElementData ElementData::bits(std::string lsb_first) {
  for (char c : lsb_first) {
    if (c != '0' && c != '1') {
      throw Error(ErrorKind::InvalidArgument,
                  "bit string \"" + lsb_first + "\" may only contain 0 and 1");
    }
  }
  ElementData d(Kind::Bits);
  d.bits_ = std::move(lsb_first);
  return d;
}

ElementData ElementData::group(std::vector<ElementData> fields) {
  ElementData d(Kind::Group);
  d.children_ = std::move(fields);
  return d;
}

ElementData ElementData::union_of(Name field, ElementData value) {
  ElementData d(Kind::Union);
  d.variant_ = std::move(field);
  d.children_.push_back(std::move(value));
  return d;
}

namespace {

Error mismatch(const std::string& what) {
  return Error(ErrorKind::TypeMismatch, what);
}

std::string tag_bits(std::uint64_t index, std::uint32_t width) {
  std::string out(width, '0');
  for (std::uint32_t i = 0; i < width; ++i) {
    if ((index >> i) & 1U) out[i] = '1';
  }
  return out;
}

}  // namespace

std::string ElementData::encode(std::uint64_t width) const {
  if (kind_ == Kind::Null && width == 0) return {};
  if (kind_ == Kind::Bits && bits_.size() == width) return bits_;
  throw mismatch("element does not match a " + std::to_string(width) +
                 "-bit element");
}

std::string ElementData::encode(TypeId type, const TypeInterner& types) const {
  const LogicalType& t = types.get(type);
  if (std::holds_alternative<StreamType>(t)) {
    throw mismatch("element data cannot be given for a Stream");
  }
  // Raw bits are accepted for any element type of the same width.
  if (kind_ == Kind::Bits) return encode(element_bit_width(type, types));

  if (std::holds_alternative<NullType>(t)) {
    if (kind_ != Kind::Null) throw mismatch("expected Null element data");
    return {};
  }
  if (std::holds_alternative<BitsType>(t)) {
    throw mismatch("expected a bit string for " + describe(type, types));
  }
  if (auto* g = std::get_if<GroupType>(&t)) {
    if (kind_ != Kind::Group || children_.size() != g->fields.size()) {
      throw mismatch("expected " + std::to_string(g->fields.size()) +
                     " field values for " + describe(type, types));
    }
    std::string out;
    for (std::size_t i = 0; i < children_.size(); ++i) {
      out += children_[i].encode(g->fields[i].type, types);
    }
    return out;
  }
  const auto& u = std::get<UnionType>(t);
  if (kind_ != Kind::Union) {
    throw mismatch("expected a Union variant for " + describe(type, types));
  }
  auto it = std::find_if(u.fields.begin(), u.fields.end(),
                         [&](const Field& f) { return f.name.same_as(*variant_); });
  if (it == u.fields.end()) {
    throw mismatch("Union has no field \"" + variant_->str() + "\"");
  }
  std::uint64_t payload = 0;
  for (const auto& f : u.fields) {
    payload = std::max(payload, element_bit_width(f.type, types));
  }
  std::string out = children_.front().encode(it->type, types);
  out.resize(payload, '0');
  auto index = static_cast<std::uint64_t>(it - u.fields.begin());
  return out + tag_bits(index, ceil_log2(u.fields.size()));
}

LogicalTransfer LogicalTransfer::empty_sequence(LastRange last) {
  LogicalTransfer t;
  t.empty_ = true;
  t.sequence_last_ = last;
  return t;
}

LogicalTransfer LogicalTransfer::elements(std::vector<LogicalElement> elements,
                                          std::optional<ElementData> user) {
  LogicalTransfer t;
  t.items_ = std::move(elements);
  t.user_ = std::move(user);
  return t;
}

PhysicalTransfer::PhysicalTransfer(Complexity complexity, std::uint64_t lanes,
                                   std::uint64_t element_width,
                                   std::uint32_t dimensionality,
                                   std::uint64_t user_width)
    : complexity_(std::move(complexity)),
      lanes_(lanes),
      element_width_(element_width),
      dimensionality_(dimensionality),
      user_width_(user_width) {
  if (lanes == 0) {
    throw Error(ErrorKind::InvalidArgument, "a stream has at least one lane");
  }
  // Reuse the synthesis rules through a stream with anonymous fields.
  PhysicalStream ps;
  ps.lanes = lanes;
  ps.dimensionality = dimensionality;
  ps.complexity = complexity_;
  if (element_width) ps.element_fields.push(PathName{}, element_width);
  if (user_width) ps.user_fields.push(PathName{}, user_width);
  signals_ = signal_map(ps);
}

PhysicalTransfer PhysicalTransfer::for_stream(const PhysicalStream& stream,
                                              const TypeInterner& types) {
  PhysicalTransfer t(stream.complexity, stream.lanes,
                     stream.element_fields.total_width(), stream.dimensionality,
                     stream.user_fields.total_width());
  t.types_ = &types;
  t.data_type_ = stream.data_type;
  t.user_type_ = stream.user_type;
  return t;
}

namespace {

std::string last_bits(const LastRange& r, std::uint32_t d) {
  if (d == 0) {
    throw Error(ErrorKind::InvalidLast,
                "last cannot be asserted on a stream without dimensionality");
  }
  if (r.low > r.high || r.high >= d) {
    throw Error(ErrorKind::InvalidLast,
                "last range " + std::to_string(r.low) + ".." +
                    std::to_string(r.high) + " is outside dimensions 0.." +
                    std::to_string(d - 1));
  }
  std::string bits(d, '0');
  for (std::uint32_t i = r.low; i <= r.high; ++i) bits[i] = '1';
  return bits;
}

}  // namespace

PhysicalTransfer PhysicalTransfer::with_logical_transfer(
    const LogicalTransfer& t) const {
  PhysicalTransfer out = *this;
  const std::uint64_t n = lanes_;
  const std::uint32_t d = dimensionality_;
  const std::uint32_t c = complexity_.major();
  out.data_.assign(n, std::nullopt);
  out.last_.clear();
  out.strb_.clear();
  out.stai_.reset();
  out.endi_.reset();
  out.user_.reset();

  const std::string no_last(d, '0');
  if (d > 0) out.last_.assign(c >= 8 ? n : 1, no_last);

  if (t.is_empty_sequence()) {
    out.last_.front() = last_bits(*t.sequence_last(), d);
    out.strb_.assign(signals_.strb, '0');
    return out;
  }

  const auto& items = t.items();
  if (items.size() > n) {
    throw Error(ErrorKind::TooManyElements,
                std::to_string(items.size()) + " elements do not fit " +
                    std::to_string(n) + " lanes");
  }

  std::vector<std::uint64_t> active;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (!items[i].data) continue;
    active.push_back(i);
    out.data_[i] = types_ && data_type_
                       ? items[i].data->encode(*data_type_, *types_)
                       : items[i].data->encode(element_width_);
  }

  std::vector<std::size_t> with_last;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (items[i].last) with_last.push_back(i);
  }
  if (c >= 8) {
    for (std::size_t i : with_last) out.last_[i] = last_bits(*items[i].last, d);
  } else if (!with_last.empty()) {
    if (with_last.size() > 1) {
      throw Error(ErrorKind::LastTooComplexForC,
                  "complexity " + complexity_.to_string() +
                      " carries a single last per transfer, but " +
                      std::to_string(with_last.size()) +
                      " elements assert last");
    }
    std::size_t k = with_last.front();
    if (!items[k].data || active.back() != k) {
      throw Error(ErrorKind::InvalidLast,
                  "below complexity 8 last must be carried by the final "
                  "active element");
    }
    if (c < 4 && items[k].last->low != 0) {
      throw Error(ErrorKind::InvalidLast,
                  "below complexity 4 an outer sequence cannot end without "
                  "its innermost dimension");
    }
    out.last_.front() = last_bits(*items[k].last, d);
  }

  if (signals_.strb == n && n > 1) {
    out.strb_.assign(n, '0');
    for (auto i : active) out.strb_[i] = '1';
  } else if (signals_.strb > 0) {
    out.strb_.assign(signals_.strb, active.empty() ? '0' : '1');
  }

  if (signals_.strb < n || n == 1) {
    bool contiguous = active.empty() ||
                      active.back() - active.front() + 1 == active.size();
    if (!contiguous) {
      throw Error(ErrorKind::NonContiguousActiveLanes,
                  "complexity " + complexity_.to_string() +
                      " can only mark a contiguous range of lanes active");
    }
    if (active.empty() && signals_.strb == 0) {
      throw Error(ErrorKind::NonContiguousActiveLanes,
                  "this stream cannot mark a whole transfer inactive");
    }
    if (!active.empty() && signals_.stai == 0 && active.front() != 0) {
      throw Error(ErrorKind::NonContiguousActiveLanes,
                  "without stai the active lanes must start at lane 0");
    }
    if (!active.empty() && signals_.endi == 0 && active.back() != n - 1) {
      throw Error(ErrorKind::NonContiguousActiveLanes,
                  "without endi every lane up to the last must be active");
    }
  }
  if (!active.empty()) {
    if (signals_.stai) out.stai_ = active.front();
    if (signals_.endi) out.endi_ = active.back();
  }

  if (t.user()) {
    if (user_width_ == 0) {
      throw Error(ErrorKind::TypeMismatch,
                  "user data given for a stream without a user signal");
    }
    out.user_ = types_ && user_type_ ? t.user()->encode(*user_type_, *types_)
                                     : t.user()->encode(user_width_);
  }
  return out;
}

bool PhysicalTransfer::index_significant() const {
  if (!stai_ && !endi_) return false;
  if (complexity_.major() < 7) return true;
  return std::all_of(strb_.begin(), strb_.end(), [](char b) { return b == '1'; });
}

std::string msb_first(std::string_view lsb_first) {
  return std::string(lsb_first.rbegin(), lsb_first.rend());
}

void open_transfer(PhysicalSignals& signals) {
  if (signals.role() == StreamRole::Source) {
    signals.drive(Signal::Valid, std::nullopt, SignalValue::bit('1'));
  }
}

namespace {

SignalValue bits_value(const std::string& lsb_first) {
  if (lsb_first.find('1') == std::string::npos) {
    return SignalValue::zeros(lsb_first.size());
  }
  return SignalValue::bit_string(msb_first(lsb_first));
}

}  // namespace

void transfer(PhysicalSignals& signals, const PhysicalTransfer& t,
              bool test_staggered, std::string_view message) {
  const SignalMap& map = signals.signal_map();
  if (!(map == t.signals()) || signals.lanes() != t.lanes()) {
    throw Error(ErrorKind::InvalidArgument,
                "transfer was built for a different physical stream");
  }
  const bool source = signals.role() == StreamRole::Source;
  if (!source) signals.wait(Signal::Valid);

  const std::uint64_t e = t.element_width();
  for (std::uint64_t lane = 0; lane < t.lanes(); ++lane) {
    const auto& bits = t.data()[lane];
    if (!bits || e == 0) continue;
    BitRange slice{(lane + 1) * e - 1, lane * e};
    signals.put(Signal::Data, slice, SignalValue::bit_string(msb_first(*bits)),
                message);
  }

  if (map.last > 0) {
    const std::uint32_t d = t.dimensionality();
    if (t.complexity().major() >= 8) {
      for (std::uint64_t lane = 0; lane < t.lanes(); ++lane) {
        BitRange slice{(lane + 1) * d - 1, lane * d};
        signals.put(Signal::Last, slice, bits_value(t.last()[lane]), message);
      }
    } else if (map.last == 1) {
      signals.put(Signal::Last, std::nullopt,
                  SignalValue::bit(t.last().front()[0]), message);
    } else {
      signals.put(Signal::Last, std::nullopt, bits_value(t.last().front()),
                  message);
    }
  }

  // Strobe bits are written in lane order, lane 0 leftmost.
  if (map.strb > 0) {
    signals.put(Signal::Strb, std::nullopt, SignalValue::bit_string(t.strb()),
                message);
  }
  if (t.index_significant()) {
    if (map.stai > 0 && t.stai()) {
      signals.put(Signal::Stai, std::nullopt,
                  SignalValue::unsigned_value(*t.stai(), map.stai), message);
    }
    if (map.endi > 0 && t.endi()) {
      signals.put(Signal::Endi, std::nullopt,
                  SignalValue::unsigned_value(*t.endi(), map.endi), message);
    }
  }
  if (t.user()) {
    signals.put(Signal::User, BitRange{map.user - 1, 0},
                SignalValue::bit_string(msb_first(*t.user())), message);
  }

  if (source) {
    signals.wait(Signal::Ready);
    if (test_staggered) {
      signals.drive(Signal::Valid, std::nullopt, SignalValue::bit('0'));
      signals.wait(std::nullopt);
      signals.drive(Signal::Valid, std::nullopt, SignalValue::bit('1'));
    }
  } else {
    signals.drive(Signal::Ready, std::nullopt, SignalValue::bit('1'));
    if (test_staggered) {
      signals.wait(std::nullopt);
      signals.drive(Signal::Ready, std::nullopt, SignalValue::bit('0'));
    }
  }
}

void close_transfer(PhysicalSignals& signals) {
  if (signals.role() == StreamRole::Source) {
    signals.drive(Signal::Valid, std::nullopt, SignalValue::bit('0'));
  } else {
    signals.wait(Signal::Valid);
    signals.drive(Signal::Ready, std::nullopt, SignalValue::bit('0'));
  }
  signals.wait(std::nullopt);
}

}  // namespace tilc
