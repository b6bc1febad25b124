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

#include "tilc/types.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <unordered_set>

#include "tilc/error.hpp"

namespace tilc {

namespace {

constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kMax / a) {
    throw Error(ErrorKind::Overflow, "throughput product overflows 64 bits");
  }
  return a * b;
}

std::uint64_t parse_digits(std::string_view s, std::string_view what) {
  if (s.empty()) {
    throw Error(ErrorKind::InvalidArgument, "empty " + std::string(what));
  }
  std::uint64_t v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') {
      throw Error(ErrorKind::InvalidArgument,
                  "invalid " + std::string(what) + " \"" + std::string(s) +
                      "\"");
    }
    v = checked_mul(v, 10);
    std::uint64_t d = static_cast<std::uint64_t>(c - '0');
    if (v > kMax - d) {
      throw Error(ErrorKind::Overflow, std::string(what) + " is too large");
    }
    v += d;
  }
  return v;
}

}  // namespace

Throughput::Throughput(std::uint64_t num, std::uint64_t den) {
  if (num == 0 || den == 0) {
    throw Error(ErrorKind::InvalidArgument, "throughput must be positive");
  }
  std::uint64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Throughput Throughput::parse(std::string_view literal) {
  auto dot = literal.find('.');
  std::string_view whole = literal.substr(0, dot);
  std::string_view frac =
      dot == std::string_view::npos ? std::string_view{} : literal.substr(dot + 1);
  if (dot != std::string_view::npos && frac.empty()) {
    throw Error(ErrorKind::InvalidArgument,
                "invalid throughput \"" + std::string(literal) + "\"");
  }
  std::uint64_t den = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) den = checked_mul(den, 10);
  std::uint64_t num = checked_mul(parse_digits(whole, "throughput"), den);
  if (!frac.empty()) {
    std::uint64_t f = parse_digits(frac, "throughput");
    if (num > kMax - f) throw Error(ErrorKind::Overflow, "throughput too large");
    num += f;
  }
  return Throughput(num, den);
}

Throughput operator*(Throughput a, Throughput b) {
  // Cross-reduce first so representable products never overflow.
  std::uint64_t g1 = std::gcd(a.num_, b.den_);
  std::uint64_t g2 = std::gcd(b.num_, a.den_);
  return Throughput(checked_mul(a.num_ / g1, b.num_ / g2),
                    checked_mul(a.den_ / g2, b.den_ / g1));
}

__extension__ using Wide = unsigned __int128;

std::strong_ordering operator<=>(const Throughput& a, const Throughput& b) {
  auto lhs = static_cast<Wide>(a.num_) * b.den_;
  auto rhs = static_cast<Wide>(b.num_) * a.den_;
  return lhs <=> rhs;
}

std::string Throughput::to_string() const {
  std::uint64_t d = den_;
  std::size_t twos = 0, fives = 0;
  while (d % 2 == 0) d /= 2, ++twos;
  while (d % 5 == 0) d /= 5, ++fives;
  if (d != 1) return std::to_string(num_) + "/" + std::to_string(den_);
  std::size_t digits = std::max(twos, fives);
  std::string out = std::to_string(num_ / den_);
  out += '.';
  if (digits == 0) return out + "0";
  Wide rem = num_ % den_;
  for (std::size_t i = 0; i < digits; ++i) {
    rem *= 10;
    out += static_cast<char>('0' + static_cast<int>(rem / den_));
    rem %= den_;
  }
  return out;
}

Complexity::Complexity(std::uint32_t major, std::vector<std::uint32_t> minor)
    : major_(major), minor_(std::move(minor)) {
  if (major < 1 || major > 8) {
    throw Error(ErrorKind::InvalidArgument,
                "complexity major level must be in 1..8, got " +
                    std::to_string(major));
  }
}

Complexity Complexity::parse(std::string_view literal) {
  std::vector<std::uint32_t> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t dot = literal.find('.', start);
    std::uint64_t v =
        parse_digits(literal.substr(start, dot - start), "complexity");
    if (v > std::numeric_limits<std::uint32_t>::max()) {
      throw Error(ErrorKind::Overflow, "complexity component too large");
    }
    parts.push_back(static_cast<std::uint32_t>(v));
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  std::uint32_t major = parts.front();
  parts.erase(parts.begin());
  return Complexity(major, std::move(parts));
}

std::string Complexity::to_string() const {
  std::string out = std::to_string(major_);
  for (auto m : minor_) out += "." + std::to_string(m);
  return out;
}

std::string_view to_string(Synchronicity s) {
  switch (s) {
    case Synchronicity::Sync: return "Sync";
    case Synchronicity::Flatten: return "Flatten";
    case Synchronicity::Desync: return "Desync";
    case Synchronicity::FlatDesync: return "FlatDesync";
  }
  return "?";
}

std::string_view to_string(Direction d) {
  return d == Direction::Forward ? "Forward" : "Reverse";
}

std::uint32_t ceil_log2(std::uint64_t n) noexcept {
  std::uint32_t bits = 0;
  std::uint64_t capacity = 1;
  while (capacity < n) {
    capacity <<= 1;
    ++bits;
  }
  return bits;
}

namespace {

void hash_combine(std::size_t& seed, std::size_t v) {
  seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

}  // namespace

std::size_t TypeInterner::Hash::operator()(const LogicalType& t) const noexcept {
  std::size_t seed = t.index();
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, BitsType>) {
          hash_combine(seed, v.count);
        } else if constexpr (std::is_same_v<T, GroupType> ||
                             std::is_same_v<T, UnionType>) {
          for (const auto& f : v.fields) {
            hash_combine(seed, std::hash<std::string>{}(f.name.str()));
            hash_combine(seed, f.type.value);
          }
        } else if constexpr (std::is_same_v<T, StreamType>) {
          hash_combine(seed, v.data.value);
          hash_combine(seed, v.throughput.numerator());
          hash_combine(seed, v.throughput.denominator());
          hash_combine(seed, v.dimensionality);
          hash_combine(seed, static_cast<std::size_t>(v.synchronicity));
          hash_combine(seed, v.complexity.major());
          for (auto m : v.complexity.minor()) hash_combine(seed, m);
          hash_combine(seed, static_cast<std::size_t>(v.direction));
          hash_combine(seed, v.user.value);
          hash_combine(seed, v.keep);
        }
      },
      t);
  return seed;
}

TypeInterner::TypeInterner() {
  types_.emplace_back(NullType{});
  index_.emplace(types_.front(), TypeId{0});
}

void TypeInterner::validate(const LogicalType& t) const {
  auto check_id = [&](TypeId id) {
    if (id.value >= types_.size()) {
      throw Error(ErrorKind::InvalidType, "reference to an unknown type id");
    }
  };
  auto check_fields = [&](const std::vector<Field>& fields, const char* kind) {
    std::unordered_set<std::string> seen;
    for (const auto& f : fields) {
      check_id(f.type);
      if (!seen.insert(f.name.folded()).second) {
        throw Error(ErrorKind::InvalidType,
                    std::string(kind) + " has duplicate field name \"" +
                        f.name.str() + "\"");
      }
    }
  };
  if (auto* b = std::get_if<BitsType>(&t)) {
    if (b->count == 0) {
      throw Error(ErrorKind::InvalidType,
                  "Bits requires a positive bit count; use Null for zero bits");
    }
  } else if (auto* g = std::get_if<GroupType>(&t)) {
    check_fields(g->fields, "Group");
  } else if (auto* u = std::get_if<UnionType>(&t)) {
    if (u->fields.empty()) {
      throw Error(ErrorKind::InvalidType, "Union requires at least one field");
    }
    check_fields(u->fields, "Union");
  } else if (auto* s = std::get_if<StreamType>(&t)) {
    check_id(s->data);
    check_id(s->user);
    if (!is_element_only(s->user)) {
      throw Error(ErrorKind::InvalidType,
                  "Stream user property must not contain a Stream");
    }
  }
}

TypeId TypeInterner::intern(const LogicalType& t) {
  if (auto it = index_.find(t); it != index_.end()) return it->second;
  validate(t);
  TypeId id{static_cast<std::uint32_t>(types_.size())};
  types_.push_back(t);
  index_.emplace(t, id);
  return id;
}

const LogicalType& TypeInterner::get(TypeId id) const {
  if (id.value >= types_.size()) {
    throw Error(ErrorKind::InvalidType, "unknown type id");
  }
  return types_[id.value];
}

bool TypeInterner::is_element_only(TypeId id) const {
  const LogicalType& t = get(id);
  if (std::holds_alternative<StreamType>(t)) return false;
  const std::vector<Field>* fields = nullptr;
  if (auto* g = std::get_if<GroupType>(&t)) fields = &g->fields;
  if (auto* u = std::get_if<UnionType>(&t)) fields = &u->fields;
  if (fields) {
    return std::all_of(fields->begin(), fields->end(),
                       [&](const Field& f) { return is_element_only(f.type); });
  }
  return true;
}

std::uint64_t element_bit_width(TypeId id, const TypeInterner& types) {
  const LogicalType& t = types.get(id);
  return std::visit(
      [&](const auto& v) -> std::uint64_t {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, NullType>) {
          return 0;
        } else if constexpr (std::is_same_v<T, BitsType>) {
          return v.count;
        } else if constexpr (std::is_same_v<T, GroupType>) {
          std::uint64_t sum = 0;
          for (const auto& f : v.fields) sum += element_bit_width(f.type, types);
          return sum;
        } else if constexpr (std::is_same_v<T, UnionType>) {
          std::uint64_t widest = 0;
          for (const auto& f : v.fields) {
            widest = std::max(widest, element_bit_width(f.type, types));
          }
          return ceil_log2(v.fields.size()) + widest;
        } else {
          throw Error(ErrorKind::NotElementManipulating,
                      "expected an element-manipulating type, found a Stream");
        }
      },
      t);
}

namespace {

void describe_fields(std::string& out, const std::vector<Field>& fields,
                     const TypeInterner& types);

void describe_into(std::string& out, TypeId id, const TypeInterner& types) {
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, NullType>) {
          out += "Null";
        } else if constexpr (std::is_same_v<T, BitsType>) {
          out += "Bits(" + std::to_string(v.count) + ")";
        } else if constexpr (std::is_same_v<T, GroupType>) {
          out += "Group(";
          describe_fields(out, v.fields, types);
          out += ")";
        } else if constexpr (std::is_same_v<T, UnionType>) {
          out += "Union(";
          describe_fields(out, v.fields, types);
          out += ")";
        } else {
          out += "Stream(data: ";
          describe_into(out, v.data, types);
          out += ", throughput: " + v.throughput.to_string();
          out += ", dimensionality: " + std::to_string(v.dimensionality);
          out += ", synchronicity: " + std::string(to_string(v.synchronicity));
          out += ", complexity: " + v.complexity.to_string();
          out += ", direction: " + std::string(to_string(v.direction));
          out += ", user: ";
          describe_into(out, v.user, types);
          out += std::string(", keep: ") + (v.keep ? "true" : "false") + ")";
        }
      },
      types.get(id));
}

void describe_fields(std::string& out, const std::vector<Field>& fields,
                     const TypeInterner& types) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ", ";
    out += fields[i].name.str() + ": ";
    describe_into(out, fields[i].type, types);
  }
}

}  // namespace

std::string describe(TypeId id, const TypeInterner& types) {
  std::string out;
  describe_into(out, id, types);
  return out;
}

}  // namespace tilc
