// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "setfn/itemset.hpp"

#include <bit>
#include <charconv>
#include <stdexcept>

#include "setfn/errors.hpp"

namespace setfn {

namespace {

void check_item_range(int m, int item) {
  if (item < 1 || item > m) {
    throw std::invalid_argument("item " + std::to_string(item) +
                                " outside ground set 1.." + std::to_string(m));
  }
}

void check_same_ground(const ItemSet& a, const ItemSet& b) {
  if (a.ground_size() != b.ground_size()) {
    throw std::invalid_argument("item sets over different ground sets (" +
                                std::to_string(a.ground_size()) + " vs " +
                                std::to_string(b.ground_size()) + ")");
  }
}

}  // namespace

void ItemSet::check_ground_size(int m) {
  if (m < 0 || m > kMaxGroundSize) {
    throw SizeCapError("ground set size " + std::to_string(m) +
                       " unsupported (max " + std::to_string(kMaxGroundSize) +
                       ")");
  }
}

ItemSet ItemSet::empty(int m) {
  check_ground_size(m);
  return ItemSet(m, 0);
}

ItemSet ItemSet::full(int m) {
  check_ground_size(m);
  return ItemSet(m, m == 0 ? 0 : ((std::uint32_t{1} << m) - 1));
}

ItemSet ItemSet::of(int m, std::span<const int> items) {
  check_ground_size(m);
  std::uint32_t mask = 0;
  for (int item : items) {
    check_item_range(m, item);
    mask |= std::uint32_t{1} << (m - item);
  }
  return ItemSet(m, mask);
}

ItemSet ItemSet::of(int m, std::initializer_list<int> items) {
  return of(m, std::span<const int>(items.begin(), items.size()));
}

ItemSet ItemSet::from_mask(int m, std::uint32_t mask) {
  check_ground_size(m);
  if (m < 32 && (mask >> m) != 0) {
    throw std::invalid_argument("mask has bits outside the ground set");
  }
  return ItemSet(m, mask);
}

ItemSet ItemSet::from_bitstring(std::string_view bits) {
  check_ground_size(static_cast<int>(bits.size()));
  std::uint32_t mask = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw ParseError("bitstring must be over {0,1}");
    mask = (mask << 1) | static_cast<std::uint32_t>(c == '1');
  }
  return ItemSet(static_cast<int>(bits.size()), mask);
}

int ItemSet::cardinality() const { return std::popcount(mask_); }

bool ItemSet::contains(int item) const {
  check_item_range(m_, item);
  return (mask_ >> (m_ - item)) & 1u;
}

bool ItemSet::subset_of(const ItemSet& other) const {
  check_same_ground(*this, other);
  return (mask_ & ~other.mask_) == 0;
}

ItemSet ItemSet::with(int item) const {
  check_item_range(m_, item);
  return ItemSet(m_, mask_ | (std::uint32_t{1} << (m_ - item)));
}

ItemSet ItemSet::without(int item) const {
  check_item_range(m_, item);
  return ItemSet(m_, mask_ & ~(std::uint32_t{1} << (m_ - item)));
}

ItemSet ItemSet::union_with(const ItemSet& other) const {
  check_same_ground(*this, other);
  return ItemSet(m_, mask_ | other.mask_);
}

ItemSet ItemSet::intersect(const ItemSet& other) const {
  check_same_ground(*this, other);
  return ItemSet(m_, mask_ & other.mask_);
}

std::vector<int> ItemSet::items() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(cardinality()));
  for (int j = 1; j <= m_; ++j) {
    if ((mask_ >> (m_ - j)) & 1u) out.push_back(j);
  }
  return out;
}

std::string ItemSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int j = 1; j <= m_; ++j) {
    if ((mask_ >> (m_ - j)) & 1u) {
      if (!first) out += ',';
      out += std::to_string(j);
      first = false;
    }
  }
  out += '}';
  return out;
}

std::string ItemSet::bitstring() const {
  std::string out(static_cast<std::size_t>(m_), '0');
  for (int j = 1; j <= m_; ++j) {
    if ((mask_ >> (m_ - j)) & 1u) out[static_cast<std::size_t>(j - 1)] = '1';
  }
  return out;
}

std::strong_ordering lex_compare(const ItemSet& a, const ItemSet& b) {
  check_same_ground(a, b);
  return a.mask() <=> b.mask();
}

std::vector<ItemSet> enumerate_subsets(
    int m, const std::function<bool(const ItemSet&)>& predicate) {
  std::vector<ItemSet> out;
  for_each_subset(m, [&](const ItemSet& s) {
    if (!predicate || predicate(s)) out.push_back(s);
    return true;
  });
  return out;
}

void for_each_subset(int m, const std::function<bool(const ItemSet&)>& fn) {
  if (m < 1 || m > kMaxGroundSize) {
    throw SizeCapError("subset enumeration supports 1 <= m <= " +
                       std::to_string(kMaxGroundSize) + ", got " +
                       std::to_string(m));
  }
  const std::uint64_t count = std::uint64_t{1} << m;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    if (!fn(ItemSet::from_mask(m, static_cast<std::uint32_t>(mask)))) return;
  }
}

ItemSet parse_item_list(int m, std::string_view text) {
  ItemSet out = ItemSet::empty(m);
  if (!text.empty() && text.back() == ',') {
    throw ParseError("trailing comma in item list");
  }
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view token = text.substr(pos, comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (token.empty()) throw ParseError("empty item in list");
    int item = 0;
    auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), item);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw ParseError("bad item \"" + std::string(token) + "\"");
    }
    if (item < 1 || item > m) {
      throw ParseError("item " + std::to_string(item) +
                       " outside ground set 1.." + std::to_string(m));
    }
    out = out.with(item);
    pos = comma + 1;
  }
  return out;
}

}  // namespace setfn
