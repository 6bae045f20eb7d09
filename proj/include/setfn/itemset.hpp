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

#ifndef SETFN_ITEMSET_HPP
#define SETFN_ITEMSET_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace setfn {

/// Largest ground set for which subset enumeration is supported.
inline constexpr int kMaxGroundSize = 24;

/// A subset of the ground set {1, ..., m}.
///
/// The characteristic bitstring b_1...b_m (b_j = 1 iff item j is in the
/// set) is stored so that its string order with '0' < '1' coincides with
/// the numeric order of mask(): item j occupies machine bit (m - j), item 1
/// being the most significant. Consequently mask() doubles as the rank of
/// the set in lexicographic order, and counting masks upward enumerates
/// subsets lexicographically.
class ItemSet {
 public:
  ItemSet() = default;

  static ItemSet empty(int m);
  static ItemSet full(int m);
  /// Items are 1-based and must lie in 1..m; duplicates are tolerated.
  static ItemSet of(int m, std::span<const int> items);
  static ItemSet of(int m, std::initializer_list<int> items);
  /// `mask` uses the bit layout documented above; rank in lex order.
  static ItemSet from_mask(int m, std::uint32_t mask);
  /// Parses "101" (b_1 first). The string length defines m.
  static ItemSet from_bitstring(std::string_view bits);

  int ground_size() const { return m_; }
  int cardinality() const;
  bool is_empty() const { return mask_ == 0; }
  bool contains(int item) const;
  bool subset_of(const ItemSet& other) const;

  ItemSet with(int item) const;
  ItemSet without(int item) const;
  ItemSet union_with(const ItemSet& other) const;
  ItemSet intersect(const ItemSet& other) const;

  /// Characteristic mask; equals the set's lexicographic rank.
  std::uint32_t mask() const { return mask_; }
  /// Member items in ascending order.
  std::vector<int> items() const;

  /// Canonical renderings: "{1,3}" and "101".
  std::string to_string() const;
  std::string bitstring() const;

  friend bool operator==(const ItemSet&, const ItemSet&) = default;

 private:
  ItemSet(int m, std::uint32_t mask) : m_(m), mask_(mask) {}
  static void check_ground_size(int m);

  int m_ = 0;
  std::uint32_t mask_ = 0;
};

/// Strict total order on subsets of a fixed ground set: characteristic
/// bitstrings compared as strings with '0' < '1'. Depends only on set
/// membership. Throws std::invalid_argument on mismatched ground sets.
std::strong_ordering lex_compare(const ItemSet& a, const ItemSet& b);

/// All 2^m subsets in lex order, optionally filtered. Throws SizeCapError
/// for m > kMaxGroundSize.
std::vector<ItemSet> enumerate_subsets(
    int m, const std::function<bool(const ItemSet&)>& predicate = nullptr);

/// Streaming form of the same enumeration; stops early when `fn` returns
/// false.
void for_each_subset(int m, const std::function<bool(const ItemSet&)>& fn);

/// Parses "1,3" into a set over 1..m; "" is the empty set. Throws
/// ParseError on junk or out-of-range items.
ItemSet parse_item_list(int m, std::string_view text);

}  // namespace setfn

#endif  // SETFN_ITEMSET_HPP
