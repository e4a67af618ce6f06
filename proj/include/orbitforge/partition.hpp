#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace orbitforge {

/// Integer partition: weakly decreasing positive parts.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  /// Sorts and drops zero parts; throws on negative parts.
  explicit Partition(std::vector<int> parts);

  int size() const;
  std::size_t length() const { return parts.size(); }
  bool empty() const { return parts.empty(); }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;
};

/// Transposed Young diagram.
Partition dual(const Partition& p);
/// True iff every partial sum of a is >= the matching partial sum of b
/// (both of the same size).
bool dominates(const Partition& a, const Partition& b);
/// Componentwise sum of zero-padded part sequences.
Partition padded_sum(const std::vector<Partition>& ps);
/// Sum over j of (dual part j)^2: the centralizer dimension of a nilpotent of that type.
int centralizer_dim_formula(const Partition& p);

std::vector<Partition> partitions_of(int n);
/// Ordered lists of positive integers summing to n.
std::vector<std::vector<int>> compositions_of(int n);

std::string to_string(const Partition& p);
/// Parses "3,1" (and "" as the empty partition).
Partition parse_partition(const std::string& text);
std::vector<int> parse_int_list(const std::string& text);

}  // namespace orbitforge
