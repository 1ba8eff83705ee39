#pragma once

#include <hurwitz/numeric.hpp>

#include <compare>
#include <functional>
#include <string>
#include <vector>

namespace hurwitz {

/// Young diagram: weakly decreasing positive parts. The empty partition is
/// allowed and plays the role of the unit label.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p);

  int size() const;  // sum of parts (number of boxes)
  bool empty() const { return parts.empty(); }

  auto operator<=>(const Partition&) const = default;

  std::string str() const;  // "[2,1]"
};

/// All partitions of n, in descending lexicographic order:
/// [n], [n-1,1], ..., [1^n].
std::vector<Partition> enumerate_partitions(int n);

/// Bijection of {0..m-1}; images[i] is the image of i.
struct Permutation {
  std::vector<int> images;

  Permutation() = default;
  explicit Permutation(std::vector<int> img);

  int degree() const { return static_cast<int>(images.size()); }
  static Permutation identity(int m);
  Permutation inverse() const;
  /// (this o other): apply other first.
  Permutation compose(const Permutation& other) const;

  auto operator<=>(const Permutation&) const = default;
};

/// Multiset of cycle lengths, fixed points included as parts equal to 1.
Partition cycle_type(const Permutation& p);

/// Partition of the ground set {0..k-1} into disjoint nonempty blocks,
/// stored as a restricted-growth string: block ids are assigned in order of
/// first appearance, so equal partitions have equal representations.
struct SetPartition {
  std::vector<int> block_of;  // element -> block id
  int block_count = 0;

  SetPartition() = default;
  explicit SetPartition(std::vector<int> rgs);
  static SetPartition from_blocks(int ground_size,
                                  const std::vector<std::vector<int>>& blocks);
  static SetPartition singletons(int k);

  int ground_size() const { return static_cast<int>(block_of.size()); }
  std::vector<std::vector<int>> blocks() const;
  bool is_discrete() const { return block_count == ground_size(); }

  auto operator<=>(const SetPartition&) const = default;
};

/// Mobius function of the partition lattice between the discrete partition
/// and sp: product over blocks of (-1)^(|B|-1) (|B|-1)!.
long long partition_mobius(const SetPartition& sp);

/// Visits every set partition of {0..k-1} exactly once.
void for_each_set_partition(int k, const std::function<void(const SetPartition&)>& visit);

}  // namespace hurwitz
