#pragma once

#include <compare>
#include <map>
#include <vector>

#include <gmpxx.h>

namespace mixt {

using Integer = mpz_class;

// Partition: weakly decreasing positive parts, trailing zeros trimmed.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  // 1-based part access; parts beyond the length read as 0.
  int part(int i) const {
    return (i >= 1 && i <= static_cast<int>(parts_.size())) ? parts_[i - 1] : 0;
  }
  int length() const { return static_cast<int>(parts_.size()); }
  long long size() const;
  bool empty() const { return parts_.empty(); }

  Partition conjugate() const;
  // Young-diagram containment: other_i <= this_i for all i.
  bool contains(const Partition& other) const;

  const std::vector<int>& parts() const { return parts_; }

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

struct Bipartition {
  Partition left, right;

  long long size() const { return left.size() + right.size(); }
  int length() const { return left.length() + right.length(); }
  Bipartition swapped() const { return {right, left}; }

  auto operator<=>(const Bipartition&) const = default;
};

// All partitions of n, every part <= max_part, ascending lexicographic.
std::vector<Partition> partitions_of(int n, int max_part = -1);

// All subdiagrams mu <= shape (componentwise), any size.
std::vector<Partition> subpartitions_of(const Partition& shape);

// R(lambda) != 0 in Gl(m|n) iff lambda_i^L + lambda^R_{m+2-i} <= n for some
// 1 <= i <= m+1.
bool is_cross(const Bipartition& lambda, int m, int n);

// lambda_{m+1} <= n.
bool is_hook(const Partition& lambda, int m, int n);

}  // namespace mixt
