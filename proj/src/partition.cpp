#include "mixt/partition.hpp"

#include <numeric>
#include <stdexcept>

namespace mixt {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0 || (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]))
      throw std::invalid_argument("not weakly decreasing non-negative parts");
  }
}

long long Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return {};
  std::vector<int> conj(parts_[0], 0);
  for (int c = 0; c < parts_[0]; ++c)
    for (int p : parts_) conj[c] += (p > c) ? 1 : 0;
  return Partition(std::move(conj));
}

bool Partition::contains(const Partition& other) const {
  if (other.length() > length()) return false;
  for (int i = 1; i <= other.length(); ++i)
    if (other.part(i) > part(i)) return false;
  return true;
}

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition(cur));
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    gen_partitions(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

void gen_sub(const Partition& shape, int row, int prev, std::vector<int>& cur,
             std::vector<Partition>& out) {
  out.push_back(Partition(cur));
  if (row > shape.length()) return;
  for (int p = std::min(prev, shape.part(row)); p >= 1; --p) {
    cur.push_back(p);
    gen_sub(shape, row + 1, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n, int max_part) {
  if (n < 0) return {};
  if (max_part < 0) max_part = n;
  std::vector<Partition> out;
  std::vector<int> cur;
  if (n == 0) {
    out.push_back(Partition{});
    return out;
  }
  gen_partitions(n, max_part, cur, out);
  return out;
}

std::vector<Partition> subpartitions_of(const Partition& shape) {
  std::vector<Partition> out;
  std::vector<int> cur;
  gen_sub(shape, 1, shape.empty() ? 0 : shape.part(1), cur, out);
  return out;
}

bool is_cross(const Bipartition& lambda, int m, int n) {
  for (int i = 1; i <= m + 1; ++i)
    if (lambda.left.part(i) + lambda.right.part(m + 2 - i) < n + 1) return true;
  return false;
}

bool is_hook(const Partition& lambda, int m, int n) {
  return lambda.part(m + 1) <= n;
}

}  // namespace mixt
