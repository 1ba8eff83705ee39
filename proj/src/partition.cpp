#include <hurwitz/partition.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hurwitz {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (int x : parts)
    if (x < 1) throw std::invalid_argument("Partition: parts must be positive");
  std::sort(parts.begin(), parts.end(), std::greater<int>());
}

int Partition::size() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

std::string Partition::str() const {
  std::ostringstream out;
  out << "[";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out << ",";
    out << parts[i];
  }
  out << "]";
  return out.str();
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    Partition p;
    p.parts = cur;
    out.push_back(std::move(p));
    return;
  }
  for (int k = std::min(remaining, max_part); k >= 1; --k) {
    cur.push_back(k);
    partitions_rec(remaining - k, k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw std::invalid_argument("enumerate_partitions: n < 0");
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(n, n == 0 ? 1 : n, cur, out);
  return out;
}

Permutation::Permutation(std::vector<int> img) : images(std::move(img)) {
  std::vector<bool> seen(images.size(), false);
  for (int v : images) {
    if (v < 0 || v >= static_cast<int>(images.size()) || seen[static_cast<size_t>(v)])
      throw std::invalid_argument("Permutation: images are not a bijection");
    seen[static_cast<size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int m) {
  std::vector<int> img(static_cast<size_t>(m));
  std::iota(img.begin(), img.end(), 0);
  Permutation p;
  p.images = std::move(img);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> img(images.size());
  for (size_t i = 0; i < images.size(); ++i)
    img[static_cast<size_t>(images[i])] = static_cast<int>(i);
  Permutation p;
  p.images = std::move(img);
  return p;
}

Permutation Permutation::compose(const Permutation& other) const {
  if (degree() != other.degree())
    throw std::invalid_argument("Permutation: degree mismatch");
  std::vector<int> img(images.size());
  for (size_t i = 0; i < images.size(); ++i)
    img[i] = images[static_cast<size_t>(other.images[i])];
  Permutation p;
  p.images = std::move(img);
  return p;
}

Partition cycle_type(const Permutation& p) {
  std::vector<bool> seen(p.images.size(), false);
  std::vector<int> lengths;
  for (size_t i = 0; i < p.images.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = static_cast<size_t>(p.images[j]);
      ++len;
    }
    lengths.push_back(len);
  }
  return Partition(std::move(lengths));
}

SetPartition::SetPartition(std::vector<int> rgs) : block_of(std::move(rgs)) {
  int next = 0;
  for (int b : block_of) {
    if (b < 0 || b > next) throw std::invalid_argument("SetPartition: not a restricted-growth string");
    if (b == next) ++next;
  }
  block_count = next;
}

SetPartition SetPartition::from_blocks(int ground_size,
                                       const std::vector<std::vector<int>>& blocks) {
  std::vector<int> raw(static_cast<size_t>(ground_size), -1);
  for (size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw std::invalid_argument("SetPartition: empty block");
    for (int e : blocks[b]) {
      if (e < 0 || e >= ground_size || raw[static_cast<size_t>(e)] != -1)
        throw std::invalid_argument("SetPartition: blocks do not partition the ground set");
      raw[static_cast<size_t>(e)] = static_cast<int>(b);
    }
  }
  for (int v : raw)
    if (v == -1) throw std::invalid_argument("SetPartition: blocks do not cover the ground set");
  // Renumber block ids in order of first appearance.
  std::vector<int> remap(blocks.size(), -1);
  int next = 0;
  for (auto& v : raw) {
    if (remap[static_cast<size_t>(v)] == -1) remap[static_cast<size_t>(v)] = next++;
    v = remap[static_cast<size_t>(v)];
  }
  return SetPartition(std::move(raw));
}

SetPartition SetPartition::singletons(int k) {
  std::vector<int> rgs(static_cast<size_t>(k));
  std::iota(rgs.begin(), rgs.end(), 0);
  return SetPartition(std::move(rgs));
}

std::vector<std::vector<int>> SetPartition::blocks() const {
  std::vector<std::vector<int>> out(static_cast<size_t>(block_count));
  for (size_t e = 0; e < block_of.size(); ++e)
    out[static_cast<size_t>(block_of[e])].push_back(static_cast<int>(e));
  return out;
}

long long partition_mobius(const SetPartition& sp) {
  std::vector<int> sizes(static_cast<size_t>(sp.block_count), 0);
  for (int b : sp.block_of) ++sizes[static_cast<size_t>(b)];
  long long mu = 1;
  for (int s : sizes) {
    long long f = 1;
    for (int i = 2; i < s; ++i) f *= i;  // (s-1)!
    mu *= (s % 2 == 1) ? f : -f;
  }
  return mu;
}

namespace {

void rgs_rec(int k, std::vector<int>& rgs, int used,
             const std::function<void(const SetPartition&)>& visit) {
  if (static_cast<int>(rgs.size()) == k) {
    visit(SetPartition(rgs));
    return;
  }
  for (int b = 0; b <= used; ++b) {
    rgs.push_back(b);
    rgs_rec(k, rgs, std::max(used, b + 1), visit);
    rgs.pop_back();
  }
}

}  // namespace

void for_each_set_partition(int k, const std::function<void(const SetPartition&)>& visit) {
  if (k < 0) throw std::invalid_argument("for_each_set_partition: k < 0");
  if (k == 0) {
    visit(SetPartition());
    return;
  }
  std::vector<int> rgs;
  rgs.reserve(static_cast<size_t>(k));
  rgs_rec(k, rgs, 0, visit);
}

}  // namespace hurwitz
