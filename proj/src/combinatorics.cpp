#include "satake/combinatorics.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace satake {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (std::size_t i = 0; i + 1 < parts.size(); ++i)
    if (parts[i] < parts[i + 1]) throw Error("partition parts must be weakly decreasing");
  for (int x : parts)
    if (x < 0) throw Error("partition parts must be nonnegative");
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
}

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string Partition::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts[i]);
  }
  return s + ")";
}

Partition subset_to_partition(const IndexSet& I, int k) {
  if (static_cast<int>(I.size()) != k)
    throw CardinalityMismatch("subset has " + std::to_string(I.size()) +
                              " elements, expected " + std::to_string(k));
  std::vector<int> parts(k);
  for (int j = 1; j <= k; ++j) parts[k - j] = I[j - 1] - j;
  return Partition(std::move(parts));
}

IndexSet partition_to_subset(const Partition& lambda, int k) {
  if (lambda.rows() > k) throw CardinalityMismatch("partition has more than k parts");
  IndexSet I(k);
  for (int j = 1; j <= k; ++j) I[j - 1] = lambda.part(k - j) + j;
  return I;
}

std::optional<std::pair<Partition, int>> remove_rim_hook(const Partition& lambda, int n,
                                                         int row_choice) {
  const int k = lambda.rows();
  if (row_choice < 1 || row_choice > k) return std::nullopt;
  IndexSet I = partition_to_subset(lambda, k);
  const int i = I[k - row_choice];
  const int target = i - n;
  if (target < 1) return std::nullopt;
  if (std::binary_search(I.begin(), I.end(), target)) return std::nullopt;
  int height = 0;
  IndexSet J;
  for (int e : I) {
    if (e == i) continue;
    if (e > target && e < i) ++height;
    J.push_back(e);
  }
  J.push_back(target);
  std::sort(J.begin(), J.end());
  return std::make_pair(subset_to_partition(J, k), height);
}

CoreData n_core(const Partition& lambda, int k, int n) {
  if (lambda.rows() > k) throw CardinalityMismatch("partition has more than k parts");
  IndexSet I = partition_to_subset(lambda, k);
  // residues 1..n; the j-th occurrence of residue r becomes r + (j-1)n
  std::map<int, int> seen;
  std::vector<int> seq;
  seq.reserve(k);
  for (int i : I) {
    int r = (i - 1) % n + 1;
    int j = seen[r]++;
    seq.push_back(r + j * n);
  }
  int inversions = 0;
  for (std::size_t a = 0; a < seq.size(); ++a)
    for (std::size_t b = a + 1; b < seq.size(); ++b)
      if (seq[a] > seq[b]) ++inversions;
  IndexSet sorted = seq;
  std::sort(sorted.begin(), sorted.end());
  Partition core = subset_to_partition(sorted, k);
  int s = (lambda.size() - core.size()) / n;
  return {std::move(core), s, inversions % 2};
}

bool fits_rectangle(const Partition& mu, int k, int w) {
  return mu.rows() <= k && mu.part(0) <= w;
}

bool strict_subset_order(const StrictSubset& I, const StrictSubset& J) {
  if (I.size() < J.size()) return false;
  const std::size_t shift = I.size() - J.size();
  // i_a >= j_a comparing largest elements pairwise
  for (std::size_t a = 0; a < J.size(); ++a)
    if (I[a + shift] < J[a]) return false;
  return true;
}

std::vector<Partition> partitions_in_rectangle(int k, int w) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int row, int maxpart) -> void {
    out.push_back(Partition(std::vector<int>(cur)));
    if (row >= k) return;
    for (int p = std::min(maxpart, w); p >= 1; --p) {
      cur.push_back(p);
      self(self, row + 1, p);
      cur.pop_back();
    }
  };
  rec(rec, 0, w);
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.parts < b.parts;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<StrictSubset> even_subsets(int n) {
  std::vector<StrictSubset> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) % 2) continue;
    StrictSubset s;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) s.push_back(i);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const StrictSubset& a, const StrictSubset& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

Partition strict_partition_of(const StrictSubset& I) {
  std::vector<int> parts(I.rbegin(), I.rend());
  return Partition(std::move(parts));
}

std::string subset_str(const std::vector<int>& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + ")";
}

}  // namespace satake
