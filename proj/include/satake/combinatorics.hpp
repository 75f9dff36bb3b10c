#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "satake/errors.hpp"

namespace satake {

// Weakly decreasing parts, trailing zeros trimmed.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p);

  int size() const;  // |lambda| = sum of parts
  int rows() const { return static_cast<int>(parts.size()); }
  int part(int r) const { return r < rows() ? parts[r] : 0; }
  bool empty() const { return parts.empty(); }

  friend auto operator<=>(const Partition&, const Partition&) = default;

  std::string str() const;  // "(2,1)" / "()"
};

// Strictly increasing positive integers (type A subset convention).
using IndexSet = std::vector<int>;
// Strictly increasing integers drawn from {0,...,n-1} (type D convention).
using StrictSubset = std::vector<int>;

// lambda_{k+1-j} = i_j - j.  Throws CardinalityMismatch when |I| != k.
Partition subset_to_partition(const IndexSet& I, int k);
IndexSet partition_to_subset(const Partition& lambda, int k);

// Removes the n-rim hook whose arm starts in the given row (1-based, row 1 is
// the longest part).  Returns the smaller partition and the hook height, or
// nullopt when that removal is illegal.
std::optional<std::pair<Partition, int>> remove_rim_hook(const Partition& lambda, int n,
                                                         int row_choice);

struct CoreData {
  Partition core;
  int s;        // number of removed n-rim hooks
  int epsilon;  // parity (0 or 1) of the total rim-hook height
};

// n-core via the residue construction on the k-element subset encoding.
CoreData n_core(const Partition& lambda, int k, int n);

bool fits_rectangle(const Partition& mu, int k, int w);

// Containment order of the strict partitions attached to I and J (I >= J).
bool strict_subset_order(const StrictSubset& I, const StrictSubset& J);

// All partitions inside the k x w rectangle, ordered by (size, lex).
std::vector<Partition> partitions_in_rectangle(int k, int w);

// All subsets of {0..n-1} with |I| even, ordered by (size, lex).
std::vector<StrictSubset> even_subsets(int n);

// Strict partition (decreasing nonzero elements) attached to a type D subset.
Partition strict_partition_of(const StrictSubset& I);

std::string subset_str(const std::vector<int>& s);

}  // namespace satake
