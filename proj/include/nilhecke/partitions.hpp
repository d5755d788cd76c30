#pragma once

#include <map>
#include <vector>

#include "nilhecke/rational.hpp"

namespace nilhecke {

/// Weakly decreasing positive parts.
using Partition = std::vector<int>;

struct PartitionStats {
  Partition parts;
  int even_count = 0;
  /// j -> number of parts equal to 2j.
  std::map<int, int> even_multiplicities;
};

PartitionStats partition_stats(Partition parts);

/// All partitions of n in reverse lexicographic order: (n), (n-1, 1), ..., (1, ..., 1).
std::vector<PartitionStats> partitions(int n);

/// n_even! / prod_j (i_j!): the number of ways to arrange the even parts.
Integer expected_class_count(const PartitionStats& lambda);

/// Sum of expected_class_count over all partitions of n.
Integer center_dim_formula(int n);

}  // namespace nilhecke
