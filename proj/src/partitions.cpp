#include "nilhecke/partitions.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace nilhecke {

PartitionStats partition_stats(Partition parts) {
  PartitionStats s;
  for (int p : parts) {
    if (p <= 0) throw std::invalid_argument("partition parts must be positive");
    if (p % 2 == 0) {
      ++s.even_count;
      ++s.even_multiplicities[p / 2];
    }
  }
  if (!std::is_sorted(parts.begin(), parts.end(), std::greater<>())) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
  }
  s.parts = std::move(parts);
  return s;
}

std::vector<PartitionStats> partitions(int n) {
  if (n < 0) throw std::invalid_argument("cannot partition a negative integer");
  std::vector<PartitionStats> out;
  Partition current;
  // Largest-first recursion yields reverse lexicographic order.
  std::function<void(int, int)> extend = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.push_back(partition_stats(current));
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      extend(remaining - part, part);
      current.pop_back();
    }
  };
  extend(n, n);
  return out;
}

Integer expected_class_count(const PartitionStats& lambda) {
  Integer count;
  mpz_fac_ui(count.get_mpz_t(), static_cast<unsigned long>(lambda.even_count));
  for (const auto& [j, mult] : lambda.even_multiplicities) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(mult));
    count /= f;
  }
  return count;
}

Integer center_dim_formula(int n) {
  if (n < 1) throw std::invalid_argument("center dimension formula needs n >= 1");
  Integer total = 0;
  for (const auto& lambda : partitions(n)) total += expected_class_count(lambda);
  return total;
}

}  // namespace nilhecke
