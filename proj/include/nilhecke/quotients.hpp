#pragma once

#include <map>
#include <optional>
#include <vector>

#include "nilhecke/algebra.hpp"
#include "nilhecke/partitions.hpp"

namespace nilhecke {

class UnsupportedParams : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// The vectors T_i T_w - T_w T_{n-i} over all generators i and basis w.
std::vector<RationalSparse> twisted_commutator_generators(int n, const AlgebraParams& params);
/// The vectors T_i T_w - T_w T_i.
std::vector<RationalSparse> commutator_generators(int n, const AlgebraParams& params);

/// [A, A]_t as a coordinate subspace, spanned from generator-side twisted commutators.
Subspace<Rational> twisted_commutator_span(int n, const AlgebraParams& params);
/// [A, A] as a coordinate subspace.
Subspace<Rational> commutator_span(int n, const AlgebraParams& params);

/// Span of T_u T_v - T_v f(T_u) over every pair of basis elements.
/// Quadratic in n!; meant for validating the generator-side reduction.
Subspace<Rational> twisted_commutator_span_all_pairs(int n, const AlgebraParams& params);

/// n! minus the dimension of the (twisted) commutator span.
std::size_t quotient_dim(int n, const AlgebraParams& params, bool twisted);

struct MobiusClass {
  Permutation representative;        // shortest, then lexicographically least
  std::vector<Permutation> members;  // sorted by length, then lexicographically
};

/// Basis elements of A grouped by the relation T_i T_w ~ T_w T_{n-i}.
struct MobiusClasses {
  int n;
  AlgebraParams params;
  std::vector<MobiusClass> classes;  // sorted by representative
  /// Basis elements identified with zero; present only when some product vanishes.
  std::optional<std::vector<Permutation>> zero_class;
};

/// Union-find closure of the generator-side twisted commutator relation.
/// Requires every T_i T_w and T_w T_i to be zero or a single basis element
/// with coefficient 1 (true of the three presets); otherwise throws
/// UnsupportedParams.
MobiusClasses mobius_classes(int n, const AlgebraParams& params);

/// Cycle type of p -> n + 1 - w(p), i.e. of w0 * w; parts weakly decreasing.
Partition cycle_type(const Permutation& w);

/// Number of nonzero Nilcoxeter classes per cycle type. Throws
/// UnsupportedParams for anything but the Nilcoxeter preset.
std::map<Partition, std::size_t> class_census(int n, const AlgebraParams& params);

}  // namespace nilhecke
