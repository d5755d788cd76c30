#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "nilhecke/algebra.hpp"
#include "nilhecke/eigen.hpp"
#include "nilhecke/quotients.hpp"

namespace nilhecke {

/// The trace pairing failed to produce a unique dual element: the twisted
/// duality between Z(A) and A/[A,A]_t does not hold for the given input.
class DualityViolation : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class InternalInconsistency : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Z(A): solutions of T_i z = z T_i for every generator.
Subspace<Rational> center(int n, const AlgebraParams& params);

/// TZ(A): solutions of z T_i = T_{n-i} z for every generator.
Subspace<Rational> twisted_center(int n, const AlgebraParams& params);

struct CenterBasisElement {
  /// Representative of the Möbius class this element is dual to.
  Permutation label;
  AlgebraElement element;
};

struct CenterBasis {
  int n;
  AlgebraParams params;
  std::vector<CenterBasisElement> elements;

  /// Position of the element equal to T_e, if any.
  std::optional<std::size_t> identity_position() const;
};

/// For each nonzero Nilcoxeter class c, the sum of T_{w^-1 w0} over w in c.
CenterBasis nc_center_basis(int n);

/// For each Möbius class c, the unique central z_c with trace(T_w z_c) = 1
/// for w in c and 0 for every other basis element. Defined for the
/// Nilcoxeter and 0-Hecke presets; throws DualityViolation if the system is
/// inconsistent or underdetermined.
CenterBasis dual_center_basis(int n, const AlgebraParams& params);

/// Structure constants of a center basis: entry (i, j) holds the
/// coordinates of z_i z_j in the same basis.
struct MultiplicationTable {
  std::size_t size = 0;
  std::vector<RationalVector> entries;  // row-major, size * size

  const RationalVector& operator()(std::size_t i, std::size_t j) const { return entries[i * size + j]; }
};

/// Throws InternalInconsistency if some product is not in the span of the basis.
MultiplicationTable multiplication_table(const CenterBasis& basis);

struct ComplementCoefficient {
  Permutation complement;
  Rational coefficient;
};

struct ConjectureClassReport {
  Permutation representative;
  std::vector<Permutation> members;
  AlgebraElement dual_element;
  /// Every term of the dual element is a right complement of some class member.
  bool support_in_complements;
  /// Coefficient of the dual element on each complement of the class, by length then lexicographically.
  std::vector<ComplementCoefficient> complement_coefficients;
  bool integer_coefficients;
};

struct ConjectureReport {
  int n;
  std::vector<ConjectureClassReport> classes;
  /// No basis element has two right complements of equal length.
  bool unique_complement_per_crossing_number;
};

/// Measures whether the 0-Hecke dual center basis is supported on class
/// complements. A failed inclusion is reported, not thrown.
ConjectureReport verify_hn_conjecture(int n);

}  // namespace nilhecke
