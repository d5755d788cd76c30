#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nilhecke/eigen.hpp"
#include "nilhecke/perm.hpp"
#include "nilhecke/rational.hpp"
#include "nilhecke/sparse.hpp"

namespace nilhecke {

using RationalSparse = SparseVector<Rational>;

/// Structure constants (a, b) of the generic algebra on S_n:
///   T_i T_w = T_{s_i w}              if l(s_i w) > l(w)
///   T_i T_w = a T_w + b T_{s_i w}    otherwise.
/// All adjacent transpositions are conjugate in S_n, so one pair serves
/// every generator.
struct AlgebraParams {
  Rational a;
  Rational b;

  static AlgebraParams nilcoxeter() { return {Rational(0), Rational(0)}; }
  static AlgebraParams zero_hecke() { return {Rational(1), Rational(0)}; }
  static AlgebraParams group_algebra() { return {Rational(0), Rational(1)}; }

  /// Accepts "nilcoxeter", "0-hecke", "group", or "a,b" with rational a, b.
  static AlgebraParams parse(std::string_view text);

  /// Preset name, or "a,b" for anything else.
  std::string name() const;
  bool is_nilcoxeter() const { return *this == nilcoxeter(); }
  bool is_zero_hecke() const { return *this == zero_hecke(); }
  bool is_group_algebra() const { return *this == group_algebra(); }
  bool is_preset() const { return is_nilcoxeter() || is_zero_hecke() || is_group_algebra(); }

  friend bool operator==(const AlgebraParams&, const AlgebraParams&) = default;
};

class AlgebraMismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Element of E(a, b) on S_n, stored as coordinates over the T_w basis with
/// w indexed by lexicographic rank.
class AlgebraElement {
public:
  AlgebraElement(int n, AlgebraParams params);
  AlgebraElement(int n, AlgebraParams params, RationalSparse coordinates);

  static AlgebraElement basis(int n, const AlgebraParams& params, const Permutation& w);
  static AlgebraElement unit(int n, const AlgebraParams& params) {
    return basis(n, params, Permutation::identity(n));
  }
  /// The product T_{i_1} T_{i_2} ... T_{i_k}; the word need not be reduced.
  static AlgebraElement generator_product(int n, const AlgebraParams& params, const Word& word);

  int strands() const { return n_; }
  const AlgebraParams& params() const { return params_; }
  const RationalSparse& coordinates() const { return coords_; }

  std::vector<std::pair<Permutation, Rational>> terms() const;
  Rational coefficient(const Permutation& w) const;
  bool is_zero() const { return coords_.is_zero(); }
  /// Common length of all terms, or -1 when lengths differ or the element is zero.
  int homogeneous_degree() const;

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(const Rational& c);

  friend AlgebraElement operator+(AlgebraElement x, const AlgebraElement& y) { return x += y; }
  friend AlgebraElement operator-(AlgebraElement x, const AlgebraElement& y) { return x -= y; }
  friend AlgebraElement operator*(const Rational& c, AlgebraElement x) { return x *= c; }
  friend bool operator==(const AlgebraElement& x, const AlgebraElement& y) {
    return x.n_ == y.n_ && x.params_ == y.params_ && x.coords_ == y.coords_;
  }

  std::string str() const;

private:
  int n_;
  AlgebraParams params_;
  RationalSparse coords_;
};

/// T_i T_w as a coordinate vector, for basis index w.
RationalSparse generator_times_basis(const SymmetricGroup& group, const AlgebraParams& params, int i,
                                     std::size_t w);
/// T_w T_i as a coordinate vector, for basis index w.
RationalSparse basis_times_generator(const SymmetricGroup& group, const AlgebraParams& params, std::size_t w,
                                     int i);

AlgebraElement mul_left_generator(int i, const AlgebraElement& x);
AlgebraElement mul_right_generator(const AlgebraElement& x, int i);
AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y);
inline AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) { return mul(x, y); }

/// Coefficient of T_{w0}.
Rational trace(const AlgebraElement& x);

/// The automorphism T_i -> T_{n-i}, i.e. T_w -> T_{w0 w w0}.
AlgebraElement involve(const AlgebraElement& x);

/// All beta with trace(T_w T_beta) = 1, sorted by length then lexicographically.
std::vector<Permutation> right_complements(const Permutation& w, const AlgebraParams& params);

/// G(u, v) = trace(T_u T_v), rows and columns in lexicographic order.
RationalMatrix gram_matrix(int n, const AlgebraParams& params);

struct RelationCheck {
  std::string relation;
  bool holds;
};

struct RelationReport {
  int n;
  AlgebraParams params;
  std::vector<RelationCheck> checks;

  bool all_hold() const;
};

/// Checks T_i^2 = a T_i + b T_e, the braid relation and far commutation by
/// explicit multiplication.
RelationReport check_defining_relations(int n, const AlgebraParams& params);

}  // namespace nilhecke
