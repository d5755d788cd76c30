#pragma once

// Exact sparse linear algebra over a field. Every algorithm here is
// templated on the scalar type; Rational is the reference field and ModP
// serves the modular rank pre-check.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nilhecke/perm.hpp"

namespace nilhecke {

namespace detail {

template <typename Scalar>
bool vanishes(const Scalar& x) {
  return is_zero(x);
}

}  // namespace detail

template <typename Scalar>
struct SparseEntry {
  std::size_t index;
  Scalar value;
};

/// Vector with explicitly stored nonzero entries, sorted by index.
template <typename Scalar>
class SparseVector {
public:
  using Entry = SparseEntry<Scalar>;

  SparseVector() = default;
  explicit SparseVector(std::size_t dimension) : dim_(dimension) {}

  /// Sums duplicate indices and drops zeros.
  static SparseVector from_entries(std::size_t dimension, std::vector<Entry> entries);
  static SparseVector unit(std::size_t dimension, std::size_t index, Scalar one);

  std::size_t dimension() const { return dim_; }
  std::size_t nnz() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }
  const std::vector<Entry>& entries() const { return entries_; }

  /// nullptr when the coordinate is zero.
  const Scalar* find(std::size_t index) const;
  std::size_t leading_index() const { return entries_.front().index; }
  const Scalar& leading_value() const { return entries_.front().value; }

  /// this += factor * other.
  void axpy(const Scalar& factor, const SparseVector& other);
  void scale(const Scalar& factor);

  friend bool operator==(const SparseVector& a, const SparseVector& b) {
    if (a.dim_ != b.dim_ || a.entries_.size() != b.entries_.size()) return false;
    for (std::size_t k = 0; k < a.entries_.size(); ++k) {
      if (a.entries_[k].index != b.entries_[k].index || !(a.entries_[k].value == b.entries_[k].value)) {
        return false;
      }
    }
    return true;
  }

private:
  std::size_t dim_ = 0;
  std::vector<Entry> entries_;
};

template <typename Scalar>
Scalar dot(const SparseVector<Scalar>& a, const SparseVector<Scalar>& b) {
  if (a.dimension() != b.dimension()) throw SizeMismatch("dot product of vectors of different dimension");
  Scalar sum{};
  auto ia = a.entries().begin();
  auto ib = b.entries().begin();
  while (ia != a.entries().end() && ib != b.entries().end()) {
    if (ia->index < ib->index) {
      ++ia;
    } else if (ib->index < ia->index) {
      ++ib;
    } else {
      sum += ia->value * ib->value;
      ++ia;
      ++ib;
    }
  }
  return sum;
}

/// Coordinate subspace held as its reduced row-echelon basis.
///
/// The basis is canonical for the subspace: rows sorted by pivot, pivots
/// normalized to 1, and every pivot column zero in all other rows.
template <typename Scalar>
class Subspace {
public:
  explicit Subspace(std::size_t ambient_dimension = 0)
      : ambient_(ambient_dimension), row_of_column_(ambient_dimension, -1) {}
  Subspace(std::size_t ambient_dimension, std::vector<SparseVector<Scalar>> rref_rows);

  std::size_t ambient_dimension() const { return ambient_; }
  std::size_t dimension() const { return rows_.size(); }
  std::size_t codimension() const { return ambient_ - rows_.size(); }
  const std::vector<SparseVector<Scalar>>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Residual of `v` after elimination against the basis.
  SparseVector<Scalar> reduce(SparseVector<Scalar> v) const;
  bool contains(const SparseVector<Scalar>& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
  }

private:
  std::size_t ambient_;
  std::vector<SparseVector<Scalar>> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<std::ptrdiff_t> row_of_column_;
};

/// Incremental Gaussian elimination. Rows kept in echelon form with unit
/// pivots; finish() back-substitutes into the canonical reduced form.
template <typename Scalar>
class EchelonBuilder {
public:
  explicit EchelonBuilder(std::size_t dimension) : dim_(dimension), row_of_column_(dimension, -1) {}

  std::size_t dimension() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }

  /// Returns true if `v` was independent of the rows added so far.
  bool add(SparseVector<Scalar> v);
  /// Reduces `v` against the current rows.
  SparseVector<Scalar> reduce(SparseVector<Scalar> v) const;
  Subspace<Scalar> finish() &&;

private:
  std::size_t dim_;
  std::vector<SparseVector<Scalar>> rows_;
  std::vector<std::ptrdiff_t> row_of_column_;
};

// ---------------------------------------------------------------------------

template <typename Scalar>
SparseVector<Scalar> SparseVector<Scalar>::from_entries(std::size_t dimension, std::vector<Entry> entries) {
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) { return a.index < b.index; });
  SparseVector out(dimension);
  out.entries_.reserve(entries.size());
  for (auto& e : entries) {
    if (e.index >= dimension) {
      throw IndexOutOfRange("sparse index " + std::to_string(e.index) + " outside dimension " +
                            std::to_string(dimension));
    }
    if (!out.entries_.empty() && out.entries_.back().index == e.index) {
      out.entries_.back().value += e.value;
    } else {
      if (!out.entries_.empty() && detail::vanishes(out.entries_.back().value)) out.entries_.pop_back();
      out.entries_.push_back(std::move(e));
    }
  }
  if (!out.entries_.empty() && detail::vanishes(out.entries_.back().value)) out.entries_.pop_back();
  return out;
}

template <typename Scalar>
SparseVector<Scalar> SparseVector<Scalar>::unit(std::size_t dimension, std::size_t index, Scalar one) {
  return from_entries(dimension, {Entry{index, std::move(one)}});
}

template <typename Scalar>
const Scalar* SparseVector<Scalar>::find(std::size_t index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& e, std::size_t i) { return e.index < i; });
  return it != entries_.end() && it->index == index ? &it->value : nullptr;
}

template <typename Scalar>
void SparseVector<Scalar>::axpy(const Scalar& factor, const SparseVector& other) {
  if (dim_ != other.dim_) throw SizeMismatch("axpy on vectors of different dimension");
  if (detail::vanishes(factor) || other.is_zero()) return;
  std::vector<Entry> merged;
  merged.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->index < b->index)) {
      merged.push_back(std::move(*a));
      ++a;
    } else if (a == entries_.end() || b->index < a->index) {
      merged.push_back(Entry{b->index, factor * b->value});
      ++b;
    } else {
      Scalar v = a->value + factor * b->value;
      if (!detail::vanishes(v)) merged.push_back(Entry{a->index, std::move(v)});
      ++a;
      ++b;
    }
  }
  entries_ = std::move(merged);
}

template <typename Scalar>
void SparseVector<Scalar>::scale(const Scalar& factor) {
  if (detail::vanishes(factor)) {
    entries_.clear();
    return;
  }
  for (auto& e : entries_) e.value *= factor;
}

template <typename Scalar>
Subspace<Scalar>::Subspace(std::size_t ambient_dimension, std::vector<SparseVector<Scalar>> rref_rows)
    : ambient_(ambient_dimension), rows_(std::move(rref_rows)), row_of_column_(ambient_dimension, -1) {
  pivots_.reserve(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    pivots_.push_back(rows_[r].leading_index());
    row_of_column_[pivots_.back()] = static_cast<std::ptrdiff_t>(r);
  }
}

template <typename Scalar>
SparseVector<Scalar> Subspace<Scalar>::reduce(SparseVector<Scalar> v) const {
  if (v.dimension() != ambient_) {
    throw SizeMismatch("vector of dimension " + std::to_string(v.dimension()) +
                       " tested against subspace of ambient dimension " + std::to_string(ambient_));
  }
  // Rows are fully reduced, so a single pass over pivot columns of v suffices.
  std::vector<std::pair<std::size_t, Scalar>> hits;
  for (const auto& e : v.entries()) {
    if (row_of_column_[e.index] >= 0) hits.emplace_back(e.index, e.value);
  }
  for (const auto& [col, coeff] : hits) {
    v.axpy(-coeff, rows_[static_cast<std::size_t>(row_of_column_[col])]);
  }
  return v;
}

template <typename Scalar>
bool Subspace<Scalar>::contains(const SparseVector<Scalar>& v) const {
  return reduce(v).is_zero();
}

template <typename Scalar>
SparseVector<Scalar> EchelonBuilder<Scalar>::reduce(SparseVector<Scalar> v) const {
  if (v.dimension() != dim_) {
    throw SizeMismatch("vector of dimension " + std::to_string(v.dimension()) +
                       " added to elimination of dimension " + std::to_string(dim_));
  }
  // Rows only have entries at or beyond their pivot, so scanning left to
  // right never revisits an eliminated column.
  std::size_t pos = 0;
  while (pos < v.nnz()) {
    const auto& e = v.entries()[pos];
    const auto r = row_of_column_[e.index];
    if (r < 0) {
      ++pos;
      continue;
    }
    const Scalar coeff = e.value;
    v.axpy(-coeff, rows_[static_cast<std::size_t>(r)]);
  }
  return v;
}

template <typename Scalar>
bool EchelonBuilder<Scalar>::add(SparseVector<Scalar> v) {
  v = reduce(std::move(v));
  if (v.is_zero()) return false;
  v.scale(inverse(v.leading_value()));
  row_of_column_[v.leading_index()] = static_cast<std::ptrdiff_t>(rows_.size());
  rows_.push_back(std::move(v));
  return true;
}

template <typename Scalar>
Subspace<Scalar> EchelonBuilder<Scalar>::finish() && {
  std::vector<std::size_t> order(rows_.size());
  for (std::size_t r = 0; r < order.size(); ++r) order[r] = r;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return rows_[a].leading_index() > rows_[b].leading_index(); });
  // Largest pivot first: each row is cleared against rows already in reduced form.
  for (std::size_t r : order) {
    auto& row = rows_[r];
    std::vector<std::pair<std::size_t, Scalar>> hits;
    for (std::size_t k = 1; k < row.nnz(); ++k) {
      const auto& e = row.entries()[k];
      if (row_of_column_[e.index] >= 0) hits.emplace_back(e.index, e.value);
    }
    for (const auto& [col, coeff] : hits) {
      row.axpy(-coeff, rows_[static_cast<std::size_t>(row_of_column_[col])]);
    }
  }
  std::sort(rows_.begin(), rows_.end(),
            [](const auto& a, const auto& b) { return a.leading_index() < b.leading_index(); });
  return Subspace<Scalar>(dim_, std::move(rows_));
}

// ---------------------------------------------------------------------------

namespace detail {

template <typename Scalar>
std::size_t common_dimension(const std::vector<SparseVector<Scalar>>& vectors, std::size_t fallback) {
  if (vectors.empty()) return fallback;
  const auto dim = vectors.front().dimension();
  for (const auto& v : vectors) {
    if (v.dimension() != dim) throw SizeMismatch("vectors of different dimension");
  }
  return dim;
}

}  // namespace detail

/// Span of `vectors`; `dimension` is used only when the list is empty.
template <typename Scalar>
Subspace<Scalar> span(const std::vector<SparseVector<Scalar>>& vectors, std::size_t dimension = 0) {
  EchelonBuilder<Scalar> builder(detail::common_dimension(vectors, dimension));
  for (const auto& v : vectors) builder.add(v);
  return std::move(builder).finish();
}

template <typename Scalar>
std::size_t rank(const std::vector<SparseVector<Scalar>>& vectors) {
  EchelonBuilder<Scalar> builder(detail::common_dimension(vectors, 0));
  for (const auto& v : vectors) builder.add(v);
  return builder.rank();
}

template <typename Scalar>
bool contains(const Subspace<Scalar>& space, const SparseVector<Scalar>& v) {
  return space.contains(v);
}

/// Kernel of the linear map whose matrix has the given rows, as a subspace of
/// the `columns`-dimensional domain.
template <typename Scalar>
Subspace<Scalar> nullspace(const std::vector<SparseVector<Scalar>>& rows, std::size_t columns, const Scalar& one) {
  EchelonBuilder<Scalar> builder(detail::common_dimension(rows, columns));
  if (builder.dimension() != columns) throw SizeMismatch("row dimension differs from column count");
  for (const auto& r : rows) builder.add(r);
  const auto rref = std::move(builder).finish();

  std::vector<bool> is_pivot(columns, false);
  for (auto p : rref.pivots()) is_pivot[p] = true;
  // Kernel vector for free column f: x_f = 1, x_p = -R_p[f] for each pivot row p.
  std::vector<std::vector<SparseEntry<Scalar>>> kernel_entries(columns);
  for (std::size_t f = 0; f < columns; ++f) {
    if (!is_pivot[f]) kernel_entries[f].push_back({f, one});
  }
  for (std::size_t r = 0; r < rref.dimension(); ++r) {
    const auto& row = rref.basis()[r];
    const auto pivot = rref.pivots()[r];
    for (std::size_t k = 1; k < row.nnz(); ++k) {
      const auto& e = row.entries()[k];
      kernel_entries[e.index].push_back({pivot, -e.value});
    }
  }
  std::vector<SparseVector<Scalar>> kernel;
  for (std::size_t f = 0; f < columns; ++f) {
    if (!is_pivot[f]) kernel.push_back(SparseVector<Scalar>::from_entries(columns, std::move(kernel_entries[f])));
  }
  return span(kernel, columns);
}

enum class SolveStatus { Unique, NoSolution, NonUnique };

inline const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Unique: return "UNIQUE";
    case SolveStatus::NoSolution: return "NO_SOLUTION";
    case SolveStatus::NonUnique: return "NON_UNIQUE";
  }
  return "?";
}

template <typename Scalar>
struct SolveResult {
  SolveStatus status;
  /// Set only when status == Unique: the combination of the unknowns basis.
  std::optional<SparseVector<Scalar>> solution;
  /// Coefficients against the unknowns basis, when unique.
  std::vector<Scalar> coefficients;
};

template <typename Scalar>
struct AffineConstraint {
  SparseVector<Scalar> functional;
  Scalar value;
};

/// Finds x = sum_k c_k * basis[k] with <functional_j, x> = value_j for all j.
/// Inconsistency takes precedence over non-uniqueness in the reported status.
template <typename Scalar>
SolveResult<Scalar> solve_affine(const std::vector<AffineConstraint<Scalar>>& constraints,
                                 const std::vector<SparseVector<Scalar>>& basis, std::size_t ambient_dimension) {
  const std::size_t unknowns = basis.size();
  for (const auto& b : basis) {
    if (b.dimension() != ambient_dimension) throw SizeMismatch("unknowns basis dimension mismatch");
  }
  EchelonBuilder<Scalar> builder(unknowns + 1);
  for (const auto& c : constraints) {
    if (c.functional.dimension() != ambient_dimension) throw SizeMismatch("constraint dimension mismatch");
    std::vector<SparseEntry<Scalar>> row;
    for (std::size_t k = 0; k < unknowns; ++k) {
      auto v = dot(c.functional, basis[k]);
      if (!detail::vanishes(v)) row.push_back({k, std::move(v)});
    }
    if (!is_zero(c.value)) row.push_back({unknowns, c.value});
    builder.add(SparseVector<Scalar>::from_entries(unknowns + 1, std::move(row)));
  }
  const auto rref = std::move(builder).finish();
  SolveResult<Scalar> result{SolveStatus::Unique, std::nullopt, {}};
  if (!rref.pivots().empty() && rref.pivots().back() == unknowns) {
    result.status = SolveStatus::NoSolution;
    return result;
  }
  if (rref.dimension() < unknowns) {
    result.status = SolveStatus::NonUnique;
    return result;
  }
  SparseVector<Scalar> x(ambient_dimension);
  result.coefficients.resize(unknowns);
  for (std::size_t k = 0; k < unknowns; ++k) {
    const Scalar* c = rref.basis()[k].find(unknowns);
    if (c) {
      result.coefficients[k] = *c;
      x.axpy(*c, basis[k]);
    }
  }
  result.solution = std::move(x);
  return result;
}

/// Applies `fn` to every stored entry, dropping results that vanish.
template <typename To, typename From, typename Fn>
SparseVector<To> map_scalar(const SparseVector<From>& v, Fn&& fn) {
  std::vector<SparseEntry<To>> entries;
  entries.reserve(v.nnz());
  for (const auto& e : v.entries()) entries.push_back({e.index, fn(e.value)});
  return SparseVector<To>::from_entries(v.dimension(), std::move(entries));
}

}  // namespace nilhecke
