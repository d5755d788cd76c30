#include "nilhecke/quotients.hpp"

#include <algorithm>

#include "nilhecke/union_find.hpp"

namespace nilhecke {

namespace {

std::vector<RationalSparse> commutator_like(int n, const AlgebraParams& params, bool twisted) {
  const auto& group = symmetric_group(n);
  std::vector<RationalSparse> out;
  out.reserve(group.order() * static_cast<std::size_t>(std::max(n - 1, 0)));
  for (int i = 1; i < n; ++i) {
    const int j = twisted ? n - i : i;
    for (std::size_t w = 0; w < group.order(); ++w) {
      auto v = generator_times_basis(group, params, i, w);
      v.axpy(Rational(-1), basis_times_generator(group, params, w, j));
      if (!v.is_zero()) out.push_back(std::move(v));
    }
  }
  return out;
}

// Node of a product that is zero or a single basis element with coefficient 1.
std::size_t single_term_node(const RationalSparse& v, std::size_t zero_node, const AlgebraParams& params) {
  if (v.is_zero()) return zero_node;
  if (v.nnz() != 1 || v.entries().front().value != Rational(1)) {
    throw UnsupportedParams("Möbius classes need products that are single basis elements or zero; "
                            "parameters " + params.name() + " produce linear combinations");
  }
  return v.entries().front().index;
}

bool shortlex_less(const SymmetricGroup& group, std::size_t a, std::size_t b) {
  if (group.length(a) != group.length(b)) return group.length(a) < group.length(b);
  return a < b;
}

}  // namespace

std::vector<RationalSparse> twisted_commutator_generators(int n, const AlgebraParams& params) {
  return commutator_like(n, params, true);
}

std::vector<RationalSparse> commutator_generators(int n, const AlgebraParams& params) {
  return commutator_like(n, params, false);
}

Subspace<Rational> twisted_commutator_span(int n, const AlgebraParams& params) {
  return span(twisted_commutator_generators(n, params), symmetric_group(n).order());
}

Subspace<Rational> commutator_span(int n, const AlgebraParams& params) {
  return span(commutator_generators(n, params), symmetric_group(n).order());
}

Subspace<Rational> twisted_commutator_span_all_pairs(int n, const AlgebraParams& params) {
  const auto& group = symmetric_group(n);
  EchelonBuilder<Rational> builder(group.order());
  for (std::size_t u = 0; u < group.order(); ++u) {
    const AlgebraElement tu(n, params, RationalSparse::unit(group.order(), u, Rational(1)));
    const auto ftu = involve(tu);
    for (std::size_t v = 0; v < group.order(); ++v) {
      const AlgebraElement tv(n, params, RationalSparse::unit(group.order(), v, Rational(1)));
      builder.add((mul(tu, tv) - mul(tv, ftu)).coordinates());
    }
  }
  return std::move(builder).finish();
}

std::size_t quotient_dim(int n, const AlgebraParams& params, bool twisted) {
  const auto space = twisted ? twisted_commutator_span(n, params) : commutator_span(n, params);
  return space.codimension();
}

MobiusClasses mobius_classes(int n, const AlgebraParams& params) {
  const auto& group = symmetric_group(n);
  const std::size_t zero = group.order();
  DisjointSets sets(group.order() + 1);
  bool saw_zero = false;
  for (int i = 1; i < n; ++i) {
    for (std::size_t w = 0; w < group.order(); ++w) {
      const auto left = single_term_node(generator_times_basis(group, params, i, w), zero, params);
      const auto right = single_term_node(basis_times_generator(group, params, w, n - i), zero, params);
      saw_zero = saw_zero || left == zero || right == zero;
      sets.merge(left, right);
    }
  }

  std::vector<std::vector<std::size_t>> buckets(group.order() + 1);
  for (std::size_t w = 0; w < group.order(); ++w) buckets[sets.find(w)].push_back(w);
  const auto zero_root = sets.find(zero);

  MobiusClasses result{n, params, {}, std::nullopt};
  const auto to_perms = [&](std::vector<std::size_t> idx) {
    std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return shortlex_less(group, a, b); });
    std::vector<Permutation> out;
    out.reserve(idx.size());
    for (auto k : idx) out.push_back(group.element(k));
    return out;
  };
  if (saw_zero) result.zero_class = to_perms(buckets[zero_root]);

  std::vector<std::vector<std::size_t>> nonzero;
  for (std::size_t root = 0; root <= group.order(); ++root) {
    if (root == zero_root || buckets[root].empty()) continue;
    auto& b = buckets[root];
    std::sort(b.begin(), b.end(), [&](auto x, auto y) { return shortlex_less(group, x, y); });
    nonzero.push_back(std::move(b));
  }
  std::sort(nonzero.begin(), nonzero.end(),
            [&](const auto& x, const auto& y) { return shortlex_less(group, x.front(), y.front()); });
  for (auto& members : nonzero) {
    MobiusClass c{group.element(members.front()), to_perms(members)};
    result.classes.push_back(std::move(c));
  }
  return result;
}

Partition cycle_type(const Permutation& w) {
  const int n = w.size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  Partition parts;
  for (int start = 1; start <= n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    int len = 0;
    for (int p = start; !seen[static_cast<std::size_t>(p)]; p = n + 1 - w(p)) {
      seen[static_cast<std::size_t>(p)] = true;
      ++len;
    }
    parts.push_back(len);
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return parts;
}

std::map<Partition, std::size_t> class_census(int n, const AlgebraParams& params) {
  if (!params.is_nilcoxeter()) {
    throw UnsupportedParams("class census is graded by cycle type only for the Nilcoxeter algebra, not " +
                            params.name());
  }
  std::map<Partition, std::size_t> census;
  for (const auto& c : mobius_classes(n, params).classes) ++census[cycle_type(c.representative)];
  return census;
}

}  // namespace nilhecke
