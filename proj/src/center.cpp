#include "nilhecke/center.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace nilhecke {

namespace {

// Kernel of z -> (T_{left(i)} z - z T_i)_i, where left(i) is i or n - i.
Subspace<Rational> generator_commutant(int n, const AlgebraParams& params, bool twisted) {
  const auto& group = symmetric_group(n);
  const std::size_t order = group.order();
  if (n == 1) return span(std::vector<RationalSparse>{RationalSparse::unit(1, 0, Rational(1))});

  std::vector<std::vector<SparseEntry<Rational>>> rows(order * static_cast<std::size_t>(n - 1));
  for (int i = 1; i < n; ++i) {
    const int left = twisted ? n - i : i;
    const auto block = static_cast<std::size_t>(i - 1) * order;
    for (std::size_t w = 0; w < order; ++w) {
      auto column = generator_times_basis(group, params, left, w);
      column.axpy(Rational(-1), basis_times_generator(group, params, w, i));
      for (const auto& e : column.entries()) rows[block + e.index].push_back({w, e.value});
    }
  }
  std::vector<RationalSparse> equations;
  for (auto& r : rows) {
    if (!r.empty()) equations.push_back(RationalSparse::from_entries(order, std::move(r)));
  }
  return nullspace(equations, order, Rational(1));
}

// Rows of the trace pairing as sparse functionals: row w holds trace(T_w T_v).
std::vector<RationalSparse> pairing_rows(int n, const AlgebraParams& params) {
  const auto& group = symmetric_group(n);
  const auto gram = gram_matrix(n, params);
  std::vector<RationalSparse> rows;
  rows.reserve(group.order());
  for (Eigen::Index u = 0; u < gram.rows(); ++u) {
    std::vector<SparseEntry<Rational>> entries;
    for (Eigen::Index v = 0; v < gram.cols(); ++v) {
      if (!gram(u, v).is_zero()) entries.push_back({static_cast<std::size_t>(v), gram(u, v)});
    }
    rows.push_back(RationalSparse::from_entries(group.order(), std::move(entries)));
  }
  return rows;
}

CenterBasis solve_dual_basis(int n, const AlgebraParams& params, const std::vector<RationalSparse>& pairing,
                             const MobiusClasses& classes) {
  const auto& group = symmetric_group(n);
  const auto z = center(n, params);
  CenterBasis basis{n, params, {}};
  for (const auto& c : classes.classes) {
    std::vector<bool> in_class(group.order(), false);
    for (const auto& w : c.members) in_class[group.index_of(w)] = true;
    std::vector<AffineConstraint<Rational>> constraints;
    constraints.reserve(group.order());
    for (std::size_t w = 0; w < group.order(); ++w) {
      constraints.push_back({pairing[w], Rational(in_class[w] ? 1 : 0)});
    }
    auto result = solve_affine(constraints, z.basis(), group.order());
    if (result.status != SolveStatus::Unique) {
      std::ostringstream os;
      os << "dual element for class " << to_string(c.representative) << " of " << params.name() << " on " << n
         << " strands: " << to_string(result.status) << " (center dimension " << z.dimension() << ", "
         << classes.classes.size() << " classes)";
      throw DualityViolation(os.str());
    }
    basis.elements.push_back({c.representative, AlgebraElement(n, params, std::move(*result.solution))});
  }
  return basis;
}

}  // namespace

Subspace<Rational> center(int n, const AlgebraParams& params) { return generator_commutant(n, params, false); }

Subspace<Rational> twisted_center(int n, const AlgebraParams& params) {
  return generator_commutant(n, params, true);
}

std::optional<std::size_t> CenterBasis::identity_position() const {
  const auto unit = AlgebraElement::unit(n, params);
  for (std::size_t k = 0; k < elements.size(); ++k) {
    if (elements[k].element == unit) return k;
  }
  return std::nullopt;
}

CenterBasis nc_center_basis(int n) {
  const auto params = AlgebraParams::nilcoxeter();
  const auto& group = symmetric_group(n);
  const auto classes = mobius_classes(n, params);
  CenterBasis basis{n, params, {}};
  for (const auto& c : classes.classes) {
    std::vector<SparseEntry<Rational>> terms;
    for (const auto& w : c.members) {
      const auto complement = group.index_of(compose(w.inverse(), longest_element(n)));
      terms.push_back({complement, Rational(1)});
    }
    basis.elements.push_back(
        {c.representative, AlgebraElement(n, params, RationalSparse::from_entries(group.order(), std::move(terms)))});
  }
  return basis;
}

CenterBasis dual_center_basis(int n, const AlgebraParams& params) {
  if (!params.is_nilcoxeter() && !params.is_zero_hecke()) {
    throw UnsupportedParams("dual center basis is defined for nilcoxeter and 0-hecke, not " + params.name());
  }
  return solve_dual_basis(n, params, pairing_rows(n, params), mobius_classes(n, params));
}

MultiplicationTable multiplication_table(const CenterBasis& basis) {
  const int n = basis.n;
  const auto order = symmetric_group(n).order();
  const std::size_t k = basis.elements.size();
  std::vector<RationalSparse> vectors;
  vectors.reserve(k);
  for (const auto& e : basis.elements) vectors.push_back(e.element.coordinates());
  std::vector<RationalSparse> units;
  units.reserve(order);
  for (std::size_t u = 0; u < order; ++u) units.push_back(RationalSparse::unit(order, u, Rational(1)));

  MultiplicationTable table{k, {}};
  table.entries.reserve(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const auto product = mul(basis.elements[i].element, basis.elements[j].element);
      std::vector<AffineConstraint<Rational>> constraints;
      constraints.reserve(order);
      for (std::size_t u = 0; u < order; ++u) {
        const Rational* c = product.coordinates().find(u);
        constraints.push_back({units[u], c ? *c : Rational(0)});
      }
      const auto result = solve_affine(constraints, vectors, order);
      if (result.status != SolveStatus::Unique) {
        throw InternalInconsistency("product of center basis elements " + std::to_string(i) + " and " +
                                    std::to_string(j) + " has no unique coordinates: " +
                                    to_string(result.status));
      }
      RationalVector coords(static_cast<Eigen::Index>(k));
      for (std::size_t c = 0; c < k; ++c) coords(static_cast<Eigen::Index>(c)) = result.coefficients[c];
      table.entries.push_back(std::move(coords));
    }
  }
  return table;
}

ConjectureReport verify_hn_conjecture(int n) {
  const auto params = AlgebraParams::zero_hecke();
  const auto& group = symmetric_group(n);
  const auto pairing = pairing_rows(n, params);
  const auto classes = mobius_classes(n, params);
  const auto basis = solve_dual_basis(n, params, pairing, classes);

  const auto complements_of = [&](std::size_t w) {
    std::vector<std::size_t> out;
    for (const auto& e : pairing[w].entries()) {
      if (e.value == Rational(1)) out.push_back(e.index);
    }
    return out;
  };

  ConjectureReport report{n, {}, true};
  for (std::size_t w = 0; w < group.order(); ++w) {
    std::set<int> lengths;
    for (auto beta : complements_of(w)) {
      if (!lengths.insert(group.length(beta)).second) report.unique_complement_per_crossing_number = false;
    }
  }

  for (std::size_t k = 0; k < classes.classes.size(); ++k) {
    const auto& c = classes.classes[k];
    const auto& z = basis.elements[k].element;
    std::set<std::size_t> complement_set;
    for (const auto& w : c.members) {
      for (auto beta : complements_of(group.index_of(w))) complement_set.insert(beta);
    }
    bool supported = true;
    bool integral = true;
    for (const auto& e : z.coordinates().entries()) {
      if (!complement_set.count(e.index)) supported = false;
      if (!e.value.is_integer()) integral = false;
    }
    std::vector<std::size_t> ordered(complement_set.begin(), complement_set.end());
    std::stable_sort(ordered.begin(), ordered.end(),
                     [&](auto a, auto b) { return group.length(a) < group.length(b); });
    std::vector<ComplementCoefficient> coefficients;
    for (auto beta : ordered) {
      const Rational* v = z.coordinates().find(beta);
      coefficients.push_back({group.element(beta), v ? *v : Rational(0)});
    }
    report.classes.push_back({c.representative, c.members, z, supported, std::move(coefficients), integral});
  }
  return report;
}

}  // namespace nilhecke
