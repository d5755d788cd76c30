#pragma once

// Test-only reference computations. Everything here is written against
// Permutation and Rational alone, independently of the lookup tables,
// sparse elimination and AlgebraElement machinery under test.

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "nilhecke/eigen.hpp"
#include "nilhecke/perm.hpp"
#include "nilhecke/rational.hpp"

namespace oracle {

using nilhecke::Permutation;
using nilhecke::Rational;
using Terms = std::map<Permutation, Rational>;

inline std::vector<Permutation> all_permutations(int n) {
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_one_line(image));
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

inline int inversions(const Permutation& w) {
  int c = 0;
  for (int x = 1; x <= w.size(); ++x) {
    for (int y = x + 1; y <= w.size(); ++y) c += w(x) > w(y) ? 1 : 0;
  }
  return c;
}

/// Some reduced word, found by repeatedly stripping a right descent (w(i) > w(i+1)).
inline std::vector<int> any_reduced_word(Permutation w) {
  std::vector<int> rev;
  for (bool again = true; again;) {
    again = false;
    for (int i = w.size() - 1; i >= 1; --i) {
      if (w(i) > w(i + 1)) {
        w = nilhecke::compose(w, Permutation::generator(w.size(), i));
        rev.push_back(i);
        again = true;
        break;
      }
    }
  }
  return {rev.rbegin(), rev.rend()};
}

inline void add_term(Terms& t, const Permutation& w, const Rational& c) {
  if (c.is_zero()) return;
  auto& slot = t[w];
  slot += c;
  if (slot.is_zero()) t.erase(w);
}

/// T_i applied on the left of a combination, by the defining two-case rule.
inline Terms left_generator(int i, const Terms& x, const Rational& a, const Rational& b) {
  Terms out;
  for (const auto& [w, c] : x) {
    const auto sw = nilhecke::compose(Permutation::generator(w.size(), i), w);
    if (inversions(sw) > inversions(w)) {
      add_term(out, sw, c);
    } else {
      add_term(out, w, a * c);
      add_term(out, sw, b * c);
    }
  }
  return out;
}

/// T_u T_v from the left rule applied along a reduced word of u.
inline Terms product(const Permutation& u, const Permutation& v, const Rational& a, const Rational& b) {
  Terms x{{v, Rational(1)}};
  const auto word = any_reduced_word(u);
  for (auto it = word.rbegin(); it != word.rend(); ++it) x = left_generator(*it, x, a, b);
  return x;
}

inline Terms product(const Terms& x, const Terms& y, const Rational& a, const Rational& b) {
  Terms out;
  for (const auto& [u, cu] : x) {
    for (const auto& [v, cv] : y) {
      for (const auto& [w, c] : product(u, v, a, b)) add_term(out, w, cu * cv * c);
    }
  }
  return out;
}

/// Textbook row reduction over the rationals on a dense Eigen matrix.
inline std::size_t dense_rank(nilhecke::RationalMatrix m) {
  std::size_t rank = 0;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = row; r < m.rows(); ++r) {
      if (!m(r, col).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    m.row(pivot).swap(m.row(row));
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Rational f = m(r, col) / m(row, col);
      for (Eigen::Index c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    ++row;
    ++rank;
  }
  return rank;
}

/// Dense rows indexed by the lexicographic position of each permutation.
inline nilhecke::RationalMatrix to_dense(const std::vector<Terms>& rows, int n) {
  const auto perms = all_permutations(n);
  std::map<Permutation, Eigen::Index> index;
  for (std::size_t k = 0; k < perms.size(); ++k) index[perms[k]] = static_cast<Eigen::Index>(k);
  nilhecke::RationalMatrix m =
      nilhecke::RationalMatrix::Constant(static_cast<Eigen::Index>(rows.size()),
                                         static_cast<Eigen::Index>(perms.size()), Rational(0));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const auto& [w, c] : rows[r]) m(static_cast<Eigen::Index>(r), index.at(w)) = c;
  }
  return m;
}

inline Terms difference(Terms x, const Terms& y) {
  for (const auto& [w, c] : y) add_term(x, w, -c);
  return x;
}

}  // namespace oracle
