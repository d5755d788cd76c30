#pragma once

// JSON wire formats. Rationals travel as "p/q" strings, permutations as
// one-line arrays, basis elements as their canonical reduced words.

#include <json.hpp>

#include "nilhecke/algebra.hpp"
#include "nilhecke/center.hpp"
#include "nilhecke/quotients.hpp"

namespace nilhecke {

using Json = nlohmann::ordered_json;

Json rational_json(const Rational& x);
Rational rational_from_json(const Json& j);

Json permutation_json(const Permutation& w);
Permutation permutation_from_json(const Json& j);

/// Canonical reduced word of `w`.
Json word_json(const Permutation& w);
/// Inverse of word_json; rejects words that are not reduced.
Permutation permutation_from_word_json(const Json& j, int n);

Json partition_json(const Partition& p);

/// "nilcoxeter" | "0-hecke" | "group" | {"a": "p/q", "b": "p/q"}.
Json algebra_params_json(const AlgebraParams& params);
AlgebraParams algebra_params_from_json(const Json& j);

/// {"n", "algebra", "terms": [{"word", "coeff"}]}, terms in lexicographic order of w.
Json algebra_element_json(const AlgebraElement& x);
AlgebraElement algebra_element_from_json(const Json& j);

/// {"n", "algebra", "classes": [...], "zero_class": [...] | null}. Cycle type
/// and length appear per class only for the Nilcoxeter algebra.
Json mobius_classes_json(const MobiusClasses& classes);

Json center_basis_json(const CenterBasis& basis);
Json multiplication_table_json(const CenterBasis& basis, const MultiplicationTable& table);

/// {"n", "classes": [{"representative", "dual_element", "support_in_complements",
///  "complement_coefficients", ...}], "unique_complement_per_crossing_number"}.
Json conjecture_json(const ConjectureReport& report);

}  // namespace nilhecke
