#include "nilhecke/serialize.hpp"

namespace nilhecke {

Json rational_json(const Rational& x) { return x.str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  return Rational::parse(j.get<std::string>());
}

Json permutation_json(const Permutation& w) {
  Json out = Json::array();
  for (int v : w.one_line()) out.push_back(v);
  return out;
}

Permutation permutation_from_json(const Json& j) { return Permutation::from_one_line(j.get<std::vector<int>>()); }

Json word_json(const Permutation& w) {
  Json out = Json::array();
  for (int letter : reduced_word(w)) out.push_back(letter);
  return out;
}

Permutation permutation_from_word_json(const Json& j, int n) {
  const auto word = j.get<Word>();
  auto w = evaluate(word, n);
  if (static_cast<std::size_t>(length(w)) != word.size()) {
    throw std::invalid_argument("word " + to_string(word) + " is not reduced");
  }
  return w;
}

Json partition_json(const Partition& p) { return Json(p); }

Json algebra_params_json(const AlgebraParams& params) {
  if (params.is_preset()) return params.name();
  return Json{{"a", params.a.str()}, {"b", params.b.str()}};
}

AlgebraParams algebra_params_from_json(const Json& j) {
  if (j.is_string()) {
    const auto name = j.get<std::string>();
    if (name.find(',') != std::string::npos) throw std::invalid_argument("unknown algebra '" + name + "'");
    return AlgebraParams::parse(name);
  }
  return {rational_from_json(j.at("a")), rational_from_json(j.at("b"))};
}

Json algebra_element_json(const AlgebraElement& x) {
  Json terms = Json::array();
  for (const auto& [w, c] : x.terms()) terms.push_back(Json{{"word", word_json(w)}, {"coeff", c.str()}});
  return Json{{"n", x.strands()}, {"algebra", algebra_params_json(x.params())}, {"terms", std::move(terms)}};
}

AlgebraElement algebra_element_from_json(const Json& j) {
  const int n = j.at("n").get<int>();
  AlgebraElement x(n, algebra_params_from_json(j.at("algebra")));
  for (const auto& t : j.at("terms")) {
    auto term = AlgebraElement::basis(n, x.params(), permutation_from_word_json(t.at("word"), n));
    term *= rational_from_json(t.at("coeff"));
    x += term;
  }
  return x;
}

Json mobius_classes_json(const MobiusClasses& classes) {
  const bool graded = classes.params.is_nilcoxeter();
  Json list = Json::array();
  for (const auto& c : classes.classes) {
    Json members = Json::array();
    for (const auto& w : c.members) members.push_back(word_json(w));
    Json entry{{"representative", word_json(c.representative)}, {"members", std::move(members)}};
    if (graded) {
      entry["cycle_type"] = partition_json(cycle_type(c.representative));
      entry["length"] = length(c.representative);
    }
    list.push_back(std::move(entry));
  }
  Json zero = nullptr;
  if (classes.zero_class) {
    zero = Json::array();
    for (const auto& w : *classes.zero_class) zero.push_back(word_json(w));
  }
  return Json{{"n", classes.n},
              {"algebra", algebra_params_json(classes.params)},
              {"classes", std::move(list)},
              {"zero_class", std::move(zero)}};
}

Json center_basis_json(const CenterBasis& basis) {
  Json elements = Json::array();
  for (const auto& e : basis.elements) {
    const int degree = e.element.homogeneous_degree();
    elements.push_back(Json{{"label", word_json(e.label)},
                            {"degree", degree >= 0 ? Json(degree) : Json(nullptr)},
                            {"element", algebra_element_json(e.element)}});
  }
  const auto id = basis.identity_position();
  return Json{{"n", basis.n},
              {"algebra", algebra_params_json(basis.params)},
              {"elements", std::move(elements)},
              {"identity_index", id ? Json(*id) : Json(nullptr)}};
}

Json multiplication_table_json(const CenterBasis& basis, const MultiplicationTable& table) {
  Json labels = Json::array();
  for (const auto& e : basis.elements) labels.push_back(word_json(e.label));
  Json rows = Json::array();
  for (std::size_t i = 0; i < table.size; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < table.size; ++j) {
      Json coords = Json::array();
      const auto& v = table(i, j);
      for (Eigen::Index k = 0; k < v.size(); ++k) coords.push_back(v(k).str());
      row.push_back(std::move(coords));
    }
    rows.push_back(std::move(row));
  }
  return Json{{"n", basis.n},
              {"algebra", algebra_params_json(basis.params)},
              {"labels", std::move(labels)},
              {"table", std::move(rows)}};
}

Json conjecture_json(const ConjectureReport& report) {
  Json classes = Json::array();
  for (const auto& c : report.classes) {
    Json coefficients = Json::array();
    for (const auto& cc : c.complement_coefficients) {
      coefficients.push_back(Json{{"word", word_json(cc.complement)}, {"coeff", cc.coefficient.str()}});
    }
    Json members = Json::array();
    for (const auto& w : c.members) members.push_back(word_json(w));
    classes.push_back(Json{{"representative", word_json(c.representative)},
                           {"members", std::move(members)},
                           {"dual_element", algebra_element_json(c.dual_element)},
                           {"support_in_complements", c.support_in_complements},
                           {"complement_coefficients", std::move(coefficients)},
                           {"integer_coefficients", c.integer_coefficients}});
  }
  return Json{{"n", report.n},
              {"classes", std::move(classes)},
              {"unique_complement_per_crossing_number", report.unique_complement_per_crossing_number}};
}

}  // namespace nilhecke
