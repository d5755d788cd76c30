#include "nilhecke/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace nilhecke {

AlgebraParams AlgebraParams::parse(std::string_view text) {
  if (text == "nilcoxeter") return nilcoxeter();
  if (text == "0-hecke") return zero_hecke();
  if (text == "group") return group_algebra();
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) {
    throw std::invalid_argument("unknown algebra '" + std::string(text) +
                                "' (expected nilcoxeter, 0-hecke, group or a,b)");
  }
  return {Rational::parse(text.substr(0, comma)), Rational::parse(text.substr(comma + 1))};
}

std::string AlgebraParams::name() const {
  if (is_nilcoxeter()) return "nilcoxeter";
  if (is_zero_hecke()) return "0-hecke";
  if (is_group_algebra()) return "group";
  return a.str() + "," + b.str();
}

AlgebraElement::AlgebraElement(int n, AlgebraParams params)
    : n_(n), params_(std::move(params)), coords_(symmetric_group(n).order()) {}

AlgebraElement::AlgebraElement(int n, AlgebraParams params, RationalSparse coordinates)
    : n_(n), params_(std::move(params)), coords_(std::move(coordinates)) {
  if (coords_.dimension() != symmetric_group(n).order()) {
    throw SizeMismatch("coordinate vector of dimension " + std::to_string(coords_.dimension()) +
                       " does not match " + std::to_string(n) + "!");
  }
}

AlgebraElement AlgebraElement::basis(int n, const AlgebraParams& params, const Permutation& w) {
  const auto& group = symmetric_group(n);
  return AlgebraElement(n, params, RationalSparse::unit(group.order(), group.index_of(w), Rational(1)));
}

AlgebraElement AlgebraElement::generator_product(int n, const AlgebraParams& params, const Word& word) {
  auto x = unit(n, params);
  for (auto it = word.rbegin(); it != word.rend(); ++it) x = mul_left_generator(*it, x);
  return x;
}

std::vector<std::pair<Permutation, Rational>> AlgebraElement::terms() const {
  const auto& group = symmetric_group(n_);
  std::vector<std::pair<Permutation, Rational>> out;
  out.reserve(coords_.nnz());
  for (const auto& e : coords_.entries()) out.emplace_back(group.element(e.index), e.value);
  return out;
}

Rational AlgebraElement::coefficient(const Permutation& w) const {
  const Rational* c = coords_.find(symmetric_group(n_).index_of(w));
  return c ? *c : Rational(0);
}

int AlgebraElement::homogeneous_degree() const {
  if (coords_.is_zero()) return -1;
  const auto& group = symmetric_group(n_);
  const int d = group.length(coords_.leading_index());
  for (const auto& e : coords_.entries()) {
    if (group.length(e.index) != d) return -1;
  }
  return d;
}

namespace {

void check_compatible(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.strands() != y.strands()) throw SizeMismatch("algebra elements on different numbers of strands");
  if (!(x.params() == y.params())) {
    throw AlgebraMismatch("algebra elements with parameters " + x.params().name() + " and " +
                          y.params().name());
  }
}

void check_generator_index(int n, int i) {
  if (i < 1 || i > n - 1) {
    throw IndexOutOfRange("generator index " + std::to_string(i) + " outside 1.." + std::to_string(n - 1));
  }
}

}  // namespace

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  check_compatible(*this, o);
  coords_.axpy(Rational(1), o.coords_);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  check_compatible(*this, o);
  coords_.axpy(Rational(-1), o.coords_);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& c) {
  coords_.scale(c);
  return *this;
}

std::string AlgebraElement::str() const {
  if (is_zero()) return "0";
  const auto& group = symmetric_group(n_);
  std::ostringstream os;
  bool first = true;
  for (const auto& e : coords_.entries()) {
    const auto& c = e.value;
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0) os << "-";
    first = false;
    const auto mag = abs(c);
    if (mag != Rational(1)) os << mag << "*";
    os << "T[" << to_string(group.reduced_word(e.index)) << "]";
  }
  return os.str();
}

RationalSparse generator_times_basis(const SymmetricGroup& group, const AlgebraParams& params, int i,
                                     std::size_t w) {
  const auto sw = group.left_mul(i, w);
  if (group.length(sw) > group.length(w)) return RationalSparse::unit(group.order(), sw, Rational(1));
  return RationalSparse::from_entries(group.order(), {{w, params.a}, {sw, params.b}});
}

RationalSparse basis_times_generator(const SymmetricGroup& group, const AlgebraParams& params, std::size_t w,
                                     int i) {
  const auto ws = group.right_mul(w, i);
  if (group.length(ws) > group.length(w)) return RationalSparse::unit(group.order(), ws, Rational(1));
  return RationalSparse::from_entries(group.order(), {{w, params.a}, {ws, params.b}});
}

AlgebraElement mul_left_generator(int i, const AlgebraElement& x) {
  check_generator_index(x.strands(), i);
  const auto& group = symmetric_group(x.strands());
  const auto& p = x.params();
  std::vector<SparseEntry<Rational>> out;
  out.reserve(2 * x.coordinates().nnz());
  for (const auto& e : x.coordinates().entries()) {
    const auto sw = group.left_mul(i, e.index);
    if (group.length(sw) > group.length(e.index)) {
      out.push_back({sw, e.value});
    } else {
      if (!p.a.is_zero()) out.push_back({e.index, p.a * e.value});
      if (!p.b.is_zero()) out.push_back({sw, p.b * e.value});
    }
  }
  return AlgebraElement(x.strands(), p, RationalSparse::from_entries(group.order(), std::move(out)));
}

AlgebraElement mul_right_generator(const AlgebraElement& x, int i) {
  check_generator_index(x.strands(), i);
  const auto& group = symmetric_group(x.strands());
  const auto& p = x.params();
  std::vector<SparseEntry<Rational>> out;
  out.reserve(2 * x.coordinates().nnz());
  for (const auto& e : x.coordinates().entries()) {
    const auto ws = group.right_mul(e.index, i);
    if (group.length(ws) > group.length(e.index)) {
      out.push_back({ws, e.value});
    } else {
      if (!p.a.is_zero()) out.push_back({e.index, p.a * e.value});
      if (!p.b.is_zero()) out.push_back({ws, p.b * e.value});
    }
  }
  return AlgebraElement(x.strands(), p, RationalSparse::from_entries(group.order(), std::move(out)));
}

AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y) {
  check_compatible(x, y);
  const auto& group = symmetric_group(x.strands());
  AlgebraElement result(x.strands(), x.params());
  for (const auto& e : x.coordinates().entries()) {
    // T_u = T_{i_1} ... T_{i_k} for a reduced word of u.
    const auto word = group.reduced_word(e.index);
    AlgebraElement partial = y;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      partial = mul_left_generator(*it, partial);
      if (partial.is_zero()) break;
    }
    partial *= e.value;
    result += partial;
  }
  return result;
}

Rational trace(const AlgebraElement& x) {
  const Rational* c = x.coordinates().find(symmetric_group(x.strands()).longest_index());
  return c ? *c : Rational(0);
}

AlgebraElement involve(const AlgebraElement& x) {
  const auto& group = symmetric_group(x.strands());
  std::vector<SparseEntry<Rational>> out;
  out.reserve(x.coordinates().nnz());
  for (const auto& e : x.coordinates().entries()) out.push_back({group.conjugate_by_w0(e.index), e.value});
  return AlgebraElement(x.strands(), x.params(), RationalSparse::from_entries(group.order(), std::move(out)));
}

std::vector<Permutation> right_complements(const Permutation& w, const AlgebraParams& params) {
  const int n = w.size();
  const auto& group = symmetric_group(n);
  const auto tw = AlgebraElement::basis(n, params, w);
  std::vector<std::size_t> found;
  for (std::size_t beta = 0; beta < group.order(); ++beta) {
    const AlgebraElement tb(n, params, RationalSparse::unit(group.order(), beta, Rational(1)));
    if (trace(mul(tw, tb)) == Rational(1)) found.push_back(beta);
  }
  std::stable_sort(found.begin(), found.end(),
                   [&](std::size_t u, std::size_t v) { return group.length(u) < group.length(v); });
  std::vector<Permutation> out;
  out.reserve(found.size());
  for (auto idx : found) out.push_back(group.element(idx));
  return out;
}

RationalMatrix gram_matrix(int n, const AlgebraParams& params) {
  const auto& group = symmetric_group(n);
  const auto order = static_cast<Eigen::Index>(group.order());
  RationalMatrix g = RationalMatrix::Constant(order, order, Rational(0));
  for (std::size_t u = 0; u < group.order(); ++u) {
    const AlgebraElement tu(n, params, RationalSparse::unit(group.order(), u, Rational(1)));
    for (std::size_t v = 0; v < group.order(); ++v) {
      const AlgebraElement tv(n, params, RationalSparse::unit(group.order(), v, Rational(1)));
      g(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v)) = trace(mul(tu, tv));
    }
  }
  return g;
}

bool RelationReport::all_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const RelationCheck& c) { return c.holds; });
}

RelationReport check_defining_relations(int n, const AlgebraParams& params) {
  RelationReport report{n, params, {}};
  const auto gen = [&](const Word& w) { return AlgebraElement::generator_product(n, params, w); };
  const auto t = [](int i) { return "T" + std::to_string(i); };
  for (int i = 1; i < n; ++i) {
    const auto lhs = gen({i, i});
    const auto rhs = params.a * gen({i}) + params.b * AlgebraElement::unit(n, params);
    report.checks.push_back({t(i) + "*" + t(i) + " = " + params.a.str() + "*" + t(i) + " + " + params.b.str() + "*Te",
                             lhs == rhs});
  }
  for (int i = 1; i + 1 < n; ++i) {
    report.checks.push_back({t(i) + "*" + t(i + 1) + "*" + t(i) + " = " + t(i + 1) + "*" + t(i) + "*" + t(i + 1),
                             gen({i, i + 1, i}) == gen({i + 1, i, i + 1})});
  }
  for (int i = 1; i < n; ++i) {
    for (int j = i + 2; j < n; ++j) {
      report.checks.push_back({t(i) + "*" + t(j) + " = " + t(j) + "*" + t(i), gen({i, j}) == gen({j, i})});
    }
  }
  return report;
}

}  // namespace nilhecke
