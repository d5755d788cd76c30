#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nilhecke/center.hpp"
#include "nilhecke/partitions.hpp"
#include "nilhecke/quotients.hpp"
#include "oracle.hpp"

using namespace nilhecke;

namespace {

const std::vector<AlgebraParams> kPresets{AlgebraParams::nilcoxeter(), AlgebraParams::zero_hecke(),
                                          AlgebraParams::group_algebra()};

AlgebraElement T(int n, const AlgebraParams& p, const Word& w) { return AlgebraElement::basis(n, p, evaluate(w, n)); }

AlgebraElement element_of(int n, const AlgebraParams& p, const RationalSparse& coords) {
  return AlgebraElement(n, p, coords);
}

bool is_central(const AlgebraElement& z) {
  for (int i = 1; i < z.strands(); ++i) {
    if (!(mul_left_generator(i, z) == mul_right_generator(z, i))) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("center dimensions") {
  const std::vector<std::size_t> nc{1, 2, 3, 5, 7};
  for (int n = 1; n <= 5; ++n) {
    const auto k = static_cast<std::size_t>(n - 1);
    CHECK(center(n, AlgebraParams::nilcoxeter()).dimension() == nc[k]);
    CHECK(center(n, AlgebraParams::zero_hecke()).dimension() == nc[k]);
    CHECK(center(n, AlgebraParams::group_algebra()).dimension() == partitions(n).size());
  }
}

TEST_CASE("every center basis vector commutes with all of A") {
  for (const auto& p : kPresets) {
    for (int n = 1; n <= 4; ++n) {
      const auto& g = symmetric_group(n);
      const auto z_space = center(n, p);
      const auto tz_space = twisted_center(n, p);
      for (const auto& v : z_space.basis()) {
        const auto z = element_of(n, p, v);
        CHECK(is_central(z));
        for (std::size_t w = 0; w < g.order(); ++w) {
          const auto tw = AlgebraElement::basis(n, p, g.element(w));
          CHECK(mul(tw, z) == mul(z, tw));
        }
      }
      for (const auto& v : tz_space.basis()) {
        const auto z = element_of(n, p, v);
        for (std::size_t w = 0; w < g.order(); ++w) {
          const auto tw = AlgebraElement::basis(n, p, g.element(w));
          CHECK(mul(z, tw) == mul(involve(tw), z));
        }
      }
    }
  }
}

TEST_CASE("twisted center dimensions") {
  CHECK(twisted_center(3, AlgebraParams::nilcoxeter()).dimension() == 4);
  CHECK(twisted_center(3, AlgebraParams::zero_hecke()).dimension() == 4);
  CHECK(twisted_center(4, AlgebraParams::nilcoxeter()).dimension() == 8);
  CHECK(twisted_center(4, AlgebraParams::zero_hecke()).dimension() == 8);
  // For the group algebra TZ = T_{w0} Z: same dimension, different subspace once n >= 3.
  const auto ga = AlgebraParams::group_algebra();
  for (int n = 1; n <= 5; ++n) {
    const auto z = center(n, ga);
    const auto tz = twisted_center(n, ga);
    CHECK(tz.dimension() == z.dimension());
    const auto w0 = AlgebraElement::basis(n, ga, longest_element(n));
    for (const auto& v : z.basis()) CHECK(tz.contains(mul(w0, AlgebraElement(n, ga, v)).coordinates()));
  }
  CHECK_FALSE(twisted_center(3, ga) == center(3, ga));
}

TEST_CASE("duality between centers and quotients") {
  for (const auto& p : kPresets) {
    for (int n = 1; n <= 4; ++n) {
      const auto order = static_cast<std::size_t>(factorial(n));
      CHECK(center(n, p).dimension() == order - twisted_commutator_span(n, p).dimension());
      CHECK(twisted_center(n, p).dimension() == order - commutator_span(n, p).dimension());
    }
  }
}

TEST_CASE("Nilcoxeter center basis at n = 3") {
  const auto nc = AlgebraParams::nilcoxeter();
  const auto basis = nc_center_basis(3);
  REQUIRE(basis.elements.size() == 3);
  std::vector<AlgebraElement> expected{T(3, nc, {}), T(3, nc, {1, 2}) + T(3, nc, {2, 1}), T(3, nc, {1, 2, 1})};
  for (const auto& e : expected) {
    CHECK(std::count_if(basis.elements.begin(), basis.elements.end(), [&](const auto& b) { return b.element == e; }) == 1);
  }
  REQUIRE(basis.identity_position().has_value());
  CHECK(basis.elements[*basis.identity_position()].element == AlgebraElement::unit(3, nc));
}

TEST_CASE("Nilcoxeter basis is central, spans the center and equals the dual basis") {
  const auto nc = AlgebraParams::nilcoxeter();
  for (int n = 1; n <= 5; ++n) {
    const auto basis = nc_center_basis(n);
    const auto dual = dual_center_basis(n, nc);
    REQUIRE(basis.elements.size() == dual.elements.size());
    std::vector<RationalSparse> coords;
    for (std::size_t k = 0; k < basis.elements.size(); ++k) {
      CHECK(is_central(basis.elements[k].element));
      CHECK(basis.elements[k].label == dual.elements[k].label);
      CHECK(basis.elements[k].element == dual.elements[k].element);
      coords.push_back(basis.elements[k].element.coordinates());
    }
    CHECK(span(coords, static_cast<std::size_t>(factorial(n))) == center(n, nc));
  }
}

TEST_CASE("dual pairing trace(T_w z_c) = [w in c]") {
  for (const auto& p : {AlgebraParams::nilcoxeter(), AlgebraParams::zero_hecke()}) {
    for (int n = 1; n <= 4; ++n) {
      const auto classes = mobius_classes(n, p);
      const auto dual = dual_center_basis(n, p);
      REQUIRE(dual.elements.size() == classes.classes.size());
      for (std::size_t c = 0; c < classes.classes.size(); ++c) {
        const auto& z = dual.elements[c].element;
        CHECK(dual.elements[c].label == classes.classes[c].representative);
        CHECK(is_central(z));
        for (const auto& w : oracle::all_permutations(n)) {
          const auto& m = classes.classes[c].members;
          const bool inside = std::find(m.begin(), m.end(), w) != m.end();
          CHECK(trace(mul(AlgebraElement::basis(n, p, w), z)) == Rational(inside ? 1 : 0));
        }
      }
    }
  }
  CHECK_THROWS_AS(dual_center_basis(3, AlgebraParams::group_algebra()), UnsupportedParams);
}

TEST_CASE("0-Hecke dual basis at n = 3") {
  const auto h = AlgebraParams::zero_hecke();
  const auto dual = dual_center_basis(3, h);
  REQUIRE(dual.elements.size() == 3);
  // class {e}: (-1)^(3 - l(w)) on every w
  AlgebraElement alt(3, h);
  for (const auto& w : oracle::all_permutations(3)) alt += Rational((3 - length(w)) % 2 == 0 ? 1 : -1) * AlgebraElement::basis(3, h, w);
  CHECK(dual.elements[0].element == alt);
  CHECK(dual.elements[1].element == T(3, h, {1, 2}) + T(3, h, {2, 1}) - T(3, h, {1}) - T(3, h, {2}));
  CHECK(dual.elements[2].element == AlgebraElement::unit(3, h));
}

TEST_CASE("Nilcoxeter multiplication table is trivial off the identity") {
  for (int n = 2; n <= 5; ++n) {
    const auto basis = nc_center_basis(n);
    const auto table = multiplication_table(basis);
    const auto id = *basis.identity_position();
    for (std::size_t i = 0; i < table.size; ++i) {
      for (std::size_t j = 0; j < table.size; ++j) {
        const auto& row = table(i, j);
        if (i == id || j == id) {
          const std::size_t other = i == id ? j : i;
          for (Eigen::Index k = 0; k < row.size(); ++k) CHECK(row(k) == Rational(static_cast<std::size_t>(k) == other ? 1 : 0));
        } else {
          for (Eigen::Index k = 0; k < row.size(); ++k) CHECK(row(k).is_zero());
          CHECK(mul(basis.elements[i].element, basis.elements[j].element).is_zero());
        }
      }
    }
  }
}

TEST_CASE("0-Hecke multiplication table is closed and commutative") {
  for (int n = 2; n <= 4; ++n) {
    const auto table = multiplication_table(dual_center_basis(n, AlgebraParams::zero_hecke()));
    for (std::size_t i = 0; i < table.size; ++i)
      for (std::size_t j = 0; j < table.size; ++j) CHECK(table(i, j) == table(j, i));
  }
}

TEST_CASE("conjecture report") {
  for (int n = 2; n <= 4; ++n) {
    const auto report = verify_hn_conjecture(n);
    CHECK(report.n == n);
    // From n = 3 on some basis element has two complements of equal length,
    // e.g. both s1s2 and s2s1 complement s1s2 in H_3.
    CHECK(report.unique_complement_per_crossing_number == (n == 2));
    CHECK(report.classes.size() == mobius_classes(n, AlgebraParams::zero_hecke()).classes.size());
    for (const auto& cls : report.classes) {
      CHECK(cls.members.front() == cls.representative);
      CHECK_FALSE(cls.complement_coefficients.empty());
    }
  }
  // The {w0} class is dual to T_e, which is the complement of w0.
  const auto r3 = verify_hn_conjecture(3);
  CHECK(r3.classes.back().dual_element == AlgebraElement::unit(3, AlgebraParams::zero_hecke()));
  CHECK(r3.classes.back().support_in_complements);
  CHECK(r3.classes.back().integer_coefficients);
}
