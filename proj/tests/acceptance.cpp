// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>

#include "nilhecke/center.hpp"
#include "nilhecke/partitions.hpp"
#include "nilhecke/quotients.hpp"
#include "nilhecke/serialize.hpp"

#ifndef NILHECKE_CLI_PATH
#error "NILHECKE_CLI_PATH must point at the nilhecke executable"
#endif

using namespace nilhecke;

namespace {

const std::vector<AlgebraParams> kPresets{AlgebraParams::nilcoxeter(), AlgebraParams::zero_hecke(),
                                          AlgebraParams::group_algebra()};

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;  // 0 means no runtime bound
  std::function<Verdict()> body;
};

std::string str(std::size_t v) { return std::to_string(v); }

// Dimension of Z(NC_n) three ways; returns a failure description on disagreement.
Verdict three_routes(int n, std::size_t expected) {
  Verdict v;
  const auto nc = AlgebraParams::nilcoxeter();
  const auto formula = center_dim_formula(n);
  const auto quotient = quotient_dim(n, nc, true);
  const auto commutant = center(n, nc).dimension();
  const auto tag = "n=" + std::to_string(n) + ": ";
  v.require(formula == Integer(static_cast<unsigned long>(expected)), tag + "formula " + formula.get_str());
  v.require(quotient == expected, tag + "quotient " + str(quotient));
  v.require(commutant == expected, tag + "commutant " + str(commutant));
  return v;
}

AlgebraElement T(int n, const AlgebraParams& p, const Word& w) { return AlgebraElement::basis(n, p, evaluate(w, n)); }

std::string run_cli_capture(const std::string& args) {
  const std::string command = std::string("\"") + NILHECKE_CLI_PATH + "\" " + args;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(command.c_str(), "r"), pclose);
  if (!pipe) return {};
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), got);
  return out;
}

std::vector<Criterion> criteria() {
  std::vector<Criterion> c;

  c.push_back({1, "dim Z(NC_3) = 3 by formula, twisted quotient and commutant", 1.0, [] { return three_routes(3, 3); }});

  c.push_back({2, "dim Z(NC_6) = 12 by formula, twisted quotient and commutant", 300.0, [] { return three_routes(6, 12); }});

  c.push_back({3, "dim Z(NC_n) = 1, 2, 3, 5, 7, 12 for n = 1..6", 0.0, [] {
                 Verdict v;
                 const std::array<std::size_t, 6> golden{1, 2, 3, 5, 7, 12};
                 for (int n = 1; n <= 6; ++n) {
                   const auto r = three_routes(n, golden[static_cast<std::size_t>(n - 1)]);
                   v.require(r.pass, r.detail);
                 }
                 return v;
               }});

  c.push_back({4, "dim Z(H_n) = dim Z(NC_n) for n = 1..5", 60.0, [] {
                 Verdict v;
                 for (int n = 1; n <= 5; ++n) {
                   const auto h = center(n, AlgebraParams::zero_hecke()).dimension();
                   const auto nc = center(n, AlgebraParams::nilcoxeter()).dimension();
                   v.require(h == nc, "n=" + std::to_string(n) + ": " + str(h) + " vs " + str(nc));
                 }
                 return v;
               }});

  c.push_back({5, "n=3 Nilcoxeter center basis is {T_e, T_1T_2 + T_2T_1, T_max}", 0.0, [] {
                 Verdict v;
                 const auto nc = AlgebraParams::nilcoxeter();
                 const auto basis = nc_center_basis(3);
                 const std::vector<AlgebraElement> expected{T(3, nc, {}), T(3, nc, {1, 2}) + T(3, nc, {2, 1}),
                                                            T(3, nc, {1, 2, 1})};
                 v.require(basis.elements.size() == 3, "basis size " + str(basis.elements.size()));
                 for (const auto& e : expected) {
                   const auto hits = std::count_if(basis.elements.begin(), basis.elements.end(),
                                                   [&](const auto& b) { return b.element == e; });
                   v.require(hits == 1, "missing " + e.str());
                 }
                 return v;
               }});

  c.push_back({6, "products of non-identity NC center basis elements vanish, n = 2..5", 60.0, [] {
                 Verdict v;
                 for (int n = 2; n <= 5; ++n) {
                   const auto basis = nc_center_basis(n);
                   const auto id = basis.identity_position();
                   v.require(id.has_value(), "no identity at n=" + std::to_string(n));
                   for (std::size_t i = 0; i < basis.elements.size(); ++i) {
                     for (std::size_t j = 0; j < basis.elements.size(); ++j) {
                       if (i == *id || j == *id) continue;
                       const auto prod = mul(basis.elements[i].element, basis.elements[j].element);
                       v.require(prod.is_zero(), "n=" + std::to_string(n) + ": nonzero product " + prod.str());
                     }
                   }
                 }
                 return v;
               }});

  c.push_back({7, "NC class census equals n_even!/prod(i_j!) per cycle type, n = 2..7; union-find at n=7 < 10 s", 0.0, [] {
                 Verdict v;
                 for (int n = 2; n <= 7; ++n) {
                   const auto start = std::chrono::steady_clock::now();
                   const auto census = class_census(n, AlgebraParams::nilcoxeter());
                   const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
                   v.require(secs < 10.0, "n=" + std::to_string(n) + " took " + std::to_string(secs) + " s");
                   for (const auto& lambda : partitions(n)) {
                     const auto it = census.find(lambda.parts);
                     const std::size_t found = it == census.end() ? 0 : it->second;
                     v.require(Integer(static_cast<unsigned long>(found)) == expected_class_count(lambda),
                               "n=" + std::to_string(n) + " " + partition_json(lambda.parts).dump());
                   }
                   if (n == 6) {
                     const auto it = census.find(Partition{4, 2});
                     v.require(it != census.end() && it->second == 2, "(4,2) count at n=6");
                   }
                 }
                 return v;
               }});

  c.push_back({8, "the full-thickness NC class has length floor((n-1)/2), n = 2..7", 0.0, [] {
                 Verdict v;
                 for (int n = 2; n <= 7; ++n) {
                   int found = 0;
                   for (const auto& cls : mobius_classes(n, AlgebraParams::nilcoxeter()).classes) {
                     if (cycle_type(cls.representative) != Partition{n}) continue;
                     ++found;
                     for (const auto& w : cls.members) {
                       v.require(length(w) == (n - 1) / 2, "n=" + std::to_string(n) + " member " + to_string(w));
                     }
                   }
                   v.require(found == 1, "n=" + std::to_string(n) + ": " + std::to_string(found) + " prime classes");
                 }
                 return v;
               }});

  c.push_back({9, "duality: dim Z = n! - dim [A,A]_t and dim TZ = n! - dim [A,A], n = 2..4, all presets", 0.0, [] {
                 Verdict v;
                 for (const auto& p : kPresets) {
                   for (int n = 2; n <= 4; ++n) {
                     const auto order = static_cast<std::size_t>(factorial(n));
                     const auto tag = p.name() + " n=" + std::to_string(n);
                     v.require(center(n, p).dimension() == order - twisted_commutator_span(n, p).dimension(), tag + " Z");
                     v.require(twisted_center(n, p).dimension() == order - commutator_span(n, p).dimension(), tag + " TZ");
                   }
                 }
                 return v;
               }});

  c.push_back({10, "Frobenius: Gram rank n! and trace(xy) = trace(y f(x)), n = 2..5, all presets", 0.0, [] {
                 Verdict v;
                 std::mt19937_64 rng(20240917);
                 for (const auto& p : kPresets) {
                   for (int n = 2; n <= 5; ++n) {
                     const auto tag = p.name() + " n=" + std::to_string(n);
                     const auto& g = symmetric_group(n);
                     const auto gram = gram_matrix(n, p);
                     std::vector<RationalSparse> rows;
                     for (Eigen::Index r = 0; r < gram.rows(); ++r) {
                       std::vector<SparseEntry<Rational>> e;
                       for (Eigen::Index col = 0; col < gram.cols(); ++col) {
                         if (!gram(r, col).is_zero()) e.push_back({static_cast<std::size_t>(col), gram(r, col)});
                       }
                       rows.push_back(RationalSparse::from_entries(g.order(), std::move(e)));
                     }
                     v.require(rank(rows) == g.order(), tag + " Gram rank");

                     auto check_pair = [&](std::size_t u, std::size_t w) {
                       const auto x = AlgebraElement::basis(n, p, g.element(u));
                       const auto y = AlgebraElement::basis(n, p, g.element(w));
                       return trace(mul(x, y)) == trace(mul(y, involve(x)));
                     };
                     bool ok = true;
                     if (n <= 4) {
                       for (std::size_t u = 0; u < g.order(); ++u)
                         for (std::size_t w = 0; w < g.order(); ++w) ok = ok && check_pair(u, w);
                     } else {
                       std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
                       for (int k = 0; k < 10000; ++k) ok = ok && check_pair(pick(rng), pick(rng));
                     }
                     v.require(ok, tag + " trace identity");
                   }
                 }
                 return v;
               }});

  c.push_back({11, "group algebra center dimension = p(n), n = 2..6", 0.0, [] {
                 Verdict v;
                 for (int n = 2; n <= 6; ++n) {
                   const auto dim = center(n, AlgebraParams::group_algebra()).dimension();
                   v.require(dim == partitions(n).size(), "n=" + std::to_string(n) + ": " + str(dim));
                 }
                 return v;
               }});

  c.push_back({12, "0-Hecke dual center basis exists and is unique, n = 2..4; conjecture reports archived", 0.0, [] {
                 Verdict v;
                 for (int n = 2; n <= 4; ++n) {
                   const auto tag = "n=" + std::to_string(n);
                   try {
                     const auto dual = dual_center_basis(n, AlgebraParams::zero_hecke());
                     v.require(dual.elements.size() == mobius_classes(n, AlgebraParams::zero_hecke()).classes.size(),
                               tag + " size");
                     const auto report = verify_hn_conjecture(n);
                     const auto path = "conjecture_n" + std::to_string(n) + ".json";
                     std::ofstream(path) << conjecture_json(report).dump(2) << '\n';
                     std::size_t inside = 0;
                     for (const auto& cls : report.classes) inside += cls.support_in_complements ? 1 : 0;
                     std::cout << "       " << tag << ": " << inside << "/" << report.classes.size()
                               << " classes supported on complements (archived " << path << ")\n";
                   } catch (const std::exception& e) {
                     v.require(false, tag + ": " + e.what());
                   }
                 }
                 return v;
               }});

  c.push_back({13, "generator span equals the all-pairs twisted commutator span, n <= 4, all presets", 0.0, [] {
                 Verdict v;
                 for (const auto& p : kPresets) {
                   for (int n = 1; n <= 4; ++n) {
                     v.require(twisted_commutator_span(n, p) == twisted_commutator_span_all_pairs(n, p),
                               p.name() + " n=" + std::to_string(n));
                   }
                 }
                 return v;
               }});

  c.push_back({14, "repeated CLI runs produce byte-identical JSON", 0.0, [] {
                 Verdict v;
                 for (const std::string args : {"dim -n 5", "classes -n 5 --algebra 0-hecke", "basis -n 5",
                                                "table -n 4 --algebra 0-hecke", "verify -n 4", "conjecture -n 4"}) {
                   const auto first = run_cli_capture(args);
                   const auto second = run_cli_capture(args);
                   v.require(!first.empty(), args + ": no output");
                   v.require(first == second, args + ": outputs differ");
                 }
                 return v;
               }});

  return c;
}

}  // namespace

int main() {
  int failures = 0;
  for (const auto& criterion : criteria()) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criterion.body();
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (criterion.limit_seconds > 0 && secs >= criterion.limit_seconds) {
      v.require(false, "runtime " + std::to_string(secs) + " s exceeds " + std::to_string(criterion.limit_seconds) + " s");
    }
    if (!v.pass) ++failures;
    std::ostringstream line;
    line << (v.pass ? "[PASS] " : "[FAIL] ") << criterion.id << ". " << criterion.title;
    line.setf(std::ios::fixed);
    line.precision(3);
    line << " (" << secs << " s)";
    if (!v.pass) line << ": " << v.detail;
    std::cout << line.str() << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
