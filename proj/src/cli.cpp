#include "nilhecke/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "nilhecke/center.hpp"
#include "nilhecke/modular.hpp"
#include "nilhecke/partitions.hpp"
#include "nilhecke/quotients.hpp"
#include "nilhecke/serialize.hpp"

namespace nilhecke::cli {

namespace {

const std::map<std::string, Command> kCommands{{"dim", Command::Dim},     {"classes", Command::Classes},
                                               {"basis", Command::Basis}, {"table", Command::Table},
                                               {"verify", Command::Verify}, {"conjecture", Command::Conjecture}};
const std::map<std::string, Format> kFormats{{"json", Format::Json}, {"csv", Format::Csv}, {"text", Format::Text}};
const std::map<std::string, Suite> kSuites{{"relations", Suite::Relations}, {"frobenius", Suite::Frobenius},
                                           {"duality", Suite::Duality},     {"census", Suite::Census},
                                           {"all", Suite::All}};

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

std::string dotted(const Permutation& w) { return to_string(reduced_word(w)); }

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n ") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// ---------------------------------------------------------------------------
// dim

int run_dim(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const int n = cfg.n;
  const auto order = symmetric_group(n).order();
  const auto formula = center_dim_formula(n);
  const bool formula_applies = cfg.params.is_nilcoxeter() || cfg.params.is_zero_hecke();
  const auto twisted_gens = twisted_commutator_generators(n, cfg.params);

  std::optional<std::size_t> precheck_quotient;
  std::optional<ModularPrecheck> precheck;
  if (cfg.modular_precheck) {
    precheck.emplace();
    if (precheck->accepted()) {
      precheck_quotient = order - precheck->rank(twisted_gens);
    } else {
      err << "warning: modular pre-check rejected by calibration; skipping\n";
    }
  }

  const auto quotient = span(twisted_gens, order).codimension();
  const auto commutant = center(n, cfg.params).dimension();
  bool agree = quotient == commutant;
  if (formula_applies) agree = agree && formula == Integer(static_cast<unsigned long>(quotient));
  if (precheck_quotient && *precheck_quotient != quotient) {
    err << "warning: modular pre-check gave " << *precheck_quotient << ", exact rank gives " << quotient << "\n";
  }

  switch (cfg.format) {
    case Format::Json: {
      Json j{{"n", n},
             {"algebra", algebra_params_json(cfg.params)},
             {"formula", formula.get_str()},
             {"formula_applies", formula_applies},
             {"quotient", quotient},
             {"commutant", commutant},
             {"agree", agree}};
      if (precheck) {
        j["modular_precheck"] = Json{{"prime", std::to_string(precheck->prime())},
                                     {"accepted", precheck->accepted()},
                                     {"quotient", precheck_quotient ? Json(*precheck_quotient) : Json(nullptr)}};
      }
      out << j.dump(2) << "\n";
      break;
    }
    case Format::Csv:
      out << "n,algebra,formula,quotient,commutant,agree\n";
      out << n << "," << csv_escape(cfg.params.name()) << "," << formula.get_str() << "," << quotient << ","
          << commutant << "," << (agree ? "true" : "false") << "\n";
      break;
    case Format::Text:
      out << formula.get_str() << "\n" << quotient << "\n" << commutant << "\n";
      out << (agree ? "agree" : "DISAGREE") << (formula_applies ? "" : " (formula not applicable)") << "\n";
      if (precheck_quotient) out << "modular pre-check " << *precheck_quotient << "\n";
      break;
  }
  return agree ? kExitOk : kExitVerificationFailed;
}

// ---------------------------------------------------------------------------
// classes

int run_classes(const RunConfig& cfg, std::ostream& out) {
  const auto classes = mobius_classes(cfg.n, cfg.params);
  const bool graded = cfg.params.is_nilcoxeter();
  switch (cfg.format) {
    case Format::Json: out << mobius_classes_json(classes).dump(2) << "\n"; break;
    case Format::Csv:
      out << "representative,size,members" << (graded ? ",cycle_type,length" : "") << "\n";
      for (const auto& c : classes.classes) {
        std::string members;
        for (const auto& w : c.members) members += (members.empty() ? "" : " ") + dotted(w);
        out << dotted(c.representative) << "," << c.members.size() << "," << csv_escape(members);
        if (graded) {
          std::string ct;
          for (int p : cycle_type(c.representative)) ct += (ct.empty() ? "" : ".") + std::to_string(p);
          out << "," << ct << "," << length(c.representative);
        }
        out << "\n";
      }
      break;
    case Format::Text:
      for (const auto& c : classes.classes) {
        out << dotted(c.representative) << ": {";
        for (std::size_t k = 0; k < c.members.size(); ++k) out << (k ? ", " : "") << dotted(c.members[k]);
        out << "}";
        if (graded) {
          out << " type (";
          const auto ct = cycle_type(c.representative);
          for (std::size_t k = 0; k < ct.size(); ++k) out << (k ? "," : "") << ct[k];
          out << ") length " << length(c.representative);
        }
        out << "\n";
      }
      if (classes.zero_class) {
        out << "zero: {";
        for (std::size_t k = 0; k < classes.zero_class->size(); ++k) {
          out << (k ? ", " : "") << dotted((*classes.zero_class)[k]);
        }
        out << "}\n";
      }
      break;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// basis / table

CenterBasis basis_for(const RunConfig& cfg) {
  if (cfg.params.is_nilcoxeter()) return nc_center_basis(cfg.n);
  if (cfg.params.is_zero_hecke()) return dual_center_basis(cfg.n, cfg.params);
  throw UsageError("center basis is available for nilcoxeter and 0-hecke only");
}

int run_basis(const RunConfig& cfg, std::ostream& out) {
  const auto basis = basis_for(cfg);
  switch (cfg.format) {
    case Format::Json: out << center_basis_json(basis).dump(2) << "\n"; break;
    case Format::Csv:
      out << "label,degree,element\n";
      for (const auto& e : basis.elements) {
        out << dotted(e.label) << "," << e.element.homogeneous_degree() << "," << csv_escape(e.element.str()) << "\n";
      }
      break;
    case Format::Text:
      for (const auto& e : basis.elements) out << dotted(e.label) << ": " << e.element.str() << "\n";
      break;
  }
  return kExitOk;
}

int run_table(const RunConfig& cfg, std::ostream& out) {
  const auto basis = basis_for(cfg);
  const auto table = multiplication_table(basis);
  const auto coords = [&](std::size_t i, std::size_t j) {
    std::string s;
    const auto& v = table(i, j);
    for (Eigen::Index k = 0; k < v.size(); ++k) s += (k ? " " : "") + v(k).str();
    return s;
  };
  switch (cfg.format) {
    case Format::Json: out << multiplication_table_json(basis, table).dump(2) << "\n"; break;
    case Format::Csv:
      out << "left,right,coordinates\n";
      for (std::size_t i = 0; i < table.size; ++i) {
        for (std::size_t j = 0; j < table.size; ++j) {
          out << dotted(basis.elements[i].label) << "," << dotted(basis.elements[j].label) << ","
              << csv_escape(coords(i, j)) << "\n";
        }
      }
      break;
    case Format::Text:
      for (std::size_t i = 0; i < table.size; ++i) {
        for (std::size_t j = 0; j < table.size; ++j) {
          out << "z[" << dotted(basis.elements[i].label) << "] * z[" << dotted(basis.elements[j].label)
              << "] = (" << coords(i, j) << ")\n";
        }
      }
      break;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

struct Check {
  std::string name;
  bool pass;
};

struct SuiteResult {
  std::string name;
  bool skipped = false;
  std::vector<Check> checks;

  bool pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
  }
};

SuiteResult relations_suite(int n, const AlgebraParams& params) {
  SuiteResult r{"relations", false, {}};
  for (const auto& c : check_defining_relations(n, params).checks) r.checks.push_back({c.relation, c.holds});
  return r;
}

SuiteResult frobenius_suite(int n, const AlgebraParams& params) {
  SuiteResult r{"frobenius", false, {}};
  const auto& group = symmetric_group(n);
  const auto gram = gram_matrix(n, params);
  std::vector<RationalSparse> rows;
  for (Eigen::Index u = 0; u < gram.rows(); ++u) {
    std::vector<SparseEntry<Rational>> e;
    for (Eigen::Index v = 0; v < gram.cols(); ++v) {
      if (!gram(u, v).is_zero()) e.push_back({static_cast<std::size_t>(v), gram(u, v)});
    }
    rows.push_back(RationalSparse::from_entries(group.order(), std::move(e)));
  }
  r.checks.push_back({"gram matrix has rank n!", rank(rows) == group.order()});

  const auto basis_elt = [&](std::size_t idx) {
    return AlgebraElement(n, params, RationalSparse::unit(group.order(), idx, Rational(1)));
  };
  const auto twisted_trace_holds = [&](std::size_t u, std::size_t v) {
    const auto x = basis_elt(u);
    const auto y = basis_elt(v);
    return trace(mul(x, y)) == trace(mul(y, involve(x)));
  };
  bool identity_ok = true;
  std::string label;
  if (n <= 5) {
    label = "trace(xy) = trace(y f(x)) on all basis pairs";
    for (std::size_t u = 0; u < group.order() && identity_ok; ++u) {
      for (std::size_t v = 0; v < group.order() && identity_ok; ++v) identity_ok = twisted_trace_holds(u, v);
    }
  } else {
    label = "trace(xy) = trace(y f(x)) on 10000 random basis pairs";
    std::mt19937_64 rng(20240917);
    std::uniform_int_distribution<std::size_t> pick(0, group.order() - 1);
    for (int k = 0; k < 10000 && identity_ok; ++k) identity_ok = twisted_trace_holds(pick(rng), pick(rng));
  }
  r.checks.push_back({label, identity_ok});

  bool preserved = true;
  for (std::size_t u = 0; u < group.order(); ++u) {
    const auto x = basis_elt(u);
    preserved = preserved && trace(x) == trace(involve(x)) && involve(involve(x)) == x;
  }
  r.checks.push_back({"f is a trace-preserving involution", preserved});
  return r;
}

SuiteResult duality_suite(int n, const AlgebraParams& params) {
  SuiteResult r{"duality", false, {}};
  const auto order = symmetric_group(n).order();
  const auto z = center(n, params).dimension();
  const auto tz = twisted_center(n, params).dimension();
  const auto tw = twisted_commutator_span(n, params).dimension();
  const auto cm = commutator_span(n, params).dimension();
  r.checks.push_back({"dim Z(A) = n! - dim [A,A]_t (" + std::to_string(z) + ")", z + tw == order});
  r.checks.push_back({"dim TZ(A) = n! - dim [A,A] (" + std::to_string(tz) + ")", tz + cm == order});
  if (params.is_preset()) {
    const auto classes = mobius_classes(n, params);
    r.checks.push_back({"Möbius class count equals quotient dimension", classes.classes.size() == order - tw});
  }
  return r;
}

SuiteResult census_suite(int n, const AlgebraParams& params) {
  SuiteResult r{"census", false, {}};
  if (!params.is_nilcoxeter()) {
    r.skipped = true;
    return r;
  }
  const auto classes = mobius_classes(n, params);
  std::map<Partition, std::size_t> census;
  bool constant_type = true;
  bool constant_length = true;
  for (const auto& c : classes.classes) {
    const auto type = cycle_type(c.representative);
    ++census[type];
    for (const auto& w : c.members) {
      constant_type = constant_type && cycle_type(w) == type;
      constant_length = constant_length && length(w) == length(c.representative);
    }
  }
  r.checks.push_back({"cycle type constant on each class", constant_type});
  r.checks.push_back({"length constant on each class", constant_length});
  for (const auto& lambda : partitions(n)) {
    std::string name = "(";
    for (std::size_t k = 0; k < lambda.parts.size(); ++k) name += (k ? "," : "") + std::to_string(lambda.parts[k]);
    name += ")";
    const auto expected = expected_class_count(lambda);
    const auto found = census.count(lambda.parts) ? census.at(lambda.parts) : 0;
    r.checks.push_back({"classes of type " + name + " = " + expected.get_str(),
                        expected == Integer(static_cast<unsigned long>(found))});
  }
  bool prime_ok = true;
  for (const auto& c : classes.classes) {
    if (cycle_type(c.representative) == Partition{n}) {
      for (const auto& w : c.members) prime_ok = prime_ok && length(w) == (n - 1) / 2;
    }
  }
  r.checks.push_back({"prime class members have floor((n-1)/2) crossings", prime_ok});
  r.checks.push_back({"class count equals the partition formula",
                      center_dim_formula(n) == Integer(static_cast<unsigned long>(classes.classes.size()))});
  return r;
}

int run_verify(const RunConfig& cfg, std::ostream& out) {
  std::vector<SuiteResult> results;
  const auto want = [&](Suite s) { return cfg.suite == Suite::All || cfg.suite == s; };
  if (want(Suite::Relations)) results.push_back(relations_suite(cfg.n, cfg.params));
  if (want(Suite::Frobenius)) results.push_back(frobenius_suite(cfg.n, cfg.params));
  if (want(Suite::Duality)) results.push_back(duality_suite(cfg.n, cfg.params));
  if (want(Suite::Census)) results.push_back(census_suite(cfg.n, cfg.params));
  const bool pass = std::all_of(results.begin(), results.end(), [](const SuiteResult& s) { return s.pass(); });

  switch (cfg.format) {
    case Format::Json: {
      Json suites = Json::array();
      for (const auto& s : results) {
        Json checks = Json::array();
        for (const auto& c : s.checks) checks.push_back(Json{{"check", c.name}, {"pass", c.pass}});
        suites.push_back(Json{{"suite", s.name}, {"skipped", s.skipped}, {"pass", s.pass()}, {"checks", checks}});
      }
      out << Json{{"n", cfg.n}, {"algebra", algebra_params_json(cfg.params)}, {"suites", suites}, {"pass", pass}}
                 .dump(2)
          << "\n";
      break;
    }
    case Format::Csv:
      out << "suite,check,pass\n";
      for (const auto& s : results) {
        if (s.skipped) out << s.name << ",skipped,true\n";
        for (const auto& c : s.checks) out << s.name << "," << csv_escape(c.name) << "," << (c.pass ? "true" : "false") << "\n";
      }
      break;
    case Format::Text:
      for (const auto& s : results) {
        if (s.skipped) out << "[SKIP] " << s.name << "\n";
        for (const auto& c : s.checks) out << (c.pass ? "[PASS] " : "[FAIL] ") << s.name << ": " << c.name << "\n";
      }
      out << (pass ? "all checks passed" : "verification FAILED") << "\n";
      break;
  }
  return pass ? kExitOk : kExitVerificationFailed;
}

// ---------------------------------------------------------------------------
// conjecture

int run_conjecture(const RunConfig& cfg, std::ostream& out) {
  if (cfg.algebra_given && !cfg.params.is_zero_hecke()) {
    throw UsageError("conjecture applies to the 0-hecke algebra only");
  }
  const auto report = verify_hn_conjecture(cfg.n);
  switch (cfg.format) {
    case Format::Json: out << conjecture_json(report).dump(2) << "\n"; break;
    case Format::Csv:
      out << "representative,support_in_complements,integer_coefficients,complement_coefficients\n";
      for (const auto& c : report.classes) {
        std::string coeffs;
        for (const auto& cc : c.complement_coefficients) {
          coeffs += (coeffs.empty() ? "" : " ") + dotted(cc.complement) + ":" + cc.coefficient.str();
        }
        out << dotted(c.representative) << "," << (c.support_in_complements ? "true" : "false") << ","
            << (c.integer_coefficients ? "true" : "false") << "," << csv_escape(coeffs) << "\n";
      }
      break;
    case Format::Text:
      for (const auto& c : report.classes) {
        out << "class " << dotted(c.representative) << " (" << c.members.size() << " members)\n";
        out << "  dual element: " << c.dual_element.str() << "\n";
        out << "  support in complements: " << (c.support_in_complements ? "yes" : "no") << "\n";
      }
      out << "one complement per crossing number: " << (report.unique_complement_per_crossing_number ? "yes" : "no")
          << "\n";
      break;
  }
  return kExitOk;
}

std::string usage_text() {
  return "usage: nilhecke <dim|classes|basis|table|verify|conjecture> -n <int> "
         "[--algebra <nilcoxeter|0-hecke|group|a,b>] [--format <json|csv|text>] [--output <path>] "
         "[--suite <relations|frobenius|duality|census|all>] [--modular-precheck <on|off>]\n";
}

}  // namespace

std::optional<RunConfig> parse_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                                    int& exit_code) {
  CLI::App app{"Centers of the Nilcoxeter and 0-Hecke algebras via Möbius-band classes", "nilhecke"};
  std::string command;
  std::string algebra;
  std::string format = "json";
  std::string suite = "all";
  std::string precheck = "off";
  std::string output;
  int n = 3;
  app.add_option("command", command, "dim, classes, basis, table, verify or conjecture")->required();
  app.add_option("-n", n, "number of strands")->required();
  app.add_option("--algebra", algebra, "nilcoxeter, 0-hecke, group, or a,b");
  app.add_option("--format", format, "json, csv or text");
  app.add_option("--output", output, "write the report to this path");
  app.add_option("--suite", suite, "relations, frobenius, duality, census or all");
  app.add_option("--modular-precheck", precheck, "on or off");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    exit_code = kExitOk;
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << usage_text();
    exit_code = kExitUsage;
    return std::nullopt;
  }

  const auto fail = [&](const std::string& message) -> std::optional<RunConfig> {
    err << "error: " << message << "\n" << usage_text();
    exit_code = kExitUsage;
    return std::nullopt;
  };
  RunConfig cfg;
  if (!kCommands.count(command)) return fail("unknown command '" + command + "'");
  cfg.command = kCommands.at(command);
  if (n < 1 || n > kMaxStrands) return fail("n must lie in 1.." + std::to_string(kMaxStrands));
  cfg.n = n;
  if (!algebra.empty()) {
    try {
      cfg.params = AlgebraParams::parse(algebra);
      cfg.algebra_given = true;
    } catch (const std::invalid_argument& e) {
      return fail(e.what());
    }
  }
  if (!kFormats.count(format)) return fail("unknown format '" + format + "'");
  cfg.format = kFormats.at(format);
  if (!kSuites.count(suite)) return fail("unknown suite '" + suite + "'");
  cfg.suite = kSuites.at(suite);
  if (precheck != "on" && precheck != "off") return fail("--modular-precheck takes on or off");
  cfg.modular_precheck = precheck == "on";
  if (!output.empty()) cfg.output = output;
  exit_code = kExitOk;
  return cfg;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.n > kMaxTableStrands) {
      throw UsageError("computations support at most " + std::to_string(kMaxTableStrands) + " strands");
    }
    switch (cfg.command) {
      case Command::Dim: return run_dim(cfg, out, err);
      case Command::Classes: return run_classes(cfg, out);
      case Command::Basis: return run_basis(cfg, out);
      case Command::Table: return run_table(cfg, out);
      case Command::Verify: return run_verify(cfg, out);
      case Command::Conjecture: return run_conjecture(cfg, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << usage_text();
    return kExitUsage;
  } catch (const UnsupportedParams& e) {
    err << "error: " << e.what() << "\n" << usage_text();
    return kExitUsage;
  } catch (const DualityViolation& e) {
    err << "verification failure: " << e.what() << "\n";
    return kExitVerificationFailed;
  } catch (const InternalInconsistency& e) {
    err << "verification failure: " << e.what() << "\n";
    return kExitVerificationFailed;
  }
  return kExitUsage;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  int code = kExitOk;
  const auto cfg = parse_args(args, out, err, code);
  if (!cfg) return code;
  if (!cfg->output) return run(*cfg, out, err);
  std::ostringstream buffer;
  code = run(*cfg, buffer, err);
  std::ofstream file(*cfg->output, std::ios::binary);
  if (!file) {
    err << "error: cannot open " << *cfg->output << " for writing\n";
    return kExitUsage;
  }
  file << buffer.str();
  return code;
}

}  // namespace nilhecke::cli
