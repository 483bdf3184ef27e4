#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "homdend/io.hpp"
#include "homdend/selftest.hpp"

using namespace homdend;

namespace {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
      return 2;
    case ErrorKind::InternalInconsistency:
    case ErrorKind::AssertionFailure:
      return 3;
    default:
      return 1;
  }
}

int degree_cap_from_env() {
  if (const char* env = std::getenv("HOMDEND_DEGREE_CAP")) {
    const int cap = std::atoi(env);
    if (cap >= 1) return cap;
  }
  return kDefaultDegreeCap;
}

struct Output {
  bool as_json = false;
  json j;

  void emit_human(const std::string& text) {
    if (!as_json) std::cout << text;
  }
  void finish() {
    if (as_json) std::cout << j.dump(2) << "\n";
  }
};

Flavor flavor_from_string(const std::string& s) {
  if (s == "ass") return Flavor::Ass;
  if (s == "dend") return Flavor::Dend;
  if (s == "coass") return Flavor::CoAss;
  if (s == "codend") return Flavor::CoDend;
  fail(ErrorKind::InvalidInput, "unknown flavor '" + s + "'");
}

/// Complex of the requested flavor over the file's structure. Dendriform
/// inputs also expose their induced (co)associative complexes.
Complex complex_for_input(const ParsedInput& in, Flavor flavor, bool untwisted, int cap,
                          bool validate) {
  switch (in.kind) {
    case StructureKind::HomAssoc:
      if (flavor == Flavor::Ass) return make_complex(in.assoc(), untwisted, cap, validate);
      break;
    case StructureKind::HomDend:
      if (flavor == Flavor::Dend) return make_complex(in.dend(), untwisted, cap, validate);
      if (flavor == Flavor::Ass) {
        return make_complex(induced_assoc(in.dend(), validate), untwisted, cap, false);
      }
      break;
    case StructureKind::HomAssocCoalg:
      if (flavor == Flavor::CoAss) return make_complex(in.assoc_coalg(), untwisted, cap, validate);
      break;
    case StructureKind::HomDendCoalg:
      if (flavor == Flavor::CoDend) {
        return make_complex(in.dend_coalg(), untwisted, cap, validate);
      }
      if (flavor == Flavor::CoAss) {
        const HomDendCoalgebra& c = in.dend_coalg();
        return make_complex(HomAssocCoalgebra{c.space, c.coleft + c.coright}, untwisted, cap,
                            validate);
      }
      break;
    case StructureKind::Representation:
      break;
  }
  fail(ErrorKind::StructureMismatch, std::string("flavor '") + flavor_name(flavor) +
                                         "' does not apply to a " + kind_name(in.kind) + " file");
}

json violations_json(const ValidationReport& report) {
  json out = json::array();
  for (const auto& v : report.violations) {
    json item;
    item["identity"] = v.identity;
    item["tuple"] = v.tuple;
    json lhs = json::array(), rhs = json::array();
    for (const auto& x : v.lhs) lhs.push_back(x.str());
    for (const auto& x : v.rhs) rhs.push_back(x.str());
    item["lhs"] = std::move(lhs);
    item["rhs"] = std::move(rhs);
    out.push_back(std::move(item));
  }
  return out;
}

void write_or_print(const json& j, const std::string& out_path, bool as_json) {
  const std::string text = j.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path);
    if (!f) fail(ErrorKind::InvalidInput, "cannot write '" + out_path + "'");
    f << text;
    if (!as_json) std::cout << "wrote " << out_path << "\n";
  }
}

const Matrix& named_operator(const ParsedInput& in, const std::string& name) {
  const auto it = in.operators.find(name);
  if (it == in.operators.end()) {
    fail(ErrorKind::InvalidInput, "file has no operator named '" + name + "'");
  }
  return it->second;
}

TruncatedDeformation deformation_from_input(const Complex& cx, const ParsedInput& in, int order) {
  std::vector<Cochain> terms = in.deformation_terms;
  if (order < 0) order = static_cast<int>(terms.size());
  while (static_cast<int>(terms.size()) < order) terms.push_back(cx.op.zero(2));
  terms.resize(order, cx.op.zero(2));
  return make_deformation(cx, std::move(terms));
}

int run(int argc, char** argv) {
  CLI::App app{"homdend: cohomology and deformations of hom-dendriform (co)algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  app.add_flag("--json", out.as_json, "emit a JSON report on stdout");

  std::string path, flavor_str, out_path, operator_name = "R";
  int max_degree = 3;
  int order = -1;
  bool untwisted = false, no_validate = false;
  std::uint64_t seed = 42;
  bool quick = false;

  auto* c_check = app.add_subcommand("check", "run the structure validators");
  c_check->add_option("file", path)->required();

  auto* c_cohom = app.add_subcommand("cohomology", "Betti table and representative cocycles");
  c_cohom->add_option("file", path)->required();
  c_cohom->add_option("--flavor", flavor_str, "ass|dend|coass|codend (default: the file's kind)");
  c_cohom->add_option("--max-degree", max_degree, "highest cohomology degree to report");
  c_cohom->add_flag("--untwisted", untwisted, "disable the alpha-twist code paths");
  c_cohom->add_flag("--no-validate", no_validate, "skip structure validation");

  auto* c_der = app.add_subcommand("derivations", "independent H^1 oracle");
  c_der->add_option("file", path)->required();

  auto* c_ind = app.add_subcommand("induced", "induced star / preLie / bracket structures");
  c_ind->add_option("file", path)->required();

  auto* c_rb = app.add_subcommand("from-rota-baxter", "dendriform splitting of a Rota-Baxter pair");
  c_rb->add_option("file", path)->required();
  c_rb->add_option("--operator", operator_name, "operator name in the file (default R)");
  c_rb->add_option("--out", out_path, "write the resulting structure file here");

  auto* c_oo = app.add_subcommand("from-o-operator", "dendriform structure on a module");
  c_oo->add_option("file", path)->required();
  c_oo->add_option("--operator", operator_name, "operator name in the file (default R)");
  c_oo->add_option("--out", out_path, "write the resulting structure file here");

  auto* c_dual = app.add_subcommand("dualize", "finite-dimensional linear dual");
  c_dual->add_option("file", path)->required();
  c_dual->add_option("--out", out_path, "write the resulting structure file here");

  auto* c_def = app.add_subcommand("deform", "deformation calculus");
  std::string deform_action;
  c_def->add_option("action", deform_action, "check|classify|trivialize|extend")->required();
  c_def->add_option("file", path)->required();
  c_def->add_option("--order", order, "truncation order (default: number of file terms)");
  c_def->add_flag("--no-validate", no_validate, "skip structure validation");

  auto* c_self = app.add_subcommand("selftest", "run the seeded property suites");
  c_self->add_option("--seed", seed, "PRNG seed (default 42)");
  c_self->add_flag("--quick", quick, "smaller iteration counts");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;  // usage problems are parse errors
  }
  const int cap = degree_cap_from_env();

  if (c_self->parsed()) {
    std::ostringstream transcript;
    const bool ok = run_selftest(transcript, seed, quick);
    if (out.as_json) {
      out.j["schema"] = 1;
      out.j["command"] = "selftest";
      out.j["seed"] = seed;
      out.j["ok"] = ok;
      out.j["transcript"] = transcript.str();
      out.finish();
    } else {
      std::cout << transcript.str();
    }
    return ok ? 0 : 1;
  }

  if (c_check->parsed()) {
    const ParsedInput in = parse_input(path, false);
    const ValidationReport report = validate_any(in.structure);
    if (out.as_json) {
      out.j["schema"] = 1;
      out.j["command"] = "check";
      out.j["kind"] = kind_name(in.kind);
      out.j["valid"] = report.ok();
      out.j["violations"] = violations_json(report);
      out.finish();
    } else if (report.ok()) {
      std::cout << kind_name(in.kind) << ": valid\n";
    } else {
      std::cout << kind_name(in.kind) << ": INVALID\n" << report.describe() << "\n";
    }
    return report.ok() ? 0 : 1;
  }

  if (c_cohom->parsed()) {
    const ParsedInput in = parse_input(path, !no_validate);
    const Flavor flavor =
        flavor_str.empty() ? kind_flavor(in.kind) : flavor_from_string(flavor_str);
    const Complex cx = complex_for_input(in, flavor, untwisted, cap, !no_validate);
    out.j["schema"] = 1;
    out.j["command"] = "cohomology";
    out.j["field"] = in.field.name();
    out.j["flavor"] = flavor_name(flavor);
    out.j["degrees"] = json::array();
    std::ostringstream table;
    table << std::setw(6) << "degree" << std::setw(10) << "cochains" << std::setw(10)
          << "cocycles" << std::setw(14) << "coboundaries" << std::setw(7) << "betti" << "\n";
    for (int n = 1; n <= max_degree; ++n) {
      // coefficient counts grow as n d^{n+1}; warn before big runs
      const std::size_t ambient = cx.op.zero(n + 1).size();
      if (ambient > 100000) {
        std::cerr << "note: degree " << n + 1 << " cochains carry " << ambient
                  << " coefficients; this may take a while\n";
      }
      const CohomologyReport rep = cohomology_report(cx, n);
      table << std::setw(6) << n << std::setw(10) << rep.dim_cochains << std::setw(10)
            << rep.dim_cocycles << std::setw(14) << rep.dim_coboundaries << std::setw(7)
            << rep.betti << "\n";
      json degree;
      degree["n"] = n;
      degree["dim_cochains"] = rep.dim_cochains;
      degree["dim_cocycles"] = rep.dim_cocycles;
      degree["dim_coboundaries"] = rep.dim_coboundaries;
      degree["betti"] = rep.betti;
      json reps = json::array();
      for (const auto& f : rep.representatives) reps.push_back(cochain_entries_json(f));
      degree["representatives"] = std::move(reps);
      out.j["degrees"].push_back(std::move(degree));
    }
    out.emit_human(table.str());
    out.finish();
    return 0;
  }

  if (c_der->parsed()) {
    const ParsedInput in = parse_input(path, true);
    const SubspaceBasis basis = derivation_space(in.dend(), false);
    if (out.as_json) {
      out.j["schema"] = 1;
      out.j["command"] = "derivations";
      out.j["dimension"] = basis.dim();
      json vecs = json::array();
      for (const auto& v : basis.vectors) {
        json row = json::array();
        for (const auto& x : v) row.push_back(x.str());
        vecs.push_back(std::move(row));
      }
      out.j["basis"] = std::move(vecs);
      out.finish();
    } else {
      std::cout << "derivation space dimension: " << basis.dim() << "\n";
    }
    return 0;
  }

  if (c_ind->parsed()) {
    const ParsedInput in = parse_input(path, true);
    const HomDendAlgebra& a = in.dend();
    const HomAssocAlgebra star = induced_assoc(a, false);
    const PreLieCheckReport prelie = induced_prelie(a, false);
    const BracketPair brackets = induced_lie_brackets(a, false);
    out.j["schema"] = 1;
    out.j["command"] = "induced";
    out.j["star"] = structure_json(star);
    json diamond = json::array();
    for (int i = 0; i < a.space.dim; ++i) {
      for (int j = 0; j < a.space.dim; ++j) {
        for (int k = 0; k < a.space.dim; ++k) {
          const Scalar& c = prelie.diamond.at(i, j, k);
          if (!c.is_zero()) {
            diamond.push_back({{"i", i + 1}, {"j", j + 1}, {"k", k + 1}, {"c", c.str()}});
          }
        }
      }
    }
    out.j["diamond"] = std::move(diamond);
    out.j["prelie_identity_holds"] = prelie.identity.ok();
    out.j["brackets_equal"] = brackets.equal;
    out.emit_human(std::string("star product: hom-associative; preLie identity: ") +
                   (prelie.identity.ok() ? "holds" : "fails") + "; brackets equal: " +
                   (brackets.equal ? "yes" : "no") + "\n");
    out.finish();
    return 0;
  }

  if (c_rb->parsed() || c_oo->parsed()) {
    const ParsedInput in = parse_input(path, true);
    const Matrix& r = named_operator(in, operator_name);
    const HomDendAlgebra dend = c_rb->parsed() ? from_rota_baxter(in.assoc(), r)
                                               : from_o_operator(in.representation(), r);
    write_or_print(structure_json(dend), out_path, out.as_json);
    return 0;
  }

  if (c_dual->parsed()) {
    const ParsedInput in = parse_input(path, true);
    json dual;
    switch (in.kind) {
      case StructureKind::HomAssoc: dual = structure_json(dualize(in.assoc(), false)); break;
      case StructureKind::HomDend: dual = structure_json(dualize(in.dend(), false)); break;
      case StructureKind::HomAssocCoalg:
        dual = structure_json(dualize(in.assoc_coalg(), false));
        break;
      case StructureKind::HomDendCoalg: dual = structure_json(dualize(in.dend_coalg(), false)); break;
      case StructureKind::Representation:
        fail(ErrorKind::InvalidInput, "dualize expects an algebra or coalgebra file");
    }
    write_or_print(dual, out_path, out.as_json);
    return 0;
  }

  if (c_def->parsed()) {
    const ParsedInput in = parse_input(path, !no_validate);
    const Complex cx = complex_for_input(in, kind_flavor(in.kind), false, cap, !no_validate);
    const TruncatedDeformation d = deformation_from_input(cx, in, order);
    out.j["schema"] = 1;
    out.j["command"] = "deform " + deform_action;
    out.j["order"] = d.order;
    if (deform_action == "check") {
      const DeformationCheck check = check_deformation(cx, d);
      out.j["valid"] = check.ok();
      json failures = json::array();
      for (const auto& f : check.failures) {
        failures.push_back({{"order", f.order}, {"defect", cochain_entries_json(f.defect)}});
      }
      out.j["failures"] = std::move(failures);
      out.emit_human(check.ok() ? "valid to order " + std::to_string(d.order) + "\n"
                                : "INVALID at order " + std::to_string(check.failures[0].order) +
                                      "\n");
      out.finish();
      return check.ok() ? 0 : 1;
    }
    if (deform_action == "classify") {
      if (d.order < 1) fail(ErrorKind::InvalidInput, "classify needs at least one term");
      const InfinitesimalClass cls = is_infinitesimal(cx, d.terms[1]);
      out.j["is_cocycle"] = cls.is_cocycle;
      out.j["is_coboundary"] = cls.is_coboundary;
      out.j["class"] = cochain_entries_json(cls.representative);
      out.emit_human(std::string("infinitesimal: ") +
                     (cls.is_cocycle ? (cls.is_coboundary ? "trivial class" : "nonzero class")
                                     : "not a 2-cocycle") +
                     "\n");
      out.finish();
      return 0;
    }
    if (deform_action == "trivialize") {
      const TrivializeResult res = trivialize(cx, d);
      const bool trivial = res.verdict == TrivializeVerdict::Trivial;
      out.j["verdict"] = trivial ? "trivial" : "nontrivial";
      json gauge = json::array();
      for (const auto& m : res.gauge.components) gauge.push_back(matrix_json(m));
      out.j["gauge"] = std::move(gauge);
      if (!trivial) {
        out.j["blocking_order"] = res.blocking_order;
      }
      out.emit_human(trivial ? "trivial (gauge found)\n"
                             : "nontrivial at order " + std::to_string(res.blocking_order) + "\n");
      out.finish();
      return 0;
    }
    if (deform_action == "extend") {
      const ExtendResult res = extend(cx, d);
      out.j["extended"] = res.extended;
      out.j["obstruction_vanishes"] = res.obstructionClass.vanishes;
      out.j["solution_space_dim"] = res.solution_space_dim;
      if (res.extended) {
        out.j["next_term"] = cochain_entries_json(res.deformation.terms.back());
      }
      out.emit_human(res.extended ? "extends to order " + std::to_string(res.deformation.order) +
                                        "\n"
                                  : "obstructed: nonzero class in H^3\n");
      out.finish();
      return 0;
    }
    fail(ErrorKind::InvalidInput, "unknown deform action '" + deform_action + "'");
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    bool as_json = false;
    for (int i = 1; i < argc; ++i) {
      if (std::string(argv[i]) == "--json") as_json = true;
    }
    if (as_json) {
      json err;
      err["error"] = {{"kind", error_kind_name(e.kind())}, {"message", e.what()}};
      std::cout << err.dump(2) << "\n";
    }
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
