#include "homdend/io.hpp"

#include <fstream>
#include <sstream>

namespace homdend {

const char* kind_name(StructureKind kind) {
  switch (kind) {
    case StructureKind::HomAssoc: return "hom-assoc";
    case StructureKind::HomDend: return "hom-dend";
    case StructureKind::HomAssocCoalg: return "hom-assoc-coalg";
    case StructureKind::HomDendCoalg: return "hom-dend-coalg";
    case StructureKind::Representation: return "representation";
  }
  return "?";
}

Flavor kind_flavor(StructureKind kind) {
  switch (kind) {
    case StructureKind::HomAssoc: return Flavor::Ass;
    case StructureKind::HomDend: return Flavor::Dend;
    case StructureKind::HomAssocCoalg: return Flavor::CoAss;
    case StructureKind::HomDendCoalg: return Flavor::CoDend;
    case StructureKind::Representation: break;
  }
  fail(ErrorKind::ParseError, "a representation file has no cochain flavor");
}

int ParsedInput::dim() const {
  return std::visit(
      [](const auto& s) -> int {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, HomRepresentation>) {
          return s.module_space.dim;
        } else {
          return s.space.dim;
        }
      },
      structure);
}

const HomDendAlgebra& ParsedInput::dend() const { return std::get<HomDendAlgebra>(structure); }
const HomAssocAlgebra& ParsedInput::assoc() const { return std::get<HomAssocAlgebra>(structure); }
const HomDendCoalgebra& ParsedInput::dend_coalg() const {
  return std::get<HomDendCoalgebra>(structure);
}
const HomAssocCoalgebra& ParsedInput::assoc_coalg() const {
  return std::get<HomAssocCoalgebra>(structure);
}
const HomRepresentation& ParsedInput::representation() const {
  return std::get<HomRepresentation>(structure);
}

namespace {

[[noreturn]] void parse_fail(const std::string& message) {
  fail(ErrorKind::ParseError, message);
}

Field parse_field(const json& j) {
  if (!j.contains("field") || !j["field"].is_string()) parse_fail("missing string key 'field'");
  const std::string text = j["field"].get<std::string>();
  if (text == "Q") return Field::rationals();
  if (text.rfind("GF ", 0) == 0) {
    try {
      return Field::prime(std::stoull(text.substr(3)));
    } catch (const Error&) {
      throw;
    } catch (...) {
      parse_fail("bad field spec '" + text + "'");
    }
  }
  parse_fail("field must be 'Q' or 'GF <p>', got '" + text + "'");
}

Scalar parse_scalar(const json& j, Field field, const std::string& where) {
  if (j.is_number_integer()) return Scalar(field, j.get<long>());
  if (j.is_string()) return Scalar::parse(field, j.get<std::string>());
  parse_fail("coefficient at " + where + " must be a string or integer");
}

int parse_index(const json& j, int dim, const std::string& where) {
  if (!j.is_number_integer()) parse_fail("index at " + where + " must be an integer");
  const int v = j.get<int>();
  if (v < 1 || v > dim) {
    parse_fail("index " + std::to_string(v) + " at " + where + " outside [1, " +
               std::to_string(dim) + "]");
  }
  return v;
}

Tensor3 parse_product_tensor(const json& j, const char* key, Field field, int dim,
                             bool coproduct) {
  Tensor3 t = Tensor3::cube(field, dim);
  if (!j.contains(key)) return t;
  if (!j[key].is_array()) parse_fail(std::string("'") + key + "' must be an array");
  int pos = 0;
  for (const auto& entry : j[key]) {
    const std::string where = std::string(key) + "[" + std::to_string(pos++) + "]";
    if (!entry.is_object()) parse_fail("entry at " + where + " must be an object");
    const int i = parse_index(entry.value("i", json()), dim, where + ".i");
    const int jj = parse_index(entry.value("j", json()), dim, where + ".j");
    const int k = parse_index(entry.value("k", json()), dim, where + ".k");
    const Scalar c = parse_scalar(entry.value("c", json()), field, where + ".c");
    if (coproduct) {
      t.at(k - 1, i - 1, jj - 1) += c;
    } else {
      t.at(i - 1, jj - 1, k - 1) += c;
    }
  }
  return t;
}

Matrix parse_matrix(const json& j, Field field, int rows, int cols, const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows) {
    parse_fail(where + " must be an array of " + std::to_string(rows) + " rows");
  }
  Matrix m(field, rows, cols);
  for (int r = 0; r < rows; ++r) {
    if (!j[r].is_array() || static_cast<int>(j[r].size()) != cols) {
      parse_fail(where + " row " + std::to_string(r + 1) + " must have " + std::to_string(cols) +
                 " entries");
    }
    for (int c = 0; c < cols; ++c) {
      m.at(r, c) = parse_scalar(j[r][c], field,
                                where + "[" + std::to_string(r + 1) + "][" + std::to_string(c + 1) + "]");
    }
  }
  return m;
}

int parse_dim(const json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<int>() < 1) {
    parse_fail(where + " must be a positive integer");
  }
  return j.get<int>();
}

}  // namespace

Cochain cochain_from_entries(const json& entries, Flavor flavor, int degree, int dim,
                             Field field) {
  if (!entries.is_array()) parse_fail("cochain entries must be an array");
  Cochain f(flavor, degree, dim, field);
  const bool co = flavor_is_co(flavor);
  const int in_slots = co ? 1 : degree;
  const int out_slots = co ? degree : 1;
  int pos = 0;
  for (const auto& entry : entries) {
    const std::string where = "entries[" + std::to_string(pos++) + "]";
    int label = 1;
    if (entry.contains("r")) label = parse_index(entry["r"], f.label_count(), where + ".r");
    const auto parse_multi = [&](const json& v, int slots, const std::string& part) {
      std::vector<int> comps;
      if (v.is_number_integer()) {
        comps.push_back(parse_index(v, dim, where + part));
      } else if (v.is_array()) {
        for (const auto& x : v) comps.push_back(parse_index(x, dim, where + part));
      } else {
        parse_fail(where + part + " must be an index or index list");
      }
      if (static_cast<int>(comps.size()) != slots) {
        parse_fail(where + part + " must list " + std::to_string(slots) + " indices");
      }
      std::size_t flat = 0;
      for (int c : comps) flat = flat * dim + static_cast<std::size_t>(c - 1);
      return flat;
    };
    const std::size_t in = parse_multi(entry.value("in", json()), in_slots, ".in");
    const std::size_t out = parse_multi(entry.value("out", json()), out_slots, ".out");
    f.at(label - 1, in, out) += parse_scalar(entry.value("c", json()), field, where + ".c");
  }
  return f;
}

json cochain_entries_json(const Cochain& f) {
  json entries = json::array();
  const bool co = flavor_is_co(f.flavor());
  const int in_slots = co ? 1 : f.degree();
  const int out_slots = co ? f.degree() : 1;
  const auto multi = [&](std::size_t flat, int slots) {
    json list = json::array();
    std::vector<int> comps(slots);
    for (int s = slots - 1; s >= 0; --s) {
      comps[s] = static_cast<int>(flat % f.dim()) + 1;
      flat /= f.dim();
    }
    for (int c : comps) list.push_back(c);
    return list;
  };
  for (int l = 0; l < f.label_count(); ++l) {
    for (std::size_t in = 0; in < f.in_size(); ++in) {
      for (std::size_t out = 0; out < f.out_size(); ++out) {
        const Scalar& c = f.at(l, in, out);
        if (c.is_zero()) continue;
        json entry;
        entry["r"] = l + 1;
        entry["in"] = multi(in, in_slots);
        entry["out"] = multi(out, out_slots);
        entry["c"] = c.str();
        entries.push_back(std::move(entry));
      }
    }
  }
  return entries;
}

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j, Field field, int rows, int cols) {
  return parse_matrix(j, field, rows, cols, "matrix");
}

ValidationReport validate_any(const AnyStructure& s) {
  return std::visit(
      [](const auto& x) -> ValidationReport {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, HomAssocAlgebra>) {
          return validate_hom_assoc(x);
        } else if constexpr (std::is_same_v<T, HomDendAlgebra>) {
          return validate_hom_dend(x);
        } else if constexpr (std::is_same_v<T, HomAssocCoalgebra>) {
          return validate_hom_assoc_coalg(x);
        } else if constexpr (std::is_same_v<T, HomDendCoalgebra>) {
          return validate_hom_dend_coalg(x);
        } else {
          return validate_representation(x);
        }
      },
      s);
}

ParsedInput parse_input_json(const json& j, bool validate) {
  if (!j.is_object()) parse_fail("top level must be an object");
  if (j.value("schema", 0) != 1) parse_fail("missing or unsupported 'schema' (expected 1)");
  ParsedInput in;
  in.field = parse_field(j);
  const std::string kind = j.value("kind", "");
  const Field field = in.field;

  if (kind == "representation") {
    in.kind = StructureKind::Representation;
    if (!j.contains("base") || !j.contains("module")) {
      parse_fail("representation needs 'base' and 'module'");
    }
    const json& jb = j["base"];
    const int da = parse_dim(jb.value("dim", json()), "base.dim");
    HomAssocAlgebra base{
        HomVectorSpace(da, parse_matrix(jb.value("alpha", json()), field, da, da, "base.alpha")),
        parse_product_tensor(jb, "mu", field, da, false)};
    const json& jm = j["module"];
    const int dm = parse_dim(jm.value("dim", json()), "module.dim");
    HomVectorSpace module(dm, parse_matrix(jm.value("beta", json()), field, dm, dm, "module.beta"));
    Tensor3 act_left(field, da, dm, dm);
    Tensor3 act_right(field, dm, da, dm);
    int pos = 0;
    for (const auto& entry : j.value("act_left", json::array())) {
      const std::string where = "act_left[" + std::to_string(pos++) + "]";
      act_left.at(parse_index(entry.value("a", json()), da, where + ".a") - 1,
                  parse_index(entry.value("m", json()), dm, where + ".m") - 1,
                  parse_index(entry.value("n", json()), dm, where + ".n") - 1) +=
          parse_scalar(entry.value("c", json()), field, where + ".c");
    }
    pos = 0;
    for (const auto& entry : j.value("act_right", json::array())) {
      const std::string where = "act_right[" + std::to_string(pos++) + "]";
      act_right.at(parse_index(entry.value("m", json()), dm, where + ".m") - 1,
                   parse_index(entry.value("a", json()), da, where + ".a") - 1,
                   parse_index(entry.value("n", json()), dm, where + ".n") - 1) +=
          parse_scalar(entry.value("c", json()), field, where + ".c");
    }
    in.structure = HomRepresentation{std::move(base), std::move(module), std::move(act_left),
                                     std::move(act_right)};
  } else {
    const int d = parse_dim(j.value("dim", json()), "dim");
    HomVectorSpace space(d, parse_matrix(j.value("alpha", json()), field, d, d, "alpha"));
    if (kind == "hom-assoc") {
      in.kind = StructureKind::HomAssoc;
      in.structure = HomAssocAlgebra{space, parse_product_tensor(j, "mu", field, d, false)};
    } else if (kind == "hom-dend") {
      in.kind = StructureKind::HomDend;
      in.structure = HomDendAlgebra{space, parse_product_tensor(j, "left", field, d, false),
                                    parse_product_tensor(j, "right", field, d, false)};
    } else if (kind == "hom-assoc-coalg") {
      in.kind = StructureKind::HomAssocCoalg;
      in.structure = HomAssocCoalgebra{space, parse_product_tensor(j, "cop", field, d, true)};
    } else if (kind == "hom-dend-coalg") {
      in.kind = StructureKind::HomDendCoalg;
      in.structure = HomDendCoalgebra{space, parse_product_tensor(j, "coleft", field, d, true),
                                      parse_product_tensor(j, "coright", field, d, true)};
    } else {
      parse_fail("unknown kind '" + kind + "'");
    }
  }

  const json operators = j.value("operators", json::object());
  for (const auto& [name, jm] : operators.items()) {
    if (!jm.is_array() || jm.empty() || !jm[0].is_array()) {
      parse_fail("operator '" + name + "' must be a matrix");
    }
    in.operators.emplace(name, parse_matrix(jm, field, static_cast<int>(jm.size()),
                                            static_cast<int>(jm[0].size()), "operators." + name));
  }

  const json cochains = j.value("cochains", json::object());
  for (const auto& [name, jc] : cochains.items()) {
    const std::string fl = jc.value("flavor", "");
    Flavor flavor;
    if (fl == "ass") {
      flavor = Flavor::Ass;
    } else if (fl == "dend") {
      flavor = Flavor::Dend;
    } else if (fl == "coass") {
      flavor = Flavor::CoAss;
    } else if (fl == "codend") {
      flavor = Flavor::CoDend;
    } else {
      parse_fail("cochain '" + name + "' has unknown flavor '" + fl + "'");
    }
    const int degree = jc.value("degree", 0);
    if (degree < 1) parse_fail("cochain '" + name + "' needs a positive degree");
    in.cochains.emplace(
        name, cochain_from_entries(jc.value("entries", json::array()), flavor, degree, in.dim(), field));
  }

  if (j.contains("deformation")) {
    if (in.kind == StructureKind::Representation) {
      parse_fail("deformations require an algebra or coalgebra file");
    }
    if (!j["deformation"].is_array()) parse_fail("'deformation' must be an array of term lists");
    for (const auto& term : j["deformation"]) {
      in.deformation_terms.push_back(
          cochain_from_entries(term, kind_flavor(in.kind), 2, in.dim(), field));
    }
  }

  if (j.contains("basis_names")) {
    if (!j["basis_names"].is_array() || static_cast<int>(j["basis_names"].size()) != in.dim()) {
      parse_fail("'basis_names' must list one name per basis vector");
    }
    for (const auto& n : j["basis_names"]) in.basis_names.push_back(n.get<std::string>());
  }

  if (validate) {
    require_valid(validate_any(in.structure), std::string(kind_name(in.kind)) + " structure");
  }
  return in;
}

ParsedInput parse_input(const std::string& path, bool validate) {
  std::ifstream file(path);
  if (!file) fail(ErrorKind::ParseError, "cannot open '" + path + "'");
  json j;
  try {
    file >> j;
  } catch (const json::exception& e) {
    fail(ErrorKind::ParseError, "invalid JSON in '" + path + "': " + e.what());
  }
  return parse_input_json(j, validate);
}

namespace {

json product_entries(const Tensor3& t, bool coproduct) {
  json entries = json::array();
  for (int a = 0; a < t.dim0(); ++a) {
    for (int b = 0; b < t.dim1(); ++b) {
      for (int c = 0; c < t.dim2(); ++c) {
        const Scalar& x = t.at(a, b, c);
        if (x.is_zero()) continue;
        json e;
        if (coproduct) {
          e["k"] = a + 1;
          e["i"] = b + 1;
          e["j"] = c + 1;
        } else {
          e["i"] = a + 1;
          e["j"] = b + 1;
          e["k"] = c + 1;
        }
        e["c"] = x.str();
        entries.push_back(std::move(e));
      }
    }
  }
  return entries;
}

json structure_header(Field field, const char* kind, int dim, const Matrix& alpha) {
  json j;
  j["schema"] = 1;
  j["field"] = field.name();
  j["kind"] = kind;
  j["dim"] = dim;
  j["alpha"] = matrix_json(alpha);
  return j;
}

}  // namespace

json structure_json(const HomAssocAlgebra& a) {
  json j = structure_header(a.space.field(), "hom-assoc", a.space.dim, a.space.alpha);
  j["mu"] = product_entries(a.mu, false);
  return j;
}

json structure_json(const HomDendAlgebra& a) {
  json j = structure_header(a.space.field(), "hom-dend", a.space.dim, a.space.alpha);
  j["left"] = product_entries(a.left, false);
  j["right"] = product_entries(a.right, false);
  return j;
}

json structure_json(const HomAssocCoalgebra& c) {
  json j = structure_header(c.space.field(), "hom-assoc-coalg", c.space.dim, c.space.alpha);
  j["cop"] = product_entries(c.cop, true);
  return j;
}

json structure_json(const HomDendCoalgebra& c) {
  json j = structure_header(c.space.field(), "hom-dend-coalg", c.space.dim, c.space.alpha);
  j["coleft"] = product_entries(c.coleft, true);
  j["coright"] = product_entries(c.coright, true);
  return j;
}

json to_json(const ParsedInput& in) {
  json j = std::visit(
      [&](const auto& s) -> json {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, HomRepresentation>) {
          json out;
          out["schema"] = 1;
          out["field"] = s.base.space.field().name();
          out["kind"] = "representation";
          json base;
          base["dim"] = s.base.space.dim;
          base["alpha"] = matrix_json(s.base.space.alpha);
          base["mu"] = product_entries(s.base.mu, false);
          out["base"] = std::move(base);
          json module;
          module["dim"] = s.module_space.dim;
          module["beta"] = matrix_json(s.module_space.alpha);
          out["module"] = std::move(module);
          json al = json::array();
          for (int a = 0; a < s.act_left.dim0(); ++a) {
            for (int m = 0; m < s.act_left.dim1(); ++m) {
              for (int n = 0; n < s.act_left.dim2(); ++n) {
                const Scalar& c = s.act_left.at(a, m, n);
                if (c.is_zero()) continue;
                al.push_back({{"a", a + 1}, {"m", m + 1}, {"n", n + 1}, {"c", c.str()}});
              }
            }
          }
          out["act_left"] = std::move(al);
          json ar = json::array();
          for (int m = 0; m < s.act_right.dim0(); ++m) {
            for (int a = 0; a < s.act_right.dim1(); ++a) {
              for (int n = 0; n < s.act_right.dim2(); ++n) {
                const Scalar& c = s.act_right.at(m, a, n);
                if (c.is_zero()) continue;
                ar.push_back({{"m", m + 1}, {"a", a + 1}, {"n", n + 1}, {"c", c.str()}});
              }
            }
          }
          out["act_right"] = std::move(ar);
          return out;
        } else {
          return structure_json(s);
        }
      },
      in.structure);

  if (!in.operators.empty()) {
    json ops;
    for (const auto& [name, m] : in.operators) ops[name] = matrix_json(m);
    j["operators"] = std::move(ops);
  }
  if (!in.cochains.empty()) {
    json cs;
    for (const auto& [name, f] : in.cochains) {
      json c;
      c["flavor"] = flavor_name(f.flavor());
      c["degree"] = f.degree();
      c["entries"] = cochain_entries_json(f);
      cs[name] = std::move(c);
    }
    j["cochains"] = std::move(cs);
  }
  if (!in.deformation_terms.empty()) {
    json terms = json::array();
    for (const auto& t : in.deformation_terms) terms.push_back(cochain_entries_json(t));
    j["deformation"] = std::move(terms);
  }
  if (!in.basis_names.empty()) j["basis_names"] = in.basis_names;
  return j;
}

}  // namespace homdend
