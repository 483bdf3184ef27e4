#pragma once

#include <map>
#include <string>
#include <variant>

#include "json.hpp"

#include "homdend/deformation.hpp"

namespace homdend {

using json = nlohmann::json;

enum class StructureKind { HomAssoc, HomDend, HomAssocCoalg, HomDendCoalg, Representation };

const char* kind_name(StructureKind kind);
Flavor kind_flavor(StructureKind kind);  // flavor of the structure's own complex

using AnyStructure = std::variant<HomAssocAlgebra, HomDendAlgebra, HomAssocCoalgebra,
                                  HomDendCoalgebra, HomRepresentation>;

/// In-memory form of a structure file ("schema": 1). Indices in files are
/// 1-based; scalars are strings ("n", "n/d", "k mod p").
struct ParsedInput {
  Field field = Field::rationals();
  StructureKind kind = StructureKind::HomDend;
  AnyStructure structure{HomDendAlgebra{HomVectorSpace(1, Matrix::identity(Field::rationals(), 1)),
                                        Tensor3::cube(Field::rationals(), 1),
                                        Tensor3::cube(Field::rationals(), 1)}};
  std::map<std::string, Matrix> operators;
  std::map<std::string, Cochain> cochains;
  std::vector<Cochain> deformation_terms;  // t^1..t^N coefficients
  std::vector<std::string> basis_names;

  int dim() const;
  const HomDendAlgebra& dend() const;
  const HomAssocAlgebra& assoc() const;
  const HomDendCoalgebra& dend_coalg() const;
  const HomAssocCoalgebra& assoc_coalg() const;
  const HomRepresentation& representation() const;
};

ParsedInput parse_input(const std::string& path, bool validate = true);
ParsedInput parse_input_json(const json& j, bool validate = true);

json to_json(const ParsedInput& in);
json structure_json(const HomAssocAlgebra& a);
json structure_json(const HomDendAlgebra& a);
json structure_json(const HomAssocCoalgebra& c);
json structure_json(const HomDendCoalgebra& c);

json matrix_json(const Matrix& m);
Matrix matrix_from_json(const json& j, Field field, int rows, int cols);

/// Sparse entry list [{"r","in","out","c"}] with 1-based indices.
json cochain_entries_json(const Cochain& f);
Cochain cochain_from_entries(const json& entries, Flavor flavor, int degree, int dim, Field field);

ValidationReport validate_any(const AnyStructure& s);

}  // namespace homdend
