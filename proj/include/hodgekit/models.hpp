#pragma once

#include "hodgekit/actions.hpp"
#include "hodgekit/structure.hpp"
#include "hodgekit/vaisman.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace hodgekit {

enum class ModelKind { lie, matrix, vaisman };

std::string to_string(ModelKind k);

/// A bicomplex given by explicit slot dimensions and differential blocks.
struct MatrixData {
  int n = 0;
  std::map<Bidegree, std::size_t> slots;
  std::map<Bidegree, ExactMatrix> del;
  std::map<Bidegree, ExactMatrix> delbar;
  bool has_del = true;
  friend bool operator==(const MatrixData&, const MatrixData&) = default;
};

struct VaismanData {
  BasicCohomology basic;
  /// Build the full bicomplex (del and delbar) rather than the delbar-only model.
  bool full = true;
};

/// Values of a contraction on degree-1 generators; conjugates are implied.
/// Vaisman models accept only the key "theta10".
struct ContractionSpec {
  std::string name;
  std::map<std::string, GaussianRational> values;
  friend bool operator==(const ContractionSpec&, const ContractionSpec&) = default;
};

struct ModelSpec {
  ModelKind kind = ModelKind::lie;
  std::string name;
  std::variant<StructureSpec, MatrixData, VaismanData> payload;
  std::vector<ContractionSpec> contractions;

  const StructureSpec& structure() const { return std::get<StructureSpec>(payload); }
  const MatrixData& matrix() const { return std::get<MatrixData>(payload); }
  const VaismanData& vaisman() const { return std::get<VaismanData>(payload); }
};

/// Parses a `.cplx` (lie or matrix kind) or `.vsm` (vaisman kind) file.
/// Syntax errors carry the offending line number (ParseError).
ModelSpec parse_model_file(std::string_view text);

/// Canonical text form; parse_model_file(serialize(m)) reproduces m.
std::string serialize(const ModelSpec& m);

/// Built-in models: torus1..3, iwasawa, kodaira_thurston, hopf2, hopf3.
const std::vector<ModelSpec>& catalog();
/// Source text of a catalog entry.
const std::string& catalog_text(const std::string& name);
std::optional<ModelSpec> find_in_catalog(const std::string& name);

/// A model resolved into its bicomplex and named contractions.
struct BuiltModel {
  ModelSpec spec;
  Bicomplex complex;
  std::optional<ExteriorModel> exterior;
  std::optional<VaismanModel> vaisman;
  std::vector<Contraction> contractions;

  /// Complex dimension n of the underlying manifold.
  int n() const { return complex.n(); }
  const Contraction* find_contraction(const std::string& name) const;
};

/// Throws InvalidModel when the payload does not yield a valid bicomplex.
BuiltModel build_model(const ModelSpec& spec);

}  // namespace hodgekit
