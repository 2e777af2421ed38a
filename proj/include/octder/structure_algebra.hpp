#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "octder/scalar.hpp"

namespace octder {

enum class ProductSymmetry { None, Commutative, Anticommutative };

std::string to_string(ProductSymmetry s);

struct StructureTerm {
  std::size_t index;
  Scalar coeff;

  friend bool operator==(const StructureTerm&, const StructureTerm&) = default;
};

/// A finite-dimensional algebra given by structure constants:
/// b_i * b_j = sum_k c_{ij}^k b_k. Storage is one sparse term list per (i, j).
class StructureAlgebra {
 public:
  StructureAlgebra() = default;
  StructureAlgebra(Field field, std::vector<std::string> labels,
                   ProductSymmetry symmetry = ProductSymmetry::None);

  const Field& field() const { return field_; }
  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  ProductSymmetry symmetry() const { return symmetry_; }

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  /// Replaces the product b_i * b_j; terms are merged, sorted and zero-free.
  void set_product(std::size_t i, std::size_t j, std::vector<StructureTerm> terms);
  const std::vector<StructureTerm>& product(std::size_t i, std::size_t j) const;
  Scalar constant(std::size_t i, std::size_t j, std::size_t k) const;

  /// Bilinear product of two coordinate vectors.
  std::vector<Scalar> multiply(std::span<const Scalar> a, std::span<const Scalar> b) const;
  /// (ab)c - a(bc)
  std::vector<Scalar> associator(std::span<const Scalar> a, std::span<const Scalar> b,
                                 std::span<const Scalar> c) const;
  std::vector<Scalar> basis_vector(std::size_t i) const;

  /// Checks the declared symmetry against the constants; throws InternalError.
  void verify_symmetry() const;

  std::size_t nonzero_constants() const;

  /// {"dim", "labels", "symmetry", "field", "constants": [{"i","j","k","value"}]}
  nlohmann::json to_json() const;
  static StructureAlgebra from_json(const nlohmann::json& j);

 private:
  Field field_;
  std::vector<std::string> labels_;
  ProductSymmetry symmetry_ = ProductSymmetry::None;
  std::string name_;
  std::vector<std::vector<StructureTerm>> products_;
};

}  // namespace octder
