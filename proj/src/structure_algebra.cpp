#include "octder/structure_algebra.hpp"

#include <algorithm>

#include "octder/error.hpp"

namespace octder {

std::string to_string(ProductSymmetry s) {
  switch (s) {
    case ProductSymmetry::None: return "none";
    case ProductSymmetry::Commutative: return "commutative";
    case ProductSymmetry::Anticommutative: return "anticommutative";
  }
  return "?";
}

namespace {

ProductSymmetry symmetry_from_string(const std::string& s) {
  if (s == "none") return ProductSymmetry::None;
  if (s == "commutative") return ProductSymmetry::Commutative;
  if (s == "anticommutative") return ProductSymmetry::Anticommutative;
  throw PreconditionError("unknown symmetry '" + s + "'");
}

}  // namespace

StructureAlgebra::StructureAlgebra(Field field, std::vector<std::string> labels,
                                   ProductSymmetry symmetry)
    : field_(field),
      labels_(std::move(labels)),
      symmetry_(symmetry),
      products_(labels_.size() * labels_.size()) {}

void StructureAlgebra::set_product(std::size_t i, std::size_t j, std::vector<StructureTerm> terms) {
  const std::size_t d = dim();
  if (i >= d || j >= d) throw PreconditionError("basis index out of range");
  std::stable_sort(terms.begin(), terms.end(),
                   [](const StructureTerm& a, const StructureTerm& b) { return a.index < b.index; });
  std::vector<StructureTerm> merged;
  for (auto& t : terms) {
    if (t.index >= d) throw PreconditionError("structure constant index out of range");
    if (t.coeff.field() != field_) throw PreconditionError("structure constant field mismatch");
    if (!merged.empty() && merged.back().index == t.index) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const StructureTerm& t) { return t.coeff.is_zero(); });
  products_[i * d + j] = std::move(merged);
}

const std::vector<StructureTerm>& StructureAlgebra::product(std::size_t i, std::size_t j) const {
  return products_.at(i * dim() + j);
}

Scalar StructureAlgebra::constant(std::size_t i, std::size_t j, std::size_t k) const {
  for (const auto& t : product(i, j)) {
    if (t.index == k) return t.coeff;
  }
  return Scalar::zero(field_);
}

std::vector<Scalar> StructureAlgebra::multiply(std::span<const Scalar> a,
                                               std::span<const Scalar> b) const {
  const std::size_t d = dim();
  if (a.size() != d || b.size() != d) throw PreconditionError("coordinate length mismatch");
  std::vector<Scalar> out(d, Scalar::zero(field_));
  for (std::size_t i = 0; i < d; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (b[j].is_zero()) continue;
      const Scalar ab = a[i] * b[j];
      for (const auto& t : products_[i * d + j]) out[t.index] += ab * t.coeff;
    }
  }
  return out;
}

std::vector<Scalar> StructureAlgebra::associator(std::span<const Scalar> a, std::span<const Scalar> b,
                                                 std::span<const Scalar> c) const {
  auto left = multiply(multiply(a, b), c);
  const auto right = multiply(a, multiply(b, c));
  for (std::size_t k = 0; k < left.size(); ++k) left[k] -= right[k];
  return left;
}

std::vector<Scalar> StructureAlgebra::basis_vector(std::size_t i) const {
  std::vector<Scalar> v(dim(), Scalar::zero(field_));
  v.at(i) = Scalar::one(field_);
  return v;
}

void StructureAlgebra::verify_symmetry() const {
  if (symmetry_ == ProductSymmetry::None) return;
  const std::size_t d = dim();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      const auto& ij = product(i, j);
      const auto& ji = product(j, i);
      if (symmetry_ == ProductSymmetry::Commutative) {
        if (ij != ji) throw InternalError("commutative flag contradicted at (" + labels_[i] + ", " + labels_[j] + ")");
        continue;
      }
      if (i == j && !ij.empty()) throw InternalError("anticommutative algebra with nonzero square " + labels_[i]);
      if (ij.size() != ji.size()) throw InternalError("anticommutative flag contradicted");
      for (std::size_t t = 0; t < ij.size(); ++t) {
        if (ij[t].index != ji[t].index || ij[t].coeff != -ji[t].coeff) {
          throw InternalError("anticommutative flag contradicted at (" + labels_[i] + ", " + labels_[j] + ")");
        }
      }
    }
  }
}

std::size_t StructureAlgebra::nonzero_constants() const {
  std::size_t n = 0;
  for (const auto& p : products_) n += p.size();
  return n;
}

nlohmann::json StructureAlgebra::to_json() const {
  nlohmann::json constants = nlohmann::json::array();
  const std::size_t d = dim();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (const auto& t : product(i, j)) {
        constants.push_back({{"i", i}, {"j", j}, {"k", t.index}, {"value", t.coeff.to_string()}});
      }
    }
  }
  return {{"dim", d},
          {"field", field_.to_string()},
          {"labels", labels_},
          {"symmetry", to_string(symmetry_)},
          {"constants", std::move(constants)}};
}

StructureAlgebra StructureAlgebra::from_json(const nlohmann::json& j) {
  try {
    const Field field = Field::parse(j.at("field").get<std::string>());
    auto labels = j.at("labels").get<std::vector<std::string>>();
    if (labels.size() != j.at("dim").get<std::size_t>()) {
      throw PreconditionError("label count does not match dim");
    }
    StructureAlgebra a(field, std::move(labels),
                       symmetry_from_string(j.at("symmetry").get<std::string>()));
    const std::size_t d = a.dim();
    std::vector<std::vector<StructureTerm>> pending(d * d);
    for (const auto& c : j.at("constants")) {
      const auto i = c.at("i").get<std::size_t>();
      const auto jj = c.at("j").get<std::size_t>();
      if (i >= d || jj >= d) throw PreconditionError("constant index out of range");
      pending[i * d + jj].push_back(
          {c.at("k").get<std::size_t>(), Scalar::parse(field, c.at("value").get<std::string>())});
    }
    for (std::size_t p = 0; p < d * d; ++p) {
      if (!pending[p].empty()) a.set_product(p / d, p % d, std::move(pending[p]));
    }
    a.verify_symmetry();
    return a;
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError(std::string("malformed structure-constant JSON: ") + e.what());
  }
}

}  // namespace octder
