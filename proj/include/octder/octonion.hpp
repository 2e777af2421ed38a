#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "json.hpp"

#include "octder/linalg.hpp"
#include "octder/scalar.hpp"
#include "octder/structure_algebra.hpp"

namespace octder {

/// TypeI: e_i^2 = -1 for all i. TypeII (split): e_i^2 = -1 for i <= 3 and +1
/// for i > 3, with 1, e1, e2, e3 spanning a quaternion subalgebra.
enum class OctonionType { TypeI, TypeII };

std::string to_string(OctonionType t);

/// A basis product b_i b_j = sign * b_index.
struct SignedBasis {
  int index;
  int sign;
};

class OctonionElement;

/// Octonion algebra over a field, basis 1, e1, ..., e7. Built by doubling the
/// quaternions 1, i, j, k with
///   (a, b)(c, d) = (ac + g conj(d) b, d a + b conj(c)),
/// g = -1 for TypeI and g = +1 for TypeII, where e_{4+s} = (0, q_s).
/// Copies share the immutable product table.
class OctonionAlgebra {
 public:
  OctonionAlgebra(const Field& field, OctonionType type);

  const Field& field() const { return state_->field; }
  OctonionType type() const { return state_->type; }
  SignedBasis basis_product(int i, int j) const { return state_->table[i][j]; }
  /// Coordinates of b_i b_j.
  std::vector<Scalar> product_coords(int i, int j) const;

  OctonionElement zero() const;
  OctonionElement unit() const;
  OctonionElement basis(int k) const;
  OctonionElement element(const std::array<long, 8>& coords) const;

  /// {"type": "I"|"II", "field": ..., "products": 8x8 array of coordinate vectors}
  nlohmann::json table_json() const;

  friend bool operator==(const OctonionAlgebra& a, const OctonionAlgebra& b) {
    return a.state_ == b.state_ || (a.field() == b.field() && a.type() == b.type());
  }

 private:
  struct State {
    Field field;
    OctonionType type;
    std::array<std::array<SignedBasis, 8>, 8> table;
  };
  std::shared_ptr<const State> state_;
};

inline OctonionAlgebra build_octonion(const Field& field, OctonionType type) {
  return OctonionAlgebra(field, type);
}

class OctonionElement {
 public:
  OctonionElement(OctonionAlgebra algebra, std::array<Scalar, 8> coords);

  const OctonionAlgebra& algebra() const { return algebra_; }
  const std::array<Scalar, 8>& coords() const { return coords_; }
  const Scalar& operator[](int k) const { return coords_[k]; }
  bool is_zero() const;

  OctonionElement& operator+=(const OctonionElement& w);
  OctonionElement& operator-=(const OctonionElement& w);
  OctonionElement& operator*=(const Scalar& s);
  OctonionElement operator-() const;

  friend OctonionElement operator+(OctonionElement z, const OctonionElement& w) { return z += w; }
  friend OctonionElement operator-(OctonionElement z, const OctonionElement& w) { return z -= w; }
  friend OctonionElement operator*(const OctonionElement& z, const OctonionElement& w);
  friend OctonionElement operator*(const Scalar& s, OctonionElement z) { return z *= s; }
  friend bool operator==(const OctonionElement& z, const OctonionElement& w) {
    return z.algebra_ == w.algebra_ && z.coords_ == w.coords_;
  }

  std::string to_string() const;

 private:
  void require_same_algebra(const OctonionElement& w) const;

  OctonionAlgebra algebra_;
  std::array<Scalar, 8> coords_;
};

OctonionElement oct_mul(const OctonionElement& z, const OctonionElement& w);
OctonionElement conj(const OctonionElement& z);
Scalar real_part(const OctonionElement& z);
OctonionElement imag_part(const OctonionElement& z);
/// real(z conj(z)); negative on e_i with e_i^2 = +1.
Scalar norm(const OctonionElement& z);
/// (zw)u - z(wu)
OctonionElement associator(const OctonionElement& z, const OctonionElement& w,
                           const OctonionElement& u);

/// The octonion algebra as 8-dimensional structure constants.
StructureAlgebra as_structure_algebra(const OctonionAlgebra& o);
/// The quaternions 1, i, j, k as a standalone 4-dimensional algebra.
StructureAlgebra quaternion_algebra(const Field& field);

/// {a : [a,x,y] = [x,a,y] = [x,y,a] = 0 for all basis x, y}.
EchelonBasis nucleus(const StructureAlgebra& a);

}  // namespace octder
