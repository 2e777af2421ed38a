#include "octder/octonion.hpp"

#include <sstream>

namespace octder {

std::string to_string(OctonionType t) { return t == OctonionType::TypeI ? "I" : "II"; }

namespace {

using QuatTable = std::array<std::array<SignedBasis, 4>, 4>;

// 1, i, j, k with i^2 = j^2 = -1, ij = k = -ji.
constexpr QuatTable kQuaternions = {{
    {{{0, 1}, {1, 1}, {2, 1}, {3, 1}}},
    {{{1, 1}, {0, -1}, {3, 1}, {2, -1}}},
    {{{2, 1}, {3, -1}, {0, -1}, {1, 1}}},
    {{{3, 1}, {2, 1}, {1, -1}, {0, -1}}},
}};

int quat_conj_sign(int s) { return s == 0 ? 1 : -1; }

SignedBasis quat_mul(int a, int b) { return kQuaternions[a][b]; }

std::array<std::array<SignedBasis, 8>, 8> cayley_dickson(int gamma) {
  std::array<std::array<SignedBasis, 8>, 8> t{};
  for (int x = 0; x < 8; ++x) {
    for (int y = 0; y < 8; ++y) {
      const int a = x % 4, c = y % 4;
      const bool x_hi = x >= 4, y_hi = y >= 4;
      SignedBasis r{};
      if (!x_hi && !y_hi) {
        r = quat_mul(a, c);  // (a,0)(c,0) = (ac, 0)
      } else if (!x_hi && y_hi) {
        const auto q = quat_mul(c, a);  // (a,0)(0,d) = (0, d a)
        r = {q.index + 4, q.sign};
      } else if (x_hi && !y_hi) {
        const auto q = quat_mul(a, c);  // (0,b)(c,0) = (0, b conj(c))
        r = {q.index + 4, q.sign * quat_conj_sign(c)};
      } else {
        const auto q = quat_mul(c, a);  // (0,b)(0,d) = (g conj(d) b, 0)
        r = {q.index, q.sign * quat_conj_sign(c) * gamma};
      }
      t[x][y] = r;
    }
  }
  return t;
}

}  // namespace

OctonionAlgebra::OctonionAlgebra(const Field& field, OctonionType type) {
  if (!field.is_rational() && field.characteristic() == 2) {
    throw PreconditionError("characteristic two excluded");
  }
  auto s = std::make_shared<State>();
  s->field = field;
  s->type = type;
  s->table = cayley_dickson(type == OctonionType::TypeI ? -1 : 1);
  state_ = std::move(s);
}

std::vector<Scalar> OctonionAlgebra::product_coords(int i, int j) const {
  std::vector<Scalar> v(8, Scalar::zero(field()));
  const auto p = basis_product(i, j);
  v[p.index] = Scalar(field(), p.sign);
  return v;
}

OctonionElement OctonionAlgebra::zero() const {
  std::array<Scalar, 8> c;
  c.fill(Scalar::zero(field()));
  return OctonionElement(*this, std::move(c));
}

OctonionElement OctonionAlgebra::unit() const { return basis(0); }

OctonionElement OctonionAlgebra::basis(int k) const {
  if (k < 0 || k >= 8) throw PreconditionError("octonion basis index out of range");
  auto z = zero();
  std::array<Scalar, 8> c = z.coords();
  c[k] = Scalar::one(field());
  return OctonionElement(*this, std::move(c));
}

OctonionElement OctonionAlgebra::element(const std::array<long, 8>& coords) const {
  std::array<Scalar, 8> c;
  for (int k = 0; k < 8; ++k) c[k] = Scalar(field(), coords[k]);
  return OctonionElement(*this, std::move(c));
}

nlohmann::json OctonionAlgebra::table_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < 8; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < 8; ++j) {
      nlohmann::json coords = nlohmann::json::array();
      for (const auto& s : product_coords(i, j)) coords.push_back(s.to_string());
      row.push_back(std::move(coords));
    }
    rows.push_back(std::move(row));
  }
  return {{"type", to_string(type())}, {"field", field().to_string()}, {"products", std::move(rows)}};
}

// ---------------------------------------------------------------------------

OctonionElement::OctonionElement(OctonionAlgebra algebra, std::array<Scalar, 8> coords)
    : algebra_(std::move(algebra)), coords_(std::move(coords)) {
  for (const auto& c : coords_) {
    if (c.field() != algebra_.field()) throw PreconditionError("octonion coordinate in the wrong field");
  }
}

bool OctonionElement::is_zero() const {
  for (const auto& c : coords_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

void OctonionElement::require_same_algebra(const OctonionElement& w) const {
  if (!(algebra_ == w.algebra_)) throw PreconditionError("octonion algebra mismatch");
}

OctonionElement& OctonionElement::operator+=(const OctonionElement& w) {
  require_same_algebra(w);
  for (int k = 0; k < 8; ++k) coords_[k] += w.coords_[k];
  return *this;
}

OctonionElement& OctonionElement::operator-=(const OctonionElement& w) {
  require_same_algebra(w);
  for (int k = 0; k < 8; ++k) coords_[k] -= w.coords_[k];
  return *this;
}

OctonionElement& OctonionElement::operator*=(const Scalar& s) {
  for (auto& c : coords_) c *= s;
  return *this;
}

OctonionElement OctonionElement::operator-() const {
  OctonionElement r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

OctonionElement operator*(const OctonionElement& z, const OctonionElement& w) {
  z.require_same_algebra(w);
  auto out = z.algebra_.zero();
  for (int i = 0; i < 8; ++i) {
    if (z.coords_[i].is_zero()) continue;
    for (int j = 0; j < 8; ++j) {
      if (w.coords_[j].is_zero()) continue;
      const auto p = z.algebra_.basis_product(i, j);
      const Scalar term = z.coords_[i] * w.coords_[j];
      if (p.sign > 0) {
        out.coords_[p.index] += term;
      } else {
        out.coords_[p.index] -= term;
      }
    }
  }
  return out;
}

std::string OctonionElement::to_string() const {
  std::ostringstream os;
  os << '(';
  for (int k = 0; k < 8; ++k) os << (k ? ", " : "") << coords_[k];
  os << ')';
  return os.str();
}

OctonionElement oct_mul(const OctonionElement& z, const OctonionElement& w) { return z * w; }

OctonionElement conj(const OctonionElement& z) {
  std::array<Scalar, 8> c = z.coords();
  for (int k = 1; k < 8; ++k) c[k] = -c[k];
  return OctonionElement(z.algebra(), std::move(c));
}

Scalar real_part(const OctonionElement& z) { return z[0]; }

OctonionElement imag_part(const OctonionElement& z) {
  std::array<Scalar, 8> c = z.coords();
  c[0] = Scalar::zero(z.algebra().field());
  return OctonionElement(z.algebra(), std::move(c));
}

Scalar norm(const OctonionElement& z) { return real_part(z * conj(z)); }

OctonionElement associator(const OctonionElement& z, const OctonionElement& w,
                           const OctonionElement& u) {
  return (z * w) * u - z * (w * u);
}

StructureAlgebra as_structure_algebra(const OctonionAlgebra& o) {
  std::vector<std::string> labels = {"1", "e1", "e2", "e3", "e4", "e5", "e6", "e7"};
  StructureAlgebra a(o.field(), std::move(labels));
  a.set_name("O" + to_string(o.type()));
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      const auto p = o.basis_product(i, j);
      a.set_product(i, j, {{static_cast<std::size_t>(p.index), Scalar(o.field(), p.sign)}});
    }
  }
  return a;
}

StructureAlgebra quaternion_algebra(const Field& field) {
  StructureAlgebra a(field, {"1", "i", "j", "k"});
  a.set_name("H");
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const auto p = kQuaternions[i][j];
      a.set_product(i, j, {{static_cast<std::size_t>(p.index), Scalar(field, p.sign)}});
    }
  }
  return a;
}

EchelonBasis nucleus(const StructureAlgebra& a) {
  const std::size_t d = a.dim();
  const Field& f = a.field();
  // assoc[l][i][j] = [b_l, b_i, b_j] and its two rotations, as coordinate vectors.
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t k = 0; k < d; ++k) basis.push_back(a.basis_vector(k));

  SparseMatrix m(f, 3 * d * d * d, d);
  for (std::size_t l = 0; l < d; ++l) {
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        const std::array<std::vector<Scalar>, 3> parts = {
            a.associator(basis[l], basis[i], basis[j]),
            a.associator(basis[i], basis[l], basis[j]),
            a.associator(basis[i], basis[j], basis[l]),
        };
        for (std::size_t s = 0; s < 3; ++s) {
          for (std::size_t out = 0; out < d; ++out) {
            if (!parts[s][out].is_zero()) {
              m.add(((s * d + i) * d + j) * d + out, l, parts[s][out]);
            }
          }
        }
      }
    }
  }
  return null_space(m);
}

}  // namespace octder
