#include "octder/matalg.hpp"

#include <array>

namespace octder {

std::string to_string(SpaceKind k) {
  switch (k) {
    case SpaceKind::HermitianAnticommutator: return "h";
    case SpaceKind::AntihermitianCommutator: return "a";
    case SpaceKind::FullStandard: return "m-std";
    case SpaceKind::FullCommutator: return "m-comm";
    case SpaceKind::FullAnticommutator: return "m-anticomm";
  }
  return "?";
}

bool is_full(SpaceKind k) {
  return k == SpaceKind::FullStandard || k == SpaceKind::FullCommutator ||
         k == SpaceKind::FullAnticommutator;
}

namespace {

std::string field_token(const Field& f) {
  return f.is_rational() ? "q" : "mod" + std::to_string(f.modulus());
}

}  // namespace

std::string MatrixSpaceSpec::key() const {
  return to_string(kind) + "_" + std::to_string(n) + "_" +
         (oct_type == OctonionType::TypeI ? "1" : "2") + "_" + field_token(field);
}

std::string MatrixSpaceSpec::label() const {
  return to_string(kind) + std::to_string(n) + "(O_" + to_string(oct_type) + ") over " +
         field.to_string();
}

nlohmann::json MatrixSpaceSpec::to_json() const {
  return {{"space", to_string(kind)},
          {"n", n},
          {"oct_type", to_string(oct_type)},
          {"field", field.to_string()}};
}

void MatrixSpaceSpec::validate() const {
  if (n < 1) throw PreconditionError("matrix size n must be at least 1");
  if (!field.is_rational() && field.characteristic() == 2) {
    throw PreconditionError("characteristic two excluded");
  }
}

std::size_t space_dimension(SpaceKind kind, int n) {
  const std::size_t m = static_cast<std::size_t>(n);
  switch (kind) {
    case SpaceKind::HermitianAnticommutator: return 4 * m * m - 3 * m;
    case SpaceKind::AntihermitianCommutator: return 4 * m * m + 3 * m;
    default: return 8 * m * m;
  }
}

// ---------------------------------------------------------------------------
// OctMatrix

OctMatrix::OctMatrix(const OctonionAlgebra& algebra, int n)
    : algebra_(algebra), n_(n), entries_(static_cast<std::size_t>(n) * n, algebra.zero()) {
  if (n < 1) throw PreconditionError("matrix size must be positive");
}

OctMatrix OctMatrix::unit(const OctonionAlgebra& algebra, int n, int i, int j,
                          const OctonionElement& z) {
  OctMatrix m(algebra, n);
  if (i < 0 || j < 0 || i >= n || j >= n) throw PreconditionError("matrix index out of range");
  m(i, j) = z;
  return m;
}

OctMatrix OctMatrix::star() const {
  OctMatrix out(algebra_, n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) out(j, i) = conj((*this)(i, j));
  }
  return out;
}

bool OctMatrix::is_hermitian() const { return star() == *this; }

bool OctMatrix::is_antihermitian() const {
  OctMatrix s = star();
  s += *this;
  return s.is_zero();
}

bool OctMatrix::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

void OctMatrix::require_compatible(const OctMatrix& y) const {
  if (n_ != y.n_) throw PreconditionError("matrix size mismatch");
  if (!(algebra_ == y.algebra_)) throw PreconditionError("octonion algebra mismatch");
}

OctMatrix& OctMatrix::operator+=(const OctMatrix& y) {
  require_compatible(y);
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += y.entries_[k];
  return *this;
}

OctMatrix& OctMatrix::operator-=(const OctMatrix& y) {
  require_compatible(y);
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= y.entries_[k];
  return *this;
}

OctMatrix& OctMatrix::operator*=(const Scalar& s) {
  for (auto& e : entries_) e *= s;
  return *this;
}

OctMatrix matmul_oct(const OctMatrix& x, const OctMatrix& y) {
  if (x.size() != y.size()) throw PreconditionError("matrix size mismatch");
  if (!(x.algebra() == y.algebra())) throw PreconditionError("octonion algebra mismatch");
  const int n = x.size();
  OctMatrix out(x.algebra(), n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      if (x(i, k).is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        if (y(k, j).is_zero()) continue;
        out(i, j) += x(i, k) * y(k, j);
      }
    }
  }
  return out;
}

OctMatrix space_product(SpaceKind kind, const OctMatrix& x, const OctMatrix& y) {
  switch (kind) {
    case SpaceKind::FullStandard: return matmul_oct(x, y);
    case SpaceKind::HermitianAnticommutator:
    case SpaceKind::FullAnticommutator: return matmul_oct(x, y) + matmul_oct(y, x);
    case SpaceKind::AntihermitianCommutator:
    case SpaceKind::FullCommutator: return matmul_oct(x, y) - matmul_oct(y, x);
  }
  throw InternalError("unknown space kind");
}

// ---------------------------------------------------------------------------
// Basis bookkeeping

namespace {

const std::array<const char*, 8> kOctLabels = {"1", "e1", "e2", "e3", "e4", "e5", "e6", "e7"};

struct BasisInfo {
  bool diagonal;
  int i;
  int j;
  int oct;  // octonion basis index of the (i, j) entry
};

std::vector<BasisInfo> basis_info(const MatrixSpaceSpec& spec) {
  const int n = spec.n;
  std::vector<BasisInfo> out;
  switch (spec.kind) {
    case SpaceKind::HermitianAnticommutator:
      for (int i = 0; i < n; ++i) out.push_back({true, i, i, 0});
      break;
    case SpaceKind::AntihermitianCommutator:
      for (int t = 0; t < n; ++t) {
        for (int k = 1; k < 8; ++k) out.push_back({true, t, t, k});
      }
      break;
    default:
      for (int t = 0; t < n; ++t) {
        for (int k = 0; k < 8; ++k) out.push_back({true, t, t, k});
      }
      break;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j || (!is_full(spec.kind) && j < i)) continue;
      for (int k = 0; k < 8; ++k) out.push_back({false, i, j, k});
    }
  }
  return out;
}

std::string pos(int i, int j) { return std::to_string(i + 1) + std::to_string(j + 1); }

std::string label_for(const MatrixSpaceSpec& spec, const BasisInfo& b) {
  switch (spec.kind) {
    case SpaceKind::HermitianAnticommutator:
      return b.diagonal ? "E" + pos(b.i, b.i) : "h" + pos(b.i, b.j) + "[" + kOctLabels[b.oct] + "]";
    case SpaceKind::AntihermitianCommutator:
      return "a" + pos(b.i, b.j) + "[" + kOctLabels[b.oct] + "]";
    default:
      return "m" + pos(b.i, b.j) + "[" + kOctLabels[b.oct] + "]";
  }
}

OctMatrix matrix_for(const MatrixSpaceSpec& spec, const OctonionAlgebra& o, const BasisInfo& b) {
  const auto z = o.basis(b.oct);
  OctMatrix m = OctMatrix::unit(o, spec.n, b.i, b.j, z);
  if (b.diagonal || is_full(spec.kind)) return m;
  if (spec.kind == SpaceKind::HermitianAnticommutator) {
    m(b.j, b.i) = conj(z);
  } else {
    m(b.j, b.i) = -conj(z);
  }
  return m;
}

}  // namespace

std::vector<BasisElement> basis_enumerate(const MatrixSpaceSpec& spec) {
  spec.validate();
  const OctonionAlgebra o(spec.field, spec.oct_type);
  std::vector<BasisElement> out;
  for (const auto& b : basis_info(spec)) out.push_back({label_for(spec, b), matrix_for(spec, o, b)});
  return out;
}

std::vector<Scalar> coordinates(const MatrixSpaceSpec& spec, const OctMatrix& x) {
  if (x.size() != spec.n) throw PreconditionError("matrix size does not match the space");
  if (spec.kind == SpaceKind::HermitianAnticommutator && !x.is_hermitian()) {
    throw InternalError("matrix is not hermitian");
  }
  if (spec.kind == SpaceKind::AntihermitianCommutator && !x.is_antihermitian()) {
    throw InternalError("matrix is not antihermitian");
  }
  std::vector<Scalar> out;
  out.reserve(space_dimension(spec.kind, spec.n));
  for (const auto& b : basis_info(spec)) out.push_back(x(b.i, b.j)[b.oct]);
  if (spec.kind == SpaceKind::HermitianAnticommutator) {
    // hermitian diagonal entries are conj-fixed, hence real; nothing else to check
    for (int i = 0; i < spec.n; ++i) {
      if (!imag_part(x(i, i)).is_zero()) throw InternalError("hermitian diagonal is not real");
    }
  }
  return out;
}

OctMatrix from_coordinates(const MatrixSpaceSpec& spec, std::span<const Scalar> coords) {
  const auto info = basis_info(spec);
  if (coords.size() != info.size()) throw PreconditionError("coordinate length does not match the space");
  const OctonionAlgebra o(spec.field, spec.oct_type);
  OctMatrix x(o, spec.n);
  for (std::size_t k = 0; k < info.size(); ++k) {
    if (coords[k].is_zero()) continue;
    OctMatrix term = matrix_for(spec, o, info[k]);
    term *= coords[k];
    x += term;
  }
  return x;
}

StructureAlgebra build_algebra(const MatrixSpaceSpec& spec) {
  spec.validate();
  const auto basis = basis_enumerate(spec);
  std::vector<std::string> labels;
  for (const auto& b : basis) labels.push_back(b.label);

  ProductSymmetry sym = ProductSymmetry::None;
  if (spec.kind == SpaceKind::HermitianAnticommutator || spec.kind == SpaceKind::FullAnticommutator) {
    sym = ProductSymmetry::Commutative;
  } else if (spec.kind == SpaceKind::AntihermitianCommutator || spec.kind == SpaceKind::FullCommutator) {
    sym = ProductSymmetry::Anticommutative;
  }
  StructureAlgebra a(spec.field, std::move(labels), sym);
  a.set_name(spec.key());

  const std::size_t d = basis.size();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const OctMatrix prod = space_product(spec.kind, basis[i].matrix, basis[j].matrix);
      const auto coords = coordinates(spec, prod);
      if (!(from_coordinates(spec, coords) == prod)) {
        throw InternalError("product " + basis[i].label + " * " + basis[j].label +
                            " falls outside the basis span");
      }
      std::vector<StructureTerm> terms;
      for (std::size_t k = 0; k < d; ++k) {
        if (!coords[k].is_zero()) terms.push_back({k, coords[k]});
      }
      a.set_product(i, j, std::move(terms));
    }
  }
  a.verify_symmetry();
  return a;
}

nlohmann::json export_algebra(const MatrixSpaceSpec& spec, const StructureAlgebra& a) {
  nlohmann::json j = a.to_json();
  j["spec"] = spec.to_json();
  return j;
}

// ---------------------------------------------------------------------------
// Closed-form product families

namespace {

class Crosscheck {
 public:
  Crosscheck(const MatrixSpaceSpec& spec, const StructureAlgebra& a)
      : spec_(spec), alg_(a), o_(spec.field, spec.oct_type), info_(basis_info(spec)) {}

  std::vector<FamilyCheck> run() {
    const bool herm = spec_.kind == SpaceKind::HermitianAnticommutator;
    std::vector<FamilyCheck> fams;
    if (herm) {
      for (const char* f : {"Eii*Eii", "Eii*(ij)", "Ejj*(ij)", "(ij)*(ij)", "(ij)*(jk)", "vanishing"}) {
        fams.push_back({f});
      }
    } else {
      for (const char* f : {"eiEtt*ejEtt", "eiEtt*(tr)", "eiErr*(tr)", "(tr)*(tr)", "(tr)*(rs)", "vanishing"}) {
        fams.push_back({f});
      }
    }
    const std::size_t d = info_.size();
    for (std::size_t p = 0; p < d; ++p) {
      for (std::size_t q = 0; q < d; ++q) {
        auto [family, predicted] = herm ? predict_h(info_[p], info_[q]) : predict_a(info_[p], info_[q]);
        auto& fam = fams[family];
        ++fam.instances;
        const auto expected = coordinates(spec_, predicted);
        std::vector<Scalar> actual(d, Scalar::zero(spec_.field));
        for (const auto& t : alg_.product(p, q)) actual[t.index] = t.coeff;
        if (expected != actual) ++fam.mismatches;
      }
    }
    return fams;
  }

 private:
  static constexpr int kVanishing = 5;

  OctonionElement z_of(const BasisInfo& b) const { return o_.basis(b.oct); }
  Scalar s(long v) const { return Scalar(spec_.field, v); }
  OctMatrix unit(int i, int j, const OctonionElement& z) const {
    return OctMatrix::unit(o_, spec_.n, i, j, z);
  }
  OctMatrix zero() const { return OctMatrix(o_, spec_.n); }

  // The off-diagonal basis element b, rewritten as sign * (z E_{first,other}
  // +- conj(z) E_{other,first}).
  std::pair<OctonionElement, long> oriented(const BasisInfo& b, int first) const {
    if (first == b.i) return {z_of(b), 1};
    const bool herm = spec_.kind == SpaceKind::HermitianAnticommutator;
    return {conj(z_of(b)), herm ? 1 : -1};
  }

  static int other(const BasisInfo& b, int idx) { return b.i == idx ? b.j : b.i; }

  static int shared_index(const BasisInfo& x, const BasisInfo& y) {
    if (x.i == y.i || x.i == y.j) return x.i;
    if (x.j == y.i || x.j == y.j) return x.j;
    return -1;
  }

  std::pair<int, OctMatrix> predict_h(const BasisInfo& x, const BasisInfo& y) const {
    if (x.diagonal && y.diagonal) {
      if (x.i != y.i) return {kVanishing, zero()};
      auto m = unit(x.i, x.i, o_.unit());
      m *= s(2);
      return {0, m};
    }
    if (x.diagonal != y.diagonal) {
      const BasisInfo& dg = x.diagonal ? x : y;
      const BasisInfo& off = x.diagonal ? y : x;
      if (dg.i != off.i && dg.i != off.j) return {kVanishing, zero()};
      const int family = dg.i == off.i ? 1 : 2;
      const auto [z, sign] = oriented(off, off.i);
      auto m = unit(off.i, off.j, z) + unit(off.j, off.i, conj(z));
      m *= s(sign);
      return {family, m};
    }
    if (x.i == y.i && x.j == y.j) {
      const auto [z, sz] = oriented(x, x.i);
      const auto [w, sw] = oriented(y, x.i);
      const Scalar coeff = s(2 * sz * sw) * real_part(z * conj(w));
      auto m = unit(x.i, x.i, o_.unit()) + unit(x.j, x.j, o_.unit());
      m *= coeff;
      return {3, m};
    }
    const int sh = shared_index(x, y);
    if (sh < 0) return {kVanishing, zero()};
    const int a = other(x, sh), c = other(y, sh);
    const auto [z, sz] = oriented(x, a);
    const auto [w, sw] = oriented(y, sh);
    auto m = unit(a, c, z * w) + unit(c, a, conj(w) * conj(z));
    m *= s(sz * sw);
    return {4, m};
  }

  std::pair<int, OctMatrix> predict_a(const BasisInfo& x, const BasisInfo& y) const {
    if (x.diagonal && y.diagonal) {
      if (x.i != y.i || x.oct == y.oct) return {kVanishing, zero()};
      auto m = unit(x.i, x.i, z_of(x) * z_of(y));
      m *= s(2);
      return {0, m};
    }
    if (x.diagonal != y.diagonal) {
      const BasisInfo& dg = x.diagonal ? x : y;
      const BasisInfo& off = x.diagonal ? y : x;
      if (dg.i != off.i && dg.i != off.j) return {kVanishing, zero()};
      const auto ei = z_of(dg);
      const auto z = z_of(off);  // natural orientation: z E_tr - conj(z) E_rt with t < r
      const int t = off.i, r = off.j;
      int family;
      OctMatrix m = zero();
      if (dg.i == t) {
        family = 1;
        m = unit(t, r, ei * z) + unit(r, t, conj(z) * ei);
      } else {
        family = 2;
        m = unit(t, r, -(z * ei)) + unit(r, t, -(ei * conj(z)));
      }
      if (!x.diagonal) m *= s(-1);  // [off, diag] = -[diag, off]
      return {family, m};
    }
    if (x.i == y.i && x.j == y.j) {
      const int t = x.i, r = x.j;
      const auto [z, sz] = oriented(x, t);
      const auto [w, sw] = oriented(y, t);
      auto m = unit(t, t, imag_part(w * conj(z))) + unit(r, r, imag_part(conj(w) * z));
      m *= s(2 * sz * sw);
      return {3, m};
    }
    const int sh = shared_index(x, y);
    if (sh < 0) return {kVanishing, zero()};
    const int t = other(x, sh), u = other(y, sh);
    const auto [z, sz] = oriented(x, t);
    const auto [w, sw] = oriented(y, sh);
    auto m = unit(t, u, z * w) - unit(u, t, conj(w) * conj(z));
    m *= s(sz * sw);
    return {4, m};
  }

  const MatrixSpaceSpec& spec_;
  const StructureAlgebra& alg_;
  OctonionAlgebra o_;
  std::vector<BasisInfo> info_;
};

}  // namespace

std::vector<FamilyCheck> crosscheck_products(const MatrixSpaceSpec& spec, const StructureAlgebra& a) {
  if (is_full(spec.kind)) {
    throw PreconditionError("product cross-check applies to hermitian and antihermitian spaces only");
  }
  if (a.dim() != space_dimension(spec.kind, spec.n)) {
    throw PreconditionError("structure algebra does not match the space");
  }
  return Crosscheck(spec, a).run();
}

std::vector<FamilyCheck> crosscheck_products(const MatrixSpaceSpec& spec) {
  return crosscheck_products(spec, build_algebra(spec));
}

}  // namespace octder
