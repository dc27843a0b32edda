#include "toralg/fields.hpp"

#include "toralg/intmat.hpp"

namespace toralg {

const char* field_kind_name(FieldKind k) {
  switch (k) {
    case FieldKind::TypeI:
      return "TypeI";
    case FieldKind::TypeII:
      return "TypeII";
    default:
      return "NotExtendable";
  }
}

ClassificationRecord classify(const RationalCone& sigma, const HomogeneousField& f) {
  if (!sigma.is_pointed()) throw PointednessError("classify: cone is not pointed");
  if (f.e.rank() != sigma.rank()) throw DimensionError("classify: rank mismatch");

  ClassificationRecord rec;
  rec.preserves_haar = pairing(f.e, f.p) == 0;

  bool type1 = true;
  for (const auto& rho : sigma.rays())
    if (pairing(f.e, rho) < 0) {
      type1 = false;
      break;
    }
  if (type1) {
    rec.kind = FieldKind::TypeI;
    rec.is_semisimple = f.e.is_zero();
    rec.is_complete = rec.preserves_haar;
    return rec;
  }

  // Type II: p is an integer multiple of some ray rho_e with <e,rho_e> = -1
  // and <e,rho> >= 0 elsewhere.
  LatticeVector dir = f.p.primitivized();
  for (const auto& rho : sigma.rays()) {
    if (rho != dir && rho != -dir) continue;
    if (pairing(f.e, rho) != -1) continue;
    bool rest_ok = true;
    for (const auto& other : sigma.rays()) {
      if (other == rho) continue;
      if (pairing(f.e, other) < 0) {
        rest_ok = false;
        break;
      }
    }
    if (rest_ok) {
      rec.kind = FieldKind::TypeII;
      rec.distinguished_ray = rho;
      rec.is_lnd = true;
      rec.is_complete = true;
      rec.is_root = true;
      return rec;
    }
  }
  rec.kind = FieldKind::NotExtendable;
  return rec;
}

MonomialTerm apply_monomial(const HomogeneousField& f, const LatticeVector& m) {
  return MonomialTerm{pairing(m, f.p), m + f.e};
}

MonomialTerm iterate_apply(const HomogeneousField& f, const LatticeVector& m,
                           unsigned long l) {
  Int coeff = 1;
  for (unsigned long k = 0; k < l && coeff != 0; ++k)
    coeff *= pairing(m + f.e * Int(k), f.p);
  return MonomialTerm{coeff, m + f.e * Int(l)};
}

std::optional<HomogeneousField> bracket(const HomogeneousField& f1,
                                        const HomogeneousField& f2) {
  Int c2 = pairing(f2.e, f1.p);
  Int c1 = pairing(f1.e, f2.p);
  LatticeVector p = f2.p * c2 - f1.p * c1;
  if (p.is_zero()) return std::nullopt;
  return HomogeneousField(f1.e + f2.e, std::move(p));
}

bool vanishes_on_orbit_closure(const RationalCone& sigma, const HomogeneousField& f,
                               const Face& tau) {
  ClassificationRecord rec = classify(sigma, f);
  if (rec.kind == FieldKind::NotExtendable)
    throw std::invalid_argument("vanishing test: field does not extend to the variety");
  // validate tau against sigma's face lattice
  sigma.face_by_indices(tau.ray_indices);

  for (const auto& rho : tau.rays)
    if (pairing(f.e, rho) > 0) return true;
  if (rec.kind == FieldKind::TypeII) return false;

  // Type I residual branch: p in the rational span of tau.
  if (tau.rays.empty()) return false;
  IntMat rows;
  for (const auto& r : tau.rays) rows.push_back(r.coords());
  std::size_t base = mat_rank(rows);
  rows.push_back(f.p.coords());
  return mat_rank(rows) == base;
}

LaurentVectorField to_laurent(const HomogeneousField& f) {
  return LaurentVectorField::term_int(f.e.coords(), f.p.coords());
}

}  // namespace toralg
