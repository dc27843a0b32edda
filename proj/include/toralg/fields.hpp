#ifndef TORALG_FIELDS_HPP
#define TORALG_FIELDS_HPP

#include <optional>

#include "toralg/cone.hpp"
#include "toralg/laurent.hpp"

namespace toralg {

/// Homogeneous vector field of degree e in M and direction p in N,
/// acting by chi^m |-> <m,p> chi^{m+e}.
struct HomogeneousField {
  LatticeVector e;
  LatticeVector p;

  HomogeneousField(LatticeVector e_, LatticeVector p_) : e(std::move(e_)), p(std::move(p_)) {
    if (e.rank() != p.rank()) throw DimensionError("field degree/direction rank mismatch");
    if (e.ambient() != Ambient::M || p.ambient() != Ambient::N)
      throw DimensionError("field degree must live in M, direction in N");
    if (p.is_zero()) throw std::invalid_argument("zero direction: not a homogeneous field");
  }

  static HomogeneousField make(std::vector<int> e, std::vector<int> p) {
    std::vector<Int> ec(e.begin(), e.end()), pc(p.begin(), p.end());
    return HomogeneousField(LatticeVector(std::move(ec), Ambient::M),
                            LatticeVector(std::move(pc), Ambient::N));
  }

  bool operator==(const HomogeneousField& o) const { return e == o.e && p == o.p; }
};

enum class FieldKind { TypeI, TypeII, NotExtendable };

const char* field_kind_name(FieldKind k);

struct ClassificationRecord {
  FieldKind kind = FieldKind::NotExtendable;
  std::optional<LatticeVector> distinguished_ray;  // rho_e, Type II only
  bool is_lnd = false;
  bool is_semisimple = false;
  bool is_complete = false;
  bool preserves_haar = false;
  bool is_root = false;
};

/// One scalar multiple of a character monomial.
struct MonomialTerm {
  Int coeff;
  LatticeVector exponent;  // in M

  bool is_zero() const { return coeff == 0; }
  bool operator==(const MonomialTerm& o) const {
    return coeff == o.coeff && (coeff == 0 || exponent == o.exponent);
  }
};

/// Type I / Type II / NotExtendable trichotomy with the predicate flags.
ClassificationRecord classify(const RationalCone& sigma, const HomogeneousField& f);

/// d(chi^m) = <m,p> chi^{m+e}.
MonomialTerm apply_monomial(const HomogeneousField& f, const LatticeVector& m);

/// d^l(chi^m) with coefficient prod_{k<l} <m+ke, p> and exponent m+le.
MonomialTerm iterate_apply(const HomogeneousField& f, const LatticeVector& m,
                           unsigned long l);

/// [d_{e1,p1}, d_{e2,p2}] = d_{e1+e2, <e2,p1>p2 - <e1,p2>p1}; nullopt when zero.
std::optional<HomogeneousField> bracket(const HomogeneousField& f1,
                                        const HomogeneousField& f2);

/// Lemma criterion for vanishing on the orbit closure of tau.
/// Requires the field to extend to X_sigma (Type I or II).
bool vanishes_on_orbit_closure(const RationalCone& sigma, const HomogeneousField& f,
                               const Face& tau);

/// The same field as a one-term Laurent derivation (oracle representation).
LaurentVectorField to_laurent(const HomogeneousField& f);

}  // namespace toralg

#endif
