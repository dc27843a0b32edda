#ifndef TORALG_ADP_HPP
#define TORALG_ADP_HPP

#include <set>
#include <string>
#include <vector>

#include "toralg/fields.hpp"

namespace toralg {

/// T-invariant closed subvariety Y, encoded as the set of faces whose orbit
/// closures make it up. The constructor upward-closes the set in the face
/// order and inserts every non-smooth face; `closure_inserted` reports
/// whether anything had to be added.
class InvariantSubvariety {
 public:
  InvariantSubvariety(const RationalCone& sigma,
                      const std::vector<std::vector<std::size_t>>& face_sets);

  const std::set<std::vector<std::size_t>>& faces() const { return faces_; }
  bool contains(const std::vector<std::size_t>& ray_indices) const;
  bool closure_inserted() const { return closure_inserted_; }

 private:
  std::set<std::vector<std::size_t>> faces_;
  bool closure_inserted_ = false;
};

/// chi^m lies in the ideal I(tau) of the orbit closure iff m pairs > 0
/// against some ray of tau. Requires m in the dual semigroup.
bool orbit_ideal_contains(const RationalCone& sigma, const Face& tau,
                          const LatticeVector& m);

/// Root e with <rho_dist, e> = -1, zero on the other rays of tau, and
/// strictly positive on every ray of sigma outside tau. Lattice solve plus
/// a bounded shift search; throws with the search region on exhaustion.
LatticeVector find_root_for_face(const RationalCone& sigma, const Face& tau,
                                 std::size_t distinguished_index = 0);

/// All Type II degrees with max-norm <= box_bound, with distinguished rays,
/// in lexicographic order.
std::vector<std::pair<LatticeVector, LatticeVector>> enumerate_roots(
    const RationalCone& sigma, long box_bound);

/// Theorem criterion: ADP relative to Y holds iff some ray orbit stays
/// outside Y. Requires rank >= 2.
bool decide_adp(const RationalCone& sigma, const InvariantSubvariety& y);

/// Machine-checkable witness assembled from the constructive proof.
struct AdpCertificate {
  LatticeVector witness_ray;  // rho_1
  LatticeVector root_e1;      // root with distinguished ray rho_1
  LatticeVector e3;           // e1 + e2, e2 and e3 interior to the dual
  LatticeVector e4;           // e3 - e1
  LatticeVector p4;           // <e4,p4> = 0, <e1,p4> != 0
  LatticeVector bracket_e;    // degree of [d_{e1,rho1}, d_{e4,p4}]
  LatticeVector bracket_p;    // its direction; <e,p> = <e1,p4> != 0
  std::vector<LatticeVector> spanning_degrees;
  std::vector<LatticeVector> spanning_directions;
};

struct SearchExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

AdpCertificate build_certificate(const RationalCone& sigma, const InvariantSubvariety& y);

struct VerifyResult {
  bool ok = true;
  std::vector<std::string> reasons;  // stable machine-readable codes

  void fail(std::string code) {
    ok = false;
    reasons.push_back(std::move(code));
  }
};

/// Re-checks every certificate invariant from scratch.
VerifyResult verify_certificate(const RationalCone& sigma, const InvariantSubvariety& y,
                                const AdpCertificate& cert);

/// All members of the saturated dual semigroup (the dual cone's lattice
/// points) whose pairing with every ray of sigma is at most degree_bound.
/// Sorted; exact (the enumeration box is sized from an inverse ray matrix).
std::vector<LatticeVector> dual_semigroup_monomials(const RationalCone& sigma,
                                                    std::size_t degree_bound);

/// Homogeneous Haar-violating field in I^l * VF(X, X\T): degree in the
/// l-fold sum of interior points, <e,p> != 0.
HomogeneousField haar_violating_field(const RationalCone& sigma, std::size_t ell);

}  // namespace toralg

#endif
