#ifndef TORALG_CONE_HPP
#define TORALG_CONE_HPP

#include <stdexcept>
#include <vector>

#include "toralg/lattice.hpp"

namespace toralg {

struct PointednessError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Generators of a polyhedral cone split into lineality and extreme rays.
struct GeneratorSet {
  std::vector<LatticeVector> lineality;
  std::vector<LatticeVector> rays;
};

/// Double description: extreme rays and lineality of {x : g.x >= 0 for all g}.
/// Constraints and output live in mutually dual lattices.
GeneratorSet double_description(const std::vector<LatticeVector>& constraints,
                                std::size_t rank, Ambient output_ambient);

/// Face of a pointed cone, identified by the subset of parent rays on it.
struct Face {
  std::vector<std::size_t> ray_indices;  // indices into the parent's rays()
  std::vector<LatticeVector> rays;
  std::size_t dim = 0;
  bool smooth = false;

  bool operator==(const Face& o) const { return ray_indices == o.ray_indices; }
};

/// Rational polyhedral cone given by primitive extreme-ray generators.
/// Redundant input generators are accepted and reduced; the dual
/// description is computed at construction, after which the object is
/// immutable.
class RationalCone {
 public:
  enum class Membership { Boundary, Interior };

  explicit RationalCone(std::vector<LatticeVector> generators);

  /// Convenience: cone in N from integer rows.
  static RationalCone from_rays(const std::vector<std::vector<int>>& rows,
                                Ambient ambient = Ambient::N);

  std::size_t rank() const { return rank_; }
  Ambient ambient() const { return ambient_; }

  /// Canonical generator list: extreme rays for pointed cones; for
  /// non-pointed cones the lineality enters as +/- pairs.
  const std::vector<LatticeVector>& rays() const { return rays_; }

  /// Extreme rays of the dual cone (empty lineality part iff this cone is
  /// full dimensional).
  const std::vector<LatticeVector>& dual_rays() const { return dual_.rays; }
  const std::vector<LatticeVector>& dual_lineality() const { return dual_.lineality; }

  /// Halfspace description: this cone is the set pairing >= 0 against every
  /// facet normal and == 0 against every dual lineality generator.
  const std::vector<LatticeVector>& facet_normals() const { return dual_.rays; }

  bool is_pointed() const { return pointed_; }
  bool is_full_dimensional() const { return dual_.lineality.empty(); }

  RationalCone dual() const;

  /// All faces including {0} and the cone itself, ordered by dimension then
  /// lexicographically by ray indices. Throws PointednessError otherwise.
  std::vector<Face> faces() const;

  /// Locate a face by its (sorted) ray-index set.
  const Face& face_by_indices(const std::vector<std::size_t>& indices) const;

  bool contains(const LatticeVector& v, Membership mode) const;

  bool operator==(const RationalCone& o) const {
    return rank_ == o.rank_ && ambient_ == o.ambient_ && rays_ == o.rays_;
  }

 private:
  std::size_t rank_;
  Ambient ambient_;
  std::vector<LatticeVector> rays_;
  GeneratorSet dual_;
  bool pointed_;
  std::vector<Face> faces_;  // populated at construction when pointed
};

}  // namespace toralg

#endif
