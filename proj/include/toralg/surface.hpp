#ifndef TORALG_SURFACE_HPP
#define TORALG_SURFACE_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "toralg/cone.hpp"
#include "toralg/intmat.hpp"
#include "toralg/laurent.hpp"

namespace toralg {

/// Parameter validation failure; `code` is a stable machine-readable tag
/// (NON_COPRIME, OUT_OF_RANGE).
struct SurfaceParamError : std::invalid_argument {
  std::string code;
  SurfaceParamError(std::string c, const std::string& what)
      : std::invalid_argument(what), code(std::move(c)) {}
};

/// The cyclic quotient surface V_{d,e} = C^2 / Z_d with zeta.(u,v) =
/// (zeta u, zeta^e v); e_prime is the mod-d inverse of e.
struct SurfaceParams {
  long d;
  long e;
  long e_prime;

  static SurfaceParams make(long d, long e);

  /// residue class [i + e j] in Z_d, normalized to [0,d)
  long residue(long i, long j) const;
  bool in_I(long i, long j) const { return i >= 0 && j >= 0 && residue(i, j) == 0; }
  bool in_J(long i, long j) const {
    return in_I(i, j) && !(i == 0 && j == 0) && i < e && j < e_prime;
  }
};

struct SurfaceProfile {
  SurfaceParams params;
  std::vector<std::pair<long, long>> J;  // sorted
  bool strong_adp;
  long codim;
  long ell_bound;  // e + e' - 2
  bool e_equals_eprime;
};

/// Full profile; J by exhaustive enumeration, strong ADP by the closed form
/// cross-checked against codim = 0 (mismatch is an internal error).
SurfaceProfile surface_profile(long d, long e);

enum class ComponentKind { VF, CVF, LNDu, LNDv };

const char* component_kind_name(ComponentKind k);

/// One homogeneous piece of an invariant polynomial field:
///   VF/CVF: u^i v^j (a u d/du + b v d/dv), dir = (a, b);
///   LNDu:   a v^M d/du with M = e' + (k-1)d, dir = (a, 0);
///   LNDv:   a u^M d/dv with M = e  + (k-1)d, dir = (0, a).
struct GradedComponent {
  ComponentKind kind;
  long i = 0, j = 0;        // VF/CVF bidegree
  long k = 0;               // LND index
  long monomial_degree = 0;  // LND coefficient degree M
  std::vector<Rat> dir;      // (a,b) resp. the embedded scalar
};

/// Recognize a single derivation term (exponent, direction). Returns
/// nullopt for invariant-class failures; throws on genuinely Laurent
/// (non-polynomial) terms.
std::optional<GradedComponent> classify_component(const SurfaceParams& sp,
                                                  const Exponent& exp,
                                                  const std::vector<Rat>& dir);

/// The component as a Laurent derivation term.
LaurentVectorField component_field(const GradedComponent& c);

/// Oracle bracket of two components, classified; asserts the homogeneous
/// bracket lemma clauses (degree bookkeeping and the completeness
/// criterion for LND x LND). nullopt when the bracket vanishes.
std::optional<GradedComponent> bracket_component(const SurfaceParams& sp,
                                                 const GradedComponent& c1,
                                                 const GradedComponent& c2);

/// Reached subspaces, keyed by exponent (i,j); LND lines keyed by
/// coefficient monomial degree.
struct ClosureTable {
  std::map<std::pair<long, long>, std::vector<std::vector<Int>>> vf;  // basis rows
  std::set<long> lnd_u;  // degrees M with v^M d/du reached
  std::set<long> lnd_v;
  long bound = 0;
};

/// Bracket closure of the complete invariant generators (full VF(0,0),
/// every CVF line, every LND line) up to bidegree sum D, with generator
/// head-room D + max(e,e').
ClosureTable lie_closure(const SurfaceParams& sp, long D);

/// The table the structure theorem predicts: full at I minus J, the CVF line
/// only at J, except the component (e-1, e'-1) which is full when e != e'.
ClosureTable predicted_structure(const SurfaceParams& sp, long D);

/// Structural comparison; on mismatch fills `diff` with the first offender.
bool tables_match(const ClosureTable& a, const ClosureTable& b,
                  std::string* diff = nullptr);

struct MembershipResult {
  bool member = false;
  std::optional<std::pair<long, long>> witness;  // first violating bidegree
};

/// Decision rule from the structure theorem; throws on non-invariant input.
MembershipResult decide_lie_membership(const SurfaceParams& sp,
                                       const LaurentVectorField& field);

/// Sparse polynomial in one variable: list of (exponent, coefficient).
using SparsePoly = std::vector<std::pair<long, Rat>>;

struct TemplateRequest {
  std::string case_tag;  // 1a | 1b | 2a | 2b | 3a | 3b
  Rat a = 0;
  SparsePoly A, B, p;
  long m = 0, n = 0, l = 0;
};

struct TemplateResult {
  bool accepted = false;
  std::string reason;  // stable rejection code, empty when accepted
  LaurentVectorField field{2};
};

/// Validate the side conditions of the complete-field normal forms,
/// construct the field, and verify polynomiality and invariance exactly.
TemplateResult validate_complete_template(const SurfaceParams& sp,
                                          const TemplateRequest& req);

/// V_{d,e} realized as a cone: basis rows of the character lattice
/// M' = {(i,j) : d | i + ej} and the cone of the surface in the dual side.
struct SurfaceCone {
  SurfaceParams params;
  IntMat basis;        // rows: lattice basis of M' in (i,j) coordinates
  RationalCone sigma;  // pointed full-dimensional cone in N
};

SurfaceCone surface_cone(const SurfaceParams& sp);

/// Self-check: over the box [0,box]^2, (i,j) lies in M' and in the dual cone
/// (in basis coordinates) exactly when d | i + ej.
bool surface_cone_matches(const SurfaceCone& sc, long box);

/// Smallest ell such that every component of I^ell * VF within the bound of
/// `reached` lies inside `reached`, where I is the invariant maximal ideal
/// at the origin. Empirical (bounded-degree); -1 when even ell_max fails.
long minimal_ell_estimate(const SurfaceParams& sp, const ClosureTable& reached,
                          long ell_max);

}  // namespace toralg

#endif
