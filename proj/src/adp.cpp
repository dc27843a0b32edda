#include "toralg/adp.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "toralg/config.hpp"
#include "toralg/intmat.hpp"

namespace toralg {

namespace {

std::vector<std::size_t> sorted(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

bool subset(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::size_t rank_of(const std::vector<LatticeVector>& vs) {
  if (vs.empty()) return 0;
  IntMat m;
  for (const auto& v : vs) m.push_back(v.coords());
  return mat_rank(m);
}

}  // namespace

InvariantSubvariety::InvariantSubvariety(
    const RationalCone& sigma, const std::vector<std::vector<std::size_t>>& face_sets) {
  auto all = sigma.faces();
  for (const auto& fs : face_sets) {
    const Face& f = sigma.face_by_indices(fs);  // validates
    faces_.insert(f.ray_indices);
  }
  std::set<std::vector<std::size_t>> requested = faces_;
  for (const auto& f : all)
    if (!f.smooth) faces_.insert(f.ray_indices);
  // upward closure in the face order
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& f : all) {
      if (faces_.count(f.ray_indices)) continue;
      for (const auto& member : faces_)
        if (subset(member, f.ray_indices)) {
          faces_.insert(f.ray_indices);
          grew = true;
          break;
        }
    }
  }
  closure_inserted_ = faces_ != requested;
}

bool InvariantSubvariety::contains(const std::vector<std::size_t>& ray_indices) const {
  return faces_.count(sorted(ray_indices)) != 0;
}

bool orbit_ideal_contains(const RationalCone& sigma, const Face& tau,
                          const LatticeVector& m) {
  for (const auto& rho : sigma.rays())
    if (pairing(m, rho) < 0)
      throw std::invalid_argument("orbit_ideal_contains: monomial outside the dual semigroup");
  for (const auto& rho : tau.rays)
    if (pairing(m, rho) > 0) return true;
  return false;
}

LatticeVector find_root_for_face(const RationalCone& sigma, const Face& tau,
                                 std::size_t distinguished_index) {
  if (tau.rays.empty()) throw std::invalid_argument("find_root_for_face: tau = {0}");
  if (!tau.smooth) throw std::invalid_argument("find_root_for_face: tau is not smooth");
  if (distinguished_index >= tau.rays.size())
    throw std::invalid_argument("find_root_for_face: bad distinguished index");
  std::size_t n = sigma.rank();

  IntMat a;
  std::vector<Int> b;
  for (std::size_t i = 0; i < tau.rays.size(); ++i) {
    a.push_back(tau.rays[i].coords());
    b.emplace_back(i == distinguished_index ? -1 : 0);
  }
  auto particular = solve_integer(a, b);
  if (!particular)
    throw SearchExhausted("find_root_for_face: pairing system has no integer solution");
  auto kernel = kernel_lattice(a);

  std::vector<const LatticeVector*> outside;
  for (const auto& rho : sigma.rays()) {
    bool in_tau = false;
    for (const auto& r : tau.rays)
      if (r == rho) in_tau = true;
    if (!in_tau) outside.push_back(&rho);
  }

  auto check = [&](const std::vector<Int>& e) {
    for (const auto* rho : outside)
      if (dot(e, rho->coords()) <= 0) return false;
    return true;
  };

  long bound = static_cast<long>(Config::root_box_factor * n);
  std::size_t k = kernel.size();
  std::vector<long> t(k, 0);
  // expanding box scan over kernel shifts, smallest max-norm first
  for (long radius = 0; radius <= bound; ++radius) {
    std::function<bool(std::size_t, bool)> rec = [&](std::size_t idx, bool on_shell) -> bool {
      if (idx == k) {
        if (radius > 0 && !on_shell) return false;
        std::vector<Int> e = *particular;
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t c = 0; c < n; ++c) e[c] += Int(t[i]) * kernel[i][c];
        return check(e) ? (particular = e, true) : false;
      }
      for (long v = -radius; v <= radius; ++v) {
        t[idx] = v;
        if (rec(idx + 1, on_shell || v == radius || v == -radius)) return true;
      }
      return false;
    };
    if (k == 0) {
      if (check(*particular)) break;
      std::ostringstream os;
      os << "find_root_for_face: no root (rigid solution fails strict inequalities)";
      throw SearchExhausted(os.str());
    }
    if (rec(0, false)) {
      // verify by re-pairing before returning
      LatticeVector e(*particular, Ambient::M);
      for (std::size_t i = 0; i < tau.rays.size(); ++i) {
        Int expect = (i == distinguished_index) ? Int(-1) : Int(0);
        if (pairing(e, tau.rays[i]) != expect)
          throw std::logic_error("find_root_for_face: re-pairing check failed");
      }
      return e;
    }
    if (radius == bound) {
      std::ostringstream os;
      os << "find_root_for_face: search region exhausted (kernel box radius " << bound
         << ")";
      throw SearchExhausted(os.str());
    }
  }
  return LatticeVector(*particular, Ambient::M);
}

std::vector<std::pair<LatticeVector, LatticeVector>> enumerate_roots(
    const RationalCone& sigma, long box_bound) {
  if (!sigma.is_pointed() || !sigma.is_full_dimensional())
    throw PointednessError("enumerate_roots: need a pointed full-dimensional cone");
  std::size_t n = sigma.rank();
  std::vector<std::pair<LatticeVector, LatticeVector>> out;
  std::vector<long> e(n, -box_bound);
  if (box_bound < 0) return out;
  while (true) {
    std::vector<Int> ec(e.begin(), e.end());
    LatticeVector deg(ec, Ambient::M);
    const LatticeVector* distinguished = nullptr;
    bool ok = true;
    for (const auto& rho : sigma.rays()) {
      Int v = pairing(deg, rho);
      if (v >= 0) continue;
      if (v == -1 && distinguished == nullptr) {
        distinguished = &rho;
      } else {
        ok = false;
        break;
      }
    }
    if (ok && distinguished != nullptr) out.emplace_back(deg, *distinguished);
    std::size_t i = n;
    while (i > 0) {
      if (++e[i - 1] <= box_bound) break;
      e[i - 1] = -box_bound;
      --i;
    }
    if (i == 0) break;
  }
  return out;
}

bool decide_adp(const RationalCone& sigma, const InvariantSubvariety& y) {
  if (sigma.rank() < 2)
    throw std::invalid_argument("decide_adp: theorem needs dimension at least two");
  if (!sigma.is_pointed()) throw PointednessError("decide_adp: cone is not pointed");
  for (std::size_t i = 0; i < sigma.rays().size(); ++i)
    if (!y.contains({i})) return true;
  return false;
}

std::vector<LatticeVector> dual_semigroup_monomials(const RationalCone& sigma,
                                                    std::size_t degree_bound) {
  if (!sigma.is_pointed() || !sigma.is_full_dimensional())
    throw PointednessError("dual_semigroup_monomials: need a pointed full-dimensional cone");
  std::size_t n = sigma.rank();
  Int d(degree_bound);

  // n independent rays R; m is confined to {0 <= <m,rho> <= d}, so the
  // coordinates of m are bounded by d * max row sum of |R^{-1}|.
  std::vector<std::vector<Rat>> r;
  for (const auto& rho : sigma.rays()) {
    std::vector<std::vector<Rat>> trial = r;
    std::vector<Rat> row(rho.coords().begin(), rho.coords().end());
    trial.push_back(row);
    // rational rank via elimination
    auto rk = [](std::vector<std::vector<Rat>> m2) {
      std::size_t rank = 0;
      for (std::size_t c = 0; c < (m2.empty() ? 0 : m2[0].size()) && rank < m2.size(); ++c) {
        std::size_t piv = rank;
        while (piv < m2.size() && m2[piv][c] == 0) ++piv;
        if (piv == m2.size()) continue;
        std::swap(m2[rank], m2[piv]);
        for (std::size_t i = rank + 1; i < m2.size(); ++i) {
          Rat f = m2[i][c] / m2[rank][c];
          for (std::size_t j = c; j < m2[0].size(); ++j) m2[i][j] -= f * m2[rank][j];
        }
        ++rank;
      }
      return rank;
    };
    if (rk(trial) > r.size()) r = std::move(trial);
    if (r.size() == n) break;
  }

  // invert R by Gauss-Jordan on [R | I]
  std::vector<std::vector<Rat>> aug(n, std::vector<Rat>(2 * n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = r[i][j];
    aug[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (aug[piv][c] == 0) ++piv;
    std::swap(aug[c], aug[piv]);
    Rat lead = aug[c][c];
    for (auto& x : aug[c]) x /= lead;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || aug[i][c] == 0) continue;
      Rat f = aug[i][c];
      for (std::size_t j = 0; j < 2 * n; ++j) aug[i][j] -= f * aug[c][j];
    }
  }
  Rat bound(0);
  for (std::size_t j = 0; j < n; ++j) {  // column sums of |R^{-1}| bound |m_j|
    Rat s(0);
    for (std::size_t i = 0; i < n; ++i)
      s += aug[i][n + j] < 0 ? -aug[i][n + j] : aug[i][n + j];
    if (s > bound) bound = s;
  }
  Rat lr = Rat(d) * bound;
  Int box = numerator(lr) / denominator(lr) + 1;
  long b = static_cast<long>(box);

  std::vector<LatticeVector> out;
  std::vector<long> v(n, -b);
  while (true) {
    std::vector<Int> c(v.begin(), v.end());
    LatticeVector m(c, Ambient::M);
    bool ok = true;
    for (const auto& rho : sigma.rays()) {
      Int p = pairing(m, rho);
      if (p < 0 || p > d) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(m);
    std::size_t i = n;
    while (i > 0) {
      if (++v[i - 1] <= b) break;
      v[i - 1] = -b;
      --i;
    }
    if (i == 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

LatticeVector interior_point(const RationalCone& sigma) {
  LatticeVector s = LatticeVector::zero(sigma.rank(), Ambient::M);
  for (const auto& g : sigma.dual_rays()) s = s + g;
  return s;
}

}  // namespace

HomogeneousField haar_violating_field(const RationalCone& sigma, std::size_t ell) {
  LatticeVector s = interior_point(sigma);
  LatticeVector e = s * Int(std::max<std::size_t>(ell, 1));
  for (std::size_t i = 0; i < sigma.rank(); ++i) {
    LatticeVector p = LatticeVector::unit(sigma.rank(), i, Ambient::N);
    if (pairing(e, p) != 0) return HomogeneousField(e, p);
  }
  throw std::logic_error("haar_violating_field: interior point pairs to zero everywhere");
}

AdpCertificate build_certificate(const RationalCone& sigma, const InvariantSubvariety& y) {
  if (!decide_adp(sigma, y))
    throw std::invalid_argument("build_certificate: decide_adp is false");
  std::size_t n = sigma.rank();

  // witness ray: first ray whose orbit closure is outside Y
  std::size_t witness = sigma.rays().size();
  for (std::size_t i = 0; i < sigma.rays().size(); ++i)
    if (!y.contains({i})) {
      witness = i;
      break;
    }
  const LatticeVector& rho1 = sigma.rays()[witness];
  const Face& ray_face = sigma.face_by_indices({witness});
  LatticeVector e1 = find_root_for_face(sigma, ray_face, 0);

  LatticeVector s = interior_point(sigma);
  LatticeVector e3 = e1 + s;
  for (int k = 1; k <= 16; ++k) {
    e3 = e1 + s * Int(k);
    if (sigma.dual().contains(e3, RationalCone::Membership::Interior)) break;
  }
  LatticeVector e4 = e3 - e1;  // = k*s, interior

  // smallest p4 with <e4,p4> = 0 and <e1,p4> != 0
  std::vector<LatticeVector> p4_candidates;
  long box = static_cast<long>(Config::root_box_factor * n);
  LatticeVector p4 = LatticeVector::zero(n, Ambient::N);
  bool found = false;
  for (long radius = 1; radius <= box && !found; ++radius) {
    std::vector<long> v(n, -radius);
    while (true) {
      std::vector<Int> c(v.begin(), v.end());
      LatticeVector cand(c, Ambient::N);
      if (!cand.is_zero() && pairing(e4, cand) == 0 && pairing(e1, cand) != 0) {
        p4 = cand;
        found = true;
        break;
      }
      std::size_t i = n;
      while (i > 0) {
        if (++v[i - 1] <= radius) break;
        v[i - 1] = -radius;
        --i;
      }
      if (i == 0) break;
    }
  }
  if (!found) throw SearchExhausted("build_certificate: no p4 in the search box");

  HomogeneousField root_field(e1, rho1);
  HomogeneousField partner(e4, p4);
  auto br = bracket(root_field, partner);
  if (!br) throw std::logic_error("build_certificate: bracket collapsed to zero");

  // spanning directions realized by complete fields at degrees in e3 + dual
  AdpCertificate cert{rho1, e1,        e3, e4, p4, br->e, br->p, {}, {}};
  std::vector<LatticeVector> dirs;
  auto monoms = dual_semigroup_monomials(sigma, 3);
  for (const auto& m : monoms) {
    if (rank_of(dirs) == n) break;
    LatticeVector e = e3 + m;
    // e-perp is a kernel lattice; its basis gives every direction we can use
    for (const auto& row : kernel_lattice({e.coords()})) {
      LatticeVector cand(row, Ambient::N);
      if (cand.is_zero()) continue;
      auto trial = dirs;
      trial.push_back(cand);
      if (rank_of(trial) > rank_of(dirs)) {
        dirs.push_back(cand.primitivized());
        cert.spanning_degrees.push_back(e);
      }
      if (rank_of(dirs) == n) break;
    }
  }
  if (rank_of(dirs) != n)
    throw SearchExhausted("build_certificate: spanning directions not found in box");
  cert.spanning_directions = dirs;
  return cert;
}

VerifyResult verify_certificate(const RationalCone& sigma, const InvariantSubvariety& y,
                                const AdpCertificate& cert) {
  VerifyResult res;
  std::size_t n = sigma.rank();

  // locate the witness ray
  std::size_t witness = sigma.rays().size();
  for (std::size_t i = 0; i < sigma.rays().size(); ++i)
    if (sigma.rays()[i] == cert.witness_ray) witness = i;
  if (witness == sigma.rays().size()) {
    res.fail("WITNESS_NOT_A_RAY");
    return res;
  }
  if (y.contains({witness})) res.fail("WITNESS_ORBIT_INSIDE_Y");

  HomogeneousField root_field(cert.root_e1, cert.witness_ray);
  auto rec = classify(sigma, root_field);
  if (rec.kind != FieldKind::TypeII || !rec.distinguished_ray ||
      *rec.distinguished_ray != cert.witness_ray)
    res.fail("E1_NOT_ROOT_FOR_WITNESS");
  else
    for (const auto& fs : y.faces()) {
      const Face& tau = sigma.face_by_indices(fs);
      if (!vanishes_on_orbit_closure(sigma, root_field, tau)) {
        res.fail("ROOT_FIELD_DOES_NOT_VANISH_ON_Y");
        break;
      }
    }

  RationalCone dual = sigma.dual();
  if (!dual.contains(cert.e3, RationalCone::Membership::Interior) ||
      !dual.contains(cert.e3 - cert.root_e1, RationalCone::Membership::Interior))
    res.fail("E3_NOT_INTERIOR");
  if (cert.e4 != cert.e3 - cert.root_e1) res.fail("E4_MISMATCH");

  if (pairing(cert.e4, cert.p4) != 0 || pairing(cert.root_e1, cert.p4) == 0) {
    res.fail("E4P4_NOT_COMPLETE_PAIR");
  } else {
    HomogeneousField partner(cert.e4, cert.p4);
    auto br = bracket(root_field, partner);
    if (!br || br->e != cert.bracket_e || br->p != cert.bracket_p)
      res.fail("BRACKET_MISMATCH");
    else if (pairing(br->e, br->p) != pairing(cert.root_e1, cert.p4) ||
             pairing(br->e, br->p) == 0)
      res.fail("BRACKET_NOT_HAAR_VIOLATING");
  }

  if (cert.spanning_directions.size() != cert.spanning_degrees.size()) {
    res.fail("SPANNING_LIST_MISMATCH");
  } else {
    for (std::size_t i = 0; i < cert.spanning_directions.size(); ++i) {
      const auto& e = cert.spanning_degrees[i];
      const auto& p = cert.spanning_directions[i];
      if (pairing(e, p) != 0 ||
          !dual.contains(e - cert.e3, RationalCone::Membership::Boundary)) {
        res.fail("SPANNING_FIELD_NOT_COMPLETE");
        break;
      }
    }
    if (rank_of(cert.spanning_directions) != n) res.fail("SPANNING_RANK_DEFICIENT");
  }
  return res;
}

}  // namespace toralg
