#include "toralg/cone.hpp"

#include <algorithm>
#include <set>

#include "toralg/config.hpp"
#include "toralg/intmat.hpp"

namespace toralg {

namespace {

Ambient opposite(Ambient a) { return a == Ambient::M ? Ambient::N : Ambient::M; }

IntMat rows_of(const std::vector<LatticeVector>& vs) {
  IntMat m;
  m.reserve(vs.size());
  for (const auto& v : vs) m.push_back(v.coords());
  return m;
}

std::size_t span_rank(const std::vector<LatticeVector>& vs) {
  if (vs.empty()) return 0;
  return mat_rank(rows_of(vs));
}

void sort_dedup(std::vector<LatticeVector>& vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

}  // namespace

GeneratorSet double_description(const std::vector<LatticeVector>& constraints,
                                std::size_t rank, Ambient output_ambient) {
  GeneratorSet gs;
  for (std::size_t i = 0; i < rank; ++i)
    gs.lineality.push_back(LatticeVector::unit(rank, i, output_ambient));

  std::vector<LatticeVector> done;  // processed constraints
  auto tight_set = [&](const LatticeVector& r) {
    std::set<std::size_t> z;
    for (std::size_t i = 0; i < done.size(); ++i)
      if (dot(done[i].coords(), r.coords()) == 0) z.insert(i);
    return z;
  };

  for (const auto& a : constraints) {
    if (a.is_zero()) continue;
    // Case 1: the constraint cuts the lineality space.
    std::size_t cut = gs.lineality.size();
    for (std::size_t i = 0; i < gs.lineality.size(); ++i)
      if (dot(a.coords(), gs.lineality[i].coords()) != 0) {
        cut = i;
        break;
      }
    if (cut != gs.lineality.size()) {
      LatticeVector l0 = gs.lineality[cut];
      Int al0 = dot(a.coords(), l0.coords());
      if (al0 < 0) {
        l0 = -l0;
        al0 = -al0;
      }
      std::vector<LatticeVector> new_lin;
      for (std::size_t i = 0; i < gs.lineality.size(); ++i) {
        if (i == cut) continue;
        const auto& l = gs.lineality[i];
        Int al = dot(a.coords(), l.coords());
        new_lin.push_back((l * al0 - l0 * al).primitivized());
      }
      for (auto& r : gs.rays) {
        Int ar = dot(a.coords(), r.coords());
        r = (r * al0 - l0 * ar).primitivized();
      }
      gs.rays.push_back(l0);
      gs.lineality = std::move(new_lin);
      sort_dedup(gs.rays);
      done.push_back(a);
      continue;
    }
    // Case 2: split the rays.
    std::vector<LatticeVector> pos, zero, neg;
    for (const auto& r : gs.rays) {
      int s = sign(dot(a.coords(), r.coords()));
      (s > 0 ? pos : s == 0 ? zero : neg).push_back(r);
    }
    if (neg.empty()) {
      done.push_back(a);
      continue;
    }
    std::vector<LatticeVector> fresh;
    for (const auto& rp : pos) {
      auto zp = tight_set(rp);
      for (const auto& rn : neg) {
        auto zn = tight_set(rn);
        std::set<std::size_t> common;
        std::set_intersection(zp.begin(), zp.end(), zn.begin(), zn.end(),
                              std::inserter(common, common.begin()));
        // Combinatorial adjacency: no third ray is tight on all of `common`.
        bool adjacent = true;
        for (const auto& r3 : gs.rays) {
          if (r3 == rp || r3 == rn) continue;
          auto z3 = tight_set(r3);
          if (std::includes(z3.begin(), z3.end(), common.begin(), common.end())) {
            adjacent = false;
            break;
          }
        }
        if (!adjacent) continue;
        Int ap = dot(a.coords(), rp.coords());
        Int an = dot(a.coords(), rn.coords());
        fresh.push_back((rn * ap - rp * an).primitivized());
      }
    }
    gs.rays = std::move(pos);
    gs.rays.insert(gs.rays.end(), zero.begin(), zero.end());
    gs.rays.insert(gs.rays.end(), fresh.begin(), fresh.end());
    sort_dedup(gs.rays);
    done.push_back(a);
  }
  return gs;
}

RationalCone::RationalCone(std::vector<LatticeVector> generators) {
  if (generators.empty()) throw std::invalid_argument("cone needs at least one generator");
  rank_ = generators[0].rank();
  ambient_ = generators[0].ambient();
  if (rank_ == 0 || rank_ > Config::max_rank)
    throw std::invalid_argument("ambient rank outside the configured guard");
  std::vector<LatticeVector> gens;
  for (const auto& g : generators) {
    if (g.rank() != rank_ || g.ambient() != ambient_)
      throw DimensionError("cone generators disagree in rank or ambient");
    if (!g.is_zero()) gens.push_back(g.primitivized());
  }
  if (gens.empty()) throw std::invalid_argument("cone needs a nonzero generator");
  sort_dedup(gens);

  dual_ = double_description(gens, rank_, opposite(ambient_));
  {
    // pointed iff the dual cone is full dimensional
    std::vector<LatticeVector> all = dual_.rays;
    all.insert(all.end(), dual_.lineality.begin(), dual_.lineality.end());
    pointed_ = span_rank(all) == rank_;
  }

  // Canonical generator list: double description of the dual description.
  std::vector<LatticeVector> dual_full = dual_.rays;
  for (const auto& l : dual_.lineality) {
    dual_full.push_back(l);
    dual_full.push_back(-l);
  }
  GeneratorSet self = double_description(dual_full, rank_, ambient_);
  rays_ = self.rays;
  for (const auto& l : self.lineality) {
    rays_.push_back(l);
    rays_.push_back(-l);
  }
  sort_dedup(rays_);

  if (pointed_) {
    // Face enumeration over ray subsets: S is a face iff the sum of the
    // dual rays vanishing on S is strictly positive on the complement.
    std::size_t k = rays_.size();
    if (k < 64) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << k); ++mask) {
        LatticeVector msum = LatticeVector::zero(rank_, opposite(ambient_));
        for (const auto& g : dual_.rays) {
          bool vanishes = true;
          for (std::size_t i = 0; i < k && vanishes; ++i)
            if ((mask >> i) & 1) vanishes = dot(g.coords(), rays_[i].coords()) == 0;
          if (vanishes) msum = msum + g;
        }
        bool is_face = true;
        for (std::size_t i = 0; i < k && is_face; ++i)
          if (!((mask >> i) & 1)) is_face = dot(msum.coords(), rays_[i].coords()) > 0;
        if (!is_face) continue;
        Face f;
        for (std::size_t i = 0; i < k; ++i)
          if ((mask >> i) & 1) {
            f.ray_indices.push_back(i);
            f.rays.push_back(rays_[i]);
          }
        f.dim = span_rank(f.rays);
        if (f.rays.empty()) {
          f.smooth = true;
        } else if (f.dim != f.rays.size()) {
          f.smooth = false;
        } else {
          auto divs = smith_divisors(rows_of(f.rays));
          f.smooth = std::all_of(divs.begin(), divs.end(),
                                 [](const Int& d) { return d == 1; });
        }
        faces_.push_back(std::move(f));
      }
      std::sort(faces_.begin(), faces_.end(), [](const Face& a, const Face& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        return a.ray_indices < b.ray_indices;
      });
    }
  }
}

RationalCone RationalCone::from_rays(const std::vector<std::vector<int>>& rows,
                                     Ambient ambient) {
  std::vector<LatticeVector> gens;
  for (const auto& r : rows) {
    std::vector<Int> c(r.begin(), r.end());
    gens.emplace_back(std::move(c), ambient);
  }
  return RationalCone(std::move(gens));
}

RationalCone RationalCone::dual() const {
  std::vector<LatticeVector> gens = dual_.rays;
  for (const auto& l : dual_.lineality) {
    gens.push_back(l);
    gens.push_back(-l);
  }
  return RationalCone(std::move(gens));
}

std::vector<Face> RationalCone::faces() const {
  if (!pointed_) throw PointednessError("faces: cone is not pointed");
  return faces_;
}

const Face& RationalCone::face_by_indices(const std::vector<std::size_t>& indices) const {
  if (!pointed_) throw PointednessError("face lookup: cone is not pointed");
  std::vector<std::size_t> sorted = indices;
  std::sort(sorted.begin(), sorted.end());
  for (const auto& f : faces_)
    if (f.ray_indices == sorted) return f;
  throw std::invalid_argument("no face with the given ray-index set");
}

bool RationalCone::contains(const LatticeVector& v, Membership mode) const {
  if (v.rank() != rank_) throw DimensionError("membership: rank mismatch");
  if (v.ambient() != ambient_)
    throw DimensionError("membership: vector lives in the dual ambient");
  for (const auto& l : dual_.lineality)
    if (dot(l.coords(), v.coords()) != 0) return false;
  for (const auto& g : dual_.rays) {
    Int s = dot(g.coords(), v.coords());
    if (mode == Membership::Boundary ? s < 0 : s <= 0) return false;
  }
  return true;
}

}  // namespace toralg
