#include "toralg/surface.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "toralg/fields.hpp"

namespace toralg {

namespace {

long to_long(const Int& v) { return static_cast<long>(v); }

Exponent ex(long a, long b) { return Exponent{Int(a), Int(b)}; }

std::size_t basis_rank(const std::vector<std::vector<Int>>& rows) {
  if (rows.empty()) return 0;
  return mat_rank(rows);
}

bool in_span(const std::vector<std::vector<Int>>& basis, const std::vector<Int>& v) {
  auto trial = basis;
  trial.push_back(v);
  return basis_rank(trial) == basis_rank(basis);
}

}  // namespace

SurfaceParams SurfaceParams::make(long d, long e) {
  if (d < 2 || e <= 0 || e >= d)
    throw SurfaceParamError("OUT_OF_RANGE", "surface parameters need d >= 2, 0 < e < d");
  if (std::gcd(d, e) != 1)
    throw SurfaceParamError("NON_COPRIME", "surface parameters need gcd(d, e) = 1");
  long e_prime = 0;
  for (long t = 1; t < d; ++t)
    if ((t * e) % d == 1) {
      e_prime = t;
      break;
    }
  return SurfaceParams{d, e, e_prime};
}

long SurfaceParams::residue(long i, long j) const {
  long r = (i + e * j) % d;
  return r < 0 ? r + d : r;
}

SurfaceProfile surface_profile(long d, long e) {
  SurfaceParams p = SurfaceParams::make(d, e);
  SurfaceProfile prof;
  prof.params = p;
  for (long i = 0; i < p.e; ++i)
    for (long j = 0; j < p.e_prime; ++j)
      if (p.in_J(i, j)) prof.J.emplace_back(i, j);
  std::sort(prof.J.begin(), prof.J.end());
  prof.e_equals_eprime = p.e == p.e_prime;
  prof.strong_adp = (d + 1) % e == 0 && e * e != d + 1;
  prof.codim = prof.e_equals_eprime ? static_cast<long>(prof.J.size())
                                    : static_cast<long>(prof.J.size()) - 1;
  prof.ell_bound = p.e + p.e_prime - 2;
  // internal consistency: |J| <= 1 iff e | d+1, and the closed form must
  // agree with the codimension criterion
  if ((prof.J.size() <= 1) != ((d + 1) % e == 0))
    throw std::logic_error("surface_profile: J-count lemma violated");
  if (prof.strong_adp != (prof.codim == 0))
    throw std::logic_error("surface_profile: strong ADP / codim mismatch");
  return prof;
}

const char* component_kind_name(ComponentKind k) {
  switch (k) {
    case ComponentKind::VF:
      return "VF";
    case ComponentKind::CVF:
      return "CVF";
    case ComponentKind::LNDu:
      return "LNDu";
    default:
      return "LNDv";
  }
}

std::optional<GradedComponent> classify_component(const SurfaceParams& sp,
                                                  const Exponent& exp,
                                                  const std::vector<Rat>& dir) {
  if (exp.size() != 2 || dir.size() != 2)
    throw DimensionError("classify_component: rank-2 term expected");
  const Int& a = exp[0];
  const Int& b = exp[1];
  if (a >= 0 && b >= 0) {
    GradedComponent c;
    c.i = to_long(a);
    c.j = to_long(b);
    c.dir = dir;
    if (sp.residue(c.i, c.j) != 0) return std::nullopt;
    bool cvf = !(c.i == 0 && c.j == 0) && dir[0] * Rat(c.i) + dir[1] * Rat(c.j) == 0;
    c.kind = cvf ? ComponentKind::CVF : ComponentKind::VF;
    return c;
  }
  if (a == -1 && b >= 0) {
    if (dir[1] != 0)
      throw std::invalid_argument("classify_component: term is not polynomial");
    long m = to_long(b);
    if ((m - sp.e_prime) % sp.d != 0) return std::nullopt;
    GradedComponent c;
    c.kind = ComponentKind::LNDu;
    c.monomial_degree = m;
    c.k = (m - sp.e_prime) / sp.d + 1;
    c.dir = dir;
    return c;
  }
  if (b == -1 && a >= 0) {
    if (dir[0] != 0)
      throw std::invalid_argument("classify_component: term is not polynomial");
    long m = to_long(a);
    if ((m - sp.e) % sp.d != 0) return std::nullopt;
    GradedComponent c;
    c.kind = ComponentKind::LNDv;
    c.monomial_degree = m;
    c.k = (m - sp.e) / sp.d + 1;
    c.dir = dir;
    return c;
  }
  throw std::invalid_argument("classify_component: term is not polynomial");
}

LaurentVectorField component_field(const GradedComponent& c) {
  switch (c.kind) {
    case ComponentKind::VF:
    case ComponentKind::CVF:
      return LaurentVectorField::term(ex(c.i, c.j), c.dir);
    case ComponentKind::LNDu:
      return LaurentVectorField::term(ex(-1, c.monomial_degree), {c.dir[0], Rat(0)});
    default:
      return LaurentVectorField::term(ex(c.monomial_degree, -1), {Rat(0), c.dir[1]});
  }
}

std::optional<GradedComponent> bracket_component(const SurfaceParams& sp,
                                                 const GradedComponent& c1,
                                                 const GradedComponent& c2) {
  LaurentVectorField f1 = component_field(c1);
  LaurentVectorField f2 = component_field(c2);
  LaurentVectorField br = bracket_oracle(f1, f2);

  // cross-check against the closed homogeneous bracket
  {
    const auto& [e1, q1] = *f1.terms().begin();
    const auto& [e2, q2] = *f2.terms().begin();
    Int s1 = denominator(q1[0]) * denominator(q1[1]);
    Int s2 = denominator(q2[0]) * denominator(q2[1]);
    std::vector<Int> p1{numerator(Rat(q1[0] * s1)), numerator(Rat(q1[1] * s1))};
    std::vector<Int> p2{numerator(Rat(q2[0] * s2)), numerator(Rat(q2[1] * s2))};
    HomogeneousField h1(LatticeVector(e1, Ambient::M), LatticeVector(p1, Ambient::N));
    HomogeneousField h2(LatticeVector(e2, Ambient::M), LatticeVector(p2, Ambient::N));
    auto closed = bracket(h1, h2);
    LaurentVectorField check =
        closed ? to_laurent(*closed) * (Rat(1) / Rat(s1 * s2)) : LaurentVectorField(2);
    if (!(check == br))
      throw std::logic_error("bracket_component: oracle disagrees with closed form");
  }

  if (br.is_zero()) return std::nullopt;
  if (br.terms().size() != 1)
    throw std::logic_error("bracket_component: non-homogeneous bracket");
  const auto& [be, bq] = *br.terms().begin();
  auto out = classify_component(sp, be, bq);
  if (!out)
    throw std::logic_error("bracket_component: bracket left the invariant algebra");

  // homogeneous bracket lemma bookkeeping
  if (c1.kind == ComponentKind::CVF && c2.kind == ComponentKind::CVF) {
    if (out->kind != ComponentKind::CVF ||
        out->i != c1.i + c2.i || out->j != c1.j + c2.j)
      throw std::logic_error("bracket_component: CVF x CVF escaped the CVF line");
  }
  if (c1.kind == ComponentKind::LNDu && c2.kind == ComponentKind::LNDv) {
    long m = c1.monomial_degree, n = c2.monomial_degree;
    bool complete_expected = m == n;  // the e k' = e' k criterion in degrees
    if (out->i != n - 1 || out->j != m - 1)
      throw std::logic_error("bracket_component: LND x LND degree mismatch");
    if ((out->kind == ComponentKind::CVF) != complete_expected)
      throw std::logic_error("bracket_component: LND x LND completeness criterion failed");
  }
  return out;
}

namespace {

struct Elem {
  long e1, e2;
  std::vector<Int> p;  // direction, rank 2
};

std::optional<Elem> elem_bracket(const Elem& x, const Elem& y) {
  Int c2 = Int(y.e1) * x.p[0] + Int(y.e2) * x.p[1];  // <e2, p1>
  Int c1 = Int(x.e1) * y.p[0] + Int(x.e2) * y.p[1];  // <e1, p2>
  std::vector<Int> p{c2 * y.p[0] - c1 * x.p[0], c2 * y.p[1] - c1 * x.p[1]};
  if (p[0] == 0 && p[1] == 0) return std::nullopt;
  return Elem{x.e1 + y.e1, x.e2 + y.e2, std::move(p)};
}

/// Internal reached-state with headroom; mirrors ClosureTable.
struct Reach {
  std::map<std::pair<long, long>, std::vector<std::vector<Int>>> vf;
  std::set<long> lnd_u, lnd_v;

  // returns true when the element enlarged the reached set
  bool add(const Elem& el) {
    if (el.e1 == -1) {
      if (el.p[1] != 0) throw std::logic_error("lie_closure: non-polynomial element");
      return lnd_u.insert(el.e2).second;
    }
    if (el.e2 == -1) {
      if (el.p[0] != 0) throw std::logic_error("lie_closure: non-polynomial element");
      return lnd_v.insert(el.e1).second;
    }
    auto& basis = vf[{el.e1, el.e2}];
    if (in_span(basis, el.p)) return false;
    basis.push_back(el.p);
    return true;
  }
};

}  // namespace

ClosureTable lie_closure(const SurfaceParams& sp, long D) {
  long head = std::max(sp.e, sp.e_prime);
  if (D < sp.e + sp.e_prime)
    throw std::invalid_argument("lie_closure: bound below e + e'");
  long cap = D + head;

  std::vector<Elem> elems;
  // complete generators: the full linear component, every CVF line, all LNDs
  elems.push_back(Elem{0, 0, {Int(1), Int(0)}});
  elems.push_back(Elem{0, 0, {Int(0), Int(1)}});
  for (long i = 0; i <= cap; ++i)
    for (long j = 0; i + j <= cap; ++j)
      if (sp.in_I(i, j) && !(i == 0 && j == 0))
        elems.push_back(Elem{i, j, {Int(j), Int(-i)}});
  for (long m = sp.e_prime; m <= cap; m += sp.d)
    elems.push_back(Elem{-1, m, {Int(1), Int(0)}});
  for (long m = sp.e; m <= cap; m += sp.d)
    elems.push_back(Elem{m, -1, {Int(0), Int(1)}});

  Reach reach;
  for (const auto& el : elems) reach.add(el);

  std::size_t next = 0;
  while (next < elems.size()) {
    Elem cur = elems[next];
    for (std::size_t i = 0; i <= next; ++i) {
      auto br = elem_bracket(cur, elems[i]);
      if (!br || br->e1 + br->e2 > cap) continue;
      if (reach.add(*br)) elems.push_back(std::move(*br));
    }
    ++next;
  }

  ClosureTable out;
  out.bound = D;
  for (auto& [key, basis] : reach.vf)
    if (key.first + key.second <= D) out.vf[key] = basis;
  for (long m : reach.lnd_u)
    if (m - 1 <= D) out.lnd_u.insert(m);
  for (long m : reach.lnd_v)
    if (m - 1 <= D) out.lnd_v.insert(m);
  return out;
}

ClosureTable predicted_structure(const SurfaceParams& sp, long D) {
  ClosureTable out;
  out.bound = D;
  bool exempt_exists = sp.e != sp.e_prime;
  for (long i = 0; i <= D; ++i)
    for (long j = 0; i + j <= D; ++j) {
      if (!sp.in_I(i, j)) continue;
      bool cvf_only = sp.in_J(i, j) &&
                      !(exempt_exists && i == sp.e - 1 && j == sp.e_prime - 1);
      if (cvf_only)
        out.vf[{i, j}] = {{Int(j), Int(-i)}};
      else
        out.vf[{i, j}] = {{Int(1), Int(0)}, {Int(0), Int(1)}};
    }
  for (long m = sp.e_prime; m - 1 <= D; m += sp.d) out.lnd_u.insert(m);
  for (long m = sp.e; m - 1 <= D; m += sp.d) out.lnd_v.insert(m);
  return out;
}

bool tables_match(const ClosureTable& a, const ClosureTable& b, std::string* diff) {
  auto report = [&](const std::string& s) {
    if (diff) *diff = s;
    return false;
  };
  if (a.lnd_u != b.lnd_u) return report("LNDu degree sets differ");
  if (a.lnd_v != b.lnd_v) return report("LNDv degree sets differ");
  auto keys = [](const ClosureTable& t) {
    std::set<std::pair<long, long>> k;
    for (auto& [key, basis] : t.vf)
      if (!basis.empty()) k.insert(key);
    return k;
  };
  if (keys(a) != keys(b)) return report("reached bidegree sets differ");
  for (auto& [key, basis] : a.vf) {
    if (basis.empty()) continue;
    const auto& other = b.vf.at(key);
    std::size_t ra = basis_rank(basis), rb = basis_rank(other);
    std::ostringstream os;
    os << "component (" << key.first << "," << key.second << ")";
    if (ra != rb) return report(os.str() + ": dimensions differ");
    if (ra == 1) {
      // the two lines must coincide
      if (basis[0][0] * other[0][1] - basis[0][1] * other[0][0] != 0)
        return report(os.str() + ": one-dimensional lines differ");
    }
  }
  if (diff) diff->clear();
  return true;
}

MembershipResult decide_lie_membership(const SurfaceParams& sp,
                                       const LaurentVectorField& field) {
  MembershipResult res;
  res.member = true;
  bool exempt_exists = sp.e != sp.e_prime;
  for (const auto& [exp, dir] : field.terms()) {
    auto c = classify_component(sp, exp, dir);
    if (!c)
      throw SurfaceParamError("NOT_INVARIANT",
                              "decide_lie_membership: field is not invariant");
    if (c->kind != ComponentKind::VF) continue;  // CVF and LND lines always belong
    if (!sp.in_J(c->i, c->j)) continue;
    if (exempt_exists && c->i == sp.e - 1 && c->j == sp.e_prime - 1) continue;
    res.member = false;
    if (!res.witness) res.witness = {c->i, c->j};
  }
  return res;
}

namespace {

LaurentPolynomial sparse_in_var(const SparsePoly& p, int var, long shift = 0) {
  LaurentPolynomial out(2);
  for (const auto& [s, c] : p) {
    Exponent e = var == 0 ? ex(s + shift, 0) : ex(0, s + shift);
    out.add_term(e, c);
  }
  return out;
}

LaurentPolynomial poly_pow(const LaurentPolynomial& base, long n) {
  LaurentPolynomial out = LaurentPolynomial::constant(2, 1);
  for (long k = 0; k < n; ++k) out = out * base;
  return out;
}

LaurentPolynomial compose(const SparsePoly& a, const LaurentPolynomial& base) {
  LaurentPolynomial out(2);
  for (const auto& [s, c] : a) out = out + poly_pow(base, s) * c;
  return out;
}

// x p'(x) for sparse p
SparsePoly euler_derivative(const SparsePoly& p) {
  SparsePoly out;
  for (const auto& [s, c] : p)
    if (s != 0) out.emplace_back(s, c * Rat(s));
  return out;
}

LaurentVectorField du_field() {
  return LaurentVectorField::term(ex(-1, 0), {Rat(1), Rat(0)});
}
LaurentVectorField dv_field() {
  return LaurentVectorField::term(ex(0, -1), {Rat(0), Rat(1)});
}

LaurentVectorField assemble(const LaurentPolynomial& fu, const LaurentPolynomial& fv) {
  return LaurentVectorField::multiply(fu, du_field()) +
         LaurentVectorField::multiply(fv, dv_field());
}

bool field_is_polynomial(const LaurentVectorField& f) {
  for (const auto& [m, q] : f.terms()) {
    if (q[0] != 0 && (m[0] < -1 || m[1] < 0)) return false;
    if (q[1] != 0 && (m[0] < 0 || m[1] < -1)) return false;
  }
  return true;
}

bool field_is_invariant(const SurfaceParams& sp, const LaurentVectorField& f) {
  for (const auto& [m, q] : f.terms()) {
    long r = (to_long(m[0]) + sp.e * to_long(m[1])) % sp.d;
    if ((r % sp.d + sp.d) % sp.d != 0) return false;
  }
  return true;
}

long sparse_degree(const SparsePoly& p) {
  long deg = -1;
  for (const auto& [s, c] : p)
    if (c != 0) deg = std::max(deg, s);
  return deg;
}

Rat sparse_at_zero(const SparsePoly& p) {
  Rat v = 0;
  for (const auto& [s, c] : p)
    if (s == 0) v += c;
  return v;
}

}  // namespace

TemplateResult validate_complete_template(const SurfaceParams& sp,
                                          const TemplateRequest& req) {
  TemplateResult res;
  auto reject = [&](const char* code) {
    res.accepted = false;
    res.reason = code;
    return res;
  };

  LaurentPolynomial fu(2), fv(2);
  const LaurentPolynomial u = LaurentPolynomial::monomial(ex(1, 0));
  const LaurentPolynomial v = LaurentPolynomial::monomial(ex(0, 1));

  if (req.case_tag == "1a") {
    fu = u * req.a;
    LaurentPolynomial ud = LaurentPolynomial::monomial(ex(sp.d, 0));
    LaurentPolynomial ue = LaurentPolynomial::monomial(ex(sp.e, 0));
    fv = compose(req.A, ud) * v + compose(req.B, ue);
  } else if (req.case_tag == "1b") {
    fv = v * req.a;
    LaurentPolynomial vd = LaurentPolynomial::monomial(ex(0, sp.d));
    LaurentPolynomial vep = LaurentPolynomial::monomial(ex(0, sp.e_prime));
    fu = compose(req.A, vd) * u + compose(req.B, vep);
  } else if (req.case_tag == "2a") {
    if (req.m < 1 || req.n < 1) return reject("CASE_2A_RANGE");
    if (sp.residue(req.m, req.n) != 0) return reject("CASE_2A_CLASS");
    if (std::gcd(req.m, req.n) != 1) return reject("CASE_2A_GCD");
    LaurentPolynomial w = LaurentPolynomial::monomial(ex(req.m, req.n));
    LaurentPolynomial aw = compose(req.A, w);
    fu = aw * u * Rat(req.n);
    fv = v * req.a - aw * v * Rat(req.m);
  } else if (req.case_tag == "2b") {
    if (sp.d % 4 != 0) return reject("CASE_2B_SHAPE");
    long dp = sp.d / 4;
    if (sp.e != 2 * dp + 1) return reject("CASE_2B_SHAPE");
    LaurentPolynomial w = LaurentPolynomial::monomial(ex(2, 0)) -
                          LaurentPolynomial::monomial(ex(0, 2));  // u^2 - v^2
    LaurentPolynomial g = poly_pow(w, dp) * compose(req.A, poly_pow(w, 2 * dp));
    fu = u * req.a + g * v;
    fv = v * req.a + g * u;
  } else if (req.case_tag == "3a" || req.case_tag == "3b") {
    if (req.m < 1 || req.n < 1 || req.l < 1) return reject("CASE_3_RANGE");
    if (req.m % sp.d != 0) return reject("CASE_3_M_CLASS");
    bool is_a = req.case_tag == "3a";
    long lclass = is_a ? (req.l + sp.e) % sp.d : (1 + req.l * sp.e) % sp.d;
    if (lclass != 0) return reject("CASE_3_L_CLASS");
    for (const auto& [s, c] : req.p)
      if (c != 0 && s % sp.d != 0) return reject("CASE_3_P_CLASS");
    if (sparse_degree(req.p) >= req.l) return reject("CASE_3_P_DEGREE");
    if (sparse_at_zero(req.p) == 0) return reject("CASE_3_P_ORIGIN");

    int main_var = is_a ? 0 : 1;  // 3a: everything in u, derivation on v
    LaurentPolynomial x = is_a ? u : v;
    LaurentPolynomial y = is_a ? v : u;
    LaurentPolynomial p_poly = sparse_in_var(req.p, main_var);
    LaurentPolynomial p_over = sparse_in_var(req.p, main_var, -req.l);
    LaurentPolynomial xl = is_a ? LaurentPolynomial::monomial(ex(req.l, 0))
                                : LaurentPolynomial::monomial(ex(0, req.l));
    LaurentPolynomial xm = is_a ? LaurentPolynomial::monomial(ex(req.m, 0))
                                : LaurentPolynomial::monomial(ex(0, req.m));
    LaurentPolynomial w = xm * poly_pow(xl * y + p_poly, req.n);
    LaurentPolynomial aw = compose(req.A, w);
    LaurentPolynomial xp = sparse_in_var(euler_derivative(req.p), main_var);
    LaurentPolynomial mixed =
        (p_poly * Rat(req.m) + xp * Rat(req.n)) *
        (is_a ? LaurentPolynomial::monomial(ex(-req.l, 0))
              : LaurentPolynomial::monomial(ex(0, -req.l)));
    LaurentPolynomial f_main = (y + p_over) * req.a -
                               aw * (y * Rat(req.m + req.n * req.l) + mixed);
    LaurentPolynomial f_other = aw * x * Rat(req.n);
    if (is_a) {
      fu = f_other;
      fv = f_main;
    } else {
      fu = f_main;
      fv = f_other;
    }
  } else {
    return reject("CASE_TAG_UNKNOWN");
  }

  LaurentVectorField field = assemble(fu, fv);
  if (!field_is_polynomial(field)) return reject("POLYNOMIALITY");
  if (!field_is_invariant(sp, field)) return reject("INVARIANCE");
  res.accepted = true;
  res.field = field;
  return res;
}

SurfaceCone surface_cone(const SurfaceParams& sp) {
  // M' = Z(d,0) + Z(-e,1), written through its Hermite basis
  IntMat gens = {{Int(sp.d), Int(0)}, {Int(-sp.e), Int(1)}};
  IntMat basis = hermite_normal_form(gens);
  // coordinates of (d,0) and (0,d) in that basis: solve c . B = target
  IntMat bt(2, std::vector<Int>(2));
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) bt[r][c] = basis[c][r];
  auto coord = [&](long a, long b) {
    auto sol = solve_integer(bt, {Int(a), Int(b)});
    if (!sol) throw std::logic_error("surface_cone: generator outside the lattice");
    return LatticeVector(*sol, Ambient::M);
  };
  RationalCone dual_cone({coord(sp.d, 0), coord(0, sp.d)});
  RationalCone sigma = dual_cone.dual();
  if (!sigma.is_pointed() || !sigma.is_full_dimensional())
    throw std::logic_error("surface_cone: constructed cone is degenerate");
  return SurfaceCone{sp, basis, sigma};
}

bool surface_cone_matches(const SurfaceCone& sc, long box) {
  IntMat bt(2, std::vector<Int>(2));
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) bt[r][c] = sc.basis[c][r];
  for (long i = -box; i <= box; ++i)
    for (long j = -box; j <= box; ++j) {
      bool expected = i >= 0 && j >= 0 && sc.params.residue(i, j) == 0;
      auto sol = solve_integer(bt, {Int(i), Int(j)});
      bool actual = false;
      if (sol) {
        LatticeVector m(*sol, Ambient::M);
        actual = true;
        for (const auto& rho : sc.sigma.rays())
          if (pairing(m, rho) < 0) actual = false;
      }
      if (expected != actual) return false;
    }
  return true;
}

long minimal_ell_estimate(const SurfaceParams& sp, const ClosureTable& reached,
                          long ell_max) {
  long D = reached.bound;
  long cap = D + 2;
  using Pt = std::pair<long, long>;
  std::vector<Pt> ideal_gens;
  for (long i = 0; i <= cap; ++i)
    for (long j = 0; j <= cap; ++j)
      if (sp.in_I(i, j) && !(i == 0 && j == 0)) ideal_gens.emplace_back(i, j);

  std::set<Pt> layer{{0, 0}};  // monomials of I^ell, ell-fold sums
  auto is_lnd_u_degree = [&](long m) { return m >= 0 && (m - sp.e_prime) % sp.d == 0; };
  auto is_lnd_v_degree = [&](long m) { return m >= 0 && (m - sp.e) % sp.d == 0; };

  for (long ell = 0; ell <= ell_max; ++ell) {
    if (ell > 0) {
      std::set<Pt> next;
      for (const auto& [a, b] : layer)
        for (const auto& [x, y] : ideal_gens)
          if (a + x <= cap && b + y <= cap) next.insert({a + x, b + y});
      layer = std::move(next);
    }

    bool ok = true;
    // polynomial components of I^ell * VF at each bidegree within bound
    for (long i = 0; i <= D && ok; ++i)
      for (long j = 0; i + j <= D && ok; ++j) {
        std::vector<std::vector<Int>> needed;
        for (const auto& [a, b] : layer) {
          if (a <= i + 1 && b <= j && a == i + 1 && is_lnd_u_degree(j - b)) {
            needed.push_back({Int(1), Int(0)});
          }
          if (a <= i && b <= j + 1 && b == j + 1 && is_lnd_v_degree(i - a)) {
            needed.push_back({Int(0), Int(1)});
          }
          if (a <= i && b <= j && sp.in_I(i - a, j - b)) {
            needed.push_back({Int(1), Int(0)});
            needed.push_back({Int(0), Int(1)});
          }
        }
        if (needed.empty()) continue;
        auto it = reached.vf.find({i, j});
        const std::vector<std::vector<Int>> empty;
        const auto& have = it == reached.vf.end() ? empty : it->second;
        for (const auto& dir : needed)
          if (!in_span(have, dir)) {
            ok = false;
            break;
          }
      }
    // LND components of I^ell * VF
    for (long m = sp.e_prime; ok && m - 1 <= D; m += sp.d) {
      bool required = false;
      for (const auto& [a, b] : layer)
        if (a == 0 && is_lnd_u_degree(m - b)) required = true;
      if (required && !reached.lnd_u.count(m)) ok = false;
    }
    for (long m = sp.e; ok && m - 1 <= D; m += sp.d) {
      bool required = false;
      for (const auto& [a, b] : layer)
        if (b == 0 && is_lnd_v_degree(m - a)) required = true;
      if (required && !reached.lnd_v.count(m)) ok = false;
    }
    if (ok) return ell;
  }
  return -1;
}

}  // namespace toralg
