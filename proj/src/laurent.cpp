#include "toralg/laurent.hpp"

#include <algorithm>

namespace toralg {

namespace {

void check_rank(std::size_t a, std::size_t b, const char* what) {
  if (a != b) throw DimensionError(what);
}

Rat dot_rat(const Exponent& m, const std::vector<Rat>& q) {
  Rat s = 0;
  for (std::size_t i = 0; i < m.size(); ++i) s += Rat(m[i]) * q[i];
  return s;
}

}  // namespace

LaurentPolynomial LaurentPolynomial::monomial(Exponent e, Rat c) {
  LaurentPolynomial p(e.size());
  p.add_term(e, c);
  return p;
}

LaurentPolynomial LaurentPolynomial::constant(std::size_t rank, Rat c) {
  return monomial(Exponent(rank, Int(0)), std::move(c));
}

Rat LaurentPolynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

void LaurentPolynomial::add_term(const Exponent& e, const Rat& c) {
  if (c == 0) return;
  check_rank(e.size(), rank_, "polynomial term rank mismatch");
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
  check_rank(rank_, o.rank_, "polynomial rank mismatch");
  LaurentPolynomial out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& o) const {
  check_rank(rank_, o.rank_, "polynomial rank mismatch");
  LaurentPolynomial out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
  return out;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
  check_rank(rank_, o.rank_, "polynomial rank mismatch");
  LaurentPolynomial out(rank_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      Exponent e = e1;
      for (std::size_t i = 0; i < rank_; ++i) e[i] += e2[i];
      out.add_term(e, c1 * c2);
    }
  return out;
}

LaurentPolynomial LaurentPolynomial::operator*(const Rat& s) const {
  LaurentPolynomial out(rank_);
  if (s == 0) return out;
  for (const auto& [e, c] : terms_) out.add_term(e, c * s);
  return out;
}

bool LaurentPolynomial::is_polynomial() const {
  for (const auto& [e, c] : terms_)
    for (const auto& x : e)
      if (x < 0) return false;
  return true;
}

LaurentVectorField LaurentVectorField::term(Exponent e, std::vector<Rat> q) {
  LaurentVectorField v(e.size());
  v.add_term(e, q);
  return v;
}

LaurentVectorField LaurentVectorField::term_int(Exponent e, std::vector<Int> p, Rat coeff) {
  std::vector<Rat> q;
  q.reserve(p.size());
  for (const auto& x : p) q.emplace_back(Rat(x) * coeff);
  return term(std::move(e), std::move(q));
}

void LaurentVectorField::add_term(const Exponent& e, const std::vector<Rat>& q) {
  check_rank(e.size(), rank_, "field term rank mismatch");
  check_rank(q.size(), rank_, "field direction rank mismatch");
  auto [it, inserted] = terms_.emplace(e, q);
  if (!inserted)
    for (std::size_t i = 0; i < rank_; ++i) it->second[i] += q[i];
  if (std::all_of(it->second.begin(), it->second.end(),
                  [](const Rat& x) { return x == 0; }))
    terms_.erase(it);
}

LaurentVectorField LaurentVectorField::operator+(const LaurentVectorField& o) const {
  check_rank(rank_, o.rank_, "field rank mismatch");
  LaurentVectorField out = *this;
  for (const auto& [e, q] : o.terms_) out.add_term(e, q);
  return out;
}

LaurentVectorField LaurentVectorField::operator-(const LaurentVectorField& o) const {
  return *this + o * Rat(-1);
}

LaurentVectorField LaurentVectorField::operator*(const Rat& s) const {
  LaurentVectorField out(rank_);
  if (s == 0) return out;
  for (const auto& [e, q] : terms_) {
    std::vector<Rat> sq = q;
    for (auto& x : sq) x *= s;
    out.add_term(e, sq);
  }
  return out;
}

LaurentVectorField LaurentVectorField::multiply(const LaurentPolynomial& f,
                                                const LaurentVectorField& v) {
  check_rank(f.rank(), v.rank(), "poly/field rank mismatch");
  LaurentVectorField out(v.rank());
  for (const auto& [a, c] : f.terms())
    for (const auto& [e, q] : v.terms()) {
      Exponent shifted = e;
      for (std::size_t i = 0; i < out.rank(); ++i) shifted[i] += a[i];
      std::vector<Rat> cq = q;
      for (auto& x : cq) x *= c;
      out.add_term(shifted, cq);
    }
  return out;
}

LaurentPolynomial derive(const LaurentVectorField& v, const LaurentPolynomial& f) {
  check_rank(v.rank(), f.rank(), "derive: rank mismatch");
  LaurentPolynomial out(f.rank());
  for (const auto& [e, q] : v.terms())
    for (const auto& [m, c] : f.terms()) {
      Rat coeff = c * dot_rat(m, q);
      if (coeff == 0) continue;
      Exponent shifted = m;
      for (std::size_t i = 0; i < f.rank(); ++i) shifted[i] += e[i];
      out.add_term(shifted, coeff);
    }
  return out;
}

LaurentVectorField bracket_oracle(const LaurentVectorField& v1,
                                  const LaurentVectorField& v2) {
  check_rank(v1.rank(), v2.rank(), "bracket: rank mismatch");
  std::size_t n = v1.rank();
  LaurentVectorField out(n);
  for (const auto& [e1, q1] : v1.terms())
    for (const auto& [e2, q2] : v2.terms()) {
      LaurentVectorField t1 = LaurentVectorField::term(e1, q1);
      LaurentVectorField t2 = LaurentVectorField::term(e2, q2);
      Exponent esum = e1;
      for (std::size_t i = 0; i < n; ++i) esum[i] += e2[i];
      // Probe with the unit monomials: the commutator of two homogeneous
      // terms is homogeneous of degree e1+e2, and its direction reads off
      // coordinate-wise from the action on chi^{delta_i}.
      std::vector<Rat> q(n, Rat(0));
      for (std::size_t i = 0; i < n; ++i) {
        Exponent delta(n, Int(0));
        delta[i] = 1;
        LaurentPolynomial probe = LaurentPolynomial::monomial(delta);
        LaurentPolynomial diff =
            derive(t1, derive(t2, probe)) - derive(t2, derive(t1, probe));
        Exponent target = delta;
        for (std::size_t k = 0; k < n; ++k) target[k] += esum[k];
        q[i] = diff.coefficient(target);
      }
      out.add_term(esum, q);
    }
  return out;
}

std::map<Exponent, LaurentVectorField> decompose(const LaurentVectorField& v,
                                                 const Grading& grading) {
  std::map<Exponent, LaurentVectorField> parts;
  for (const auto& [e, q] : v.terms()) {
    Exponent key;
    if (std::holds_alternative<Bidegree>(grading)) {
      key = e;
    } else {
      const auto& zd = std::get<ZdClass>(grading);
      if (v.rank() != 2) throw DimensionError("ZdClass grading needs rank 2");
      Int cls = (e[0] + Int(zd.e) * e[1]) % zd.d;
      if (cls < 0) cls += zd.d;
      key = Exponent{cls, Int(0)};
    }
    auto it = parts.find(key);
    if (it == parts.end()) it = parts.emplace(key, LaurentVectorField(v.rank())).first;
    it->second.add_term(e, q);
  }
  return parts;
}

}  // namespace toralg
