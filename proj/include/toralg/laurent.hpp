#ifndef TORALG_LAURENT_HPP
#define TORALG_LAURENT_HPP

#include <map>
#include <variant>
#include <vector>

#include "toralg/lattice.hpp"
#include "toralg/numeric.hpp"

namespace toralg {

using Exponent = std::vector<Int>;

/// Sparse Laurent polynomial with exact rational coefficients.
class LaurentPolynomial {
 public:
  explicit LaurentPolynomial(std::size_t rank) : rank_(rank) {}

  static LaurentPolynomial monomial(Exponent e, Rat c = Rat(1));
  static LaurentPolynomial constant(std::size_t rank, Rat c);

  std::size_t rank() const { return rank_; }
  const std::map<Exponent, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rat coefficient(const Exponent& e) const;

  void add_term(const Exponent& e, const Rat& c);

  LaurentPolynomial operator+(const LaurentPolynomial& o) const;
  LaurentPolynomial operator-(const LaurentPolynomial& o) const;
  LaurentPolynomial operator*(const LaurentPolynomial& o) const;
  LaurentPolynomial operator*(const Rat& s) const;
  bool operator==(const LaurentPolynomial& o) const {
    return rank_ == o.rank_ && terms_ == o.terms_;
  }

  /// True when no exponent has a negative entry.
  bool is_polynomial() const;

 private:
  std::size_t rank_;
  std::map<Exponent, Rat> terms_;  // no zero coefficients stored
};

/// Finite sum of monomial derivation terms chi^m * d_{0,q}. Canonical form
/// keeps one combined rational direction per exponent, so equality is
/// structural equality of the term map.
class LaurentVectorField {
 public:
  explicit LaurentVectorField(std::size_t rank) : rank_(rank) {}

  /// Single homogeneous term: chi^m |-> <m,q> chi^{m+e}, q rational.
  static LaurentVectorField term(Exponent e, std::vector<Rat> q);
  static LaurentVectorField term_int(Exponent e, std::vector<Int> p, Rat coeff = Rat(1));

  std::size_t rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponent, std::vector<Rat>>& terms() const { return terms_; }

  void add_term(const Exponent& e, const std::vector<Rat>& q);

  LaurentVectorField operator+(const LaurentVectorField& o) const;
  LaurentVectorField operator-(const LaurentVectorField& o) const;
  LaurentVectorField operator*(const Rat& s) const;
  bool operator==(const LaurentVectorField& o) const {
    return rank_ == o.rank_ && terms_ == o.terms_;
  }

  /// chi^a * field, per polynomial term.
  static LaurentVectorField multiply(const LaurentPolynomial& f, const LaurentVectorField& v);

 private:
  std::size_t rank_;
  std::map<Exponent, std::vector<Rat>> terms_;  // exponent -> combined direction
};

/// Derivation action, Leibniz-linear, exact.
LaurentPolynomial derive(const LaurentVectorField& v, const LaurentPolynomial& f);

/// Commutator computed through derive on probe monomials, independent of the
/// closed-form homogeneous bracket.
LaurentVectorField bracket_oracle(const LaurentVectorField& v1, const LaurentVectorField& v2);

struct Bidegree {};
struct ZdClass {
  long d;
  long e;
};
using Grading = std::variant<Bidegree, ZdClass>;

/// Partition of the term list by grade; parts sum back to the input.
/// Bidegree keys are the canonical exponents; ZdClass keys are residues
/// [m_u + e*m_v] mod d embedded as constant exponents (residue, 0, ..., 0).
std::map<Exponent, LaurentVectorField> decompose(const LaurentVectorField& v,
                                                 const Grading& grading);

}  // namespace toralg

#endif
