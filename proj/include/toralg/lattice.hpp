#ifndef TORALG_LATTICE_HPP
#define TORALG_LATTICE_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "toralg/numeric.hpp"

namespace toralg {

/// Which of the two mutually dual lattices a vector lives in.
enum class Ambient { M, N };

inline const char* ambient_name(Ambient a) { return a == Ambient::M ? "M" : "N"; }

struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Integer vector in M or N.
class LatticeVector {
 public:
  LatticeVector() = default;
  LatticeVector(std::vector<Int> coords, Ambient ambient)
      : coords_(std::move(coords)), ambient_(ambient) {}
  LatticeVector(std::initializer_list<int> coords, Ambient ambient) : ambient_(ambient) {
    for (int c : coords) coords_.emplace_back(c);
  }

  std::size_t rank() const { return coords_.size(); }
  Ambient ambient() const { return ambient_; }
  const std::vector<Int>& coords() const { return coords_; }
  const Int& operator[](std::size_t i) const { return coords_[i]; }
  Int& operator[](std::size_t i) { return coords_[i]; }

  bool is_zero() const {
    for (const auto& c : coords_)
      if (c != 0) return false;
    return true;
  }

  /// gcd of the coordinates (0 for the zero vector).
  Int content() const {
    Int g = 0;
    for (const auto& c : coords_) g = toralg::gcd(g, c);
    return g;
  }

  bool is_primitive() const { return content() == 1; }

  /// Divides out the content; the zero vector stays zero.
  LatticeVector primitivized() const {
    Int g = content();
    if (g <= 1) return *this;
    LatticeVector out = *this;
    for (auto& c : out.coords_) c /= g;
    return out;
  }

  LatticeVector operator+(const LatticeVector& o) const {
    check_same(o);
    LatticeVector out = *this;
    for (std::size_t i = 0; i < coords_.size(); ++i) out.coords_[i] += o.coords_[i];
    return out;
  }
  LatticeVector operator-(const LatticeVector& o) const {
    check_same(o);
    LatticeVector out = *this;
    for (std::size_t i = 0; i < coords_.size(); ++i) out.coords_[i] -= o.coords_[i];
    return out;
  }
  LatticeVector operator-() const {
    LatticeVector out = *this;
    for (auto& c : out.coords_) c = -c;
    return out;
  }
  LatticeVector operator*(const Int& s) const {
    LatticeVector out = *this;
    for (auto& c : out.coords_) c *= s;
    return out;
  }

  bool operator==(const LatticeVector& o) const {
    return ambient_ == o.ambient_ && coords_ == o.coords_;
  }
  bool operator!=(const LatticeVector& o) const { return !(*this == o); }
  bool operator<(const LatticeVector& o) const { return coords_ < o.coords_; }

  static LatticeVector zero(std::size_t rank, Ambient ambient) {
    return LatticeVector(std::vector<Int>(rank, Int(0)), ambient);
  }
  static LatticeVector unit(std::size_t rank, std::size_t i, Ambient ambient) {
    std::vector<Int> c(rank, Int(0));
    c[i] = 1;
    return LatticeVector(std::move(c), ambient);
  }

 private:
  void check_same(const LatticeVector& o) const {
    if (coords_.size() != o.coords_.size())
      throw DimensionError("lattice vector rank mismatch");
    if (ambient_ != o.ambient_)
      throw DimensionError("lattice vectors live in different ambients");
  }

  std::vector<Int> coords_;
  Ambient ambient_ = Ambient::N;
};

/// Duality pairing M x N -> Z. Requires equal rank and opposite ambients.
Int pairing(const LatticeVector& m, const LatticeVector& p);

/// Raw dot product of coordinate vectors, no ambient check.
Int dot(const std::vector<Int>& a, const std::vector<Int>& b);

std::string to_string(const LatticeVector& v);

}  // namespace toralg

#endif
