#include "toralg/lattice.hpp"

#include <sstream>

namespace toralg {

Int pairing(const LatticeVector& m, const LatticeVector& p) {
  if (m.rank() != p.rank()) throw DimensionError("pairing: rank mismatch");
  if (m.ambient() == p.ambient())
    throw DimensionError("pairing: both vectors live in the same ambient lattice");
  Int s = 0;
  for (std::size_t i = 0; i < m.rank(); ++i) s += m[i] * p[i];
  return s;
}

Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::string to_string(const LatticeVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.rank(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ')';
  return os.str();
}

}  // namespace toralg
