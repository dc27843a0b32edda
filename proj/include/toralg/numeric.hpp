#ifndef TORALG_NUMERIC_HPP
#define TORALG_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace toralg {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int abs(const Int& a) { return boost::multiprecision::abs(a); }

inline int sign(const Int& a) { return a.sign(); }

}  // namespace toralg

#endif
