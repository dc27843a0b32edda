#ifndef TORALG_INTMAT_HPP
#define TORALG_INTMAT_HPP

#include <optional>
#include <vector>

#include "toralg/numeric.hpp"

namespace toralg {

/// Dense integer matrix, row major. Small sizes only; everything exact.
using IntMat = std::vector<std::vector<Int>>;

std::size_t mat_rows(const IntMat& a);
std::size_t mat_cols(const IntMat& a);

/// Rank over Q by fraction-free Gaussian elimination.
std::size_t mat_rank(IntMat a);

/// Row-style Hermite normal form H = U*A with U unimodular. Returns H
/// (same shape, zero rows at the bottom).
IntMat hermite_normal_form(IntMat a);

/// Elementary divisors d_1 | d_2 | ... of the Smith normal form,
/// nonzero entries only.
std::vector<Int> smith_divisors(IntMat a);

/// Basis of the integer kernel lattice {x : A x = 0}, one vector per row.
std::vector<std::vector<Int>> kernel_lattice(const IntMat& a);

/// One integer solution of A x = b, if any.
std::optional<std::vector<Int>> solve_integer(const IntMat& a, const std::vector<Int>& b);

}  // namespace toralg

#endif
