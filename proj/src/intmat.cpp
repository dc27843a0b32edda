#include "toralg/intmat.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

namespace toralg {

std::size_t mat_rows(const IntMat& a) { return a.size(); }
std::size_t mat_cols(const IntMat& a) { return a.empty() ? 0 : a[0].size(); }

std::size_t mat_rank(IntMat a) {
  std::size_t rows = mat_rows(a), cols = mat_cols(a);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[rank], a[piv]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (a[r][col] == 0) continue;
      Int f1 = a[rank][col], f2 = a[r][col];
      for (std::size_t c = col; c < cols; ++c) a[r][c] = a[r][c] * f1 - a[rank][c] * f2;
    }
    ++rank;
  }
  return rank;
}

namespace {

// Row-style HNF of a, tracking the unimodular transform u (u*a = h).
void hnf_transform(IntMat& a, IntMat& u) {
  std::size_t rows = mat_rows(a), cols = mat_cols(a);
  u.assign(rows, std::vector<Int>(rows, Int(0)));
  for (std::size_t i = 0; i < rows; ++i) u[i][i] = 1;

  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    // Euclidean reduction of column entries below `row`.
    while (true) {
      std::size_t piv = rows;
      for (std::size_t r = row; r < rows; ++r) {
        if (a[r][col] != 0 && (piv == rows || abs(a[r][col]) < abs(a[piv][col]))) piv = r;
      }
      if (piv == rows) break;  // column is zero below row
      std::swap(a[row], a[piv]);
      std::swap(u[row], u[piv]);
      bool clean = true;
      for (std::size_t r = row + 1; r < rows; ++r) {
        if (a[r][col] == 0) continue;
        Int q = a[r][col] / a[row][col];
        if (q != 0) {
          for (std::size_t c = 0; c < cols; ++c) a[r][c] -= q * a[row][c];
          for (std::size_t c = 0; c < rows; ++c) u[r][c] -= q * u[row][c];
        }
        if (a[r][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (a[row][col] == 0) continue;
    if (a[row][col] < 0) {
      for (auto& x : a[row]) x = -x;
      for (auto& x : u[row]) x = -x;
    }
    // Reduce entries above the pivot.
    for (std::size_t r = 0; r < row; ++r) {
      Int q = a[r][col] / a[row][col];
      if (a[r][col] % a[row][col] < 0) q -= 1;
      if (q != 0) {
        for (std::size_t c = 0; c < cols; ++c) a[r][c] -= q * a[row][c];
        for (std::size_t c = 0; c < rows; ++c) u[r][c] -= q * u[row][c];
      }
    }
    ++row;
  }
}

}  // namespace

IntMat hermite_normal_form(IntMat a) {
  IntMat u;
  hnf_transform(a, u);
  return a;
}

std::vector<Int> smith_divisors(IntMat a) {
  std::size_t rows = mat_rows(a), cols = mat_cols(a);
  std::vector<Int> divisors;
  std::size_t top = 0;
  while (true) {
    // Find a nonzero entry in the remaining block.
    std::size_t pr = rows, pc = cols;
    for (std::size_t r = top; r < rows; ++r)
      for (std::size_t c = top; c < cols; ++c)
        if (a[r][c] != 0 && (pr == rows || abs(a[r][c]) < abs(a[pr][pc]))) {
          pr = r;
          pc = c;
        }
    if (pr == rows) break;
    std::swap(a[top], a[pr]);
    for (std::size_t r = top; r < rows; ++r) std::swap(a[r][top], a[r][pc]);

    bool dirty = false;
    for (std::size_t r = top + 1; r < rows; ++r) {
      Int q = a[r][top] / a[top][top];
      if (q != 0)
        for (std::size_t c = top; c < cols; ++c) a[r][c] -= q * a[top][c];
      if (a[r][top] != 0) dirty = true;
    }
    for (std::size_t c = top + 1; c < cols; ++c) {
      Int q = a[top][c] / a[top][top];
      if (q != 0)
        for (std::size_t r = top; r < rows; ++r) a[r][c] -= q * a[r][top];
      if (a[top][c] != 0) dirty = true;
    }
    if (dirty) continue;

    // Pivot must divide every remaining entry; if not, mix that row in.
    bool fixed = true;
    for (std::size_t r = top + 1; r < rows && fixed; ++r)
      for (std::size_t c = top + 1; c < cols && fixed; ++c)
        if (a[r][c] % a[top][top] != 0) {
          for (std::size_t cc = top; cc < cols; ++cc) a[top][cc] += a[r][cc];
          fixed = false;
        }
    if (!fixed) continue;
    ++top;
  }
  for (std::size_t i = 0; i < top; ++i) divisors.push_back(abs(a[i][i]));
  return divisors;
}

std::vector<std::vector<Int>> kernel_lattice(const IntMat& a) {
  std::size_t rows = mat_rows(a), cols = mat_cols(a);
  // Row-reduce [A^T | I]; zero rows of the left block expose kernel vectors.
  IntMat t(cols, std::vector<Int>(rows, Int(0)));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) t[c][r] = a[r][c];
  IntMat u;
  hnf_transform(t, u);
  std::vector<std::vector<Int>> basis;
  for (std::size_t r = 0; r < cols; ++r) {
    bool zero = true;
    for (const auto& x : t[r])
      if (x != 0) {
        zero = false;
        break;
      }
    if (zero) basis.push_back(u[r]);
  }
  return basis;
}

std::optional<std::vector<Int>> solve_integer(const IntMat& a, const std::vector<Int>& b) {
  std::size_t rows = mat_rows(a), cols = mat_cols(a);
  assert(b.size() == rows);
  IntMat t(cols, std::vector<Int>(rows, Int(0)));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) t[c][r] = a[r][c];
  IntMat u;
  hnf_transform(t, u);  // t is now HNF of A^T, u*A^T = t

  // Express b as an integer combination of the rows of t.
  std::vector<Int> coeff(cols, Int(0));
  std::vector<Int> rem = b;
  for (std::size_t r = 0; r < cols; ++r) {
    std::size_t lead = rows;
    for (std::size_t c = 0; c < rows; ++c)
      if (t[r][c] != 0) {
        lead = c;
        break;
      }
    if (lead == rows) break;
    if (rem[lead] % t[r][lead] != 0) {
      // might still be fine after later rows? no: echelon order, leading
      // columns strictly increase, so this entry can only be produced here
      return std::nullopt;
    }
    Int q = rem[lead] / t[r][lead];
    coeff[r] = q;
    for (std::size_t c = 0; c < rows; ++c) rem[c] -= q * t[r][c];
  }
  for (const auto& x : rem)
    if (x != 0) return std::nullopt;

  std::vector<Int> sol(cols, Int(0));
  for (std::size_t r = 0; r < cols; ++r)
    if (coeff[r] != 0)
      for (std::size_t c = 0; c < cols; ++c) sol[c] += coeff[r] * u[r][c];
  return sol;
}

}  // namespace toralg
