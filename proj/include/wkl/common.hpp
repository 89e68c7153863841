#pragma once

/// Shared exact arithmetic: arbitrary-precision integers and rationals
/// (GMP), dense integer/rational matrices, and the lattice algorithms the
/// rest of the library leans on (Hermite and Smith normal forms, integer
/// left-kernels, lattice intersection, rational linear solving).
///
/// Conventions used throughout the library:
///   * vectors are rows; a lattice is stored as a matrix whose rows generate
///     it inside the ambient Z^d;
///   * Hermite form here is the row-style one: pivots move left-to-right,
///     pivot entries are positive, entries above a pivot are reduced into
///     [0, pivot);
///   * Smith form produces unimodular U, V with U * A * V = D.

#include <gmpxx.h>

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace wkl {

using Int = mpz_class;
using Rat = mpq_class;
using IVec = std::vector<Int>;
using IMat = std::vector<IVec>;
using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;

// ---------------------------------------------------------------------------
// Small helpers
// ---------------------------------------------------------------------------

inline Int int_gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

/// Floor division a/b for exact integers (b != 0), rounding toward -infinity.
inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

/// Ceiling of the rational a/b for exact integers (b > 0).
inline Int ceil_div(const Int& a, const Int& b) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

/// Euclidean remainder in [0, |b|).
inline Int pos_mod(const Int& a, const Int& b) {
  Int r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Rat rat(const Int& num, const Int& den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

/// Parse "p/q" or "p" into an exact rational.
inline Rat parse_rational(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::runtime_error("bad rational: " + s);
  r.canonicalize();
  return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

// ---------------------------------------------------------------------------
// Dense matrices
// ---------------------------------------------------------------------------

inline IMat imat_zero(size_t rows, size_t cols) {
  return IMat(rows, IVec(cols, 0));
}

inline IMat imat_identity(size_t n) {
  IMat m = imat_zero(n, n);
  for (size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline IMat imat_mul(const IMat& a, const IMat& b) {
  size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
  assert(a.empty() || a[0].size() == k);
  IMat c = imat_zero(n, p);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < k; ++j) {
      if (a[i][j] == 0) continue;
      for (size_t l = 0; l < p; ++l) c[i][l] += a[i][j] * b[j][l];
    }
  return c;
}

/// Row vector times matrix.
inline IVec vec_mat(const IVec& v, const IMat& m) {
  assert(v.size() == m.size());
  size_t p = m.empty() ? 0 : m[0].size();
  IVec r(p, 0);
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    for (size_t j = 0; j < p; ++j) r[j] += v[i] * m[i][j];
  }
  return r;
}

inline IMat imat_transpose(const IMat& a) {
  size_t n = a.size(), p = a.empty() ? 0 : a[0].size();
  IMat t = imat_zero(p, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < p; ++j) t[j][i] = a[i][j];
  return t;
}

inline IVec vec_add(const IVec& a, const IVec& b) {
  assert(a.size() == b.size());
  IVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline IVec vec_sub(const IVec& a, const IVec& b) {
  assert(a.size() == b.size());
  IVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline IVec vec_scale(const Int& c, const IVec& a) {
  IVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline Int vec_dot(const IVec& a, const IVec& b) {
  assert(a.size() == b.size());
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline bool vec_is_zero(const IVec& a) {
  return std::all_of(a.begin(), a.end(), [](const Int& x) { return x == 0; });
}

inline std::string vec_str(const IVec& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
  os << ")";
  return os.str();
}

// ---------------------------------------------------------------------------
// Hermite normal form (row style) and friends
// ---------------------------------------------------------------------------

/// In-place row-style Hermite normal form of `a`. Returns the rank; on exit
/// the first `rank` rows are the HNF basis of the row space (pivot columns
/// increase, pivot entries positive, entries above each pivot reduced into
/// [0, pivot)), and the remaining rows are zero. If `u` is non-null it is
/// set to a unimodular matrix with u * a_in = a_out.
inline size_t hermite_rows(IMat& a, IMat* u = nullptr) {
  size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  if (u) *u = imat_identity(rows);
  size_t pr = 0;  // pivot row
  for (size_t pc = 0; pc < cols && pr < rows; ++pc) {
    // Gcd-eliminate column pc below row pr.
    while (true) {
      size_t best = rows;
      for (size_t i = pr; i < rows; ++i)
        if (a[i][pc] != 0 &&
            (best == rows || cmp(abs(a[i][pc]), abs(a[best][pc])) < 0))
          best = i;
      if (best == rows) break;  // column is zero from pr down
      std::swap(a[pr], a[best]);
      if (u) std::swap((*u)[pr], (*u)[best]);
      bool clean = true;
      for (size_t i = pr + 1; i < rows; ++i) {
        if (a[i][pc] == 0) continue;
        Int q = floor_div(a[i][pc], a[pr][pc]);
        for (size_t j = 0; j < cols; ++j) a[i][j] -= q * a[pr][j];
        if (u)
          for (size_t j = 0; j < rows; ++j) (*u)[i][j] -= q * (*u)[pr][j];
        if (a[i][pc] != 0) clean = false;
      }
      if (clean) break;
    }
    if (a[pr][pc] == 0) continue;
    if (a[pr][pc] < 0) {
      for (size_t j = 0; j < cols; ++j) a[pr][j] = -a[pr][j];
      if (u)
        for (size_t j = 0; j < rows; ++j) (*u)[pr][j] = -(*u)[pr][j];
    }
    // Reduce the entries above the pivot into [0, pivot).
    for (size_t i = 0; i < pr; ++i) {
      Int q = floor_div(a[i][pc], a[pr][pc]);
      if (q == 0) continue;
      for (size_t j = 0; j < cols; ++j) a[i][j] -= q * a[pr][j];
      if (u)
        for (size_t j = 0; j < rows; ++j) (*u)[i][j] -= q * (*u)[pr][j];
    }
    ++pr;
  }
  return pr;
}

/// HNF basis of the lattice generated by the rows of `gens` (zero rows
/// dropped).
inline IMat lattice_basis(IMat gens) {
  size_t r = hermite_rows(gens);
  gens.resize(r);
  return gens;
}

inline bool lattice_equal(const IMat& a, const IMat& b) {
  return lattice_basis(a) == lattice_basis(b);
}

/// Integer basis of {x : x * m = 0} (the left kernel).
inline IMat left_kernel(IMat m) {
  IMat u;
  size_t rank = hermite_rows(m, &u);
  IMat ker(u.begin() + rank, u.end());
  return lattice_basis(ker);
}

/// Basis of the intersection of the two row lattices.
inline IMat lattice_intersection(const IMat& a, const IMat& b) {
  if (a.empty() || b.empty()) return {};
  IMat stacked = a;
  for (const auto& row : b) stacked.push_back(row);
  IMat ker = left_kernel(stacked);  // rows (u | v) with u*a = -v*b
  IMat gens;
  for (const auto& k : ker) {
    IVec u(k.begin(), k.begin() + a.size());
    gens.push_back(vec_mat(u, a));
  }
  return lattice_basis(gens);
}

/// Does the row lattice of `basis` contain `v`? (basis must be in HNF.)
inline bool lattice_contains(const IMat& basis, IVec v) {
  for (const auto& row : basis) {
    size_t p = 0;
    while (p < row.size() && row[p] == 0) ++p;
    if (p == row.size()) continue;
    Int q = floor_div(v[p], row[p]);
    for (size_t j = 0; j < v.size(); ++j) v[j] -= q * row[j];
  }
  return vec_is_zero(v);
}

// ---------------------------------------------------------------------------
// Smith normal form
// ---------------------------------------------------------------------------

/// Smith normal form: produces unimodular u (rows x rows) and v (cols x cols)
/// with u * a * v = d, d diagonal with d[i] | d[i+1] (nonnegative).
struct SmithForm {
  IMat u, v;
  IVec divisors;  // length min(rows, cols), trailing zeros possible
};

inline SmithForm smith_form(IMat a) {
  size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  SmithForm s;
  s.u = imat_identity(rows);
  s.v = imat_identity(cols);
  size_t t = 0;
  auto swap_rows = [&](size_t i, size_t j) {
    std::swap(a[i], a[j]);
    std::swap(s.u[i], s.u[j]);
  };
  auto swap_cols = [&](size_t i, size_t j) {
    for (size_t r = 0; r < rows; ++r) std::swap(a[r][i], a[r][j]);
    for (size_t r = 0; r < cols; ++r) std::swap(s.v[r][i], s.v[r][j]);
  };
  auto add_row = [&](size_t dst, size_t src, const Int& c) {  // row dst += c*src
    for (size_t j = 0; j < cols; ++j) a[dst][j] += c * a[src][j];
    for (size_t j = 0; j < rows; ++j) s.u[dst][j] += c * s.u[src][j];
  };
  auto add_col = [&](size_t dst, size_t src, const Int& c) {  // col dst += c*src
    for (size_t r = 0; r < rows; ++r) a[r][dst] += c * a[r][src];
    for (size_t r = 0; r < cols; ++r) s.v[r][dst] += c * s.v[r][src];
  };
  for (; t < rows && t < cols; ++t) {
    // Find a nonzero pivot of least absolute value in the trailing block.
    size_t pi = rows, pj = cols;
    for (size_t i = t; i < rows; ++i)
      for (size_t j = t; j < cols; ++j)
        if (a[i][j] != 0 &&
            (pi == rows || cmp(abs(a[i][j]), abs(a[pi][pj])) < 0)) {
          pi = i;
          pj = j;
        }
    if (pi == rows) break;  // trailing block zero
    swap_rows(t, pi);
    swap_cols(t, pj);
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (size_t i = t + 1; i < rows; ++i)
        if (a[i][t] != 0) {
          add_row(i, t, -floor_div(a[i][t], a[t][t]));
          if (a[i][t] != 0) {
            swap_rows(t, i);
            dirty = true;
          }
        }
      for (size_t j = t + 1; j < cols; ++j)
        if (a[t][j] != 0) {
          add_col(j, t, -floor_div(a[t][j], a[t][t]));
          if (a[t][j] != 0) {
            swap_cols(t, j);
            dirty = true;
          }
        }
      if (!dirty) {
        // Enforce the divisibility chain: a[t][t] must divide the block.
        for (size_t i = t + 1; i < rows && !dirty; ++i)
          for (size_t j = t + 1; j < cols && !dirty; ++j)
            if (a[i][j] % a[t][t] != 0) {
              add_row(t, i, 1);
              dirty = true;
            }
      }
    }
    if (a[t][t] < 0) {
      for (size_t j = 0; j < cols; ++j) a[t][j] = -a[t][j];
      for (size_t j = 0; j < rows; ++j) s.u[t][j] = -s.u[t][j];
    }
  }
  s.divisors.assign(std::min(rows, cols), 0);
  for (size_t i = 0; i < s.divisors.size(); ++i) s.divisors[i] = a[i][i];
  return s;
}

// ---------------------------------------------------------------------------
// Rational linear algebra
// ---------------------------------------------------------------------------

inline QMat qmat_from(const IMat& a) {
  QMat q(a.size(), QVec(a.empty() ? 0 : a[0].size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) q[i][j] = rat(a[i][j]);
  return q;
}

inline QVec qvec_from(const IVec& v) {
  QVec q(v.size());
  for (size_t i = 0; i < v.size(); ++i) q[i] = rat(v[i]);
  return q;
}

/// Solve x * a = b for a row vector x (a square, invertible). Throws if
/// singular.
inline QVec solve_row_system(QMat a, QVec b) {
  size_t n = a.size();
  assert(b.size() == (a.empty() ? 0 : a[0].size()));
  assert(n == b.size());
  // Work with the transpose problem a^T x^T = b^T via Gaussian elimination.
  QMat m(n, QVec(n + 1));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) m[i][j] = a[j][i];
    m[i][n] = b[i];
  }
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) throw std::runtime_error("singular system");
    std::swap(m[c], m[p]);
    Rat inv = m[c][c];
    for (size_t j = c; j <= n; ++j) m[c][j] /= inv;
    for (size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (size_t j = c; j <= n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  QVec x(n);
  for (size_t i = 0; i < n; ++i) x[i] = m[i][n];
  return x;
}

/// Rank of a rational matrix by Gaussian elimination.
inline size_t qmat_rank(QMat m) {
  size_t rows = m.size(), cols = rows ? m[0].size() : 0, rank = 0;
  for (size_t c = 0; c < cols && rank < rows; ++c) {
    size_t p = rank;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[rank], m[p]);
    for (size_t i = rank + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      Rat f = m[i][c] / m[rank][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

/// Inverse of a unimodular integer matrix (exact; asserts integrality).
inline IMat imat_inverse_unimodular(const IMat& a) {
  size_t n = a.size();
  QMat m(n, QVec(2 * n, Rat(0)));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) m[i][j] = rat(a[i][j]);
    m[i][n + i] = 1;
  }
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    assert(p < n && "matrix not invertible");
    std::swap(m[c], m[p]);
    Rat inv = m[c][c];
    for (size_t j = 0; j < 2 * n; ++j) m[c][j] /= inv;
    for (size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (size_t j = 0; j < 2 * n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  IMat inv = imat_zero(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      assert(m[i][n + j].get_den() == 1 && "inverse not integral");
      inv[i][j] = m[i][n + j].get_num();
    }
  return inv;
}

}  // namespace wkl
