#pragma once

/// Covering data and the finite moduli of genuine characters.
///
/// A degree-n cover of the split group attached to a root datum is
/// parameterized by a Weyl-invariant integer-valued quadratic form Q on Y
/// (stored via its Gram matrix B and a bisector D with D + Dᵀ = B,
/// D(y,y) = Q(y)). From (Q, n) we derive:
///   * n_α = n / gcd(n, Q(α^∨)) for each root α;
///   * the sublattice Y_{Q,n} = {y : B(y, ·) ∈ nZ} = Y ∩ nY*;
///   * the sublattice Y_{Q,n}^{sc} spanned by {n_α α^∨};
///   * the finite moduli 𝒳_{Q,n} = Y / Y_{Q,n} with the twisted Weyl action
///     w[y] = w(y − ρ) + ρ, its orbit decomposition, and the saturation /
///     persistence predicates.

#include "wkl/rootdata.hpp"

namespace wkl {

// ---------------------------------------------------------------------------
// CoveringDatum
// ---------------------------------------------------------------------------

struct CoveringDatum {
  RootDatum datum;
  size_t n = 1;  // covering degree
  int xi = 1;    // sign (-1)^? attached to the chosen uniformizer pairing

  IMat b;  // Gram matrix of B_Q on the Y-basis
  IMat d;  // upper-triangular bisector: D + D^T = B, D(y,y) = Q(y)

  std::vector<Int> q_coroot;  // Q(alpha^vee) per root index
  std::vector<Int> n_alpha;   // n_alpha per root index

  IMat y_qn;     // HNF basis of Y_{Q,n} (always full rank)
  IMat y_qn_sc;  // HNF basis of span{n_alpha alpha^vee} (rank = semisimple rank)

  Int q_basis_value(size_t i) const { return d[i][i]; }  // Q(e_i)

  Int q_value(const IVec& y) const {
    Int s = 0;
    for (size_t i = 0; i < y.size(); ++i)
      for (size_t j = 0; j < y.size(); ++j) s += y[i] * d[i][j] * y[j];
    return s;
  }

  Int b_value(const IVec& y1, const IVec& y2) const {
    Int s = 0;
    for (size_t i = 0; i < y1.size(); ++i)
      for (size_t j = 0; j < y2.size(); ++j) s += y1[i] * b[i][j] * y2[j];
    return s;
  }

  /// D(y1, y2) for the stored bisector (order of arguments matters).
  Int d_value(const IVec& y1, const IVec& y2) const {
    Int s = 0;
    for (size_t i = 0; i < y1.size(); ++i)
      for (size_t j = 0; j < y2.size(); ++j) s += y1[i] * d[i][j] * y2[j];
    return s;
  }

  Int n_alpha_of_coroot(const IVec& coroot) const {
    Int q = q_value(coroot);
    Int g = int_gcd(Int(n), q);
    return Int(n) / g;
  }
};

namespace detail {

/// Values of Q on the simple coroots from the configured list: either one
/// value per simple coroot, or a single value taken on the short simple
/// coroots and propagated along the Dynkin diagram by the length ratios.
inline std::vector<Rat> q_on_simple_coroots(const RootDatum& rd,
                                            const std::vector<Int>& q_input) {
  std::vector<Rat> q(rd.rank);
  if (q_input.size() == rd.rank) {
    for (size_t i = 0; i < rd.rank; ++i) q[i] = rat(q_input[i]);
  } else if (q_input.size() == 1) {
    // Q_i / Q_j = cartan[i][j] / cartan[j][i] on adjacent nodes.
    std::vector<bool> done(rd.rank, false);
    q[0] = rat(1);
    done[0] = true;
    std::deque<size_t> queue{0};
    while (!queue.empty()) {
      size_t i = queue.front();
      queue.pop_front();
      for (size_t j = 0; j < rd.rank; ++j) {
        if (done[j] || rd.cartan[i][j] == 0) continue;
        q[j] = q[i] * rat(rd.cartan[j][i]) / rat(rd.cartan[i][j]);
        done[j] = true;
        queue.push_back(j);
      }
    }
    for (size_t i = 0; i < rd.rank; ++i)
      if (!done[i]) throw std::runtime_error("Dynkin diagram not connected");
    Rat mn = q[0];
    for (const Rat& x : q) mn = std::min(mn, x);
    for (Rat& x : q) x = x / mn * rat(q_input[0]);
  } else {
    throw std::runtime_error(
        "quadratic form needs one value per simple coroot or a single value");
  }
  for (size_t i = 0; i < rd.rank; ++i)
    if (q[i].get_den() != 1)
      throw std::runtime_error("quadratic form is not integer-valued");
  return q;
}

}  // namespace detail

/// Assemble a covering datum, validating Weyl-invariance and integrality.
/// For the GL lattice q_input is the pair (c1, c2) of the two-parameter
/// family Q(y) = c1 sum y_i^2 + c2 sum_{i<j} y_i y_j; otherwise q_input lists
/// Q on the simple coroots (or a single value on the short simple coroots).
inline CoveringDatum build_covering(const RootDatum& rd,
                                    const std::vector<Int>& q_input, size_t n,
                                    int xi = 1) {
  if (n == 0) throw std::runtime_error("covering degree must be positive");
  if (xi != 1 && xi != -1) throw std::runtime_error("xi must be +1 or -1");
  CoveringDatum cov;
  cov.datum = rd;
  cov.n = n;
  cov.xi = xi;

  const size_t dim = rd.dim;
  cov.b = imat_zero(dim, dim);
  if (rd.lattice == "GL") {
    if (q_input.size() != 2)
      throw std::runtime_error("GL lattice expects two form parameters");
    const Int &c1 = q_input[0], &c2 = q_input[1];
    for (size_t i = 0; i < dim; ++i)
      for (size_t j = 0; j < dim; ++j) cov.b[i][j] = i == j ? 2 * c1 : c2;
  } else {
    auto q = detail::q_on_simple_coroots(rd, q_input);
    // Validate the symmetry constraint Q_i c[j][i] = Q_j c[i][j].
    for (size_t i = 0; i < rd.rank; ++i)
      for (size_t j = 0; j < rd.rank; ++j)
        if (q[i] * rat(rd.cartan[j][i]) != q[j] * rat(rd.cartan[i][j]))
          throw std::runtime_error("quadratic form is not Weyl-invariant");
    // Gram matrix on the coroot basis: B(a_i^vee, a_j^vee) =
    // Q_i <a_j^vee, a_i> off-diagonal, 2 Q_i on the diagonal.
    QMat b_sc(rd.rank, QVec(rd.rank, Rat(0)));
    for (size_t i = 0; i < rd.rank; ++i)
      for (size_t j = 0; j < rd.rank; ++j)
        b_sc[i][j] = i == j ? Rat(2 * q[i]) : Rat(q[i] * rat(rd.cartan[j][i]));
    if (rd.lattice == "sc") {
      for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j < dim; ++j) {
          if (b_sc[i][j].get_den() != 1)
            throw std::runtime_error("form is not integer-valued on Y");
          cov.b[i][j] = b_sc[i][j].get_num();
        }
    } else {  // adjoint: Y-basis = fundamental coweights, coroots = cartan rows
      // If y = c * C in coweight coordinates (C = cartan), then the Gram
      // matrix N on coweights satisfies C N C^T = B_sc.
      QMat cinv = qmat_from(imat_identity(rd.rank));
      {
        // Invert the Cartan matrix rationally.
        QMat a = qmat_from(rd.cartan);
        size_t r = rd.rank;
        for (size_t col = 0; col < r; ++col) {
          size_t piv = col;
          while (piv < r && a[piv][col] == 0) ++piv;
          if (piv == r) throw std::runtime_error("singular Cartan matrix");
          std::swap(a[piv], a[col]);
          std::swap(cinv[piv], cinv[col]);
          Rat d0 = a[col][col];
          for (size_t j = 0; j < r; ++j) {
            a[col][j] /= d0;
            cinv[col][j] /= d0;
          }
          for (size_t i = 0; i < r; ++i) {
            if (i == col || a[i][col] == 0) continue;
            Rat f = a[i][col];
            for (size_t j = 0; j < r; ++j) {
              a[i][j] -= f * a[col][j];
              cinv[i][j] -= f * cinv[col][j];
            }
          }
        }
      }
      // N = C^{-1} B_sc C^{-T}
      QMat n_mat(rd.rank, QVec(rd.rank, Rat(0)));
      for (size_t i = 0; i < rd.rank; ++i)
        for (size_t j = 0; j < rd.rank; ++j) {
          Rat s(0);
          for (size_t k = 0; k < rd.rank; ++k)
            for (size_t l = 0; l < rd.rank; ++l)
              s += cinv[i][k] * b_sc[k][l] * cinv[j][l];
          n_mat[i][j] = s;
        }
      for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j < dim; ++j) {
          if (n_mat[i][j].get_den() != 1)
            throw std::runtime_error(
                "form is not integer-valued on the adjoint lattice");
          cov.b[i][j] = n_mat[i][j].get_num();
        }
      for (size_t i = 0; i < dim; ++i)
        if (cov.b[i][i] % 2 != 0)
          throw std::runtime_error(
              "form is not integer-valued on the adjoint lattice");
    }
  }

  // Upper-triangular bisector.
  cov.d = imat_zero(dim, dim);
  for (size_t i = 0; i < dim; ++i) {
    if (cov.b[i][i] % 2 != 0)
      throw std::runtime_error("Gram matrix must have even diagonal");
    cov.d[i][i] = cov.b[i][i] / 2;
    for (size_t j = i + 1; j < dim; ++j) cov.d[i][j] = cov.b[i][j];
  }

  // Full Weyl-invariance check: G_s B G_s^T = B for every simple reflection.
  for (size_t s = 0; s < rd.rank; ++s) {
    IMat g = imat_identity(dim);
    for (size_t a = 0; a < dim; ++a)
      for (size_t c = 0; c < dim; ++c)
        g[a][c] -= rd.simple_roots[s][a] * rd.simple_coroots[s][c];
    IMat gbg = imat_mul(imat_mul(g, cov.b), imat_transpose(g));
    if (gbg != cov.b)
      throw std::runtime_error("quadratic form is not Weyl-invariant");
  }

  for (size_t k = 0; k < rd.num_roots(); ++k) {
    cov.q_coroot.push_back(cov.q_value(rd.coroots[k]));
    cov.n_alpha.push_back(cov.n_alpha_of_coroot(rd.coroots[k]));
  }

  // Y_{Q,n} = {y : y B in nZ^dim}. With U B V = diag(d_i) (Smith form) and
  // z = y U^{-1}, the condition becomes d_i z_i in nZ, so a basis is given by
  // the rows (n / gcd(n, d_i)) U_i.
  {
    SmithForm sf = smith_form(cov.b);
    IMat gens;
    for (size_t i = 0; i < dim; ++i) {
      Int g = int_gcd(sf.divisors[i], Int(n));
      gens.push_back(vec_scale(Int(n) / g, sf.u[i]));
    }
    cov.y_qn = lattice_basis(gens);
    if (cov.y_qn.size() != dim)
      throw std::runtime_error("internal: Y_{Q,n} must have full rank");
  }
  {
    IMat gens;
    for (size_t k = 0; k < rd.num_positive; ++k)
      gens.push_back(vec_scale(cov.n_alpha[k], rd.coroots[k]));
    cov.y_qn_sc = lattice_basis(gens);
    for (const IVec& row : cov.y_qn_sc)
      if (!lattice_contains(cov.y_qn, row))
        throw std::runtime_error("internal: Y_{Q,n}^{sc} not inside Y_{Q,n}");
  }
  return cov;
}

/// The derived pair (Y_{Q,n} basis, Y_{Q,n}^{sc} basis), both in HNF.
inline std::pair<IMat, IMat> derive_lattices(const CoveringDatum& cov) {
  return {cov.y_qn, cov.y_qn_sc};
}

// ---------------------------------------------------------------------------
// ModuliSpace
// ---------------------------------------------------------------------------

/// The quotient Y / Lambda of the ambient lattice by a full-rank sublattice,
/// with a box transversal and a class map through the Smith normal form.
struct FiniteQuotient {
  IMat basis;                 // HNF, full rank, upper triangular
  SmithForm snf;              // of basis
  std::vector<Int> divisors;  // nontrivial cyclic factors (d_i > 1)
  std::vector<IVec> transversal;  // box representatives, lexicographic
  std::map<IVec, size_t> index_of;
  Int order = 1;

  /// Canonical representative: reduce into the box 0 <= y_i < basis[i][i].
  IVec reduce(IVec y) const {
    for (size_t i = 0; i < basis.size(); ++i) {
      Int q = floor_div(y[i], basis[i][i]);
      if (q != 0)
        for (size_t j = i; j < y.size(); ++j) y[j] -= q * basis[i][j];
    }
    return y;
  }

  size_t class_index(const IVec& y) const { return index_of.at(reduce(y)); }

  /// Class label as a tuple over the cyclic factors: (y V) mod d_i.
  IVec class_label(const IVec& y) const {
    IVec z = vec_mat(y, snf.v);
    for (size_t i = 0; i < z.size(); ++i)
      if (snf.divisors[i] != 0) z[i] = pos_mod(z[i], snf.divisors[i]);
    return z;
  }
};

inline FiniteQuotient build_quotient(const IMat& hnf_basis) {
  FiniteQuotient q;
  q.basis = hnf_basis;
  const size_t dim = hnf_basis.size();
  for (size_t i = 0; i < dim; ++i) {
    if (hnf_basis[i][i] <= 0)
      throw std::runtime_error("quotient needs a full-rank triangular basis");
    q.order *= hnf_basis[i][i];
  }
  q.snf = smith_form(hnf_basis);
  for (const Int& d0 : q.snf.divisors)
    if (d0 > 1) q.divisors.push_back(d0);
  // Enumerate the box.
  IVec cur(dim, 0);
  while (true) {
    q.index_of.emplace(cur, q.transversal.size());
    q.transversal.push_back(cur);
    size_t i = dim;
    while (i > 0) {
      --i;
      if (cur[i] + 1 < hnf_basis[i][i]) {
        ++cur[i];
        for (size_t j = i + 1; j < dim; ++j) cur[j] = 0;
        break;
      }
      if (i == 0) return q;
    }
    if (dim == 0) return q;
  }
}

/// Twisted Weyl action on the ambient lattice: w[y] = w(y - rho) + rho.
inline IVec twisted_act(const WeylGroup& w_grp, size_t w, const IVec& y) {
  const QVec& rho = w_grp.datum().rho_coroot;
  QVec shifted(y.size());
  for (size_t i = 0; i < y.size(); ++i) shifted[i] = rat(y[i]) - rho[i];
  QVec moved = w_grp.apply(w, shifted);
  IVec out(y.size());
  for (size_t i = 0; i < y.size(); ++i) {
    Rat r = moved[i] + rho[i];
    if (r.get_den() != 1)
      throw std::runtime_error("twisted action left the lattice");
    out[i] = r.get_num();
  }
  return out;
}

struct ModuliSpace {
  CoveringDatum cov;
  FiniteQuotient x;  // 𝒳 = Y / Y_{Q,n}
  // Per-generator permutation of class indices under the twisted action.
  std::vector<std::vector<size_t>> gen_perm;

  size_t num_classes() const { return x.transversal.size(); }

  /// Twisted action on class indices through a Weyl-group element.
  size_t act(const WeylGroup& w_grp, size_t w, size_t cls) const {
    return x.class_index(twisted_act(w_grp, w, x.transversal[cls]));
  }

  /// Whether w[y] = y holds modulo Y_{Q,n}^{sc} (the finer quotient).
  bool fixes_mod_sc(const WeylGroup& w_grp, size_t w, const IVec& y) const {
    IVec diff = vec_sub(twisted_act(w_grp, w, y), y);
    return lattice_contains(cov.y_qn_sc, diff);
  }
};

inline ModuliSpace build_moduli(const CoveringDatum& cov,
                                const WeylGroup& w_grp) {
  ModuliSpace m;
  m.cov = cov;
  m.x = build_quotient(cov.y_qn);
  m.gen_perm.resize(cov.datum.rank);
  for (size_t s = 0; s < cov.datum.rank; ++s) {
    m.gen_perm[s].resize(m.x.transversal.size());
    for (size_t c = 0; c < m.x.transversal.size(); ++c)
      m.gen_perm[s][c] = m.x.class_index(
          twisted_act(w_grp, w_grp.generator(s), m.x.transversal[c]));
  }
  return m;
}

// ---------------------------------------------------------------------------
// Orbits, saturation, persistence
// ---------------------------------------------------------------------------

struct Orbit {
  size_t rep_class = 0;          // least class index in the orbit
  IVec rep;                      // its transversal vector
  std::vector<size_t> classes;   // sorted class indices
  std::vector<size_t> stabilizer;  // elements of the acting group fixing rep
  bool free_flag = false;        // stabilizer trivial
  bool singleton_flag = false;   // one class
  bool persistent_flag = false;  // stabilizers agree at both lattice levels
};

struct OrbitDecomposition {
  std::vector<Orbit> orbits;
  std::vector<size_t> orbit_of;   // class index -> orbit index
  std::vector<size_t> acting;     // element list of the acting subgroup
};

/// Orbits of W(S) on 𝒳 under the twisted action (S = all simple indices for
/// the full group), with stabilizers and the free/singleton/persistent flags.
inline OrbitDecomposition decompose_orbits(const ModuliSpace& m,
                                           const WeylGroup& w_grp,
                                           const std::vector<size_t>& s_gens) {
  OrbitDecomposition dec;
  auto par = w_grp.parabolic_subgroup(s_gens);
  dec.acting = par.elements;
  size_t nc = m.num_classes();
  dec.orbit_of.assign(nc, nc);
  for (size_t c0 = 0; c0 < nc; ++c0) {
    if (dec.orbit_of[c0] != nc) continue;
    size_t oid = dec.orbits.size();
    Orbit orb;
    std::deque<size_t> queue{c0};
    dec.orbit_of[c0] = oid;
    std::vector<size_t> members{c0};
    while (!queue.empty()) {
      size_t c = queue.front();
      queue.pop_front();
      for (size_t s : s_gens) {
        size_t c2 = m.gen_perm[s][c];
        if (dec.orbit_of[c2] == nc) {
          dec.orbit_of[c2] = oid;
          members.push_back(c2);
          queue.push_back(c2);
        }
      }
    }
    std::sort(members.begin(), members.end());
    orb.classes = members;
    orb.rep_class = members.front();
    orb.rep = m.x.transversal[orb.rep_class];
    for (size_t w : dec.acting)
      if (m.act(w_grp, w, orb.rep_class) == orb.rep_class)
        orb.stabilizer.push_back(w);
    orb.free_flag = orb.stabilizer.size() == 1;
    orb.singleton_flag = orb.classes.size() == 1;
    // Persistent: every stabilizing element already fixes the representative
    // modulo the finer lattice Y_{Q,n}^{sc}.
    orb.persistent_flag = true;
    for (size_t w : orb.stabilizer)
      if (!m.fixes_mod_sc(w_grp, w, orb.rep)) orb.persistent_flag = false;
    dec.orbits.push_back(std::move(orb));
  }
  return dec;
}

inline OrbitDecomposition decompose_orbits(const ModuliSpace& m,
                                           const WeylGroup& w_grp) {
  std::vector<size_t> all;
  for (size_t s = 0; s < w_grp.rank(); ++s) all.push_back(s);
  return decompose_orbits(m, w_grp, all);
}

/// Saturated: Y_{Q,n} ∩ Y^{sc} = Y_{Q,n}^{sc}.
inline bool is_saturated(const CoveringDatum& cov) {
  IMat y_sc = lattice_basis(cov.datum.simple_coroots);
  IMat meet = lattice_intersection(cov.y_qn, y_sc);
  return lattice_equal(meet, cov.y_qn_sc);
}

/// Per-orbit persistence flag.
inline bool is_persistent(const ModuliSpace& m, const WeylGroup& w_grp,
                          const Orbit& orbit) {
  for (size_t w : orbit.stabilizer)
    if (!m.fixes_mod_sc(w_grp, w, orbit.rep)) return false;
  return true;
}

/// Whole-group persistence: every W-orbit is persistent. A saturated
/// covering must come out persistent; that implication is asserted here.
inline bool is_persistent(const ModuliSpace& m, const WeylGroup& w_grp) {
  auto dec = decompose_orbits(m, w_grp);
  bool all = true;
  for (const Orbit& orb : dec.orbits)
    if (!orb.persistent_flag) all = false;
  if (is_saturated(m.cov) && !all)
    throw std::runtime_error("internal: saturated covering must be persistent");
  return all;
}

// ---------------------------------------------------------------------------
// Dual root datum
// ---------------------------------------------------------------------------

struct DualRootDatum {
  RootDatum datum;    // lattice Y_new = dual of Y_{Q,n}; roots = {n_α α^∨}
  bool adjoint_type;  // root lattice of the dual equals Y_{Q,n} (trivial center)
};

/// The root datum on Y_{Q,n} with simple roots {n_{α_i} α_i^∨} and simple
/// coroots {α_i / n_{α_i}}. X-coordinates are taken over the HNF basis of
/// Y_{Q,n}; Y-coordinates over its dual basis.
inline DualRootDatum dual_root_datum(const CoveringDatum& cov) {
  const RootDatum& rd = cov.datum;
  DualRootDatum dual;
  RootDatum& d = dual.datum;
  d.type_label = rd.type_label + "-dual";
  d.family = rd.family;
  d.rank = rd.rank;
  d.dim = rd.dim;
  d.lattice = "dual";
  d.simple_roots = imat_zero(d.rank, d.dim);
  d.simple_coroots = imat_zero(d.rank, d.dim);
  for (size_t i = 0; i < d.rank; ++i) {
    // n_i alpha_i^vee in coordinates over the rows of y_qn.
    IVec target = vec_scale(cov.n_alpha[i], rd.coroots[i]);
    QVec sol = solve_row_system(qmat_from(cov.y_qn), qvec_from(target));
    for (size_t j = 0; j < d.dim; ++j) {
      if (sol[j].get_den() != 1)
        throw std::runtime_error("internal: modified coroot not in Y_{Q,n}");
      d.simple_roots[i][j] = sol[j].get_num();
    }
    // alpha_i / n_i as a functional on Y_{Q,n}: j-th coordinate is
    // <basis row j, alpha_i> / n_i, integral by the defining congruence.
    for (size_t j = 0; j < d.dim; ++j) {
      Int p = vec_dot(cov.y_qn[j], rd.roots[i]);
      if (p % cov.n_alpha[i] != 0)
        throw std::runtime_error("internal: dual coroot not integral");
      d.simple_coroots[i][j] = p / cov.n_alpha[i];
    }
  }
  d.cartan = imat_zero(d.rank, d.rank);
  for (size_t i = 0; i < d.rank; ++i)
    for (size_t j = 0; j < d.rank; ++j)
      d.cartan[i][j] = vec_dot(d.simple_coroots[i], d.simple_roots[j]);
  for (size_t i = 0; i < d.rank; ++i)
    if (d.cartan[i][i] != 2)
      throw std::runtime_error("internal: dual Cartan matrix is malformed");
  complete_root_system(d);
  dual.adjoint_type = lattice_equal(cov.y_qn, cov.y_qn_sc);
  return dual;
}

}  // namespace wkl
