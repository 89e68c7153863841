#pragma once

/// Genuine characters of the lattice Y_{Q,n}, their root sets Φ(χ), the
/// principal-series components Γ_S with their Weyl sets W_Γ and attached cell
/// characters σ_Γ, the two dimension routes (cell pairing and its
/// inclusion–exclusion refinement), Jacquet index sets, Gindikin–Karpelevich
/// coefficients, constituent predicates, and the closed-form family tables.
///
/// A character value is q^{e}·exp(2πi·p) stored as the exact pair (e, p) with
/// p taken mod 1; characters are homomorphisms Y_{Q,n} → values determined by
/// their values on the Hermite basis of Y_{Q,n}.

#include "wkl/covering.hpp"
#include "wkl/kltheory.hpp"

namespace wkl {

// ---------------------------------------------------------------------------
// Character values
// ---------------------------------------------------------------------------

inline Rat rat_mod_one(const Rat& x) {
  Int f = floor_div(x.get_num(), x.get_den());
  return x - rat(f);
}

/// One multiplicative value q^{q_exp} · exp(2πi·phase), exact.
struct CharValue {
  Rat q_exp{0};
  Rat phase{0};  // normalized to [0, 1)

  CharValue() = default;
  CharValue(Rat e, Rat p) : q_exp(std::move(e)), phase(rat_mod_one(p)) {}

  bool operator==(const CharValue& o) const {
    return q_exp == o.q_exp && phase == o.phase;
  }
  bool operator!=(const CharValue& o) const { return !(*this == o); }

  CharValue times(const CharValue& o) const {
    return CharValue(q_exp + o.q_exp, phase + o.phase);
  }
  /// The value raised to a rational power (used with integral c in practice).
  CharValue power(const Rat& c) const {
    return CharValue(q_exp * c, phase * c);
  }
  CharValue inverse() const { return power(Rat(-1)); }

  bool is_one() const { return q_exp == 0 && phase == 0; }

  std::string str() const {
    std::string s = "q^(" + rat_str(q_exp) + ")";
    if (phase != 0) s += "*e(" + rat_str(phase) + ")";
    return s;
  }
};

inline CharValue value_one() { return CharValue(); }
inline CharValue value_q() { return CharValue(Rat(1), Rat(0)); }
inline CharValue value_q_inverse() { return CharValue(Rat(-1), Rat(0)); }

// ---------------------------------------------------------------------------
// Genuine characters
// ---------------------------------------------------------------------------

/// An unramified character of Y_{Q,n}, given by one value per Hermite-basis
/// row and extended multiplicatively (additively in the exponent pair).
struct GenuineCharacter {
  IMat basis;  // rows span the domain lattice (HNF of Y_{Q,n})
  std::vector<CharValue> on_basis;

  /// Value at y; y must lie in the domain lattice.
  CharValue value(const IVec& y) const {
    QVec c = solve_row_system(qmat_from(basis), qvec_from(y));
    CharValue out;
    for (size_t i = 0; i < c.size(); ++i) {
      if (c[i].get_den() != 1)
        throw std::runtime_error("character evaluated outside its lattice");
      out = out.times(on_basis[i].power(c[i]));
    }
    return out;
  }

  bool operator==(const GenuineCharacter& o) const {
    return basis == o.basis && on_basis == o.on_basis;
  }
  bool operator!=(const GenuineCharacter& o) const { return !(*this == o); }
};

inline GenuineCharacter make_character(const CoveringDatum& cov,
                                       std::vector<CharValue> values) {
  if (values.size() != cov.y_qn.size())
    throw std::runtime_error("character needs one value per basis vector");
  GenuineCharacter chi;
  chi.basis = cov.y_qn;
  chi.on_basis = std::move(values);
  return chi;
}

/// ^wχ(y) := χ(w^{-1}(y)); the linear Weyl action preserves Y_{Q,n}.
inline GenuineCharacter twist_character(const WeylGroup& w_grp, size_t w,
                                        const GenuineCharacter& chi) {
  GenuineCharacter out;
  out.basis = chi.basis;
  size_t wi = w_grp.inverse(w);
  out.on_basis.reserve(chi.basis.size());
  for (const IVec& row : chi.basis)
    out.on_basis.push_back(chi.value(w_grp.apply(wi, row)));
  return out;
}

/// χ♭ := ^{w_G}χ.
inline GenuineCharacter flat_character(const WeylGroup& w_grp,
                                       const GenuineCharacter& chi) {
  return twist_character(w_grp, w_grp.longest_element(), chi);
}

// ---------------------------------------------------------------------------
// Φ(χ) and regularity
// ---------------------------------------------------------------------------

/// {α ∈ Φ : χ(n_α α^∨) = q^{-1} exactly}, as sorted root indices. At most one
/// of ±α can belong (the values at ±n_α α^∨ are mutually inverse).
inline std::vector<size_t> phi_chi(const CoveringDatum& cov,
                                   const GenuineCharacter& chi) {
  std::vector<size_t> out;
  for (size_t k = 0; k < cov.datum.num_roots(); ++k) {
    IVec y = vec_scale(cov.n_alpha[k], cov.datum.coroots[k]);
    if (chi.value(y) == value_q_inverse()) out.push_back(k);
  }
  return out;
}

/// ^wχ ≠ χ for every w ≠ id. When regular, the derived consequence
/// χ(n_β β^∨) ≠ 1 for every root β is asserted.
inline bool is_regular(const WeylGroup& w_grp, const CoveringDatum& cov,
                       const GenuineCharacter& chi) {
  for (size_t w = 1; w < w_grp.size(); ++w)
    if (twist_character(w_grp, w, chi) == chi) return false;
  for (size_t k = 0; k < cov.datum.num_roots(); ++k) {
    IVec y = vec_scale(cov.n_alpha[k], cov.datum.coroots[k]);
    if (chi.value(y).is_one())
      throw std::logic_error("regular character with a unit root value");
  }
  return true;
}

/// A regular character with χ(n_α α^∨) = q^{-1} exactly for the simple roots
/// indexed by `simple_roots` and generic rational exponents elsewhere, phases
/// zero. Deterministic: free directions get distinct prime exponents.
inline GenuineCharacter exceptional_character(
    const WeylGroup& w_grp, const CoveringDatum& cov,
    const std::vector<size_t>& simple_roots) {
  const size_t dim = cov.y_qn.size();
  for (size_t s : simple_roots)
    if (s >= cov.datum.rank)
      throw std::runtime_error("exceptional set must consist of simple roots");
  // Coordinates of n_α α^∨ over the Y_{Q,n} basis, one row per constraint.
  QMat rows;
  for (size_t s : simple_roots) {
    IVec y = vec_scale(cov.n_alpha[s], cov.datum.coroots[s]);
    rows.push_back(solve_row_system(qmat_from(cov.y_qn), qvec_from(y)));
  }
  if (qmat_rank(rows) != rows.size())
    throw std::logic_error("simple-root constraints must be independent");
  // Greedily extend by unit directions to a square invertible system.
  std::vector<size_t> free_dirs;
  for (size_t j = 0; j < dim && rows.size() < dim; ++j) {
    QVec e(dim, Rat(0));
    e[j] = 1;
    QMat trial = rows;
    trial.push_back(e);
    if (qmat_rank(trial) == trial.size()) {
      rows = std::move(trial);
      free_dirs.push_back(j);
    }
  }
  static const long kPrimes[] = {101, 103, 107, 109, 113, 127, 131, 137,
                                 149, 151, 157, 163, 167, 173, 179, 181,
                                 191, 193, 197, 199, 211, 223, 227, 229,
                                 233, 239, 241, 251, 257, 263, 269, 271};
  constexpr size_t kNumPrimes = sizeof(kPrimes) / sizeof(kPrimes[0]);
  for (size_t attempt = 0;; ++attempt) {
    if (free_dirs.empty() && attempt > 0)
      throw std::runtime_error("exceptional character infeasible");
    QVec rhs(dim);
    for (size_t i = 0; i < simple_roots.size(); ++i) rhs[i] = Rat(-1);
    for (size_t i = 0; i < free_dirs.size(); ++i) {
      size_t pi = attempt * free_dirs.size() + i;
      if (pi >= kNumPrimes)
        throw std::runtime_error("exceptional character search exhausted");
      rhs[simple_roots.size() + i] = Rat(kPrimes[pi]);
    }
    // Solve x · rows^T = rhs, i.e. ⟨rows_i, x⟩ = rhs_i.
    QMat rows_t(dim, QVec(dim));
    for (size_t i = 0; i < dim; ++i)
      for (size_t j = 0; j < dim; ++j) rows_t[j][i] = rows[i][j];
    QVec x = solve_row_system(rows_t, rhs);
    GenuineCharacter chi;
    chi.basis = cov.y_qn;
    for (size_t i = 0; i < dim; ++i)
      chi.on_basis.push_back(CharValue(x[i], Rat(0)));
    std::vector<size_t> expect(simple_roots.begin(), simple_roots.end());
    std::sort(expect.begin(), expect.end());
    if (phi_chi(cov, chi) == expect && is_regular(w_grp, cov, chi)) return chi;
  }
}

// ---------------------------------------------------------------------------
// Components Γ_S
// ---------------------------------------------------------------------------

struct ConstituentIndex {
  std::vector<size_t> phi;      // Φ(χ), sorted root indices
  std::vector<size_t> members;  // S ⊆ Φ(χ), sorted root indices
  size_t subset_mask = 0;       // bit i set ⇔ phi[i] ∈ S
  std::vector<size_t> w_gamma;          // {w : Φ(χ)^∨ ∩ w(Φ_-^∨) = S^∨}
  std::vector<size_t> w_gamma_op;       // the opposite component's set
  std::vector<size_t> w_gamma_natural;  // w_S · R_S (Φ(χ) ⊆ Δ only)
  bool is_plus = false;   // S = ∅
  bool is_minus = false;  // S = Φ(χ)
  bool has_sigma = false;
  ClassFunction sigma;  // sum of cell characters over the cells in W_Γ
  std::string label;
};

/// {α ∈ Φ(χ) : w^{-1}(α^∨) < 0}, as a bitmask over positions in phi.
inline size_t negativity_mask(const WeylGroup& w_grp,
                              const std::vector<size_t>& phi, size_t w) {
  size_t mask = 0, wi = w_grp.inverse(w);
  for (size_t i = 0; i < phi.size(); ++i)
    if (!w_grp.datum().root_is_positive(w_grp.apply_to_root(wi, phi[i])))
      mask |= size_t(1) << i;
  return mask;
}

/// All 2^{|Φ(χ)|} components, ordered by subset mask (Γ⁺ first, Γ⁻ last).
/// σ_Γ is attached when Φ(χ) ⊆ Δ; a component that fails to be a union of
/// right cells raises "not-cell-union".
inline std::vector<ConstituentIndex> constituents(
    const WeylGroup& w_grp, const KLTable& kl, const CellDecomposition& cells,
    const CoveringDatum& cov, const GenuineCharacter& chi) {
  std::vector<size_t> phi = phi_chi(cov, chi);
  if (phi.size() >= 8 * sizeof(size_t) - 1)
    throw std::runtime_error("Φ(χ) too large");
  const size_t k = phi.size();
  bool simple = true;
  for (size_t r : phi) simple = simple && r < w_grp.rank();

  std::vector<std::vector<size_t>> buckets(size_t(1) << k);
  for (size_t w = 0; w < w_grp.size(); ++w)
    buckets[negativity_mask(w_grp, phi, w)].push_back(w);

  std::vector<ConstituentIndex> out;
  size_t wg = w_grp.longest_element();
  for (size_t mask = 0; mask < buckets.size(); ++mask) {
    ConstituentIndex c;
    c.phi = phi;
    c.subset_mask = mask;
    for (size_t i = 0; i < k; ++i)
      if (mask & (size_t(1) << i)) c.members.push_back(phi[i]);
    c.w_gamma = buckets[mask];
    for (size_t w : c.w_gamma) c.w_gamma_op.push_back(w_grp.product(w, wg));
    std::sort(c.w_gamma_op.begin(), c.w_gamma_op.end());
    c.is_plus = mask == 0;
    c.is_minus = mask + 1 == buckets.size();
    if (c.is_plus && !c.is_minus)
      c.label = "Gamma+";
    else if (c.is_minus && !c.is_plus)
      c.label = "Gamma-";
    else if (c.is_plus && c.is_minus)
      c.label = "Gamma";
    else {
      c.label = "Gamma{";
      for (size_t i = 0; i < c.members.size(); ++i) {
        if (i) c.label += ",";
        size_t r = c.members[i];
        c.label +=
            r < w_grp.rank() ? "a" + std::to_string(r + 1) : "r" + std::to_string(r);
      }
      c.label += "}";
    }
    if (simple) {
      // W_{Γ_S^♮} = w_S · R_S.
      std::vector<size_t> s_gens(c.members.begin(), c.members.end());
      size_t ws = w_grp.parabolic_subgroup(s_gens).longest;
      for (size_t r0 : w_grp.minimal_coset_reps(s_gens))
        c.w_gamma_natural.push_back(w_grp.product(ws, r0));
      std::sort(c.w_gamma_natural.begin(), c.w_gamma_natural.end());
      // σ_Γ: W_Γ must be a union of right cells.
      std::set<size_t> in_gamma(c.w_gamma.begin(), c.w_gamma.end());
      std::set<size_t> cell_ids;
      for (size_t w : c.w_gamma) cell_ids.insert(cells.cell_of[w]);
      size_t covered = 0;
      for (size_t ci : cell_ids) covered += cells.cells[ci].size();
      if (covered != c.w_gamma.size())
        throw std::runtime_error("not-cell-union");
      ClassFunction sum;
      for (size_t ci : cell_ids) {
        ClassFunction cf = cell_representation(w_grp, kl, cells.cells[ci]);
        sum = sum.grp ? cf_add(sum, cf) : cf;
      }
      sum.name = "sigma_" + c.label;
      c.sigma = std::move(sum);
      c.has_sigma = true;
    }
    out.push_back(std::move(c));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Dimension formulas (pairing route)
// ---------------------------------------------------------------------------

/// Permutation character of the twisted W-action on the given classes.
inline ClassFunction permutation_character(const WeylGroup& w_grp,
                                           const ModuliSpace& m,
                                           const std::vector<size_t>& classes,
                                           const std::string& name) {
  return class_function_from_elements(w_grp, name, [&](size_t w) -> Rat {
    long fixed = 0;
    for (size_t c : classes)
      if (m.act(w_grp, w, c) == c) ++fixed;
    return Rat(fixed);
  });
}

/// σ_𝒳: permutation character of W on all of 𝒳_{Q,n}.
inline ClassFunction sigma_x_character(const WeylGroup& w_grp,
                                       const ModuliSpace& m) {
  std::vector<size_t> all(m.num_classes());
  for (size_t c = 0; c < all.size(); ++c) all[c] = c;
  return permutation_character(w_grp, m, all, "sigma_X");
}

/// σ_𝒳 as a per-element row in Weyl enumeration order.
inline std::vector<Int> character_row(const ClassFunction& cf) {
  std::vector<Int> out;
  for (size_t e = 0; e < cf.grp->size(); ++e) {
    Rat v = cf.at(e);
    if (v.get_den() != 1)
      throw std::logic_error("character row expects integer values");
    out.push_back(v.get_num());
  }
  return out;
}

inline unsigned long pairing_to_dim(const Rat& ip) {
  if (ip.get_den() != 1 || ip < 0)
    throw std::logic_error("pairing must be a nonnegative integer");
  return ip.get_num().get_ui();
}

struct DimResult {
  unsigned long value = 0;
  bool theorem_backed = false;
  std::string status;  // "theorem-backed" or "conjecture/verified-by-scattering"
};

/// ⟨σ_𝒳^y, σ_Γ⟩ on one orbit.
inline DimResult whittaker_dim(const WeylGroup& w_grp, const ModuliSpace& m,
                               const ConstituentIndex& gamma,
                               const Orbit& orbit) {
  if (!gamma.has_sigma)
    throw std::runtime_error("dimension needs Φ(χ) inside the simple roots");
  ClassFunction cf = permutation_character(w_grp, m, orbit.classes, "sigma_X^y");
  DimResult r;
  r.value = pairing_to_dim(inner_product(cf, gamma.sigma));
  r.theorem_backed = gamma.is_plus || gamma.is_minus ||
                     (orbit.singleton_flag && orbit.persistent_flag);
  r.status = r.theorem_backed ? "theorem-backed"
                              : "conjecture/verified-by-scattering";
  return r;
}

/// ⟨σ_𝒳, σ_Γ⟩ over the whole moduli space.
inline unsigned long whittaker_dim_total(const WeylGroup& w_grp,
                                         const ModuliSpace& m,
                                         const ConstituentIndex& gamma) {
  if (!gamma.has_sigma)
    throw std::runtime_error("dimension needs Φ(χ) inside the simple roots");
  return pairing_to_dim(
      inner_product(sigma_x_character(w_grp, m), gamma.sigma));
}

/// Independent route: Σ_{S ⊆ S' ⊆ Φ(χ)} (−1)^{|S'−S|} ⟨σ_𝒳^y, Ind_{W(S')} ε⟩.
/// Pass all classes (or one orbit's) as `classes`.
inline long coarse_dim(const WeylGroup& w_grp, const ModuliSpace& m,
                       const ConstituentIndex& gamma,
                       const std::vector<size_t>& classes) {
  for (size_t r : gamma.phi)
    if (r >= w_grp.rank())
      throw std::runtime_error("coarse route needs Φ(χ) inside the simple roots");
  ClassFunction cf = permutation_character(w_grp, m, classes, "sigma_X^y");
  const size_t k = gamma.phi.size();
  Rat total(0);
  for (size_t mask = 0; mask < (size_t(1) << k); ++mask) {
    if ((mask & gamma.subset_mask) != gamma.subset_mask) continue;
    std::vector<size_t> s_gens;
    for (size_t i = 0; i < k; ++i)
      if (mask & (size_t(1) << i)) s_gens.push_back(gamma.phi[i]);
    ClassFunction ind = induce(
        w_grp, s_gens,
        [&](size_t e) { return w_grp.length(e) % 2 ? Rat(-1) : Rat(1); },
        "ind-eps");
    Rat term = inner_product(cf, ind);
    size_t extra = __builtin_popcountll(mask) -
                   __builtin_popcountll(gamma.subset_mask);
    total += extra % 2 ? -term : term;
  }
  if (total.get_den() != 1)
    throw std::logic_error("inclusion-exclusion must produce an integer");
  return long(total.get_num().get_si());
}

// ---------------------------------------------------------------------------
// Gindikin–Karpelevich coefficients
// ---------------------------------------------------------------------------

/// c(w,χ) = ∏_{α>0, wα<0} (1 − q^{-1}x_α)/(1 − x_α) with x_α = χ(n_α α^∨).
/// Kept in factored form; zero-detection (x_α = q) is exact. A unit x_α is a
/// pole and signals a non-regular character.
struct GKCoefficient {
  std::vector<CharValue> x_values;  // one per inversion root
  bool is_zero = false;
};

inline GKCoefficient gk_coefficient(const WeylGroup& w_grp,
                                    const CoveringDatum& cov, size_t w,
                                    const GenuineCharacter& chi) {
  GKCoefficient out;
  for (size_t k = 0; k < cov.datum.num_positive; ++k) {
    if (cov.datum.root_is_positive(w_grp.apply_to_root(w, k))) continue;
    CharValue x = chi.value(vec_scale(cov.n_alpha[k], cov.datum.coroots[k]));
    if (x.is_one())
      throw std::runtime_error("Gindikin-Karpelevich pole: non-regular character");
    if (x == value_q()) out.is_zero = true;
    out.x_values.push_back(x);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Jacquet index sets
// ---------------------------------------------------------------------------

/// Kernel/image index split of the intertwining between the w₁- and
/// w₂-realizations: a wall H_α for α ∈ Φ(χ) is separating when w₁^{-1}(α^∨)
/// and w₂^{-1}(α^∨) carry opposite signs; the functional indexed by w dies
/// exactly when w^{-1}(α^∨) > 0 for some separating α.
struct JacquetSplit {
  std::vector<size_t> kernel;
  std::vector<size_t> image;
};

inline JacquetSplit jacquet_sets(const WeylGroup& w_grp,
                                 const std::vector<size_t>& phi, size_t w1,
                                 size_t w2) {
  const RootDatum& rd = w_grp.datum();
  std::vector<size_t> separating;
  for (size_t k : phi) {
    bool p1 = rd.root_is_positive(w_grp.apply_to_root(w_grp.inverse(w1), k));
    bool p2 = rd.root_is_positive(w_grp.apply_to_root(w_grp.inverse(w2), k));
    if (p1 != p2) separating.push_back(k);
  }
  JacquetSplit out;
  for (size_t w = 0; w < w_grp.size(); ++w) {
    bool dies = false;
    for (size_t k : separating)
      if (rd.root_is_positive(w_grp.apply_to_root(w_grp.inverse(w), k)))
        dies = true;
    (dies ? out.kernel : out.image).push_back(w);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Constituent predicates
// ---------------------------------------------------------------------------

struct ConstituentPredicates {
  bool square_integrable = false;
  bool tempered = false;
  bool unramified = false;
};

inline ConstituentPredicates constituent_predicates(
    const WeylGroup& w_grp, const CoveringDatum& cov,
    const ConstituentIndex& gamma, const GenuineCharacter& chi) {
  for (size_t r : gamma.phi)
    if (r >= w_grp.rank())
      throw std::runtime_error("predicates need Φ(χ) inside the simple roots");
  ConstituentPredicates p;
  p.square_integrable = gamma.is_plus && gamma.phi.size() == w_grp.rank();
  p.unramified = gamma.is_minus;
  if (gamma.is_plus) {
    // Unitary (q-exponent zero) on {y ∈ Y_{Q,n} : ⟨y, α⟩ = 0 ∀α ∈ Φ(χ)}.
    IMat pairings;
    for (const IVec& row : cov.y_qn) {
      IVec pr;
      for (size_t k : gamma.phi) pr.push_back(vec_dot(row, cov.datum.roots[k]));
      pairings.push_back(pr);
    }
    bool unitary = true;
    for (const IVec& combo : gamma.phi.empty()
                                 ? imat_identity(cov.y_qn.size())
                                 : left_kernel(pairings)) {
      IVec y(cov.y_qn[0].size(), Int(0));
      for (size_t i = 0; i < combo.size(); ++i)
        y = vec_add(y, vec_scale(combo[i], cov.y_qn[i]));
      if (chi.value(y).q_exp != 0) unitary = false;
    }
    p.tempered = unitary;
  }
  return p;
}

// ---------------------------------------------------------------------------
// Asymptotics
// ---------------------------------------------------------------------------

/// dim / ((|𝒳_{Q,n}|/|W|) · dim σ_Γ), exact.
inline Rat asymptotic_ratio(const WeylGroup& w_grp, const ModuliSpace& m,
                            const ConstituentIndex& gamma) {
  Rat dim = rat(Int(whittaker_dim_total(w_grp, m, gamma)));
  Rat expected = rat(m.x.order, Int(w_grp.size())) * gamma.sigma.dim();
  if (expected == 0) throw std::runtime_error("degenerate asymptotic scale");
  return dim / expected;
}

// ---------------------------------------------------------------------------
// Closed-form family tables
// ---------------------------------------------------------------------------

/// 𝔣(d) = 1 for odd d, 4 for even d.
inline Int f_factor(const Int& d) { return d % 2 != 0 ? Int(1) : Int(4); }

/// Expected σ_𝒳 row (per element, enumeration order) for the three standard
/// families; "SL3" needs 3∤n, "Sp4" odd n, "G2" any n.
inline std::vector<Int> sigma_x_closed_form(const std::string& family, long n) {
  Int N(n);
  if (family == "SL3") {
    if (n % 3 == 0) throw std::runtime_error("SL3 row needs 3 ∤ n");
    return {N * N, N, N, 1, 1, N};
  }
  if (family == "Sp4") {
    if (n % 2 == 0) throw std::runtime_error("Sp4 row needs odd n");
    return {N * N, N, N, 1, 1, N, N, 1};
  }
  if (family == "G2") {
    if (n % 3 != 0)
      return {N * N, N, N, 1, 1, N, N, 1, 1, N, N, f_factor(N)};
    Int m = N / 3;
    return {3 * m * m, m, 3 * m, 1, 1, 3 * m, m, 3, 3, m, 3 * m, f_factor(m)};
  }
  throw std::runtime_error("unknown family: " + family);
}

/// Expected dimension row (π over subsets of Δ in mask order: ∅ first, Δ
/// last) for the exceptional character of the family.
inline std::vector<Int> dims_closed_form(const std::string& family, long n) {
  Int N(n);
  if (family == "SL3") {
    if (n % 3 == 0) throw std::runtime_error("SL3 dims need 3 ∤ n");
    return {(N * N + 3 * N + 2) / 6, (N * N - 1) / 3, (N * N - 1) / 3,
            (N * N - 3 * N + 2) / 6};
  }
  if (family == "Sp4") {
    if (n % 2 == 0) throw std::runtime_error("Sp4 dims need odd n");
    return {(N * N + 4 * N + 3) / 8, 3 * (N * N - 1) / 8, 3 * (N * N - 1) / 8,
            (N * N - 4 * N + 3) / 8};
  }
  if (family == "G2") {
    if (n % 3 != 0) {
      Int f = f_factor(N);
      return {(N * N + 6 * N + 4 + f) / 12, (5 * N * N - 4 - f) / 12,
              (5 * N * N - 4 - f) / 12, (N * N - 6 * N + 4 + f) / 12};
    }
    Int m = N / 3, f = f_factor(m);
    return {(3 * m * m + 12 * m + 8 + f) / 12, (15 * m * m + 6 * m - 8 - f) / 12,
            (15 * m * m - 6 * m - 8 - f) / 12, (3 * m * m - 12 * m + 8 + f) / 12};
  }
  throw std::runtime_error("unknown family: " + family);
}

}  // namespace wkl
