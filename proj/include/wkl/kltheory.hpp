#pragma once

/// Kazhdan–Lusztig polynomials, right cells, and cell representations.
///
/// P_{x,w} is computed by the classical one-step recursion: for a left
/// descent s of w and v = s∘w,
///   P_{x,w} = q^{1-c} P_{sx,v} + q^c P_{x,v}
///             − Σ_{x ≤ z ≺ v, sz < z} μ(z,v) q^{(ℓ(w)−ℓ(z))/2} P_{x,z},
/// with c = 1 when sx < x and c = 0 otherwise. μ(x,w) is the coefficient of
/// q^{(ℓ(w)−ℓ(x)−1)/2} in P_{x,w}.
///
/// Right cells are the strongly connected components of the graph with an
/// edge u → v whenever u, v are μ-linked (in either order) and the right
/// descent set of u is not contained in that of v. The cell representation
/// is the q = 1 specialization of the cell quotient of the canonical-basis
/// right module: a generator s acts on the basis vector of w by −e_w when
/// ws < w, and by e_w + e_{ws}·[ws ∈ 𝔠] + Σ_{z ∈ 𝔠, z ≺ w, zs < z} μ(z,w) e_z
/// when ws > w.

#include "wkl/rootdata.hpp"

#include <functional>

namespace wkl {

// ---------------------------------------------------------------------------
// Dense integer polynomials in q
// ---------------------------------------------------------------------------

using Poly = std::vector<Int>;  // coefficient of q^k at index k; trimmed

inline Poly poly_trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

inline Int poly_coeff(const Poly& a, size_t k) {
  return k < a.size() ? a[k] : Int(0);
}

inline long poly_degree(const Poly& a) { return (long)a.size() - 1; }

inline Poly poly_add(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), Int(0));
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return poly_trim(out);
}

inline Poly poly_sub(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), Int(0));
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return poly_trim(out);
}

inline Poly poly_shift(const Poly& a, size_t k) {
  if (a.empty()) return a;
  Poly out(a.size() + k, Int(0));
  for (size_t i = 0; i < a.size(); ++i) out[i + k] = a[i];
  return out;
}

inline Poly poly_scale(const Int& c, const Poly& a) {
  if (c == 0) return {};
  Poly out = a;
  for (Int& x : out) x *= c;
  return out;
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return poly_trim(out);
}

inline Int poly_eval_one(const Poly& a) {
  Int s = 0;
  for (const Int& x : a) s += x;
  return s;
}

inline std::string poly_str(const Poly& a) {
  if (a.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    if (!s.empty()) s += a[i] > 0 ? "+" : "";
    if (i == 0)
      s += a[i].get_str();
    else {
      if (a[i] == -1)
        s += "-";
      else if (a[i] != 1)
        s += a[i].get_str() + "*";
      s += i == 1 ? "q" : "q^" + std::to_string(i);
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// KL table
// ---------------------------------------------------------------------------

class KLTable {
 public:
  explicit KLTable(const WeylGroup& w) : grp_(&w) {
    size_t n = w.size();
    p_.assign(n, std::vector<Poly>(n));
    p_[0][0] = {Int(1)};
    for (size_t wi = 1; wi < n; ++wi) {
      size_t s = w.left_descents(wi).front();
      size_t v = w.product(w.generator(s), wi);
      for (size_t x = 0; x < n; ++x) {
        if (!w.bruhat_leq(x, wi)) continue;
        size_t sx = w.product(w.generator(s), x);
        size_t c = w.length(sx) < w.length(x) ? 1 : 0;
        Poly acc = poly_shift(p_value(sx, v), 1 - c);
        acc = poly_add(acc, poly_shift(p_value(x, v), c));
        for (size_t z = 0; z < n; ++z) {
          if (w.length(z) >= w.length(v)) continue;
          if (!w.bruhat_leq(x, z) || !w.bruhat_leq(z, v)) continue;
          size_t sz = w.product(w.generator(s), z);
          if (w.length(sz) >= w.length(z)) continue;
          Int m = mu_internal(z, v);
          if (m == 0) continue;
          size_t shift = (w.length(wi) - w.length(z)) / 2;
          acc = poly_sub(acc, poly_scale(m, poly_shift(p_[z][x], shift)));
        }
        // Degree bound: deg P_{x,w} <= (l(w) - l(x) - 1)/2 for x < w.
        if (x != wi) {
          long bound = ((long)w.length(wi) - (long)w.length(x) - 1) / 2;
          if (poly_degree(acc) > bound)
            throw std::logic_error("KL degree bound violated");
        }
        p_[wi][x] = std::move(acc);
      }
    }
  }

  const WeylGroup& group() const { return *grp_; }

  /// P_{x,w}; the zero polynomial unless x <= w.
  const Poly& kl_polynomial(size_t x, size_t w) const { return p_[w][x]; }

  /// mu(x,w): coefficient of the top allowed degree of P_{x,w} (x < w).
  Int mu(size_t x, size_t w) const {
    if (x == w || !grp_->bruhat_leq(x, w)) return 0;
    return mu_internal(x, w);
  }

  /// mu-link in either length order.
  Int mu_link(size_t u, size_t v) const {
    if (grp_->length(u) < grp_->length(v)) return mu(u, v);
    if (grp_->length(v) < grp_->length(u)) return mu(v, u);
    return 0;
  }

 private:
  Int mu_internal(size_t x, size_t w) const {
    long d = (long)grp_->length(w) - (long)grp_->length(x);
    if (d <= 0 || d % 2 == 0) return 0;
    return poly_coeff(p_[w][x], size_t((d - 1) / 2));
  }

  const Poly& p_value(size_t x, size_t w) const { return p_[w][x]; }

  const WeylGroup* grp_;
  std::vector<std::vector<Poly>> p_;  // p_[w][x] = P_{x,w}
};

// ---------------------------------------------------------------------------
// Right cells
// ---------------------------------------------------------------------------

struct CellDecomposition {
  std::vector<std::vector<size_t>> cells;  // sorted; ordered by least element
  std::vector<size_t> cell_of;             // element -> cell index
  std::vector<std::vector<bool>> preorder;  // reachability closure u ->* v
};

inline CellDecomposition right_cells(const WeylGroup& w, const KLTable& kl) {
  size_t n = w.size();
  std::vector<std::vector<size_t>> adj(n), radj(n);
  for (size_t u = 0; u < n; ++u)
    for (size_t v = 0; v < n; ++v) {
      if (u == v) continue;
      if (kl.mu_link(u, v) == 0) continue;
      // Edge u -> v when the right descent set of u is not inside that of v.
      if ((w.right_descent_mask(u) & ~w.right_descent_mask(v)) != 0) {
        adj[u].push_back(v);
        radj[v].push_back(u);
      }
    }
  // Kosaraju: order by finish time, then collect components on the reverse
  // graph in reverse finish order.
  std::vector<size_t> order;
  std::vector<bool> seen(n, false);
  for (size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<std::pair<size_t, size_t>> stack{{start, 0}};
    seen[start] = true;
    while (!stack.empty()) {
      auto& [u, i] = stack.back();
      if (i < adj[u].size()) {
        size_t v = adj[u][i++];
        if (!seen[v]) {
          seen[v] = true;
          stack.push_back({v, 0});
        }
      } else {
        order.push_back(u);
        stack.pop_back();
      }
    }
  }
  CellDecomposition dec;
  dec.cell_of.assign(n, n);
  std::vector<std::vector<size_t>> comps;
  for (size_t idx = n; idx > 0; --idx) {
    size_t start = order[idx - 1];
    if (dec.cell_of[start] != n) continue;
    std::vector<size_t> comp{start};
    dec.cell_of[start] = comps.size();
    std::vector<size_t> stack{start};
    while (!stack.empty()) {
      size_t u = stack.back();
      stack.pop_back();
      for (size_t v : radj[u])
        if (dec.cell_of[v] == n) {
          dec.cell_of[v] = comps.size();
          comp.push_back(v);
          stack.push_back(v);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  // Renumber cells by least element for a stable order.
  std::vector<size_t> perm(comps.size());
  for (size_t i = 0; i < comps.size(); ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(),
            [&](size_t a, size_t b) { return comps[a][0] < comps[b][0]; });
  dec.cells.resize(comps.size());
  std::vector<size_t> newid(comps.size());
  for (size_t i = 0; i < perm.size(); ++i) {
    dec.cells[i] = comps[perm[i]];
    newid[perm[i]] = i;
  }
  for (size_t u = 0; u < n; ++u) dec.cell_of[u] = newid[dec.cell_of[u]];
  // Preorder closure (BFS reachability through the edge set).
  dec.preorder.assign(n, std::vector<bool>(n, false));
  for (size_t u = 0; u < n; ++u) {
    std::vector<size_t> stack{u};
    dec.preorder[u][u] = true;
    while (!stack.empty()) {
      size_t a = stack.back();
      stack.pop_back();
      for (size_t b : adj[a])
        if (!dec.preorder[u][b]) {
          dec.preorder[u][b] = true;
          stack.push_back(b);
        }
    }
  }
  return dec;
}

// ---------------------------------------------------------------------------
// Class functions
// ---------------------------------------------------------------------------

struct ClassFunction {
  const WeylGroup* grp = nullptr;
  std::string name;
  std::vector<Rat> by_class;  // one value per conjugacy class

  Rat at(size_t element) const { return by_class[grp->class_of(element)]; }
  Rat dim() const { return at(0); }

  bool operator==(const ClassFunction& o) const {
    return grp == o.grp && by_class == o.by_class;
  }
};

inline ClassFunction class_function_from_elements(
    const WeylGroup& w, const std::string& name,
    const std::function<Rat(size_t)>& f) {
  ClassFunction cf;
  cf.grp = &w;
  cf.name = name;
  const auto& classes = w.conjugacy_classes();
  cf.by_class.resize(classes.size());
  for (size_t c = 0; c < classes.size(); ++c) {
    cf.by_class[c] = f(classes[c][0]);
    for (size_t e : classes[c])
      if (f(e) != cf.by_class[c])
        throw std::runtime_error("values are not constant on classes: " + name);
  }
  return cf;
}

inline ClassFunction trivial_character(const WeylGroup& w) {
  return class_function_from_elements(w, "triv",
                                      [](size_t) { return Rat(1); });
}

inline ClassFunction sign_character(const WeylGroup& w) {
  return class_function_from_elements(w, "sign", [&](size_t e) {
    return w.length(e) % 2 == 0 ? Rat(1) : Rat(-1);
  });
}

inline ClassFunction cf_add(const ClassFunction& a, const ClassFunction& b,
                            const std::string& name = "") {
  if (a.grp != b.grp) throw std::runtime_error("class functions on different groups");
  ClassFunction out = a;
  out.name = name.empty() ? a.name + "+" + b.name : name;
  for (size_t i = 0; i < out.by_class.size(); ++i) out.by_class[i] += b.by_class[i];
  return out;
}

inline Rat inner_product(const ClassFunction& a, const ClassFunction& b) {
  if (a.grp != b.grp)
    throw std::runtime_error("inner product needs a common group");
  const auto& classes = a.grp->conjugacy_classes();
  Rat s(0);
  for (size_t c = 0; c < classes.size(); ++c)
    s += rat(Int(classes[c].size())) * a.by_class[c] * b.by_class[c];
  return s / rat(Int(a.grp->size()));
}

/// Induction from the standard parabolic W(S): f is evaluated at ambient
/// element indices lying inside W(S).
inline ClassFunction induce(const WeylGroup& w, const std::vector<size_t>& S,
                            const std::function<Rat(size_t)>& f,
                            const std::string& name) {
  auto par = w.parabolic_subgroup(S);
  std::set<size_t> in_h(par.elements.begin(), par.elements.end());
  size_t h_order = par.elements.size();
  // Explicit return type: gmp expression templates must not outlive `s`.
  auto value = [&](size_t g) -> Rat {
    Rat s(0);
    for (size_t x = 0; x < w.size(); ++x) {
      size_t cg = w.product(w.product(x, g), w.inverse(x));
      if (in_h.count(cg)) s += f(cg);
    }
    return s / rat(Int(h_order));
  };
  return class_function_from_elements(w, name, value);
}

// ---------------------------------------------------------------------------
// Cell representations at q = 1
// ---------------------------------------------------------------------------

/// Character of the cell representation (q = 1 right module on the
/// canonical-basis images indexed by the cell).
inline ClassFunction cell_representation(const WeylGroup& w, const KLTable& kl,
                                         const std::vector<size_t>& cell,
                                         const std::string& name = "") {
  size_t k = cell.size();
  std::map<size_t, size_t> pos;
  for (size_t i = 0; i < k; ++i) pos.emplace(cell[i], i);
  // Row-convention action matrices per generator: x' = x * M_s.
  std::vector<IMat> gmat(w.rank());
  for (size_t s = 0; s < w.rank(); ++s) {
    IMat m = imat_zero(k, k);
    for (size_t i = 0; i < k; ++i) {
      size_t u = cell[i];
      size_t us = w.product(u, w.generator(s));
      if (w.length(us) < w.length(u)) {
        m[i][i] = -1;
      } else {
        m[i][i] = 1;
        auto it = pos.find(us);
        if (it != pos.end()) m[i][it->second] += 1;
        for (size_t j = 0; j < k; ++j) {
          size_t z = cell[j];
          size_t zs = w.product(z, w.generator(s));
          if (w.length(zs) >= w.length(z)) continue;
          Int m_zu = kl.mu(z, u);
          if (m_zu != 0) m[i][j] += m_zu;
        }
      }
    }
    gmat[s] = std::move(m);
  }
  auto trace_of = [&](size_t e) {
    IMat m = imat_identity(k);
    for (size_t s : w.word(e)) m = imat_mul(m, gmat[s]);
    Int t = 0;
    for (size_t i = 0; i < k; ++i) t += m[i][i];
    return rat(t);
  };
  std::string nm = name.empty() ? "cell" : name;
  return class_function_from_elements(w, nm, trace_of);
}

}  // namespace wkl
