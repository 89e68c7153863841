#pragma once

/// Root data and Weyl groups.
///
/// A root datum here is the data (Y, {alpha_i^vee}, X, {alpha_i}) of a
/// semisimple root system together with a choice of cocharacter lattice Y:
/// "sc" (Y = the coroot lattice, basis = simple coroots), "adjoint" (Y = the
/// coweight lattice), or "GL" (type A only: Y = Z^{r+1} with the usual
/// coordinate action).
///
/// Conventions (fixed once, used everywhere):
///   * cartan[i][j] = <alpha_i^vee, alpha_j>;
///   * Y-vectors are rows over the chosen basis of Y; X-vectors are rows over
///     the dual basis; the pairing <y, x> is the dot product;
///   * reflections act by  s_i(y) = y - <y, alpha_i> alpha_i^vee  on Y and
///     s_i(x) = x - <alpha_i^vee, x> alpha_i  on X;
///   * group elements compose as functions: product(u, v) applies v first.

#include "wkl/common.hpp"

#include <bitset>
#include <deque>
#include <functional>
#include <unordered_map>

namespace wkl {

constexpr size_t kMaxSimpleRank = 16;  // bitsets of simple-root subsets

// ---------------------------------------------------------------------------
// RootDatum
// ---------------------------------------------------------------------------

struct RootDatum {
  std::string type_label;  // e.g. "A2", "C2", "G2"
  char family = 'A';
  size_t rank = 0;  // number of simple roots
  size_t dim = 0;   // ambient dimension of Y
  std::string lattice;  // "sc", "adjoint" or "GL"

  IMat cartan;          // rank x rank, cartan[i][j] = <alpha_i^vee, alpha_j>
  IMat simple_coroots;  // rank x dim (rows = Y-coordinates)
  IMat simple_roots;    // rank x dim (rows = X-coordinates)

  // The full root system. Index k < num_positive: positive; the negative of
  // roots[k] sits at index k + num_positive.
  std::vector<IVec> roots;         // X-coordinates
  std::vector<IVec> coroots;       // Y-coordinates
  std::vector<IVec> root_coeffs;   // coefficients over the simple roots
  size_t num_positive = 0;

  QVec rho_coroot;  // half sum of positive coroots, Y-coordinates

  Int pair(const IVec& y, const IVec& x) const { return vec_dot(y, x); }

  size_t num_roots() const { return roots.size(); }

  size_t negate_root(size_t k) const {
    return k < num_positive ? k + num_positive : k - num_positive;
  }

  bool root_is_positive(size_t k) const { return k < num_positive; }

  /// Index of a root given by X-coordinates, or num_roots() if absent.
  size_t root_index(const IVec& x) const {
    for (size_t k = 0; k < roots.size(); ++k)
      if (roots[k] == x) return k;
    return roots.size();
  }

  /// Index of a root given its coroot's Y-coordinates.
  size_t root_index_by_coroot(const IVec& y) const {
    for (size_t k = 0; k < coroots.size(); ++k)
      if (coroots[k] == y) return k;
    return coroots.size();
  }
};

namespace detail {

/// cartan[i][j] = <alpha_i^vee, alpha_j> for the standard families.
inline IMat standard_cartan(char family, size_t r) {
  auto chain = [&](IMat& c) {
    for (size_t i = 0; i + 1 < r; ++i) {
      c[i][i + 1] = -1;
      c[i + 1][i] = -1;
    }
  };
  IMat c = imat_zero(r, r);
  for (size_t i = 0; i < r; ++i) c[i][i] = 2;
  switch (family) {
    case 'A':
      chain(c);
      break;
    case 'B':  // last simple root short
      if (r < 2) throw std::runtime_error("rank too small for B");
      chain(c);
      c[r - 2][r - 1] = -1;
      c[r - 1][r - 2] = -2;
      break;
    case 'C':  // last simple root long
      if (r < 2) throw std::runtime_error("rank too small for C");
      chain(c);
      c[r - 2][r - 1] = -2;
      c[r - 1][r - 2] = -1;
      break;
    case 'D': {
      // D2 is the degenerate orthogonal case: two disconnected A1 nodes.
      if (r < 2) throw std::runtime_error("rank too small for D");
      if (r == 2) break;
      for (size_t i = 0; i + 2 < r; ++i) {
        c[i][i + 1] = -1;
        c[i + 1][i] = -1;
      }
      c[r - 3][r - 1] = -1;
      c[r - 1][r - 3] = -1;
      break;
    }
    case 'E': {
      if (r < 6 || r > 8) throw std::runtime_error("E rank must be 6..8");
      // Nodes 2..r-1 form a chain; node 0 hangs off node 3.
      for (size_t i = 1; i + 1 < r; ++i) {
        c[i][i + 1] = -1;
        c[i + 1][i] = -1;
      }
      c[0][3] = -1;
      c[3][0] = -1;
      break;
    }
    case 'F': {
      if (r != 4) throw std::runtime_error("F rank must be 4");
      chain(c);
      c[1][2] = -1;
      c[2][1] = -2;
      break;
    }
    case 'G': {
      if (r != 2) throw std::runtime_error("G rank must be 2");
      c[0][1] = -1;
      c[1][0] = -3;
      break;
    }
    default:
      throw std::runtime_error(std::string("unknown family ") + family);
  }
  return c;
}

}  // namespace detail

/// Given cartan / simple_coroots / simple_roots / dim already set, generate
/// the full root system (closure under simple reflections), order it
/// (positives by ascending height, simple block first), and fill rho.
inline void complete_root_system(RootDatum& d) {
  // Close the simple (coefficients, coroot) pairs under the simple
  // reflections. Coefficients are over the simple roots, so the reflection
  // action is  c -> c - (sum_j c_j cartan[i][j]) e_i.
  std::map<IVec, size_t> seen;
  std::vector<IVec> coeffs, crts;
  std::deque<size_t> queue;
  for (size_t i = 0; i < d.rank; ++i) {
    IVec c(d.rank, 0);
    c[i] = 1;
    seen.emplace(c, coeffs.size());
    coeffs.push_back(c);
    crts.push_back(d.simple_coroots[i]);
    queue.push_back(coeffs.size() - 1);
  }
  while (!queue.empty()) {
    size_t k = queue.front();
    queue.pop_front();
    for (size_t i = 0; i < d.rank; ++i) {
      Int p = 0;  // <alpha_i^vee, root_k>
      for (size_t j = 0; j < d.rank; ++j) p += coeffs[k][j] * d.cartan[i][j];
      IVec c = coeffs[k];
      c[i] -= p;
      if (seen.count(c)) continue;
      // Reflect the coroot: s_i(b^vee) = b^vee - <b^vee, alpha_i> alpha_i^vee.
      IVec cr = crts[k];
      Int pv = vec_dot(cr, d.simple_roots[i]);
      for (size_t j = 0; j < d.dim; ++j)
        cr[j] -= pv * d.simple_coroots[i][j];
      seen.emplace(c, coeffs.size());
      coeffs.push_back(c);
      crts.push_back(cr);
      queue.push_back(coeffs.size() - 1);
    }
  }

  std::vector<size_t> pos;
  for (size_t k = 0; k < coeffs.size(); ++k) {
    bool is_pos = true;
    for (const Int& x : coeffs[k])
      if (x < 0) is_pos = false;
    if (is_pos) pos.push_back(k);
  }
  // Height-ascending; at equal height, descending lex so that the height-1
  // block lists the simple roots in their natural order e_0, e_1, ...
  std::sort(pos.begin(), pos.end(), [&](size_t a, size_t b) {
    Int ha = 0, hb = 0;
    for (const Int& x : coeffs[a]) ha += x;
    for (const Int& x : coeffs[b]) hb += x;
    if (ha != hb) return ha < hb;
    return coeffs[a] > coeffs[b];
  });
  d.num_positive = pos.size();
  auto x_coords = [&](const IVec& c) {
    IVec x(d.dim, 0);
    for (size_t j = 0; j < d.rank; ++j)
      for (size_t l = 0; l < d.dim; ++l) x[l] += c[j] * d.simple_roots[j][l];
    return x;
  };
  d.root_coeffs.clear();
  d.roots.clear();
  d.coroots.clear();
  for (size_t k : pos) {
    d.root_coeffs.push_back(coeffs[k]);
    d.roots.push_back(x_coords(coeffs[k]));
    d.coroots.push_back(crts[k]);
  }
  for (size_t k : pos) {
    IVec nc = vec_scale(-1, coeffs[k]);
    d.root_coeffs.push_back(nc);
    d.roots.push_back(vec_scale(-1, x_coords(coeffs[k])));
    d.coroots.push_back(vec_scale(-1, crts[k]));
  }

  d.rho_coroot.assign(d.dim, Rat(0));
  for (size_t k = 0; k < d.num_positive; ++k)
    for (size_t j = 0; j < d.dim; ++j)
      d.rho_coroot[j] += rat(d.coroots[k][j], 2);
}

/// Build a root datum from a type label ("A2", "C2", "G2", ...) and the
/// lattice choice ("sc", "adjoint", "GL").
inline RootDatum build_root_datum(const std::string& type_label,
                                  const std::string& lattice) {
  if (type_label.size() < 2) throw std::runtime_error("bad type label");
  RootDatum d;
  d.type_label = type_label;
  d.family = type_label[0];
  d.rank = std::stoul(type_label.substr(1));
  if (d.rank == 0 || d.rank > kMaxSimpleRank)
    throw std::runtime_error("unsupported rank");
  d.lattice = lattice;
  d.cartan = detail::standard_cartan(d.family, d.rank);

  if (lattice == "sc") {
    d.dim = d.rank;
    d.simple_coroots = imat_identity(d.rank);
    // <e_i, alpha_j> = cartan[i][j], so alpha_j has X-coordinates
    // (cartan[0][j], ..., cartan[r-1][j]).
    d.simple_roots = imat_zero(d.rank, d.rank);
    for (size_t j = 0; j < d.rank; ++j)
      for (size_t i = 0; i < d.rank; ++i) d.simple_roots[j][i] = d.cartan[i][j];
  } else if (lattice == "adjoint") {
    d.dim = d.rank;
    // Y = coweight lattice with basis the fundamental coweights;
    // alpha_i^vee = sum_j cartan[i][j] * pi_j^vee, alpha_j = e_j^*.
    d.simple_coroots = d.cartan;
    d.simple_roots = imat_identity(d.rank);
  } else if (lattice == "GL") {
    if (d.family != 'A') throw std::runtime_error("GL lattice needs type A");
    d.dim = d.rank + 1;
    d.simple_coroots = imat_zero(d.rank, d.dim);
    d.simple_roots = imat_zero(d.rank, d.dim);
    for (size_t i = 0; i < d.rank; ++i) {
      d.simple_coroots[i][i] = 1;
      d.simple_coroots[i][i + 1] = -1;
      d.simple_roots[i][i] = 1;
      d.simple_roots[i][i + 1] = -1;
    }
  } else {
    throw std::runtime_error("unknown lattice choice: " + lattice);
  }

  complete_root_system(d);
  return d;
}

// ---------------------------------------------------------------------------
// WeylGroup
// ---------------------------------------------------------------------------

/// The Weyl group, fully enumerated. Elements are identified by their index
/// in breadth-first (ShortLex) order; index 0 is the identity. Each element
/// stores its action on Y as a matrix used in row convention:
/// apply(w, y) = y * mat(w).
class WeylGroup {
 public:
  explicit WeylGroup(const RootDatum& datum, size_t max_order = 100000)
      : datum_(datum) {
    const size_t r = datum.rank;
    gens_.resize(r);
    for (size_t i = 0; i < r; ++i) {
      gens_[i] = imat_identity(datum.dim);
      for (size_t a = 0; a < datum.dim; ++a)
        for (size_t b = 0; b < datum.dim; ++b)
          gens_[i][a][b] -= datum.simple_roots[i][a] * datum.simple_coroots[i][b];
    }
    mats_.push_back(imat_identity(datum.dim));
    words_.push_back({});
    index_.emplace(key(mats_[0]), 0);
    for (size_t head = 0; head < mats_.size(); ++head) {
      for (size_t s = 0; s < r; ++s) {
        // w' = w o s, i.e. apply s first: mat(w') = gens_[s] * mat(w).
        IMat m = imat_mul(gens_[s], mats_[head]);
        std::string k = key(m);
        if (index_.count(k)) continue;
        if (mats_.size() >= max_order)
          throw std::runtime_error("Weyl group exceeds configured bound");
        index_.emplace(k, mats_.size());
        mats_.push_back(std::move(m));
        words_.push_back(words_[head]);
        words_.back().push_back(s);
      }
    }
    build_tables();
  }

  const RootDatum& datum() const { return datum_; }
  size_t size() const { return mats_.size(); }
  size_t rank() const { return datum_.rank; }

  const std::vector<size_t>& word(size_t w) const { return words_[w]; }
  size_t length(size_t w) const { return words_[w].size(); }
  const IMat& mat(size_t w) const { return mats_[w]; }

  IVec apply(size_t w, const IVec& y) const { return vec_mat(y, mats_[w]); }

  QVec apply(size_t w, const QVec& y) const {
    QVec out(datum_.dim, Rat(0));
    for (size_t i = 0; i < datum_.dim; ++i) {
      if (y[i] == 0) continue;
      for (size_t j = 0; j < datum_.dim; ++j)
        out[j] += y[i] * rat(mats_[w][i][j]);
    }
    return out;
  }

  /// Action on X-vectors, dual to the Y-action.
  IVec apply_x(size_t w, const IVec& x) const {
    const IMat& minv = mats_[inverse_[w]];
    IVec out(datum_.dim, 0);
    for (size_t c = 0; c < datum_.dim; ++c) out[c] = vec_dot(minv[c], x);
    return out;
  }

  /// Image of root index k under w (roots are permuted up to sign).
  size_t apply_to_root(size_t w, size_t k) const {
    size_t idx = datum_.root_index(apply_x(w, datum_.roots[k]));
    assert(idx < datum_.num_roots());
    return idx;
  }

  /// Group product: (u o v)(y) = u(v(y)).
  size_t product(size_t u, size_t v) const {
    auto it = index_.find(key(imat_mul(mats_[v], mats_[u])));
    assert(it != index_.end());
    return it->second;
  }

  size_t inverse(size_t w) const { return inverse_[w]; }

  size_t generator(size_t s) const { return gen_index_[s]; }

  size_t longest_element() const { return longest_; }

  /// Left descent set {s : l(s o w) < l(w)}.
  const std::vector<size_t>& left_descents(size_t w) const {
    return left_desc_[w];
  }
  /// Right descent set {s : l(w o s) < l(w)}.
  const std::vector<size_t>& right_descents(size_t w) const {
    return right_desc_[w];
  }

  bool has_right_descent(size_t w, size_t s) const {
    return right_desc_mask_[w] >> s & 1;
  }
  bool has_left_descent(size_t w, size_t s) const {
    return left_desc_mask_[w] >> s & 1;
  }
  uint32_t right_descent_mask(size_t w) const { return right_desc_mask_[w]; }

  /// Conjugacy classes; each class is a sorted list of element indices, and
  /// classes are sorted by their least element.
  const std::vector<std::vector<size_t>>& conjugacy_classes() const {
    return conj_classes_;
  }
  size_t class_of(size_t w) const { return class_of_[w]; }

  /// Bruhat order (memoized lifting recursion).
  bool bruhat_leq(size_t x, size_t w) const {
    if (x == w) return true;
    if (length(x) >= length(w)) return false;
    uint64_t k = (uint64_t)x << 32 | w;
    auto it = bruhat_memo_.find(k);
    if (it != bruhat_memo_.end()) return it->second;
    size_t s = left_desc_[w].front();
    size_t sw = product(generator(s), w);
    size_t sx = product(generator(s), x);
    bool res = length(sx) < length(x) ? bruhat_leq(sx, sw) : bruhat_leq(x, sw);
    bruhat_memo_.emplace(k, res);
    return res;
  }

  /// Minimal-length coset representatives
  /// R_S = {w : l(s o w) > l(w) for all s in S}.
  std::vector<size_t> minimal_coset_reps(const std::vector<size_t>& S) const {
    std::vector<size_t> reps;
    for (size_t w = 0; w < size(); ++w) {
      bool ok = true;
      for (size_t s : S)
        if (has_left_descent(w, s)) ok = false;
      if (ok) reps.push_back(w);
    }
    return reps;
  }

  /// The standard parabolic subgroup W(S) with its longest element.
  struct Parabolic {
    std::vector<size_t> elements;  // sorted indices
    size_t longest;
  };
  Parabolic parabolic_subgroup(const std::vector<size_t>& S) const {
    std::set<size_t> elems{0};
    std::deque<size_t> queue{0};
    while (!queue.empty()) {
      size_t w = queue.front();
      queue.pop_front();
      for (size_t s : S) {
        size_t ws = product(w, generator(s));
        if (elems.insert(ws).second) queue.push_back(ws);
      }
    }
    Parabolic p;
    p.elements.assign(elems.begin(), elems.end());
    p.longest = *std::max_element(
        p.elements.begin(), p.elements.end(),
        [&](size_t a, size_t b) { return length(a) < length(b); });
    return p;
  }

 private:
  static std::string key(const IMat& m) {
    std::string s;
    for (const auto& row : m)
      for (const auto& x : row) {
        s += x.get_str();
        s += ',';
      }
    return s;
  }

  void build_tables() {
    size_t n = size(), r = rank();
    gen_index_.resize(r);
    for (size_t s = 0; s < r; ++s)
      gen_index_[s] = index_.at(key(gens_[s]));
    inverse_.resize(n);
    for (size_t w = 0; w < n; ++w)
      inverse_[w] = index_.at(key(imat_inverse_unimodular(mats_[w])));
    left_desc_.resize(n);
    right_desc_.resize(n);
    left_desc_mask_.assign(n, 0);
    right_desc_mask_.assign(n, 0);
    for (size_t w = 0; w < n; ++w) {
      for (size_t s = 0; s < r; ++s) {
        if (length(product(generator(s), w)) < length(w)) {
          left_desc_[w].push_back(s);
          left_desc_mask_[w] |= 1u << s;
        }
        if (length(product(w, generator(s))) < length(w)) {
          right_desc_[w].push_back(s);
          right_desc_mask_[w] |= 1u << s;
        }
      }
    }
    longest_ = 0;
    for (size_t w = 0; w < n; ++w)
      if (length(w) > length(longest_)) longest_ = w;
    // Conjugacy classes by closure under generator conjugation.
    class_of_.assign(n, n);
    for (size_t w = 0; w < n; ++w) {
      if (class_of_[w] != n) continue;
      size_t id = conj_classes_.size();
      std::vector<size_t> cls;
      std::deque<size_t> queue{w};
      class_of_[w] = id;
      while (!queue.empty()) {
        size_t x = queue.front();
        queue.pop_front();
        cls.push_back(x);
        for (size_t s = 0; s < r; ++s) {
          size_t g = generator(s);
          size_t y = product(product(g, x), g);  // g o x o g (g self-inverse)
          if (class_of_[y] == n) {
            class_of_[y] = id;
            queue.push_back(y);
          }
        }
      }
      std::sort(cls.begin(), cls.end());
      conj_classes_.push_back(std::move(cls));
    }
  }

  RootDatum datum_;
  std::vector<IMat> gens_;
  std::vector<IMat> mats_;
  std::vector<std::vector<size_t>> words_;
  std::unordered_map<std::string, size_t> index_;
  std::vector<size_t> gen_index_;
  std::vector<size_t> inverse_;
  std::vector<std::vector<size_t>> left_desc_, right_desc_;
  std::vector<uint32_t> left_desc_mask_, right_desc_mask_;
  size_t longest_ = 0;
  std::vector<std::vector<size_t>> conj_classes_;
  std::vector<size_t> class_of_;
  mutable std::unordered_map<uint64_t, bool> bruhat_memo_;
};

}  // namespace wkl
