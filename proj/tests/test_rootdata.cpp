#include <catch2/catch_amalgamated.hpp>

#include "wkl/rootdata.hpp"

using namespace wkl;

namespace {

IVec iv(std::initializer_list<long> xs) {
  IVec v;
  for (long x : xs) v.push_back(Int(x));
  return v;
}

/// Independent Bruhat-order oracle: x <= w iff some subsequence of a reduced
/// word of w multiplies to x.
std::set<size_t> subword_closure(const WeylGroup& w_grp, size_t w) {
  const auto& word = w_grp.word(w);
  std::set<size_t> out;
  size_t n = word.size();
  for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
    size_t cur = 0;  // identity
    for (size_t i = 0; i < n; ++i)
      if (mask >> i & 1)
        cur = w_grp.product(cur, w_grp.generator(word[i]));
    out.insert(cur);
  }
  return out;
}

}  // namespace

TEST_CASE("Cartan tables match the fixed conventions") {
  auto a2 = build_root_datum("A2", "sc");
  CHECK(a2.cartan == IMat{iv({2, -1}), iv({-1, 2})});
  auto c2 = build_root_datum("C2", "sc");
  CHECK(c2.cartan == IMat{iv({2, -2}), iv({-1, 2})});
  auto g2 = build_root_datum("G2", "sc");
  CHECK(g2.cartan == IMat{iv({2, -1}), iv({-3, 2})});
  auto b3 = build_root_datum("B3", "sc");
  CHECK(b3.cartan[1][2] == -1);
  CHECK(b3.cartan[2][1] == -2);
  auto f4 = build_root_datum("F4", "sc");
  CHECK(f4.cartan[1][2] == -1);
  CHECK(f4.cartan[2][1] == -2);
  CHECK(f4.cartan[0][1] == -1);
  CHECK(f4.cartan[2][3] == -1);
}

TEST_CASE("root systems have the right size and positivity split") {
  struct Row {
    const char* label;
    size_t positives;
  };
  for (auto [label, positives] : {Row{"A2", 3}, Row{"C2", 4}, Row{"G2", 6},
                                  Row{"A3", 6}, Row{"B3", 9}, Row{"D4", 12}}) {
    auto d = build_root_datum(label, "sc");
    INFO(label);
    CHECK(d.num_positive == positives);
    CHECK(d.num_roots() == 2 * positives);
    for (size_t k = 0; k < d.num_positive; ++k) {
      CHECK(d.roots[k + d.num_positive] == vec_scale(-1, d.roots[k]));
      CHECK(d.coroots[k + d.num_positive] == vec_scale(-1, d.coroots[k]));
    }
    // <beta^vee, beta> = 2 for every root.
    for (size_t k = 0; k < d.num_roots(); ++k)
      CHECK(d.pair(d.coroots[k], d.roots[k]) == 2);
  }
}

TEST_CASE("simple reflections and composition order on A2") {
  auto d = build_root_datum("A2", "sc");
  WeylGroup w(d);
  REQUIRE(w.size() == 6);
  size_t s1 = w.generator(0), s2 = w.generator(1);
  CHECK(w.apply(s1, iv({1, 0})) == iv({-1, 0}));
  CHECK(w.apply(s1, iv({0, 1})) == iv({1, 1}));
  CHECK(w.apply(s2, iv({1, 0})) == iv({1, 1}));
  // product(u, v) applies v first: (s1 o s2)(a1^vee) = s1(a1^vee + a2^vee) = a2^vee.
  size_t s1s2 = w.product(s1, s2);
  CHECK(w.apply(s1s2, iv({1, 0})) == iv({0, 1}));
  CHECK(w.word(s1s2) == std::vector<size_t>{0, 1});
  // Longest element negates both simple coroots.
  size_t wg = w.longest_element();
  CHECK(w.length(wg) == 3);
  CHECK(w.apply(wg, iv({1, 0})) == iv({0, -1}));
  CHECK(w.apply(wg, iv({0, 1})) == iv({-1, 0}));
}

TEST_CASE("breadth-first element order is ShortLex") {
  auto d = build_root_datum("A2", "sc");
  WeylGroup w(d);
  std::vector<std::vector<size_t>> expect = {
      {}, {0}, {1}, {0, 1}, {1, 0}, {0, 1, 0}};
  for (size_t i = 0; i < 6; ++i) CHECK(w.word(i) == expect[i]);
}

TEST_CASE("frozen reflection images on C2 and G2") {
  auto c2 = build_root_datum("C2", "sc");
  WeylGroup wc(c2);
  REQUIRE(wc.size() == 8);
  CHECK(wc.length(wc.longest_element()) == 4);
  // w2(a1^vee) = a1^vee + 2 a2^vee, w1(a2^vee) = a1^vee + a2^vee.
  CHECK(wc.apply(wc.generator(1), iv({1, 0})) == iv({1, 2}));
  CHECK(wc.apply(wc.generator(0), iv({0, 1})) == iv({1, 1}));
  // Those images appear among the positive coroots.
  CHECK(c2.root_index_by_coroot(iv({1, 2})) < c2.num_positive);
  CHECK(c2.root_index_by_coroot(iv({1, 1})) < c2.num_positive);

  auto g2 = build_root_datum("G2", "sc");
  WeylGroup wg(g2);
  REQUIRE(wg.size() == 12);
  CHECK(wg.length(wg.longest_element()) == 6);
  CHECK(wg.apply(wg.generator(1), iv({1, 0})) == iv({1, 1}));
  CHECK(wg.apply(wg.generator(0), iv({0, 1})) == iv({3, 1}));
  // Highest coroot of G2 is 2 a1^vee + a2^vee (the long-root side), and the
  // coroot system contains 6 positives.
  CHECK(g2.root_index_by_coroot(iv({2, 1})) < g2.num_positive);
}

TEST_CASE("length equals the number of positive roots sent negative") {
  for (const char* label : {"A2", "C2", "G2", "A3"}) {
    auto d = build_root_datum(label, "sc");
    WeylGroup w(d);
    INFO(label);
    for (size_t e = 0; e < w.size(); ++e) {
      size_t inversions = 0;
      for (size_t k = 0; k < d.num_positive; ++k)
        if (!d.root_is_positive(w.apply_to_root(e, k))) ++inversions;
      CHECK(inversions == w.length(e));
    }
  }
}

TEST_CASE("X-action is dual to the Y-action") {
  auto d = build_root_datum("C2", "sc");
  WeylGroup w(d);
  std::vector<IVec> ys = {iv({1, 0}), iv({0, 1}), iv({3, -2})};
  std::vector<IVec> xs = {iv({1, 0}), iv({0, 1}), iv({-1, 4})};
  for (size_t e = 0; e < w.size(); ++e)
    for (const auto& y : ys)
      for (const auto& x : xs)
        CHECK(vec_dot(w.apply(e, y), w.apply_x(e, x)) == vec_dot(y, x));
}

TEST_CASE("descents match the root-positivity criterion") {
  auto d = build_root_datum("C2", "sc");
  WeylGroup w(d);
  for (size_t e = 0; e < w.size(); ++e) {
    size_t einv = w.inverse(e);
    for (size_t s = 0; s < d.rank; ++s) {
      // l(s o w) < l(w)  iff  w^{-1}(alpha_s) < 0.
      bool img_neg =
          !d.root_is_positive(w.apply_to_root(einv, s));
      CHECK(w.has_left_descent(e, s) == img_neg);
      // l(w o s) < l(w)  iff  w(alpha_s) < 0.
      bool img_neg_r = !d.root_is_positive(w.apply_to_root(e, s));
      CHECK(w.has_right_descent(e, s) == img_neg_r);
    }
  }
}

TEST_CASE("Bruhat order agrees with the exhaustive subword oracle on A3") {
  auto d = build_root_datum("A3", "sc");
  WeylGroup w(d);
  REQUIRE(w.size() == 24);
  for (size_t x = 0; x < w.size(); ++x) {
    auto below = subword_closure(w, x);
    for (size_t y = 0; y < w.size(); ++y) {
      INFO("x=" << x << " y=" << y);
      CHECK(w.bruhat_leq(y, x) == (below.count(y) > 0));
    }
  }
}

TEST_CASE("minimal coset representatives") {
  auto d = build_root_datum("A3", "sc");
  WeylGroup w(d);
  std::vector<size_t> S = {0, 1};
  auto reps = w.minimal_coset_reps(S);
  CHECK(reps.size() == 4);  // |W| / |W(S)| = 24 / 6
  for (size_t rep : reps) {
    size_t rinv = w.inverse(rep);
    for (size_t s : S)
      CHECK(d.root_is_positive(w.apply_to_root(rinv, s)));
  }
  // Every element factors uniquely as (element of W(S)) o rep.
  auto par = w.parabolic_subgroup(S);
  std::set<size_t> seen;
  for (size_t u : par.elements)
    for (size_t rep : reps) seen.insert(w.product(u, rep));
  CHECK(seen.size() == w.size());
}

TEST_CASE("parabolic subgroups and their longest elements") {
  auto d = build_root_datum("A3", "sc");
  WeylGroup w(d);
  auto p = w.parabolic_subgroup({0, 2});
  CHECK(p.elements.size() == 4);
  CHECK(w.length(p.longest) == 2);
  auto whole = w.parabolic_subgroup({0, 1, 2});
  CHECK(whole.elements.size() == 24);
  CHECK(whole.longest == w.longest_element());
}

TEST_CASE("conjugacy classes") {
  auto a2 = build_root_datum("A2", "sc");
  WeylGroup wa(a2);
  std::multiset<size_t> sizes_a;
  for (const auto& c : wa.conjugacy_classes()) sizes_a.insert(c.size());
  CHECK(sizes_a == std::multiset<size_t>{1, 2, 3});

  auto c2 = build_root_datum("C2", "sc");
  WeylGroup wc(c2);
  std::multiset<size_t> sizes_c;
  for (const auto& c : wc.conjugacy_classes()) sizes_c.insert(c.size());
  CHECK(sizes_c == std::multiset<size_t>{1, 1, 2, 2, 2});

  auto g2 = build_root_datum("G2", "sc");
  WeylGroup wg(g2);
  CHECK(wg.conjugacy_classes().size() == 6);
  // Class membership is conjugation-invariant.
  for (size_t x = 0; x < wc.size(); ++x)
    for (size_t g = 0; g < wc.size(); ++g) {
      size_t y = wc.product(wc.product(g, x), wc.inverse(g));
      CHECK(wc.class_of(y) == wc.class_of(x));
    }
}

TEST_CASE("adjoint and GL lattices") {
  auto pgl3 = build_root_datum("A2", "adjoint");
  CHECK(pgl3.simple_coroots == pgl3.cartan);
  CHECK(pgl3.simple_roots == imat_identity(2));
  WeylGroup w(pgl3);
  CHECK(w.size() == 6);
  // <a_i^vee, a_j> still equals the Cartan entry.
  for (size_t i = 0; i < 2; ++i)
    for (size_t j = 0; j < 2; ++j)
      CHECK(pgl3.pair(pgl3.simple_coroots[i], pgl3.simple_roots[j]) ==
            pgl3.cartan[i][j]);

  auto gl3 = build_root_datum("A2", "GL");
  CHECK(gl3.dim == 3);
  CHECK(gl3.simple_coroots[0] == iv({1, -1, 0}));
  CHECK(gl3.simple_coroots[1] == iv({0, 1, -1}));
  WeylGroup wgl(gl3);
  CHECK(wgl.size() == 6);
  // The Weyl action permutes coordinates.
  CHECK(wgl.apply(wgl.generator(0), iv({5, 7, 9})) == iv({7, 5, 9}));
  CHECK(wgl.apply(wgl.generator(1), iv({5, 7, 9})) == iv({5, 9, 7}));
}

TEST_CASE("half sum of positive coroots pairs to one with simple roots") {
  for (const char* label : {"A2", "C2", "G2", "A3", "B3"}) {
    auto d = build_root_datum(label, "sc");
    INFO(label);
    for (size_t i = 0; i < d.rank; ++i) {
      Rat p(0);
      for (size_t j = 0; j < d.dim; ++j)
        p += d.rho_coroot[j] * rat(d.simple_roots[i][j]);
      CHECK(p == 1);
    }
  }
}

TEST_CASE("rejects malformed inputs") {
  CHECK_THROWS(build_root_datum("C2", "GL"));
  CHECK_THROWS(build_root_datum("A2", "weights"));
  CHECK_THROWS(build_root_datum("Z9", "sc"));
  CHECK_THROWS(build_root_datum("F3", "sc"));
}
