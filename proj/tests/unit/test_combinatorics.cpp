#include <algorithm>
#include <set>

#include "ctow/combinatorics.hpp"
#include "doctest.h"

using namespace ctow;

namespace {

// Counts partitions of n by Euler's pentagonal recurrence.
long partition_count(int n) {
  std::vector<long> p(n + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    for (int k = 1;; ++k) {
      int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      long sgn = (k % 2) ? 1 : -1;
      p[m] += sgn * p[m - g1];
      if (g2 <= m) p[m] += sgn * p[m - g2];
    }
  }
  return p[n];
}

// Hook length formula.
long hook_count(const Partition& p) {
  int n = p.size();
  long num = factorial(n), den = 1;
  std::vector<int> conj(p.length() ? p[0] : 0, 0);
  for (int r = 0; r < p.length(); ++r)
    for (int c = 0; c < p[r]; ++c) conj[c]++;
  for (int r = 0; r < p.length(); ++r)
    for (int c = 0; c < p[r]; ++c) den *= (p[r] - c - 1) + (conj[c] - r - 1) + 1;
  return num / den;
}

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

}  // namespace

TEST_CASE("partitions and dominance") {
  CHECK(partitions_of(0).size() == 1);
  CHECK(partitions_of(0)[0].empty());
  auto p3 = partitions_of(3);
  REQUIRE(p3.size() == 3);
  CHECK(p3[0] == P({3}));
  CHECK(p3[1] == P({2, 1}));
  CHECK(p3[2] == P({1, 1, 1}));
  for (int n = 0; n <= 12; ++n) CHECK(static_cast<long>(partitions_of(n).size()) == partition_count(n));
  CHECK(partitions_of(8).size() == 22);

  CHECK(dominance_geq(P({2, 1}), P({1, 1, 1})));
  CHECK(dominance_geq(P({2, 1}), P({2, 1})));
  CHECK_FALSE(dominance_geq(P({3, 3}), P({4, 1, 1})));
  CHECK_FALSE(dominance_geq(P({4, 1, 1}), P({3, 3})));
  CHECK_THROWS_AS(dominance_geq(P({2}), P({1})), StructuralError);

  for (int n = 1; n <= 8; ++n) {
    auto ps = partitions_of(n);
    for (auto& a : ps)
      for (auto& b : ps) {
        if (dominance_geq(a, b) && dominance_geq(b, a)) CHECK(a == b);
        // lexicographic order refines dominance
        if (dominance_gt(a, b)) CHECK(b < a);
        for (auto& c : ps)
          if (dominance_geq(a, b) && dominance_geq(b, c)) CHECK(dominance_geq(a, c));
      }
  }
}

TEST_CASE("addable and removable nodes") {
  auto rem = removable_nodes(P({2, 1}));
  REQUIRE(rem.size() == 2);
  CHECK(rem[0] == Node{2, 1});
  CHECK(rem[1] == Node{1, 2});
  auto add0 = addable_nodes(Partition());
  REQUIRE(add0.size() == 1);
  CHECK(add0[0] == Node{1, 1});
  auto add = addable_nodes(P({2, 1}));
  REQUIRE(add.size() == 3);
  CHECK(add[0] == Node{1, 3});
  CHECK(add[1] == Node{2, 2});
  CHECK(add[2] == Node{3, 1});
  for (int n = 0; n <= 6; ++n)
    for (auto& p : partitions_of(n)) {
      for (auto& x : addable_nodes(p)) CHECK(remove_node(add_node(p, x), x) == p);
      for (auto& x : removable_nodes(p)) CHECK(add_node(remove_node(p, x), x) == p);
    }
}

TEST_CASE("tableaux and permutations") {
  Tableau s = superstandard_tableau(P({3, 2, 1}));
  CHECK(s.str() == "[1,2,3],[4,5],[6]");
  CHECK(superstandard_tableau(P({1, 1, 1})).str() == "[1],[2],[3]");
  CHECK(superstandard_tableau(P({4})).str() == "[1,2,3,4]");
  CHECK(tableau_permutation(s) == Permutation::identity(6));

  Tableau t{{{1, 4, 6}, {2, 3}, {5}}};
  CHECK(tableau_permutation(t).cycle_str() == "(2,4)(3,6,5)");

  for (int n = 1; n <= 6; ++n) {
    for (auto& lam : partitions_of(n)) {
      auto ts = standard_tableaux(lam);
      CHECK(static_cast<long>(ts.size()) == hook_count(lam));
      std::set<Tableau> uniq(ts.begin(), ts.end());
      CHECK(uniq.size() == ts.size());
      for (auto& x : ts) {
        CHECK(x.is_standard());
        CHECK(act(superstandard_tableau(lam), tableau_permutation(x)) == x);
        Permutation w = tableau_permutation(x);
        auto word = w.reduced_word();
        CHECK(static_cast<int>(word.size()) == w.length());
        CHECK(Permutation::from_word(n, word) == w);
      }
    }
  }
}

TEST_CASE("permutation products") {
  for (int n = 1; n <= 4; ++n) {
    auto all = all_permutations(n);
    CHECK(static_cast<long>(all.size()) == factorial(n));
    for (auto& u : all) {
      CHECK(u * u.inverse() == Permutation::identity(n));
      for (int i = 1; i < n; ++i) {
        CHECK(u.times_simple(i) == u * Permutation::simple(n, i));
        CHECK(u.simple_times(i) == Permutation::simple(n, i) * u);
        CHECK((u.times_simple(i).length() > u.length()) == u.right_ascent(i));
        CHECK((u.simple_times(i).length() > u.length()) == u.left_ascent(i));
      }
      for (auto& v : all)
        for (auto& w : all) CHECK((u * v) * w == u * (v * w));
    }
  }
  CHECK(young_subgroup(P({2, 2})).size() == 4);
  CHECK(young_subgroup(P({3, 1})).size() == 6);
}

TEST_CASE("Garnir tableaux") {
  CHECK(garnir_tableau(P({2, 1}), {1, 1}).str() == "[2,3],[1]");
  CHECK(garnir_tableau(P({2, 2}), {1, 1}).str() == "[2,3],[1,4]");
  CHECK_THROWS_AS(garnir_tableau(P({2, 1}), {1, 2}), std::domain_error);
  CHECK_THROWS_AS(garnir_tableau(P({2, 1}), {2, 1}), std::domain_error);
  for (int n = 2; n <= 5; ++n) {
    for (auto& lam : partitions_of(n)) {
      for (int i = 1; i < lam.length(); ++i) {
        for (int j = 1; j <= lam[i]; ++j) {
          Node x{i, j};
          Tableau g = garnir_tableau(lam, x);
          CHECK(g.is_row_standard());
          CHECK_FALSE(g.is_standard());
          for (auto& tau : standard_tableaux(lam))
            CHECK(agrees_outside_garnir_strip(tau, x) == tableau_dominance_gt(tau, g));
        }
      }
    }
  }
}

TEST_CASE("semistandard tableaux") {
  auto ss = semistandard_tableaux(P({2, 1}), P({2, 1}));
  REQUIRE(ss.size() == 1);
  CHECK(ss[0].str() == "[1,1],[2]");
  // Kostka numbers K_{lambda,mu} summed with f^lambda give dim M^mu = n!/prod mu_i!.
  for (int n = 1; n <= 5; ++n) {
    for (auto& mu : partitions_of(n)) {
      long total = 0;
      for (auto& lam : partitions_of(n)) {
        auto sst = semistandard_tableaux(lam, mu);
        for (auto& s : sst) {
          CHECK(s.is_semistandard());
          CHECK(s.type() == mu);
          CHECK(s.shape() == lam);
        }
        if (!sst.empty()) CHECK(dominance_geq(lam, mu));
        total += static_cast<long>(sst.size()) * hook_count(lam);
      }
      long expect = factorial(n);
      for (int r = 0; r < mu.length(); ++r) expect /= factorial(mu[r]);
      CHECK(total == expect);
    }
  }
  CHECK(superstandard_semistandard(P({2, 1})).str() == "[1,1],[2]");
  CHECK(type_tableau(superstandard_tableau(P({2, 1})), P({2, 1})) == superstandard_semistandard(P({2, 1})));
}

TEST_CASE("branching diagrams and reflection") {
  auto y = young_lattice(6);
  std::string why;
  CHECK(y.valid(&why));
  for (int n = 1; n <= 6; ++n)
    for (int v = 0; v < static_cast<int>(y.level(n).size()); ++v) {
      CHECK(count_paths(y, n, v) == hook_count(y.level(n)[v].lambda));
      auto ps = paths_to(y, n, v);
      CHECK(static_cast<long>(ps.size()) == count_paths(y, n, v));
      for (auto& p : ps) CHECK(tableau_to_path(y, path_to_tableau(y, p)) == p);
    }
  CHECK(count_paths(y, 3, y.index_of(3, {P({2, 1}), 0})) == 2);

  auto w = reflect_branching(young_lattice(8), 8);
  CHECK(w.valid(&why));
  std::set<Vertex> l2(w.level(2).begin(), w.level(2).end());
  CHECK(l2 == std::set<Vertex>{{Partition(), 1}, {P({2}), 0}, {P({1, 1}), 0}});
  CHECK(count_paths(w, 3, w.index_of(3, {P({1}), 1})) == 3);
  for (int n = 1; n <= 6; ++n) {
    std::int64_t s = 0;
    for (int v = 0; v < static_cast<int>(w.level(n).size()); ++v) s += count_paths(w, n, v) * count_paths(w, n, v);
    CHECK(s == double_factorial_odd(n));
  }
  // Edge rule checked vertex by vertex against the input diagram.
  auto yy = young_lattice(8);
  for (int n = 0; n < 8; ++n) {
    for (const Vertex& a : w.level(n))
      for (const Vertex& b : w.level(n + 1)) {
        bool expect = false;
        if (b.l == a.l) expect = yy.has_edge(n - 2 * a.l, {a.lambda, 0}, {b.lambda, 0});
        if (b.l == a.l + 1 && n - 1 - 2 * a.l >= 0)
          expect = yy.has_edge(n - 1 - 2 * a.l, {b.lambda, 0}, {a.lambda, 0});
        CHECK(w.has_edge(n, a, b) == expect);
      }
  }

  auto tl = reflect_branching(trivial_chain(6), 6);
  std::set<int> js;
  for (const Vertex& v : tl.level(4)) js.insert(4 - 2 * v.l);
  CHECK(js == std::set<int>{0, 2, 4});
  for (int n = 1; n <= 6; ++n) {
    std::int64_t s = 0;
    for (int v = 0; v < static_cast<int>(tl.level(n).size()); ++v) s += count_paths(tl, n, v) * count_paths(tl, n, v);
    CHECK(s == catalan(n));
  }

  auto pa = reflect_branching(doubled_young_lattice(8), 8);
  CHECK(pa.valid(&why));
  for (int k = 1; k <= 8; ++k) {
    std::int64_t s = 0;
    for (int v = 0; v < static_cast<int>(pa.level(k).size()); ++v) s += count_paths(pa, k, v) * count_paths(pa, k, v);
    CHECK(s == bell(k));
  }
}

TEST_CASE("reverse lexicographic order") {
  auto y = young_lattice(4);
  int v = y.index_of(4, {P({2, 2}), 0});
  auto ps = paths_to(y, 4, v);
  for (auto& s : ps) {
    CHECK(reverse_lex_leq(y, s, s));
    for (auto& t : ps) {
      CHECK((reverse_lex_leq(y, s, t) || reverse_lex_leq(y, t, s)));
      if (reverse_lex_leq(y, s, t) && reverse_lex_leq(y, t, s)) CHECK(s == t);
    }
  }
  Path a{{0, 0}}, b{{0, 0, 0}};
  CHECK_THROWS_AS(reverse_lex_leq(y, a, b), StructuralError);
}

TEST_CASE("counting helpers") {
  CHECK(catalan(6) == 132);
  CHECK(bell(6) == 203);
  CHECK(double_factorial_odd(4) == 105);
  CHECK(factorial(5) == 120);
}
