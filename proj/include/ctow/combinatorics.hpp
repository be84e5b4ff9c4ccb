#pragma once

// Partitions, tableaux, permutations and leveled branching diagrams.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ctow/coeff.hpp"
#include "json.hpp"

namespace ctow {

struct Partition {
  std::vector<int> parts;  // weakly decreasing, positive

  Partition() = default;
  explicit Partition(std::vector<int> p);  // trailing zeros dropped; throws if not decreasing

  int size() const;
  int length() const { return static_cast<int>(parts.size()); }
  int operator[](int i) const { return i < length() ? parts[i] : 0; }  // 0-based row
  bool empty() const { return parts.empty(); }
  std::string str() const;  // "(2,1)", "()" for the empty partition

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts == b.parts; }
  friend bool operator!=(const Partition& a, const Partition& b) { return a.parts != b.parts; }
  // Lexicographic on parts; only a container order.
  friend bool operator<(const Partition& a, const Partition& b) { return a.parts < b.parts; }
};

// Rows and columns are 1-based, matching the usual picture.
struct Node {
  int row = 1;
  int col = 1;
  friend bool operator==(const Node& a, const Node& b) { return a.row == b.row && a.col == b.col; }
  friend bool operator<(const Node& a, const Node& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  }
};

// Partitions of n in descending lexicographic order.
std::vector<Partition> partitions_of(int n);
bool dominance_geq(const Partition& a, const Partition& b);
bool dominance_gt(const Partition& a, const Partition& b);

std::vector<Node> removable_nodes(const Partition& p);  // bottom to top
std::vector<Node> addable_nodes(const Partition& p);    // top to bottom
Partition add_node(const Partition& p, const Node& x);
Partition remove_node(const Partition& p, const Node& x);

// Permutation of {1..n} in one-line notation. Products compose left to
// right, (u*v)(x) = v(u(x)), matching the right action on tableau entries.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> one_line);  // values 1..n
  static Permutation identity(int n);
  static Permutation simple(int n, int i);  // s_i swapping i and i+1
  static Permutation from_word(int n, const std::vector<int>& word);

  int n() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[x - 1]; }
  const std::vector<int>& one_line() const { return img_; }
  int length() const;  // inversion count
  // Reduced word i_1..i_k with w = s_{i_1} * ... * s_{i_k}.
  std::vector<int> reduced_word() const;
  Permutation inverse() const;
  // Whether l(w s_i) > l(w), i.e. i occurs before i+1 in the one-line form.
  bool right_ascent(int i) const;
  // Whether l(s_i w) > l(w), i.e. w(i) < w(i+1).
  bool left_ascent(int i) const;
  Permutation times_simple(int i) const;  // w * s_i
  Permutation simple_times(int i) const;  // s_i * w
  std::string cycle_str() const;          // "(2,4)(3,6,5)", "()" for identity

  friend Permutation operator*(const Permutation& u, const Permutation& v);
  friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }
  friend bool operator!=(const Permutation& a, const Permutation& b) { return a.img_ != b.img_; }
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.img_ < b.img_; }

 private:
  std::vector<int> img_;
};

// All permutations of n in lexicographic order of one-line notation.
std::vector<Permutation> all_permutations(int n);
// Young subgroup stabilising the rows of the superstandard tableau.
std::vector<Permutation> young_subgroup(const Partition& p);

// Row-standard or arbitrary filling of a Young diagram by distinct labels.
struct Tableau {
  std::vector<std::vector<int>> rows;

  Partition shape() const;
  int size() const;
  int at(const Node& x) const { return rows[x.row - 1][x.col - 1]; }
  Node find(int k) const;  // node holding k; throws if absent
  bool is_row_standard() const;
  bool is_standard() const;
  // Shape of the subtableau holding the entries 1..k.
  Partition restrict_shape(int k) const;
  // Removes the entry n = size() (must be at a removable node).
  Tableau remove_max() const;
  std::string str() const;  // "[1,2,3],[4,5],[6]"
  nlohmann::json to_json() const;

  friend bool operator==(const Tableau& a, const Tableau& b) { return a.rows == b.rows; }
  friend bool operator!=(const Tableau& a, const Tableau& b) { return a.rows != b.rows; }
  friend bool operator<(const Tableau& a, const Tableau& b) { return a.rows < b.rows; }
};

Tableau superstandard_tableau(const Partition& p);
// Standard tableaux of shape p, ordered by the sequence of rows holding
// 1, 2, ..., n (equivalently, lexicographically on Young-lattice paths).
std::vector<Tableau> standard_tableaux(const Partition& p);
// w(t) with t = t^lambda w(t): w maps the entry of t^lambda at each node to
// the entry of t at the same node.
Permutation tableau_permutation(const Tableau& t);
// The right action t w of a permutation on entries.
Tableau act(const Tableau& t, const Permutation& w);
// Tableau dominance via the shapes of t restricted to 1..k.
bool tableau_dominance_geq(const Tableau& s, const Tableau& t);
bool tableau_dominance_gt(const Tableau& s, const Tableau& t);
// The Garnir tableau at the node x = (i,j); throws std::domain_error if
// (i+1,j) is not a node.
Tableau garnir_tableau(const Partition& p, const Node& x);
// Whether t agrees with the superstandard tableau outside the Garnir strip.
bool agrees_outside_garnir_strip(const Tableau& t, const Node& x);

// Semistandard tableau: rows weakly increasing, columns strictly increasing.
struct SemistandardTableau {
  std::vector<std::vector<int>> rows;
  Partition shape() const;
  Partition type() const;  // multiplicities of 1, 2, ... (must be a partition)
  bool is_semistandard() const;
  std::string str() const;
  friend bool operator==(const SemistandardTableau& a, const SemistandardTableau& b) {
    return a.rows == b.rows;
  }
  friend bool operator<(const SemistandardTableau& a, const SemistandardTableau& b) {
    return a.rows < b.rows;
  }
};

// Semistandard lambda-tableaux of type mu, in lexicographic order of rows.
std::vector<SemistandardTableau> semistandard_tableaux(const Partition& shape, const Partition& type);
// mu(t): replace each entry k by the row index of k in t^mu.
SemistandardTableau type_tableau(const Tableau& t, const Partition& mu);
// T^mu, the unique semistandard mu-tableau of type mu.
SemistandardTableau superstandard_semistandard(const Partition& mu);

// Vertex of a branching diagram: a partition together with a level shift l
// (always 0 on an unreflected diagram).
struct Vertex {
  Partition lambda;
  int l = 0;
  std::string str() const;  // "((2,1);0)"
  friend bool operator==(const Vertex& a, const Vertex& b) { return a.l == b.l && a.lambda == b.lambda; }
  friend bool operator!=(const Vertex& a, const Vertex& b) { return !(a == b); }
  friend bool operator<(const Vertex& a, const Vertex& b) {
    return a.l != b.l ? a.l < b.l : a.lambda < b.lambda;
  }
};

// The order on reflected vertices: (lam,l) |> (mu,m) iff l > m, or l = m and
// lam |> mu. Vertices at the same level are compared.
bool vertex_gt(const Vertex& a, const Vertex& b);
bool vertex_geq(const Vertex& a, const Vertex& b);

// A multiplicity-free leveled graph. Vertices at each level are stored in a
// fixed order, and successor lists are sorted by that order.
class BranchingDiagram {
 public:
  int depth() const { return static_cast<int>(levels_.size()) - 1; }
  const std::vector<Vertex>& level(int k) const { return levels_.at(k); }
  int index_of(int k, const Vertex& v) const;  // -1 if absent
  const std::vector<int>& successors(int k, int v) const { return succ_.at(k).at(v); }
  const std::vector<int>& predecessors(int k, int v) const { return pred_.at(k).at(v); }
  bool has_edge(int k, const Vertex& from, const Vertex& to) const;

  // Builder interface.
  void add_level(std::vector<Vertex> vs);
  void add_edge(int k, int from, int to);  // from level k to level k+1
  void finalize();                          // sorts adjacency, builds predecessors
  // Checks the structural conditions of a branching diagram.
  bool valid(std::string* why = nullptr) const;

 private:
  std::vector<std::vector<Vertex>> levels_;
  std::vector<std::vector<std::vector<int>>> succ_;
  std::vector<std::vector<std::vector<int>>> pred_;
  std::vector<std::map<Vertex, int>> index_;
};

BranchingDiagram young_lattice(int depth);
// One vertex per level joined in a chain.
BranchingDiagram trivial_chain(int depth);
// Young's lattice with every level repeated: levels 2i and 2i+1 both carry
// the partitions of i, joined by identity edges from 2i to 2i+1.
BranchingDiagram doubled_young_lattice(int depth);
BranchingDiagram reflect_branching(const BranchingDiagram& h, int depth);

// A path lists one vertex index per level 0..k.
struct Path {
  std::vector<int> idx;
  int length() const { return static_cast<int>(idx.size()) - 1; }
  friend bool operator==(const Path& a, const Path& b) { return a.idx == b.idx; }
  friend bool operator<(const Path& a, const Path& b) { return a.idx < b.idx; }
};

// All paths from the root to vertex v at level k, in lexicographic order of
// vertex indices.
std::vector<Path> paths_to(const BranchingDiagram& d, int k, int v);
std::int64_t count_paths(const BranchingDiagram& d, int k, int v);
// Reverse lexicographic order: s precedes t if s = t or, at the last level
// where they differ, the vertex of s is smaller than that of t. Vertices
// are totally ordered by l and then lexicographically on partitions, which
// refines the cell order. Paths must end at the same level.
bool reverse_lex_leq(const BranchingDiagram& d, const Path& s, const Path& t);
std::string path_str(const BranchingDiagram& d, const Path& p);
nlohmann::json path_json(const BranchingDiagram& d, const Path& p);

// Bijection between Young-lattice paths and standard tableaux.
Tableau path_to_tableau(const BranchingDiagram& young, const Path& p);
Path tableau_to_path(const BranchingDiagram& young, const Tableau& t);

// Counting helpers used as independent oracles.
std::int64_t factorial(int n);
std::int64_t double_factorial_odd(int n);  // (2n-1)!!
std::int64_t catalan(int n);
std::int64_t bell(int n);

}  // namespace ctow
