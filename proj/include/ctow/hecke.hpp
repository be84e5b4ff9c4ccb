#pragma once

// The Iwahori-Hecke algebra of the symmetric group with quadratic relation
// (T_i - q)(T_i + q^-1) = 0, its Murphy basis and branching data.

#include <map>
#include <memory>
#include <vector>

#include "ctow/coeff.hpp"
#include "ctow/combinatorics.hpp"
#include "ctow/linalg.hpp"

namespace ctow {

// Multiplication tables for the symmetric group of rank n. Permutations are
// indexed by their position in lexicographic one-line order.
struct SymTable {
  int n = 0;
  std::vector<Permutation> perms;
  std::vector<int> length;
  std::vector<int> inverse;
  std::vector<std::vector<int>> right;  // right[i][w] = index of w s_i
  std::vector<std::vector<int>> left;   // left[i][w] = index of s_i w
  std::vector<std::vector<int>> word;   // reduced words
  int index(const Permutation& w) const;
  int size() const { return static_cast<int>(perms.size()); }
};
const SymTable& sym_table(int n);

class HeckeElement {
 public:
  HeckeElement() = default;
  explicit HeckeElement(int n) : n_(n) {}
  static HeckeElement one(int n);
  static HeckeElement T(const Permutation& w);
  static HeckeElement T_gen(int n, int i);
  static HeckeElement T_gen_inverse(int n, int i);
  // T_{i,j} = T_i T_{i+1} ... T_{j-1} for j >= i and T_{i-1} ... T_j for i > j.
  static HeckeElement T_range(int n, int i, int j);

  int n() const { return n_; }
  const LVec& coeffs() const { return c_; }
  LVec& coeffs() { return c_; }
  bool is_zero() const { return c_.empty(); }
  LaurentPoly coeff(const Permutation& w) const;

  HeckeElement& operator+=(const HeckeElement& o);
  HeckeElement& operator-=(const HeckeElement& o);
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  friend HeckeElement operator*(const LaurentPoly& a, const HeckeElement& x);
  friend HeckeElement operator*(const HeckeElement& x, const HeckeElement& y);
  friend bool operator==(const HeckeElement& a, const HeckeElement& b) { return a.n_ == b.n_ && a.c_ == b.c_; }
  friend bool operator!=(const HeckeElement& a, const HeckeElement& b) { return !(a == b); }

  // Embedding into rank m >= n.
  HeckeElement embed(int m) const;
  std::string str() const;
  nlohmann::json to_json() const;

 private:
  int n_ = 0;
  LVec c_;
};

// x T_i and T_i x.
HeckeElement hecke_mul_gen(const HeckeElement& x, int i);
HeckeElement hecke_gen_mul(int i, const HeckeElement& x);
HeckeElement mul_word_right(HeckeElement x, const std::vector<int>& word);
HeckeElement mul_word_left(const std::vector<int>& word, HeckeElement x);
HeckeElement involution_star(const HeckeElement& x);

// m_mu = sum over the Young subgroup of q^{l(v)} T_v.
HeckeElement m_lambda(const Partition& mu);

struct MurphyLabel {
  int shape;  // index into partitions_of(n)
  int s;      // indices into standard_tableaux(shape)
  int t;
};

// The Murphy basis of H_n, with a cached solver expressing arbitrary
// elements in it.
class MurphyBasis {
 public:
  explicit MurphyBasis(int n);
  int n() const { return n_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const std::vector<Partition>& shapes() const { return shapes_; }
  const std::vector<Tableau>& tableaux(int shape) const { return tabs_.at(shape); }
  const MurphyLabel& label(int k) const { return labels_.at(k); }
  const HeckeElement& element(int k) const { return elements_.at(k); }
  int position(int shape, int s, int t) const;
  int shape_index(const Partition& p) const;
  int tableau_index(int shape, const Tableau& t) const;
  // Unique coefficients of x in the Murphy basis; throws StructuralError if
  // x is not in the span (must not happen).
  LVec express(const HeckeElement& x) const;

 private:
  int n_;
  std::vector<Partition> shapes_;
  std::vector<std::vector<Tableau>> tabs_;
  std::vector<int> offset_;
  std::vector<MurphyLabel> labels_;
  std::vector<HeckeElement> elements_;
  EchelonSpan span_;
};

// Shared per-rank instance, built once.
const MurphyBasis& murphy_basis(int n);
LVec express_in_murphy(const HeckeElement& x);

// The Murphy element T_{w(s)}^* m_lambda T_{w(t)} computed from scratch.
HeckeElement murphy_element(const Tableau& s, const Tableau& t);

// Branching coefficients on Young's lattice. d: mu -> lambda = mu + alpha at
// level n = |lambda|. u: mu -> nu = mu + beta at level |nu|.
HeckeElement d_branching_H(const Partition& mu, const Partition& lambda);
HeckeElement u_branching_H(const Partition& mu, const Partition& nu);
HeckeElement D_beta(const Partition& mu, const Node& beta);
// Position parameters of an addable node: a = mu_1 + ... + mu_r and
// b = mu_1 + ... + mu_{r-1} + 1.
std::pair<int, int> addable_ab(const Partition& mu, const Node& beta);
// d_t = d^{(n)} ... d^{(1)} along the path of a standard tableau.
HeckeElement d_path(const Tableau& t);

// h_g for the Garnir tableau at node x of lambda.
HeckeElement garnir_element(const Partition& lambda, const Node& x);

// Coefficients of m^lambda_t T_i modulo H^{|>lambda}, over standard
// lambda-tableaux (cell module action).
LVec cell_action(const Partition& lambda, int t, int i);

struct FiltrationStep {
  Node alpha;
  Partition mu;
  std::vector<int> members;  // tableau indices with n at alpha
};
struct FiltrationReport {
  Partition lambda;
  std::vector<FiltrationStep> steps;  // removable nodes bottom to top
  bool stable = true;                 // each N_j closed under T_1..T_{n-2}
  bool ranks = true;                  // subquotient ranks f^{mu(j)}
  bool isomorphic = true;             // action matrices match the cell module of mu(j)
  bool order_preserving = true;
  std::string failure;
};
FiltrationReport restriction_filtration(const Partition& lambda);

// m_{S t} = sum over standard s with mu(s) = S of q^{l(w(s))} m^lambda_{s t}.
HeckeElement semistandard_basis_element(const SemistandardTableau& S, const Tableau& t, const Partition& mu);

// Murphy's cell filtration of the permutation module M^mu = m_mu H_n by the
// elements m_{S t}, with semistandard S ordered compatibly with dominance.
struct PermutationModuleReport {
  Partition mu;
  int rank = 0;                   // rank of m_mu H_n
  std::vector<Partition> labels;  // shapes of S_1, S_2, ...
  bool basis = true;              // the m_{S t} form a basis of M^mu
  bool stable = true;             // every M_i is a submodule
  bool isomorphic = true;         // M_i / M_{i-1} matches the cell module action
  std::string failure;
};
PermutationModuleReport permutation_module_filtration(const Partition& mu);

// Group-algebra element of the symmetric group, the image under q = 1.
using GroupAlgebraElement = std::map<int, mpz_class>;  // permutation index -> coefficient
GroupAlgebraElement symmetric_group_specialize(const HeckeElement& x);
GroupAlgebraElement group_algebra_mul(int n, const GroupAlgebraElement& a, const GroupAlgebraElement& b);

}  // namespace ctow
