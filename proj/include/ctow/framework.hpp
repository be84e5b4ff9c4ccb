#pragma once

// The generic engine for towers obtained by the Jones basic construction:
// e-products, lifted cell generators, branching coefficients on the
// reflected diagram, path elements and the resulting cellular bases,
// together with rank-based verification of the cell datum and tower axioms.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "ctow/coeff.hpp"
#include "ctow/combinatorics.hpp"
#include "ctow/linalg.hpp"

namespace ctow {

// A tower A_0 ⊆ A_1 ⊆ ... together with its quotients H_k and the chosen
// lifts of their branching data. Elements of A_k are sparse vectors over a
// fixed native basis of A_k.
class TowerSpec {
 public:
  virtual ~TowerSpec() = default;
  virtual std::string name() const = 0;
  // Highest level the tower can build.
  virtual int max_level() const = 0;
  // False for the degenerate tower A = H, which has no idempotents.
  virtual bool has_idempotents() const { return true; }

  virtual int dim(int k) const = 0;
  virtual LVec one(int k) const = 0;
  virtual LVec mul(int k, const LVec& a, const LVec& b) const = 0;
  virtual LVec star(int k, const LVec& a) const = 0;
  // Inclusion A_k -> A_{k+1}.
  virtual LVec embed_step(int k, const LVec& a) const = 0;
  // e_j, an element of A_{j+1}.
  virtual LVec e(int j) const = 0;
  // Named algebra generators of A_k.
  virtual std::vector<std::pair<std::string, LVec>> generators(int k) const = 0;
  virtual nlohmann::json native_json(int k, int idx) const = 0;

  // The quotient pi_k : A_k -> H_k in native coordinates of H_k.
  virtual int dim_H(int k) const = 0;
  virtual LVec quotient(int k, const LVec& a) const = 0;

  // Branching diagram of the H tower, at least to the given depth.
  virtual BranchingDiagram h_diagram(int depth) const = 0;
  // Lifts in A_k of the H branching coefficients for the edge lambda -> mu
  // into H_k.
  virtual LVec dbar(int k, const Partition& lambda, const Partition& mu) const = 0;
  virtual LVec ubar(int k, const Partition& lambda, const Partition& mu) const = 0;
  // Lift in A_k of the cell generator c_lambda of H_k.
  virtual LVec c0(int k, const Partition& lambda) const = 0;

  // The map of coefficients into the fraction field F.
  virtual RationalFunction to_field(const LaurentPoly& p) const { return RationalFunction(p); }
  // An evaluation point of the coefficient ring compatible with to_field.
  virtual std::array<std::uint64_t, kNumSyms> eval_point(unsigned seed) const { return ctow::eval_point(seed); }

  LVec embed(int k, int m, LVec a) const;
  FVec field(const LVec& v) const;
  bool equal(const LVec& a, const LVec& b) const;
};

std::shared_ptr<const TowerSpec> hecke_tower();
std::shared_ptr<const TowerSpec> brauer_tower();
std::shared_ptr<const TowerSpec> tl_tower();
std::shared_ptr<const TowerSpec> partition_tower();
std::shared_ptr<const TowerSpec> bmw_tower();
// The same tower with e_j replaced by e_j + 1; used as a negative control.
std::shared_ptr<const TowerSpec> perturbed_idempotent(std::shared_ptr<const TowerSpec> base, int j);
// By name: hecke, brauer, bmw, tl, partition. Throws std::invalid_argument.
std::shared_ptr<const TowerSpec> make_tower(const std::string& name);

enum class Coefficient { D, U };

struct BranchingCoefficient {
  int level = 0;  // the coefficient lies in A_level
  Vertex from;    // at level - 1
  Vertex to;      // at level
  Coefficient kind = Coefficient::D;
  LVec value;
};

struct BasisLabel {
  int vertex = 0;  // index into the level of the reflected diagram
  int s = 0;       // indices into the path list of that vertex
  int t = 0;
};

struct CellDatum {
  int n = 0;
  std::vector<Vertex> vertices;
  std::vector<std::vector<Path>> paths;
  std::vector<LVec> c;                   // c_(lambda,l) per vertex
  std::vector<std::vector<LVec>> d;      // d_t per vertex and path
  std::vector<BasisLabel> labels;
  std::vector<LVec> elements;            // d_s^* c d_t
  int position(int vertex, int s, int t) const;
};

struct Counterexample {
  std::string check;
  std::string where;
  std::string detail;
  nlohmann::json to_json() const;
};

struct CellDatumReport {
  bool free = true;          // the elements form a basis of A_n
  bool independence = true;  // action coefficients do not depend on s
  bool involution = true;    // (c_st)^* = c_ts modulo higher cells
  bool ideal = true;         // A^{>=lambda} are two-sided ideals
  bool cyclic = true;        // c_lambda A_n has rank #paths modulo higher cells
  bool c_symmetric = true;   // c_lambda^* = c_lambda modulo higher cells
  std::vector<Counterexample> failures;
  bool ok() const { return free && independence && involution && ideal && cyclic && c_symmetric; }
  nlohmann::json to_json() const;
};

struct AxiomReport {
  int n = 0;
  bool self_adjoint = true;  // e_{n-1}^* = e_{n-1}
  bool quotient = true;      // A_n / A_n e_{n-1} A_n is H_n via pi_n
  bool commute = true;       // e_n commutes with A_{n-1}
  bool compress = true;      // e_n A_n e_n inside A_{n-1} e_n
  bool absorb = true;        // A_{n+1} e_n = A_n e_n, and x -> x e_n injective
  bool generate = true;      // e_{n-1} in A_{n+1} e_n A_{n+1}
  std::vector<Counterexample> failures;
  bool ok() const { return self_adjoint && quotient && commute && compress && absorb && generate; }
  nlohmann::json to_json() const;
};

struct FiltrationStepA {
  Vertex label;
  int rank = 0;     // rank of the subquotient
  int expected = 0;  // number of paths to label
};

struct FiltrationReportA {
  Vertex top;
  int n = 0;
  std::vector<FiltrationStepA> steps;
  bool stable = true;
  bool ranks = true;
  bool isomorphic = true;
  bool order_preserving = true;
  bool exhaustive = true;
  std::vector<Counterexample> failures;
  bool ok() const { return stable && ranks && isomorphic && order_preserving && exhaustive; }
  nlohmann::json to_json() const;
};

class Framework {
 public:
  explicit Framework(std::shared_ptr<const TowerSpec> spec);
  const TowerSpec& spec() const { return *spec_; }
  // The reflected diagram (or the H diagram for the degenerate tower).
  const BranchingDiagram& diagram(int depth) const;

  // e_{n-1}^{(l)} = e_{n-2l+1} e_{n-2l+3} ... e_{n-1} in A_n.
  LVec e_power(int n, int l) const;
  LVec c_lambda_l(const Vertex& v, int n) const;
  BranchingCoefficient branching_closed_form(int level, const Vertex& from, const Vertex& to, Coefficient kind) const;
  BranchingCoefficient branching_recursive(int level, const Vertex& from, const Vertex& to, Coefficient kind) const;
  LVec path_element(const Path& t) const;
  CellDatum cellular_basis(int n) const;

  CellDatumReport verify_cell_datum(const CellDatum& datum) const;
  AxiomReport verify_framework_axioms(int n) const;
  FiltrationReportA restriction_filtration(const Vertex& top, int n) const;

  // Independence of the elements, certified by a nonzero determinant at a
  // point of the coefficient ring. Returns the index of the first dependent
  // element, or -1.
  int freeness_certificate(const CellDatum& datum) const;
  // Sum over vertices of the squared path counts.
  std::int64_t path_square_sum(int n) const;
  nlohmann::json datum_json(const CellDatum& datum) const;

 private:
  std::shared_ptr<const TowerSpec> spec_;
  mutable std::mutex mu_;
  mutable std::optional<BranchingDiagram> diagram_;
  mutable std::map<std::tuple<int, int, int, int, int>, LVec> recursive_cache_;
  mutable std::map<std::vector<int>, LVec> path_cache_;
  mutable std::map<int, std::shared_ptr<CellDatum>> datum_cache_;

  LVec recursive(int level, int from, int to, Coefficient kind) const;
  std::shared_ptr<CellDatum> datum(int n) const;
};

std::string vertex_label(const Vertex& v);

}  // namespace ctow
