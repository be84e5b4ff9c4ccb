#include <mutex>
#include <stdexcept>

#include "ctow/bmw.hpp"
#include "ctow/diagrams.hpp"
#include "ctow/framework.hpp"
#include "ctow/hecke.hpp"

namespace ctow {

LVec TowerSpec::embed(int k, int m, LVec a) const {
  if (m < k) throw StructuralError("cannot embed into a lower level");
  for (; k < m; ++k) a = embed_step(k, a);
  return a;
}

FVec TowerSpec::field(const LVec& v) const {
  return ctow::to_field(v, [this](const LaurentPoly& p) { return to_field(p); });
}

bool TowerSpec::equal(const LVec& a, const LVec& b) const {
  LVec d = a;
  axpy(d, LaurentPoly(-1), b);
  return field(d).empty();
}

namespace {

void add_to(LVec& v, int k, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto it = v.find(k);
  if (it == v.end()) {
    v.emplace(k, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) v.erase(it);
  }
}

// Parameters of the Young's lattice edge lambda -> mu: the level i = |mu|,
// a = mu_1 + ... + mu_j where row j received the new node, and lambda_j.
struct EdgeParams {
  int i;
  int a;
  int lambda_row;
};

EdgeParams edge_params(const Partition& lambda, const Partition& mu) {
  for (const Node& x : addable_nodes(lambda)) {
    if (add_node(lambda, x) != mu) continue;
    int a = 0;
    for (int r = 0; r < x.row; ++r) a += mu[r];
    return {mu.size(), a, lambda[x.row - 1]};
  }
  throw std::domain_error("not an edge of Young's lattice: " + lambda.str() + " -> " + mu.str());
}

// s_{i,j} = s_i ... s_{j-1} for j >= i and s_{i-1} ... s_j for i > j.
Permutation perm_range(int n, int i, int j) {
  std::vector<int> w;
  if (j >= i) {
    for (int k = i; k < j; ++k) w.push_back(k);
  } else {
    for (int k = i - 1; k >= j; --k) w.push_back(k);
  }
  return Permutation::from_word(n, w);
}

// d-bar and u-bar of the symmetric group for lambda -> mu, as lists of
// permutations with unit coefficients.
std::vector<Permutation> sym_dbar(const Partition& lambda, const Partition& mu) {
  EdgeParams p = edge_params(lambda, mu);
  return {perm_range(p.i, p.a, p.i)};
}

std::vector<Permutation> sym_ubar(const Partition& lambda, const Partition& mu) {
  EdgeParams p = edge_params(lambda, mu);
  Permutation head = perm_range(p.i, p.i, p.a);
  std::vector<Permutation> out;
  for (int r = 0; r <= p.lambda_row; ++r) out.push_back(head * perm_range(p.i, p.a, p.a - r));
  return out;
}

// Shared implementation for towers whose native bases are diagrams.
template <class D>
class DiagramTower : public TowerSpec {
 public:
  int dim(int k) const override { return static_cast<int>(level(k).basis.size()); }
  LVec one(int k) const override { return vec(k, identity_at(k)); }

  LVec mul(int k, const LVec& a, const LVec& b) const override {
    const Level& lv = level(k);
    LVec r;
    for (const auto& [x, cx] : a)
      for (const auto& [y, cy] : b) {
        auto [d, loops] = compose(lv.basis[x], lv.basis[y]);
        add_to(r, index(k, d), cx * cy * delta_pow(loops));
      }
    return r;
  }

  LVec star(int k, const LVec& a) const override {
    const Level& lv = level(k);
    LVec r;
    for (const auto& [x, c] : a) add_to(r, index(k, diagram_involution(lv.basis[x])), c);
    return r;
  }

  LVec embed_step(int k, const LVec& a) const override {
    const Level& lv = level(k);
    LVec r;
    for (const auto& [x, c] : a) add_to(r, index(k + 1, embed_diagram(k, lv.basis[x])), c);
    return r;
  }

  nlohmann::json native_json(int k, int idx) const override { return level(k).basis.at(idx).to_json(); }

  const D& diagram(int k, int idx) const { return level(k).basis.at(idx); }

 protected:
  virtual std::vector<D> make_basis(int k) const = 0;
  virtual D embed_diagram(int k, const D& d) const = 0;
  virtual D identity_at(int k) const = 0;

  LVec vec(int k, const D& d, const LaurentPoly& c = LaurentPoly(1)) const {
    LVec v;
    add_to(v, index(k, d), c);
    return v;
  }

  int index(int k, const D& d) const {
    const Level& lv = level(k);
    auto it = lv.index.find(d);
    if (it == lv.index.end()) throw StructuralError(name() + ": diagram " + d.str() + " is not in level " + std::to_string(k));
    return it->second;
  }

  void check_level(int k) const {
    if (k < 0 || k > max_level()) throw std::domain_error(name() + ": level " + std::to_string(k) + " out of range");
  }

 private:
  struct Level {
    std::vector<D> basis;
    std::map<D, int> index;
  };
  mutable std::mutex mu_;
  mutable std::map<int, std::shared_ptr<Level>> levels_;

  const Level& level(int k) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto& slot = levels_[k];
    if (!slot) {
      check_level(k);
      auto lv = std::make_shared<Level>();
      lv->basis = make_basis(k);
      for (int i = 0; i < static_cast<int>(lv->basis.size()); ++i) lv->index.emplace(lv->basis[i], i);
      slot = lv;
    }
    return *slot;
  }
};

BrauerDiagram add_strand(const BrauerDiagram& d) {
  int n = d.n();
  auto shift = [n](int v) { return v < n ? v : v + 1; };
  std::vector<int> partner(2 * n + 2);
  for (int v = 0; v < 2 * n; ++v) partner[shift(v)] = shift(d.partner(v));
  partner[n] = 2 * n + 1;
  partner[2 * n + 1] = n;
  return BrauerDiagram(n + 1, partner);
}

class BrauerFamily : public DiagramTower<BrauerDiagram> {
 public:
  int max_level() const override { return 5; }
  LVec e(int j) const override { return vec(j + 1, BrauerDiagram::e(j + 1, j)); }

  int dim_H(int k) const override { return static_cast<int>(factorial(k)); }

 protected:
  BrauerDiagram embed_diagram(int, const BrauerDiagram& d) const override { return add_strand(d); }
  BrauerDiagram identity_at(int k) const override { return BrauerDiagram::identity(k); }
};

class BrauerTower : public BrauerFamily {
 public:
  std::string name() const override { return "brauer"; }

  std::vector<std::pair<std::string, LVec>> generators(int k) const override {
    std::vector<std::pair<std::string, LVec>> g;
    for (int i = 1; i < k; ++i) g.emplace_back("s" + std::to_string(i), vec(k, BrauerDiagram::s(k, i)));
    for (int i = 1; i < k; ++i) g.emplace_back("e" + std::to_string(i), vec(k, BrauerDiagram::e(k, i)));
    return g;
  }

  LVec quotient(int k, const LVec& a) const override {
    LVec r;
    const SymTable& tab = sym_table(k);
    for (const auto& [x, c] : a) {
      const BrauerDiagram& d = diagram(k, x);
      if (d.is_permutation()) add_to(r, tab.index(d.to_permutation()), c);
    }
    return r;
  }

  BranchingDiagram h_diagram(int depth) const override { return young_lattice(depth); }

  LVec dbar(int k, const Partition& lambda, const Partition& mu) const override {
    return perms(k, sym_dbar(lambda, mu));
  }
  LVec ubar(int k, const Partition& lambda, const Partition& mu) const override {
    return perms(k, sym_ubar(lambda, mu));
  }
  LVec c0(int k, const Partition& lambda) const override {
    if (lambda.size() != k) throw std::domain_error("c0: partition does not match the level");
    if (k == 0) return one(0);
    return perms(k, young_subgroup(lambda));
  }

 protected:
  std::vector<BrauerDiagram> make_basis(int k) const override { return brauer_basis(k); }

 private:
  LVec perms(int k, const std::vector<Permutation>& ws) const {
    LVec r;
    for (const auto& w : ws) add_to(r, index(k, BrauerDiagram::permutation(w)), 1);
    return r;
  }
};

class TLTower : public BrauerFamily {
 public:
  std::string name() const override { return "tl"; }
  int max_level() const override { return 8; }

  std::vector<std::pair<std::string, LVec>> generators(int k) const override {
    std::vector<std::pair<std::string, LVec>> g;
    for (int i = 1; i < k; ++i) g.emplace_back("e" + std::to_string(i), vec(k, BrauerDiagram::e(k, i)));
    return g;
  }

  int dim_H(int) const override { return 1; }
  LVec quotient(int k, const LVec& a) const override {
    LVec r;
    auto it = a.find(index(k, BrauerDiagram::identity(k)));
    if (it != a.end()) r.emplace(0, it->second);
    return r;
  }

  BranchingDiagram h_diagram(int depth) const override { return trivial_chain(depth); }
  LVec dbar(int k, const Partition&, const Partition&) const override { return one(k); }
  LVec ubar(int k, const Partition&, const Partition&) const override { return one(k); }
  LVec c0(int k, const Partition&) const override { return one(k); }

 protected:
  std::vector<BrauerDiagram> make_basis(int k) const override { return tl_basis(k); }
};

// Level 2i is P_i and level 2i+1 is P_{i+1/2}, stored as diagrams of P_{i+1}
// in which i+1 and its bottom copy share a block.
class PartitionTower : public DiagramTower<SetPartitionDiagram> {
 public:
  std::string name() const override { return "partition"; }
  int max_level() const override { return 7; }

  LVec e(int j) const override {
    if (j % 2 == 1) return vec(j + 1, SetPartitionDiagram::p((j + 1) / 2, (j + 1) / 2));
    return vec(j + 1, SetPartitionDiagram::p_half(j / 2 + 1, j / 2));
  }

  std::vector<std::pair<std::string, LVec>> generators(int k) const override {
    int i = k / 2;
    int r = rank(k);
    std::vector<std::pair<std::string, LVec>> g;
    for (int j = 1; j < i; ++j) g.emplace_back("t" + std::to_string(j), vec(k, SetPartitionDiagram::t_s(r, j)));
    for (int j = 1; j <= i; ++j) g.emplace_back("p" + std::to_string(j), vec(k, SetPartitionDiagram::p(r, j)));
    int top = k % 2 == 0 ? i - 1 : i;
    for (int j = 1; j <= top; ++j)
      g.emplace_back("p" + std::to_string(j) + "+1/2", vec(k, SetPartitionDiagram::p_half(r, j)));
    return g;
  }

  int dim_H(int k) const override { return static_cast<int>(factorial(k / 2)); }

  LVec quotient(int k, const LVec& a) const override {
    int i = k / 2;
    const SymTable& tab = sym_table(i);
    LVec r;
    for (const auto& [x, c] : a) {
      const SetPartitionDiagram& d = diagram(k, x);
      if (!d.is_permutation()) continue;
      std::vector<int> w = d.to_permutation().one_line();
      w.resize(i);
      add_to(r, tab.index(Permutation(w)), c);
    }
    return r;
  }

  BranchingDiagram h_diagram(int depth) const override { return doubled_young_lattice(depth); }

  LVec dbar(int k, const Partition& lambda, const Partition& mu) const override {
    if (k % 2 == 1) return one(k);
    return perms(k, sym_dbar(lambda, mu));
  }
  LVec ubar(int k, const Partition& lambda, const Partition& mu) const override {
    if (k % 2 == 1) return one(k);
    return perms(k, sym_ubar(lambda, mu));
  }
  LVec c0(int k, const Partition& lambda) const override {
    if (lambda.size() != k / 2) throw std::domain_error("c0: partition does not match the level");
    if (lambda.empty()) return one(k);
    LVec v = perms(2 * lambda.size(), young_subgroup(lambda));
    return k % 2 == 0 ? v : embed_step(k - 1, v);
  }

 protected:
  static int rank(int k) { return (k + 1) / 2; }
  std::vector<SetPartitionDiagram> make_basis(int k) const override {
    return k % 2 == 0 ? partition_basis(k / 2) : half_level_subalgebra_basis(k / 2 + 1);
  }
  SetPartitionDiagram identity_at(int k) const override { return SetPartitionDiagram::identity(rank(k)); }
  SetPartitionDiagram embed_diagram(int k, const SetPartitionDiagram& d) const override {
    if (k % 2 == 1) return d;
    int n = d.n();
    std::vector<int> labels(2 * n + 2);
    int fresh = 0;
    for (int v = 0; v < 2 * n; ++v) fresh = std::max(fresh, d.block_of(v) + 1);
    for (int v = 0; v < 2 * n; ++v) labels[v < n ? v : v + 1] = d.block_of(v);
    labels[n] = fresh;
    labels[2 * n + 1] = fresh;
    return SetPartitionDiagram(n + 1, labels);
  }

 private:
  // Permutation diagrams at the even level k = 2|w|.
  LVec perms(int k, const std::vector<Permutation>& ws) const {
    LVec r;
    for (const auto& w : ws) add_to(r, index(k, SetPartitionDiagram::permutation(w)), 1);
    return r;
  }
};

class BMWTower : public TowerSpec {
 public:
  std::string name() const override { return "bmw"; }
  int max_level() const override { return bmw_max_rank(); }

  int dim(int k) const override { return static_cast<int>(bmw_normal_forms(k).size()); }
  LVec one(int k) const override {
    if (k <= 1) return LVec{{0, LaurentPoly(1)}};
    return BMWElement::one(k).to_lvec();
  }

  LVec mul(int k, const LVec& a, const LVec& b) const override {
    if (k <= 1) {
      LVec r;
      auto ia = a.find(0), ib = b.find(0);
      if (ia != a.end() && ib != b.end()) add_to(r, 0, ia->second * ib->second);
      return r;
    }
    return (BMWElement::from_lvec(k, a) * BMWElement::from_lvec(k, b)).to_lvec();
  }
  LVec star(int k, const LVec& a) const override {
    if (k <= 1) return a;
    return BMWElement::from_lvec(k, a).star().to_lvec();
  }
  LVec embed_step(int k, const LVec& a) const override {
    if (k == 0) return a;
    return BMWElement::from_lvec(k, a).embed(k + 1).to_lvec();
  }
  LVec e(int j) const override { return BMWElement::e(j + 1, j).to_lvec(); }

  std::vector<std::pair<std::string, LVec>> generators(int k) const override {
    std::vector<std::pair<std::string, LVec>> g;
    for (int i = 1; i < k; ++i) g.emplace_back("g" + std::to_string(i), BMWElement::g(k, i).to_lvec());
    for (int i = 1; i < k; ++i) g.emplace_back("e" + std::to_string(i), BMWElement::e(k, i).to_lvec());
    return g;
  }
  nlohmann::json native_json(int k, int idx) const override { return bmw_normal_forms(k).at(idx).to_json(); }

  int dim_H(int k) const override { return static_cast<int>(factorial(k)); }
  LVec quotient(int k, const LVec& a) const override {
    if (k <= 1) return a;
    return bmw_to_hecke(BMWElement::from_lvec(k, a)).coeffs();
  }

  BranchingDiagram h_diagram(int depth) const override { return young_lattice(depth); }
  LVec dbar(int k, const Partition& lambda, const Partition& mu) const override {
    if (k <= 1) return one(k);
    return bmw_lift_branching(lambda, mu).first.to_lvec();
  }
  LVec ubar(int k, const Partition& lambda, const Partition& mu) const override {
    if (k <= 1) return one(k);
    return bmw_lift_branching(lambda, mu).second.to_lvec();
  }
  LVec c0(int k, const Partition& lambda) const override {
    if (lambda.size() != k) throw std::domain_error("c0: partition does not match the level");
    if (k <= 1) return one(k);
    BMWElement x(k);
    for (const auto& v : young_subgroup(lambda)) x += q_pow(v.length()) * BMWElement::g_perm(v);
    return x.to_lvec();
  }

  RationalFunction to_field(const LaurentPoly& p) const override { return delta_eliminate(p); }
  std::array<std::uint64_t, kNumSyms> eval_point(unsigned seed) const override {
    auto at = ctow::eval_point(seed);
    // delta = 1 + (z^-1 - z) / (q^-1 - q) at the chosen q and z.
    std::uint64_t q = at[SymQ], z = at[SymZ];
    std::uint64_t num = (inv_mod(z, kPrime) + kPrime - z) % kPrime;
    std::uint64_t den = (inv_mod(q, kPrime) + kPrime - q) % kPrime;
    at[SymDelta] = (1 + mul_mod(num, inv_mod(den, kPrime), kPrime)) % kPrime;
    return at;
  }
};

class HeckeTower : public TowerSpec {
 public:
  std::string name() const override { return "hecke"; }
  int max_level() const override { return 6; }
  bool has_idempotents() const override { return false; }

  int dim(int k) const override { return static_cast<int>(factorial(k)); }
  LVec one(int k) const override { return HeckeElement::one(k).coeffs(); }
  LVec mul(int k, const LVec& a, const LVec& b) const override { return (elem(k, a) * elem(k, b)).coeffs(); }
  LVec star(int k, const LVec& a) const override { return involution_star(elem(k, a)).coeffs(); }
  LVec embed_step(int k, const LVec& a) const override { return elem(k, a).embed(k + 1).coeffs(); }
  LVec e(int) const override { throw StructuralError("the Hecke tower has no idempotents"); }

  std::vector<std::pair<std::string, LVec>> generators(int k) const override {
    std::vector<std::pair<std::string, LVec>> g;
    for (int i = 1; i < k; ++i) g.emplace_back("T" + std::to_string(i), HeckeElement::T_gen(k, i).coeffs());
    return g;
  }
  nlohmann::json native_json(int k, int idx) const override { return sym_table(k).perms.at(idx).one_line(); }

  int dim_H(int k) const override { return dim(k); }
  LVec quotient(int, const LVec& a) const override { return a; }

  BranchingDiagram h_diagram(int depth) const override { return young_lattice(depth); }
  LVec dbar(int, const Partition& lambda, const Partition& mu) const override {
    return d_branching_H(lambda, mu).coeffs();
  }
  LVec ubar(int, const Partition& lambda, const Partition& mu) const override {
    return u_branching_H(lambda, mu).coeffs();
  }
  LVec c0(int, const Partition& lambda) const override { return m_lambda(lambda).coeffs(); }

 private:
  static HeckeElement elem(int k, const LVec& a) {
    HeckeElement x(k);
    x.coeffs() = a;
    return x;
  }
};

class PerturbedIdempotent : public TowerSpec {
 public:
  PerturbedIdempotent(std::shared_ptr<const TowerSpec> base, int j) : base_(std::move(base)), j_(j) {}
  std::string name() const override { return base_->name(); }
  int max_level() const override { return base_->max_level(); }
  bool has_idempotents() const override { return base_->has_idempotents(); }
  int dim(int k) const override { return base_->dim(k); }
  LVec one(int k) const override { return base_->one(k); }
  LVec mul(int k, const LVec& a, const LVec& b) const override { return base_->mul(k, a, b); }
  LVec star(int k, const LVec& a) const override { return base_->star(k, a); }
  LVec embed_step(int k, const LVec& a) const override { return base_->embed_step(k, a); }
  LVec e(int j) const override {
    LVec x = base_->e(j);
    if (j == j_) axpy(x, LaurentPoly(1), base_->one(j + 1));
    return x;
  }
  std::vector<std::pair<std::string, LVec>> generators(int k) const override { return base_->generators(k); }
  nlohmann::json native_json(int k, int idx) const override { return base_->native_json(k, idx); }
  int dim_H(int k) const override { return base_->dim_H(k); }
  LVec quotient(int k, const LVec& a) const override { return base_->quotient(k, a); }
  BranchingDiagram h_diagram(int depth) const override { return base_->h_diagram(depth); }
  LVec dbar(int k, const Partition& a, const Partition& b) const override { return base_->dbar(k, a, b); }
  LVec ubar(int k, const Partition& a, const Partition& b) const override { return base_->ubar(k, a, b); }
  LVec c0(int k, const Partition& a) const override { return base_->c0(k, a); }
  RationalFunction to_field(const LaurentPoly& p) const override { return base_->to_field(p); }
  std::array<std::uint64_t, kNumSyms> eval_point(unsigned seed) const override { return base_->eval_point(seed); }

 private:
  std::shared_ptr<const TowerSpec> base_;
  int j_;
};

}  // namespace

std::shared_ptr<const TowerSpec> perturbed_idempotent(std::shared_ptr<const TowerSpec> base, int j) {
  return std::make_shared<PerturbedIdempotent>(std::move(base), j);
}

std::shared_ptr<const TowerSpec> hecke_tower() {
  static auto t = std::make_shared<HeckeTower>();
  return t;
}
std::shared_ptr<const TowerSpec> brauer_tower() {
  static auto t = std::make_shared<BrauerTower>();
  return t;
}
std::shared_ptr<const TowerSpec> tl_tower() {
  static auto t = std::make_shared<TLTower>();
  return t;
}
std::shared_ptr<const TowerSpec> partition_tower() {
  static auto t = std::make_shared<PartitionTower>();
  return t;
}
std::shared_ptr<const TowerSpec> bmw_tower() {
  static auto t = std::make_shared<BMWTower>();
  return t;
}

std::shared_ptr<const TowerSpec> make_tower(const std::string& name) {
  if (name == "hecke") return hecke_tower();
  if (name == "brauer") return brauer_tower();
  if (name == "tl") return tl_tower();
  if (name == "partition") return partition_tower();
  if (name == "bmw") return bmw_tower();
  throw std::invalid_argument("unknown algebra: " + name);
}

}  // namespace ctow
