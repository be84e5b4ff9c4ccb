#include "ctow/hecke.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace ctow {

namespace {

int lehmer_rank(const std::vector<int>& v) {
  int n = static_cast<int>(v.size());
  int r = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (v[j] < v[i]) ++smaller;
    r = r * (n - i) + smaller;
  }
  return r;
}

LaurentPoly q_minus_qinv() { return q_pow(1) - q_pow(-1); }

void add_to(LVec& y, int k, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto it = y.find(k);
  if (it == y.end()) {
    y.emplace(k, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) y.erase(it);
  }
}

}  // namespace

// ------------------------------------------------------------------ tables

int SymTable::index(const Permutation& w) const {
  if (w.n() != n) throw StructuralError("permutation of the wrong rank");
  return lehmer_rank(w.one_line());
}

const SymTable& sym_table(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<SymTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot) {
    auto t = std::make_unique<SymTable>();
    t->n = n;
    t->perms = all_permutations(n);
    int N = t->size();
    t->length.resize(N);
    t->inverse.resize(N);
    t->word.resize(N);
    t->right.assign(n, std::vector<int>(N, -1));
    t->left.assign(n, std::vector<int>(N, -1));
    for (int w = 0; w < N; ++w) {
      const Permutation& p = t->perms[w];
      t->length[w] = p.length();
      t->inverse[w] = lehmer_rank(p.inverse().one_line());
      t->word[w] = p.reduced_word();
      for (int i = 1; i < n; ++i) {
        t->right[i][w] = lehmer_rank(p.times_simple(i).one_line());
        t->left[i][w] = lehmer_rank(p.simple_times(i).one_line());
      }
    }
    slot = std::move(t);
  }
  return *slot;
}

// ---------------------------------------------------------------- elements

HeckeElement HeckeElement::one(int n) {
  HeckeElement x(n);
  x.c_.emplace(0, LaurentPoly(1));
  return x;
}

HeckeElement HeckeElement::T(const Permutation& w) {
  HeckeElement x(w.n());
  x.c_.emplace(sym_table(w.n()).index(w), LaurentPoly(1));
  return x;
}

HeckeElement HeckeElement::T_gen(int n, int i) { return T(Permutation::simple(n, i)); }

HeckeElement HeckeElement::T_gen_inverse(int n, int i) {
  // T_i^{-1} = T_i - (q - q^{-1}).
  HeckeElement x = T_gen(n, i);
  x -= q_minus_qinv() * one(n);
  return x;
}

HeckeElement HeckeElement::T_range(int n, int i, int j) {
  std::vector<int> word;
  if (j >= i) {
    for (int k = i; k < j; ++k) word.push_back(k);
  } else {
    for (int k = i - 1; k >= j; --k) word.push_back(k);
  }
  return mul_word_right(one(n), word);
}

LaurentPoly HeckeElement::coeff(const Permutation& w) const {
  auto it = c_.find(sym_table(n_).index(w));
  return it == c_.end() ? LaurentPoly(0) : it->second;
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
  if (o.n_ != n_) throw StructuralError("Hecke rank mismatch");
  axpy(c_, LaurentPoly(1), o.c_);
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& o) {
  if (o.n_ != n_) throw StructuralError("Hecke rank mismatch");
  axpy(c_, LaurentPoly(-1), o.c_);
  return *this;
}

HeckeElement operator*(const LaurentPoly& a, const HeckeElement& x) {
  HeckeElement y(x.n_);
  axpy(y.c_, a, x.c_);
  return y;
}

HeckeElement operator*(const HeckeElement& x, const HeckeElement& y) {
  if (x.n_ != y.n_) throw StructuralError("Hecke rank mismatch");
  const SymTable& tab = sym_table(x.n_);
  HeckeElement out(x.n_);
  for (const auto& [v, c] : y.c_) {
    HeckeElement z = mul_word_right(x, tab.word[v]);
    axpy(out.c_, c, z.c_);
  }
  return out;
}

HeckeElement HeckeElement::embed(int m) const {
  if (m < n_) throw StructuralError("cannot embed into a smaller rank");
  const SymTable& src = sym_table(n_);
  const SymTable& dst = sym_table(m);
  HeckeElement y(m);
  for (const auto& [w, c] : c_) {
    std::vector<int> v = src.perms[w].one_line();
    for (int k = n_ + 1; k <= m; ++k) v.push_back(k);
    y.c_.emplace(dst.index(Permutation(v)), c);
  }
  return y;
}

std::string HeckeElement::str() const {
  if (c_.empty()) return "0";
  const SymTable& tab = sym_table(n_);
  std::string s;
  for (const auto& [w, c] : c_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.str() + ")*T[";
    const auto& wd = tab.word[w];
    for (std::size_t k = 0; k < wd.size(); ++k) s += (k ? "," : "") + std::to_string(wd[k]);
    s += "]";
  }
  return s;
}

nlohmann::json HeckeElement::to_json() const {
  const SymTable& tab = sym_table(n_);
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [w, c] : c_) terms.push_back({{"perm", tab.perms[w].one_line()}, {"coef", c.to_json()}});
  return {{"n", n_}, {"terms", terms}};
}

HeckeElement hecke_mul_gen(const HeckeElement& x, int i) {
  int n = x.n();
  if (i < 1 || i >= n) throw StructuralError("generator index out of range");
  const SymTable& tab = sym_table(n);
  HeckeElement y(n);
  for (const auto& [w, c] : x.coeffs()) {
    int ws = tab.right[i][w];
    add_to(y.coeffs(), ws, c);
    if (tab.length[ws] < tab.length[w]) add_to(y.coeffs(), w, q_minus_qinv() * c);
  }
  return y;
}

HeckeElement hecke_gen_mul(int i, const HeckeElement& x) {
  int n = x.n();
  if (i < 1 || i >= n) throw StructuralError("generator index out of range");
  const SymTable& tab = sym_table(n);
  HeckeElement y(n);
  for (const auto& [w, c] : x.coeffs()) {
    int sw = tab.left[i][w];
    add_to(y.coeffs(), sw, c);
    if (tab.length[sw] < tab.length[w]) add_to(y.coeffs(), w, q_minus_qinv() * c);
  }
  return y;
}

HeckeElement mul_word_right(HeckeElement x, const std::vector<int>& word) {
  for (int i : word) x = hecke_mul_gen(x, i);
  return x;
}

HeckeElement mul_word_left(const std::vector<int>& word, HeckeElement x) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) x = hecke_gen_mul(*it, x);
  return x;
}

HeckeElement involution_star(const HeckeElement& x) {
  const SymTable& tab = sym_table(x.n());
  HeckeElement y(x.n());
  for (const auto& [w, c] : x.coeffs()) y.coeffs().emplace(tab.inverse[w], c);
  return y;
}

HeckeElement m_lambda(const Partition& mu) {
  int n = mu.size();
  HeckeElement x(n);
  const SymTable& tab = sym_table(n);
  for (const auto& v : young_subgroup(mu)) {
    int k = tab.index(v);
    x.coeffs().emplace(k, q_pow(tab.length[k]));
  }
  return x;
}

HeckeElement murphy_element(const Tableau& s, const Tableau& t) {
  if (s.shape() != t.shape()) throw StructuralError("Murphy element needs tableaux of one shape");
  HeckeElement x = mul_word_right(m_lambda(t.shape()), tableau_permutation(t).reduced_word());
  auto ws = tableau_permutation(s).reduced_word();
  std::reverse(ws.begin(), ws.end());
  return mul_word_left(ws, x);
}

// ------------------------------------------------------------ Murphy basis

MurphyBasis::MurphyBasis(int n) : n_(n), shapes_(partitions_of(n)) {
  const SymTable& tab = sym_table(n);
  for (int a = 0; a < static_cast<int>(shapes_.size()); ++a) {
    tabs_.push_back(standard_tableaux(shapes_[a]));
    offset_.push_back(static_cast<int>(labels_.size()));
    const auto& ts = tabs_.back();
    HeckeElement m = m_lambda(shapes_[a]);
    std::vector<HeckeElement> right;
    for (const auto& t : ts) right.push_back(mul_word_right(m, tableau_permutation(t).reduced_word()));
    for (int s = 0; s < static_cast<int>(ts.size()); ++s) {
      auto ws = tableau_permutation(ts[s]).reduced_word();
      std::reverse(ws.begin(), ws.end());
      for (int t = 0; t < static_cast<int>(ts.size()); ++t) {
        labels_.push_back({a, s, t});
        elements_.push_back(mul_word_left(ws, right[t]));
      }
    }
  }
  if (size() != tab.size()) throw StructuralError("Murphy basis has the wrong cardinality");
  for (const auto& e : elements_) {
    FVec v;
    for (const auto& [k, c] : e.coeffs()) v.emplace(k, RationalFunction(c));
    if (!span_.add(v)) throw StructuralError("Murphy basis is linearly dependent");
  }
}

int MurphyBasis::position(int shape, int s, int t) const {
  int f = static_cast<int>(tabs_.at(shape).size());
  return offset_.at(shape) + s * f + t;
}

int MurphyBasis::shape_index(const Partition& p) const {
  for (int a = 0; a < static_cast<int>(shapes_.size()); ++a)
    if (shapes_[a] == p) return a;
  throw StructuralError("unknown shape " + p.str());
}

int MurphyBasis::tableau_index(int shape, const Tableau& t) const {
  const auto& ts = tabs_.at(shape);
  auto it = std::find(ts.begin(), ts.end(), t);
  if (it == ts.end()) throw StructuralError("not a standard tableau of the shape");
  return static_cast<int>(it - ts.begin());
}

LVec MurphyBasis::express(const HeckeElement& x) const {
  if (x.n() != n_) throw StructuralError("Hecke rank mismatch");
  FVec v;
  for (const auto& [k, c] : x.coeffs()) v.emplace(k, RationalFunction(c));
  FVec coeffs;
  FVec rem = span_.reduce(v, &coeffs);
  if (!rem.empty()) throw StructuralError("element outside the span of the Murphy basis");
  LVec out;
  for (const auto& [k, c] : coeffs) {
    if (!c.is_laurent()) throw StructuralError("Murphy coefficient outside the Laurent ring");
    out.emplace(k, c.num());
  }
  return out;
}

const MurphyBasis& murphy_basis(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<MurphyBasis>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<MurphyBasis>(n);
  return *slot;
}

LVec express_in_murphy(const HeckeElement& x) { return murphy_basis(x.n()).express(x); }

// -------------------------------------------------------- branching data

namespace {

Node added_node(const Partition& small, const Partition& big) {
  if (big.size() != small.size() + 1) throw std::domain_error("not an edge of Young's lattice");
  for (const Node& x : addable_nodes(small))
    if (add_node(small, x) == big) return x;
  throw std::domain_error("not an edge of Young's lattice");
}

}  // namespace

std::pair<int, int> addable_ab(const Partition& mu, const Node& beta) {
  int r = beta.row;
  int a = 0;
  for (int j = 0; j < r; ++j) a += mu[j];
  int b = a - mu[r - 1] + 1;
  return {a, b};
}

HeckeElement d_branching_H(const Partition& mu, const Partition& lambda) {
  Node alpha = added_node(mu, lambda);
  int n = lambda.size();
  int a = superstandard_tableau(lambda).at(alpha);
  return HeckeElement::T_range(n, a, n);
}

HeckeElement D_beta(const Partition& mu, const Node& beta) {
  int n1 = mu.size() + 1;
  auto [a, b] = addable_ab(mu, beta);
  HeckeElement d(n1);
  for (int j = 0; j <= a + 1 - b; ++j) d += q_pow(j) * HeckeElement::T_range(n1, a + 1, a + 1 - j);
  return d;
}

HeckeElement u_branching_H(const Partition& mu, const Partition& nu) {
  Node beta = added_node(mu, nu);
  int n = mu.size();
  auto [a, b] = addable_ab(mu, beta);
  (void)b;
  return q_pow(n - a) * (HeckeElement::T_range(n + 1, n + 1, a + 1) * D_beta(mu, beta));
}

HeckeElement d_path(const Tableau& t) {
  int n = t.size();
  // d_t = d^{(n)} d^{(n-1)} ... d^{(1)}: accumulate from the earliest edge.
  HeckeElement acc = HeckeElement::one(0);
  for (int k = 1; k <= n; ++k) {
    HeckeElement step = d_branching_H(t.restrict_shape(k - 1), t.restrict_shape(k));
    acc = step * acc.embed(k);
  }
  return acc;
}

HeckeElement garnir_element(const Partition& lambda, const Node& x) {
  // With T_i normalized by (T_i - q)(T_i + q^-1) = 0 each term carries the
  // weight q^{l(w(tau)) - l(w(g))}; the unweighted sum is not in the ideal.
  Tableau g = garnir_tableau(lambda, x);
  HeckeElement m = m_lambda(lambda);
  Permutation wg = tableau_permutation(g);
  HeckeElement h = mul_word_right(m, wg.reduced_word());
  for (const auto& tau : standard_tableaux(lambda)) {
    if (!tableau_dominance_gt(tau, g)) continue;
    Permutation w = tableau_permutation(tau);
    h += q_pow(w.length() - wg.length()) * mul_word_right(m, w.reduced_word());
  }
  return h;
}

LVec cell_action(const Partition& lambda, int t, int i) {
  const MurphyBasis& mb = murphy_basis(lambda.size());
  int a = mb.shape_index(lambda);
  const HeckeElement& x = mb.element(mb.position(a, 0, t));
  LVec c = mb.express(hecke_mul_gen(x, i));
  LVec out;
  for (const auto& [k, v] : c) {
    const MurphyLabel& lab = mb.label(k);
    const Partition& sh = mb.shapes()[lab.shape];
    if (sh == lambda) {
      if (lab.s != 0) throw StructuralError("cell module action leaves the row of the superstandard tableau");
      out.emplace(lab.t, v);
    } else if (!dominance_gt(sh, lambda)) {
      throw StructuralError("cell module action leaves the dominance ideal");
    }
  }
  return out;
}

FiltrationReport restriction_filtration(const Partition& lambda) {
  FiltrationReport rep;
  rep.lambda = lambda;
  int n = lambda.size();
  const MurphyBasis& mb = murphy_basis(n);
  int a = mb.shape_index(lambda);
  const auto& tabs = mb.tableaux(a);
  auto rem = removable_nodes(lambda);
  std::vector<int> step_of(tabs.size(), -1);
  for (std::size_t j = 0; j < rem.size(); ++j) {
    FiltrationStep st{rem[j], remove_node(lambda, rem[j]), {}};
    for (std::size_t t = 0; t < tabs.size(); ++t)
      if (tabs[t].find(n) == rem[j]) {
        st.members.push_back(static_cast<int>(t));
        step_of[t] = static_cast<int>(j);
      }
    rep.steps.push_back(st);
  }
  auto fail = [&](bool& flag, const std::string& why) {
    if (flag && rep.failure.empty()) rep.failure = why;
    flag = false;
  };
  for (std::size_t j = 0; j < rep.steps.size(); ++j) {
    const auto& st = rep.steps[j];
    if (j + 1 < rep.steps.size() && !dominance_gt(st.mu, rep.steps[j + 1].mu))
      fail(rep.order_preserving, "subquotient labels not strictly decreasing at step " + std::to_string(j + 1));
    if (n == 1) continue;
    const MurphyBasis& small = murphy_basis(n - 1);
    int b = small.shape_index(st.mu);
    const auto& stabs = small.tableaux(b);
    if (stabs.size() != st.members.size())
      fail(rep.ranks, "subquotient " + std::to_string(j + 1) + " has rank " + std::to_string(st.members.size()) +
                          " instead of " + std::to_string(stabs.size()));
    for (int i = 1; i <= n - 2; ++i) {
      for (std::size_t s = 0; s < stabs.size(); ++s) {
        Tableau big = stabs[s];
        if (static_cast<int>(big.rows.size()) < st.alpha.row) big.rows.resize(st.alpha.row);
        big.rows[st.alpha.row - 1].push_back(n);
        int t = mb.tableau_index(a, big);
        LVec act = cell_action(lambda, t, i);
        LVec expect = cell_action(st.mu, static_cast<int>(s), i);
        LVec quotient;
        for (const auto& [v, c] : act) {
          if (step_of[v] > static_cast<int>(j)) {
            fail(rep.stable, "T_" + std::to_string(i) + " maps " + tabs[t].str() + " outside N_" +
                                 std::to_string(j + 1));
          } else if (step_of[v] == static_cast<int>(j)) {
            quotient.emplace(small.tableau_index(b, tabs[v].remove_max()), c);
          }
        }
        if (quotient != expect)
          fail(rep.isomorphic, "action of T_" + std::to_string(i) + " on " + tabs[t].str() +
                                   " differs from the cell module of " + st.mu.str());
      }
    }
  }
  return rep;
}

HeckeElement semistandard_basis_element(const SemistandardTableau& S, const Tableau& t, const Partition& mu) {
  Partition lambda = S.shape();
  if (t.shape() != lambda) throw StructuralError("semistandard and standard tableaux of different shapes");
  if (S.type() != mu) throw StructuralError("semistandard tableau of the wrong type");
  const MurphyBasis& mb = murphy_basis(lambda.size());
  int a = mb.shape_index(lambda);
  int ti = mb.tableau_index(a, t);
  const auto& tabs = mb.tableaux(a);
  HeckeElement x(lambda.size());
  for (std::size_t s = 0; s < tabs.size(); ++s) {
    if (type_tableau(tabs[s], mu) != S) continue;
    int len = tableau_permutation(tabs[s]).length();
    x += q_pow(len) * mb.element(mb.position(a, static_cast<int>(s), ti));
  }
  return x;
}

PermutationModuleReport permutation_module_filtration(const Partition& mu) {
  PermutationModuleReport rep;
  rep.mu = mu;
  int n = mu.size();
  const SymTable& tab = sym_table(n);
  const MurphyBasis& mb = murphy_basis(n);
  auto to_f = [](const HeckeElement& x) {
    FVec v;
    for (const auto& [k, c] : x.coeffs()) v.emplace(k, RationalFunction(c));
    return v;
  };
  auto fail = [&](bool& flag, const std::string& why) {
    if (flag && rep.failure.empty()) rep.failure = why;
    flag = false;
  };
  HeckeElement m = m_lambda(mu);
  EchelonSpan whole;
  for (int w = 0; w < tab.size(); ++w) whole.add(to_f(mul_word_right(m, tab.word[w])));
  rep.rank = whole.rank();

  struct Block {
    int shape;
    SemistandardTableau S;
  };
  std::vector<Block> blocks;
  for (int a = 0; a < static_cast<int>(mb.shapes().size()); ++a) {
    if (!dominance_geq(mb.shapes()[a], mu)) continue;
    for (auto& S : semistandard_tableaux(mb.shapes()[a], mu)) blocks.push_back({a, S});
  }
  EchelonSpan filt;
  int total = 0;
  for (const Block& blk : blocks) {
    const Partition& lam = mb.shapes()[blk.shape];
    rep.labels.push_back(lam);
    const auto& tabs = mb.tableaux(blk.shape);
    int first = filt.generators();
    std::vector<HeckeElement> elems;
    for (const auto& t : tabs) {
      HeckeElement x = semistandard_basis_element(blk.S, t, mu);
      if (!whole.contains(to_f(x))) fail(rep.basis, "m_{S t} outside M^mu for S = " + blk.S.str());
      if (!filt.add(to_f(x))) fail(rep.basis, "m_{S t} dependent for S = " + blk.S.str());
      elems.push_back(x);
      ++total;
    }
    for (std::size_t t = 0; t < elems.size(); ++t) {
      for (int i = 1; i < n; ++i) {
        FVec coeffs;
        FVec r = filt.reduce(to_f(hecke_mul_gen(elems[t], i)), &coeffs);
        if (!r.empty()) {
          fail(rep.stable, "M_i not closed under T_" + std::to_string(i) + " at S = " + blk.S.str());
          continue;
        }
        LVec top;
        for (const auto& [k, c] : coeffs)
          if (k >= first) top.emplace(k - first, c.num());
        if (top != cell_action(lam, static_cast<int>(t), i))
          fail(rep.isomorphic, "subquotient action differs from the cell module at S = " + blk.S.str());
      }
    }
  }
  if (total != rep.rank) fail(rep.basis, "wrong number of m_{S t}");
  return rep;
}

GroupAlgebraElement symmetric_group_specialize(const HeckeElement& x) {
  GroupAlgebraElement g;
  for (const auto& [w, c] : x.coeffs()) {
    mpz_class v = c.eval_int({1, 1, 1});
    if (v != 0) g.emplace(w, v);
  }
  return g;
}

GroupAlgebraElement group_algebra_mul(int n, const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  const SymTable& tab = sym_table(n);
  GroupAlgebraElement out;
  for (const auto& [u, cu] : a)
    for (const auto& [v, cv] : b) {
      int w = tab.index(tab.perms[u] * tab.perms[v]);
      mpz_class& slot = out[w];
      slot += cu * cv;
      if (slot == 0) out.erase(w);
    }
  return out;
}

}  // namespace ctow
