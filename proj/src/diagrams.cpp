#include "ctow/diagrams.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "ctow/hecke.hpp"

namespace ctow {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::string vertex_name(int n, int v) {
  return v < n ? "p" + std::to_string(v + 1) : "q" + std::to_string(v - n + 1);
}

void check_index(int n, int i, int hi) {
  if (i < 1 || i > hi) throw std::domain_error("generator index " + std::to_string(i) + " out of range for n=" + std::to_string(n));
}

}  // namespace

BrauerDiagram::BrauerDiagram(int n, std::vector<int> partner) : n_(n), partner_(std::move(partner)) {
  if (n < 0 || static_cast<int>(partner_.size()) != 2 * n) throw StructuralError("Brauer diagram of wrong size");
  for (int v = 0; v < 2 * n; ++v) {
    int w = partner_[v];
    if (w < 0 || w >= 2 * n || w == v || partner_[w] != v) throw StructuralError("not a perfect matching");
  }
}

BrauerDiagram BrauerDiagram::identity(int n) { return permutation(Permutation::identity(n)); }

BrauerDiagram BrauerDiagram::s(int n, int i) {
  check_index(n, i, n - 1);
  return permutation(Permutation::simple(n, i));
}

BrauerDiagram BrauerDiagram::e(int n, int i) {
  check_index(n, i, n - 1);
  BrauerDiagram d = identity(n);
  int a = i - 1, b = i;
  d.partner_[a] = b;
  d.partner_[b] = a;
  d.partner_[n + a] = n + b;
  d.partner_[n + b] = n + a;
  return d;
}

BrauerDiagram BrauerDiagram::permutation(const Permutation& w) {
  int n = w.n();
  std::vector<int> p(2 * n);
  for (int i = 1; i <= n; ++i) {
    p[i - 1] = n + w(i) - 1;
    p[n + w(i) - 1] = i - 1;
  }
  BrauerDiagram d;
  d.n_ = n;
  d.partner_ = std::move(p);
  return d;
}

int BrauerDiagram::through_strands() const {
  int t = 0;
  for (int v = 0; v < n_; ++v)
    if (partner_[v] >= n_) ++t;
  return t;
}

Permutation BrauerDiagram::to_permutation() const {
  if (!is_permutation()) throw std::domain_error("diagram has horizontal strands");
  std::vector<int> img(n_);
  for (int i = 0; i < n_; ++i) img[i] = partner_[i] - n_ + 1;
  return Permutation(img);
}

bool BrauerDiagram::is_planar() const {
  // Boundary order p_1 < ... < p_n < q_n < ... < q_1.
  auto pos = [&](int v) { return v < n_ ? v : 3 * n_ - 1 - v; };
  std::vector<std::pair<int, int>> chords;
  for (int v = 0; v < 2 * n_; ++v) {
    int w = partner_[v];
    if (v < w) chords.emplace_back(std::min(pos(v), pos(w)), std::max(pos(v), pos(w)));
  }
  for (const auto& [a, b] : chords)
    for (const auto& [c, d] : chords)
      if (a < c && c < b && b < d) return false;
  return true;
}

std::vector<std::pair<int, int>> BrauerDiagram::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int v = 0; v < 2 * n_; ++v)
    if (v < partner_[v]) out.emplace_back(v, partner_[v]);
  return out;
}

std::string BrauerDiagram::str() const {
  std::string s = "{";
  for (const auto& [a, b] : pairs()) {
    if (s.size() > 1) s += ",";
    s += vertex_name(n_, a) + "-" + vertex_name(n_, b);
  }
  return s + "}";
}

nlohmann::json BrauerDiagram::to_json() const {
  nlohmann::json ps = nlohmann::json::array();
  for (const auto& [a, b] : pairs()) ps.push_back({vertex_name(n_, a), vertex_name(n_, b)});
  return {{"n", n_}, {"pairs", ps}};
}

std::pair<BrauerDiagram, int> brauer_compose(const BrauerDiagram& d1, const BrauerDiagram& d2) {
  if (d1.n() != d2.n()) throw StructuralError("composing Brauer diagrams of different sizes");
  int n = d1.n();
  // Top row 0..n-1, middle row n..2n-1, bottom row 2n..3n-1.
  UnionFind uf(3 * n);
  for (int v = 0; v < 2 * n; ++v) {
    uf.unite(v, d1.partner(v));
    uf.unite(n + v, n + d2.partner(v));
  }
  std::vector<int> outer_count(3 * n, 0);
  std::vector<int> first(3 * n, -1);
  std::vector<int> partner(2 * n, -1);
  auto outer_id = [&](int x) { return x < n ? x : x - n; };
  for (int x = 0; x < 3 * n; ++x) {
    if (x >= n && x < 2 * n) continue;
    int r = uf.find(x);
    ++outer_count[r];
    if (first[r] < 0) {
      first[r] = x;
    } else {
      partner[outer_id(x)] = outer_id(first[r]);
      partner[outer_id(first[r])] = outer_id(x);
    }
  }
  int loops = 0;
  std::vector<char> seen(3 * n, 0);
  for (int x = n; x < 2 * n; ++x) {
    int r = uf.find(x);
    if (outer_count[r] == 0 && !seen[r]) {
      seen[r] = 1;
      ++loops;
    }
  }
  return {BrauerDiagram(n, std::move(partner)), loops};
}

BrauerDiagram diagram_involution(const BrauerDiagram& d) {
  int n = d.n();
  auto flip = [n](int v) { return v < n ? v + n : v - n; };
  std::vector<int> p(2 * n);
  for (int v = 0; v < 2 * n; ++v) p[flip(v)] = flip(d.partner(v));
  return BrauerDiagram(n, std::move(p));
}

std::vector<BrauerDiagram> brauer_basis(int n) {
  std::vector<BrauerDiagram> out;
  std::vector<int> p(2 * n, -1);
  auto rec = [&](auto&& self) -> void {
    int v = 0;
    while (v < 2 * n && p[v] >= 0) ++v;
    if (v == 2 * n) {
      out.emplace_back(n, p);
      return;
    }
    for (int w = v + 1; w < 2 * n; ++w) {
      if (p[w] >= 0) continue;
      p[v] = w;
      p[w] = v;
      self(self);
      p[v] = p[w] = -1;
    }
  };
  rec(rec);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BrauerDiagram> tl_basis(int n) {
  std::vector<BrauerDiagram> out;
  for (auto& d : brauer_basis(n))
    if (d.is_planar()) out.push_back(std::move(d));
  return out;
}

SetPartitionDiagram::SetPartitionDiagram(int n, const std::vector<int>& block) : n_(n) {
  if (n < 0 || static_cast<int>(block.size()) != 2 * n) throw StructuralError("set partition diagram of wrong size");
  std::map<int, int> relabel;
  block_.resize(2 * n);
  for (int v = 0; v < 2 * n; ++v) {
    auto it = relabel.find(block[v]);
    if (it == relabel.end()) it = relabel.emplace(block[v], static_cast<int>(relabel.size())).first;
    block_[v] = it->second;
  }
}

SetPartitionDiagram SetPartitionDiagram::from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
  std::vector<int> lab(2 * n, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (int v : blocks[b]) {
      if (v < 0 || v >= 2 * n || lab[v] >= 0) throw StructuralError("blocks do not partition the vertices");
      lab[v] = static_cast<int>(b);
    }
  for (int x : lab)
    if (x < 0) throw StructuralError("blocks do not cover the vertices");
  return SetPartitionDiagram(n, lab);
}

SetPartitionDiagram SetPartitionDiagram::identity(int n) { return permutation(Permutation::identity(n)); }

SetPartitionDiagram SetPartitionDiagram::permutation(const Permutation& w) {
  int n = w.n();
  std::vector<int> lab(2 * n);
  for (int i = 1; i <= n; ++i) lab[i - 1] = lab[n + w(i) - 1] = i;
  return SetPartitionDiagram(n, lab);
}

SetPartitionDiagram SetPartitionDiagram::t_s(int n, int i) {
  check_index(n, i, n - 1);
  return permutation(Permutation::simple(n, i));
}

SetPartitionDiagram SetPartitionDiagram::p(int n, int i) {
  check_index(n, i, n);
  std::vector<int> lab(2 * n);
  for (int k = 0; k < n; ++k) lab[k] = lab[n + k] = k;
  lab[n + i - 1] = n;
  return SetPartitionDiagram(n, lab);
}

SetPartitionDiagram SetPartitionDiagram::p_half(int n, int i) {
  check_index(n, i, n - 1);
  std::vector<int> lab(2 * n);
  for (int k = 0; k < n; ++k) lab[k] = lab[n + k] = k;
  lab[i] = lab[n + i] = i - 1;
  return SetPartitionDiagram(n, lab);
}

int SetPartitionDiagram::num_blocks() const {
  return block_.empty() ? 0 : *std::max_element(block_.begin(), block_.end()) + 1;
}

std::vector<std::vector<int>> SetPartitionDiagram::blocks() const {
  std::vector<std::vector<int>> out(num_blocks());
  for (int v = 0; v < 2 * n_; ++v) out[block_[v]].push_back(v);
  return out;
}

int SetPartitionDiagram::propagating_blocks() const {
  int count = 0;
  for (const auto& b : blocks())
    if (b.front() < n_ && b.back() >= n_) ++count;
  return count;
}

bool SetPartitionDiagram::is_permutation() const { return num_blocks() == n_ && propagating_blocks() == n_; }

Permutation SetPartitionDiagram::to_permutation() const {
  if (!is_permutation()) throw std::domain_error("diagram is not a permutation");
  std::vector<int> img(n_);
  for (const auto& b : blocks()) img[b[0]] = b[1] - n_ + 1;
  return Permutation(img);
}

std::string SetPartitionDiagram::str() const {
  std::string s;
  for (const auto& b : blocks()) {
    s += "{";
    for (std::size_t k = 0; k < b.size(); ++k) s += (k ? "," : "") + vertex_name(n_, b[k]);
    s += "}";
  }
  return s.empty() ? "{}" : s;
}

nlohmann::json SetPartitionDiagram::to_json() const {
  nlohmann::json bs = nlohmann::json::array();
  for (const auto& b : blocks()) {
    nlohmann::json jb = nlohmann::json::array();
    for (int v : b) jb.push_back(vertex_name(n_, v));
    bs.push_back(jb);
  }
  return {{"n", n_}, {"blocks", bs}};
}

std::pair<SetPartitionDiagram, int> partition_compose(const SetPartitionDiagram& d1, const SetPartitionDiagram& d2) {
  if (d1.n() != d2.n()) throw StructuralError("composing partition diagrams of different sizes");
  int n = d1.n();
  UnionFind uf(3 * n);
  std::vector<int> rep1(2 * n, -1), rep2(2 * n, -1);
  for (int v = 0; v < 2 * n; ++v) {
    int b1 = d1.block_of(v), b2 = d2.block_of(v);
    if (rep1[b1] < 0) rep1[b1] = v;
    else uf.unite(v, rep1[b1]);
    if (rep2[b2] < 0) rep2[b2] = v;
    else uf.unite(n + v, n + rep2[b2]);
  }
  std::vector<char> outer(3 * n, 0);
  std::vector<int> lab(2 * n);
  for (int x = 0; x < 3 * n; ++x) {
    if (x >= n && x < 2 * n) continue;
    int r = uf.find(x);
    outer[r] = 1;
    lab[x < n ? x : x - n] = r;
  }
  int removed = 0;
  std::vector<char> seen(3 * n, 0);
  for (int x = n; x < 2 * n; ++x) {
    int r = uf.find(x);
    if (!outer[r] && !seen[r]) {
      seen[r] = 1;
      ++removed;
    }
  }
  return {SetPartitionDiagram(n, lab), removed};
}

SetPartitionDiagram diagram_involution(const SetPartitionDiagram& d) {
  int n = d.n();
  std::vector<int> lab(2 * n);
  for (int v = 0; v < n; ++v) {
    lab[v] = d.block_of(n + v);
    lab[n + v] = d.block_of(v);
  }
  return SetPartitionDiagram(n, lab);
}

std::vector<SetPartitionDiagram> partition_basis(int n) {
  // Restricted growth strings are exactly the canonical label vectors.
  std::vector<SetPartitionDiagram> out;
  std::vector<int> lab(2 * n, 0);
  auto rec = [&](auto&& self, int v, int used) -> void {
    if (v == 2 * n) {
      out.emplace_back(n, lab);
      return;
    }
    for (int b = 0; b <= used; ++b) {
      lab[v] = b;
      self(self, v + 1, std::max(used, b + 1));
    }
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SetPartitionDiagram> half_level_subalgebra_basis(int n) {
  if (n < 1) throw std::domain_error("half levels start at n = 1");
  std::vector<SetPartitionDiagram> out;
  for (auto& d : partition_basis(n))
    if (d.in_half_level()) out.push_back(std::move(d));
  return out;
}

namespace {

template <class E>
LVec quotient_impl(const E& x, int n) {
  const SymTable& tab = sym_table(n);
  LVec out;
  for (const auto& [d, c] : x.coeffs()) {
    if (d.n() != n) throw StructuralError("diagram of the wrong size");
    if (!d.is_permutation()) continue;
    axpy(out, c, LVec{{tab.index(d.to_permutation()), LaurentPoly(1)}});
  }
  return out;
}

}  // namespace

LVec quotient_to_symmetric(const BrauerElement& x, int n) { return quotient_impl(x, n); }
LVec quotient_to_symmetric(const PartitionElement& x, int n) { return quotient_impl(x, n); }

LVec sym_group_mul(int n, const LVec& a, const LVec& b) {
  const SymTable& tab = sym_table(n);
  LVec out;
  for (const auto& [u, cu] : a)
    for (const auto& [v, cv] : b) axpy(out, cu * cv, LVec{{tab.index(tab.perms[u] * tab.perms[v]), LaurentPoly(1)}});
  return out;
}

}  // namespace ctow
