#include "ctow/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ctow {

// ---------------------------------------------------------------- partitions

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0 || (i > 0 && parts[i] > parts[i - 1]))
      throw StructuralError("partition parts must be positive and weakly decreasing");
  }
}

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string Partition::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts[i]);
  }
  return s + ")";
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int maxpart) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int k = std::min(rest, maxpart); k >= 1; --k) {
      cur.push_back(k);
      rec(rest - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

bool dominance_geq(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) throw StructuralError("dominance of partitions of different sizes");
  int sa = 0, sb = 0;
  int len = std::max(a.length(), b.length());
  for (int i = 0; i < len; ++i) {
    sa += a[i];
    sb += b[i];
    if (sa < sb) return false;
  }
  return true;
}

bool dominance_gt(const Partition& a, const Partition& b) { return a != b && dominance_geq(a, b); }

std::vector<Node> removable_nodes(const Partition& p) {
  std::vector<Node> out;
  for (int r = p.length() - 1; r >= 0; --r) {
    if (p[r] > p[r + 1]) out.push_back({r + 1, p[r]});
  }
  return out;
}

std::vector<Node> addable_nodes(const Partition& p) {
  std::vector<Node> out;
  for (int r = 0; r <= p.length(); ++r) {
    if (r == 0 || p[r] < p[r - 1]) out.push_back({r + 1, p[r] + 1});
  }
  return out;
}

Partition add_node(const Partition& p, const Node& x) {
  std::vector<int> v = p.parts;
  if (x.row == p.length() + 1) v.push_back(0);
  if (x.row < 1 || x.row > static_cast<int>(v.size()) || v[x.row - 1] + 1 != x.col)
    throw std::domain_error("node is not addable");
  v[x.row - 1]++;
  return Partition(v);
}

Partition remove_node(const Partition& p, const Node& x) {
  if (x.row < 1 || x.row > p.length() || p[x.row - 1] != x.col || p[x.row] >= x.col)
    throw std::domain_error("node is not removable");
  std::vector<int> v = p.parts;
  v[x.row - 1]--;
  return Partition(v);
}

// -------------------------------------------------------------- permutations

Permutation::Permutation(std::vector<int> one_line) : img_(std::move(one_line)) {
  std::vector<bool> seen(img_.size() + 1, false);
  for (int v : img_) {
    if (v < 1 || v > static_cast<int>(img_.size()) || seen[v])
      throw StructuralError("not a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(v);
}

Permutation Permutation::simple(int n, int i) { return identity(n).times_simple(i); }

Permutation Permutation::from_word(int n, const std::vector<int>& word) {
  Permutation w = identity(n);
  for (int i : word) w = w.times_simple(i);
  return w;
}

int Permutation::length() const {
  int inv = 0;
  for (std::size_t i = 0; i < img_.size(); ++i)
    for (std::size_t j = i + 1; j < img_.size(); ++j)
      if (img_[i] > img_[j]) ++inv;
  return inv;
}

bool Permutation::right_ascent(int i) const {
  if (i < 1 || i >= n()) throw StructuralError("generator index out of range");
  auto pi = std::find(img_.begin(), img_.end(), i);
  auto pj = std::find(img_.begin(), img_.end(), i + 1);
  return pi < pj;
}

bool Permutation::left_ascent(int i) const {
  if (i < 1 || i >= n()) throw StructuralError("generator index out of range");
  return img_[i - 1] < img_[i];
}

Permutation Permutation::times_simple(int i) const {
  if (i < 1 || i >= n()) throw StructuralError("generator index out of range");
  Permutation w = *this;
  for (int& v : w.img_) {
    if (v == i)
      v = i + 1;
    else if (v == i + 1)
      v = i;
  }
  return w;
}

Permutation Permutation::simple_times(int i) const {
  if (i < 1 || i >= n()) throw StructuralError("generator index out of range");
  Permutation w = *this;
  std::swap(w.img_[i - 1], w.img_[i]);
  return w;
}

std::vector<int> Permutation::reduced_word() const {
  std::vector<int> rev;
  Permutation w = *this;
  for (;;) {
    int i = 1;
    while (i < w.n() && w.right_ascent(i)) ++i;
    if (i >= w.n()) break;
    rev.push_back(i);
    w = w.times_simple(i);
  }
  return {rev.rbegin(), rev.rend()};
}

Permutation Permutation::inverse() const {
  std::vector<int> v(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) v[img_[i] - 1] = static_cast<int>(i) + 1;
  return Permutation(v);
}

Permutation operator*(const Permutation& u, const Permutation& v) {
  if (u.n() != v.n()) throw StructuralError("permutation size mismatch");
  std::vector<int> w(u.n());
  for (int x = 1; x <= u.n(); ++x) w[x - 1] = v(u(x));
  return Permutation(w);
}

std::string Permutation::cycle_str() const {
  std::string s;
  std::vector<bool> seen(img_.size() + 1, false);
  for (int x = 1; x <= n(); ++x) {
    if (seen[x] || (*this)(x) == x) continue;
    s += "(";
    int y = x;
    bool first = true;
    while (!seen[y]) {
      seen[y] = true;
      if (!first) s += ",";
      s += std::to_string(y);
      first = false;
      y = (*this)(y);
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::vector<Permutation> young_subgroup(const Partition& p) {
  std::vector<int> row_of;
  for (int r = 0; r < p.length(); ++r)
    for (int c = 0; c < p[r]; ++c) row_of.push_back(r);
  std::vector<Permutation> out;
  for (const auto& w : all_permutations(p.size())) {
    bool ok = true;
    for (int x = 1; x <= w.n() && ok; ++x) ok = row_of[x - 1] == row_of[w(x) - 1];
    if (ok) out.push_back(w);
  }
  return out;
}

// ------------------------------------------------------------------ tableaux

Partition Tableau::shape() const {
  std::vector<int> v;
  for (const auto& r : rows) v.push_back(static_cast<int>(r.size()));
  return Partition(v);
}

int Tableau::size() const {
  int s = 0;
  for (const auto& r : rows) s += static_cast<int>(r.size());
  return s;
}

Node Tableau::find(int k) const {
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c)
      if (rows[r][c] == k) return {static_cast<int>(r) + 1, static_cast<int>(c) + 1};
  throw StructuralError("entry not in tableau");
}

bool Tableau::is_row_standard() const {
  for (const auto& r : rows)
    for (std::size_t c = 1; c < r.size(); ++c)
      if (r[c - 1] >= r[c]) return false;
  return true;
}

bool Tableau::is_standard() const {
  if (!is_row_standard()) return false;
  for (std::size_t r = 1; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c)
      if (rows[r - 1][c] >= rows[r][c]) return false;
  return true;
}

Partition Tableau::restrict_shape(int k) const {
  std::vector<int> v;
  for (const auto& r : rows) {
    int cnt = 0;
    for (int x : r)
      if (x <= k) ++cnt;
    v.push_back(cnt);
  }
  std::sort(v.rbegin(), v.rend());
  return Partition(v);
}

Tableau Tableau::remove_max() const {
  Tableau t = *this;
  Node x = find(size());
  if (static_cast<int>(t.rows[x.row - 1].size()) != x.col) throw StructuralError("maximal entry not at row end");
  t.rows[x.row - 1].pop_back();
  if (t.rows[x.row - 1].empty()) t.rows.erase(t.rows.begin() + (x.row - 1));
  return t;
}

std::string Tableau::str() const {
  std::string s;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r) s += ",";
    s += "[";
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (c) s += ",";
      s += std::to_string(rows[r][c]);
    }
    s += "]";
  }
  return s;
}

nlohmann::json Tableau::to_json() const { return rows; }

Tableau superstandard_tableau(const Partition& p) {
  Tableau t;
  int k = 1;
  for (int r = 0; r < p.length(); ++r) {
    t.rows.emplace_back();
    for (int c = 0; c < p[r]; ++c) t.rows.back().push_back(k++);
  }
  return t;
}

std::vector<Tableau> standard_tableaux(const Partition& p) {
  // Grow row sequences lexicographically: entry k goes to a row r where it
  // keeps the filling standard.
  std::vector<Tableau> out;
  int n = p.size();
  Tableau cur;
  cur.rows.assign(p.length(), {});
  std::function<void(int)> rec = [&](int k) {
    if (k > n) {
      out.push_back(cur);
      return;
    }
    for (int r = 0; r < p.length(); ++r) {
      int len = static_cast<int>(cur.rows[r].size());
      if (len >= p[r]) continue;
      if (r > 0 && static_cast<int>(cur.rows[r - 1].size()) <= len) continue;
      cur.rows[r].push_back(k);
      rec(k + 1);
      cur.rows[r].pop_back();
    }
  };
  rec(1);
  return out;
}

Permutation tableau_permutation(const Tableau& t) {
  Tableau s = superstandard_tableau(t.shape());
  std::vector<int> img(t.size());
  for (std::size_t r = 0; r < t.rows.size(); ++r)
    for (std::size_t c = 0; c < t.rows[r].size(); ++c) img[s.rows[r][c] - 1] = t.rows[r][c];
  return Permutation(img);
}

Tableau act(const Tableau& t, const Permutation& w) {
  Tableau u = t;
  for (auto& r : u.rows)
    for (int& x : r) x = w(x);
  return u;
}

bool tableau_dominance_geq(const Tableau& s, const Tableau& t) {
  if (s.size() != t.size()) throw StructuralError("tableaux of different sizes");
  for (int k = 1; k <= s.size(); ++k)
    if (!dominance_geq(s.restrict_shape(k), t.restrict_shape(k))) return false;
  return true;
}

bool tableau_dominance_gt(const Tableau& s, const Tableau& t) {
  return s != t && tableau_dominance_geq(s, t);
}

namespace {

bool in_garnir_strip(const Partition& p, const Node& g, const Node& y) {
  if (y.row == g.row) return y.col >= g.col && y.col <= p[g.row - 1];
  if (y.row == g.row + 1) return y.col <= g.col;
  return false;
}

}  // namespace

Tableau garnir_tableau(const Partition& p, const Node& x) {
  if (x.row < 1 || x.col < 1 || x.row >= p.length() || p[x.row] < x.col || p[x.row - 1] < x.col)
    throw std::domain_error("not a Garnir node");
  Tableau t = superstandard_tableau(p);
  int a = t.at(x);
  int k = a;
  for (int c = 1; c <= x.col; ++c) t.rows[x.row][c - 1] = k++;
  for (int c = x.col; c <= p[x.row - 1]; ++c) t.rows[x.row - 1][c - 1] = k++;
  return t;
}

bool agrees_outside_garnir_strip(const Tableau& t, const Node& x) {
  Partition p = t.shape();
  Tableau s = superstandard_tableau(p);
  for (int r = 1; r <= p.length(); ++r)
    for (int c = 1; c <= p[r - 1]; ++c)
      if (!in_garnir_strip(p, x, {r, c}) && t.at({r, c}) != s.at({r, c})) return false;
  return true;
}

// ------------------------------------------------------ semistandard tableaux

Partition SemistandardTableau::shape() const {
  std::vector<int> v;
  for (const auto& r : rows) v.push_back(static_cast<int>(r.size()));
  return Partition(v);
}

Partition SemistandardTableau::type() const {
  std::vector<int> cnt;
  for (const auto& r : rows)
    for (int x : r) {
      if (static_cast<int>(cnt.size()) < x) cnt.resize(x, 0);
      cnt[x - 1]++;
    }
  return Partition(cnt);
}

bool SemistandardTableau::is_semistandard() const {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (c > 0 && rows[r][c - 1] > rows[r][c]) return false;
      if (r > 0 && rows[r - 1][c] >= rows[r][c]) return false;
    }
  }
  return true;
}

std::string SemistandardTableau::str() const { return Tableau{rows}.str(); }

std::vector<SemistandardTableau> semistandard_tableaux(const Partition& shape, const Partition& type) {
  // Successive horizontal strips: the entries equal to i form a horizontal
  // strip of size type_i.
  std::vector<SemistandardTableau> out;
  if (shape.size() != type.size()) return out;
  SemistandardTableau cur;
  cur.rows.assign(shape.length(), {});
  std::function<void(int, int, int)> place = [&](int value, int row, int left) {
    int k = type.length();
    if (value > k) {
      out.push_back(cur);
      return;
    }
    if (left == 0) {
      place(value + 1, 0, value + 1 <= k ? type[value] : 0);
      return;
    }
    if (row >= shape.length()) return;
    // Number of copies of value to put into this row: limited by the shape
    // and by the row above holding strictly smaller entries.
    int len = static_cast<int>(cur.rows[row].size());
    int cap = shape[row] - len;
    if (row > 0) {
      int above = 0;
      for (int x : cur.rows[row - 1])
        if (x < value) ++above;
      cap = std::min(cap, above - len);
    }
    for (int m = std::min(cap, left); m >= 0; --m) {
      for (int j = 0; j < m; ++j) cur.rows[row].push_back(value);
      place(value, row + 1, left - m);
      for (int j = 0; j < m; ++j) cur.rows[row].pop_back();
    }
  };
  place(1, 0, type.length() > 0 ? type[0] : 0);
  std::sort(out.begin(), out.end());
  return out;
}

SemistandardTableau type_tableau(const Tableau& t, const Partition& mu) {
  std::vector<int> row_of;
  for (int r = 0; r < mu.length(); ++r)
    for (int c = 0; c < mu[r]; ++c) row_of.push_back(r + 1);
  SemistandardTableau s;
  for (const auto& r : t.rows) {
    s.rows.emplace_back();
    for (int x : r) s.rows.back().push_back(row_of.at(x - 1));
  }
  return s;
}

SemistandardTableau superstandard_semistandard(const Partition& mu) {
  SemistandardTableau s;
  for (int r = 0; r < mu.length(); ++r) s.rows.emplace_back(mu[r], r + 1);
  return s;
}

// --------------------------------------------------------- branching diagrams

std::string Vertex::str() const { return "(" + lambda.str() + ";" + std::to_string(l) + ")"; }

bool vertex_gt(const Vertex& a, const Vertex& b) {
  if (a.l != b.l) return a.l > b.l;
  if (a.lambda.size() != b.lambda.size()) return false;
  return dominance_gt(a.lambda, b.lambda);
}

bool vertex_geq(const Vertex& a, const Vertex& b) { return a == b || vertex_gt(a, b); }

int BranchingDiagram::index_of(int k, const Vertex& v) const {
  if (k < 0 || k > depth()) return -1;
  auto it = index_[k].find(v);
  return it == index_[k].end() ? -1 : it->second;
}

bool BranchingDiagram::has_edge(int k, const Vertex& from, const Vertex& to) const {
  int a = index_of(k, from), b = index_of(k + 1, to);
  if (a < 0 || b < 0) return false;
  const auto& s = succ_[k][a];
  return std::binary_search(s.begin(), s.end(), b);
}

void BranchingDiagram::add_level(std::vector<Vertex> vs) {
  std::map<Vertex, int> idx;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (!idx.emplace(vs[i], static_cast<int>(i)).second) throw StructuralError("duplicate vertex in level");
  }
  succ_.emplace_back(vs.size());
  pred_.emplace_back(vs.size());
  levels_.push_back(std::move(vs));
  index_.push_back(std::move(idx));
}

void BranchingDiagram::add_edge(int k, int from, int to) { succ_.at(k).at(from).push_back(to); }

void BranchingDiagram::finalize() {
  for (auto& lvl : pred_)
    for (auto& p : lvl) p.clear();
  for (int k = 0; k < static_cast<int>(succ_.size()); ++k) {
    for (int v = 0; v < static_cast<int>(succ_[k].size()); ++v) {
      auto& s = succ_[k][v];
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
      for (int w : s) pred_.at(k + 1).at(w).push_back(v);
    }
  }
}

bool BranchingDiagram::valid(std::string* why) const {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  if (levels_.empty() || levels_[0].size() != 1) return fail("level 0 is not a singleton");
  for (int k = 0; k <= depth(); ++k) {
    for (int v = 0; v < static_cast<int>(levels_[k].size()); ++v) {
      if (k > 0 && pred_[k][v].empty()) return fail("vertex without predecessor at level " + std::to_string(k));
      if (k < depth() && succ_[k][v].empty()) return fail("vertex without successor at level " + std::to_string(k));
    }
  }
  return true;
}

BranchingDiagram young_lattice(int depth) {
  BranchingDiagram d;
  for (int k = 0; k <= depth; ++k) {
    std::vector<Vertex> vs;
    for (auto& p : partitions_of(k)) vs.push_back({p, 0});
    d.add_level(vs);
  }
  for (int k = 0; k < depth; ++k) {
    const auto& lv = d.level(k);
    for (int v = 0; v < static_cast<int>(lv.size()); ++v)
      for (const Node& x : addable_nodes(lv[v].lambda))
        d.add_edge(k, v, d.index_of(k + 1, {add_node(lv[v].lambda, x), 0}));
  }
  d.finalize();
  return d;
}

BranchingDiagram trivial_chain(int depth) {
  BranchingDiagram d;
  for (int k = 0; k <= depth; ++k) d.add_level({Vertex{}});
  for (int k = 0; k < depth; ++k) d.add_edge(k, 0, 0);
  d.finalize();
  return d;
}

BranchingDiagram doubled_young_lattice(int depth) {
  BranchingDiagram d;
  for (int k = 0; k <= depth; ++k) {
    std::vector<Vertex> vs;
    for (auto& p : partitions_of(k / 2)) vs.push_back({p, 0});
    d.add_level(vs);
  }
  for (int k = 0; k < depth; ++k) {
    const auto& lv = d.level(k);
    for (int v = 0; v < static_cast<int>(lv.size()); ++v) {
      if (k % 2 == 0) {
        d.add_edge(k, v, v);
      } else {
        for (const Node& x : addable_nodes(lv[v].lambda))
          d.add_edge(k, v, d.index_of(k + 1, {add_node(lv[v].lambda, x), 0}));
      }
    }
  }
  d.finalize();
  return d;
}

BranchingDiagram reflect_branching(const BranchingDiagram& h, int depth) {
  if (h.depth() < depth) throw StructuralError("input diagram too shallow for reflection");
  BranchingDiagram a;
  for (int n = 0; n <= depth; ++n) {
    std::vector<Vertex> vs;
    for (int l = 0; 2 * l <= n; ++l)
      for (const Vertex& v : h.level(n - 2 * l)) vs.push_back({v.lambda, l});
    a.add_level(vs);
  }
  for (int n = 0; n < depth; ++n) {
    const auto& lv = a.level(n);
    for (int i = 0; i < static_cast<int>(lv.size()); ++i) {
      const Vertex& v = lv[i];
      int k = n - 2 * v.l;
      int hv = h.index_of(k, {v.lambda, 0});
      for (int w : h.successors(k, hv))
        a.add_edge(n, i, a.index_of(n + 1, {h.level(k + 1)[w].lambda, v.l}));
      if (k >= 1)
        for (int w : h.predecessors(k, hv))
          a.add_edge(n, i, a.index_of(n + 1, {h.level(k - 1)[w].lambda, v.l + 1}));
    }
  }
  a.finalize();
  return a;
}

std::vector<Path> paths_to(const BranchingDiagram& d, int k, int v) {
  if (k == 0) return {Path{{v}}};
  std::vector<Path> out;
  for (int p : d.predecessors(k, v)) {
    for (Path s : paths_to(d, k - 1, p)) {
      s.idx.push_back(v);
      out.push_back(std::move(s));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t count_paths(const BranchingDiagram& d, int k, int v) {
  std::vector<std::int64_t> cur{1};
  for (int j = 1; j <= k; ++j) {
    std::vector<std::int64_t> nxt(d.level(j).size(), 0);
    for (int w = 0; w < static_cast<int>(nxt.size()); ++w)
      for (int p : d.predecessors(j, w)) nxt[w] += cur[p];
    cur = std::move(nxt);
  }
  return cur.at(v);
}

bool reverse_lex_leq(const BranchingDiagram& d, const Path& s, const Path& t) {
  if (s.length() != t.length()) throw StructuralError("paths of different lengths are incomparable");
  for (int j = s.length(); j >= 0; --j) {
    if (s.idx[j] != t.idx[j]) return d.level(j)[s.idx[j]] < d.level(j)[t.idx[j]];
  }
  return true;
}

std::string path_str(const BranchingDiagram& d, const Path& p) {
  std::string s;
  for (int j = 0; j <= p.length(); ++j) {
    if (j) s += " ";
    s += d.level(j)[p.idx[j]].str();
  }
  return s;
}

nlohmann::json path_json(const BranchingDiagram& d, const Path& p) {
  nlohmann::json j = nlohmann::json::array();
  for (int k = 0; k <= p.length(); ++k) {
    const Vertex& v = d.level(k)[p.idx[k]];
    j.push_back(v.lambda.str() + ";" + std::to_string(v.l));
    j.back() = "(" + j.back().get<std::string>() + ")";
  }
  return j;
}

Tableau path_to_tableau(const BranchingDiagram& young, const Path& p) {
  Tableau t;
  for (int k = 1; k <= p.length(); ++k) {
    const Partition& a = young.level(k - 1)[p.idx[k - 1]].lambda;
    const Partition& b = young.level(k)[p.idx[k]].lambda;
    int r = 0;
    while (a[r] == b[r]) ++r;
    if (static_cast<int>(t.rows.size()) <= r) t.rows.resize(r + 1);
    t.rows[r].push_back(k);
  }
  return t;
}

Path tableau_to_path(const BranchingDiagram& young, const Tableau& t) {
  Path p;
  for (int k = 0; k <= t.size(); ++k) p.idx.push_back(young.index_of(k, {t.restrict_shape(k), 0}));
  return p;
}

// ------------------------------------------------------------------- counting

std::int64_t factorial(int n) {
  std::int64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

std::int64_t double_factorial_odd(int n) {
  std::int64_t f = 1;
  for (int i = 1; i <= 2 * n - 1; i += 2) f *= i;
  return f;
}

std::int64_t catalan(int n) {
  std::int64_t c = 1;
  for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

std::int64_t bell(int n) {
  // Bell triangle.
  std::vector<std::int64_t> row{1};
  for (int i = 0; i < n; ++i) {
    std::vector<std::int64_t> nxt{row.back()};
    for (std::int64_t x : row) nxt.push_back(nxt.back() + x);
    row = std::move(nxt);
  }
  return row.front();
}

}  // namespace ctow
