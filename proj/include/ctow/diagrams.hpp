#pragma once

// Brauer, Temperley-Lieb and partition diagrams with their stacking products.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ctow/coeff.hpp"
#include "ctow/combinatorics.hpp"
#include "ctow/linalg.hpp"

namespace ctow {

// Vertices 0..n-1 are the top row p_1..p_n, vertices n..2n-1 the bottom row
// q_1..q_n. partner[v] is the vertex joined to v.
class BrauerDiagram {
 public:
  BrauerDiagram() = default;
  BrauerDiagram(int n, std::vector<int> partner);
  static BrauerDiagram identity(int n);
  static BrauerDiagram s(int n, int i);
  static BrauerDiagram e(int n, int i);
  // Top i joined to bottom w(i).
  static BrauerDiagram permutation(const Permutation& w);

  int n() const { return n_; }
  int partner(int v) const { return partner_.at(v); }
  const std::vector<int>& partners() const { return partner_; }
  int through_strands() const;
  bool is_permutation() const { return through_strands() == n_; }
  Permutation to_permutation() const;
  bool is_planar() const;
  // Pairs (u, v) with u < v, sorted.
  std::vector<std::pair<int, int>> pairs() const;

  std::string str() const;
  nlohmann::json to_json() const;

  friend bool operator==(const BrauerDiagram& a, const BrauerDiagram& b) {
    return a.n_ == b.n_ && a.partner_ == b.partner_;
  }
  friend bool operator!=(const BrauerDiagram& a, const BrauerDiagram& b) { return !(a == b); }
  friend bool operator<(const BrauerDiagram& a, const BrauerDiagram& b) {
    return a.n_ != b.n_ ? a.n_ < b.n_ : a.partner_ < b.partner_;
  }

 private:
  int n_ = 0;
  std::vector<int> partner_;
};

// d1 placed above d2; returns the composite and the number of closed loops.
std::pair<BrauerDiagram, int> brauer_compose(const BrauerDiagram& d1, const BrauerDiagram& d2);
BrauerDiagram diagram_involution(const BrauerDiagram& d);
std::vector<BrauerDiagram> brauer_basis(int n);
std::vector<BrauerDiagram> tl_basis(int n);

// block[v] labels the block of vertex v; labels are assigned in order of
// first appearance so equal set partitions have equal label vectors.
class SetPartitionDiagram {
 public:
  SetPartitionDiagram() = default;
  SetPartitionDiagram(int n, const std::vector<int>& block);
  static SetPartitionDiagram from_blocks(int n, const std::vector<std::vector<int>>& blocks);
  static SetPartitionDiagram identity(int n);
  static SetPartitionDiagram permutation(const Permutation& w);
  static SetPartitionDiagram t_s(int n, int i);
  // p_i: vertices i and i-bar are singletons.
  static SetPartitionDiagram p(int n, int i);
  // p_{i+1/2}: {i, i+1, i-bar, i+1-bar} is a block.
  static SetPartitionDiagram p_half(int n, int i);

  int n() const { return n_; }
  int block_of(int v) const { return block_.at(v); }
  const std::vector<int>& labels() const { return block_; }
  int num_blocks() const;
  std::vector<std::vector<int>> blocks() const;
  int propagating_blocks() const;
  bool is_permutation() const;
  Permutation to_permutation() const;
  // Whether p_n and q_n share a block.
  bool in_half_level() const { return n_ > 0 && block_[n_ - 1] == block_[2 * n_ - 1]; }

  std::string str() const;
  nlohmann::json to_json() const;

  friend bool operator==(const SetPartitionDiagram& a, const SetPartitionDiagram& b) {
    return a.n_ == b.n_ && a.block_ == b.block_;
  }
  friend bool operator!=(const SetPartitionDiagram& a, const SetPartitionDiagram& b) { return !(a == b); }
  friend bool operator<(const SetPartitionDiagram& a, const SetPartitionDiagram& b) {
    return a.n_ != b.n_ ? a.n_ < b.n_ : a.block_ < b.block_;
  }

 private:
  int n_ = 0;
  std::vector<int> block_;
};

std::pair<SetPartitionDiagram, int> partition_compose(const SetPartitionDiagram& d1, const SetPartitionDiagram& d2);
SetPartitionDiagram diagram_involution(const SetPartitionDiagram& d);
std::vector<SetPartitionDiagram> partition_basis(int n);
std::vector<SetPartitionDiagram> half_level_subalgebra_basis(int n);

inline std::pair<BrauerDiagram, int> compose(const BrauerDiagram& a, const BrauerDiagram& b) {
  return brauer_compose(a, b);
}
inline std::pair<SetPartitionDiagram, int> compose(const SetPartitionDiagram& a, const SetPartitionDiagram& b) {
  return partition_compose(a, b);
}

// Linear combinations of diagrams with coefficients in Z[delta].
template <class D>
class DiagramElement {
 public:
  using Map = std::map<D, LaurentPoly>;
  DiagramElement() = default;
  explicit DiagramElement(const D& d, LaurentPoly c = LaurentPoly(1)) {
    if (!c.is_zero()) c_.emplace(d, std::move(c));
  }
  static DiagramElement one(int n) { return DiagramElement(D::identity(n)); }

  const Map& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  LaurentPoly coeff(const D& d) const {
    auto it = c_.find(d);
    return it == c_.end() ? LaurentPoly(0) : it->second;
  }
  void add(const D& d, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto it = c_.find(d);
    if (it == c_.end()) {
      c_.emplace(d, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) c_.erase(it);
    }
  }

  DiagramElement& operator+=(const DiagramElement& o) {
    for (const auto& [d, c] : o.c_) add(d, c);
    return *this;
  }
  DiagramElement& operator-=(const DiagramElement& o) {
    for (const auto& [d, c] : o.c_) add(d, -c);
    return *this;
  }
  friend DiagramElement operator+(DiagramElement a, const DiagramElement& b) { return a += b; }
  friend DiagramElement operator-(DiagramElement a, const DiagramElement& b) { return a -= b; }
  friend DiagramElement operator*(const LaurentPoly& a, const DiagramElement& x) {
    DiagramElement r;
    if (a.is_zero()) return r;
    for (const auto& [d, c] : x.c_) r.c_.emplace(d, a * c);
    return r;
  }
  friend DiagramElement operator*(const DiagramElement& x, const DiagramElement& y) {
    DiagramElement r;
    for (const auto& [a, ca] : x.c_)
      for (const auto& [b, cb] : y.c_) {
        auto [d, loops] = compose(a, b);
        r.add(d, ca * cb * delta_pow(loops));
      }
    return r;
  }
  friend bool operator==(const DiagramElement& a, const DiagramElement& b) { return a.c_ == b.c_; }
  friend bool operator!=(const DiagramElement& a, const DiagramElement& b) { return !(a == b); }

  DiagramElement star() const {
    DiagramElement r;
    for (const auto& [d, c] : c_) r.add(diagram_involution(d), c);
    return r;
  }

  std::string str() const {
    if (c_.empty()) return "0";
    std::string s;
    for (const auto& [d, c] : c_) {
      if (!s.empty()) s += " + ";
      s += "(" + c.str() + ")" + d.str();
    }
    return s;
  }
  nlohmann::json to_json() const {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& [d, c] : c_) j.push_back({{"diagram", d.to_json()}, {"coeff", c.to_json()}});
    return j;
  }

 private:
  Map c_;
};

using BrauerElement = DiagramElement<BrauerDiagram>;
using PartitionElement = DiagramElement<SetPartitionDiagram>;

// Image in the group algebra of the symmetric group: diagrams that are not
// permutations are sent to zero. Keys are permutation indices in sym_table(n).
LVec quotient_to_symmetric(const BrauerElement& x, int n);
LVec quotient_to_symmetric(const PartitionElement& x, int n);
LVec sym_group_mul(int n, const LVec& a, const LVec& b);

}  // namespace ctow
