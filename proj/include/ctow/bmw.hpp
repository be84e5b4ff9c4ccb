#pragma once

// The Birman-Murakami-Wenzl algebra realised on tangle diagrams. Elements are
// combinations of canonical descending lifts of Brauer diagrams; products are
// computed by Kauffman skein reduction of stacked tangles.

#include <map>
#include <string>
#include <vector>

#include "ctow/coeff.hpp"
#include "ctow/diagrams.hpp"
#include "ctow/hecke.hpp"
#include "ctow/linalg.hpp"

namespace ctow {

enum class GenKind { G, GInv, E };

struct BMWToken {
  GenKind kind;
  int i;
  std::string str() const;
};
using BMWWord = std::vector<BMWToken>;

// A planar diagram of an (n,n)-tangle. Slots 0..n-1 are the top endpoints,
// n..2n-1 the bottom endpoints and 2n+4k+m is leg m of crossing k. Legs are
// numbered counterclockwise with the under strand joining legs 0 and 2.
struct Tangle {
  int n = 0;
  int loops = 0;  // free loops without crossings
  std::vector<int> link;
  std::vector<char> alive;

  int crossings() const { return static_cast<int>(alive.size()); }
  int live_crossings() const;
  int slot(int k, int m) const { return 2 * n + 4 * k + m; }
  bool is_leg(int s) const { return s >= 2 * n; }
  int crossing_of(int s) const { return (s - 2 * n) / 4; }
  int leg_of(int s) const { return (s - 2 * n) % 4; }

  // Straight chords between boundary points on a circle; at every crossing
  // the chord with the smaller layer passes over.
  static Tangle from_chords(int n, const std::vector<int>& partner, const std::vector<int>& layer);
  static Tangle generator(int n, const BMWToken& t);
  static Tangle identity(int n);
};

// a placed above b.
Tangle tangle_concat(const Tangle& a, const Tangle& b);
// Reflection in a horizontal line followed by exchanging over and under.
Tangle tangle_flip(const Tangle& t);
// The descending lift with zero self-writhe of a Brauer diagram.
Tangle canonical_lift(const BrauerDiagram& d);
// Skein reduction to a combination of canonical lifts.
std::map<BrauerDiagram, LaurentPoly> tangle_reduce(const Tangle& t);

// Highest rank for which normal forms are produced; defaults to 4.
int bmw_max_rank();
void set_bmw_max_rank(int n);
std::vector<BrauerDiagram> bmw_normal_forms(int n);

class BMWElement {
 public:
  using Map = std::map<BrauerDiagram, LaurentPoly>;
  BMWElement() = default;
  explicit BMWElement(int n) : n_(n) {}
  static BMWElement one(int n);
  static BMWElement basis(const BrauerDiagram& d);
  static BMWElement gen(int n, const BMWToken& t);
  static BMWElement word(int n, const BMWWord& w);
  static BMWElement g(int n, int i) { return gen(n, {GenKind::G, i}); }
  static BMWElement g_inv(int n, int i) { return gen(n, {GenKind::GInv, i}); }
  static BMWElement e(int n, int i) { return gen(n, {GenKind::E, i}); }
  // g_v along a reduced word of v.
  static BMWElement g_perm(const Permutation& v);
  // g_{i,j} = g_i ... g_{j-1} for j >= i and g_{i-1} ... g_j for i > j.
  static BMWElement g_range(int n, int i, int j);

  int n() const { return n_; }
  const Map& coeffs() const { return c_; }
  bool is_zero() const;  // zero in the fraction field
  LaurentPoly coeff(const BrauerDiagram& d) const;
  void add(const BrauerDiagram& d, const LaurentPoly& c);

  BMWElement& operator+=(const BMWElement& o);
  BMWElement& operator-=(const BMWElement& o);
  friend BMWElement operator+(BMWElement a, const BMWElement& b) { return a += b; }
  friend BMWElement operator-(BMWElement a, const BMWElement& b) { return a -= b; }
  friend BMWElement operator*(const LaurentPoly& a, const BMWElement& x);
  friend BMWElement operator*(const BMWElement& x, const BMWElement& y);
  // Equality in the fraction field, where delta is eliminated.
  friend bool operator==(const BMWElement& a, const BMWElement& b);
  friend bool operator!=(const BMWElement& a, const BMWElement& b) { return !(a == b); }

  BMWElement star() const;
  BMWElement embed(int m) const;
  // Coefficients over the index of bmw_normal_forms(n).
  LVec to_lvec() const;
  static BMWElement from_lvec(int n, const LVec& v);
  std::string str() const;
  nlohmann::json to_json() const;

 private:
  int n_ = 0;
  Map c_;
};

BMWElement bmw_mul_gen(const BMWElement& x, const BMWToken& t);
BMWElement bmw_gen_mul(const BMWToken& t, const BMWElement& x);

// Lifts of the Hecke branching coefficients for the Young's lattice edge
// lambda -> mu with |mu| = i: first d-bar, then u-bar.
std::pair<BMWElement, BMWElement> bmw_lift_branching(const Partition& lambda, const Partition& mu);

// Specialisation q = z = 1 onto the Brauer algebra over Z[delta].
BrauerElement bmw_to_brauer(const BMWElement& x);
// Quotient by the ideal generated by the e_i.
HeckeElement bmw_to_hecke(const BMWElement& x);

struct SweepReport {
  int checked = 0;
  std::vector<std::string> failures;  // first few, with location
  int failed = 0;
  bool ok() const { return failed == 0; }
};

// Every defining relation of the BMW algebra among the generators of rank n.
SweepReport bmw_relation_sweep(int n);
// (xy)z = x(yz) on all triples of normal forms.
SweepReport bmw_associativity_sweep(int n);
// Specialisation onto Brauer commutes with products on random pairs.
SweepReport bmw_specialisation_sweep(int n, int pairs, unsigned seed);

}  // namespace ctow
