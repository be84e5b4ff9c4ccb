#pragma once

// Exact linear algebra over the fraction field and modular rank certificates.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "ctow/coeff.hpp"

namespace ctow {

// Sparse vectors keyed by native basis index.
using LVec = std::map<int, LaurentPoly>;
using FVec = std::map<int, RationalFunction>;

void axpy(LVec& y, const LaurentPoly& a, const LVec& x);  // y += a x
void axpy(FVec& y, const RationalFunction& a, const FVec& x);
// Drops zero entries according to the field image of each coefficient.
FVec to_field(const LVec& v, const std::function<RationalFunction(const LaurentPoly&)>& phi);

// Row echelon form built incrementally. Every stored row remembers how it
// was obtained from the vectors passed to add(), so reduce() can express a
// vector in terms of them.
class EchelonSpan {
 public:
  // Returns true when v is independent of the vectors added so far.
  bool add(const FVec& v);
  int rank() const { return static_cast<int>(rows_.size()); }
  int generators() const { return added_; }
  // Remainder of v modulo the span; when coeffs is given, it receives the
  // coefficients with v - remainder = sum coeffs[j] * (j-th added vector).
  FVec reduce(FVec v, FVec* coeffs = nullptr) const;
  bool contains(const FVec& v) const { return reduce(v).empty(); }

 private:
  struct Row {
    int pivot;
    FVec vec;    // normalized: entry at pivot is 1
    FVec combo;  // over indices of added vectors
  };
  std::vector<Row> rows_;
  int added_ = 0;
};

// Arithmetic modulo the Mersenne prime 2^61 - 1.
constexpr std::uint64_t kPrime = (std::uint64_t(1) << 61) - 1;

// A fixed evaluation point for (q, z, delta) modulo kPrime; different seeds
// give different points.
std::array<std::uint64_t, kNumSyms> eval_point(unsigned seed);

using ModMatrix = std::vector<std::vector<std::uint64_t>>;
int rank_mod(ModMatrix m, std::uint64_t p = kPrime);
std::uint64_t det_mod(ModMatrix m, std::uint64_t p = kPrime);

// Dense matrix over F with columns indexed 0..ncols-1 built from sparse rows.
ModMatrix eval_rows(const std::vector<FVec>& rows, int ncols, const std::array<std::uint64_t, kNumSyms>& at);
ModMatrix eval_rows(const std::vector<LVec>& rows, int ncols, const std::array<std::uint64_t, kNumSyms>& at);

// Exact determinant of a square matrix over F by fraction-free elimination
// on the numerators after clearing denominators row by row.
RationalFunction det_exact(const std::vector<FVec>& rows, int n);

}  // namespace ctow
