#include "ctow/linalg.hpp"

#include <random>
#include <stdexcept>

namespace ctow {

void axpy(LVec& y, const LaurentPoly& a, const LVec& x) {
  if (a.is_zero()) return;
  for (const auto& [k, c] : x) {
    auto it = y.find(k);
    if (it == y.end()) {
      y.emplace(k, a * c);
    } else {
      it->second += a * c;
      if (it->second.is_zero()) y.erase(it);
    }
  }
}

void axpy(FVec& y, const RationalFunction& a, const FVec& x) {
  if (a.is_zero()) return;
  for (const auto& [k, c] : x) {
    auto it = y.find(k);
    if (it == y.end()) {
      y.emplace(k, a * c);
    } else {
      it->second += a * c;
      if (it->second.is_zero()) y.erase(it);
    }
  }
}

FVec to_field(const LVec& v, const std::function<RationalFunction(const LaurentPoly&)>& phi) {
  FVec out;
  for (const auto& [k, c] : v) {
    RationalFunction f = phi(c);
    if (!f.is_zero()) out.emplace(k, std::move(f));
  }
  return out;
}

FVec EchelonSpan::reduce(FVec v, FVec* coeffs) const {
  if (coeffs) coeffs->clear();
  for (const Row& r : rows_) {
    auto it = v.find(r.pivot);
    if (it == v.end()) continue;
    RationalFunction c = it->second;
    axpy(v, -c, r.vec);
    if (coeffs) axpy(*coeffs, c, r.combo);
  }
  return v;
}

bool EchelonSpan::add(const FVec& v) {
  int id = added_++;
  FVec combo;
  FVec rem = reduce(v, &combo);
  if (rem.empty()) return false;
  // rem = v - sum combo_j g_j, so rem has combination e_id - combo.
  FVec rc;
  for (auto& [k, c] : combo) rc.emplace(k, -c);
  rc.emplace(id, RationalFunction(1));
  // Prefer a unit pivot so that elimination over Laurent data stays in the
  // Laurent ring whenever possible.
  auto piv = rem.begin();
  for (auto it = rem.begin(); it != rem.end(); ++it) {
    if (it->second.is_laurent() && it->second.num().is_unit()) {
      piv = it;
      break;
    }
  }
  int pivot = piv->first;
  RationalFunction inv = piv->second.inverse();
  for (auto& [k, c] : rem) c *= inv;
  for (auto& [k, c] : rc) c *= inv;
  rows_.push_back({pivot, std::move(rem), std::move(rc)});
  return true;
}

std::array<std::uint64_t, kNumSyms> eval_point(unsigned seed) {
  std::mt19937_64 gen(0x9e3779b97f4a7c15ULL ^ seed);
  std::array<std::uint64_t, kNumSyms> at{};
  for (auto& x : at) x = 2 + gen() % (kPrime - 3);
  return at;
}

namespace {

int eliminate(ModMatrix& m, std::uint64_t p, std::uint64_t* det) {
  int rows = static_cast<int>(m.size());
  int cols = rows ? static_cast<int>(m[0].size()) : 0;
  int r = 0;
  std::uint64_t d = 1;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] % p) {
        piv = i;
        break;
      }
    if (piv < 0) {
      d = 0;
      continue;
    }
    if (piv != r) {
      std::swap(m[piv], m[r]);
      d = (p - d) % p;
    }
    d = mul_mod(d, m[r][c], p);
    std::uint64_t inv = inv_mod(m[r][c], p);
    for (int i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      std::uint64_t f = mul_mod(m[i][c], inv, p);
      for (int k = c; k < cols; ++k) {
        std::uint64_t t = mul_mod(f, m[r][k], p);
        m[i][k] = (m[i][k] + p - t) % p;
      }
    }
    ++r;
  }
  if (det) *det = (r == rows && rows == cols) ? d : 0;
  return r;
}

}  // namespace

int rank_mod(ModMatrix m, std::uint64_t p) { return eliminate(m, p, nullptr); }

std::uint64_t det_mod(ModMatrix m, std::uint64_t p) {
  std::uint64_t d = 0;
  eliminate(m, p, &d);
  return d;
}

ModMatrix eval_rows(const std::vector<FVec>& rows, int ncols, const std::array<std::uint64_t, kNumSyms>& at) {
  ModMatrix m(rows.size(), std::vector<std::uint64_t>(ncols, 0));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& [k, c] : rows[i]) m[i].at(k) = c.eval_mod(kPrime, at);
  return m;
}

ModMatrix eval_rows(const std::vector<LVec>& rows, int ncols, const std::array<std::uint64_t, kNumSyms>& at) {
  ModMatrix m(rows.size(), std::vector<std::uint64_t>(ncols, 0));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& [k, c] : rows[i]) m[i].at(k) = c.eval_mod(kPrime, at);
  return m;
}

RationalFunction det_exact(const std::vector<FVec>& rows, int n) {
  if (static_cast<int>(rows.size()) != n) throw StructuralError("determinant of a non-square matrix");
  // Clear denominators row by row, then Bareiss over the Laurent ring.
  std::vector<std::vector<LaurentPoly>> a(n, std::vector<LaurentPoly>(n));
  LaurentPoly scale(1);
  for (int i = 0; i < n; ++i) {
    LaurentPoly d(1);
    for (const auto& [k, c] : rows[i]) {
      LaurentPoly g = poly_gcd(d, c.den());
      d = d * exact_div(c.den(), g);
    }
    scale = scale * d;
    for (const auto& [k, c] : rows[i]) a[i].at(k) = c.num() * exact_div(d, c.den());
  }
  int sign = 1;
  LaurentPoly prev(1);
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (!a[i][k].is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) return RationalFunction(0);
    if (piv != k) {
      std::swap(a[piv], a[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) a[i][j] = exact_div(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
      a[i][k] = LaurentPoly(0);
    }
    prev = a[k][k];
  }
  LaurentPoly det = n ? a[n - 1][n - 1] : LaurentPoly(1);
  if (sign < 0) det = -det;
  return RationalFunction(det, scale);
}

}  // namespace ctow
