#pragma once

// Exact coefficient rings: Laurent polynomials over Z in the fixed symbols
// (q, z, delta) and their field of fractions.

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "json.hpp"

namespace ctow {

// Symbol order is global and fixed so that term maps are canonical.
enum Sym : int { SymQ = 0, SymZ = 1, SymDelta = 2 };
constexpr int kNumSyms = 3;
using Exp = std::array<int, kNumSyms>;

const char* sym_name(int s);

struct StructuralError : std::logic_error {
  using std::logic_error::logic_error;
};
struct DivisionError : std::domain_error {
  using std::domain_error::domain_error;
};

class LaurentPoly {
 public:
  using Term = std::pair<Exp, mpz_class>;

  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT: integers embed implicitly
  LaurentPoly(const mpz_class& c);  // NOLINT

  static LaurentPoly monomial(const mpz_class& c, const Exp& e);
  static LaurentPoly var(Sym s, int power = 1);
  // Builds from arbitrary (possibly repeated, possibly zero) terms.
  static LaurentPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_unit() const;  // +-monomial
  bool involves(Sym s) const;
  bool is_polynomial() const;  // no negative exponents

  // Lex-largest term; the polynomial must be nonzero.
  const Term& leading() const { return terms_.back(); }
  Exp min_exp() const;
  Exp max_exp() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }
  friend bool operator<(const LaurentPoly& a, const LaurentPoly& b);

  LaurentPoly shifted(const Exp& e) const;  // multiply by a monomial
  LaurentPoly scaled(const mpz_class& c) const;
  // Power; negative powers only for +-monomials.
  LaurentPoly pow(int k) const;
  // Coefficient of the monomial e, zero if absent.
  mpz_class coeff(const Exp& e) const;
  mpz_class content() const;  // gcd of integer coefficients, positive

  // Value at an integer point; every symbol with a negative exponent must
  // be assigned a unit.
  mpz_class eval_int(const std::array<long, kNumSyms>& at) const;
  // Value modulo a prime p at a point; nullopt-like failure throws.
  std::uint64_t eval_mod(std::uint64_t p, const std::array<std::uint64_t, kNumSyms>& at) const;

  std::string str() const;
  nlohmann::json to_json() const;
  static LaurentPoly from_json(const nlohmann::json& j);

 private:
  void normalize();
  std::vector<Term> terms_;  // sorted ascending by exponent, no zero coefficients
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

// Polynomial gcd over Z for polynomials with nonnegative exponents. The
// result has positive leading coefficient.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);
// Exact quotient a/b; throws DivisionError if b does not divide a.
LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);
bool divides(const LaurentPoly& b, const LaurentPoly& a, LaurentPoly* quotient = nullptr);

class RationalFunction {
 public:
  RationalFunction() : num_(0), den_(1) {}
  RationalFunction(long c) : num_(c), den_(1) {}  // NOLINT
  RationalFunction(const LaurentPoly& p) : num_(p), den_(1) {}  // NOLINT
  RationalFunction(const LaurentPoly& n, const LaurentPoly& d);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_laurent() const { return den_ == LaurentPoly(1); }
  bool is_one() const { return is_laurent() && num_ == LaurentPoly(1); }

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  // Cross-multiplied so that equality never depends on gcd canonicity.
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return a.num_ == b.num_;
    return a.num_ * b.den_ == b.num_ * a.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

  RationalFunction inverse() const;
  RationalFunction pow(int k) const;
  // Throws DivisionError when the denominator vanishes at the point.
  std::uint64_t eval_mod(std::uint64_t p, const std::array<std::uint64_t, kNumSyms>& at) const;

  std::string str() const;
  nlohmann::json to_json() const;
  static RationalFunction from_json(const nlohmann::json& j);

 private:
  void reduce();
  LaurentPoly num_;
  LaurentPoly den_;
};

std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

// Substitution homomorphism; symbols missing from the map are kept.
RationalFunction specialize(const LaurentPoly& p, const std::map<int, RationalFunction>& assignment);
RationalFunction specialize(const RationalFunction& f, const std::map<int, RationalFunction>& assignment);

// delta = (z^-1 - z)/(q^-1 - q) + 1, the relation of the BMW ground ring.
const RationalFunction& delta_in_field();
RationalFunction delta_eliminate(const LaurentPoly& p);
RationalFunction delta_eliminate(const RationalFunction& f);

// Convenience constants.
inline LaurentPoly q_pow(int k) { return LaurentPoly::var(SymQ, k); }
inline LaurentPoly z_pow(int k) { return LaurentPoly::var(SymZ, k); }
inline LaurentPoly delta_pow(int k) { return LaurentPoly::var(SymDelta, k); }

// Modular helpers shared by rank certificates.
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);

}  // namespace ctow
